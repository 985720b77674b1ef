from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from dotenv import load_dotenv
load_dotenv()


from core.exceptions import SalemToolkitError
from core.logger import get_logger

from routes import salem
from routes import density
from routes import simulation
from routes import special_forms


logger = get_logger("api")

app = FastAPI(title="Salem Distribution Service")


# ---------------------------
# CORS CONFIGURATION
# ---------------------------
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# ---------------------------
# ERRORS
# ---------------------------
@app.exception_handler(SalemToolkitError)
async def toolkit_error_handler(request: Request, exc: SalemToolkitError):
    logger.info("%s %s -> %s: %s", request.method, request.url.path, type(exc).__name__, exc.detail)
    return JSONResponse(
        status_code=exc.status_code,
        content={"error": type(exc).__name__, "detail": exc.detail},
    )


# ---------------------------
# ROUTES
# ---------------------------
app.include_router(salem.router)
app.include_router(density.router)
app.include_router(simulation.router)
app.include_router(special_forms.router)
