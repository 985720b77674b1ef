from fastapi import APIRouter

from schemas.simulation_schema import SimulationRequest, SimulationResponse
from services.report_service import simulation_report

router = APIRouter(prefix="/simulation", tags=["Simulation"])


@router.post("/run", response_model=SimulationResponse)
def run(data: SimulationRequest):
    return simulation_report(
        data.minpoly,
        data.poly,
        data.n_max,
        data.bins,
        data.method,
        data.cross_check,
    )
