import math

from fastapi import APIRouter

from schemas.density_schema import (
    DensityGridRequest,
    DensityGridResponse,
    ShapeReportResponse,
    ShapeRequest,
    ShapeTableResponse,
)
from services.report_service import density_report, shape_report, table_report

router = APIRouter(prefix="/density", tags=["Density"])


@router.post("/shape", response_model=ShapeReportResponse)
def shape(data: ShapeRequest):
    return shape_report(data.poly)


@router.post("/grid", response_model=DensityGridResponse)
def grid(data: DensityGridRequest):
    payload = density_report(data.minpoly, data.poly, data.grid)

    # JSON has no infinity; asymptote rows carry fprime = null
    payload["rows"] = [
        {"x": x, "f": f, "fprime": None if math.isinf(fp) else fp, "asymptote": math.isinf(fp)}
        for x, f, fp in payload["rows"]
    ]
    return payload


@router.get("/table1", response_model=ShapeTableResponse)
def table1():
    return table_report()
