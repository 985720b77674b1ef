from fastapi import APIRouter

from schemas.bessel_schema import BesselRequest, BesselResponse
from services.report_service import bessel_report

router = APIRouter(prefix="/special", tags=["Special forms"])


@router.post("/bessel", response_model=BesselResponse)
def bessel(data: BesselRequest):
    payload = bessel_report(data.t, data.terms, data.grid, data.smoothing)
    payload["rows"] = [{"x": x, "value": v} for x, v in payload["rows"]]
    return payload
