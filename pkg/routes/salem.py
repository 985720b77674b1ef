from fastapi import APIRouter

from schemas.salem_schema import (
    SalemPowerRequest,
    SalemPowerResponse,
    SalemResponse,
    SalemVerifyRequest,
)
from services.report_service import power_report, verify_report

router = APIRouter(prefix="/salem", tags=["Salem"])


@router.post("/verify", response_model=SalemResponse)
def verify(data: SalemVerifyRequest):
    return verify_report(data.minpoly, data.bits)


@router.post("/power", response_model=SalemPowerResponse)
def power(data: SalemPowerRequest):
    return power_report(data.minpoly, data.m)
