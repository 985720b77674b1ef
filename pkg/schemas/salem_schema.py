from pydantic import BaseModel, Field
from typing import List, Optional

from core.config import DEFAULT_PRECISION_BITS


# ======================
# VERIFY
# ======================
class SalemVerifyRequest(BaseModel):
    minpoly: str = Field(..., description="monomial form or ascending coefficients")
    bits: int = Field(DEFAULT_PRECISION_BITS, ge=32, le=1 << 16)


class SalemResponse(BaseModel):
    salem: bool
    minpoly: str
    degree: int
    theta: Optional[str] = None
    omegas: List[str] = []
    bits: Optional[int] = None
    reason: Optional[str] = None


# ======================
# POWER
# ======================
class SalemPowerRequest(BaseModel):
    minpoly: str
    m: int = Field(..., ge=1, le=12)


class SalemPowerResponse(BaseModel):
    minpoly: str
    m: int
    power_minpoly: str
    salem: bool
    theta_power: str
