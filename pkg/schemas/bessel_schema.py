from pydantic import BaseModel, Field
from typing import List, Optional

from core.config import BESSEL_TERMS
from models.bessel import Smoothing


class BesselRequest(BaseModel):
    t: int = Field(..., ge=2)
    terms: int = Field(BESSEL_TERMS, ge=1, le=100_000)
    grid: int = Field(100, ge=2, le=10_000)
    smoothing: Smoothing = Smoothing.CESARO


class BesselRow(BaseModel):
    x: float
    value: float


class BesselResponse(BaseModel):
    t: int
    terms: int
    smoothing: Smoothing
    rows: List[BesselRow]
    max_gap_linear_density: Optional[float] = None
