from pydantic import BaseModel, Field
from typing import List, Optional

from core.config import DEFAULT_BINS
from models.simulation import Method


# ======================
# REQUEST
# ======================
class SimulationRequest(BaseModel):
    minpoly: str
    poly: str
    n_max: int = Field(10_000, ge=1, le=10_000_000)
    bins: int = Field(DEFAULT_BINS, ge=2, le=10_000)
    method: Method = Method.AUTO
    cross_check: bool = False


# ======================
# RESPONSE
# ======================
class SimulationResponse(BaseModel):
    minpoly: str
    poly: str
    degree: int
    method: Method
    n_max: int
    bins: int
    precision_log: List[List[int]]
    counts: List[int]
    normalized: List[float]
    max_uniform_deviation: float

    # present for degree-4 Salem numbers only
    ks_distance: Optional[float] = None
    ks_prefix: Optional[float] = None
    converging: Optional[bool] = None
    analytic_bin_avg: Optional[List[float]] = None
    max_bin_error: Optional[float] = None
    excluded_bins: List[int] = []

    method_agreement: Optional[float] = None
