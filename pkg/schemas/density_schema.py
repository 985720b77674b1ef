from pydantic import BaseModel, Field
from typing import List, Optional


# ======================
# SHAPE
# ======================
class ShapeRequest(BaseModel):
    poly: str = Field(..., description="P, e.g. 0,1,1,1 for x^3+x^2+x")


class ShapeReportResponse(BaseModel):
    A: List[float]
    B: List[float]
    S: List[float]
    partition: List[float]
    shape: str
    asymptotes_left: List[float]
    asymptotes_right: List[float]


# ======================
# GRID
# ======================
class DensityGridRequest(BaseModel):
    minpoly: str
    poly: str
    grid: int = Field(100, ge=2, le=100_000)


class DensityRow(BaseModel):
    x: float
    f: float
    # None on an asymptote
    fprime: Optional[float] = None
    asymptote: bool = False


class DensityGridResponse(BaseModel):
    rows: List[DensityRow]
    shape: ShapeReportResponse
    M: int
    K: int
    a0_normalized: bool


# ======================
# TABLE
# ======================
class ShapeTableRowResponse(BaseModel):
    coeffs: str
    x1: str
    x2: str
    q1: str
    q2: str
    A: str
    B: str
    S: str
    shape: str


class ShapeTableResponse(BaseModel):
    rows: List[ShapeTableRowResponse]
    matches: bool
    problems: List[str]
