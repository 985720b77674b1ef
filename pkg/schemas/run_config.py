from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from core.config import BESSEL_TERMS, DEFAULT_BINS, DEFAULT_N, DEFAULT_PRECISION_BITS
from models.simulation import Method


class Command(str, Enum):
    VERIFY = "verify"
    POWER = "power"
    DENSITY = "density"
    SIMULATE = "simulate"
    TABLE1 = "table1"
    BESSEL = "bessel"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


# ======================
# CLI RUN
# ======================
class RunConfig(BaseModel):
    command: Command
    minpoly: Optional[str] = None
    bits: int = Field(DEFAULT_PRECISION_BITS, ge=32, le=1 << 16)
    poly: Optional[str] = None
    grid: int = Field(100, ge=2)
    bins: int = Field(DEFAULT_BINS, ge=2)
    n_max: int = Field(DEFAULT_N, ge=1)
    method: Method = Method.AUTO
    terms: int = Field(BESSEL_TERMS, ge=1)
    t: int = Field(2, ge=2)
    m: int = Field(2, ge=1)
    output: Optional[str] = None
    format: OutputFormat = OutputFormat.JSON

    @model_validator(mode="after")
    def check_inputs(self):
        needs_minpoly = {Command.VERIFY, Command.POWER, Command.DENSITY, Command.SIMULATE}
        needs_poly = {Command.DENSITY, Command.SIMULATE}

        if self.command in needs_minpoly and not self.minpoly:
            raise ValueError(f"{self.command.value} needs --minpoly")
        if self.command in needs_poly and not self.poly:
            raise ValueError(f"{self.command.value} needs --poly")
        if self.command in {Command.VERIFY, Command.POWER} and self.format is OutputFormat.CSV:
            raise ValueError(f"{self.command.value} only writes JSON")
        return self
