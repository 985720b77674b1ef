import os
from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}")


def _float_env(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be a number, got {raw!r}")


# ---------------------------
# PRECISION
# ---------------------------
DEFAULT_PRECISION_BITS = _int_env("SALEM_DEFAULT_PRECISION_BITS", 128)
PRECISION_CAP_BITS = _int_env("SALEM_PRECISION_CAP_BITS", 2 ** 22)

# guard bits on top of the integer part of P(θⁿ)
EXACT_GUARD_BITS = 64
# θ⁻ⁿʲ terms below 2^-80 are dropped
UNDERFLOW_BITS = 80
# extra bits for ω on the conjugate path
OMEGA_EXTRA_BITS = 60


# ---------------------------
# TOLERANCES
# ---------------------------
TOL_ASYMPTOTE = _float_env("SALEM_TOL_ASYMPTOTE", 1e-7)
SET_EPS = _float_env("SALEM_SET_EPS", 1e-9)


# ---------------------------
# RUN DEFAULTS
# ---------------------------
DEFAULT_BINS = _int_env("SALEM_DEFAULT_BINS", 50)
DEFAULT_N = _int_env("SALEM_DEFAULT_N", 10 ** 6)
BESSEL_TERMS = _int_env("SALEM_BESSEL_TERMS", 10 ** 4)
SEGMENT_SIZE = _int_env("SALEM_SEGMENT_SIZE", 1000)
CONJUGATE_THRESHOLD = _int_env("SALEM_CONJUGATE_THRESHOLD", 10 ** 4)

OUTPUT_DIR = os.getenv("SALEM_OUTPUT_DIR", "outputs")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()


if DEFAULT_PRECISION_BITS < 32:
    raise RuntimeError("SALEM_DEFAULT_PRECISION_BITS must be at least 32")

if PRECISION_CAP_BITS < DEFAULT_PRECISION_BITS:
    raise RuntimeError("SALEM_PRECISION_CAP_BITS is below the default precision")

if TOL_ASYMPTOTE <= 0 or SET_EPS <= 0:
    raise RuntimeError("Tolerances must be positive")

if SEGMENT_SIZE < 1:
    raise RuntimeError("SALEM_SEGMENT_SIZE must be positive")
