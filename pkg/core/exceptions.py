from enum import Enum


class SalemToolkitError(Exception):
    """
    Base error. Carries the HTTP status the API answers with
    and the exit code the CLI terminates with.
    """

    status_code = 400
    exit_code = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# ---------------- VALIDATION (exit 2) ----------------

class PolynomialParseError(SalemToolkitError):
    pass


class ZeroPolynomialError(SalemToolkitError):
    pass


class RejectionReason(str, Enum):
    NOT_MONIC = "NotMonic"
    ODD_OR_SMALL_DEGREE = "OddOrSmallDegree"
    REDUCIBLE = "Reducible"
    NOT_RECIPROCAL = "NotReciprocal"
    ROOT_PATTERN_MISMATCH = "RootPatternMismatch"


class SalemRejection(SalemToolkitError):
    status_code = 422

    def __init__(self, reason: RejectionReason, detail: str):
        super().__init__(f"{reason.value}: {detail}")
        self.reason = reason


class OutOfRange(SalemToolkitError):
    pass


class DomainError(SalemToolkitError):
    pass


class DegreeMismatch(SalemToolkitError):
    pass


class TableMismatch(SalemToolkitError):
    status_code = 500


# ---------------- NUMERIC (exit 3) ----------------

class AtAsymptote(SalemToolkitError):
    status_code = 422
    exit_code = 3

    def __init__(self, x: float, v: float):
        super().__init__(f"x={x!r} is within tolerance of the asymptote v={v!r}")
        self.x = x
        self.v = v


class PrecisionCapExceeded(SalemToolkitError):
    status_code = 422
    exit_code = 3
