import math
from typing import Optional

import numpy as np
from mpmath import mp

from core.config import (
    CONJUGATE_THRESHOLD,
    EXACT_GUARD_BITS,
    OMEGA_EXTRA_BITS,
    PRECISION_CAP_BITS,
    SEGMENT_SIZE,
    UNDERFLOW_BITS,
)
from core.exceptions import DegreeMismatch, DomainError, PrecisionCapExceeded
from core.logger import get_logger
from models.density import DensityModel
from models.polynomial import IntPolynomial
from models.salem import SalemNumber
from models.simulation import (
    ComparisonRecord,
    HistogramReport,
    Method,
    PrecisionSegment,
    SequenceRun,
)
from services.density_service import asymptotes, f_many
from services.salem_service import refine_theta

logger = get_logger("simulation")

# limb width for the fixed-point angle reduction; k * limb stays below 2^63
_LIMB_BITS = 28
_MAX_INDEX_BITS = 63 - _LIMB_BITS


def _check_inputs(p: IntPolynomial, N: int):
    if N < 1:
        raise DomainError(f"N must be at least 1, got {N}")
    if p.degree < 1:
        raise DomainError("P must be nonconstant")


def _wrap(values: np.ndarray) -> np.ndarray:
    values = values - np.floor(values)
    return np.where(values >= 1.0, 0.0, values)


def resolve_method(method: Method, N: int) -> Method:
    method = Method(method)
    if method is Method.AUTO:
        return Method.CONJUGATE if N > CONJUGATE_THRESHOLD else Method.EXACT
    return method


# ---------------- EXACT PATH ----------------

def exact_bits(s: SalemNumber, p: IntPolynomial, n: int, N: int) -> int:
    """
    Bits for {P(θⁿ)}: the integer part of θ^(nm), the guard bits and
    room for the rounding of N steps of Horner on Σ|a_j|.
    """
    m = p.degree
    log2_theta = float(mp.log(s.theta, 2))
    spread = N * m * sum(abs(a) for a in p.coeffs)
    return math.ceil(n * m * log2_theta) + EXACT_GUARD_BITS + math.ceil(math.log2(spread)) + 1


def sequence_exact(s: SalemNumber, p: IntPolynomial, N: int) -> SequenceRun:
    _check_inputs(p, N)

    top_bits = exact_bits(s, p, N, N)
    if top_bits > PRECISION_CAP_BITS:
        raise PrecisionCapExceeded(
            f"n={N} needs {top_bits} bits, above the cap of {PRECISION_CAP_BITS}"
        )
    s_hi = refine_theta(s, top_bits)

    values = np.empty(N)
    log = []
    for start in range(1, N + 1, SEGMENT_SIZE):
        end = min(start + SEGMENT_SIZE - 1, N)
        bits = exact_bits(s, p, end, N)
        log.append(PrecisionSegment(n_start=start, n_end=end, bits=bits))

        with mp.workprec(bits):
            theta = +s_hi.theta
            power = mp.power(theta, start)
            for n in range(start, end + 1):
                value = p(power)
                values[n - 1] = float(value - mp.floor(value))
                power *= theta

    logger.info("exact path: N=%d, %d segments, up to %d bits", N, len(log), top_bits)
    return SequenceRun(
        salem=s,
        p=p,
        n_max=N,
        method=Method.EXACT,
        values=_wrap(values),
        precision_log=tuple(log),
    )


# ---------------- CONJUGATE PATH ----------------

def _fixed_point(omega, bits: int) -> list[int]:
    """floor(ω 2^bits) split into little-endian limbs."""
    with mp.workprec(bits + 16):
        W = int(mp.floor(omega * mp.mpf(2) ** bits))
    mask = (1 << _LIMB_BITS) - 1
    limbs = []
    while W:
        limbs.append(W & mask)
        W >>= _LIMB_BITS
    return limbs


def _frac_multiple(k: np.ndarray, limbs: list[int], bits: int) -> np.ndarray:
    """frac(k W / 2^bits) for integer k < 2^35, accurate to a few ulps."""
    total = np.zeros(k.shape)
    for r, w in enumerate(limbs):
        shift = bits - _LIMB_BITS * r
        prod = k * np.uint64(w)
        if shift < 63:
            prod = prod & np.uint64((1 << shift) - 1)
        total += prod.astype(np.float64) / 2.0 ** shift
    return total - np.floor(total)


def sequence_conjugate(s: SalemNumber, p: IntPolynomial, N: int) -> SequenceRun:
    """
    {P(θⁿ)} = {-Σ_j a_j (θ^(-nj) + 2 Σ_l cos 2π nj ω_l)}, from the integer
    trace of θ^(nj). The angles n j ω_l mod 1 are reduced in fixed point.
    """
    _check_inputs(p, N)
    m = p.degree
    if N * m >= 2 ** _MAX_INDEX_BITS:
        raise DomainError(f"N * m = {N * m} is too large for the angle reduction")

    bits = 64 + math.ceil(math.log2(N * m + 1)) + OMEGA_EXTRA_BITS
    s_hi = refine_theta(s, bits)
    omega_limbs = [_fixed_point(w, bits) for w in s_hi.omegas]

    n = np.arange(1, N + 1, dtype=np.uint64)
    n_float = n.astype(np.float64)
    ln_theta = float(mp.log(s_hi.theta))
    cutoff = UNDERFLOW_BITS * math.log(2.0)

    total = np.zeros(N)
    for j in range(1, m + 1):
        a = p[j]
        if a == 0:
            continue
        k = n * np.uint64(j)

        exponent = n_float * j * ln_theta
        inverse = np.where(exponent > cutoff, 0.0, np.exp(-np.minimum(exponent, cutoff)))

        trig = np.zeros(N)
        for limbs in omega_limbs:
            trig += np.cos(2.0 * math.pi * _frac_multiple(k, limbs, bits))

        total -= a * (inverse + 2.0 * trig)

    logger.info("conjugate path: N=%d, ω at %d bits", N, bits)
    return SequenceRun(
        salem=s,
        p=p,
        n_max=N,
        method=Method.CONJUGATE,
        values=_wrap(total),
        precision_log=(PrecisionSegment(n_start=1, n_end=N, bits=bits),),
    )


def generate_sequence(s: SalemNumber, p: IntPolynomial, N: int, method: Method = Method.AUTO) -> SequenceRun:
    if resolve_method(method, N) is Method.EXACT:
        return sequence_exact(s, p, N)
    return sequence_conjugate(s, p, N)


def method_agreement(a: SequenceRun, b: SequenceRun) -> float:
    """Largest distance on R/Z between two runs of the same sequence."""
    n = min(a.n_max, b.n_max)
    diff = np.abs(a.values[:n] - b.values[:n])
    return float(np.minimum(diff, 1.0 - diff).max())


# ---------------- HISTOGRAM ----------------

def bin_counts(values: np.ndarray, p_bins: int) -> np.ndarray:
    idx = np.clip(np.floor(values * p_bins).astype(np.int64), 0, p_bins - 1)
    return np.bincount(idx, minlength=p_bins)


def ks_distance(values: np.ndarray, model: DensityModel, p_bins: int) -> float:
    """sup over bin edges of |#{v < x}/N - f(x)|."""
    counts = bin_counts(values, p_bins)
    below = np.concatenate(([0], np.cumsum(counts))) / len(values)
    edges = np.linspace(0.0, 1.0, p_bins + 1)
    return float(np.abs(below - f_many(model, edges)).max())


def asymptote_bins(model: DensityModel, p_bins: int) -> tuple[int, ...]:
    bins = set()
    for v in asymptotes(model).all:
        pos = v * p_bins
        i = min(int(math.floor(pos)), p_bins - 1)
        bins.add(i)
        # on an interior edge the singularity touches both neighbours
        if 0 < pos < p_bins and pos == math.floor(pos):
            bins.add(i - 1)
    return tuple(sorted(bins))


def histogram(run: SequenceRun, p_bins: int, model: Optional[DensityModel] = None) -> HistogramReport:
    if p_bins < 2:
        raise DomainError(f"need at least 2 bins, got {p_bins}")

    counts = bin_counts(run.values, p_bins)
    normalized = counts * p_bins / run.n_max

    ks, excluded = None, ()
    if model is not None:
        ks = ks_distance(run.values, model, p_bins)
        excluded = asymptote_bins(model, p_bins)

    return HistogramReport(
        p_bins=p_bins,
        counts=counts,
        normalized=normalized,
        ks_distance=ks,
        excluded_bins=excluded,
    )


def analytic_bin_average(model: DensityModel, p_bins: int) -> np.ndarray:
    """p (f(right) - f(left)) per bin."""
    f = f_many(model, np.linspace(0.0, 1.0, p_bins + 1))
    return p_bins * np.diff(f)


# ---------------- COMPARISON ----------------

def compare(run: SequenceRun, model: DensityModel, p_bins: int) -> ComparisonRecord:
    if run.salem.degree != 4:
        raise DegreeMismatch(
            f"the analytic density needs a degree-4 Salem number, got degree {run.salem.degree}"
        )
    if run.p.with_constant(0) != model.q.source.with_constant(0):
        raise DomainError(f"run is for {run.p} but the model is for {model.q.source}")

    hist = histogram(run, p_bins, model)
    expected = analytic_bin_average(model, p_bins)
    errors = np.abs(hist.normalized - expected)

    keep = np.ones(p_bins, dtype=bool)
    keep[list(hist.excluded_bins)] = False
    max_error = float(errors[keep].max()) if keep.any() else 0.0

    prefix = run.values[: max(run.n_max // 100, 1)]
    ks_prefix = ks_distance(prefix, model, p_bins)

    return ComparisonRecord(
        ks_distance=hist.ks_distance,
        ks_prefix=ks_prefix,
        converging=hist.ks_distance < ks_prefix,
        analytic_bin_avg=expected,
        bin_errors=errors,
        max_bin_error=max_error,
        excluded_bins=hist.excluded_bins,
    )


# ---------------- SAMPLING ----------------

def sample_from_model(model: DensityModel, N: int, seed: int = 0, resolution: int = 1 << 14) -> np.ndarray:
    """Inverse-transform draws from f, interpolated on a tabulated grid."""
    if N < 1:
        raise DomainError(f"N must be at least 1, got {N}")

    grid = np.linspace(0.0, 1.0, resolution + 1)
    f = np.maximum.accumulate(f_many(model, grid))
    u = np.random.default_rng(seed).random(N)
    return _wrap(np.interp(u, f, grid))
