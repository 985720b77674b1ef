import math

import numpy as np
from mpmath import mp
from scipy import integrate

from core.config import DEFAULT_PRECISION_BITS, SET_EPS, TOL_ASYMPTOTE
from core.exceptions import AtAsymptote, DomainError
from core.logger import get_logger
from models.density import Asymptotes, DensityModel
from models.polynomial import IntPolynomial
from services.branch_service import branches, critical_partition, invert_many, s_many
from services.cheb_service import build_q

logger = get_logger("density")


def make_model(
    p: IntPolynomial,
    bits: int = DEFAULT_PRECISION_BITS,
    extra_m: int = 0,
) -> DensityModel:
    """
    Build Q, its branches and the smallest M with
    M >= max(|alpha_k|, |beta_k|). `extra_m` enlarges M; the extra
    terms contribute nothing since S_k is clamped there.
    """
    q = build_q(p)
    bs = tuple(branches(q, bits))
    partition = critical_partition(q, bits)

    with mp.workprec(bits):
        bound = max(max(abs(b.alpha), abs(b.beta)) for b in bs)
        M = int(mp.ceil(bound)) + extra_m
        stationary_values = tuple(q(x) for x in partition.stationary)

    offsets = np.arange(-M, M + 1, dtype=np.float64)
    g_int = np.vstack([np.arccos(s_many(b, q, offsets)) for b in bs])

    logger.debug("model for %s: K=%d M=%d", p, len(bs), M)
    return DensityModel(
        q=q,
        branches=bs,
        M=M,
        stationary_points=partition.stationary,
        stationary_values=stationary_values,
        g_int=g_int,
    )


# ---------------- g AND f ----------------

def g_value(model: DensityModel, x: float) -> float:
    """π⁻¹ Σ_k arccos(S_k(x)); total and nondecreasing."""
    xs = np.array([float(x)])
    total = sum(np.arccos(s_many(b, model.q, xs))[0] for b in model.branches)
    return float(total / math.pi)


def f_many(model: DensityModel, xs) -> np.ndarray:
    """Vectorized f on points already known to lie in [0, 1]."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = xs[:, None] + model.offsets[None, :]

    total = np.zeros(xs.shape)
    for k, b in enumerate(model.branches):
        acos = np.arccos(s_many(b, model.q, ys.ravel())).reshape(ys.shape)
        total += (acos - model.g_int[k][None, :]).sum(axis=1)
    return np.clip(total / math.pi, 0.0, 1.0)


def repartition_f(model: DensityModel, x: float) -> float:
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"f is defined on [0, 1], got x={x}")
    return float(f_many(model, np.array([x]))[0])


# ---------------- DENSITY ----------------

def fprime_many(model: DensityModel, xs) -> np.ndarray:
    """
    Raw f' without asymptote checks. Terms with x+i outside the open
    value interval of a branch are zero; values at a singularity come
    out as +inf.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = xs[:, None] + model.offsets[None, :]
    dpoly = model.q.derivative.descending_floats()

    total = np.zeros(xs.shape)
    with np.errstate(divide="ignore", invalid="ignore"):
        for b in model.branches:
            flat = ys.ravel()
            active = (flat > b.alpha_f) & (flat < b.beta_f)
            if not active.any():
                continue
            u = invert_many(b, model.q, np.clip(flat, b.alpha_f, b.beta_f))
            slope = np.abs(np.polyval(dpoly, u))
            root = np.sqrt(np.maximum(1.0 - u * u, 0.0))
            term = np.where(active, 1.0 / (root * slope), 0.0)
            total += term.reshape(ys.shape).sum(axis=1)
    return total / math.pi


def _nearest_asymptote(asym: Asymptotes, x: float):
    best = None
    for v in asym.all:
        if best is None or abs(x - v) < abs(x - best):
            best = v
    return best


def density_fprime(model: DensityModel, x: float) -> float:
    if not (0.0 < x < 1.0):
        raise DomainError(f"f' is evaluated on (0, 1), got x={x}")

    v = _nearest_asymptote(asymptotes(model), x)
    if v is not None and abs(x - v) < TOL_ASYMPTOTE:
        raise AtAsymptote(x, v)

    return float(fprime_many(model, np.array([x]))[0])


def density_grid(model: DensityModel, xs):
    """
    f and f' on a grid in [0, 1]. Points within the asymptote radius
    (and the ends 0 and 1) get f' = +inf instead of raising.
    """
    xs = np.asarray(xs, dtype=np.float64)
    if xs.size and (xs.min() < 0.0 or xs.max() > 1.0):
        raise DomainError("grid points must lie in [0, 1]")

    fs = f_many(model, xs)
    fps = fprime_many(model, xs)

    marks = np.array(asymptotes(model).all)
    if marks.size:
        near = np.abs(xs[:, None] - marks[None, :]).min(axis=1) < TOL_ASYMPTOTE
        fps = np.where(near, np.inf, fps)
    return fs, fps


# ---------------- ASYMPTOTES ----------------

def fractional(value, bits: int = DEFAULT_PRECISION_BITS) -> float:
    with mp.workprec(bits):
        v = mp.mpf(value)
        r = float(v - mp.floor(v))
    if r < SET_EPS or r > 1.0 - SET_EPS:
        return 0.0
    return r


def dedupe(values) -> tuple[float, ...]:
    out = []
    for v in sorted(values):
        if not out or v - out[-1] > SET_EPS:
            out.append(v)
    return tuple(out)


def asymptotes(model: DensityModel) -> Asymptotes:
    """
    Left asymptotes come from the branch maxima beta_k, right ones from
    the minima alpha_k; an integer beta lands on 1 and an integer alpha
    on 0. Q(±1) are integers, so 0 or 1 always shows up. Stationary
    values are singular from both sides.
    """
    left, right = set(), set()
    for b in model.branches:
        fb = fractional(b.beta)
        left.add(1.0 if fb == 0.0 else fb)
        right.add(fractional(b.alpha))

    for value in model.stationary_values:
        fv = fractional(value)
        left.add(1.0 if fv == 0.0 else fv)
        right.add(fv)

    return Asymptotes(left=dedupe(left), right=dedupe(right))


# ---------------- NORMALIZATION ----------------

def _segment_integral(model: DensityModel, a: float, b: float, tau: float) -> float:
    """
    ∫ f' over [a + tau, b - tau] after x = a + (b - a)(1 - cos φ)/2, which
    absorbs the inverse-square-root singularities at both ends.
    """
    half = 0.5 * (b - a)
    phi_lo = math.acos(1.0 - tau / half)
    phi_hi = math.acos(tau / half - 1.0)

    def integrand(phi: float) -> float:
        x = a + half * (1.0 - math.cos(phi))
        return float(fprime_many(model, np.array([x]))[0]) * half * math.sin(phi)

    value, _ = integrate.quad(integrand, phi_lo, phi_hi, limit=200, epsabs=1e-11, epsrel=1e-10)
    return value


def integrate_density(model: DensityModel) -> tuple[float, float]:
    """
    ∫₀¹ f' by adaptive quadrature between consecutive asymptotes, keeping
    2·tol away from each one. Returns (quadrature part, excluded mass); the
    excluded mass is measured with f differences.
    """
    cuts = dedupe(set(asymptotes(model).all) | {0.0, 1.0})
    tau = 2.0 * TOL_ASYMPTOTE

    quad_total, excluded = 0.0, 0.0
    for a, b in zip(cuts, cuts[1:]):
        if b - a <= 4.0 * tau:
            excluded += repartition_f(model, b) - repartition_f(model, a)
            continue
        quad_total += _segment_integral(model, a, b, tau)
        excluded += repartition_f(model, a + tau) - repartition_f(model, a)
        excluded += repartition_f(model, b) - repartition_f(model, b - tau)

    logger.debug("∫f' = %.12f + excluded %.3e", quad_total, excluded)
    return quad_total, excluded
