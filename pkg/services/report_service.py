"""
Payload builders shared by the HTTP routes and the CLI. Every float is
kept as a float here; rounding happens when an artifact is written.
"""
import math

import numpy as np
from mpmath import mp

from core.config import DEFAULT_PRECISION_BITS
from core.exceptions import DegreeMismatch, SalemRejection
from models.bessel import BesselSeriesParams
from models.density import ShapeReport
from models.simulation import Method
from services.closed_form_service import linear_fprime
from services.density_service import density_grid, make_model
from services.poly_service import parse_poly
from services.salem_service import salem_power_minpoly, verify_salem
from services.shape_service import shape_classify
from services.simulation_service import (
    compare,
    generate_sequence,
    histogram,
    method_agreement,
    resolve_method,
    sequence_conjugate,
    sequence_exact,
)
from services.special_forms_service import bessel_density
from services.table_service import format_row, reproduce_table, table_problems

# digits printed for θ and ω
_THETA_DIGITS = 30


def _mp_str(value) -> str:
    return mp.nstr(value, _THETA_DIGITS, strip_zeros=False)


# ---------------- SALEM ----------------

def verify_report(minpoly_text: str, bits: int = DEFAULT_PRECISION_BITS) -> dict:
    p = parse_poly(minpoly_text)
    try:
        s = verify_salem(p, bits)
    except SalemRejection as e:
        return {"salem": False, "minpoly": str(p), "degree": p.degree, "reason": e.reason.value}

    return {
        "salem": True,
        "minpoly": str(p),
        "degree": s.degree,
        "theta": _mp_str(s.theta),
        "omegas": [_mp_str(w) for w in s.omegas],
        "bits": s.theta_precision_bits,
    }


def power_report(minpoly_text: str, m: int) -> dict:
    s = verify_salem(parse_poly(minpoly_text))
    q = salem_power_minpoly(s, m)
    s_m = verify_salem(q)
    return {
        "minpoly": str(s.minpoly),
        "m": m,
        "power_minpoly": str(q),
        "salem": True,
        "theta_power": _mp_str(s_m.theta),
    }


# ---------------- DENSITY ----------------

def shape_payload(report: ShapeReport) -> dict:
    return {
        "A": list(report.A),
        "B": list(report.B),
        "S": list(report.S),
        "partition": list(report.partition),
        "shape": report.shape,
        "asymptotes_left": list(report.asymptotes_left),
        "asymptotes_right": list(report.asymptotes_right),
    }


def shape_report(poly_text: str) -> dict:
    return shape_payload(shape_classify(make_model(parse_poly(poly_text))))


def require_quartic(minpoly_text: str):
    s = verify_salem(parse_poly(minpoly_text))
    if s.degree != 4:
        raise DegreeMismatch(
            f"the analytic density is for degree-4 Salem numbers, got degree {s.degree}; "
            "use the simulate command for an empirical histogram"
        )
    return s


def density_report(minpoly_text: str, poly_text: str, grid: int) -> dict:
    require_quartic(minpoly_text)
    model = make_model(parse_poly(poly_text))

    xs = np.linspace(0.0, 1.0, grid + 1)
    fs, fps = density_grid(model, xs)
    rows = [(float(x), float(f), float(fp)) for x, f, fp in zip(xs, fs, fps)]
    return {
        "rows": rows,
        "shape": shape_payload(shape_classify(model)),
        "M": model.M,
        "K": model.K,
        "a0_normalized": model.q.a0_normalized,
    }


def table_report() -> dict:
    rows = reproduce_table()
    problems = table_problems(rows)
    return {
        "rows": [format_row(r) for r in rows],
        "matches": not problems,
        "problems": problems,
    }


# ---------------- SIMULATION ----------------

def simulation_report(
    minpoly_text: str,
    poly_text: str,
    n_max: int,
    bins: int,
    method: Method = Method.AUTO,
    cross_check: bool = False,
) -> dict:
    s = verify_salem(parse_poly(minpoly_text))
    p = parse_poly(poly_text)
    used = resolve_method(method, n_max)
    run = generate_sequence(s, p, n_max, used)

    model = make_model(p) if s.degree == 4 else None
    hist = histogram(run, bins, model)

    payload = {
        "minpoly": str(s.minpoly),
        "poly": str(p),
        "degree": s.degree,
        "method": used.value,
        "n_max": n_max,
        "bins": bins,
        "precision_log": [[seg.n_start, seg.n_end, seg.bits] for seg in run.precision_log],
        "counts": hist.counts.tolist(),
        "normalized": hist.normalized.tolist(),
        "max_uniform_deviation": hist.max_uniform_deviation,
    }

    if model is not None:
        record = compare(run, model, bins)
        payload.update(
            {
                "ks_distance": record.ks_distance,
                "ks_prefix": record.ks_prefix,
                "converging": record.converging,
                "analytic_bin_avg": record.analytic_bin_avg.tolist(),
                "max_bin_error": record.max_bin_error,
                "excluded_bins": list(record.excluded_bins),
            }
        )

    if cross_check:
        other = sequence_conjugate(s, p, n_max) if used is Method.EXACT else sequence_exact(s, p, n_max)
        payload["method_agreement"] = method_agreement(run, other)

    return payload


def histogram_rows(payload: dict) -> list[tuple]:
    bins = payload["bins"]
    avg = payload.get("analytic_bin_avg")
    rows = []
    for i in range(bins):
        rows.append(
            (
                i / bins,
                (i + 1) / bins,
                payload["counts"][i],
                payload["normalized"][i],
                avg[i] if avg is not None else None,
            )
        )
    return rows


# ---------------- BESSEL ----------------

def bessel_report(t: int, terms: int, grid: int, smoothing: str = "cesaro") -> dict:
    params = BesselSeriesParams(t=t, K_terms=terms, smoothing=smoothing)
    # the ends are singular for small t; the grid is taken on the open interval
    xs = np.arange(1, grid) / grid
    values = bessel_density(params, xs)

    payload = {
        "t": params.t,
        "terms": params.K_terms,
        "smoothing": params.smoothing.value,
        "rows": [(float(x), float(v)) for x, v in zip(xs, values)],
    }
    if params.t == 2:
        reference = linear_fprime(1, xs)
        payload["max_gap_linear_density"] = float(
            max((abs(a - b) for x, a, b in zip(xs, values, reference) if 0.1 <= x <= 0.9), default=math.nan)
        )
    return payload
