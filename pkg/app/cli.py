import functools
import sys

import click
from pydantic import ValidationError

from core.config import BESSEL_TERMS, DEFAULT_BINS, DEFAULT_N, DEFAULT_PRECISION_BITS
from core.exceptions import SalemToolkitError
from core.logger import get_logger
from models.simulation import Method
from schemas.run_config import Command, OutputFormat, RunConfig
from services.report_service import (
    bessel_report,
    density_report,
    histogram_rows,
    power_report,
    simulation_report,
    table_report,
    verify_report,
)
from utils.storage import store_artifact, to_csv, to_json

logger = get_logger("cli")

EXIT_OK = 0
EXIT_VALIDATION = 2


def handle_errors(func):
    """Toolkit errors become exit codes: 2 for validation, 3 for numeric failures."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ValidationError as e:
            click.echo(f"error: {e.errors()[0]['msg']}", err=True)
            sys.exit(EXIT_VALIDATION)
        except SalemToolkitError as e:
            click.echo(f"error: {type(e).__name__}: {e.detail}", err=True)
            sys.exit(e.exit_code)

    return wrapper


def _emit(content: str, output: str = None):
    if output:
        path = store_artifact(content, output)
        click.echo(f"wrote {path}", err=True)
    else:
        click.echo(content, nl=False)


def _sidecar(output: str) -> str:
    return f"{output}.json" if output else None


format_option = click.option(
    "--format", "fmt", type=click.Choice([f.value for f in OutputFormat]), default="json", show_default=True
)
output_option = click.option("--output", "-o", default=None, help="file name; bare names go to the output dir")


@click.group()
def salem():
    """Distribution of {P(θⁿ)} mod 1 for Salem numbers θ."""


# ---------------- VERIFY ----------------

@salem.command()
@click.option("--minpoly", required=True)
@click.option("--bits", default=DEFAULT_PRECISION_BITS, show_default=True, type=int)
@output_option
@handle_errors
def verify(minpoly, bits, output):
    config = RunConfig(command=Command.VERIFY, minpoly=minpoly, bits=bits, output=output)
    payload = verify_report(config.minpoly, config.bits)
    _emit(to_json(payload), output)
    if not payload["salem"]:
        sys.exit(EXIT_VALIDATION)


@salem.command()
@click.option("--minpoly", required=True)
@click.option("-m", "m", default=2, show_default=True, type=int)
@output_option
@handle_errors
def power(minpoly, m, output):
    """Minimal polynomial of θ^m."""
    RunConfig(command=Command.POWER, minpoly=minpoly, m=m, output=output)
    _emit(to_json(power_report(minpoly, m)), output)


# ---------------- DENSITY ----------------

@salem.command()
@click.option("--minpoly", required=True)
@click.option("--poly", required=True, help="ascending coefficients, e.g. 0,1,1,1")
@click.option("--grid", default=100, show_default=True, type=int)
@format_option
@output_option
@handle_errors
def density(minpoly, poly, grid, fmt, output):
    """f and f' on grid+1 points, with the shape report."""
    cfg = RunConfig(command=Command.DENSITY, minpoly=minpoly, poly=poly, grid=grid, format=fmt, output=output)
    payload = density_report(cfg.minpoly, cfg.poly, cfg.grid)

    if cfg.format is OutputFormat.JSON:
        _emit(to_json(payload), cfg.output)
        return

    _emit(to_csv(["x", "f", "fprime"], payload["rows"]), cfg.output)
    shape = to_json(payload["shape"])
    if cfg.output:
        _emit(shape, _sidecar(cfg.output))
    else:
        _emit(shape)


# ---------------- SIMULATE ----------------

@salem.command()
@click.option("--minpoly", required=True)
@click.option("--poly", required=True)
@click.option("-N", "--n-max", "n_max", default=DEFAULT_N, show_default=True, type=int)
@click.option("--bins", default=DEFAULT_BINS, show_default=True, type=int)
@click.option("--method", type=click.Choice([m.value for m in Method]), default="auto", show_default=True)
@click.option("--cross-check", is_flag=True, help="also run the other method and report the gap")
@format_option
@output_option
@handle_errors
def simulate(minpoly, poly, n_max, bins, method, cross_check, fmt, output):
    """Histogram of {P(θⁿ)}, n <= N, against the analytic density."""
    cfg = RunConfig(
        command=Command.SIMULATE,
        minpoly=minpoly,
        poly=poly,
        n_max=n_max,
        bins=bins,
        method=method,
        format=fmt,
        output=output,
    )
    payload = simulation_report(cfg.minpoly, cfg.poly, cfg.n_max, cfg.bins, cfg.method, cross_check)

    if cfg.format is OutputFormat.JSON:
        _emit(to_json(payload), cfg.output)
        return

    header = ["bin_left", "bin_right", "count", "normalized", "analytic_bin_avg"]
    _emit(to_csv(header, histogram_rows(payload)), cfg.output)

    summary = {k: v for k, v in payload.items() if k not in ("counts", "normalized", "analytic_bin_avg")}
    if cfg.output:
        _emit(to_json(summary), _sidecar(cfg.output))
    else:
        _emit(to_json(summary))


# ---------------- TABLE ----------------

@salem.command()
@format_option
@output_option
@handle_errors
def table1(fmt, output):
    """Shape classification of the nine cubic rows."""
    cfg = RunConfig(command=Command.TABLE1, format=fmt, output=output)
    payload = table_report()

    if cfg.format is OutputFormat.JSON:
        _emit(to_json(payload), cfg.output)
    else:
        header = ["a3,a2,a1", "x1", "x2", "Q(x1)", "Q(x2)", "A", "B", "S", "shape"]
        rows = [list(row.values()) for row in payload["rows"]]
        _emit(to_csv(header, rows), cfg.output)

    if not payload["matches"]:
        for problem in payload["problems"]:
            click.echo(f"mismatch {problem}", err=True)
        sys.exit(EXIT_VALIDATION)


# ---------------- BESSEL ----------------

@salem.command()
@click.option("-t", "t", required=True, type=int, help="half the degree of the Salem number")
@click.option("--terms", default=BESSEL_TERMS, show_default=True, type=int)
@click.option("--grid", default=100, show_default=True, type=int)
@click.option("--smoothing", type=click.Choice(["none", "cesaro"]), default="cesaro", show_default=True)
@format_option
@output_option
@handle_errors
def bessel(t, terms, grid, smoothing, fmt, output):
    """The J0 cosine series for f' on the open grid (0, 1)."""
    cfg = RunConfig(command=Command.BESSEL, t=t, terms=terms, grid=grid, format=fmt, output=output)
    payload = bessel_report(cfg.t, cfg.terms, cfg.grid, smoothing)

    if cfg.format is OutputFormat.JSON:
        _emit(to_json(payload), cfg.output)
        return

    comments = [f"t={payload['t']} terms={payload['terms']} smoothing={payload['smoothing']}"]
    _emit(to_csv(["x", "value"], payload["rows"], comments), cfg.output)


if __name__ == "__main__":
    salem()
