import numpy as np
import pytest

import services.simulation_service as simulation_service
from core.exceptions import DegreeMismatch, DomainError, PrecisionCapExceeded
from models.simulation import Method
from services.density_service import make_model
from services.simulation_service import (
    analytic_bin_average,
    asymptote_bins,
    bin_counts,
    compare,
    exact_bits,
    generate_sequence,
    histogram,
    ks_distance,
    method_agreement,
    resolve_method,
    sample_from_model,
    sequence_conjugate,
    sequence_exact,
)

from conftest import QUARTIC_THETA, cubic, poly


def test_first_term_is_the_fractional_part_of_theta(quartic):
    run = sequence_exact(quartic, poly(0, 1), 1)
    assert run.values[0] == pytest.approx(QUARTIC_THETA - 1, abs=1e-15)


def test_constant_term_shifts_nothing(quartic):
    a = sequence_exact(quartic, poly(0, 1), 50)
    b = sequence_exact(quartic, poly(7, 1), 50)
    assert method_agreement(a, b) < 1e-15


def test_precision_grows_with_n(quartic):
    p = poly(0, 1, 1, 1)
    assert exact_bits(quartic, p, 10, 100) < exact_bits(quartic, p, 100, 100)


def test_precision_log_covers_the_run(quartic, monkeypatch):
    monkeypatch.setattr(simulation_service, "SEGMENT_SIZE", 40)
    run = sequence_exact(quartic, poly(0, 1), 100)
    log = run.precision_log
    assert [(s.n_start, s.n_end) for s in log] == [(1, 40), (41, 80), (81, 100)]
    assert [s.bits for s in log] == sorted(s.bits for s in log)


def test_precision_cap(quartic, monkeypatch):
    monkeypatch.setattr(simulation_service, "PRECISION_CAP_BITS", 100)
    with pytest.raises(PrecisionCapExceeded):
        sequence_exact(quartic, poly(0, 1), 200)


@pytest.mark.parametrize("coeffs", [(0, 1), (0, 1, 1, 1), (0, -2, 0, 3)])
def test_methods_agree_on_the_quartic(quartic, coeffs):
    p = poly(*coeffs)
    exact = sequence_exact(quartic, p, 1500)
    conj = sequence_conjugate(quartic, p, 1500)
    assert method_agreement(exact, conj) < 1e-9


def test_methods_agree_on_the_sextic(sextic):
    p = poly(0, 1, 1)
    assert method_agreement(sequence_exact(sextic, p, 800), sequence_conjugate(sextic, p, 800)) < 1e-9


def test_values_lie_in_the_unit_interval(quartic):
    run = sequence_conjugate(quartic, poly(0, 1, 1, 1), 5000)
    assert run.values.min() >= 0.0 and run.values.max() < 1.0
    assert run.method is Method.CONJUGATE
    assert len(run.precision_log) == 1


def test_auto_method(quartic, monkeypatch):
    monkeypatch.setattr(simulation_service, "CONJUGATE_THRESHOLD", 100)
    assert resolve_method(Method.AUTO, 100) is Method.EXACT
    assert resolve_method("auto", 101) is Method.CONJUGATE
    assert resolve_method(Method.EXACT, 10 ** 6) is Method.EXACT
    assert generate_sequence(quartic, poly(0, 1), 200).method is Method.CONJUGATE


def test_bad_inputs(quartic):
    with pytest.raises(DomainError):
        sequence_exact(quartic, poly(0, 1), 0)
    with pytest.raises(DomainError):
        sequence_conjugate(quartic, poly(3), 10)
    with pytest.raises(DomainError):
        sequence_conjugate(quartic, poly(0, 1), 2 ** 35)


def test_bins_are_half_open():
    counts = bin_counts(np.array([0.0, 0.25, 0.5, 0.75, 0.9999]), 2)
    assert counts.tolist() == [2, 3]


def test_histogram(quartic):
    run = sequence_conjugate(quartic, poly(0, 1), 4000)
    hist = histogram(run, 20)
    assert hist.counts.sum() == 4000
    assert hist.normalized.mean() == pytest.approx(1.0)
    assert hist.ks_distance is None
    assert len(hist.edges) == 21
    with pytest.raises(DomainError):
        histogram(run, 1)


def test_asymptote_bins(linear_model):
    assert asymptote_bins(linear_model, 50) == (0, 49)
    assert asymptote_bins(make_model(poly(0, 1, 1)), 4) == (0, 1, 3)


def test_analytic_bin_average_is_normalized(cubic_model):
    avg = analytic_bin_average(cubic_model, 40)
    assert avg.mean() == pytest.approx(1.0, abs=1e-12)
    assert (avg >= 0).all()


def test_samples_follow_the_model(cubic_model):
    values = sample_from_model(cubic_model, 20000, seed=3)
    assert ks_distance(values, cubic_model, 100) < 0.03


def test_compare_linear(quartic, linear_model):
    run = sequence_conjugate(quartic, poly(0, 1), 20000)
    record = compare(run, linear_model, 50)
    assert record.ks_distance < 0.02
    assert record.converging
    assert record.excluded_bins == (0, 49)
    assert record.max_bin_error < 0.35


def test_compare_cubic(quartic, cubic_model):
    run = sequence_conjugate(quartic, poly(0, 1, 1, 1), 20000)
    record = compare(run, cubic_model, 50)
    assert record.ks_distance < 0.02
    assert set(record.excluded_bins) >= {0, 49}


def test_compare_rejects_other_degrees(sextic, linear_model):
    run = sequence_conjugate(sextic, poly(0, 1), 100)
    with pytest.raises(DegreeMismatch):
        compare(run, linear_model, 10)


def test_compare_rejects_other_polynomials(quartic, linear_model):
    run = sequence_conjugate(quartic, cubic(1, 1, 1), 100)
    with pytest.raises(DomainError):
        compare(run, linear_model, 10)


@pytest.mark.slow
def test_million_terms_converge(quartic, cubic_model):
    run = sequence_conjugate(quartic, poly(0, 1, 1, 1), 10 ** 6)
    record = compare(run, cubic_model, 50)
    assert record.ks_distance < 2e-3
    assert record.converging


@pytest.mark.slow
@pytest.mark.parametrize("coeffs", [(0, 1), (0, 1, 1, 1), (0, 6, 5, 3)])
def test_methods_agree_over_ten_thousand_terms(quartic, coeffs):
    p = poly(*coeffs)
    exact = sequence_exact(quartic, p, 10 ** 4)
    conj = sequence_conjugate(quartic, p, 10 ** 4)
    assert method_agreement(exact, conj) < 1e-9


@pytest.mark.slow
def test_million_terms_converge_for_a_steep_cubic(quartic):
    model = make_model(cubic(3, 5, 6))
    run = sequence_conjugate(quartic, cubic(3, 5, 6), 10 ** 6)
    record = compare(run, model, 50)
    assert record.ks_distance < 0.02
    assert record.ks_distance < record.ks_prefix
    assert record.converging


@pytest.mark.slow
def test_sextic_is_closer_to_uniform_than_the_quartic(quartic, sextic):
    p = cubic(1, -1, -2)
    near = histogram(sequence_conjugate(sextic, p, 10 ** 6), 50)
    far = histogram(sequence_conjugate(quartic, p, 10 ** 6), 50)
    assert near.max_uniform_deviation < far.max_uniform_deviation
    assert near.max_uniform_deviation < 0.5
