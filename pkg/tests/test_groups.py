"""Generator classes: closed forms, round trips, domains, spec strings."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupcalc import (
    BG,
    ConvergenceError,
    DomainError,
    abe,
    cos_g,
    exp_g,
    g_inv,
    g_of,
    g_prime,
    g_second,
    kaniadakis,
    log_g,
    parse_class_spec,
    series,
    sin_g,
    tsallis,
)

LN2 = 0.6931471805599453
ASINH1 = 0.8813735870195430

ALL_CLASSES = [
    BG,
    tsallis(0.0),
    tsallis(0.5),
    tsallis(-0.5),
    kaniadakis(1.0),
    kaniadakis(0.25),
    abe(1.0, -1.0),
    abe(0.5, -2.0),
]


def test_g_of_closed_forms():
    assert g_of(BG, 1.7) == 1.7
    assert g_of(tsallis(0.0), LN2) == pytest.approx(1.0, abs=1e-15)
    assert g_of(kaniadakis(1.0), 0.0) == 0.0


def test_g_inv_closed_forms():
    assert g_inv(tsallis(0.0), 1.0) == pytest.approx(LN2, abs=1e-15)
    assert g_inv(kaniadakis(1.0), 1.0) == pytest.approx(ASINH1, abs=1e-15)
    a = abe(1.0, -1.0)
    assert g_inv(a, g_of(a, 0.3)) == pytest.approx(0.3, abs=1e-13)


def test_g_inv_domain_errors():
    with pytest.raises(DomainError):
        g_inv(tsallis(0.5), -2.0)  # 1 + 0.5*(-2) = 0
    with pytest.raises(DomainError):
        g_inv(tsallis(0.5), -3.0)
    with pytest.raises(DomainError):
        g_inv(tsallis(3.0), 1.0)  # q > 1 flips the domain


def test_g_prime_g_second():
    assert g_prime(BG, 5.0) == 1.0
    assert g_second(BG, 5.0) == 0.0
    assert g_prime(tsallis(0.5), 0.0) == 1.0
    assert g_prime(kaniadakis(2.0), 1.0) == pytest.approx(math.cosh(2.0), rel=1e-15)


@pytest.mark.parametrize("cls", ALL_CLASSES, ids=lambda c: c.spec_string())
def test_normalization_at_zero(cls):
    assert g_of(cls, 0.0) == 0.0
    assert g_prime(cls, 0.0) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("cls", ALL_CLASSES, ids=lambda c: c.spec_string())
def test_roundtrip_1000_points(cls):
    rng = np.random.default_rng(42)
    for t in rng.uniform(-5.0, 5.0, 1000):
        assert abs(g_inv(cls, g_of(cls, t)) - t) <= 1e-12 * (1.0 + abs(t))


def test_series_roundtrip_local():
    cls = series([0.5, 0.125, 0.5**3 / 6, 0.5**4 / 24], 4)
    rng = np.random.default_rng(1)
    for t in rng.uniform(-0.5, 0.5, 300):
        assert abs(g_inv(cls, g_of(cls, t)) - t) <= 1e-12 * (1.0 + abs(t))


def test_series_matches_tsallis_locally():
    # coefficients of the Tsallis expansion: a_k = gamma^k / k!
    gamma = 0.5
    order = 6
    cls = series([gamma**k / math.factorial(k) for k in range(1, order + 1)], order)
    ts = tsallis(1.0 - gamma)
    for t in np.linspace(-0.1, 0.1, 41):
        assert abs(g_of(cls, t) - g_of(ts, t)) <= 1e-12


def test_series_order_exceeds_coefficients():
    with pytest.raises(ValueError):
        series([0.5, 0.125], truncation_order=3)


def test_series_inverse_outside_radius():
    cls = series([-1.0], 1)  # G(t) = t - t^2/2, G' = 1 - t: domain is local
    with pytest.raises((ConvergenceError, DomainError)):
        g_inv(cls, 10.0)


def test_abe_rejects_non_monotone():
    with pytest.raises(ValueError):
        abe(2.0, 1.0)
    with pytest.raises(ValueError):
        abe(1.0, 1.0)


def test_abe_swaps_parameters():
    assert abe(-1.0, 1.0).spec_string() == "abe:a=1,b=-1"


def test_abe_matches_kaniadakis():
    # G_(k,-k) = sinh(k t)/k
    a, k = abe(1.0, -1.0), kaniadakis(1.0)
    for t in np.linspace(-3, 3, 21):
        assert g_of(a, t) == pytest.approx(g_of(k, t), rel=1e-14)


def test_degenerate_parameters_normalize_to_bg():
    assert tsallis(1.0) is BG
    assert kaniadakis(0.0) is BG


def test_log_exp_closed_forms():
    cls = tsallis(0.5)
    assert log_g(cls, 4.0) == pytest.approx(2.0, rel=1e-14)
    assert exp_g(cls, 2.0) == pytest.approx(4.0, rel=1e-14)


@pytest.mark.parametrize("cls", ALL_CLASSES, ids=lambda c: c.spec_string())
def test_log_exp_mutually_inverse(cls):
    for x in (0.25, 1.0, 3.5):
        assert exp_g(cls, log_g(cls, x)) == pytest.approx(x, rel=1e-12)
    assert exp_g(cls, 0.0) == 1.0
    assert log_g(cls, 1.0) == 0.0


def test_exp_g_cutoff_edge():
    # closed lower edge of the Tsallis domain maps to the limit value 0
    assert exp_g(tsallis(0.5), -2.0) == 0.0
    with pytest.raises(DomainError):
        exp_g(tsallis(0.5), -2.5)


def test_log_g_needs_positive():
    with pytest.raises(DomainError):
        log_g(BG, 0.0)
    with pytest.raises(DomainError):
        log_g(tsallis(0.5), -1.0)


def test_sin_cos_closed_forms():
    assert sin_g(BG, math.pi / 2) == pytest.approx(1.0, rel=1e-15)
    assert sin_g(tsallis(0.0), 3.8104773809653517) == pytest.approx(1.0, rel=1e-12)
    for cls in ALL_CLASSES:
        assert cos_g(cls, 0.0) == 1.0


@pytest.mark.parametrize("cls", ALL_CLASSES, ids=lambda c: c.spec_string())
def test_pythagorean_identity(cls):
    rng = np.random.default_rng(3)
    lo, hi = cls.domain
    lo = max(lo * 0.5, -4.0)
    hi = min(hi * 0.5, 4.0)
    for x in rng.uniform(lo, hi, 200):
        assert abs(sin_g(cls, x) ** 2 + cos_g(cls, x) ** 2 - 1.0) <= 1e-12


def test_derivatives_match_finite_differences():
    h = 1e-5
    for cls in ALL_CLASSES:
        for t in np.linspace(-2.0, 2.0, 17):
            fd1 = (g_of(cls, t + h) - g_of(cls, t - h)) / (2 * h)
            fd2 = (g_prime(cls, t + h) - g_prime(cls, t - h)) / (2 * h)
            assert abs(fd1 - g_prime(cls, t)) <= 1e-8 * (1.0 + abs(fd1))
            assert abs(fd2 - g_second(cls, t)) <= 1e-8 * (1.0 + abs(fd2))


@given(t=st.floats(-5.0, 5.0), q=st.floats(-0.9, 0.95))
@settings(max_examples=150, deadline=None)
def test_roundtrip_property_tsallis(t, q):
    cls = tsallis(q)
    assert abs(g_inv(cls, g_of(cls, t)) - t) <= 1e-11 * (1.0 + abs(t))


@given(t=st.floats(-5.0, 5.0), kappa=st.floats(0.05, 3.0))
@settings(max_examples=150, deadline=None)
def test_roundtrip_property_kaniadakis(t, kappa):
    cls = kaniadakis(kappa)
    assert abs(g_inv(cls, g_of(cls, t)) - t) <= 1e-11 * (1.0 + abs(t))


def test_parse_class_spec():
    assert parse_class_spec("bg") is BG
    assert parse_class_spec("tsallis:q=0.5").q == 0.5
    assert parse_class_spec("kaniadakis:k=2").kappa == 2.0
    assert parse_class_spec("abe:a=1,b=-1").spec_string() == "abe:a=1,b=-1"
    cls = parse_class_spec("series:a1=0.5,a2=0.125")
    assert cls.coeffs == (0.5, 0.125)
    assert cls.truncation_order == 2
    for bad in ("nope", "tsallis", "tsallis:q=x", "series:a2=1", "bg:q=1"):
        with pytest.raises(ValueError):
            parse_class_spec(bad)


def test_spec_string_roundtrip():
    for cls in ALL_CLASSES:
        again = parse_class_spec(cls.spec_string())
        assert again.spec_string() == cls.spec_string()
