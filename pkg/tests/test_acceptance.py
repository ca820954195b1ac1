"""Acceptance suite: one test per criterion, every tolerance pinned.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass line per
criterion with its wall time.
"""

import math
import time

import numpy as np
import pytest

from groupcalc import (
    BG,
    DomainError,
    Func1D,
    Grid,
    WellSolution,
    abe,
    clamp_occurred,
    commutator_check,
    cross_check_well,
    deform,
    dual_g_derivative,
    dual_g_integral,
    eigenfunction_x,
    energy,
    exp_g,
    fundamental_theorem_residual,
    g_derivative,
    g_div,
    g_integer,
    g_integral,
    g_neg,
    g_pow,
    g_prod,
    g_recip,
    g_sub,
    g_sum,
    integrate,
    kaniadakis,
    probability_table,
    reset_clamp_flag,
    series,
    solve_well,
    spacing,
    spacing_closed_form,
    transform_state,
    tsallis,
    zeros,
)
from groupcalc import closed_forms as cf

PI2_OVER_2 = 4.9348022005446793
E1_TSALLIS_Q0 = 10.271144227611911
E1_KANIADAKIS_1 = 6.3525733281214118  # pi^2 / (2 arcsinh(1)^2), closed-form oracle
FRAC_TSALLIS_100 = 0.7938938015631162  # ground-state mass in [0, 0.2], oracle value
FRAC_KANIADAKIS_100 = 0.8465485232673964

SPECTRUM_CLASSES = [
    (BG, PI2_OVER_2),
    (tsallis(0.0), E1_TSALLIS_Q0),
    (kaniadakis(1.0), E1_KANIADAKIS_1),
]


def _report(number, name, t0):
    print(f"\nACCEPTANCE PASS [{number}] {name} ({time.time() - t0:.1f}s)")


def _rel(a, b):
    return abs(a - b) / (1.0 + max(abs(a), abs(b)))


def test_criterion_1_oracle_equivalence():
    t0 = time.time()
    n_samples = 10_000
    cases = [("q", q) for q in (-0.5, 0.0, 0.5, 0.9)] + [
        ("k", k) for k in (0.25, 0.5, 1.0, 2.0)
    ]
    for kind, p in cases:
        if kind == "q":
            cls = tsallis(p)
            o_sum = lambda x, y: cf.q_sum(p, x, y)
            o_sub = lambda x, y: cf.q_sub(p, x, y)
            o_neg = lambda x: cf.q_neg(p, x)
            o_prod = lambda x, y: cf.q_prod(p, x, y)
            o_div = lambda x, y: cf.q_div(p, x, y)
            o_recip = lambda x: cf.q_recip(p, x)
            o_int = lambda n: cf.q_integer(p, n)
            o_pow = lambda x, n: cf.q_pow(p, x, n)
        else:
            cls = kaniadakis(p)
            o_sum = lambda x, y: cf.kappa_sum(p, x, y)
            o_sub = lambda x, y: cf.kappa_sub(p, x, y)
            o_neg = lambda x: cf.kappa_neg(p, x)
            o_prod = lambda x, y: cf.kappa_prod(p, x, y)
            o_div = lambda x, y: cf.kappa_div(p, x, y)
            o_recip = lambda x: cf.kappa_recip(p, x)
            o_int = lambda n: cf.kappa_integer(p, n)
            o_pow = lambda x, n: cf.kappa_pow(p, x, n)

        rng = np.random.default_rng(5150)
        lo = max(cls.domain[0] * 0.5, -3.0)
        xs = rng.uniform(lo, 4.0, n_samples)
        ys = rng.uniform(lo, 4.0, n_samples)
        for x, y in zip(xs, ys):
            assert _rel(g_sum(cls, x, y), o_sum(x, y)) <= 1e-11
            assert _rel(g_sub(cls, x, y), o_sub(x, y)) <= 1e-11
            assert _rel(g_neg(cls, x), o_neg(x)) <= 1e-11
        xp = rng.uniform(0.2, 4.0, n_samples)
        yp = rng.uniform(0.2, 4.0, n_samples)
        ns = rng.integers(-6, 7, n_samples)
        for x, y, n in zip(xp, yp, ns):
            reset_clamp_flag()
            want = o_prod(x, y)
            if not clamp_occurred():
                assert _rel(g_prod(cls, x, y), want) <= 1e-11
            reset_clamp_flag()
            want = o_div(x, y)
            if not clamp_occurred():
                assert _rel(g_div(cls, x, y), want) <= 1e-11
            reset_clamp_flag()
            want = o_recip(x)
            if not clamp_occurred():
                assert _rel(g_recip(cls, x), want) <= 1e-11
            assert _rel(g_integer(cls, int(n)).value, o_int(int(n))) <= 1e-11
            reset_clamp_flag()
            want = o_pow(x, int(n))
            if not clamp_occurred():
                assert _rel(g_pow(cls, x, int(n)), want) <= 1e-11
    _report(1, "oracle equivalence, 1e4 samples x 8 operations x 8 classes", t0)


def test_criterion_2_group_law_axioms():
    t0 = time.time()
    all_classes = [
        BG,
        tsallis(0.0),
        tsallis(0.5),
        tsallis(-0.5),
        kaniadakis(0.5),
        kaniadakis(1.0),
        abe(1.0, -1.0),
        series([0.5, 0.125, 0.5**3 / 6], 3),
    ]
    rng = np.random.default_rng(808)
    for cls in all_classes:
        if cls.kind == "series":
            lo, hi = -0.05, 0.05
        else:
            lo, hi = max(cls.domain[0] * 0.5, -2.0), 3.0
        for _ in range(400):
            x, y, z = rng.uniform(lo, hi, 3)
            assert _rel(g_sum(cls, x, y), g_sum(cls, y, x)) <= 1e-11  # symmetry
            lhs = g_sum(cls, x, g_sum(cls, y, z))  # associativity
            rhs = g_sum(cls, g_sum(cls, x, y), z)
            assert _rel(lhs, rhs) <= 1e-11
            assert _rel(g_sum(cls, x, 0.0), x) <= 1e-11  # null composability
    witness = abs(2.0 * g_sum(tsallis(0.5), 1.0, 2.0) - g_sum(tsallis(0.5), 2.0, 4.0))
    assert witness > 1e-6
    _report(2, "group-law axioms + non-distributivity witness", t0)


def test_criterion_3_calculus_identities():
    t0 = time.time()
    classes = [BG, tsallis(0.0), tsallis(0.5), tsallis(0.9), kaniadakis(1.0), kaniadakis(2.0)]
    for cls in classes:
        lo = max(cls.domain[0] * 0.45, -2.0)
        f = Func1D(lambda x: exp_g(cls, x), *cls.domain)
        for x in np.linspace(lo, 2.0, 100):
            assert abs(g_derivative(cls, f, x) - exp_g(cls, x)) <= 1e-8

        for poly in (lambda x: x * x, lambda x: x**3):
            res = fundamental_theorem_residual(cls, poly, 0.0, 1.0)
            assert res.primal <= 1e-8 and res.dual <= 1e-8

        for g in (lambda x: 1.0, lambda x: x * x):
            assert abs(
                g_integral(cls, g, 0.0, 1.0, method="weight")
                - g_integral(cls, g, 0.0, 1.0, method="substitution")
            ) <= 1e-9

    for q in (0.0, 0.5, 0.9):
        cls = tsallis(q)
        gamma = 1.0 - q
        for f, fp in ((lambda x: x * x, lambda x: 2 * x), (math.sin, math.cos)):
            for x in np.linspace(max(cls.domain[0] * 0.4, -1.5), 2.0, 40):
                want = math.exp(-gamma * x) * fp(x)
                assert abs(dual_g_derivative(cls, f, x) - want) <= 1e-9
    for kappa in (1.0, 2.0):
        cls = kaniadakis(kappa)
        for x in np.linspace(-1.5, 2.0, 40):
            want = math.cos(x) / math.cosh(kappa * x)
            assert abs(dual_g_derivative(cls, math.sin, x) - want) <= 1e-9
    _report(3, "calculus identities (exp derivative, fundamental theorem, dual forms)", t0)


def test_criterion_4_canonical_pair():
    t0 = time.time()
    for cls in (BG, tsallis(0.5), kaniadakis(2.0)):
        fine = commutator_check(cls, Grid(0.0, 1.0, 2001))
        assert fine <= 1e-6
        coarse = commutator_check(cls, Grid(0.0, 1.0, 1001))
        assert 3.0 <= coarse / fine <= 5.0  # O(h^2) under grid halving
    _report(4, "canonical commutator residual at N=2001 with O(h^2) decay", t0)


def test_criterion_5_spectrum_reproduction():
    t0 = time.time()
    for cls, e1 in SPECTRUM_CLASSES:
        spec = solve_well(cls, 1.0, 2001, 10)
        for n in range(1, 11):
            exact = e1 * n * n
            assert abs(spec.energies[n - 1] - exact) <= 1e-3 * exact
    _report(5, "infinite-well spectra within 0.1% for n <= 10 at N=2001", t0)


def test_criterion_6_cross_solver_agreement():
    t0 = time.time()
    for cls, _ in SPECTRUM_CLASSES:
        _, _, fine = cross_check_well(cls, 1.0, 2001, 5)
        assert fine <= 5e-3
        _, _, coarse = cross_check_well(cls, 1.0, 1001, 5)
        if coarse == 0.0 and fine == 0.0:
            continue  # undeformed: both assemblies are bit-identical
        assert fine < coarse
        assert 2.5 <= coarse / fine <= 6.0  # second order in spacing
    _report(6, "x-space vs deformed-space eigenvalues within 0.5%, converging", t0)


def test_criterion_7_zeros_and_spacings():
    t0 = time.time()
    from scipy.optimize import brentq

    for cls in (tsallis(0.0), tsallis(0.5), kaniadakis(0.5), kaniadakis(1.0)):
        for n in range(1, 7):
            sol = WellSolution(cls, 1.0, n)
            zs = zeros(sol)
            # closed-form eigenfunction: bisection recovers each interior zero
            for m in range(1, n):
                lo = zs[m - 1] + 1e-9
                hi = zs[m + 1] - 1e-9
                found = brentq(lambda x: eigenfunction_x(sol, x), lo, hi, xtol=1e-13)
                assert abs(found - zs[m]) <= 1e-10
            # spacings: closed form vs generic, telescoping, iterated sum
            total = 0.0
            for m in range(1, n + 1):
                gap = spacing(sol, m)
                total += gap
                if cls.kind in ("tsallis", "kaniadakis"):
                    assert abs(gap - spacing_closed_form(sol, m)) <= 1e-12
            assert abs(total - 1.0) <= 1e-13
            step = cls.g(sol.L_g / n)
            for m in range(1, n + 1):
                want = g_sum(cls, zs[m - 1], step)
                assert abs(want - zs[m]) <= 1e-11 * (1.0 + abs(zs[m]))

    # zeros of the numerically solved state, located by sign change
    for cls in (tsallis(0.0), kaniadakis(1.0)):
        n = 6
        spec = solve_well(cls, 1.0, 2001, n)
        psi = transform_state(cls, spec.states[n - 1])
        xs, vals = psi.grid.nodes, psi.values
        crossings = []
        for i in range(1, len(vals) - 2):
            if vals[i] * vals[i + 1] < 0:
                frac = vals[i] / (vals[i] - vals[i + 1])
                crossings.append(xs[i] + frac * (xs[i + 1] - xs[i]))
        sol = WellSolution(cls, 1.0, n)
        interior = zeros(sol)[1:-1]
        assert len(crossings) == len(interior)
        for found, want in zip(crossings, interior):
            assert abs(found - want) <= psi.grid.spacing
    _report(7, "zeros and spacings: closed forms, solver, group law", t0)


def test_criterion_8_figure_reproduction():
    t0 = time.time()
    # strong deformation kappa = 1 - q = 100: mass concentrates near the origin
    sol_q = WellSolution(tsallis(1.0 - 100.0), 1.0, 1)
    frac_q = integrate(lambda x: eigenfunction_x(sol_q, x) ** 2, 0.0, 0.2)
    assert abs(frac_q - FRAC_TSALLIS_100) <= 1e-6
    assert frac_q > 0.5
    sol_k = WellSolution(kaniadakis(100.0), 1.0, 1)
    frac_k = integrate(lambda x: eigenfunction_x(sol_k, x) ** 2, 0.0, 0.2)
    assert abs(frac_k - FRAC_KANIADAKIS_100) <= 1e-6
    assert frac_k > 0.5

    # undeformed ground state stays mirror symmetric
    table = probability_table(WellSolution(BG, 1.0, 1), 401)
    assert np.abs(table[:, 1] - table[::-1, 1]).max() <= 1e-10

    # classical regime: n = 50 density is uniform across 10 bins within 5%
    table = probability_table(WellSolution(BG, 1.0, 50), 2001)
    means = [
        table[(table[:, 0] >= k / 10) & (table[:, 0] < (k + 1) / 10), 1].mean()
        for k in range(10)
    ]
    overall = float(np.mean(means))
    for m in means:
        assert abs(m - overall) <= 0.05 * overall
    _report(8, "figure behavior: concentration, symmetry, classical uniformity", t0)


def test_criterion_9_undeformed_degeneracy():
    t0 = time.time()
    rng = np.random.default_rng(99)
    for _ in range(300):
        x, y = rng.uniform(-5.0, 5.0, 2)
        assert g_sum(BG, x, y) == x + y
        assert g_sub(BG, x, y) == x - y
        assert g_neg(BG, x) == -x
        assert deform(BG, x).value == x
        xp, yp = abs(x) + 0.1, abs(y) + 0.1
        assert g_prod(BG, xp, yp) == xp * yp
        assert g_div(BG, xp, yp) == xp / yp
        assert g_pow(BG, xp, 3) == xp**3
    assert exp_g(BG, 1.3) == math.exp(1.3)

    # calculus collapses onto the plain operators (identical code path)
    f = lambda x: x * math.exp(-x)
    assert g_derivative(BG, f, 0.7) == dual_g_derivative(BG, f, 0.7)
    assert g_integral(BG, f, 0.0, 2.0) == integrate(f, 0.0, 2.0)
    assert dual_g_integral(BG, f, 0.0, 2.0) == integrate(f, 0.0, 2.0)

    # full well solution at the textbook values
    for n in (1, 2, 5):
        sol = WellSolution(BG, 1.0, n)
        assert abs(energy(sol) - PI2_OVER_2 * n * n) <= 1e-12 * energy(sol)
        for m in range(1, n + 1):
            assert abs(spacing(sol, m) - 1.0 / n) <= 1e-12
        for x in np.linspace(0.0, 1.0, 21):
            want = math.sqrt(2.0) * math.sin(n * math.pi * x)
            assert abs(eigenfunction_x(sol, x) - want) <= 1e-12
        zs = zeros(sol)
        assert zs == pytest.approx([m / n for m in range(n + 1)], abs=1e-15)
    _report(9, "undeformed class reduces to textbook arithmetic and spectra", t0)
