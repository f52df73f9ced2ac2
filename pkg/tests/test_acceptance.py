"""The eleven acceptance criteria, one test each.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary lists one
PASS/FAIL line per criterion.
"""
from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
import sympy as sp

from fourier_monodromy import (
    INFINITY,
    ClassMultiset,
    ExpClass,
    ExponentQ,
    Numeric,
    acampo_monomial,
    bessel,
    char_exponents,
    chi_hypersurface,
    fourier,
    gauss,
    is_moderate_at_infinity,
    katz,
    katz_fourier_closed_form,
    load_fixture,
    local_system_zeta,
    mt3_closed_form,
    mt3_via_strata,
    multiplicities_mt2,
    parse_operator,
    parse_zeta,
    print_operator,
    reciprocity_check,
    run_scenario,
    series_eval,
    sign_flip,
    slopes,
    zeta_tilde,
)
from fourier_monodromy.exponents import match_within
from fourier_monodromy.scalars import eval_class
from fourier_monodromy.zeta import ZetaFunction, evaluate_at
from support import (
    GOLDEN_CASES,
    act,
    det_series,
    expanded_series,
    fourier_act,
    hypersurface_chi_oracle,
    rand_assignment,
    rand_class,
    rand_operator,
    rand_zeta,
    run_cli,
)

GOLDEN_DIR = Path(__file__).parent / "golden"
F = Fraction


def katz_pairs(max_n):
    return [(n, m) for n in range(1, max_n + 1) for m in range(n)]


def sorted_complex(values):
    return sorted((complex(v) for v in values), key=lambda z: (round(z.real, 7), round(z.imag, 7)))


# ---------------------------------------------------------------- 1


@pytest.mark.criterion("C1 Katz Fourier identity, exact, m < n <= 4")
def test_c1_katz_fourier_identity(criterion):
    w, g = sp.symbols("w"), sp.Function("g")(sp.Symbol("w"))
    for n, m in katz_pairs(4):
        P = katz(n, m)
        expected = katz_fourier_closed_form(n, m)
        assert fourier(P) == expected, (n, m)
        # independent check: act on a generic function without normal ordering
        if n <= 2:
            lhs = fourier_act(P, g, w)
            rhs = act(expected, g, w)
            assert sp.simplify(lhs - rhs) == 0, (n, m)


# ---------------------------------------------------------------- 2


@pytest.mark.criterion("C2 fourier o fourier = sign_flip, 200 random operators")
def test_c2_fourier_involution(criterion):
    rng = random.Random(2)
    for _ in range(200):
        P = rand_operator(rng)
        assert fourier(fourier(P).on_side("z")) == sign_flip(P).on_side("w")


# ---------------------------------------------------------------- 3


@pytest.mark.criterion("C3 slopes and moderate-irregularity verdicts")
def test_c3_slopes(criterion):
    assert slopes(bessel(), INFINITY) == [1]
    assert slopes(gauss(), INFINITY) == [0]
    for n in range(1, 6):
        for m in range(n):
            got = set(slopes(katz(n, m), INFINITY))
            # with no beta factors the constant slope is absent: the only edge has slope 1/n
            want = {F(1, n)} if m == 0 else {F(0), F(1, n - m)}
            assert got == want, (n, m, got)
            assert is_moderate_at_infinity(katz(n, m))
    assert is_moderate_at_infinity(bessel())
    assert is_moderate_at_infinity(gauss())
    assert not is_moderate_at_infinity(parse_operator("d - 2*z"))


# ---------------------------------------------------------------- 4


def _exact_vs_numeric(P, at, names, rng, count=20):
    exact = char_exponents(P, at)
    for _ in range(count):
        assignment = rand_assignment(rng, names)
        approx = char_exponents(P, at, Numeric(assignment))
        ref = [x.value(assignment) for x in exact]
        a, b = sorted_complex(approx), sorted_complex(ref)
        assert len(a) == len(b)
        assert max(abs(x - y) for x, y in zip(a, b)) < 1e-9, (P, assignment)


@pytest.mark.criterion("C4 characteristic exponents, exact and numeric")
def test_c4_exponents(criterion):
    nu = ExponentQ.param("nu")
    assert set(char_exponents(bessel(), 0)) == {nu, -nu}
    alpha, beta = ExponentQ.param("alpha"), ExponentQ.param("beta")
    assert sorted(map(str, char_exponents(gauss(), INFINITY))) == sorted(map(str, [alpha, beta]))
    for n, m in katz_pairs(4):
        got = char_exponents(katz(n, m), 0)
        assert sorted(map(str, got)) == [f"alpha{i}" for i in range(1, n + 1)]

    rng = random.Random(4)
    _exact_vs_numeric(bessel(), 0, ["nu"], rng)
    _exact_vs_numeric(gauss(), INFINITY, ["alpha", "beta", "gamma"], rng)
    _exact_vs_numeric(gauss(), 0, ["alpha", "beta", "gamma"], rng)
    for n, m in [(2, 1), (3, 1), (4, 2)]:
        names = [p.name for p in katz(n, m).parameters()]
        _exact_vs_numeric(katz(n, m), 0, names, rng)


# ---------------------------------------------------------------- 5


@pytest.mark.criterion("C5 reciprocity, symbolic and numeric")
def test_c5_reciprocity(criterion):
    families = [("bessel", bessel()), ("gauss", gauss())]
    families += [(f"katz{n}{m}", katz(n, m)) for n, m in katz_pairs(4)]
    rng = random.Random(5)
    for label, P in families:
        report = reciprocity_check(P)
        assert report.holds, label
        names = sorted(p.name for p in P.parameters())
        for _ in range(20):
            assignment = rand_assignment(rng, names)
            num = reciprocity_check(P, Numeric(assignment))
            assert num.holds, (label, assignment)
            # the exact classes, evaluated, agree with the numeric eigenvalues
            exact = [v for c, k in report.left.items() for v in [eval_class(c, assignment)] * k]
            exact = [x for x in exact if abs(x - 1) >= 1e-9]
            assert match_within(exact, num.left, 1e-9), (label, assignment)


# ---------------------------------------------------------------- 6


@pytest.mark.criterion("C6 zeta algebra properties, 500 random cases")
def test_c6_zeta_algebra(criterion):
    rng = random.Random(6)
    one = ZetaFunction.one()
    for _ in range(500):
        a, b, c = rand_zeta(rng), rand_zeta(rng), rand_zeta(rng)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * one == a
        assert a / a == one
        assert a ** -1 * a == one
        # tilde lands in the subgroup without a bare t-power; it is an involution
        # there (genuine zeta functions, det(id - t*Phi) products, live there)
        a0, b0 = a / ZetaFunction(power=a.power), b / ZetaFunction(power=b.power)
        assert zeta_tilde(a).power == 0
        assert zeta_tilde(zeta_tilde(a0)) == a0
        assert zeta_tilde(a0).degree() == a0.degree()
        assert zeta_tilde(a0 * b0) == zeta_tilde(a0) * zeta_tilde(b0)
        assert (a * b).degree() == a.degree() + b.degree()
        assert (a ** 3).degree() == 3 * a.degree()

        assignment = {"alpha": F(rng.randint(-50, 50), rng.choice([7, 11, 13]))}
        n_terms = 12
        factored = np.array(series_eval(a, assignment, n_terms))
        expanded = expanded_series(a, assignment, n_terms)
        assert np.max(np.abs(factored - expanded)) < 1e-9

        t = complex(0.3, 0.2) * rng.uniform(0.5, 1.5)
        lhs = evaluate_at(zeta_tilde(a), t, assignment)  # defining identity, any t-power
        rhs = t ** a.degree() * evaluate_at(a, 1 / t, assignment)
        assert abs(lhs - rhs) < 1e-9 * max(1, abs(rhs))


# ---------------------------------------------------------------- 7


@pytest.mark.criterion("C7 A'Campo values and local-system determinant")
def test_c7_acampo(criterion):
    for m1 in range(1, 8):
        assert acampo_monomial([m1]) == parse_zeta(f"1 - t^{m1}")
    for ms in ([1, 1], [2, 3], [4, 1, 5], [2, 2, 2, 2]):
        assert acampo_monomial(ms).is_one()

    rng = random.Random(7)
    for _ in range(60):
        size = rng.randint(1, 5)
        m = rng.randint(1, 3)
        classes = [rand_class(rng) for _ in range(size)]
        assignment = {"alpha": F(rng.randint(-40, 40), 17)}
        eigs = [eval_class(c, assignment) for c in classes]
        n_terms = m * size + 1
        got = np.array(series_eval(local_system_zeta(1, m, classes), assignment, n_terms))
        want = det_series(eigs, m, n_terms)
        assert np.max(np.abs(got - want)) < 1e-9
        assert local_system_zeta(rng.randint(2, 4), m, classes).is_one()


# ---------------------------------------------------------------- 8


@pytest.mark.criterion("C8 Euler characteristic of smooth hypersurfaces")
def test_c8_chi(criterion):
    for N in range(1, 11):
        assert chi_hypersurface(N, 1) == N
    assert chi_hypersurface(2, 2) == 2
    assert chi_hypersurface(2, 3) == 0
    for N in range(1, 7):
        for d in range(1, 7):
            assert chi_hypersurface(N, d) == hypersurface_chi_oracle(N, d), (N, d)


# ---------------------------------------------------------------- 9


@pytest.mark.criterion("C9 f^alpha closed form against the stratification")
def test_c9_mt3(criterion):
    for N in range(1, 6):
        for d in range(1, 7):
            closed = mt3_closed_form(N, d, "alpha")
            assert mt3_via_strata(N, d, "alpha") == closed, (N, d)
            if d >= 2:
                lam = ExpClass(ExponentQ.param("alpha", -d))
                assert multiplicities_mt2(closed, N) == ClassMultiset({lam: (d - 1) ** (N - 1)}), (N, d)


# ---------------------------------------------------------------- 10


@pytest.mark.criterion("C10 worked fixtures (i) and (ii)")
def test_c10_fixtures(criterion):
    r = run_scenario(load_fixture("example-4i"))
    assert r.zeta == parse_zeta("(1 - e(-alpha)*t)^-1 * (1 - e(-3*alpha)*t)^-1")
    a = ExponentQ.param("alpha")
    assert r.mu == ClassMultiset({ExpClass(-a): 1, ExpClass(a * -3): 1})

    r = run_scenario(load_fixture("example-4ii"))
    assert r.zeta == parse_zeta("(1 - e(-alpha)*t) * (1 - e(-3*alpha)*t^3)^-1")
    assert r.mu == ClassMultiset({ExpClass(F(1, 3) - a): 1, ExpClass(F(2, 3) - a): 1})
    # the two classes are the roots of x^2 + e(-a) x + e(-2a)
    assignment = {"alpha": F(3, 11)}
    b1, b2 = (eval_class(c, assignment) for c, _ in r.mu.items())
    ea = eval_class(ExpClass(-a), assignment)
    assert abs(b1 + b2 + ea) < 1e-12 and abs(b1 * b2 - ea ** 2) < 1e-12


# ---------------------------------------------------------------- 11


@pytest.mark.criterion("C11 parser round trip and CLI goldens")
def test_c11_round_trip_and_goldens(criterion):
    rng = random.Random(11)
    for i in range(500):
        side = "w" if i % 5 == 0 else "z"
        P = rand_operator(rng, side)
        assert parse_operator(print_operator(P), side) == P
    for name, argv in GOLDEN_CASES.items():
        code, out, _ = run_cli(argv)
        assert code == 0, name
        assert out == (GOLDEN_DIR / f"{name}.txt").read_text(encoding="utf-8"), name
