from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbquad import equations as eq
from hilbquad import pencils
from hilbquad.equations import HILBERT_SERIES, IdealLevel
from hilbquad.grassmann import Conic, Pencil, random_conic, wedge
from hilbquad.linalg import matrix_rank
from hilbquad.pencils import OrbitType
from hilbquad.poly import MPoly

q = Conic.parse


def test_generator_counts_and_nesting():
    counts = [len(eq.generators(lv)) for lv in eq.LEVELS]
    assert counts == [15, 21, 45, 60]
    for small, big in zip(eq.LEVELS, eq.LEVELS[1:]):
        assert set(eq.generators(small)) <= set(eq.generators(big))


def test_generators_are_linearly_independent_quadrics():
    for lv in eq.LEVELS:
        gens = eq.generators(lv)
        assert all(g.is_homogeneous() and g.degree() == 2 for g in gens)
        mons = sorted({e for g in gens for e in g.terms})
        assert matrix_rank([[g.coeff(e) for e in mons] for g in gens]) == len(gens)


def test_emitted_text_matches_compiled_listing():
    for lv in eq.LEVELS:
        assert [eq.format_generator(p) for p in eq.block(lv)] == [s.replace(" ", "") for s in eq.block_text(lv)]


@pytest.mark.parametrize("h,d,want", [
    (HILBERT_SERIES[IdealLevel.I3], 3, 154),
    (HILBERT_SERIES[IdealLevel.I5], 2, 21 + 9 * 6 + 24),
    (HILBERT_SERIES[IdealLevel.I4], 4, 570),
])
def test_series_coefficients(h, d, want):
    assert eq.series_coeff(h, d) == want


def test_series_degrees():
    assert [HILBERT_SERIES[lv].degree() for lv in (IdealLevel.I5, IdealLevel.I4, IdealLevel.I3)] == [56, 21, 18]


def test_trivial_degrees():
    for lv in eq.LEVELS:
        assert eq.hilbert_function(lv, 0) == 1
        assert eq.hilbert_function(lv, 1) == 15
        assert eq.hilbert_function(lv, 2) == 120 - len(eq.generators(lv))


def test_grassmannian_hilbert_function():
    # classical Gr(2,6): h-vector (1, 6, 6, 1) over (1 - t)^9
    for d in range(4):
        assert eq.hilbert_function(IdealLevel.I8, d) == eq.series_coeff(HILBERT_SERIES[IdealLevel.I8], d)


def test_hilbert_function_degree_three_both_backends():
    for lv in (IdealLevel.I5, IdealLevel.I4, IdealLevel.I3):
        want = eq.series_coeff(HILBERT_SERIES[lv], 3)
        assert eq.hilbert_function(lv, 3) == want
        assert eq.hilbert_function(lv, 3, backend="prime") == want


def test_degree_cap():
    with pytest.raises(eq.DegreeCapError):
        eq.hilbert_function(IdealLevel.I4, 5)
    with pytest.raises(eq.DegreeCapError):
        eq.hilbert_function(IdealLevel.I4, 7, backend="prime")


@pytest.mark.slow
def test_prime_backend_degree_five_matches_series():
    for lv in (IdealLevel.I4, IdealLevel.I3):
        assert eq.hilbert_function(lv, 5, backend="prime") == eq.series_coeff(HILBERT_SERIES[lv], 5)


def test_level_parsing():
    assert IdealLevel.parse("i5") is IdealLevel.I5
    with pytest.raises(ValueError):
        IdealLevel.parse("I7")


# --- Delta and Psi -------------------------------------------------------------------


def test_delta_normalization_on_squares():
    u, v = [1, 2, -1], [0, 3, 1]
    from hilbquad.linalg import cross
    assert eq.delta_pair(Conic.square(u), Conic.square(v)) == eq.square_of(cross(u, v), "S2U*", 2)


def test_delta_examples():
    assert eq.delta(q("x^2")).is_zero()
    d = eq.delta_pair(q("x^2"), q("y^2+x*z"))
    assert d == eq.square_of([0, 0, 1], "S2U*", 2) and d.rank() == 1  # (x^y)^2
    # u = x^y = (0,0,1), v = x^z = -(z^x) = (0,-1,0)
    assert eq.delta_pair(q("x*y"), q("x*z")).scale(2) == eq.sym_product([0, 0, 1], [0, -1, 0], "S2U*", 2).scale(-1)


@given(st.integers(0, 10**6))
def test_delta_is_symmetric_bilinear(seed):
    rng = random.Random(seed)
    a, b, c = (random_conic(rng) for _ in range(3))
    assert eq.delta_pair(a, b) == eq.delta_pair(b, a)
    assert eq.delta_pair(a + c, b) == eq.delta_pair(a, b) + eq.delta_pair(c, b)


def test_psi_examples():
    assert eq.psi(q("x^2"), q("y^2+x*z")).is_zero()
    # Delta(x^2) = 0, so Psi is minus the adjugate of the rank two form Delta(x^2, yz)
    nz = eq.psi(q("x^2"), q("y*z"))
    assert not nz.is_zero() and nz.rank() == 1
    assert eq.psi(q("x*y"), q("x*z")) == eq.square_of([1, 0, 0], "S2U", 2).scale(Fraction(3, 8))
    assert eq.psi(q("x*y"), q("x*z")).twist == 2


@given(st.integers(0, 10**6))
def test_psi_depends_only_on_the_wedge(seed):
    rng = random.Random(seed)
    q1, q2 = random_conic(rng), random_conic(rng)
    a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
    p = Pencil(q1, q2) if wedge(q1, q2).coords != (0,) * 15 else None
    if p is None or a * d - b * c == 0:
        return
    r = p.recombine(a, b, c, d)
    # quadratic in the wedge: scales by the square of the determinant
    assert eq.psi(r.q1, r.q2) == eq.psi(q1, q2).scale((a * d - b * c) ** 2)


@given(st.integers(0, 10**6))
def test_psi_quadrics_agree_with_direct_evaluation(seed):
    rng = random.Random(seed)
    q1, q2 = random_conic(rng), random_conic(rng)
    v = wedge(q1, q2).coords
    M = eq.psi(q1, q2).matrix
    want = [M[r][s] for r in range(3) for s in range(r, 3)]
    assert [F.evaluate(v) for F in eq.psi_quadrics()] == want


@pytest.mark.parametrize("t", list(OrbitType))
def test_psi_vanishes_exactly_on_the_closure_of_o5(t):
    zero_expected = t in pencils.closure(OrbitType.O5)
    for s in range(10):
        p = pencils.sample(t, s)
        assert eq.psi(p.q1, p.q2).is_zero() == zero_expected


# --- P and Q -----------------------------------------------------------------------


def test_p_on_two_squares_is_a_fourth_power():
    P = eq.p_polynomial(q("x^2"), q("y^2"))
    e = MPoly.gens(6)
    assert P == (e[0] * e[4] - e[1] * e[3]) ** 4


@pytest.mark.parametrize("t,p_zero,q_zero", [
    (OrbitType.O3, True, True),
    (OrbitType.O4, False, True),
    (OrbitType.O4P, True, False),
    (OrbitType.O5, False, False),
    (OrbitType.O6, False, False),
    (OrbitType.O6P, False, False),
    (OrbitType.O7, False, False),
    (OrbitType.O8, False, False),
])
def test_identical_vanishing_of_p_and_q(t, p_zero, q_zero):
    for s in range(3):
        p = pencils.sample(t, s)
        assert eq.p_polynomial(p.q1, p.q2).is_zero() is p_zero
        assert eq.q_polynomial(p.q1, p.q2).is_zero() is q_zero


@pytest.mark.parametrize("t", [OrbitType.O5, OrbitType.O8])
def test_q_has_a_nonzero_value_on_a_small_grid(t):
    p = pencils.normal_form(t)
    grid = list(itertools.product((-1, 0, 1), repeat=3))
    hit = next(((e, f, g) for e in grid[:9] for f in grid for g in grid
                if eq.q_value(e, f, g, p.q1, p.q2) != 0), None)
    assert hit is not None


@given(st.integers(0, 10**6))
def test_p_and_q_quadrics_match_direct_values(seed):
    rng = random.Random(seed)
    q1, q2 = random_conic(rng), random_conic(rng)
    e, f, g = ([rng.randint(-3, 3) for _ in range(3)] for _ in range(3))
    v = wedge(q1, q2).coords
    assert eq.p_quadric(e, f).evaluate(v) == eq.p_value(e, f, q1, q2)
    assert eq.q_quadric(e, f, g).evaluate(v) == eq.q_value(e, f, g, q1, q2)


# --- vanishing profiles ------------------------------------------------------------


@pytest.mark.parametrize("t,profile", [
    (OrbitType.O5, (True, True, False, False)),
    (OrbitType.O4, (True, True, True, False)),
    (OrbitType.O3, (True, True, True, True)),
    (OrbitType.O4P, (True, False, False, True)),
    (OrbitType.O8, (True, False, False, False)),
])
def test_vanishing_profiles_of_normal_forms(t, profile):
    assert eq.vanishing_profile(pencils.normal_form(t)).as_tuple() == profile


@pytest.mark.parametrize("t", list(OrbitType))
def test_profiles_follow_orbit_closures(t):
    for s in range(5):
        prof = eq.vanishing_profile(pencils.sample(t, 100 + s))
        assert prof.plucker
        assert (prof.plucker and prof.extra5) == (t in pencils.closure(OrbitType.O5))
        assert (prof.extra5 and prof.extra4) == (t in pencils.closure(OrbitType.O4))
        assert (prof.extra5 and prof.extra4 and prof.extra3) == (t is OrbitType.O3)
        assert prof.extra3 == (t in pencils.closure(OrbitType.O4P))


def test_incidence_variety_degree():
    assert eq.y4prime_degree() == 24
