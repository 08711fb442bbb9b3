from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hilbquad.binary import (
    IDENTICALLY_ZERO,
    BinaryForm,
    binary_gcd,
    binary_root_structure,
    distinct_root_count,
    multiplicity_pattern,
    rational_roots,
    squarefree_decomposition,
)

lam, mu = sympy.symbols("lam mu")
lin = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda ab: ab != (0, 0))


def form_from_sympy(expr, d):
    p = sympy.Poly(sympy.expand(expr), lam, mu)
    return BinaryForm([int(p.coeff_monomial(lam ** (d - k) * mu**k)) for k in range(d + 1)])


def sympy_pattern(expr):
    """Multiplicities of the distinct projective roots, via factorization over Q-bar."""
    expr = sympy.expand(expr)
    out = []
    r = 0
    while sympy.expand(expr.subs(mu, 0)) == 0:
        expr = sympy.cancel(expr / mu)
        r += 1
    if r:
        out.append(r)
    for root, m in sympy.roots(sympy.Poly(expr.subs(mu, 1), lam)).items():
        out.append(m)
    return tuple(sorted(out, reverse=True))


@given(st.lists(lin, min_size=3, max_size=3), st.integers(-3, 3).filter(bool))
def test_root_pattern_of_products_of_linear_forms(factors, c):
    expr = c * sympy.prod(a * lam + b * mu for a, b in factors)
    f = form_from_sympy(expr, 3)
    assert multiplicity_pattern(binary_root_structure(f)) == sympy_pattern(expr)


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4).filter(any))
def test_root_pattern_of_random_cubics(c):
    f = BinaryForm(c)
    expr = sum(ci * lam ** (3 - k) * mu**k for k, ci in enumerate(c))
    pattern = multiplicity_pattern(binary_root_structure(f))
    assert pattern == sympy_pattern(expr)
    assert sum(pattern) == 3


def test_irrational_roots_are_grouped():
    rs = binary_root_structure(BinaryForm([1, 0, -2, 0]))  # lam (lam^2 - 2 mu^2)
    assert any(it.point is None and it.count == 2 for it in rs)
    assert multiplicity_pattern(rs) == (1, 1, 1)


def test_zero_form():
    assert binary_root_structure(BinaryForm([0, 0, 0, 0])) == IDENTICALLY_ZERO
    with pytest.raises(ValueError):
        distinct_root_count(BinaryForm([0, 0]))


def test_root_at_infinity_has_mu_multiplicity():
    f = BinaryForm([0, 0, 1, 1])  # mu^2 lam + mu^3
    rs = binary_root_structure(f)
    assert {(it.point, it.multiplicity) for it in rs} == {((1, 0), 2), ((-1, 1), 1)}


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_squarefree_decomposition_matches_sympy(c):
    t = sympy.Symbol("t")
    p = sympy.Poly(list(reversed(c)), t)
    want = sorted((sympy.Poly(f, t).monic().all_coeffs(), k) for f, k in sympy.sqf_list(p)[1])
    got = sorted(([sympy.Rational(x.numerator, x.denominator) for x in reversed(list(map(Fraction, f)))], k)
                 for f, k in squarefree_decomposition(c))
    assert got == want


def test_rational_roots():
    assert sorted(rational_roots([-6, 1, 1])) == [-3, 2]  # t^2 + t - 6
    assert rational_roots([Fraction(-1, 4), 0, 1]) == [Fraction(1, 2), Fraction(-1, 2)] or \
        sorted(rational_roots([Fraction(-1, 4), 0, 1])) == [Fraction(-1, 2), Fraction(1, 2)]


def test_binary_gcd_keeps_root_at_infinity():
    f = form_from_sympy(mu * (lam - mu), 2)
    g = form_from_sympy(mu * (lam + 2 * mu), 2)
    h = binary_gcd([f, g, BinaryForm([0, 0, 0])])
    assert distinct_root_count(h) == 1 and h(1, 0) == 0 and h(0, 1) != 0


@given(lin, lin, lin)
def test_binary_gcd_of_two_products(a, b, c):
    ef = (a[0] * lam + a[1] * mu) * (b[0] * lam + b[1] * mu)
    eg = (a[0] * lam + a[1] * mu) * (c[0] * lam + c[1] * mu)
    want = sympy.Poly(sympy.gcd(sympy.expand(ef), sympy.expand(eg)), lam, mu)
    assert binary_gcd([form_from_sympy(ef, 2), form_from_sympy(eg, 2)]).degree == want.total_degree()
