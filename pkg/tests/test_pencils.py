from __future__ import annotations

import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hilbquad import equations as eq
from hilbquad import pencils
from hilbquad.binary import IDENTICALLY_ZERO
from hilbquad.grassmann import Conic, DegeneratePencilError, random_group_element
from hilbquad.pencils import OrbitType

ALL = frozenset(OrbitType)


def test_eight_types_with_dimensions():
    assert len(ALL) == 8
    assert sorted(t.dimension for t in OrbitType) == [3, 4, 4, 5, 6, 6, 7, 8]
    assert OrbitType.parse("O6'") is OrbitType.O6P
    assert OrbitType.parse("o4′") is OrbitType.O4P
    with pytest.raises(ValueError):
        OrbitType.parse("O9")


@pytest.mark.parametrize("t,pair", [
    (OrbitType.O3, ("x^2", "x*y")),
    (OrbitType.O5, ("x^2", "y^2+x*z")),
    (OrbitType.O6P, ("x^2+y*z", "x*z")),
    (OrbitType.O8, ("x^2+y^2", "x^2+z^2")),
])
def test_normal_forms(t, pair):
    p = pencils.normal_form(t)
    assert (p.q1, p.q2) == (Conic.parse(pair[0]), Conic.parse(pair[1]))


@pytest.mark.parametrize("t", list(OrbitType))
def test_normal_forms_classify_to_themselves(t):
    assert pencils.classify_type(pencils.normal_form(t)) is t


def _sympy_discriminant(p):
    lam, mu = sympy.symbols("lam mu")
    M = sympy.Matrix(3, 3, lambda i, j: lam * sympy.Rational(str(p.q1.matrix[i][j]))
                     + mu * sympy.Rational(str(p.q2.matrix[i][j])))
    return sympy.expand(M.det()), lam, mu


@pytest.mark.parametrize("t", list(OrbitType))
def test_discriminant_matches_symbolic_determinant(t):
    p = pencils.sample(t, 5)
    want, lam, mu = _sympy_discriminant(p)
    f = pencils.discriminant(p)
    got = sum(sympy.Rational(str(c)) * lam ** (3 - k) * mu ** k for k, c in enumerate(f.coeffs))
    assert sympy.expand(got - want) == 0


def test_o7_example():
    p = pencils.parse_pencil("x^2+y^2", "x*z")
    want, lam, mu = _sympy_discriminant(p)
    assert want == -lam * mu ** 2 / 4
    t, cert = pencils.classify(p)
    assert t is OrbitType.O7 and cert.repeated_root_rank == 2


def test_o5_example():
    t, cert = pencils.classify(pencils.parse_pencil("x^2", "y^2+x*z"))
    assert t is OrbitType.O5 and cert.repeated_root_rank == 1


def test_degenerate_pair():
    with pytest.raises(DegeneratePencilError):
        pencils.parse_pencil("x^2", "2*x^2")


@pytest.mark.parametrize("t,members", [(OrbitType.O4, 2), (OrbitType.O3, 1), (OrbitType.O4P, 0)])
def test_rank_one_member_count_when_discriminant_vanishes(t, members):
    cert = pencils.classify(pencils.sample(t, 11))[1]
    assert cert.rank_one_members == members
    assert cert.root_structure == IDENTICALLY_ZERO
    assert all(c == 0 for c in cert.discriminant.coeffs)


def test_closures():
    assert pencils.closure(OrbitType.O8) == ALL
    assert pencils.closure(OrbitType.O3) == {OrbitType.O3}
    assert pencils.closure(OrbitType.O4P) == {OrbitType.O4P, OrbitType.O3}
    assert pencils.closure(OrbitType.O5) == {OrbitType.O5, OrbitType.O4, OrbitType.O3}
    assert pencils.closure(OrbitType.O6P) >= {OrbitType.O6P, OrbitType.O5, OrbitType.O4P, OrbitType.O4, OrbitType.O3}
    assert OrbitType.O6P not in pencils.closure(OrbitType.O6)


def test_closure_is_compatible_with_dimension():
    for t in OrbitType:
        assert all(s.dimension < t.dimension for s in pencils.closure(t) - {t})


def test_sampling_is_deterministic():
    assert pencils.sample(OrbitType.O7, 9) == pencils.sample(OrbitType.O7, 9)
    assert pencils.classify_type(pencils.sample(OrbitType.O8, 1)) is OrbitType.O8
    assert eq.vanishing_profile(pencils.sample(OrbitType.O3, 7)).as_tuple() == (True, True, True, True)


@pytest.mark.parametrize("t", list(OrbitType))
def test_round_trip_over_seeds(t):
    for s in range(50):
        assert pencils.classify_type(pencils.sample(t, s)) is t


@given(st.sampled_from(list(OrbitType)), st.integers(0, 10**6))
def test_invariance_and_certificate(t, seed):
    rng = random.Random(seed)
    p = pencils.sample(t, seed)
    moved = p.transform(random_group_element(rng)).recombine(*pencils.random_recombination(rng))
    label, cert = pencils.classify(moved)
    assert label is t
    assert pencils.rederive(cert) is t


def test_impossible_certificate():
    from hilbquad.binary import BinaryForm, binary_root_structure
    cert = pencils.ClassificationCertificate(BinaryForm([1, 0, 0]), binary_root_structure(BinaryForm([1, 0, 0])))
    with pytest.raises(pencils.CertificateError):
        pencils.rederive(cert)
