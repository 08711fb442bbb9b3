"""The four quadric ideals I8 ⊂ I5 ⊂ I4 ⊂ I3 and the synthetic equations.

Besides the generator lists this module holds exact Hilbert-function
computation, the discriminant polarizations Delta and Delta*, the
equivariant map Psi cutting out Y5 inside the Grassmannian, and the
highest-weight quadrics P and Q.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from hilbquad import _listing
from hilbquad.grassmann import (
    BASIS,
    PAIRS,
    VARIABLES,
    Conic,
    Pencil,
    PluckerVec,
    SymBasis,
    listed_plucker,
)
from hilbquad.linalg import adjugate3, sparse_rank
from hilbquad.poly import MPoly, Scalar, as_scalar, monomials


class IdealLevel(enum.Enum):
    I8 = "I8"
    I5 = "I5"
    I4 = "I4"
    I3 = "I3"

    @classmethod
    def parse(cls, name: str) -> IdealLevel:
        try:
            return cls(name.upper())
        except ValueError:
            raise ValueError(f"unknown ideal level {name!r}; expected one of I8, I5, I4, I3") from None


LEVELS = (IdealLevel.I8, IdealLevel.I5, IdealLevel.I4, IdealLevel.I3)
GENERATOR_COUNTS = {IdealLevel.I8: 15, IdealLevel.I5: 21, IdealLevel.I4: 45, IdealLevel.I3: 60}

_BLOCK_TEXT = {
    IdealLevel.I8: _listing.PLUCKER,
    IdealLevel.I5: _listing.EXTRA_I5,
    IdealLevel.I4: _listing.EXTRA_I4,
    IdealLevel.I3: _listing.EXTRA_I3,
}


def block_text(level: IdealLevel) -> tuple[str, ...]:
    """Generators added at this level, as Macaulay2 text."""
    return _BLOCK_TEXT[level]


def generator_text(level: IdealLevel) -> list[str]:
    out: list[str] = []
    for lv in LEVELS:
        out.extend(_BLOCK_TEXT[lv])
        if lv is level:
            return out
    raise AssertionError(level)


@lru_cache(maxsize=None)
def _parsed_block(level: IdealLevel) -> tuple[MPoly, ...]:
    if level is IdealLevel.I8:
        return listed_plucker()
    return tuple(MPoly.parse(s, VARIABLES) for s in _BLOCK_TEXT[level])


def block(level: IdealLevel) -> list[MPoly]:
    """The generators added at ``level`` (I8: the 15 Pluecker relations)."""
    return list(_parsed_block(level))


def generators(level: IdealLevel) -> list[MPoly]:
    """All generators of the ideal at ``level``, in listing order."""
    out: list[MPoly] = []
    for lv in LEVELS:
        out.extend(_parsed_block(lv))
        if lv is level:
            return out
    raise AssertionError(level)


def format_generator(p: MPoly) -> str:
    """Listing style: lex term order, squares written as ``i*i``."""
    return p.to_text(VARIABLES, order="lex", powers="repeat")


# --- Hilbert functions --------------------------------------------------------


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series numerator(t) / (1 - t)^k."""

    numerator: tuple[int, ...]
    k: int

    def degree(self) -> int:
        return sum(self.numerator)


HILBERT_SERIES = {
    # classical Gr(2,6): h-vector 1, 6, 6, 1 over (1-t)^9
    IdealLevel.I8: HilbertData((1, 6, 6, 1), 9),
    IdealLevel.I5: HilbertData((1, 9, 24, 19, 3), 6),
    IdealLevel.I4: HilbertData((1, 10, 10), 5),
    IdealLevel.I3: HilbertData((1, 11, 6), 4),
}


def series_coeff(h: HilbertData, d: int) -> int:
    """Coefficient of t^d in numerator(t) * (1 - t)^(-k)."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return sum(c * comb(d - i + h.k - 1, h.k - 1) for i, c in enumerate(h.numerator) if d - i >= 0)


class DegreeCapError(ValueError):
    pass


RATIONAL_CAP = 4
PRIME_CAP = 6


def hilbert_matrix_rows(gens: Sequence[MPoly], d: int) -> list[dict[int, Scalar]]:
    """Rows (monomial of degree d-2) * generator in the degree-d monomial basis."""
    nvars = gens[0].nvars
    cols = {e: i for i, e in enumerate(monomials(nvars, d))}
    rows = []
    for mu in monomials(nvars, d - 2):
        for g in gens:
            row = {}
            for e, c in g.items():
                row[cols[tuple(a + b for a, b in zip(e, mu))]] = c
            rows.append(row)
    return rows


def hilbert_function_of(gens: Sequence[MPoly], d: int, backend: str = "rational",
                        prime: int | None = None) -> int:
    """dim_d of S / <gens> for quadric generators in S = Q[a..o]."""
    nvars = gens[0].nvars if gens else 15
    total = comb(nvars - 1 + d, d)
    if d < 2 or not gens:
        return total
    rows = hilbert_matrix_rows(gens, d)
    return total - sparse_rank(rows, backend=backend, prime=prime)


def hilbert_function(level: IdealLevel, d: int, backend: str = "rational", *,
                     cap: int | None = None, prime: int | None = None) -> int:
    """Hilbert function of S/I at degree d for the ideal as generated.

    The default cap is 4 for the rational backend and 6 for the prime one.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if cap is None:
        cap = RATIONAL_CAP if backend == "rational" else PRIME_CAP
    if d > cap:
        raise DegreeCapError(f"degree {d} exceeds the configured cap {cap} for backend {backend!r}")
    return hilbert_function_of(generators(level), d, backend=backend, prime=prime)


# --- Delta, Delta*, Psi ---------------------------------------------------------


@dataclass(frozen=True)
class SymSquareLift:
    """A symmetric 3x3 matrix in S^2 U or S^2 U^*, tagged with a det(U) twist.

    Elements of S^2(wedge^2 U) are written in the basis (y^z, z^x, x^y)
    of wedge^2 U, i.e. via the cross product, so that (u ^ v)^2 is the
    matrix of (u x v)(u x v)^T.
    """

    matrix: tuple[tuple[Scalar, ...], ...]
    space: str  # "S2U" or "S2U*"
    twist: int

    def __init__(self, matrix, space: str, twist: int):
        object.__setattr__(self, "matrix", tuple(tuple(as_scalar(x) for x in r) for r in matrix))
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "twist", twist)

    def __add__(self, other: SymSquareLift) -> SymSquareLift:
        self._compatible(other)
        return SymSquareLift([[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)],
                             self.space, self.twist)

    def __sub__(self, other: SymSquareLift) -> SymSquareLift:
        self._compatible(other)
        return SymSquareLift([[a - b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)],
                             self.space, self.twist)

    def scale(self, c) -> SymSquareLift:
        return SymSquareLift([[a * c for a in r] for r in self.matrix], self.space, self.twist)

    def _compatible(self, other: SymSquareLift) -> None:
        if (self.space, self.twist) != (other.space, other.twist):
            raise ValueError("adding lifts from different spaces")

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.matrix for x in r)

    def rank(self) -> int:
        from hilbquad.linalg import matrix_rank

        return matrix_rank(self.matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymSquareLift):
            return NotImplemented
        return (self.matrix, self.space, self.twist) == (other.matrix, other.space, other.twist)

    def __hash__(self) -> int:
        return hash((self.matrix, self.space, self.twist))


def square_of(v: Sequence, space: str, twist: int) -> SymSquareLift:
    """The symmetric square v^2 = v v^T."""
    return SymSquareLift([[a * b for b in v] for a in v], space, twist)


def sym_product(u: Sequence, v: Sequence, space: str, twist: int) -> SymSquareLift:
    """uv = (u v^T + v u^T) / 2."""
    return SymSquareLift([[Fraction(u[i] * v[j] + v[i] * u[j], 2) for j in range(3)] for i in range(3)],
                         space, twist)


def _polarized_adjugate(A, B):
    s = [[a + b for a, b in zip(r, t)] for r, t in zip(A, B)]
    adj_s, adj_a, adj_b = adjugate3(s), adjugate3(A), adjugate3(B)
    return [[adj_s[i][j] - adj_a[i][j] - adj_b[i][j] for j in range(3)] for i in range(3)]


def delta_pair(q1: Conic, q2: Conic) -> SymSquareLift:
    """Polarized discriminant, normalized by Delta(u^2, v^2) = (u ^ v)^2."""
    return SymSquareLift(_polarized_adjugate(q1.matrix, q2.matrix), "S2U*", 2)


def delta(q: Conic) -> SymSquareLift:
    """Delta(q) = Delta(q, q) = 2 adj(q)."""
    return delta_pair(q, q)


def delta_star_pair(A: SymSquareLift, B: SymSquareLift) -> SymSquareLift:
    """The same polarization one level up: S^2(S^2 U^* (x) det^2) -> S^2 U (x) det^2."""
    A._compatible(B)
    if A.space == "S2U*":
        space, twist = "S2U", 2 * A.twist - 2
    else:
        space, twist = "S2U*", 2 * A.twist + 2
    return SymSquareLift(_polarized_adjugate(A.matrix, B.matrix), space, twist)


def delta_star(A: SymSquareLift) -> SymSquareLift:
    return delta_star_pair(A, A)


def psi_bilinear(q1: Conic, q2: Conic, q3: Conic, q4: Conic) -> SymSquareLift:
    """Psi(q1^q2, q3^q4), symmetric bilinear on wedge^2 S^2 U."""
    return (delta_star_pair(delta_pair(q1, q3), delta_pair(q2, q4))
            - delta_star_pair(delta_pair(q1, q4), delta_pair(q2, q3)))


def psi(q1: Conic, q2: Conic) -> SymSquareLift:
    """Psi(q1^q2) = Delta*(Delta(q1), Delta(q2)) - Delta*(Delta(q1, q2))."""
    return delta_star_pair(delta(q1), delta(q2)) - delta_star(delta_pair(q1, q2))


@lru_cache(maxsize=None)
def psi_quadrics(basis: SymBasis = BASIS) -> tuple[MPoly, ...]:
    """The six entries (upper triangle, row-major) of Psi as quadrics in a..o."""
    elems = [Conic(basis.element(k)) for k in range(6)]
    x = MPoly.gens(15)
    out = []
    table = {}
    for I, (i, j) in enumerate(PAIRS):
        for J, (k, l) in enumerate(PAIRS):
            if J >= I:
                table[I, J] = psi_bilinear(elems[i], elems[j], elems[k], elems[l]).matrix
    for r in range(3):
        for s in range(r, 3):
            F = MPoly.zero(15)
            for (I, J), M in table.items():
                c = M[r][s]
                if c:
                    F = F + (x[I] * x[J]).scale(c if I == J else 2 * c)
            out.append(F)
    return tuple(out)


# --- P and Q --------------------------------------------------------------------

Bracket = Callable[[Sequence, Sequence, Sequence, Sequence], object]


def _bilinear(Q, u, w):
    total = 0
    for i in range(3):
        for j in range(3):
            if Q[i][j]:
                total = total + u[i] * w[j] * Q[i][j]
    return total


def conic_bracket(q1: Conic, q2: Conic) -> Bracket:
    """(u1,w1,u2,w2) -> q1(u1,w1) q2(u2,w2) - q2(u1,w1) q1(u2,w2)."""
    A, B = q1.matrix, q2.matrix

    def br(u1, w1, u2, w2):
        return _bilinear(A, u1, w1) * _bilinear(B, u2, w2) - _bilinear(B, u1, w1) * _bilinear(A, u2, w2)

    return br


def plucker_bracket(basis: SymBasis = BASIS) -> Bracket:
    """The same bracket as a linear form in the Pluecker coordinates a..o."""
    elems = [basis.element(k) for k in range(6)]

    def br(u1, w1, u2, w2):
        s1 = [_bilinear(E, u1, w1) for E in elems]
        s2 = [_bilinear(E, u2, w2) for E in elems]
        terms = {}
        for idx, (i, j) in enumerate(PAIRS):
            c = s1[i] * s2[j] - s1[j] * s2[i]
            if c:
                e = [0] * 15
                e[idx] = 1
                terms[tuple(e)] = c
        return MPoly(15, terms)

    return br


def p_from_bracket(br: Bracket, e: Sequence, f: Sequence):
    """(q1(e)q2(f) - q2(e)q1(f))^2 + 4 (q1(e,f)q2(f) - q2(e,f)q1(f)) (q1(e,f)q2(e) - q2(e,f)q1(e))."""
    A = br(e, e, f, f)
    B = br(e, f, f, f)
    C = br(e, f, e, e)
    return A * A + B * C * 4


def q_from_bracket(br: Bracket, e: Sequence, f: Sequence, g: Sequence):
    """The 24-dimensional-module quadric attached to e^3 (e^f)(e^f^g)."""
    return (br(e, g, e, e) * br(e, e, f, f)
            + br(e, f, e, e) * (br(f, g, e, e) + br(e, g, e, f)))


def p_value(e: Sequence, f: Sequence, q1: Conic, q2: Conic) -> Scalar:
    return as_scalar(p_from_bracket(conic_bracket(q1, q2), e, f))


def q_value(e: Sequence, f: Sequence, g: Sequence, q1: Conic, q2: Conic) -> Scalar:
    return as_scalar(q_from_bracket(conic_bracket(q1, q2), e, f, g))


def _symbolic_covectors(n: int) -> list[list[MPoly]]:
    x = MPoly.gens(3 * n)
    return [x[3 * k: 3 * k + 3] for k in range(n)]


def p_polynomial(q1: Conic, q2: Conic) -> MPoly:
    """P as a polynomial in the six coordinates (e_x, e_y, e_z, f_x, f_y, f_z)."""
    e, f = _symbolic_covectors(2)
    out = p_from_bracket(conic_bracket(q1, q2), e, f)
    return out if isinstance(out, MPoly) else MPoly.const(out, 6)


def q_polynomial(q1: Conic, q2: Conic) -> MPoly:
    """Q as a polynomial in the nine coordinates of (e, f, g)."""
    e, f, g = _symbolic_covectors(3)
    out = q_from_bracket(conic_bracket(q1, q2), e, f, g)
    return out if isinstance(out, MPoly) else MPoly.const(out, 9)


def p_quadric(e: Sequence, f: Sequence, basis: SymBasis = BASIS) -> MPoly:
    """P for fixed covectors e, f, as a quadric in a..o."""
    return p_from_bracket(plucker_bracket(basis), e, f)


def q_quadric(e: Sequence, f: Sequence, g: Sequence, basis: SymBasis = BASIS) -> MPoly:
    return q_from_bracket(plucker_bracket(basis), e, f, g)


# --- vanishing profile ------------------------------------------------------------


@dataclass(frozen=True)
class VanishingProfile:
    plucker: bool
    extra5: bool
    extra4: bool
    extra3: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.plucker, self.extra5, self.extra4, self.extra3)


def block_vanishes(level: IdealLevel, v: PluckerVec) -> bool:
    return all(g.evaluate(v.coords) == 0 for g in _parsed_block(level))


def vanishing_profile(pencil: Pencil | PluckerVec) -> VanishingProfile:
    """Which generator blocks vanish at the Pluecker point of a pencil."""
    v = pencil if isinstance(pencil, PluckerVec) else pencil.wedge()
    return VanishingProfile(*(block_vanishes(lv, v) for lv in LEVELS))


def y4prime_degree() -> int:
    """Degree of P(U) x P(U*) embedded by O(2,1): (2h + h')^4 with h^3 = h'^3 = 0."""
    return sum(comb(4, k) * 2**k for k in range(5) if k == 2)
