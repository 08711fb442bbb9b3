"""Conics, pencils and Pluecker coordinates on wedge^2 S^2 U.

A conic is an element of S^2 U, stored as its symmetric 3x3 matrix Q in the
basis (x, y, z) of U, so that ``q(e) = e^T Q e`` for a covector e. The
Pluecker coordinates a..o are the 2x2 minors ``p_ij`` (i < j, lex order) of
a pair of conics written in the ordered basis :data:`BASIS` of S^2 U.

:data:`BASIS` is (x^2, 2xy, 2xz, y^2, 2yz, z^2): the coordinates of a conic
are then the upper-triangular entries of its matrix. This is the unique
ordering (up to relabelling x, y, z) for which the shipped generator lists
are weight vectors and the trace conditions of the Hilbert-scheme side
span the six extra I5 quadrics; :func:`find_basis_ordering` re-derives it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from hilbquad import _listing
from hilbquad.linalg import det3, matmul, matvec, transpose
from hilbquad.poly import MPoly, Scalar, as_scalar

VARIABLES = _listing.RING_VARIABLES
PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(6), 2))
SYM_POSITIONS: tuple[tuple[int, int], ...] = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
XYZ = "xyz"


class DegeneratePencilError(ValueError):
    pass


class SingularGroupElementError(ValueError):
    pass


class NotDecomposableError(ValueError):
    pass


# --- bases of S^2 U -----------------------------------------------------------


@dataclass(frozen=True)
class SymBasis:
    """An ordered basis of S^2 U built from the six matrix positions.

    With ``scaling="entry"`` the basis element at an off-diagonal position
    (i, j) is E_ij + E_ji (the polynomial 2 x_i x_j) and coordinates are
    matrix entries. With ``scaling="monomial"`` it is the monomial x_i x_j.
    """

    positions: tuple[tuple[int, int], ...] = SYM_POSITIONS
    scaling: str = "entry"

    def coords(self, Q: Sequence[Sequence]) -> tuple[Scalar, ...]:
        out = []
        for i, j in self.positions:
            c = Q[i][j]
            if i != j and self.scaling == "monomial":
                c = 2 * c
            out.append(as_scalar(c))
        return tuple(out)

    def element(self, k: int) -> list[list[Scalar]]:
        i, j = self.positions[k]
        Q = [[0] * 3 for _ in range(3)]
        if i == j:
            Q[i][i] = 1
        else:
            v = 1 if self.scaling == "entry" else Fraction(1, 2)
            Q[i][j] = Q[j][i] = v
        return Q

    def matrix_from_coords(self, c: Sequence) -> list[list[Scalar]]:
        Q = [[Fraction(0)] * 3 for _ in range(3)]
        for k, (i, j) in enumerate(self.positions):
            v = Fraction(c[k])
            if i != j and self.scaling == "monomial":
                v /= 2
            Q[i][j] = Q[j][i] = v
        return [[as_scalar(x) for x in r] for r in Q]

    def labels(self) -> tuple[str, ...]:
        out = []
        for i, j in self.positions:
            if i == j:
                out.append(f"{XYZ[i]}^2")
            elif self.scaling == "entry":
                out.append(f"2*{XYZ[i]}*{XYZ[j]}")
            else:
                out.append(f"{XYZ[i]}*{XYZ[j]}")
        return tuple(out)


BASIS = SymBasis(SYM_POSITIONS, "entry")


# --- conics -------------------------------------------------------------------


@dataclass(frozen=True)
class Conic:
    """A ternary quadratic form, stored as its symmetric matrix."""

    matrix: tuple[tuple[Scalar, ...], ...]

    def __init__(self, matrix: Sequence[Sequence]):
        M = tuple(tuple(as_scalar(x) for x in row) for row in matrix)
        if len(M) != 3 or any(len(r) != 3 for r in M):
            raise ValueError("conic matrix must be 3x3")
        if any(M[i][j] != M[j][i] for i in range(3) for j in range(3)):
            raise ValueError("conic matrix must be symmetric")
        object.__setattr__(self, "matrix", M)

    @classmethod
    def from_poly(cls, p: MPoly) -> Conic:
        if p.nvars != 3:
            raise ValueError("a conic is a polynomial in x, y, z")
        if not p.is_zero() and (p.degree() != 2 or not p.is_homogeneous()):
            raise ValueError(f"not a quadratic form: {p.to_text(XYZ)}")
        Q = [[Fraction(0)] * 3 for _ in range(3)]
        for e, c in p.items():
            idx = [i for i in range(3) for _ in range(e[i])]
            i, j = idx
            if i == j:
                Q[i][i] += c
            else:
                Q[i][j] += Fraction(c, 2)
                Q[j][i] += Fraction(c, 2)
        return cls(Q)

    @classmethod
    def parse(cls, text: str) -> Conic:
        return cls.from_poly(MPoly.parse(text, XYZ))

    @classmethod
    def from_coords(cls, c: Sequence, basis: SymBasis = BASIS) -> Conic:
        return cls(basis.matrix_from_coords(c))

    @classmethod
    def square(cls, v: Sequence) -> Conic:
        """The conic (v_x x + v_y y + v_z z)^2."""
        return cls([[as_scalar(a * b) for b in v] for a in v])

    def to_poly(self) -> MPoly:
        terms = {}
        for i in range(3):
            for j in range(i, 3):
                e = [0, 0, 0]
                e[i] += 1
                e[j] += 1
                c = self.matrix[i][j] if i == j else 2 * self.matrix[i][j]
                terms[tuple(e)] = c
        return MPoly(3, terms)

    def to_text(self) -> str:
        return self.to_poly().to_text(XYZ)

    def __str__(self) -> str:
        return self.to_text()

    def coords(self, basis: SymBasis = BASIS) -> tuple[Scalar, ...]:
        return basis.coords(self.matrix)

    def value(self, e: Sequence) -> Scalar:
        return self.bilinear(e, e)

    def bilinear(self, e: Sequence, f: Sequence) -> Scalar:
        return as_scalar(sum(e[i] * self.matrix[i][j] * f[j] for i in range(3) for j in range(3)))

    def rank(self) -> int:
        from hilbquad.linalg import matrix_rank

        return matrix_rank(self.matrix)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.matrix for x in r)

    def transform(self, g: Sequence[Sequence]) -> Conic:
        """Image under g in GL(U): Q -> g Q g^T."""
        return Conic(matmul(matmul(g, self.matrix), transpose(g)))

    def __add__(self, other: Conic) -> Conic:
        return Conic([[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other: Conic) -> Conic:
        return Conic([[a - b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def scale(self, c) -> Conic:
        return Conic([[a * c for a in r] for r in self.matrix])

    __rmul__ = scale


@dataclass(frozen=True)
class Pencil:
    """An ordered pair of linearly independent conics."""

    q1: Conic
    q2: Conic

    def __post_init__(self):
        if all(x == 0 for x in wedge(self.q1, self.q2).coords):
            raise DegeneratePencilError(f"conics {self.q1} and {self.q2} are linearly dependent")

    @classmethod
    def parse(cls, t1: str, t2: str) -> Pencil:
        return cls(Conic.parse(t1), Conic.parse(t2))

    def transform(self, g) -> Pencil:
        return Pencil(self.q1.transform(g), self.q2.transform(g))

    def recombine(self, alpha, beta, gamma, delta) -> Pencil:
        """The pencil spanned by (alpha q1 + beta q2, gamma q1 + delta q2)."""
        return Pencil(self.q1.scale(alpha) + self.q2.scale(beta), self.q1.scale(gamma) + self.q2.scale(delta))

    def member(self, lam, mu) -> Conic:
        return self.q1.scale(lam) + self.q2.scale(mu)

    def wedge(self) -> PluckerVec:
        return wedge(self.q1, self.q2)

    def __str__(self) -> str:
        return f"<{self.q1}, {self.q2}>"


# --- Pluecker vectors ---------------------------------------------------------


@dataclass(frozen=True)
class PluckerVec:
    """A point of wedge^2 S^2 U, coordinates a..o = p_12, p_13, ..., p_56."""

    coords: tuple[Scalar, ...]

    def __init__(self, coords: Iterable):
        c = tuple(as_scalar(x) for x in coords)
        if len(c) != 15:
            raise ValueError(f"a Pluecker vector has 15 coordinates, got {len(c)}")
        object.__setattr__(self, "coords", c)

    @classmethod
    def zero(cls) -> PluckerVec:
        return cls([0] * 15)

    @classmethod
    def unit(cls, name: str) -> PluckerVec:
        c = [0] * 15
        c[VARIABLES.index(name)] = 1
        return cls(c)

    def __getitem__(self, key):
        if isinstance(key, str):
            return self.coords[VARIABLES.index(key)]
        return self.coords[key]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: PluckerVec) -> PluckerVec:
        return PluckerVec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: PluckerVec) -> PluckerVec:
        return PluckerVec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> PluckerVec:
        return PluckerVec(-a for a in self.coords)

    def scale(self, c) -> PluckerVec:
        return PluckerVec(a * c for a in self.coords)

    __rmul__ = scale

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def to_dict(self) -> dict[str, str]:
        return {name: str(v) for name, v in zip(VARIABLES, self.coords)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> PluckerVec:
        unknown = set(d) - set(VARIABLES)
        if unknown:
            raise ValueError(f"unknown Pluecker keys: {sorted(unknown)}")
        return cls(Fraction(str(d.get(name, 0))) for name in VARIABLES)

    @classmethod
    def from_json(cls, text: str) -> PluckerVec:
        return cls.from_dict(json.loads(text))

    def proportional_to(self, other: PluckerVec) -> Fraction | None:
        """The scalar k with self = k * other, or None."""
        k = None
        for a, b in zip(self.coords, other.coords):
            if b == 0:
                if a != 0:
                    return None
                continue
            r = Fraction(a) / b
            if k is None:
                k = r
            elif r != k:
                return None
        if k is None:
            return Fraction(0) if self.is_zero() else None
        return k


def wedge(q1: Conic, q2: Conic, basis: SymBasis = BASIS) -> PluckerVec:
    """Coordinates p_ij = q1_i q2_j - q1_j q2_i of q1 ^ q2."""
    c1, c2 = q1.coords(basis), q2.coords(basis)
    return PluckerVec(c1[i] * c2[j] - c1[j] * c2[i] for i, j in PAIRS)


def wedge_coords(c1: Sequence, c2: Sequence) -> list[Scalar]:
    return [as_scalar(c1[i] * c2[j] - c1[j] * c2[i]) for i, j in PAIRS]


# --- Pluecker relations ------------------------------------------------------


def pair_index(i: int, j: int) -> tuple[int, int]:
    """(index into a..o, sign) of p_ij for any i != j."""
    if i < j:
        return PAIRS.index((i, j)), 1
    return PAIRS.index((j, i)), -1


def generated_plucker_relations() -> list[MPoly]:
    """p_ij p_kl - p_ik p_jl + p_il p_jk for i < j < k < l, lex order."""
    x = MPoly.gens(15)
    p = lambda i, j: x[PAIRS.index((i, j))]
    return [p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k)
            for i, j, k, l in combinations(range(6), 4)]


@lru_cache(maxsize=None)
def listed_plucker() -> tuple[MPoly, ...]:
    return tuple(MPoly.parse(s, VARIABLES) for s in _listing.PLUCKER)


def check_labeling() -> None:
    """Startup self-check: generated relations equal the listed I8 generators."""
    if list(listed_plucker()) != generated_plucker_relations():
        raise RuntimeError("Pluecker labeling does not reproduce the listed I8 generators")


check_labeling()


def plucker_residuals(v: PluckerVec) -> list[Scalar]:
    """Values of the 15 I8 generators at v; all zero iff v is decomposable."""
    return [g.evaluate(v.coords) for g in listed_plucker()]


def is_decomposable(v: PluckerVec) -> bool:
    return all(r == 0 for r in plucker_residuals(v))


# --- GL(U) action -------------------------------------------------------------


def check_group_element(g: Sequence[Sequence]) -> Scalar:
    if len(g) != 3 or any(len(r) != 3 for r in g):
        raise ValueError("group element must be a 3x3 matrix")
    d = det3(g)
    if d == 0:
        raise SingularGroupElementError("group element is singular")
    return d


def sym2_matrix(g: Sequence[Sequence], basis: SymBasis = BASIS) -> list[list[Scalar]]:
    """6x6 matrix of Q -> g Q g^T in the basis coordinates."""
    cols = [basis.coords(matmul(matmul(g, basis.element(k)), transpose(g))) for k in range(6)]
    return transpose(cols)


def wedge2_matrix(S: Sequence[Sequence]) -> list[list[Scalar]]:
    """Second compound: the action on wedge^2 induced by S."""
    return [[as_scalar(S[i][k] * S[j][l] - S[i][l] * S[j][k]) for (k, l) in PAIRS] for (i, j) in PAIRS]


def act(g: Sequence[Sequence], v: PluckerVec, twist: int = 0) -> PluckerVec:
    """wedge^2 S^2(g) applied to v, times det(g)^twist."""
    d = check_group_element(g)
    w = matvec(wedge2_matrix(sym2_matrix(g)), v.coords)
    factor = Fraction(d) ** twist
    return PluckerVec(x * factor for x in w)


def random_group_element(rng: random.Random, lo: int = -5, hi: int = 5) -> list[list[int]]:
    """Uniform integer matrix with entries in [lo, hi], resampled until invertible."""
    while True:
        g = [[rng.randint(lo, hi) for _ in range(3)] for _ in range(3)]
        if det3(g) != 0:
            return g


def random_conic(rng: random.Random, lo: int = -5, hi: int = 5) -> Conic:
    return Conic.from_coords([rng.randint(lo, hi) for _ in range(6)])


# --- deriving the basis -------------------------------------------------------


def _pair_weights(basis: SymBasis) -> list[tuple[int, int, int]]:
    w = []
    for i, j in basis.positions:
        e = [0, 0, 0]
        e[i] += 1
        e[j] += 1
        w.append(tuple(e))
    return [tuple(a + b for a, b in zip(w[i], w[j])) for i, j in PAIRS]


def _weight_homogeneous(polys: Sequence[MPoly], weights) -> bool:
    for p in polys:
        seen = set()
        for exp, _ in p.items():
            seen.add(tuple(sum(k * weights[v][t] for v, k in enumerate(exp)) for t in range(3)))
            if len(seen) > 1:
                return False
    return True


def find_basis_ordering(samples: int = 24, seed: int = 0) -> list[SymBasis]:
    """Search all orderings and both scalings of the monomial basis of S^2 U.

    A candidate survives if (i) every listed generator is a weight vector
    for the induced torus weights on a..o and (ii) the six trace quadrics
    ``Tr wedge^2 phi`` of the cluster-algebra matrices, transported through
    Gamma in that basis, span the same space as the six extra I5 generators
    (tested exactly on seeded random traceless multiplication tensors).
    The Pluecker relations themselves are basis-independent and always
    match. Survivors are returned in lexicographic order of positions.
    """
    from hilbquad import equations, hilb4
    from hilbquad.linalg import RowSpace

    gens = equations.generators(equations.IdealLevel.I3)
    extras = equations.block(equations.IdealLevel.I5)
    rng = random.Random(seed)
    ms = [hilb4.random_traceless_m(rng) for _ in range(samples)]
    trace_rows = None
    out = []
    for scaling in ("entry", "monomial"):
        for perm in permutations(SYM_POSITIONS):
            basis = SymBasis(tuple(perm), scaling)
            if not _weight_homogeneous(gens, _pair_weights(basis)):
                continue
            if trace_rows is None:
                trace_rows = []
                for m in ms:
                    alg = hilb4.ClusterAlgebra((0, 0, 0), hilb4.theta(m), m)
                    trace_rows.append(hilb4.punctual_conditions(alg).quadratic)
                trace_rows = transpose(trace_rows)
            points = [hilb4.gamma(m, basis=basis).coords for m in ms]
            extra_rows = [[g.evaluate(p) for p in points] for g in extras]
            ext = RowSpace(extra_rows)
            if ext.rank == 6 and RowSpace(trace_rows) == ext:
                out.append(basis)
    return sorted(out, key=lambda b: (b.scaling != "entry", b.positions))
