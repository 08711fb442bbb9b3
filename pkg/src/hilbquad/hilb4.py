"""Length-four clusters in T = U^* and the cone over Gr(2, S^2 U).

A cluster algebra C + U is stored as a center ``c`` together with the pair
(a, m): the product of two linear functions u, v (taken relative to the
center) is ``a(u, v) * 1 + m(u, v)``. ``m`` is a 3x3x3 nested tuple with
``m[i][j][k]`` the x_k coefficient of m(x_i, x_j).

Covectors e, f, g of T are identified with x, y, z when elements of
S^2 U^* are written as conics, so that Gamma(m) lands in the same
Pluecker coordinates a..o as a pencil of conics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from hilbquad.binary import squarefree_decomposition
from hilbquad.grassmann import (
    BASIS,
    Conic,
    NotDecomposableError,
    PluckerVec,
    SymBasis,
    check_group_element,
    is_decomposable,
    wedge,
)
from hilbquad.linalg import (
    RowSpace,
    charpoly,
    det3,
    inverse,
    matmul,
    matvec,
    transpose,
)
from hilbquad.poly import MPoly, Scalar, as_scalar, monomials

Tensor = tuple[tuple[tuple[Scalar, ...], ...], ...]
Sym3 = tuple[tuple[Scalar, ...], ...]

_CYCLIC = ((1, 2), (2, 0), (0, 1))  # x -> f^g, y -> g^e, z -> e^f


class PlanarConfigurationError(ValueError):
    pass


class RepeatedPointError(ValueError):
    pass


class NonCommutingError(ValueError):
    pass


class NonAssociativeError(ValueError):
    pass


class AmbiguousSupportError(ValueError):
    pass


# --- tensors ---------------------------------------------------------------------


def _freeze_tensor(m) -> Tensor:
    return tuple(tuple(tuple(as_scalar(m[i][j][k]) for k in range(3)) for j in range(3)) for i in range(3))


def _freeze_sym(a) -> Sym3:
    return tuple(tuple(as_scalar(a[i][j]) for j in range(3)) for i in range(3))


def zero_tensor() -> Tensor:
    return _freeze_tensor([[[0] * 3 for _ in range(3)] for _ in range(3)])


def trace_vector(m) -> list[Scalar]:
    """The U^*-component t_j = sum_i m(x_i, x_j)[i]."""
    return [as_scalar(sum(m[i][j][i] for i in range(3))) for j in range(3)]


def is_symmetric_tensor(m) -> bool:
    return all(m[i][j][k] == m[j][i][k] for i in range(3) for j in range(3) for k in range(3))


def is_traceless(m) -> bool:
    return all(t == 0 for t in trace_vector(m))


# the 15 free coordinates of a traceless symmetric m: all (i <= j, k) except (u, u, u)
M_COORDS: tuple[tuple[int, int, int], ...] = tuple(
    (i, j, k) for i in range(3) for j in range(i, 3) for k in range(3) if not (i == j == k)
)


def m_from_coords(c: Sequence) -> Tensor:
    if len(c) != 15:
        raise ValueError("a traceless m has 15 coordinates")
    M = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j, k), v in zip(M_COORDS, c):
        M[i][j][k] = M[j][i][k] = Fraction(v)
    for u in range(3):
        M[u][u][u] = -sum(M[u][v][v] for v in range(3) if v != u)
    return _freeze_tensor(M)


def m_coords(m) -> tuple[Scalar, ...]:
    return tuple(as_scalar(m[i][j][k]) for i, j, k in M_COORDS)


def random_traceless_m(rng: random.Random, lo: int = -5, hi: int = 5) -> Tensor:
    return m_from_coords([rng.randint(lo, hi) for _ in range(15)])


def _mvec(m, u: Sequence, v: Sequence) -> list:
    """m(u, v) for vectors u, v in U."""
    return [sum(u[i] * v[j] * m[i][j][k] for i in range(3) for j in range(3) if u[i] and v[j])
            for k in range(3)]


def _aval(a, u: Sequence, v: Sequence):
    return sum(u[i] * a[i][j] * v[j] for i in range(3) for j in range(3))


_E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def theta(m) -> Sym3:
    """The bilinear form a forced by associativity.

    a(y, z) = -1/2 (tr_x m(x, m(y, z)) - tr_x m(y, m(x, z))).
    """
    a = [[Fraction(0)] * 3 for _ in range(3)]
    for y in range(3):
        for z in range(y, 3):
            s = Fraction(0)
            for x in range(3):
                s += _mvec(m, _E[x], _mvec(m, _E[y], _E[z]))[x]
                s -= _mvec(m, _E[y], _mvec(m, _E[x], _E[z]))[x]
            a[y][z] = a[z][y] = -s / 2
    return _freeze_sym(a)


# --- cluster algebras ----------------------------------------------------------------


@dataclass(frozen=True)
class ClusterAlgebra:
    center: tuple[Scalar, Scalar, Scalar]
    a: Sym3
    m: Tensor

    def __init__(self, center, a, m):
        object.__setattr__(self, "center", tuple(as_scalar(x) for x in center))
        object.__setattr__(self, "a", _freeze_sym(a))
        object.__setattr__(self, "m", _freeze_tensor(m))
        if any(self.a[i][j] != self.a[j][i] for i in range(3) for j in range(3)):
            raise ValueError("a must be symmetric")
        if not is_symmetric_tensor(self.m):
            raise ValueError("m must be symmetric in its two arguments")
        if not is_traceless(self.m):
            raise ValueError("m must be traceless")

    @classmethod
    def from_tensor(cls, m, center=(0, 0, 0)) -> ClusterAlgebra:
        return cls(center, theta(m), m)

    def product(self, i: int, j: int) -> tuple[Scalar, list[Scalar]]:
        """x_i * x_j = (constant, linear part) relative to the center."""
        return self.a[i][j], list(self.m[i][j])

    def centered(self) -> ClusterAlgebra:
        return ClusterAlgebra((0, 0, 0), self.a, self.m)

    def product_table(self) -> dict[str, str]:
        names = "xyz"
        out = {}
        for i in range(3):
            for j in range(i, 3):
                lin = MPoly(3, {tuple(int(t == k) for t in range(3)): self.m[i][j][k] for k in range(3)})
                p = lin + self.a[i][j]
                out[names[i] + "*" + names[j]] = p.to_text(names)
        return out

    def to_json(self) -> dict:
        return {
            "center": [str(x) for x in self.center],
            "a": [[str(x) for x in r] for r in self.a],
            "products": self.product_table(),
        }


@dataclass(frozen=True)
class PointConfig:
    points: tuple[tuple[Scalar, Scalar, Scalar], ...]

    def __init__(self, points: Sequence[Sequence]):
        pts = tuple(tuple(as_scalar(x) for x in p) for p in points)
        if len(pts) != 4 or any(len(p) != 3 for p in pts):
            raise ValueError("a configuration is four points of Q^3")
        object.__setattr__(self, "points", pts)

    @classmethod
    def parse(cls, text: str) -> PointConfig:
        """Parse ``"(-1,0,0);(0,-1,0);(0,0,-1);(1,1,1)"``."""
        pts = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise ValueError(f"malformed point {chunk!r}")
            pts.append([Fraction(s.strip()) for s in chunk[1:-1].split(",")])
        return cls(pts)

    def center(self) -> tuple[Scalar, ...]:
        return tuple(as_scalar(sum(Fraction(p[k]) for p in self.points) / 4) for k in range(3))

    def translate(self, v: Sequence) -> PointConfig:
        return PointConfig([[p[k] + v[k] for k in range(3)] for p in self.points])

    def transform(self, g: Sequence[Sequence]) -> PointConfig:
        return PointConfig([matvec(g, p) for p in self.points])

    def permute(self, perm: Sequence[int]) -> PointConfig:
        return PointConfig([self.points[i] for i in perm])

    def is_planar(self) -> bool:
        return omega(self) == 0


def omega(cfg: PointConfig) -> Scalar:
    p1, p2, p3, p4 = cfg.points
    return as_scalar(det3([p1, p2, p3]) - det3([p2, p3, p4]) + det3([p3, p4, p1]) - det3([p4, p1, p2]))


def _check_config(cfg: PointConfig) -> None:
    if len(set(cfg.points)) < 4:
        raise RepeatedPointError("configuration has repeated points")
    if omega(cfg) == 0:
        raise PlanarConfigurationError("configuration is planar (omega = 0)")


def algebra_from_points(cfg: PointConfig) -> ClusterAlgebra:
    """Product table of C[T]/I for four non-planar points, centered at their mean."""
    _check_config(cfg)
    c = cfg.center()
    q = [[Fraction(p[k]) - c[k] for k in range(3)] for p in cfg.points]
    ev_inv = inverse([[1, *p] for p in q])
    a = [[0] * 3 for _ in range(3)]
    m = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            coef = matvec(ev_inv, [p[i] * p[j] for p in q])
            a[i][j] = a[j][i] = coef[0]
            m[i][j] = m[j][i] = coef[1:]
    return ClusterAlgebra(c, a, m)


def transform_algebra(alg: ClusterAlgebra, g: Sequence[Sequence]) -> ClusterAlgebra:
    """The algebra of the cluster moved by p -> g p."""
    check_group_element(g)
    git = transpose(inverse(g))
    a = matmul(matmul(g, alg.a), transpose(g))
    m = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            v = _mvec(alg.m, g[i], g[j])
            m[i][j] = matvec(git, v)
    return ClusterAlgebra(matvec(g, alg.center), a, m)


# --- associativity -------------------------------------------------------------------


def c1_residuals(a, m) -> list[Scalar]:
    """a(x, m(y, z)) - a(y, m(x, z)) over basis triples."""
    out = []
    for x in range(3):
        for y in range(3):
            for z in range(3):
                out.append(as_scalar(_aval(a, _E[x], _mvec(m, _E[y], _E[z]))
                                     - _aval(a, _E[y], _mvec(m, _E[x], _E[z]))))
    return out


def c2_residuals(a, m) -> list[Scalar]:
    """m(x, m(y, z)) + a(y, z) x - m(y, m(x, z)) - a(x, z) y, flattened."""
    out = []
    for x in range(3):
        for y in range(3):
            for z in range(3):
                lhs = _mvec(m, _E[x], _mvec(m, _E[y], _E[z]))
                rhs = _mvec(m, _E[y], _mvec(m, _E[x], _E[z]))
                for k in range(3):
                    out.append(as_scalar(lhs[k] + a[y][z] * _E[x][k] - rhs[k] - a[x][z] * _E[y][k]))
    return out


def check_c1(a, m) -> bool:
    return all(r == 0 for r in c1_residuals(a, m))


def check_c2(a, m) -> bool:
    return all(r == 0 for r in c2_residuals(a, m))


def check_c3(m) -> bool:
    return check_c1(theta(m), m)


def check_c4(m) -> bool:
    return check_c2(theta(m), m)


# --- Gamma and pi ---------------------------------------------------------------------


def _monomial_conic(i: int, j: int) -> Conic:
    Q = [[Fraction(0)] * 3 for _ in range(3)]
    Q[i][j] += Fraction(1, 2)
    Q[j][i] += Fraction(1, 2)
    return Conic(Q)


def gamma(m, basis: SymBasis = BASIS) -> PluckerVec:
    """Gamma: S^2 U^* (x) U -> wedge^2 S^2 U^* on the tensor of m.

    The tensor is sum_i e_i^2 (x) m(x_i, x_i) + sum_{i<j} 2 e_i e_j (x) m(x_i, x_j);
    a vector x_k becomes e_b ^ e_c with (k, b, c) cyclic.
    """
    out = [Fraction(0)] * 15
    for i in range(3):
        for j in range(i, 3):
            for k in range(3):
                c = m[i][j][k]
                if not c:
                    continue
                b, d = _CYCLIC[k]
                if i == j:
                    w = wedge(_monomial_conic(i, b), _monomial_conic(i, d), basis).coords
                else:
                    w1 = wedge(_monomial_conic(i, b), _monomial_conic(j, d), basis).coords
                    w2 = wedge(_monomial_conic(j, b), _monomial_conic(i, d), basis).coords
                    w = [s + t for s, t in zip(w1, w2)]
                for t in range(15):
                    out[t] += c * w[t]
    return PluckerVec(out)


@lru_cache(maxsize=None)
def gamma_matrix(basis: SymBasis = BASIS) -> tuple[tuple[Scalar, ...], ...]:
    """15x15 matrix of Gamma from the coordinates :data:`M_COORDS` to a..o."""
    cols = []
    for t in range(15):
        e = [0] * 15
        e[t] = 1
        cols.append(gamma(m_from_coords(e), basis).coords)
    return tuple(tuple(r) for r in transpose(cols))


@lru_cache(maxsize=None)
def gamma_inverse(basis: SymBasis = BASIS) -> tuple[tuple[Scalar, ...], ...]:
    return tuple(tuple(r) for r in inverse(gamma_matrix(basis)))


def pi_points(cfg: PointConfig) -> PluckerVec:
    """(p12^2 ^ p13^2 + p13^2 ^ p14^2 + p14^2 ^ p12^2) / omega with p_ij = p_i + p_j - 2 p_0."""
    _check_config(cfg)
    c = cfg.center()
    p = cfg.points

    def sq(i, j):
        return Conic.square([p[i][k] + p[j][k] - 2 * c[k] for k in range(3)])

    s12, s13, s14 = sq(0, 1), sq(0, 2), sq(0, 3)
    total = wedge(s12, s13) + wedge(s13, s14) + wedge(s14, s12)
    return total.scale(Fraction(1) / omega(cfg))


GOLDEN_POINTS = PointConfig([(-1, 0, 0), (0, -1, 0), (0, 0, -1), (1, 1, 1)])


@lru_cache(maxsize=None)
def kappa() -> Fraction:
    """The scalar with pi_points = kappa * gamma(m), fixed on the reference configuration."""
    k = pi_points(GOLDEN_POINTS).proportional_to(gamma(algebra_from_points(GOLDEN_POINTS).m))
    if k is None or k == 0:
        raise RuntimeError("pi and Gamma are not proportional on the reference configuration")
    return k


# --- matrices and conditions -------------------------------------------------------------


@dataclass(frozen=True)
class MatrixRep:
    phi: tuple[tuple[tuple[Scalar, ...], ...], ...]

    def commutators(self) -> list[list[list[Scalar]]]:
        out = []
        for i, j in combinations(range(3), 2):
            A, B = self.phi[i], self.phi[j]
            AB, BA = matmul(A, B), matmul(B, A)
            out.append([[as_scalar(x - y) for x, y in zip(r, s)] for r, s in zip(AB, BA)])
        return out

    def commute(self) -> bool:
        return all(x == 0 for C in self.commutators() for r in C for x in r)

    def combination(self, coeffs: Sequence) -> list[list[Scalar]]:
        return [[as_scalar(sum(c * P[r][s] for c, P in zip(coeffs, self.phi))) for s in range(4)]
                for r in range(4)]


def matrices(alg: ClusterAlgebra) -> MatrixRep:
    """phi_u on the basis (1, x, y, z): phi_u(1) = x_u, phi_u(x_v) = a(u, v) + m(u, v)."""
    phis = []
    for u in range(3):
        M = [[Fraction(0)] * 4 for _ in range(4)]
        M[u + 1][0] = Fraction(1)
        for v in range(3):
            M[0][v + 1] = alg.a[u][v]
            for k in range(3):
                M[k + 1][v + 1] = alg.m[u][v][k]
        phis.append(tuple(tuple(as_scalar(x) for x in r) for r in M))
    return MatrixRep(tuple(phis))


COMBINATIONS: tuple[tuple[int, int, int], ...] = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1)
)


@dataclass(frozen=True)
class PunctualConditions:
    linear: tuple[Scalar, ...]
    quadratic: tuple[Scalar, ...]
    higher: tuple[Scalar, ...] = field(default=())

    def all_zero(self) -> bool:
        return all(x == 0 for x in self.linear + self.quadratic + self.higher)


def punctual_conditions(alg: ClusterAlgebra) -> PunctualConditions:
    """Traces, second elementary symmetric functions, then e3 and det.

    The quadratic and higher values are taken on phi_1, phi_2, phi_3 and on
    the pairwise sums, in the order of :data:`COMBINATIONS`.
    """
    rep = matrices(alg)
    linear, quad, higher = [], [], []
    for i in range(3):
        linear.append(as_scalar(sum(rep.phi[i][r][r] for r in range(4))))
    for w in COMBINATIONS:
        cp = charpoly(rep.combination(w))
        quad.append(as_scalar(cp[2]))
        higher.extend([as_scalar(-cp[3]), as_scalar(cp[4])])
    return PunctualConditions(tuple(linear), tuple(quad), tuple(higher))


def is_nilpotent(rep: MatrixRep) -> bool:
    for P in rep.phi:
        M = [list(r) for r in P]
        for _ in range(3):
            M = matmul(M, P)
        if any(x != 0 for r in M for x in r):
            return False
    return True


# --- support -------------------------------------------------------------------------------


@dataclass(frozen=True)
class SupportItem:
    point: tuple[complex | float, ...]
    multiplicity: int

    def to_json(self) -> dict:
        pt = [x if isinstance(x, float) else [x.real, x.imag] for x in self.point]
        return {"point": pt, "multiplicity": self.multiplicity}


def _clean(z: complex, tol: float) -> complex | float:
    return float(z.real) if abs(z.imag) <= tol else complex(z)


def support(rep: MatrixRep, tol: float = 1e-8, *, center: Sequence = (0, 0, 0),
            seed: int = 0, attempts: int = 8) -> list[SupportItem]:
    """Joint spectrum of commuting phi_1, phi_2, phi_3.

    Multiplicities are exact (square-free decomposition of the characteristic
    polynomial of a seeded integer combination L); the points are floating
    point: the trace of each phi_i on a generalized eigenspace of L divided
    by its dimension. If L merges two support points the next combination
    in the seeded sequence is tried; after ``attempts`` failures the
    ambiguity is reported.
    """
    if not rep.commute():
        raise NonCommutingError("matrices do not commute")
    rng = random.Random(seed)
    last: AmbiguousSupportError | None = None
    for _ in range(attempts):
        coeffs = [rng.randint(1, 97) for _ in range(3)]
        try:
            return _support_for(rep, coeffs, tol, center)
        except AmbiguousSupportError as exc:
            last = exc
    raise AmbiguousSupportError(f"no separating combination found: {last}")


def _support_for(rep: MatrixRep, coeffs: Sequence[int], tol: float, center: Sequence) -> list[SupportItem]:
    L = rep.combination(coeffs)
    univ = list(reversed(charpoly(L)))
    Ln = np.array([[float(x) for x in r] for r in L], dtype=complex)
    phis = [np.array([[float(x) for x in r] for r in P], dtype=complex) for P in rep.phi]
    items: list[SupportItem] = []
    for factor, mult in squarefree_decomposition(univ):
        coeffs_desc = [float(x) for x in reversed(factor)]
        for lam in np.roots(coeffs_desc) if len(coeffs_desc) > 1 else []:
            N = np.linalg.matrix_power(Ln - lam * np.eye(4), mult)
            _, s, vh = np.linalg.svd(N)
            basis = vh[4 - mult:].conj().T
            if mult < 4 and s[3 - mult] <= tol * max(1.0, s[0]):
                raise AmbiguousSupportError("generalized eigenspace has unexpected dimension")
            point = []
            for P in phis:
                R = basis.conj().T @ P @ basis
                mean = np.trace(R) / mult
                # a single joint eigenvalue on this block iff (R - mean)^mult vanishes;
                # eigenvalue spread itself is ill-conditioned for non-reduced points
                nil = np.linalg.matrix_power(R - mean * np.eye(mult), mult)
                if np.linalg.norm(nil) > tol * (1.0 + np.linalg.norm(R)) ** mult:
                    raise AmbiguousSupportError("combination does not separate the support")
                point.append(mean)
            items.append(SupportItem(tuple(_clean(complex(x + c), tol) for x, c in zip(point, center)), mult))
    if sum(it.multiplicity for it in items) != 4:
        raise AmbiguousSupportError("multiplicities do not sum to 4")
    for i, it in enumerate(items):
        for jt in items[i + 1:]:
            if all(abs(complex(a) - complex(b)) <= tol for a, b in zip(it.point, jt.point)):
                raise AmbiguousSupportError("two support points agree within tolerance")
    return sorted(items, key=lambda it: (-it.multiplicity, [abs(x) for x in it.point]))


# --- tensors <-> algebras ------------------------------------------------------------------


def tensor_to_algebra(v: PluckerVec, basis: SymBasis = BASIS) -> ClusterAlgebra:
    """The centered cluster algebra of a point on the cone over the Grassmannian."""
    if not is_decomposable(v):
        raise NotDecomposableError("tensor does not satisfy the Pluecker relations")
    m = m_from_coords(matvec(gamma_inverse(basis), v.coords))
    return ClusterAlgebra.from_tensor(m)


def normal_forms(alg: ClusterAlgebra) -> dict[tuple[int, ...], list[Scalar]]:
    """Reduction of every monomial of degree <= 3 in x, y, z to (1, x, y, z)."""
    rep = matrices(alg)
    out: dict[tuple[int, ...], list[Scalar]] = {(0, 0, 0): [1, 0, 0, 0]}
    for d in range(1, 4):
        for e in monomials(3, d):
            i = next(t for t in range(3) if e[t])
            prev = tuple(x - (t == i) for t, x in enumerate(e))
            out[e] = [as_scalar(x) for x in matvec(rep.phi[i], out[prev])]
    return out


def ideal_from_algebra(alg: ClusterAlgebra) -> list[MPoly]:
    """The six quadrics x_i x_j - (a(x_i, x_j) + m(x_i, x_j)) generating the ideal.

    The kernel of the evaluation map on polynomials of degree <= 3 is
    checked to have dimension 16 (a four-dimensional quotient).
    """
    if not matrices(alg).commute():
        raise NonAssociativeError("multiplication is not associative")
    nf = normal_forms(alg)
    rows = list(nf.values())
    if RowSpace(rows).rank != 4 or len(rows) - RowSpace(rows).rank != 16:
        raise NonAssociativeError("degree <= 3 quotient is not four-dimensional")
    gens = []
    for e in monomials(3, 2):
        c = nf[e]
        terms = {e: 1, (0, 0, 0): -c[0]}
        for k in range(3):
            lin = tuple(int(t == k) for t in range(3))
            terms[lin] = -c[k + 1]
        gens.append(MPoly(3, terms))
    return gens


def quotient_dimension(gens: Sequence[MPoly], degree: int = 3) -> int:
    """dim of (polys of degree <= degree) / (multiples of gens within that degree)."""
    mons = [e for d in range(degree + 1) for e in monomials(3, d)]
    index = {e: t for t, e in enumerate(mons)}
    space = RowSpace()
    for g in gens:
        for d in range(degree - g.degree() + 1):
            for mu in monomials(3, d):
                h = g.mul_monomial(mu)
                row = [0] * len(mons)
                for e, c in h.items():
                    row[index[e]] = c
                space.add(row)
    return len(mons) - space.rank


def evaluate_ideal(gens: Sequence[MPoly], point: Sequence) -> list[Scalar]:
    return [g.evaluate(point) for g in gens]


def curvilinear_algebra(v1: Sequence, v2: Sequence, v3: Sequence) -> ClusterAlgebra:
    """The punctual cluster cut out by the curve germ t v1 + t^2 v2 + t^3 v3 modulo t^4.

    Requires v1, v2, v3 linearly independent (otherwise the cluster is planar).
    """
    if det3([v1, v2, v3]) == 0:
        raise PlanarConfigurationError("curve germ spans a plane")
    gam = [[0, v1[i], v2[i], v3[i]] for i in range(3)]

    def mul(p, q):
        return [sum(p[s] * q[n - s] for s in range(n + 1)) for n in range(4)]

    # columns: 1, gamma_x, gamma_y, gamma_z in the basis 1, t, t^2, t^3
    basis_inv = inverse(transpose([[1, 0, 0, 0], *gam]))
    a = [[0] * 3 for _ in range(3)]
    m = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            coef = matvec(basis_inv, mul(gam[i], gam[j]))
            a[i][j] = a[j][i] = coef[0]
            m[i][j] = m[j][i] = coef[1:]
    return ClusterAlgebra((0, 0, 0), a, m)
