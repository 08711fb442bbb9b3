"""sl_3 acting on U, U*, S^2 U, S^2 U*, W and quadrics on W.

Every representation is built from a gl_3 matrix X acting on U = <x, y, z>
by the induced derivation. W is the space of linear functions a..o on
wedge^2 S^2 U, so its action is minus the transpose of the action on
wedge^2 S^2 U; quadrics in a..o carry the derivation extended by the
Leibniz rule. Matrices act on column vectors and are exact integers.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from hilbquad.grassmann import BASIS, PAIRS
from hilbquad.linalg import RowSpace
from hilbquad.poly import MPoly, as_scalar, monomials


@dataclass(frozen=True, order=True)
class Weight:
    """The label (a, b) of S_{a,b}: highest weight (a-b) w1 + b w2."""

    a: int
    b: int

    def __post_init__(self):
        if not (self.a >= self.b >= 0):
            raise ValueError(f"invalid weight ({self.a}, {self.b}): need a >= b >= 0")

    @classmethod
    def from_dynkin(cls, h1: int, h2: int) -> Weight:
        return cls(h1 + h2, h2)

    def dynkin(self) -> tuple[int, int]:
        return (self.a - self.b, self.b)


def weyl_dim(w: Weight | tuple[int, int]) -> int:
    if not isinstance(w, Weight):
        w = Weight(*w)
    a, b = w.a, w.b
    return (a - b + 1) * (b + 1) * (a + 2) // 2


# --- the Lie algebra ------------------------------------------------------------------


def _e(i: int, j: int) -> np.ndarray:
    m = np.zeros((3, 3), dtype=np.int64)
    m[i, j] = 1
    return m


class LieBasisElement(enum.Enum):
    H1 = "H1"
    H2 = "H2"
    E12 = "E12"
    E23 = "E23"
    E13 = "E13"
    F21 = "F21"
    F32 = "F32"
    F31 = "F31"

    def matrix(self) -> np.ndarray:
        return _LIE_MATRICES[self]


_LIE_MATRICES = {
    LieBasisElement.H1: _e(0, 0) - _e(1, 1),
    LieBasisElement.H2: _e(1, 1) - _e(2, 2),
    LieBasisElement.E12: _e(0, 1),
    LieBasisElement.E23: _e(1, 2),
    LieBasisElement.E13: _e(0, 2),
    LieBasisElement.F21: _e(1, 0),
    LieBasisElement.F32: _e(2, 1),
    LieBasisElement.F31: _e(2, 0),
}

CARTAN = (LieBasisElement.H1, LieBasisElement.H2)
RAISING = (LieBasisElement.E12, LieBasisElement.E23, LieBasisElement.E13)
LOWERING = (LieBasisElement.F21, LieBasisElement.F32, LieBasisElement.F31)


# --- induced actions on each space ----------------------------------------------------


def _on_u(X):
    return np.array(X, dtype=np.int64)


def _on_u_dual(X):
    return -np.array(X, dtype=np.int64).T


def _on_s2u(X):
    X = np.array(X, dtype=np.int64)
    cols = []
    for k in range(6):
        E = np.array(BASIS.element(k), dtype=np.int64)
        cols.append([int(c) for c in BASIS.coords((X @ E + E @ X.T).tolist())])
    return np.array(cols, dtype=np.int64).T


def _on_s2u_dual(X):
    return -_on_s2u(X).T


def _on_wedge(S):
    """Derivation on wedge^2 V induced by S on V, in the basis e_i ^ e_j, i < j."""
    n = len(PAIRS)
    index = {p: t for t, p in enumerate(PAIRS)}
    out = np.zeros((n, n), dtype=np.int64)
    for col, (i, j) in enumerate(PAIRS):
        for k in range(S.shape[0]):
            for coeff, (p, q) in ((S[k, i], (k, j)), (S[k, j], (i, k))):
                if coeff == 0 or p == q:
                    continue
                sign = 1
                if p > q:
                    p, q, sign = q, p, -1
                out[index[(p, q)], col] += sign * coeff
    return out


def _on_wedge_s2u(X):
    return _on_wedge(_on_s2u(X))


def _on_w(X):
    return -_on_wedge_s2u(X).T


QUADRIC_MONOMIALS: tuple[tuple[int, ...], ...] = tuple(monomials(15, 2))
_QINDEX = {e: t for t, e in enumerate(QUADRIC_MONOMIALS)}


def _on_quadrics(X):
    A = _on_w(X)
    out = np.zeros((120, 120), dtype=np.int64)
    for col, e in enumerate(QUADRIC_MONOMIALS):
        idx = [t for t in range(15) for _ in range(e[t])]
        for pos in range(2):
            t, other = idx[pos], idx[1 - pos]
            for s in range(15):
                c = A[s, t]
                if c:
                    f = [0] * 15
                    f[s] += 1
                    f[other] += 1
                    out[_QINDEX[tuple(f)], col] += c
    return out


class RepTag(enum.Enum):
    U = "U"
    U_DUAL = "U*"
    S2U = "S2U"
    S2U_DUAL = "S2U*"
    W = "W"
    QUADRICS = "Quadrics(W*)"


_BUILDERS = {
    RepTag.U: _on_u,
    RepTag.U_DUAL: _on_u_dual,
    RepTag.S2U: _on_s2u,
    RepTag.S2U_DUAL: _on_s2u_dual,
    RepTag.W: _on_w,
    RepTag.QUADRICS: _on_quadrics,
}


class BracketError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class RepSpace:
    tag: RepTag
    dim: int
    action: dict  # LieBasisElement -> np.ndarray

    def rho(self, X) -> np.ndarray:
        """Action of an arbitrary gl_3 matrix."""
        return _BUILDERS[self.tag](X)

    def __getitem__(self, el: LieBasisElement) -> np.ndarray:
        return self.action[el]

    def bracket_defects(self) -> list[tuple[LieBasisElement, LieBasisElement]]:
        bad = []
        for x in LieBasisElement:
            for y in LieBasisElement:
                X, Y = x.matrix(), y.matrix()
                A, B = self.action[x], self.action[y]
                if not np.array_equal(A @ B - B @ A, self.rho(X @ Y - Y @ X)):
                    bad.append((x, y))
        return bad

    def weight(self, v: Sequence) -> tuple[int, int] | None:
        """Dynkin labels (H1, H2 eigenvalues) of a weight vector, else None."""
        v = [Fraction(x) for x in v]
        out = []
        for h in CARTAN:
            hv = _apply(self.action[h], v)
            k = next((t for t, x in enumerate(v) if x), None)
            if k is None:
                return None
            lam = hv[k] / v[k]
            if any(a != lam * b for a, b in zip(hv, v)):
                return None
            out.append(int(lam))
        return tuple(out)

    def basis_weights(self) -> list[tuple[int, int]]:
        return [(int(self.action[CARTAN[0]][i, i]), int(self.action[CARTAN[1]][i, i])) for i in range(self.dim)]

    def to_json(self) -> str:
        return json.dumps({
            "tag": self.tag.value,
            "dim": self.dim,
            "action": {el.value: self.action[el].tolist() for el in LieBasisElement},
        }, sort_keys=True)


@lru_cache(maxsize=None)
def build_rep(tag: RepTag | str) -> RepSpace:
    tag = RepTag(tag) if not isinstance(tag, RepTag) else tag
    action = {el: _BUILDERS[tag](el.matrix()) for el in LieBasisElement}
    rep = RepSpace(tag, action[LieBasisElement.H1].shape[0], action)
    bad = rep.bracket_defects()
    if bad:
        raise BracketError(f"sl3 relations fail in {tag.value} for {bad[:3]}")
    for h in CARTAN:
        A = action[h]
        if not np.array_equal(A, np.diag(np.diag(A))):
            raise BracketError(f"Cartan action on {tag.value} is not diagonal")
    return rep


def _apply(A: np.ndarray, v: Sequence) -> list:
    out = []
    for r in range(A.shape[0]):
        s = 0
        row = A[r]
        for c in np.flatnonzero(row):
            if v[c]:
                s += int(row[c]) * v[c]
        out.append(s)
    return out


# --- subspaces ---------------------------------------------------------------------------


class Subspace:
    def __init__(self, rep: RepSpace, vectors: Iterable[Sequence] = ()):
        self.rep = rep
        self._space = RowSpace()
        self.vectors: list[list] = []
        for v in vectors:
            self.add(v)

    def add(self, v: Sequence) -> bool:
        v = [as_scalar(x) for x in v]
        if len(v) != self.rep.dim:
            raise ValueError(f"vector of length {len(v)} in a space of dimension {self.rep.dim}")
        if self._space.add(v):
            self.vectors.append(v)
            return True
        return False

    @property
    def dim(self) -> int:
        return self._space.rank

    def contains(self, v: Sequence) -> bool:
        return self._space.contains(list(v))

    def contains_space(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.vectors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim == other.dim and self.contains_space(other)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.rep, self.vectors + other.vectors)


def is_stable(span: Subspace) -> bool:
    """Every basis element of sl_3 maps the span into itself."""
    for el in LieBasisElement:
        A = span.rep[el]
        for v in span.vectors:
            if not span.contains(_apply(A, v)):
                return False
    return True


class NotStabilizedError(RuntimeError):
    pass


def module_from_lowering(v: Sequence, rep: RepSpace, ops=LOWERING, max_rounds: int = 100) -> Subspace:
    """The smallest subspace containing v and closed under ``ops``."""
    if all(x == 0 for x in v):
        raise ValueError("cannot generate a module from the zero vector")
    span = Subspace(rep, [v])
    frontier = [list(v)]
    for _ in range(max_rounds):
        new = []
        for w in frontier:
            for el in ops:
                u = _apply(rep[el], w)
                if any(u) and span.add(u):
                    new.append(u)
        if not new:
            return span
        frontier = new
    raise NotStabilizedError(f"module generation did not stabilize after {max_rounds} rounds")


def module_from_highest_weight(v: Sequence, rep: RepSpace, max_rounds: int = 100) -> Subspace:
    return module_from_lowering(v, rep, LOWERING, max_rounds)


def module_from_lowest_weight(v: Sequence, rep: RepSpace, max_rounds: int = 100) -> Subspace:
    return module_from_lowering(v, rep, RAISING, max_rounds)


def is_highest_weight(v: Sequence, rep: RepSpace) -> bool:
    return all(not any(_apply(rep[el], v)) for el in RAISING)


def is_lowest_weight(v: Sequence, rep: RepSpace) -> bool:
    return all(not any(_apply(rep[el], v)) for el in LOWERING)


def module_generated(v: Sequence, rep: RepSpace) -> Subspace:
    """Module generated by an extremal weight vector, whichever end it is."""
    if is_highest_weight(v, rep):
        return module_from_highest_weight(v, rep)
    if is_lowest_weight(v, rep):
        return module_from_lowest_weight(v, rep)
    raise ValueError("vector is neither a highest nor a lowest weight vector")


# --- quadrics as vectors -------------------------------------------------------------------


def quadric_vector(p: MPoly) -> list:
    if p.nvars != 15 or (not p.is_zero() and (p.degree() != 2 or not p.is_homogeneous())):
        raise ValueError("expected a quadratic form in a..o")
    v = [0] * 120
    for e, c in p.items():
        v[_QINDEX[e]] = c
    return v


def vector_quadric(v: Sequence) -> MPoly:
    return MPoly(15, {e: c for e, c in zip(QUADRIC_MONOMIALS, v) if c})


def quadric_span(polys: Iterable[MPoly]) -> Subspace:
    return Subspace(build_rep(RepTag.QUADRICS), (quadric_vector(p) for p in polys))


def w_highest_weight_vector() -> list[int]:
    """The basis vector of W killed by all raising operators."""
    rep = build_rep(RepTag.W)
    for t in range(15):
        v = [int(s == t) for s in range(15)]
        if is_highest_weight(v, rep):
            return v
    raise AssertionError("W has no highest weight basis vector")


def top_quadric() -> list:
    """Square of the highest weight vector of W, of weight (6, 4)."""
    t = w_highest_weight_vector().index(1)
    x = MPoly.gens(15)
    return quadric_vector(x[t] * x[t])
