"""Exact linear algebra over Q and GF(p).

Dense matrices are plain lists of rows. Sparse rows are ``dict[int, Scalar]``
keyed by column. Ranks over Q use fraction-free (Bareiss) elimination on
integer matrices; ranks over GF(p) go through :mod:`hilbquad.kernel`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from hilbquad import kernel
from hilbquad.poly import Scalar, as_scalar

Matrix = list[list[Scalar]]


@dataclass(frozen=True)
class ExactMatrix:
    """An immutable dense matrix of exact rationals."""

    rows: tuple[tuple[Scalar, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> ExactMatrix:
        rows = tuple(tuple(as_scalar(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rank(self, backend: str = "rational", prime: int | None = None) -> int:
        return matrix_rank(self.rows, backend=backend, prime=prime)


# --- rank -----------------------------------------------------------------


def _integer_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        r = [as_scalar(x) for x in r]
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination (exact)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    n, m = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if a[i][c]), -1)
        if piv < 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, n):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, m):
                    row[j] = (pv * row[j] - f * pr[j]) // prev
            else:
                for j in range(c + 1, m):
                    row[j] = (pv * row[j]) // prev
            row[c] = 0
        prev = pv
        r += 1
    return r


def rank_mod_p(rows: Iterable[Sequence], prime: int | None = None) -> int:
    p = kernel.default_prime() if prime is None else prime
    reduced = []
    for r in rows:
        row = []
        for x in r:
            x = as_scalar(x)
            if isinstance(x, Fraction):
                if x.denominator % p == 0:
                    raise ZeroDivisionError(f"denominator divisible by {p}")
                row.append(x.numerator * pow(x.denominator, -1, p) % p)
            else:
                row.append(x % p)
        reduced.append(row)
    return kernel.rank_mod_p(reduced, p)


def matrix_rank(M, backend: str = "rational", prime: int | None = None) -> int:
    """Rank of a dense matrix.

    ``backend="rational"`` is exact. ``backend="prime_field"`` (alias
    ``"prime"``) reduces modulo a large prime and returns a lower bound on the
    rational rank that is equal to it unless the prime divides some pivot.
    """
    if isinstance(M, ExactMatrix):
        M = M.rows
    rows = [list(r) for r in M]
    if not rows or not rows[0]:
        return 0
    if backend == "rational":
        return bareiss_rank(_integer_rows(rows))
    if backend in ("prime", "prime_field"):
        return rank_mod_p(rows, prime)
    raise ValueError(f"unknown rank backend {backend!r}")


def sparse_rank(rows: Sequence[dict[int, Scalar]], backend: str = "rational",
                prime: int | None = None) -> int:
    """Rank of a sparse matrix, splitting into independent column blocks first.

    Rows sharing no columns (transitively) form separate blocks whose ranks
    add up; graded matrices split into many small blocks this way.
    """
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in rows:
        cols = [c for c, v in row.items() if v]
        for c in cols:
            parent.setdefault(c, c)
        for c in cols[1:]:
            a, b = find(cols[0]), find(c)
            if a != b:
                parent[a] = b
    blocks: dict[int, list[dict[int, Scalar]]] = {}
    for row in rows:
        cols = [c for c, v in row.items() if v]
        if cols:
            blocks.setdefault(find(cols[0]), []).append(row)
    total = 0
    for brows in blocks.values():
        cols = sorted({c for r in brows for c in r})
        index = {c: i for i, c in enumerate(cols)}
        dense = []
        for r in brows:
            d = [0] * len(cols)
            for c, v in r.items():
                d[index[c]] = v
            dense.append(d)
        total += matrix_rank(dense, backend=backend, prime=prime)
    return total


# --- incremental row space --------------------------------------------------


class RowSpace:
    """Exact incremental echelon basis of a subspace of Q^n.

    Vectors are sparse dicts ``{column: value}`` or dense sequences.
    """

    def __init__(self, vectors: Iterable = ()):
        self._rows: dict[int, dict[int, Fraction]] = {}
        for v in vectors:
            self.add(v)

    @staticmethod
    def _sparse(v) -> dict[int, Fraction]:
        if isinstance(v, dict):
            return {k: Fraction(x) for k, x in v.items() if x}
        return {i: Fraction(x) for i, x in enumerate(v) if x}

    def reduce(self, v) -> dict[int, Fraction]:
        """Remainder of ``v`` after elimination against the basis."""
        v = self._sparse(v)
        heap = [c for c in v if c in self._rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            coef = v.get(c)
            if not coef:
                continue
            for k, x in self._rows[c].items():
                nv = v.get(k, 0) - coef * x
                if nv:
                    v[k] = nv
                    if k in self._rows and k not in seen:
                        heapq.heappush(heap, k)
                else:
                    v.pop(k, None)
        return v

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def add(self, v) -> bool:
        """Add ``v``; returns True if the dimension grew."""
        r = self.reduce(v)
        if not r:
            return False
        piv = min(r)
        inv = 1 / r[piv]
        self._rows[piv] = {k: x * inv for k, x in r.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def basis(self) -> list[dict[int, Fraction]]:
        return [dict(self._rows[c]) for c in sorted(self._rows)]

    def contains_space(self, other: RowSpace) -> bool:
        return all(self.contains(v) for v in other.basis())

    def __eq__(self, other) -> bool:
        if not isinstance(other, RowSpace):
            return NotImplemented
        return self.rank == other.rank and self.contains_space(other)


def span_rank(vectors: Iterable) -> int:
    return RowSpace(vectors).rank


# --- elimination over Q ------------------------------------------------------


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return [], []
    n, m = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if a[i][c]), -1)
        if piv < 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return [[as_scalar(x) for x in row] for row in a[:r]], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {v : M v = 0} over Q."""
    if ncols is None:
        ncols = len(rows[0])
    R, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -Fraction(row[f])
        basis.append([as_scalar(x) for x in v])
    return basis


class SingularMatrixError(ValueError):
    pass


def solve(A: Sequence[Sequence], b: Sequence) -> list[Scalar]:
    """Unique solution of the square system A x = b over Q."""
    n = len(A)
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    R, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrixError("system is singular")
    return [R[i][n] for i in range(n)]


def inverse(A: Sequence[Sequence]) -> Matrix:
    n = len(A)
    aug = [list(A[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in R]


def det(A: Sequence[Sequence]) -> Scalar:
    """Exact determinant (fraction-free elimination after clearing denominators)."""
    n = len(A)
    if n == 0:
        return 1
    dens = [1] * n
    rows = []
    for i, r in enumerate(A):
        r = [as_scalar(x) for x in r]
        d = 1
        for x in r:
            if isinstance(x, Fraction):
                d = lcm(d, x.denominator)
        dens[i] = d
        rows.append([int(x * d) for x in r])
    a = rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k]), -1)
            if piv < 0:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    total = Fraction(sign * a[n - 1][n - 1])
    for d in dens:
        total /= d
    return as_scalar(total)


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    Bt = list(zip(*B))
    return [[as_scalar(sum(x * y for x, y in zip(row, col))) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> list[Scalar]:
    return [as_scalar(sum(x * y for x, y in zip(row, v))) for row in A]


def transpose(A: Sequence[Sequence]) -> Matrix:
    return [list(r) for r in zip(*A)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_add(A, B) -> Matrix:
    return [[as_scalar(x + y) for x, y in zip(r, s)] for r, s in zip(A, B)]


def mat_sub(A, B) -> Matrix:
    return [[as_scalar(x - y) for x, y in zip(r, s)] for r, s in zip(A, B)]


def mat_scale(A, c) -> Matrix:
    return [[as_scalar(x * c) for x in r] for r in A]


def trace(A) -> Scalar:
    return as_scalar(sum(A[i][i] for i in range(len(A))))


def is_zero_matrix(A) -> bool:
    return all(x == 0 for r in A for x in r)


def adjugate3(A: Sequence[Sequence]) -> Matrix:
    """Adjugate of a 3x3 matrix (transpose of the cofactor matrix)."""
    (a, b, c), (d, e, f), (g, h, i) = A
    return [
        [as_scalar(e * i - f * h), as_scalar(c * h - b * i), as_scalar(b * f - c * e)],
        [as_scalar(f * g - d * i), as_scalar(a * i - c * g), as_scalar(c * d - a * f)],
        [as_scalar(d * h - e * g), as_scalar(b * g - a * h), as_scalar(a * e - b * d)],
    ]


def det3(A: Sequence[Sequence]) -> Scalar:
    (a, b, c), (d, e, f), (g, h, i) = A
    return as_scalar(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))


def cross(u: Sequence, v: Sequence) -> list[Scalar]:
    return [
        as_scalar(u[1] * v[2] - u[2] * v[1]),
        as_scalar(u[2] * v[0] - u[0] * v[2]),
        as_scalar(u[0] * v[1] - u[1] * v[0]),
    ]


def minors2(A: Sequence[Sequence]) -> list[Scalar]:
    """All 2x2 minors of a 3x3 matrix (rows i<j, columns k<l)."""
    out = []
    pairs = [(0, 1), (0, 2), (1, 2)]
    for i, j in pairs:
        for k, l in pairs:
            out.append(as_scalar(A[i][k] * A[j][l] - A[i][l] * A[j][k]))
    return out


def charpoly(A: Sequence[Sequence]) -> list[Scalar]:
    """Coefficients [1, c1, ..., cn] of det(t I - A) (Faddeev-LeVerrier)."""
    n = len(A)
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    I = identity(n)
    for k in range(1, n + 1):
        M = mat_add(matmul(A, M), mat_scale(I, coeffs[-1]))
        c = -Fraction(trace(matmul(A, M))) / k
        coeffs.append(c)
    return [as_scalar(c) for c in coeffs]
