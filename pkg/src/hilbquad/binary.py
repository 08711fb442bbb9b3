"""Binary forms f(lam, mu) and their exact root structure.

A binary form of degree d is stored as coefficients ``(c_0, ..., c_d)`` of
``c_k lam^(d-k) mu^k``. Projective roots are points ``(lam : mu)``.
Multiplicities come from repeated gcds with derivatives (Yun's square-free
decomposition); roots that are not rational are reported as conjugate
groups without being extracted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from hilbquad.poly import Scalar, as_scalar

# univariate helpers: coefficient lists, lowest degree first, no trailing zeros


def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _deg(p: list) -> int:
    return len(p) - 1


def _divmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in _trim(a)]
    b = [Fraction(x) for x in _trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a = _trim(a)
    return _trim(q), a


def _monic(p: list) -> list:
    p = _trim(p)
    if not p:
        return p
    lead = Fraction(p[-1])
    return [Fraction(x) / lead for x in p]


def upoly_gcd(a: Sequence, b: Sequence) -> list:
    """Monic gcd of two univariate polynomials over Q."""
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return _monic(a)


def _deriv(p: list) -> list:
    return _trim([i * p[i] for i in range(1, len(p))])


def squarefree_decomposition(p: Sequence) -> list[tuple[list, int]]:
    """Yun's algorithm: p = lc * prod a_i^i with a_i square-free and coprime.

    Returns ``[(a_i, i), ...]`` for the non-constant factors.
    """
    p = _monic(p)
    if _deg(p) < 1:
        return []
    out = []
    dp = _deriv(p)
    a = upoly_gcd(p, dp)
    b, _ = _divmod(p, a)
    c, _ = _divmod(dp, a)
    d = [x - y for x, y in _zip_pad(c, _deriv(b))]
    i = 1
    while _deg(b) >= 1:
        a = upoly_gcd(b, d)
        if _deg(a) >= 1:
            out.append((a, i))
        b, _ = _divmod(b, a)
        c, _ = _divmod(d, a)
        d = [x - y for x, y in _zip_pad(c, _deriv(b))]
        i += 1
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return zip(a, b)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def rational_roots(p: Sequence) -> list[Fraction]:
    """Distinct rational roots of a univariate polynomial (rational root test)."""
    p = _trim([Fraction(x) for x in p])
    roots = []
    while p and p[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        p = p[1:]
    if _deg(p) < 1:
        return roots
    den = 1
    for x in p:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in p]
    for cand_num in _divisors(ints[0]):
        for cand_den in _divisors(ints[-1]):
            for sign in (1, -1):
                r = Fraction(sign * cand_num, cand_den)
                if r not in roots and sum(c * r**k for k, c in enumerate(ints)) == 0:
                    roots.append(r)
    return roots


# --- binary forms -------------------------------------------------------------


@dataclass(frozen=True)
class BinaryForm:
    coeffs: tuple[Scalar, ...]

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", tuple(as_scalar(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __call__(self, lam, mu) -> Scalar:
        d = self.degree
        return as_scalar(sum(c * lam ** (d - k) * mu**k for k, c in enumerate(self.coeffs)))

    def mu_valuation(self) -> int:
        """Multiplicity of the root (1:0), i.e. the largest r with mu^r | f."""
        r = 0
        for c in self.coeffs:
            if c != 0:
                break
            r += 1
        return r

    def dehomogenized(self) -> list:
        """f(t, 1) as a univariate list (lowest degree first) in t = lam/mu."""
        return _trim(list(reversed(self.coeffs)))

    def __str__(self) -> str:
        d = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "*".join(
                s for s in ((f"lam^{d - k}" if d - k > 1 else "lam" if d - k == 1 else ""),
                            (f"mu^{k}" if k > 1 else "mu" if k == 1 else "")) if s
            )
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class RootItem:
    """A projective root with multiplicity.

    ``point`` is ``(lam, mu)`` normalized so the last nonzero entry is 1, or
    ``None`` for a group of ``count`` conjugate irrational roots, each of
    multiplicity ``multiplicity``.
    """

    point: tuple[Scalar, Scalar] | None
    multiplicity: int
    count: int = 1

    def to_json(self) -> dict:
        if self.point is None:
            return {"root": "irrational", "count": self.count, "multiplicity": self.multiplicity}
        return {"root": [str(self.point[0]), str(self.point[1])], "multiplicity": self.multiplicity}


IDENTICALLY_ZERO = "identically_zero"


def binary_root_structure(f: BinaryForm) -> str | list[RootItem]:
    """Exact projective root structure of a binary form.

    Returns :data:`IDENTICALLY_ZERO` or a list of :class:`RootItem` whose
    multiplicities (times counts) sum to the degree.
    """
    if f.is_zero():
        return IDENTICALLY_ZERO
    items: list[RootItem] = []
    r = f.mu_valuation()
    if r:
        items.append(RootItem((1, 0), r))
    g = f.dehomogenized()
    for factor, mult in squarefree_decomposition(g):
        rr = rational_roots(factor)
        for root in rr:
            items.append(RootItem((as_scalar(root), 1), mult))
        rest = _deg(factor) - len(rr)
        if rest:
            items.append(RootItem(None, mult, rest))
    return items


def multiplicity_pattern(structure) -> tuple[int, ...]:
    """Sorted (descending) multiplicities, one entry per distinct root."""
    if structure == IDENTICALLY_ZERO:
        return ()
    out = []
    for item in structure:
        out.extend([item.multiplicity] * item.count)
    return tuple(sorted(out, reverse=True))


def binary_gcd(forms: Sequence[BinaryForm]) -> BinaryForm:
    """Gcd of binary forms (all of one degree d), as a form of its own degree.

    Zero forms are ignored; the gcd of no nonzero forms raises ValueError.
    """
    nz = [f for f in forms if not f.is_zero()]
    if not nz:
        raise ValueError("gcd of zero forms is undefined")
    r = min(f.mu_valuation() for f in nz)
    g: list = []
    for f in nz:
        g = upoly_gcd(g, f.dehomogenized()) if g else _monic(f.dehomogenized())
    # g(t) has degree e; form = mu^r * mu^e g(lam/mu)
    return BinaryForm([0] * r + list(reversed(g)))


def distinct_root_count(f: BinaryForm) -> int:
    """Number of distinct projective roots over C (f nonzero)."""
    if f.is_zero():
        raise ValueError("zero form has infinitely many roots")
    return len(multiplicity_pattern(binary_root_structure(f)))
