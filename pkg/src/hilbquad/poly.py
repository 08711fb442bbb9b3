"""Sparse multivariate polynomials with exact rational coefficients.

Polynomials are immutable maps from exponent tuples to nonzero coefficients.
Coefficients are :class:`fractions.Fraction` values, stored as plain ``int``
whenever the denominator is 1 (equality and hashing agree across the two).

The text format is the one used by computer algebra systems::

    >>> p = MPoly.parse("a*j-b*g+c*f", names="abcdefghijklmno")
    >>> p.to_text("abcdefghijklmno", order="lex")
    'a*j-b*g+c*f'
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Scalar = int | Fraction


def as_scalar(c) -> Scalar:
    """Normalize an exact number: Fractions with denominator 1 become ints."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return as_scalar(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return as_scalar(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def format_scalar(c: Scalar) -> str:
    c = as_scalar(c)
    return str(c)


class VariableCountError(ValueError):
    pass


class PolyParseError(ValueError):
    pass


class MPoly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Scalar] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise VariableCountError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = as_scalar(c)
                if c:
                    clean[tuple(exp)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> MPoly:
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> MPoly:
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c, nvars: int) -> MPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> MPoly:
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> MPoly:
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def gens(cls, nvars: int) -> list[MPoly]:
        return [cls.var(i, nvars) for i in range(nvars)]

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, exp: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(exp), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> MPoly:
        return MPoly._raw(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == d})

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * self.nvars, 0)

    # arithmetic -----------------------------------------------------------

    def _check(self, other: MPoly) -> None:
        if other.nvars != self.nvars:
            raise VariableCountError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            self._check(other)
            return other
        return MPoly.const(other, self.nvars)

    def __add__(self, other) -> MPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = as_scalar(s)
            else:
                out.pop(e, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> MPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MPoly:
        return (-self) + other

    def scale(self, c) -> MPoly:
        c = as_scalar(c)
        if not c:
            return MPoly.zero(self.nvars)
        return MPoly._raw(self.nvars, {e: as_scalar(v * c) for e, v in self._terms.items()})

    def __mul__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly._raw(self.nvars, {e: as_scalar(c) for e, c in out.items() if c})

    def __rmul__(self, other) -> MPoly:
        return self.__mul__(other)

    def __truediv__(self, c) -> MPoly:
        if isinstance(c, MPoly):
            return NotImplemented
        return self.scale(Fraction(1) / as_scalar(c))

    def __pow__(self, n: int) -> MPoly:
        if n < 0:
            raise ValueError("negative power")
        result = MPoly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def mul_monomial(self, exp: Sequence[int]) -> MPoly:
        return MPoly._raw(
            self.nvars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()}
        )

    # calculus and evaluation ---------------------------------------------

    def diff(self, i: int) -> MPoly:
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = as_scalar(c * e[i])
        return MPoly._raw(self.nvars, out)

    def __call__(self, *point):
        return self.evaluate(point[0] if len(point) == 1 and isinstance(point[0], (list, tuple)) else point)

    def evaluate(self, point: Sequence) -> Scalar:
        """Exact value at a point (sequence of exact numbers)."""
        if len(point) != self.nvars:
            raise VariableCountError(f"point has {len(point)} coordinates, expected {self.nvars}")
        total = 0
        for e, c in self._terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            total += t
        return as_scalar(total) if isinstance(total, (int, Fraction)) else total

    def substitute(self, images: Sequence[MPoly]) -> MPoly:
        """Compose: replace variable i by ``images[i]`` (all in a common ring)."""
        if len(images) != self.nvars:
            raise VariableCountError("need one image per variable")
        n = images[0].nvars
        powers: dict[tuple[int, int], MPoly] = {}

        def pw(i: int, k: int) -> MPoly:
            if (i, k) not in powers:
                powers[(i, k)] = images[i] ** k
            return powers[(i, k)]

        out = MPoly.zero(n)
        for e, c in self._terms.items():
            t = MPoly.const(c, n)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            out = out + t
        return out

    # ordering and text ---------------------------------------------------

    def sorted_terms(self, order: str = "grevlex") -> list[tuple[tuple[int, ...], Scalar]]:
        """Terms from largest to smallest monomial (variable 0 is the largest)."""
        if order == "grevlex":
            key = lambda ec: (sum(ec[0]), tuple(-x for x in reversed(ec[0])))
        elif order == "lex":
            key = lambda ec: ec[0]
        else:
            raise ValueError(f"unknown monomial order {order!r}")
        return sorted(self._terms.items(), key=key, reverse=True)

    def to_text(self, names: Sequence[str] | str | None = None, *, order: str = "grevlex",
                powers: str = "caret") -> str:
        """Render in computer-algebra syntax.

        ``powers="caret"`` writes ``x^2``; ``powers="repeat"`` writes ``x*x``
        (the style of the shipped ideal listings).
        """
        names = _names(names, self.nvars)
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms(order):
            factors = []
            for name, k in zip(names, exp):
                if k == 0:
                    continue
                if powers == "repeat":
                    factors.extend([name] * k)
                elif k == 1:
                    factors.append(name)
                else:
                    factors.append(f"{name}^{k}")
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not factors:
                body = format_scalar(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_scalar(mag) + "*" + "*".join(factors)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {self.to_text()!r})"

    @classmethod
    def parse(cls, text: str, names: Sequence[str] | str) -> MPoly:
        return _Parser(text, _names(names, None)).parse()


def _names(names, nvars):
    if names is None:
        return [f"x{i}" for i in range(nvars)]
    if isinstance(names, str):
        return list(names) if "," not in names else [s.strip() for s in names.split(",")]
    return list(names)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str, names: list[str]):
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self.n = len(names)
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> list[tuple[str, str]]:
        toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PolyParseError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
            num, name, op = m.groups()
            if num is not None:
                toks.append(("num", num))
            elif name is not None:
                if name not in self.index:
                    raise PolyParseError(f"unknown variable {name!r} in {text!r}")
                toks.append(("var", name))
            else:
                toks.append(("op", op))
            pos = m.end()
        return toks

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> MPoly:
        if not self.tokens:
            raise PolyParseError("empty polynomial")
        p = self.expr()
        if self.pos != len(self.tokens):
            raise PolyParseError(f"trailing input at token {self.peek()[1]!r}")
        return p

    def expr(self) -> MPoly:
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> MPoly:
        p = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if q.degree() > 0 or q.is_zero():
                    raise PolyParseError("division only by nonzero constants")
                p = p / q.constant_term()
        return p

    def unary(self) -> MPoly:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> MPoly:
        base = self.atom()
        if self.peek() in (("op", "^"), ("op", "**")):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise PolyParseError("exponent must be a non-negative integer")
            base = base ** int(val)
        return base

    def atom(self) -> MPoly:
        kind, val = self.take()
        if kind == "num":
            return MPoly.const(int(val), self.n)
        if kind == "var":
            return MPoly.var(self.index[val], self.n)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                raise PolyParseError("missing ')'")
            return p
        raise PolyParseError(f"unexpected token {val!r}")


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, in lex-descending order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def poly_arith(op: str, f: MPoly, g: MPoly | None = None, c=None) -> MPoly:
    """Dispatch helper: ``op`` is ``"add"``, ``"mul"`` or ``"scale"``."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(c)
    raise ValueError(f"unknown operation {op!r}")


def linear_form(coeffs: Iterable, nvars: int | None = None) -> MPoly:
    coeffs = list(coeffs)
    n = len(coeffs) if nvars is None else nvars
    out = {}
    for i, c in enumerate(coeffs):
        c = as_scalar(c)
        if c:
            e = [0] * n
            e[i] = 1
            out[tuple(e)] = c
    return MPoly._raw(n, out)
