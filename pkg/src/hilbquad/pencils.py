"""The eight PGL_3-orbits of pencils of conics.

Classification is exact: the discriminant cubic det(lam q1 + mu q2) has
rational repeated roots whenever it has any, so member ranks there are
computed over Q; when the cubic vanishes identically the rank-one members
are the common roots of the nine 2x2-minor quadratic forms.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from hilbquad.binary import (
    IDENTICALLY_ZERO,
    BinaryForm,
    binary_gcd,
    binary_root_structure,
    distinct_root_count,
    multiplicity_pattern,
)
from hilbquad.grassmann import Conic, Pencil, random_group_element
from hilbquad.linalg import det3, matrix_rank, minors2


class OrbitType(enum.Enum):
    O3 = "O3"
    O4 = "O4"
    O4P = "O4P"
    O5 = "O5"
    O6 = "O6"
    O6P = "O6P"
    O7 = "O7"
    O8 = "O8"

    @property
    def dimension(self) -> int:
        return int(self.value[1])

    @classmethod
    def parse(cls, name: str) -> OrbitType:
        key = name.strip().upper().replace("'", "P").replace("′", "P")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown orbit type {name!r}") from None


_NORMAL_FORMS = {
    OrbitType.O3: ("x^2", "x*y"),
    OrbitType.O4: ("x^2", "y^2"),
    OrbitType.O4P: ("x*y", "x*z"),
    OrbitType.O5: ("x^2", "y^2+x*z"),
    OrbitType.O6: ("x^2", "y*z"),
    OrbitType.O6P: ("x^2+y*z", "x*z"),
    OrbitType.O7: ("x^2+y^2", "x*z"),
    OrbitType.O8: ("x^2+y^2", "x^2+z^2"),
}


def normal_form(t: OrbitType) -> Pencil:
    return Pencil.parse(*_NORMAL_FORMS[t])


# cover relations: O_i -> O_j when O_j is open in Y_i \ O_i
HASSE_EDGES: dict[OrbitType, tuple[OrbitType, ...]] = {
    OrbitType.O8: (OrbitType.O7,),
    OrbitType.O7: (OrbitType.O6, OrbitType.O6P),
    OrbitType.O6: (OrbitType.O5,),
    OrbitType.O6P: (OrbitType.O5, OrbitType.O4P),
    OrbitType.O5: (OrbitType.O4,),
    OrbitType.O4: (OrbitType.O3,),
    OrbitType.O4P: (OrbitType.O3,),
    OrbitType.O3: (),
}


def closure(t: OrbitType) -> frozenset[OrbitType]:
    """Orbits contained in the closure of t (including t)."""
    seen = {t}
    stack = [t]
    while stack:
        for s in HASSE_EDGES[stack.pop()]:
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return frozenset(seen)


# --- classification ----------------------------------------------------------------


def discriminant(p: Pencil) -> BinaryForm:
    """det(lam q1 + mu q2) as a binary cubic, by interpolation at four points."""
    f = lambda lam, mu: det3(p.member(lam, mu).matrix)
    c0, c3 = f(1, 0), f(0, 1)
    s = f(1, 1) - c0 - c3
    t = f(1, -1) - c0 + c3
    return BinaryForm([c0, Fraction(s - t, 2), Fraction(s + t, 2), c3])


def minor_forms(p: Pencil) -> list[BinaryForm]:
    """The nine 2x2 minors of lam q1 + mu q2 as binary quadratic forms."""
    a = minors2(p.q1.matrix)
    b = minors2(p.q2.matrix)
    s = minors2(p.member(1, 1).matrix)
    return [BinaryForm([x, z - x - y, y]) for x, y, z in zip(a, b, s)]


@dataclass(frozen=True)
class ClassificationCertificate:
    discriminant: BinaryForm
    root_structure: object  # list[RootItem] or IDENTICALLY_ZERO
    repeated_root_rank: int | None = None
    rank_one_members: int | None = None

    def to_json(self) -> dict:
        rs = self.root_structure
        return {
            "discriminant": [str(c) for c in self.discriminant.coeffs],
            "discriminant_text": str(self.discriminant),
            "root_structure": rs if rs == IDENTICALLY_ZERO else [r.to_json() for r in rs],
            "repeated_root_rank": self.repeated_root_rank,
            "rank_one_members": self.rank_one_members,
        }


class CertificateError(ValueError):
    pass


def rederive(cert: ClassificationCertificate) -> OrbitType:
    """Re-run the decision tree on certificate data only."""
    if cert.root_structure == IDENTICALLY_ZERO:
        return {2: OrbitType.O4, 1: OrbitType.O3, 0: OrbitType.O4P}[cert.rank_one_members]
    pattern = multiplicity_pattern(cert.root_structure)
    if pattern == (1, 1, 1):
        return OrbitType.O8
    if pattern == (2, 1):
        return OrbitType.O7 if cert.repeated_root_rank == 2 else OrbitType.O6
    if pattern == (3,):
        return OrbitType.O6P if cert.repeated_root_rank == 2 else OrbitType.O5
    raise CertificateError(f"impossible multiplicity pattern {pattern}")


def classify(p: Pencil) -> tuple[OrbitType, ClassificationCertificate]:
    f = discriminant(p)
    rs = binary_root_structure(f)
    if rs == IDENTICALLY_ZERO:
        forms = minor_forms(p)
        g = binary_gcd(forms)
        count = 0 if g.degree == 0 else distinct_root_count(g)
        cert = ClassificationCertificate(f, rs, rank_one_members=count)
    else:
        repeated = [r for r in rs if r.multiplicity > 1]
        rank = None
        if repeated:
            (root,) = repeated  # a cubic has at most one repeated root, and it is rational
            lam, mu = root.point
            rank = matrix_rank(p.member(lam, mu).matrix)
        cert = ClassificationCertificate(f, rs, repeated_root_rank=rank)
    return rederive(cert), cert


def classify_type(p: Pencil) -> OrbitType:
    return classify(p)[0]


# --- sampling ------------------------------------------------------------------------


def sample(t: OrbitType, seed: int) -> Pencil:
    """g . normal_form(t) for a seeded integer g with entries in [-5, 5]."""
    rng = random.Random(seed)
    return normal_form(t).transform(random_group_element(rng))


def random_recombination(rng: random.Random, lo: int = -5, hi: int = 5) -> tuple[int, int, int, int]:
    while True:
        a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
        if a * d - b * c:
            return a, b, c, d


def parse_pencil(t1: str, t2: str) -> Pencil:
    return Pencil(Conic.parse(t1), Conic.parse(t2))
