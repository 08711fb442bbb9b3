"""The nine acceptance checks, runnable as suites with a text or JSON report.

Each check returns a :class:`CheckResult`. Reports contain no timings so that
two runs with the same seed produce identical output; runtime bounds are
enforced inside the checks and elapsed times go to stderr.
"""

from __future__ import annotations

import json
import random
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Mapping, Sequence

from hilbquad import equations as eq
from hilbquad import hilb4, pencils, rep
from hilbquad.equations import IdealLevel
from hilbquad.grassmann import (
    VARIABLES,
    Conic,
    Pencil,
    PluckerVec,
    act,
    is_decomposable,
    random_conic,
    random_group_element,
    wedge,
)
from hilbquad.linalg import det3, matrix_rank, matvec
from hilbquad.pencils import OrbitType
from hilbquad.poly import MPoly


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    expected: str
    actual: str
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name}: expected {self.expected}; got {self.actual}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "expected": self.expected, "actual": self.actual, "details": self.details}


# --- ideal sources ----------------------------------------------------------------------


class IdealSet:
    """Generator blocks as text; the default is the compiled-in generator listing."""

    def __init__(self, blocks: Mapping[IdealLevel, Sequence[str]] | None = None):
        self.blocks = {lv: tuple(eq.block_text(lv)) for lv in eq.LEVELS}
        if blocks:
            for lv, gens in blocks.items():
                self.blocks[lv] = tuple(gens)
        self._parsed: dict[IdealLevel, list[MPoly]] = {}

    @classmethod
    def from_json(cls, text: str) -> IdealSet:
        """``{"I8": [...], "I5": [...], ...}`` with per-level extra generators.

        Keys may be omitted; missing levels keep the default data.
        """
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("ideal override must be a JSON object keyed by level")
        return cls({IdealLevel.parse(k): [str(s) for s in v] for k, v in data.items()})

    def block(self, level: IdealLevel) -> list[MPoly]:
        if level not in self._parsed:
            self._parsed[level] = [MPoly.parse(s, VARIABLES) for s in self.blocks[level]]
        return self._parsed[level]

    def generators(self, level: IdealLevel) -> list[MPoly]:
        out: list[MPoly] = []
        for lv in eq.LEVELS:
            out.extend(self.block(lv))
            if lv is level:
                return out
        raise AssertionError(level)


DEFAULT_IDEALS = IdealSet()


def _normalize(s: str) -> str:
    return re.sub(r"\s+", "", s)


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def _elapsed(t0: float, name: str) -> float:
    dt = time.perf_counter() - t0
    print(f"# {name}: {dt:.2f} s", file=sys.stderr)
    return dt


# --- 1. Generator listing fidelity --------------------------------------------------------------


def check_listing(ideals: IdealSet = DEFAULT_IDEALS, seed: int = 0) -> CheckResult:
    t0 = time.perf_counter()
    counts = [len(ideals.generators(lv)) for lv in eq.LEVELS]
    mismatches = []
    for lv in eq.LEVELS:
        emitted = [eq.format_generator(p) for p in ideals.block(lv)]
        reference = list(eq.block_text(lv))
        if len(emitted) != len(reference):
            mismatches.append(f"{lv.value}: {len(emitted)} generators vs {len(reference)}")
            continue
        for k, (a, b) in enumerate(zip(emitted, reference)):
            if _normalize(a) != _normalize(b):
                mismatches.append(f"{lv.value}[{k}]: {a} != {b}")
    fast = _elapsed(t0, "listing") < 1.0
    ok = counts == [15, 21, 45, 60] and not mismatches and fast
    return CheckResult(1, "Generator listing fidelity", ok, "counts 15/21/45/60, token-identical, < 1 s",
                       f"counts {'/'.join(map(str, counts))}, {len(mismatches)} mismatched generators"
                       + ("" if fast else ", too slow"), mismatches[:5])


# --- 2. Hilbert functions ------------------------------------------------------------------


EXPECTED_HF = {
    IdealLevel.I5: (1, 15, 99, 408, 1251),
    IdealLevel.I4: (1, 15, 75, 235, 570),
    IdealLevel.I3: (1, 15, 60, 154, 315),
}


def check_hilbert(ideals: IdealSet = DEFAULT_IDEALS, seed: int = 0) -> CheckResult:
    details = []
    ok = True
    t0 = time.perf_counter()
    actual = {}
    for lv, want in EXPECTED_HF.items():
        got = tuple(eq.hilbert_function_of(ideals.generators(lv), d) for d in range(5))
        series = tuple(eq.series_coeff(eq.HILBERT_SERIES[lv], d) for d in range(5))
        actual[lv] = got
        if got != want or series != want:
            ok = False
            details.append(f"{lv.value}: computed {got}, series {series}, expected {want}")
    t_rat = _elapsed(t0, "hilbert rational")
    t0 = time.perf_counter()
    for lv, want in EXPECTED_HF.items():
        got = tuple(eq.hilbert_function_of(ideals.generators(lv), d, backend="prime") for d in range(5))
        if got != want:
            ok = False
            details.append(f"{lv.value} mod p: {got}")
    t_prime = _elapsed(t0, "hilbert prime")
    if t_rat >= 120 or t_prime >= 10:
        ok = False
        details.append("runtime bound exceeded")
    actual_text = "; ".join(f"{lv.value} {','.join(map(str, v))}" for lv, v in actual.items())
    expected_text = "; ".join(f"{lv.value} {','.join(map(str, v))}" for lv, v in EXPECTED_HF.items())
    return CheckResult(2, "Hilbert functions d=0..4", ok, expected_text, actual_text, details)


# --- 3. degree constants ------------------------------------------------------------------


def _incidence_pencil(ell: Sequence, m1: Sequence, m2: Sequence) -> Pencil:
    """<ell * m1, ell * m2> for linear forms given by coefficient vectors."""
    def prod(u, v):
        return Conic([[Fraction(u[i] * v[j] + u[j] * v[i], 2) for j in range(3)] for i in range(3)])
    return Pencil(prod(ell, m1), prod(ell, m2))


def check_degrees(ideals: IdealSet = DEFAULT_IDEALS, seed: int = 0) -> CheckResult:
    details = []
    degrees = {lv.value: eq.HILBERT_SERIES[lv].degree() for lv in EXPECTED_HF}
    ok = degrees == {"I5": 56, "I4": 21, "I3": 18}
    # Y4' is P(U) x P(U*) embedded by O(2,1): check the bidegree of the parametrization
    rng = _rng(seed, "degrees")
    bidegree_ok = True
    for _ in range(10):
        ell = [rng.randint(-4, 4) or 1 for _ in range(3)]
        m1 = [rng.randint(-4, 4) for _ in range(3)]
        m2 = [rng.randint(-4, 4) for _ in range(3)]
        try:
            base = _incidence_pencil(ell, m1, m2).wedge()
        except ValueError:
            continue
        twice_ell = _incidence_pencil([2 * c for c in ell], m1, m2).wedge()
        twice_plane = _incidence_pencil(ell, [2 * c for c in m1], m2).wedge()
        if twice_ell != base.scale(4) or twice_plane != base.scale(2):
            bidegree_ok = False
    y4p = eq.y4prime_degree()
    # the S_{4,0} block together with I8 vanishes exactly on the closure of O4'
    i8 = ideals.block(IdealLevel.I8)
    x3 = ideals.block(IdealLevel.I3)
    profile_ok = True
    for t in OrbitType:
        for s in range(5):
            v = pencils.sample(t, 1000 * seed + s).wedge()
            vanishes = all(g.evaluate(v.coords) == 0 for g in i8 + x3)
            if vanishes != (t in pencils.closure(OrbitType.O4P)):
                profile_ok = False
                details.append(f"S40 profile wrong on {t.value} sample {s}")
    ok = ok and bidegree_ok and y4p == 24 and profile_ok
    return CheckResult(3, "Degree constants", ok, "56, 21, 18; Y4' degree 24 with I8+S40 zero set = closure(O4')",
                       f"{degrees['I5']}, {degrees['I4']}, {degrees['I3']}; Y4' degree {y4p}, "
                       f"bidegree (2,1) {'ok' if bidegree_ok else 'wrong'}, "
                       f"S40 profile {'ok' if profile_ok else 'wrong'}", details)


# --- 4. representation theory ----------------------------------------------------------------


DECOMPOSITION = {(6, 4): 60, (4, 3): 24, (4, 0): 15, (3, 1): 15, (2, 2): 6}


def check_representations(ideals: IdealSet = DEFAULT_IDEALS, seed: int = 0) -> CheckResult:
    t0 = time.perf_counter()
    details = []
    brackets_ok = True
    for tag in rep.RepTag:
        try:
            r = rep.build_rep(tag)
        except rep.BracketError as exc:
            brackets_ok = False
            details.append(str(exc))
            continue
        if r.bracket_defects():
            brackets_ok = False
    stable = {}
    for lv in eq.LEVELS:
        stable[lv.value] = rep.is_stable(rep.quadric_span(ideals.block(lv)))
    weyl = {w: rep.weyl_dim(w) for w in DECOMPOSITION}
    weyl_ok = weyl == DECOMPOSITION and sum(weyl.values()) == 120 and rep.weyl_dim((3, 2)) == 15
    quadrics = rep.build_rep(rep.RepTag.QUADRICS)
    pv = rep.quadric_vector(eq.p_quadric([1, 0, 0], [0, 1, 0]))
    qv = rep.quadric_vector(eq.q_quadric([1, 0, 0], [0, 1, 0], [0, 0, 1]))
    pmod = rep.module_generated(pv, quadrics)
    qmod = rep.module_generated(qv, quadrics)
    span = lambda lv: rep.quadric_span(ideals.generators(lv))
    psi_ok = rep.quadric_span(eq.psi_quadrics()) + rep.quadric_span(ideals.block(IdealLevel.I8)) == span(IdealLevel.I5)
    q_ok = qmod + span(IdealLevel.I5) == span(IdealLevel.I4)
    p_ok = pmod + span(IdealLevel.I4) == span(IdealLevel.I3)
    top = rep.module_from_highest_weight(rep.top_quadric(), quadrics)
    total = (top + span(IdealLevel.I3)).dim
    dims_ok = pmod.dim == 15 and qmod.dim == 24 and top.dim == 60 and span(IdealLevel.I3).dim == 60
    fast = _elapsed(t0, "representations") < 60
    ok = brackets_ok and all(stable.values()) and weyl_ok and dims_ok and psi_ok and q_ok and p_ok \
        and total == 120 and fast
    unstable = [k for k, v in stable.items() if not v]
    actual = (f"brackets {'ok' if brackets_ok else 'FAIL'}, unstable blocks {unstable or 'none'}, "
              f"weyl sum {sum(weyl.values())}, P-module {pmod.dim}, Q-module {qmod.dim}, "
              f"span matches Psi/Q/P {psi_ok}/{q_ok}/{p_ok}, total {total}")
    return CheckResult(4, "Representation theory", ok,
                       "brackets ok, all blocks stable, 60+24+15+15+6=120, modules 15 and 24 matching",
                       actual, details)


# --- 5. orbits ------------------------------------------------------------------------------


def check_orbits(ideals: IdealSet = DEFAULT_IDEALS, seed: int = 0) -> CheckResult:
    details = []
    nf_ok = all(pencils.classify_type(pencils.normal_form(t)) is t for t in OrbitType)
    roundtrip_bad = 0
    for t in OrbitType:
        for s in range(50):
            if pencils.classify_type(pencils.sample(t, 50 * seed + s)) is not t:
                roundtrip_bad += 1
                details.append(f"{t.value} seed {s}")
    rng = _rng(seed, "orbits")
    invariance_bad = 0
    types = list(OrbitType)
    for k in range(100):
        t = types[k % len(types)]
        p = pencils.normal_form(t).transform(random_group_element(rng))
        q = p.transform(random_group_element(rng)).recombine(*pencils.random_recombination(rng))
        if pencils.classify_type(q) is not t:
            invariance_bad += 1
        cert = pencils.classify(q)[1]
        if pencils.rederive(cert) is not t:
            invariance_bad += 1
    ok = nf_ok and roundtrip_bad == 0 and invariance_bad == 0
    return CheckResult(5, "Orbit classification", ok, "8/8 normal forms, 400/400 round-trips, 0 invariance failures",
                       f"{'8/8' if nf_ok else 'normal form mismatch'}, {400 - roundtrip_bad}/400 round-trips, "
                       f"{invariance_bad} invariance failures", details[:5])


# --- 6. synthetic equations ------------------------------------------------------------------


def check_synthetic(ideals: IdealSet = DEFAULT_IDEALS, seed: int = 0) -> CheckResult:
    q = Conic.parse
    b1 = eq.psi(q("x^2"), q("y^2+x*z")).is_zero()
    b2 = not eq.psi(q("x^2"), q("y*z")).is_zero()
    # u = x^y, v = x^z; (x^y)^(x^z) = x (x) (x^y^z), so 3 (u^v)^2 / 8 = 3/8 x^2
    b3 = eq.psi(q("x*y"), q("x*z")) == eq.square_of([1, 0, 0], "S2U", 2).scale(Fraction(3, 8))
    on = {t: pencils.normal_form(t) for t in OrbitType}
    p_zero = {t: eq.p_polynomial(p.q1, p.q2).is_zero() for t, p in on.items()}
    q_zero = {t: eq.q_polynomial(p.q1, p.q2).is_zero() for t, p in on.items()}
    p_o3, q_o3, q_o4 = p_zero[OrbitType.O3], q_zero[OrbitType.O3], q_zero[OrbitType.O4]
    p_o4p = p_zero[OrbitType.O4P]
    ok = b1 and b2 and b3 and p_o3 and q_o3 and q_o4
    p_set = ",".join(t.value for t, z in p_zero.items() if z)
    q_set = ",".join(t.value for t, z in q_zero.items() if z)
    return CheckResult(6, "Synthetic equations", ok,
                       "Psi(x2^(y2+xz))=0, Psi(x2^yz)!=0, Psi(xy^xz)=3(u^v)^2/8, P=0 on O3, Q=0 on O3,O4",
                       f"{b1}, {b2}, {b3}; P identically zero on {p_set}; Q identically zero on {q_set}",
                       [f"P identically zero on O4': {p_o4p}"])


# --- 7. golden example ------------------------------------------------------------------------


def check_golden(ideals: IdealSet = DEFAULT_IDEALS, seed: int = 0) -> CheckResult:
    t0 = time.perf_counter()
    alg = hilb4.algebra_from_points(hilb4.GOLDEN_POINTS)
    h = Fraction(1, 2)
    table_ok = (alg.a[0][0] == h and alg.a[0][1] == Fraction(1, 4)
                and list(alg.m[0][0]) == [-h, h, h] and list(alg.m[0][1]) == [Fraction(1, 4)] * 3)
    table_ok = table_ok and all(alg.a[i][i] == h for i in range(3)) and all(
        alg.a[i][j] == Fraction(1, 4) for i in range(3) for j in range(3) if i != j)
    theta_ok = hilb4.theta(alg.m) == alg.a
    g4 = hilb4.gamma(alg.m).scale(4)
    c = Conic.parse
    hh = "(x+y+z)"
    display = wedge(c(f"{hh}*x-{hh}*y+x*z-y*z"), c(f"{hh}*y-{hh}*z+x*y-x*z"))
    sq = [c("(x+y)^2"), c("(y+z)^2"), c("(z+x)^2")]
    squares = wedge(sq[0], sq[1]) + wedge(sq[1], sq[2]) + wedge(sq[2], sq[0])
    kappa = hilb4.kappa()
    pi_ok = hilb4.pi_points(hilb4.GOLDEN_POINTS) == hilb4.gamma(alg.m).scale(kappa)
    fast = _elapsed(t0, "golden") < 1.0
    ok = table_ok and theta_ok and g4 == display and g4 == squares and pi_ok and fast
    return CheckResult(7, "Golden four-point example", ok,
                       "x^2=(1-x+y+z)/2, xy=(1+x+y+z)/4, 4Gamma(m) = both displays, pi = kappa Gamma",
                       f"table {table_ok}, theta {theta_ok}, display {g4 == display}, squares {g4 == squares}, "
                       f"pi {pi_ok} with kappa={kappa}")


# --- 8. Hilbert-scheme properties --------------------------------------------------------------


def random_config(rng: random.Random, lo: int = -6, hi: int = 6) -> hilb4.PointConfig:
    while True:
        pts = [[rng.randint(lo, hi) for _ in range(3)] for _ in range(4)]
        cfg = hilb4.PointConfig(pts)
        if len(set(cfg.points)) == 4 and hilb4.omega(cfg) != 0:
            return cfg


def random_decomposable(rng: random.Random) -> PluckerVec:
    while True:
        v = wedge(random_conic(rng), random_conic(rng))
        if not v.is_zero():
            return v


def random_nondecomposable(rng: random.Random) -> PluckerVec:
    while True:
        v = PluckerVec([rng.randint(-5, 5) for _ in range(15)])
        if not is_decomposable(v):
            return v


def cone_sample(t: OrbitType, rng: random.Random) -> PluckerVec:
    """A scaled Pluecker point of a random translate of the normal form of t."""
    p = pencils.normal_form(t).transform(random_group_element(rng))
    k = Fraction(rng.choice([1, 2, 3, -1, -2, -3]), rng.choice([1, 2, 3]))
    return p.wedge().scale(k)


def _close(a: complex, b: complex, tol: float) -> bool:
    return abs(complex(a) - complex(b)) <= tol


def _point_close(p, q, tol):
    return all(_close(a, b, tol) for a, b in zip(p, q))


def support_pattern_ok(t: OrbitType, items: Sequence[hilb4.SupportItem], tol: float) -> bool:
    mults = sorted(it.multiplicity for it in items)
    pts = {it.multiplicity: [] for it in items}
    for it in items:
        pts[it.multiplicity].append(it.point)
    total = [sum(complex(it.point[k]) * it.multiplicity for it in items) for k in range(3)]
    if not all(abs(x) <= tol for x in total):
        return False
    scale = max(1.0, max(abs(complex(x)) for it in items for x in it.point))
    tol = tol * scale
    if t is OrbitType.O8:
        return mults == [1, 1, 1, 1]
    if t is OrbitType.O7:
        if mults != [1, 1, 2]:
            return False
        p, q = pts[1]
        return _point_close(pts[2][0], [-(a + b) / 2 for a, b in zip(p, q)], tol)
    if t is OrbitType.O6:
        if mults != [2, 2]:
            return False
        p, q = pts[2]
        return _point_close(p, [-x for x in q], tol) and not _point_close(p, q, tol)
    if t in (OrbitType.O6P, OrbitType.O4P):
        if mults != [1, 3]:
            return False
        return _point_close(pts[3][0], [-x / 3 for x in pts[1][0]], tol)
    return mults == [4]


def check_hilbert_scheme(ideals: IdealSet = DEFAULT_IDEALS, seed: int = 0) -> CheckResult:
    t0 = time.perf_counter()
    details = []
    rng = _rng(seed, "hilb4")
    theta_bad = 0
    kappa = hilb4.kappa()
    pi_bad = 0
    for _ in range(100):
        cfg = random_config(rng)
        alg = hilb4.algebra_from_points(cfg)
        if hilb4.theta(alg.m) != alg.a:
            theta_bad += 1
        if hilb4.pi_points(cfg) != hilb4.gamma(alg.m).scale(kappa):
            pi_bad += 1
    commute_bad = cubic_bad = 0
    for _ in range(200):
        v = random_decomposable(rng)
        alg = hilb4.tensor_to_algebra(v)
        if not (hilb4.matrices(alg).commute() and hilb4.check_c1(alg.a, alg.m) and hilb4.check_c2(alg.a, alg.m)):
            commute_bad += 1
        if not (hilb4.check_c3(alg.m) and hilb4.check_c4(alg.m)):
            cubic_bad += 1
    noncommute_bad = 0
    for _ in range(200):
        v = random_nondecomposable(rng)
        m = hilb4.m_from_coords(matvec(hilb4.gamma_inverse(), v.coords))
        if hilb4.matrices(hilb4.ClusterAlgebra.from_tensor(m)).commute():
            noncommute_bad += 1
    y5 = [OrbitType.O5, OrbitType.O4, OrbitType.O3]
    punctual_bad = 0
    for k in range(50):
        v = cone_sample(y5[k % 3], rng)
        if not hilb4.punctual_conditions(hilb4.tensor_to_algebra(v)).all_zero():
            punctual_bad += 1
    o6 = [OrbitType.O6, OrbitType.O6P]
    nonpunctual_bad = 0
    for k in range(50):
        v = cone_sample(o6[k % 2], rng)
        if not any(hilb4.punctual_conditions(hilb4.tensor_to_algebra(v)).quadratic):
            nonpunctual_bad += 1
    support_bad = 0
    for t in (OrbitType.O6, OrbitType.O6P, OrbitType.O7, OrbitType.O4P, OrbitType.O8):
        for s in range(10):
            v = cone_sample(t, rng)
            rep_ = hilb4.matrices(hilb4.tensor_to_algebra(v))
            try:
                items = hilb4.support(rep_, 1e-8, seed=s)
            except hilb4.AmbiguousSupportError as exc:
                support_bad += 1
                details.append(f"support {t.value}: {exc}")
                continue
            if not support_pattern_ok(t, items, 1e-8):
                support_bad += 1
                details.append(f"support pattern {t.value}: {[(it.point, it.multiplicity) for it in items]}")
    fast = _elapsed(t0, "hilbert scheme") < 120
    counts = dict(theta=theta_bad, pi=pi_bad, commute=commute_bad, cubic=cubic_bad,
                  noncommute=noncommute_bad, punctual=punctual_bad, nonpunctual=nonpunctual_bad,
                  support=support_bad)
    ok = not any(counts.values()) and fast
    actual = ", ".join(f"{k} failures {v}" for k, v in counts.items())
    return CheckResult(8, "Hilbert-scheme properties", ok, "zero failures in every family, < 2 min", actual,
                       details[:5])


# --- 9. punctual locus and I5 -------------------------------------------------------------


def _jacobian_rank(gens: Sequence[MPoly], v: PluckerVec) -> int:
    grads = [[g.diff(i).evaluate(v.coords) for i in range(15)] for g in gens]
    return matrix_rank(grads)


def check_punctual_locus(ideals: IdealSet = DEFAULT_IDEALS, seed: int = 0) -> CheckResult:
    rng = _rng(seed, "main")
    i5 = ideals.generators(IdealLevel.I5)
    punctual_bad = 0
    for _ in range(50):
        while True:
            vs = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
            if det3(vs) != 0:
                break
        alg = hilb4.curvilinear_algebra(*vs)
        image = hilb4.gamma(alg.m).scale(hilb4.kappa())
        if not hilb4.punctual_conditions(alg).all_zero():
            punctual_bad += 1
        if any(g.evaluate(image.coords) != 0 for g in i5):
            punctual_bad += 1
    y4_bad = 0
    y4_ranks, y5_ranks = [], []
    for k in range(50):
        v = cone_sample(OrbitType.O3 if k % 5 == 4 else OrbitType.O4, rng)
        if any(g.evaluate(v.coords) != 0 for g in i5):
            y4_bad += 1
        y4_ranks.append(_jacobian_rank(i5, v))
    for _ in range(50):
        y5_ranks.append(_jacobian_rank(i5, cone_sample(OrbitType.O5, rng)))
    ok = punctual_bad == 0 and y4_bad == 0 and max(y4_ranks) < min(y5_ranks)
    return CheckResult(9, "Punctual locus and I5", ok,
                       "I5 vanishes on punctual images and cone over Y4; Jacobian rank drops on Y4",
                       f"punctual failures {punctual_bad}, Y4 failures {y4_bad}, "
                       f"Jacobian rank on Y4 <= {max(y4_ranks)}, on generic Y5 >= {min(y5_ranks)}")


# --- suites ------------------------------------------------------------------------------------


CHECKS: dict[int, Callable[..., CheckResult]] = {
    1: check_listing,
    2: check_hilbert,
    3: check_degrees,
    4: check_representations,
    5: check_orbits,
    6: check_synthetic,
    7: check_golden,
    8: check_hilbert_scheme,
    9: check_punctual_locus,
}

SUITES = {
    "all": (1, 2, 3, 4, 5, 6, 7, 8, 9),
    "equations": (1, 2, 3, 4, 6),
    "orbits": (5,),
    "hilb4": (7, 8, 9),
}


def run_suite(suite: str = "all", seed: int = 0, ideals: IdealSet | None = None) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    ideals = ideals or DEFAULT_IDEALS
    out = []
    for n in SUITES[suite]:
        try:
            out.append(CHECKS[n](ideals, seed))
        except Exception as exc:  # a crash inside a check is a failed check
            out.append(CheckResult(n, CHECKS[n].__name__, False, "no error", f"{type(exc).__name__}: {exc}"))
    return out


def verify_report(results: Sequence[CheckResult]) -> tuple[str, dict]:
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    summary = {"passed": passed, "total": len(results), "ok": passed == len(results),
               "results": [r.to_json() for r in results]}
    return "\n".join(lines) + "\n", summary
