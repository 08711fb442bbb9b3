from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest
import sympy

from hilbquad import equations as eq
from hilbquad import rep
from hilbquad.equations import IdealLevel
from hilbquad.rep import LieBasisElement, RepTag, Weight

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("w,d", [((3, 2), 15), ((6, 4), 60), ((4, 3), 24), ((4, 0), 15), ((3, 1), 15),
                                 ((2, 2), 6), ((1, 0), 3), ((0, 0), 1)])
def test_weyl_dim(w, d):
    assert rep.weyl_dim(w) == d


def test_weyl_dim_decomposition_sums_to_120():
    assert sum(rep.weyl_dim(w) for w in [(6, 4), (4, 3), (4, 0), (3, 1), (2, 2)]) == 120


def test_invalid_weight():
    with pytest.raises(ValueError):
        Weight(1, 2)


@pytest.mark.parametrize("tag,dim", [(RepTag.U, 3), (RepTag.U_DUAL, 3), (RepTag.S2U, 6),
                                     (RepTag.S2U_DUAL, 6), (RepTag.W, 15), (RepTag.QUADRICS, 120)])
def test_dimensions_and_brackets(tag, dim):
    r = rep.build_rep(tag)
    assert r.dim == dim
    assert r.bracket_defects() == []


def test_standard_representation_weights():
    assert rep.build_rep(RepTag.U).basis_weights() == [(1, 0), (-1, 1), (0, -1)]
    assert rep.build_rep(RepTag.U_DUAL).basis_weights() == [(-1, 0), (1, -1), (0, 1)]


def test_standard_representation_is_the_defining_one():
    u = rep.build_rep(RepTag.U)
    e12 = np.zeros((3, 3), dtype=np.int64)
    e12[0, 1] = 1
    assert np.array_equal(u[LieBasisElement.E12], e12)


@pytest.mark.parametrize("tag", [RepTag.U, RepTag.U_DUAL, RepTag.S2U, RepTag.W])
def test_action_matrices_match_golden_files(tag):
    golden = json.loads((GOLDEN / f"rep_{tag.name.lower()}.json").read_text())
    assert json.loads(rep.build_rep(tag).to_json()) == golden


def test_w_is_irreducible_from_its_highest_weight_vector():
    w = rep.build_rep(RepTag.W)
    v = rep.w_highest_weight_vector()
    assert w.weight(v) == (1, 2)
    assert rep.module_from_highest_weight(v, w).dim == 15


@pytest.mark.parametrize("lv", list(eq.LEVELS))
def test_generator_blocks_are_stable(lv):
    assert rep.is_stable(rep.quadric_span(eq.block(lv)))


def test_single_quadric_is_not_stable():
    assert not rep.is_stable(rep.quadric_span([eq.generators(IdealLevel.I8)[0]]))


def test_p_and_q_generate_the_missing_blocks():
    Q = rep.build_rep(RepTag.QUADRICS)
    pv = rep.quadric_vector(eq.p_quadric([1, 0, 0], [0, 1, 0]))
    qv = rep.quadric_vector(eq.q_quadric([1, 0, 0], [0, 1, 0], [0, 0, 1]))
    # with e, f, g the dual basis these are lowest weight vectors of S_{4,0} and S_{4,3}
    assert rep.is_lowest_weight(pv, Q) and Q.weight(pv) == (0, -4)
    assert rep.is_lowest_weight(qv, Q) and Q.weight(qv) == (-3, -1)
    pmod, qmod = rep.module_generated(pv, Q), rep.module_generated(qv, Q)
    assert (pmod.dim, qmod.dim) == (15, 24)
    assert pmod == rep.quadric_span(eq.block(IdealLevel.I3))
    assert qmod == rep.quadric_span(eq.block(IdealLevel.I4))


def test_psi_components_span_the_i5_extras_modulo_plucker():
    span = rep.quadric_span(eq.psi_quadrics()) + rep.quadric_span(eq.block(IdealLevel.I8))
    assert span == rep.quadric_span(eq.generators(IdealLevel.I5))


def test_quadrics_split_as_120():
    Q = rep.build_rep(RepTag.QUADRICS)
    top = rep.top_quadric()
    assert rep.is_highest_weight(top, Q) and Weight.from_dynkin(*Q.weight(top)) == Weight(6, 4)
    top_mod = rep.module_from_highest_weight(top, Q)
    assert top_mod.dim == rep.weyl_dim((6, 4))
    i3 = rep.quadric_span(eq.generators(IdealLevel.I3))
    assert i3.dim == 60 and (top_mod + i3).dim == 120


def _highest_weight_vectors(span):
    """Basis of the vectors in span killed by every raising operator (sympy nullspace)."""
    V = sympy.Matrix(span.vectors).T
    stacked = sympy.Matrix.vstack(*(sympy.Matrix(span.rep[e].tolist()) * V for e in rep.RAISING))
    return [list(V * c) for c in stacked.nullspace()]


def test_highest_weights_of_the_blocks():
    """Each block has a unique highest weight line, of the expected S_{a,b}."""
    Q = rep.build_rep(RepTag.QUADRICS)
    expected = {IdealLevel.I8: (3, 1), IdealLevel.I5: (2, 2), IdealLevel.I4: (4, 3), IdealLevel.I3: (4, 0)}
    for lv, w in expected.items():
        span = rep.quadric_span(eq.block(lv))
        hws = _highest_weight_vectors(span)
        assert len(hws) == 1
        assert Weight.from_dynkin(*Q.weight(hws[0])) == Weight(*w)
        assert span.dim == rep.weyl_dim(w)


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        rep.module_from_highest_weight([0] * 15, rep.build_rep(RepTag.W))


def test_quadric_vector_round_trip():
    g = eq.generators(IdealLevel.I4)[30]
    assert rep.vector_quadric(rep.quadric_vector(g)) == g
