from fractions import Fraction as F
from math import comb

import pytest

from artifact.errors import ExcludedSurface, NotClippable, NotSemiFanoChain, NotTrivalent
from artifact.lattice import Fan
from artifact.models import P2_CHAINS, P2_FAN
from artifact.tropical import (
    Edge,
    TropicalDisc,
    bulk_discs,
    bulk_potential_via_chain,
    chain_fans,
    check_balancing,
    clip,
    generalized_maslov,
    maslov_index,
    minus_two_runs,
    multiplicity,
    semifano_toric_potential,
)
from oracles import CORNER_COEFFS, CORNER_FINAL_FAN

P2 = Fan(P2_FAN)


def tripod():
    # root at the origin, one vertex at (1,1) splitting into leaves (1,0) and (0,1)
    return TropicalDisc(
        ((0, 0), (1, 1)),
        (Edge(0, 1, (1, 1)), Edge(1, None, (1, 0)), Edge(1, None, (0, 1))),
        point_constraints=((3, 1),),
    )


def test_balancing_multiplicity_maslov():
    d = tripod()
    assert check_balancing(d)
    assert multiplicity(d) == 1
    assert maslov_index(d) == 4
    assert generalized_maslov(d) == 0
    assert tuple(d.boundary()) == (-1, -1)


def test_four_valent_vertex_rejected():
    d = TropicalDisc(
        ((0, 0), (1, 1)),
        (Edge(0, 1, (1, 1)), Edge(1, None, (1, 0)), Edge(1, None, (0, 1)), Edge(1, None, (-1, -1))),
    )
    with pytest.raises(NotTrivalent):
        multiplicity(d)


def test_clip_removes_leaf():
    # the point (3,1) is on the leaf (1,0) from (1,1); w = -(1,0) is the clipping direction
    out, how = clip(tripod(), (3, 1), (-1, 0), (0, -1))
    assert how == "clipped"
    assert len(out.vertices) == 1 and len(out.unbounded) == 1
    assert tuple(out.boundary()) == (-1, -1)


def test_clip_misses_point():
    _, how = clip(tripod(), (5, 5), (-1, 0), (0, -1))
    assert how == "untouched"


def test_clip_bounded_edge_raises():
    with pytest.raises(NotClippable):
        clip(tripod(), (F(1, 2), F(1, 2)), (-1, -1), (0, -1))


def test_chain_fans_and_runs():
    chain, _ = P2_CHAINS["corner"]
    fans = chain_fans(P2, chain)
    assert tuple(tuple(v) for v in fans[-1].rays) == CORNER_FINAL_FAN
    assert minus_two_runs(fans[-1]) == [[2]]
    with pytest.raises(NotSemiFanoChain):
        chain_fans(P2, [((1, 0), (2, 1))])


def test_semifano_formula_coefficients():
    chain, _ = P2_CHAINS["long"]
    fan = chain_fans(P2, chain)[-1]
    pot = semifano_toric_potential(fan)
    runs = minus_two_runs(fan)
    expected = {}
    for r in runs:
        for pos, i in enumerate(r, start=1):
            expected[tuple(fan.rays[i])] = comb(len(r) + 1, pos)
    for (m, _), a in pot.terms.items():
        assert a == expected.get(m, 1)


def test_corner_chain_oracle():
    chain, pts = P2_CHAINS["corner"]
    bulk = bulk_potential_via_chain(P2, chain, pts)
    assert {m: a for (m, _), a in bulk.terms.items()} == CORNER_COEFFS
    assert len(bulk_discs(P2, (0, 0), pts)) > len(CORNER_COEFFS)


def test_f2_excluded():
    with pytest.raises(ExcludedSurface):
        semifano_toric_potential(Fan(((1, 0), (0, 1), (-1, 2), (0, -1))))
