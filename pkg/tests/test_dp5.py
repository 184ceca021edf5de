import pytest
import sympy as sp

from artifact.dp5 import (
    CHAMBERS,
    Dp5Params,
    case_formulas,
    chamber_point,
    classify_valuations,
    critical_points,
    cubic_relation_check,
    displayed_potential,
    displayed_quintic,
    dp5_potential,
    gamma2_polynomial,
    quintic_from_relation,
    relative_residual,
    symbolic_checks,
    verify_nondegeneracy,
)
from artifact.errors import InvalidModel, UnknownChamber, ValuationMismatch
from oracles import QUINTIC

A, B, C = sp.symbols("A B C")


@pytest.mark.parametrize("chamber", CHAMBERS)
def test_chamber_potentials_match_display(chamber):
    assert dp5_potential(Dp5Params(), chamber) == displayed_potential(chamber)


def test_param_validation():
    with pytest.raises(InvalidModel):
        Dp5Params(a=1, a_prime=1)
    with pytest.raises(InvalidModel):
        Dp5Params(t_numeric=1.5)
    with pytest.raises(UnknownChamber):
        chamber_point(Dp5Params(), "left")


def test_displayed_quintic_list():
    got = displayed_quintic()
    want = [sp.expand(sp.sympify(s, locals={"A": A, "B": B, "C": C})) for s in QUINTIC]
    assert [sp.expand(g - w) for g, w in zip(got, want)] == [0] * 6
    assert [sp.expand(g + q) for g, q in zip(gamma2_polynomial(1), quintic_from_relation(1))] == [0] * 6


def test_symbolic_identities():
    chk = symbolic_checks()
    assert chk["f_is_cleared_dW1"] and chk["g_is_cleared_dW2"]
    assert chk["z2f_minus_z1g_factors"] and chk["f_plus_g_is_gamma"]
    # the sum relation that actually holds on the critical locus
    assert chk["sum_relation_shift_is_minus_C"]
    assert not chk["sum_relation_shift_is_plus_1"]


def test_cubic_relation():
    assert cubic_relation_check()
    assert not cubic_relation_check(substitution={"x": "u1", "y": "v1", "z": "v2"})
    assert not cubic_relation_check(relations=("u1*v1 - 1 - u2", "u2*v2 - 2 - u1"))


@pytest.mark.parametrize("abc", [(2, 2, 5), (3, 3, 4), (3, 4, 5)])
def test_seven_nondegenerate_points(abc):
    a, b, c = abc
    rep = critical_points(Dp5Params(a=a, b=b, c=c))
    assert rep.geometric_count == 7
    nd = verify_nondegeneracy(rep)
    assert nd.residual_ok and nd.hessian_ok
    A_, B_, C_ = rep.params.numeric()
    for p in rep.points:
        assert relative_residual(*p.z, A_, B_, C_) < 1e-10


def test_reported_antidiagonal_point_is_not_critical():
    rep = critical_points(Dp5Params(a=2, b=3, c=4))
    assert len(rep.nongeometric) == 1
    assert rep.nongeometric[0].residual > 1e-3


def test_case1_charts():
    rep = critical_points(Dp5Params())
    c1 = [p for p in rep.points if p.kind == "case1"]
    assert sorted(p.chart for p in c1) == ["immersed:1", "immersed:2"]
    for p in c1:
        assert all(abs(v - w) <= 0.02 * max(1, abs(w)) for v, w in zip(p.valuation, p.predicted))


def test_lenient_classification_keeps_unmatched():
    rep = critical_points(Dp5Params())
    pts = classify_valuations(rep, strict=False)
    labels = [p.label for p in pts if p.kind == "case2"]
    assert labels.count("i") == 4
    assert case_formulas(rep.params)["i"] == (1.0, 1.0)


def test_strict_classification_reports_unmatched_pair():
    rep = critical_points(Dp5Params())
    with pytest.raises(ValuationMismatch, match=r"\(2\.99\d, 2\.99\d\)"):
        classify_valuations(rep, strict=True)
