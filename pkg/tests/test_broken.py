from fractions import Fraction as F

import pytest

from artifact.broken import blowdown_filter, dump_lines, potential, replay, theta_lines, transport
from artifact.dp5 import Dp5Params, chamber_point, dp5_diagram, dp5_model, dp5_potential, displayed_potential
from artifact.errors import NonGenericStop, StopOnWall, UnknownClass
from artifact.models import f2_potential, f3_potential
from conftest import by_names, sorted_names
from oracles import DP5_CENTRAL, F2_TERMS, F3_TERMS

P = Dp5Params()


def test_f2_sphere_unit_coefficient():
    assert by_names(f2_potential()) == sorted_names(F2_TERMS)


def test_f3_six_terms():
    pot = f3_potential()
    assert by_names(pot) == sorted_names(F3_TERMS)
    assert len(pot) == 6


def test_dp5_central_limit():
    pot = dp5_potential(P, "central")
    assert {m: dict(cs) for m, cs in pot.by_exponent().items()} == DP5_CENTRAL


def test_dp5_central_keeps_exceptional_classes():
    pot = dp5_potential(P, "central", limit=False)
    assert len(pot.exponents()) == 7
    assert len(pot) == 9


def test_lines_replay_through_diagram():
    d = dp5_diagram(P, 6)
    lines = theta_lines(d, chamber_point(P, "up"), dp5_model(P), 6)
    assert lines and all(replay(bl, d) for bl in lines)
    text = dump_lines(lines, d.context.labels)
    assert text.count("\n") + 1 >= len(lines)


def test_transport_matches_neighbouring_chamber():
    d = dp5_diagram(P, 6)
    m = dp5_model(P)
    central = potential(d, chamber_point(P, "central"), m, 6)
    up = potential(d, chamber_point(P, "up"), m, 6)
    horizontal = [w for w in d.walls if tuple(w.direction) == (1, 0)][0]
    assert by_names(transport(central, horizontal, (0, 1), 6)) == by_names(up)
    assert dp5_potential(P, "up") == displayed_potential("up")


def test_stop_on_wall_rejected():
    d = dp5_diagram(P, 4)
    with pytest.raises(StopOnWall):
        potential(d, (F(1, 2), F(1)), dp5_model(P), 4)


def test_nongeneric_stop_rejected():
    d = dp5_diagram(P, 4)
    # on the line through the scattering point (1,1) in direction (1,1)
    with pytest.raises(NonGenericStop):
        potential(d, (F(1, 2), F(1, 2)), dp5_model(P), 4)


def test_blowdown_filter_unknown_label():
    with pytest.raises(UnknownClass):
        blowdown_filter(f2_potential(), ["nope"])
