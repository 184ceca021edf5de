from fractions import Fraction as F

import pytest

from artifact.errors import InvalidModel, NotBasis, ZeroVector
from artifact.lattice import BlowupPoint, Fan, ToricModel, angle_cmp, primitive, semifano_decomposition_check, wedge


def test_primitive_splits_multiplicity():
    assert primitive((4, -6)) == ((2, -3), 2)
    with pytest.raises(ZeroVector):
        primitive((0, 0))


def test_angle_order_from_positive_x():
    assert angle_cmp((1, 0), (0, 1)) < 0
    assert angle_cmp((-1, -1), (0, -1)) < 0
    assert angle_cmp((1, 1), (2, 2)) == 0


def test_fan_validation():
    Fan(((1, 0), (0, 1), (-1, -1)))
    with pytest.raises(InvalidModel):
        Fan(((0, 1), (1, 0), (-1, -1)))
    with pytest.raises(InvalidModel):
        Fan(((2, 0), (0, 1), (-1, -1)))


def test_self_intersections():
    assert Fan(((1, 0), (0, 1), (-1, -1))).self_intersections() == (1, 1, 1)
    assert Fan(((1, 0), (0, 1), (-1, 2), (0, -1))).self_intersections() == (0, -2, 0, 2)


def test_locate_and_decomposition():
    fan = Fan(((1, 0), (0, 1), (-1, -1)))
    i, a, b = fan.locate((2, 3))
    assert (i, a, b) == (0, 2, 3)
    assert semifano_decomposition_check(fan, (1, 0), (0, 1))
    with pytest.raises(NotBasis):
        semifano_decomposition_check(fan, (1, 0), (1, 2))


def test_toric_model_checks():
    fan = Fan(((1, 0), (0, 1), (-1, -1)))
    m = ToricModel(fan, (0, 0, 3), (BlowupPoint(0, 1, 1, "e"),))
    assert m.ray_labels == ("beta1", "beta2", "beta3")
    assert m.line_base(m.blowup_points[0]) == (0, 1)
    with pytest.raises(InvalidModel):
        ToricModel(fan, (0, -1, 0))
    with pytest.raises(InvalidModel):
        ToricModel(fan, (0, 0, 0), (BlowupPoint(0, 1, 1, "e"), BlowupPoint(0, F(1), 1, "f")))
    assert wedge((1, 0), (0, 1)) == 1
