from fractions import Fraction as F

import pytest

from artifact.errors import InvalidModel
from artifact.models import a2_initial, squared_initial
from artifact.scattering import (
    PathAutomorphism,
    ScatteringDiagram,
    Wall,
    complete,
    cross_wall,
    is_consistent,
    log_jacobian,
    loop_product,
    path_product,
)
from artifact.series import SeriesContext, TruncatedSeries as T
from oracles import A2_SCATTERED, SQUARED_21, SQUARED_DIAGONAL_LEADING


def _scattered(d):
    return [(tuple(w.direction), dict(w.function.terms)) for w in d.scattered()]


def test_wall_rejects_bad_function():
    ctx = SeriesContext.make(("s",), 3)
    with pytest.raises(InvalidModel):
        Wall((0, 0), (1, 0), True, 1 + T.monomial(ctx, (0, 1), {"s": 1}))
    with pytest.raises(InvalidModel):
        Wall((0, 0), (2, 0), True, T.one(ctx))


def test_a2_single_ray():
    d = complete(a2_initial(4), 4)
    assert _scattered(d) == A2_SCATTERED
    assert is_consistent(d)


def test_initial_a2_loop_is_not_identity():
    assert not loop_product(a2_initial(3), (0, 0)).is_identity()


def test_squared_rays():
    d = complete(squared_initial(6), 6)
    walls = {tuple(w.direction): w.function for w in d.scattered()}
    diag = walls[(1, 1)]
    for (mx, my, c), a in SQUARED_DIAGONAL_LEADING.items():
        assert diag.coefficient((mx, my), c) == a
    for (mx, my, c), a in SQUARED_21.items():
        assert walls[(2, 1)].coefficient((mx, my), c) == a
    assert is_consistent(d)


def test_completion_is_idempotent_and_truncation_commutes():
    d = complete(squared_initial(5), 5)
    assert complete(d, 5) == d
    assert d.truncate(3) == complete(squared_initial(3), 3)


def test_crossing_back_is_identity():
    d = a2_initial(4)
    w = d.walls[0]
    ident = PathAutomorphism.identity(d.context)
    there = cross_wall(ident, w, 1)
    assert cross_wall(there, w, -1).is_identity()


def test_path_product_detours_agree():
    d = complete(a2_initial(4), 4)
    p1 = path_product(d, [(F(1, 2), F(-1, 3)), (F(-1, 3), F(1, 2))])
    p2 = path_product(d, [(F(1, 2), F(-1, 3)), (2, 3), (F(-1, 3), F(1, 2))])
    p3 = path_product(d, [(F(1, 2), F(-1, 3)), (-2, -3), (F(-1, 3), F(1, 2))])
    assert p2.images == p3.images
    assert p1.images == p2.images


def test_log_jacobian_of_one_wall():
    d = squared_initial(5)
    auto = cross_wall(PathAutomorphism.identity(d.context), d.walls[1], 1)
    assert log_jacobian(auto) == T.one(d.context)


def test_empty_diagram_completion():
    ctx = SeriesContext.make((), 3)
    e = ScatteringDiagram((), 3, ctx)
    assert len(complete(e, 3)) == 0
