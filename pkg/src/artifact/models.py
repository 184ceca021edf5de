"""Standard configurations used by the tests, demos and CLI."""

from __future__ import annotations

from fractions import Fraction as F

from .broken import Potential, blowdown_filter, potential, theta_lines
from .cluster import FixedData
from .lattice import BlowupPoint, Fan, ToricModel
from .scattering import ScatteringDiagram, Wall, complete, gps_initial_diagram
from .series import SeriesContext, TruncatedSeries


def two_lines(order_cap: int, power: int = 1) -> ScatteringDiagram:
    """Lines ``(1 + s1 x)^power`` along the x-axis and ``(1 + s2 y)^power`` along the y-axis."""
    ctx = SeriesContext.make(("s1", "s2"), order_cap)
    one = TruncatedSeries.one(ctx)
    fx = (one + TruncatedSeries.monomial(ctx, (1, 0), {"s1": 1})) ** power
    fy = (one + TruncatedSeries.monomial(ctx, (0, 1), {"s2": 1})) ** power
    return ScatteringDiagram((Wall((0, 0), (1, 0), True, fx), Wall((0, 0), (0, 1), True, fy)), order_cap, ctx)


def a2_initial(order_cap: int) -> ScatteringDiagram:
    return two_lines(order_cap, 1)


def squared_initial(order_cap: int) -> ScatteringDiagram:
    return two_lines(order_cap, 2)


# Hirzebruch surface F2, rays listed ccw from +x; labels follow the normals v1..v4 = (0,-1), (-1,2), (0,1), (1,0)
F2_FAN = ((1, 0), (0, 1), (-1, 2), (0, -1))
F2_LABELS = ("beta4", "beta3", "beta2", "beta1")
F2_STOP = (F(1, 3), F(1, 7))


def f2_model(sphere_unit: bool = True) -> ToricModel:
    return ToricModel(
        Fan(F2_FAN),
        (0, 0, 0, 0),
        (),
        sphere_units=((1, "sD3"),) if sphere_unit else (),
        ray_labels=F2_LABELS,
    )


def f2_potential(order_cap: int = 4) -> Potential:
    return potential(ScatteringDiagram((), order_cap), F2_STOP, f2_model(True), order_cap)


def f3_model() -> ToricModel:
    """F2 with one non-toric blowup on the divisor normal to (-1, 2); its wall class is ``alpha``."""
    return ToricModel(Fan(F2_FAN), (0, 0, 0, 0), (BlowupPoint(2, F(1), 1, "alpha"),), ray_labels=F2_LABELS)


def f3_potential(order_cap: int = 4) -> Potential:
    """Chamber potential on the side where the x- and y-lines cross the wall, with beta2 filtered out."""
    m = f3_model()
    d = complete(gps_initial_diagram(m, order_cap), order_cap)
    return blowdown_filter(potential(d, F2_STOP, m, order_cap), ["beta2"])


# Cubic surface: P^2 with six points, two per boundary line, clustered near the corners.
CUBIC_L = 12
CUBIC_STOP = (F(4) + F(1, 997), F(4) + F(3, 1009))


def cubic_model() -> ToricModel:
    fan = Fan(((1, 0), (0, 1), (-1, -1)))
    L = CUBIC_L
    heights = (F(1), F(3, 2))  # lines y = h from the divisor x = 0
    columns = (F(10), F(21, 2))  # lines x = h from the divisor y = 0
    diag = (F(1), F(3, 2))  # points (d, L - d) on x + y = L
    pts = (
        BlowupPoint(0, heights[0], 1, "e1"),
        BlowupPoint(0, heights[1], 1, "e2"),
        BlowupPoint(1, -columns[0], 1, "e3"),
        BlowupPoint(1, -columns[1], 1, "e4"),
        BlowupPoint(2, (2 * diag[0] - L) / 2, 1, "e5"),
        BlowupPoint(2, (2 * diag[1] - L) / 2, 1, "e6"),
    )
    return ToricModel(fan, (0, 0, L), pts)


def cubic_lines(order_cap: int):
    m = cubic_model()
    d = complete(gps_initial_diagram(m, order_cap), order_cap)
    return theta_lines(d, CUBIC_STOP, m, order_cap)


def count_broken_lines_cubic(max_cap: int = 6, start_cap: int = 1) -> tuple[int, int, list[int]]:
    """Raise the order cap until two consecutive caps give the same count.

    Returns ``(minimal adequate cap, count, counts by cap)``.
    """
    counts: list[int] = []
    prev = None
    for k in range(start_cap, max_cap + 1):
        n = len(cubic_lines(k))
        counts.append(n)
        if prev is not None and n == prev:
            return k - 1, n, counts
        prev = n
    return max_cap, counts[-1], counts


def rank3_example() -> FixedData:
    return FixedData(((0, 1, -1), (-1, 0, 1), (1, -1, 0)), (1, 1, 1))


def rank2_example(k: int, l: int) -> FixedData:
    return FixedData(((0, 1), (-1, 0)), (k, l))


# Blowup chains of P^2 used by the semi-Fano comparisons: (chain, point constraints)
P2_FAN = ((1, 0), (0, 1), (-1, -1))
P2_CHAINS = {
    "corner": ([((1, 0), (0, 1)), ((1, 0), (1, 1))], [(-30, -11), (-5, -2)]),
    "mirror": ([((1, 0), (0, 1)), ((1, 1), (0, 1))], [(-30, -41), (-2, -5)]),
    "long": ([((1, 0), (0, 1)), ((1, 0), (1, 1)), ((1, 0), (2, 1))], [(-300, -101), (-30, -11), (-7, -2)]),
}


__all__ = [
    "two_lines",
    "a2_initial",
    "squared_initial",
    "f2_model",
    "f2_potential",
    "f3_model",
    "f3_potential",
    "cubic_model",
    "cubic_lines",
    "count_broken_lines_cubic",
    "CUBIC_STOP",
    "rank3_example",
    "rank2_example",
    "P2_FAN",
    "P2_CHAINS",
    "F2_FAN",
    "F2_LABELS",
]
