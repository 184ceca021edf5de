"""Walls, wall-crossing automorphisms, loop products and consistent completion.

Conventions
-----------
A wall with primitive direction ``d`` and function ``f`` acts on monomials by
``z^m -> z^m f^<n0, m>`` where ``n0`` is the primitive normal with positive
pairing against the direction of travel.  ``crossing_sign = +1`` selects
``n0 = rot90(d)`` (counterclockwise quarter turn of ``d``), ``-1`` its negative.
Paths compose left to right: a crossing sequence w1, w2, ... produces
``theta_n o ... o theta_1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import (
    BasePointOnWall,
    ContextMismatch,
    DegenerateArrangement,
    InvalidModel,
    TangentCrossing,
    UnresolvedDirection,
)
from .lattice import LatticeVector, Point, ToricModel, angle_cmp, angle_key, primitive, vec, wedge
from .series import SeriesContext, TruncatedSeries


def as_point(p: Sequence) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


@dataclass(frozen=True)
class Wall:
    base: Point
    direction: LatticeVector
    is_line: bool
    function: TruncatedSeries
    origin: str = "initial"

    def __post_init__(self):
        object.__setattr__(self, "base", as_point(self.base))
        d = vec(self.direction)
        p, k = primitive(d)
        if k != 1:
            raise InvalidModel(f"wall direction {tuple(d)} is not primitive")
        object.__setattr__(self, "direction", p)
        f = self.function
        z = f.ctx.zero_class()
        if f.terms.get((0, 0, z)) != 1:
            raise InvalidModel("wall function must have constant term 1")
        for (mx, my, c) in f.terms:
            if (mx, my, c) == (0, 0, z):
                continue
            if f.ctx.order(c) < 1:
                raise InvalidModel("wall function must be 1 modulo the order ideal")
            if wedge((mx, my), p) != 0 or mx * p.x + my * p.y <= 0:
                raise InvalidModel(
                    f"term exponent {(mx, my)} is not a positive multiple of the direction {tuple(p)}"
                )

    # geometry ---------------------------------------------------------------
    def offset(self, q: Point) -> Fraction:
        """Signed distance proxy: wedge(d, q - base); zero exactly on the supporting line."""
        d = self.direction
        return d.x * (q[1] - self.base[1]) - d.y * (q[0] - self.base[0])

    def param(self, q: Point) -> Fraction:
        """Parameter t with projection base + t*d (exact, scaled by |d|^2)."""
        d = self.direction
        return Fraction((q[0] - self.base[0]) * d.x + (q[1] - self.base[1]) * d.y, d.x * d.x + d.y * d.y)

    def contains(self, q: Point) -> bool:
        if self.offset(q) != 0:
            return False
        return self.is_line or self.param(q) >= 0

    def support_key(self):
        d = self.direction
        if self.is_line:
            # canonical: direction up to sign plus the line's offset from the origin
            dd = d if (d.x, d.y) > (0, 0) else -d
            return ("line", tuple(dd), dd.x * (-self.base[1]) - dd.y * (-self.base[0]))
        return ("ray", tuple(d), self.base)

    def with_function(self, f: TruncatedSeries) -> "Wall":
        return Wall(self.base, self.direction, self.is_line, f, self.origin)

    def crossing_sign(self, velocity: Sequence) -> int:
        s = wedge(self.direction, velocity)
        if s == 0:
            raise TangentCrossing(f"travel direction {tuple(velocity)} runs along the wall")
        return 1 if s > 0 else -1

    def pairing(self, m: Sequence, sign: int) -> int:
        """<n0, m> for the chosen orientation."""
        n = self.direction.rot90()
        return sign * (n.x * m[0] + n.y * m[1])


def intersect(w1: Wall, w2: Wall) -> Point | None:
    """Intersection point of two wall supports, or None (parallel or missed)."""
    d1, d2 = w1.direction, w2.direction
    det = wedge(d1, d2)
    if det == 0:
        return None
    bx = w2.base[0] - w1.base[0]
    by = w2.base[1] - w1.base[1]
    t1 = (bx * d2.y - by * d2.x) / det
    t2 = (bx * d1.y - by * d1.x) / det
    if (not w1.is_line and t1 < 0) or (not w2.is_line and t2 < 0):
        return None
    return (w1.base[0] + t1 * d1.x, w1.base[1] + t1 * d1.y)


class _PowerCache:
    """Memoized integer powers of a fixed unit series."""

    __slots__ = ("base", "pos", "neg")

    def __init__(self, base: TruncatedSeries):
        self.base = base
        self.pos = {0: TruncatedSeries.one(base.ctx), 1: base}
        self.neg: dict[int, TruncatedSeries] = {}

    def get(self, k: int) -> TruncatedSeries:
        if k >= 0:
            if k not in self.pos:
                self.pos[k] = self.get(k - 1) * self.base
            return self.pos[k]
        k = -k
        if k not in self.neg:
            if 1 not in self.neg:
                self.neg[1] = self.base.inverse()
            if k != 1:
                self.neg[k] = self.get(-(k - 1)) * self.neg[1]
        return self.neg[k]


def apply_elementary(series: TruncatedSeries, wall: Wall, sign: int, cache: _PowerCache | None = None):
    """Image of ``series`` under the single-wall automorphism."""
    f = wall.function
    if f.ctx != series.ctx:
        raise ContextMismatch("wall and series contexts differ")
    cache = cache or _PowerCache(f)
    n = wall.direction.rot90()
    acc: dict = {}
    cap = series.ctx.order_cap
    order = series.ctx.order
    for (mx, my, c), a in series.terms.items():
        k = sign * (n.x * mx + n.y * my)
        room = cap - order(c)
        for (fx, fy, fc), b in cache.get(k).terms.items():
            nc = tuple(p + q for p, q in zip(c, fc))
            if order(fc) > room:
                continue
            key = (mx + fx, my + fy, nc)
            v = acc.get(key, 0) + a * b
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
    return TruncatedSeries(series.ctx, acc, _trusted=True)


@dataclass(frozen=True)
class PathAutomorphism:
    """Ring automorphism determined by unit series ``ux``, ``uy``.

    ``theta(x) = x * ux`` and ``theta(y) = y * uy``.
    """

    ux: TruncatedSeries
    uy: TruncatedSeries

    @classmethod
    def identity(cls, ctx: SeriesContext) -> "PathAutomorphism":
        one = TruncatedSeries.one(ctx)
        return cls(one, one)

    @property
    def ctx(self) -> SeriesContext:
        return self.ux.ctx

    @property
    def images(self) -> tuple[TruncatedSeries, TruncatedSeries]:
        return self.ux.mul_monomial((1, 0), self.ctx.zero_class()), self.uy.mul_monomial((0, 1), self.ctx.zero_class())

    def is_identity(self) -> bool:
        one = TruncatedSeries.one(self.ctx)
        return self.ux == one and self.uy == one

    def apply(self, series: TruncatedSeries) -> TruncatedSeries:
        """theta(series) = sum a z^m s^c ux^mx uy^my."""
        px, py = _PowerCache(self.ux), _PowerCache(self.uy)
        out = TruncatedSeries.zero(series.ctx)
        for (mx, my, c), a in series.terms.items():
            unit = px.get(mx) * py.get(my)
            out = out + unit.mul_monomial((mx, my), c, a)
        return out

    def then(self, other: "PathAutomorphism") -> "PathAutomorphism":
        """``other o self``: apply self first, then other."""
        # (other o self)(x) = other(x ux) = x * other.ux * other(ux)
        return PathAutomorphism(other.ux * other.apply(self.ux), other.uy * other.apply(self.uy))

    def inverse_by_iteration(self) -> "PathAutomorphism":
        """Inverse automorphism by fixed-point iteration (order by order)."""
        ctx = self.ctx
        inv = PathAutomorphism.identity(ctx)
        for _ in range(ctx.order_cap + 1):
            # want inv o self = id: inv(x ux) = x  =>  inv.ux = 1 / inv(ux)
            inv = PathAutomorphism(inv.apply(self.ux).inverse(), inv.apply(self.uy).inverse())
        return inv

    def defect(self) -> tuple[TruncatedSeries, TruncatedSeries]:
        return self.ux - 1, self.uy - 1

    def truncate(self, k: int) -> "PathAutomorphism":
        return PathAutomorphism(self.ux.truncate(k), self.uy.truncate(k))


def cross_wall(auto: PathAutomorphism, wall: Wall, crossing_sign: int | None = None, *, velocity=None):
    """Compose ``auto`` with the automorphism of crossing ``wall`` (applied after ``auto``)."""
    if velocity is not None:
        sign = wall.crossing_sign(velocity)
    else:
        sign = crossing_sign
    if sign not in (1, -1):
        raise TangentCrossing("crossing sign must be +1 or -1")
    f = wall.function
    if f.ctx != auto.ctx:
        f = f.recast(auto.ctx) if f.ctx.labels == auto.ctx.labels else None
        if f is None:
            raise ContextMismatch("wall and automorphism contexts differ")
        wall = wall.with_function(f)
    cache = _PowerCache(wall.function)
    n = wall.direction.rot90()
    kx, ky = sign * n.x, sign * n.y
    ux = cache.get(kx) * apply_elementary(auto.ux, wall, sign, cache)
    uy = cache.get(ky) * apply_elementary(auto.uy, wall, sign, cache)
    return PathAutomorphism(ux, uy)


def log_jacobian(auto: PathAutomorphism) -> TruncatedSeries:
    """Determinant of the logarithmic Jacobian of (theta(x), theta(y)).

    With theta(x) = x ux the logarithmic derivatives are
    ``e_i + D_j(u_i)/u_i`` where ``D_j`` is the Euler derivative in z_j.
    """

    def euler(f: TruncatedSeries, j: int) -> TruncatedSeries:
        return TruncatedSeries(f.ctx, {k: v * k[j] for k, v in f.terms.items() if k[j]}, _trusted=True)

    inv_x, inv_y = auto.ux.inverse(), auto.uy.inverse()
    a11 = 1 + euler(auto.ux, 0) * inv_x
    a12 = euler(auto.ux, 1) * inv_x
    a21 = euler(auto.uy, 0) * inv_y
    a22 = 1 + euler(auto.uy, 1) * inv_y
    return a11 * a22 - a12 * a21


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class ScatteringDiagram:
    walls: tuple[Wall, ...]
    order_cap: int
    context: SeriesContext = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        walls = tuple(self.walls)
        object.__setattr__(self, "walls", walls)
        ctx = self.context
        if ctx is None:
            if not walls:
                ctx = SeriesContext.make((), self.order_cap)
            else:
                ctx = walls[0].function.ctx.with_cap(self.order_cap)
            object.__setattr__(self, "context", ctx)
        if ctx.order_cap != self.order_cap:
            object.__setattr__(self, "context", ctx.with_cap(self.order_cap))
        for w in walls:
            if w.function.ctx.labels != self.context.labels or w.function.ctx.weights != self.context.weights:
                raise ContextMismatch("all wall functions must share one label context")

    def __len__(self):
        return len(self.walls)

    def sorted_walls(self) -> list[Wall]:
        return sorted(self.walls, key=_wall_sort_key)

    def canonical(self) -> tuple:
        """Hashable normal form: walls as (support, function terms), merged and sorted."""
        merged = merge_supports(self.walls, self.context)
        return tuple(
            (w.support_key(), tuple(sorted((k, v) for k, v in w.function.terms.items())))
            for w in sorted(merged, key=_wall_sort_key)
        )

    def __eq__(self, other):
        if not isinstance(other, ScatteringDiagram):
            return NotImplemented
        return self.context == other.context and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def truncate(self, k: int) -> "ScatteringDiagram":
        ctx = self.context.with_cap(k)
        walls = []
        for w in self.walls:
            f = _lift(w.function, ctx) if k >= w.function.ctx.order_cap else w.function.truncate(k)
            if len(f.terms) > 1:
                walls.append(w.with_function(f))
        return ScatteringDiagram(tuple(walls), k, ctx)

    def scattered(self) -> list[Wall]:
        return [w for w in self.walls if w.origin != "initial"]

    def singular_points(self) -> list[Point]:
        pts = set()
        ws = self.walls
        for i in range(len(ws)):
            if not ws[i].is_line:
                pts.add(ws[i].base)
            for j in range(i + 1, len(ws)):
                q = intersect(ws[i], ws[j])
                if q is not None:
                    pts.add(q)
        return sorted(pts)


def _wall_sort_key(w: Wall):
    return (angle_key(w.direction), w.is_line, w.base, w.origin)


def _lift(f: TruncatedSeries, ctx: SeriesContext) -> TruncatedSeries:
    if f.ctx == ctx:
        return f
    if f.ctx.labels != ctx.labels or f.ctx.weights != ctx.weights:
        raise ContextMismatch("cannot move series between label sets")
    return TruncatedSeries(ctx, f.terms)


def merge_supports(walls: Iterable[Wall], ctx: SeriesContext) -> list[Wall]:
    """Combine walls with identical support by multiplying their functions."""
    groups: dict = {}
    order: list = []
    for w in walls:
        key = w.support_key()
        f = _lift(w.function, ctx)
        if key in groups:
            g = groups[key]
            groups[key] = g.with_function(g.function * f)
        else:
            groups[key] = w.with_function(f)
            order.append(key)
    return [groups[k] for k in order if len(groups[k].function.terms) > 1]


def wall_crossings_at(walls: Sequence[Wall], center: Point):
    """(radial direction, wall index, sign) for a small ccw loop around ``center``."""
    out = []
    for idx, w in enumerate(walls):
        if w.offset(center) != 0:
            continue
        d = w.direction
        if w.is_line:
            out.append((d, idx, 1))
            out.append((-d, idx, -1))
            continue
        t = w.param(center)
        if t < 0:
            continue
        if t == 0:
            out.append((d, idx, 1))
        else:
            out.append((d, idx, 1))
            out.append((-d, idx, -1))
    return out


def _ordered_crossings(crossings, start):
    if start is None:
        # just above the positive x-direction: angle 0 is visited last
        def rank(item):
            r = item[0]
            return (1 if (r[1] == 0 and r[0] > 0) else 0, angle_key(r), item[1])

        return sorted(crossings, key=rank)
    start = vec(start)
    for r, _, _ in crossings:
        if wedge(r, start) == 0 and r.dot(start) > 0:
            raise BasePointOnWall(f"loop base direction {tuple(start)} lies on a wall")

    def rel(item):
        r = item[0]
        return (0 if angle_cmp(r, start) > 0 else 1, angle_key(r), item[1])

    return sorted(crossings, key=rel)


def loop_product(
    diagram: ScatteringDiagram,
    center: Sequence,
    start_direction: Sequence[int] | None = None,
    order_cap: int | None = None,
) -> PathAutomorphism:
    """Path-ordered product along a small counterclockwise loop around ``center``.

    The loop starts at ``center + eps * start_direction``; the default start
    sits just above the positive x-direction.  ``center`` may be a singular
    point.  A start direction running along a wall raises ``BasePointOnWall``.
    """
    center = as_point(center)
    k = diagram.order_cap if order_cap is None else order_cap
    ctx = diagram.context.with_cap(k)
    walls = [w.with_function(_fit(w.function, ctx)) for w in diagram.walls]
    crossings = _ordered_crossings(wall_crossings_at(walls, center), start_direction)
    auto = PathAutomorphism.identity(ctx)
    for _, idx, sign in crossings:
        auto = cross_wall(auto, walls[idx], sign)
    return auto


def _fit(f: TruncatedSeries, ctx: SeriesContext) -> TruncatedSeries:
    if f.ctx.order_cap > ctx.order_cap:
        return f.truncate(ctx.order_cap)
    return _lift(f, ctx)


def path_product(diagram: ScatteringDiagram, path: Sequence[Sequence], order_cap: int | None = None):
    """Path-ordered product along a polygonal path (list of vertices).

    Every segment must meet walls transversally and avoid singular points.
    """
    k = diagram.order_cap if order_cap is None else order_cap
    ctx = diagram.context.with_cap(k)
    auto = PathAutomorphism.identity(ctx)
    pts = [as_point(p) for p in path]
    for a, b in zip(pts, pts[1:]):
        vel = (b[0] - a[0], b[1] - a[1])
        hits = []
        for w in diagram.walls:
            oa, ob = w.offset(a), w.offset(b)
            if oa == 0 or ob == 0:
                raise BasePointOnWall("path vertex lies on a wall")
            if (oa > 0) == (ob > 0):
                continue
            s = oa / (oa - ob)
            q = (a[0] + s * vel[0], a[1] + s * vel[1])
            if not w.contains(q):
                continue
            hits.append((s, w))
        hits.sort(key=lambda h: h[0])
        for s, w in hits:
            auto = cross_wall(auto, w.with_function(_fit(w.function, ctx)), velocity=vel)
    return auto


# ---------------------------------------------------------------------------
# completion


class _Arrangement:
    """Walls plus a point index: point -> indices of walls whose support contains it."""

    def __init__(self, walls: list[Wall]):
        self.walls: list[Wall] = []
        self.points: dict[Point, set[int]] = {}
        self.index: dict = {}
        for w in walls:
            self.add(w)

    def _register(self, q: Point):
        if q in self.points:
            return
        self.points[q] = {i for i, w in enumerate(self.walls) if w.contains(q)}

    def add(self, w: Wall) -> int:
        key = w.support_key()
        if key in self.index:
            i = self.index[key]
            old = self.walls[i]
            self.walls[i] = old.with_function(old.function * w.function)
            return i
        i = len(self.walls)
        self.walls.append(w)
        self.index[key] = i
        for q, members in self.points.items():
            if w.contains(q):
                members.add(i)
        new_pts = []
        if not w.is_line:
            new_pts.append(w.base)
        for j in range(i):
            q = intersect(self.walls[j], w)
            if q is not None:
                new_pts.append(q)
        for q in new_pts:
            self._register(q)
        return i


def _check_concurrency(walls: Sequence[Wall], allow: bool):
    lines = [w for w in walls if w.is_line]
    seen: dict[Point, set[int]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            q = intersect(lines[i], lines[j])
            if q is not None:
                seen.setdefault(q, set()).update((i, j))
    for q, members in seen.items():
        if len(members) >= 3 and not allow:
            raise DegenerateArrangement(
                f"{len(members)} initial lines meet at {tuple(map(str, q))}; perturb the configuration"
            )


def _defect_rays(p: Point, auto: PathAutomorphism, k: int) -> dict[LatticeVector, dict]:
    """Order-k correction rays making the loop product at ``p`` trivial at order k."""
    ctx = auto.ctx
    dx, dy = auto.defect()
    bucket: dict = {}
    for series, slot in ((dx, 0), (dy, 1)):
        for (mx, my, c), a in series.terms.items():
            o = ctx.order(c)
            if o < k:
                raise DegenerateArrangement(
                    f"loop at {tuple(map(str, p))} fails below order {k}; configuration is not generic"
                )
            if o > k:
                continue
            bucket.setdefault((mx, my, c), [Fraction(0), Fraction(0)])[slot] += a
    rays: dict[LatticeVector, dict] = {}
    for (mx, my, c), (alpha, beta) in sorted(bucket.items()):
        if not alpha and not beta:
            continue
        if mx == 0 and my == 0:
            raise DegenerateArrangement("defect term with trivial lattice exponent")
        d, _ = primitive((mx, my))
        n = d.rot90()
        a = -(alpha * n.x + beta * n.y) / (n.x * n.x + n.y * n.y)
        if alpha + a * n.x != 0 or beta + a * n.y != 0:
            raise DegenerateArrangement("defect is not of wall type")
        rays.setdefault(d, {})[(mx, my, c)] = a
    return rays


def complete(
    initial: ScatteringDiagram,
    order_cap: int,
    *,
    allow_concurrent: bool = False,
    point_order: Callable[[list[Point]], list[Point]] | None = None,
) -> ScatteringDiagram:
    """Add rays order by order until every local loop product is trivial mod ``order_cap``.

    New rays are outgoing: based at the singular point, pointing along the
    exponent of their function.  Identical supports are merged.
    """
    ctx = initial.context.with_cap(order_cap)
    start = merge_supports(
        [w.with_function(_fit(w.function, ctx)) for w in initial.walls], ctx
    )
    _check_concurrency(start, allow_concurrent)
    arr = _Arrangement(start)
    for k in range(1, order_cap + 1):
        kctx = ctx.with_cap(k)
        pts = sorted(arr.points)
        if point_order is not None:
            pts = list(point_order(pts))
        pending: list[Wall] = []
        for p in pts:
            members = sorted(arr.points[p])
            local = []
            for i in members:
                f = arr.walls[i].function.truncate(k)
                if len(f.terms) > 1:
                    local.append(arr.walls[i].with_function(f))
            if len(local) < 1:
                continue
            sub = ScatteringDiagram(tuple(local), k, kctx)
            auto = loop_product(sub, p)
            if auto.is_identity():
                continue
            for d, terms in _defect_rays(p, auto, k).items():
                f = TruncatedSeries(ctx, {(0, 0, ctx.zero_class()): Fraction(1), **terms})
                pending.append(Wall(p, d, False, f, "scattered"))
        for w in pending:
            arr.add(w)
    walls = [w for w in arr.walls if len(w.function.terms) > 1]
    return ScatteringDiagram(tuple(walls), order_cap, ctx)


def is_consistent(diagram: ScatteringDiagram, order_cap: int | None = None) -> bool:
    k = diagram.order_cap if order_cap is None else order_cap
    return all(loop_product(diagram, p, order_cap=k).is_identity() for p in diagram.singular_points())


# ---------------------------------------------------------------------------
# GPS initial diagrams and canonical assembly


def gps_context(model: ToricModel, order_cap: int) -> SeriesContext:
    labels = model.class_labels
    return SeriesContext(labels, tuple(model.weight_of(s) for s in labels), order_cap)


def gps_initial_diagram(model: ToricModel, order_cap: int) -> ScatteringDiagram:
    """One line per blowup point, function ``1 + s * z^(r v)`` along the divisor ray ``v``."""
    ctx = gps_context(model, order_cap)
    walls = []
    for p in model.blowup_points:
        v = model.fan.rays[p.ray_index]
        m = (p.multiplicity * v.x, p.multiplicity * v.y)
        f = TruncatedSeries.one(ctx) + TruncatedSeries.monomial(ctx, m, {p.class_label: 1})
        walls.append(Wall(model.line_base(p), v, True, f, f"point:{p.class_label}"))
    return ScatteringDiagram(tuple(walls), order_cap, ctx)


def canonical_from_gps(gps: ScatteringDiagram, model: ToricModel) -> dict[LatticeVector, TruncatedSeries]:
    """Direction -> product of all scattered-ray functions in that direction.

    Directions equal to a divisor ray also pick up the initial-line factors
    ``1 + s z^(r v)`` of the points on that divisor.
    """
    out: dict[LatticeVector, TruncatedSeries] = {}
    ctx = gps.context
    for w in gps.walls:
        if w.is_line:
            continue
        loc = model.fan.locate(w.direction)
        if loc is None or loc[1].denominator != 1 or loc[2].denominator != 1:
            raise UnresolvedDirection(f"direction {tuple(w.direction)} is not resolved by the fan")
        d = w.direction
        out[d] = out.get(d, TruncatedSeries.one(ctx)) * _lift(w.function, ctx)
    for w in gps.walls:
        if not w.is_line:
            continue
        if w.direction in model.fan.rays:
            d = w.direction
            out[d] = out.get(d, TruncatedSeries.one(ctx)) * _lift(w.function, ctx)
        else:
            raise UnresolvedDirection(f"initial line {tuple(w.direction)} is not along a divisor ray")
    return dict(sorted(out.items(), key=lambda kv: angle_key(kv[0])))


def canonical_coordinates(model: ToricModel, direction: Sequence[int]) -> tuple[int, Fraction, Fraction]:
    """Cone index ``i`` and ``(a, b)`` with ``direction = a v_i + b v_{i+1}``."""
    loc = model.fan.locate(direction)
    if loc is None:
        raise UnresolvedDirection(f"direction {tuple(direction)} lies outside the fan")
    return loc


__all__ = [
    "Wall",
    "ScatteringDiagram",
    "PathAutomorphism",
    "cross_wall",
    "apply_elementary",
    "loop_product",
    "path_product",
    "log_jacobian",
    "complete",
    "is_consistent",
    "intersect",
    "merge_supports",
    "gps_initial_diagram",
    "gps_context",
    "canonical_from_gps",
    "canonical_coordinates",
]
