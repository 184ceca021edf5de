"""Broken lines, chamber potentials and blowdown filtering.

A broken line with monomial ``c z^m s^k`` travels with velocity ``m``.  It
arrives from infinity along ``u - infinity * m_j`` carrying ``z^(m_j)`` and,
each time it crosses a wall with function ``f``, it may replace its
monomial by any term of ``z^m f^<n0, m>`` (``n0`` pairing positively with
the velocity).  Enumeration runs backwards from the stop point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NonGenericStop, StopOnWall, UnknownClass
from .lattice import LatticeVector, Point, ToricModel, vec, wedge
from .scattering import ScatteringDiagram, Wall, as_point, cross_wall, PathAutomorphism
from .series import SeriesContext, TruncatedSeries, monomial_text, render_terms

Monomial = tuple  # (coefficient: Fraction, exponent: LatticeVector, classes: tuple[int, ...])


@dataclass(frozen=True)
class Bend:
    point: Point
    wall_direction: LatticeVector
    power: int
    before: Monomial
    after: Monomial


@dataclass(frozen=True)
class BrokenLine:
    """Forward record: ``segments[i] = (monomial, end point)``; the last ends at ``stop``."""

    stop: Point
    source_index: int
    segments: tuple[tuple[Monomial, Point], ...]
    bends: tuple[Bend, ...]

    @property
    def final(self) -> Monomial:
        return self.segments[-1][0]

    @property
    def weight(self) -> Fraction:
        return self.final[0]

    def as_text(self, labels: Sequence[str]) -> str:
        parts = [f"source={self.source_index}"]
        for b in self.bends:
            parts.append(
                f"bend@({b.point[0]},{b.point[1]}) dir={tuple(b.wall_direction)} "
                f"-> {_mono_text(b.after, labels)}"
            )
        parts.append(f"final={_mono_text(self.final, labels)}")
        return " | ".join(parts)

    def polyline(self, extend: Fraction = Fraction(10)) -> list[Point]:
        """Vertices from a far point on the incoming ray through the bends to the stop."""
        first_m = self.segments[0][0][1]
        start_at = self.bends[0].point if self.bends else self.stop
        far = (start_at[0] - extend * first_m[0], start_at[1] - extend * first_m[1])
        return [far] + [b.point for b in self.bends] + [self.stop]


def _mono_text(m: Monomial, labels) -> str:
    a, e, c = m
    return render_terms([((e[0], e[1], tuple(c)), a)], labels)


class _WallIndex:
    """Float pre-screen of wall hits; every reported hit is confirmed exactly."""

    def __init__(self, walls: Sequence[Wall]):
        self.walls = list(walls)
        self.rows = [
            (w, w.direction.x, w.direction.y, float(w.base[0]), float(w.base[1])) for w in self.walls
        ]

    def first_hit(self, q: Point, v: Sequence[int]):
        """First crossing of the backward ray ``q - t v`` (t > 0) with the walls.

        Returns ``(t, point, [walls])`` with collinear walls at that point
        grouped, or ``None`` if the ray escapes.  Meeting two non-parallel
        walls at once means the path runs through a singular point.
        """
        qx, qy = float(q[0]), float(q[1])
        scale = 1.0 + abs(qx) + abs(qy)
        approx = []
        for w, dx, dy, bx, by in self.rows:
            den = dx * v[1] - dy * v[0]
            if den == 0:
                continue
            t = (dx * (qy - by) - dy * (qx - bx)) / den
            if t > -1e-9 * scale:
                approx.append((t, w, den))
        approx.sort(key=lambda r: r[0])
        best_t = None
        group: list[Wall] = []
        for tf, w, den in approx:
            if best_t is not None and tf > float(best_t) + 1e-9 * scale:
                break
            t = w.offset(q) / den
            if t <= 0:
                continue
            p = (q[0] - t * v[0], q[1] - t * v[1])
            if not w.is_line:
                s = w.param(p)
                if s < 0:
                    continue
                if s == 0:
                    raise NonGenericStop(f"broken line passes through the ray base {tuple(map(str, p))}")
            if best_t is None or t < best_t:
                best_t, group = t, [w]
            elif t == best_t:
                group.append(w)
        if best_t is None:
            return None
        p = (q[0] - best_t * v[0], q[1] - best_t * v[1])
        d0 = group[0].direction
        if any(wedge(w.direction, d0) != 0 for w in group[1:]):
            raise NonGenericStop(f"broken line passes through the singular point {tuple(map(str, p))}")
        return best_t, p, group


def _merged_function(group: list[Wall], ctx: SeriesContext) -> tuple[LatticeVector, TruncatedSeries]:
    d = group[0].direction
    f = TruncatedSeries.one(ctx)
    for w in group:
        g = w.function
        if g.ctx != ctx:
            g = TruncatedSeries(ctx, g.terms) if g.ctx.order_cap <= ctx.order_cap else g.truncate(ctx.order_cap)
        f = f * g
    return d, f


def _reachable_exponents(diagram: ScatteringDiagram, cap: int) -> dict[tuple[int, int], int]:
    """Exponent sums of wall terms, with the least class order needed to reach them."""
    ctx = diagram.context
    atoms = set()
    for w in diagram.walls:
        for (mx, my, c) in w.function.terms:
            o = ctx.order(c)
            if o and o <= cap:
                atoms.add(((mx, my), o))
    best: dict[tuple[int, int], int] = {(0, 0): 0}
    frontier = {(0, 0): 0}
    while frontier:
        nxt: dict[tuple[int, int], int] = {}
        for e, o in frontier.items():
            for (ae, ao) in atoms:
                no = o + ao
                if no > cap:
                    continue
                ne = (e[0] + ae[0], e[1] + ae[1])
                if ne not in best or best[ne] > no:
                    best[ne] = no
                    nxt[ne] = no
        frontier = nxt
    return best


def _check_stop(diagram: ScatteringDiagram, u: Point):
    for w in diagram.walls:
        if w.contains(u):
            raise StopOnWall(f"stop point {tuple(map(str, u))} lies on a wall")


def enumerate_broken_lines(
    diagram: ScatteringDiagram,
    u: Sequence,
    source: Sequence[int],
    order_cap: int | None = None,
    source_index: int = 0,
) -> list[BrokenLine]:
    """All broken lines ending at ``u`` that start with ``z^source``, up to class order ``order_cap``."""
    u = as_point(u)
    cap = diagram.order_cap if order_cap is None else min(order_cap, diagram.order_cap)
    ctx = diagram.context.with_cap(cap)
    walls = [_fit_wall(w, ctx) for w in diagram.walls]
    walls = [w for w in walls if len(w.function.terms) > 1]
    diagram_k = ScatteringDiagram(tuple(walls), cap, ctx)
    _check_stop(diagram_k, u)
    src = vec(source)
    zero = ctx.zero_class()
    powers: dict = {}

    def fpow(d, f, k):
        key = (id(f), k)
        if key not in powers:
            powers[key] = (f, f.power(k))
        return powers[key][1]

    found: list[BrokenLine] = []
    index = _WallIndex(walls)

    def search(q: Point, m: tuple[int, int], acc: tuple[int, ...], coef: Fraction, tail: list):
        # tail: list of (bend point, wall dir, power, term) recorded backwards
        hit = index.first_hit(q, m)
        if hit is None:
            if m == (src.x, src.y):
                found.append(_assemble(u, source_index, src, zero, list(reversed(tail))))
            return
        _, p, group = hit
        d, f = _merged_function(group, ctx)
        n = d.rot90()
        k = abs(n.x * m[0] + n.y * m[1])
        room = cap - ctx.order(acc)
        for (ex, ey, ec), b in sorted(fpow(d, f, k).terms.items()):
            if ctx.order(ec) > room:
                continue
            prev = (m[0] - ex, m[1] - ey)
            if prev == (0, 0):
                continue
            nacc = tuple(x + y for x, y in zip(acc, ec))
            tail.append((p, d, k, (ex, ey, ec), b))
            search(p, prev, nacc, coef * b, tail)
            tail.pop()

    reach = _reachable_exponents(diagram_k, cap)
    for e in sorted(reach):
        m = (src.x + e[0], src.y + e[1])
        if m == (0, 0):
            continue
        search(u, m, zero, Fraction(1), [])
    found.sort(key=lambda bl: (bl.final[1], bl.final[2], tuple(b.point for b in bl.bends)))
    return found


def _fit_wall(w: Wall, ctx: SeriesContext) -> Wall:
    f = w.function
    if f.ctx.order_cap > ctx.order_cap:
        f = f.truncate(ctx.order_cap)
    elif f.ctx != ctx:
        f = TruncatedSeries(ctx, f.terms)
    return w.with_function(f)


def _assemble(u, source_index, src, zero, bends_fwd) -> BrokenLine:
    coef = Fraction(1)
    m = (src.x, src.y)
    c = zero
    segments = []
    bends = []
    cur: Monomial = (coef, LatticeVector(*m), c)
    for p, d, k, (ex, ey, ec), b in bends_fwd:
        segments.append((cur, p))
        nxt = (cur[0] * b, LatticeVector(cur[1].x + ex, cur[1].y + ey), tuple(x + y for x, y in zip(cur[2], ec)))
        if (ex, ey) != (0, 0) or any(ec) or b != 1:
            bends.append(Bend(p, d, k, cur, nxt))
        cur = nxt
    segments.append((cur, u))
    # keep only genuine bend vertices as segment breaks
    merged = []
    for mono, end in segments:
        if merged and merged[-1][0][1] == mono[1] and merged[-1][0][2] == mono[2] and merged[-1][0][0] == mono[0]:
            merged[-1] = (mono, end)
        else:
            merged.append((mono, end))
    return BrokenLine(u, source_index, tuple(merged), tuple(bends))


def replay(line: BrokenLine, diagram: ScatteringDiagram) -> bool:
    """Check every bend against the crossing automorphism computed by ``cross_wall``."""
    ctx = diagram.context
    m_cur = line.segments[0][0][1]
    for b in line.bends:
        a0, m0, c0 = b.before
        if m0 != m_cur:
            return False
        group = [w for w in diagram.walls if w.contains(b.point) and wedge(w.direction, b.wall_direction) == 0]
        if not group:
            return False
        _, f = _merged_function(group, ctx)
        merged = Wall(b.point, b.wall_direction, True, f)
        auto = cross_wall(PathAutomorphism.identity(ctx), merged, velocity=m0)
        image = auto.apply(TruncatedSeries.monomial(ctx, m0, c0, a0))
        a1, m1, c1 = b.after
        if image.coefficient(m1, c1) != a1:
            return False
        m_cur = m1
    return m_cur == line.final[1]


# ---------------------------------------------------------------------------
# potentials


@dataclass(frozen=True)
class Potential:
    labels: tuple[str, ...]
    terms: Mapping[tuple, Fraction]  # ((mx, my), classes) -> coefficient
    chamber_id: str = ""

    def __post_init__(self):
        clean = {k: Fraction(v) for k, v in self.terms.items() if v}
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda kv: _term_key(kv[0]))))
        object.__setattr__(self, "labels", tuple(self.labels))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Potential):
            return NotImplemented
        return self.labels == other.labels and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.labels, frozenset(self.terms.items())))

    def exponents(self) -> list[tuple[int, int]]:
        return sorted({m for (m, c) in self.terms})

    def by_exponent(self) -> dict[tuple[int, int], dict[tuple[int, ...], Fraction]]:
        out: dict = {}
        for (m, c), a in self.terms.items():
            out.setdefault(m, {})[c] = a
        return dict(sorted(out.items()))

    def render(self) -> str:
        items = [((m[0], m[1], c), a) for (m, c), a in self.terms.items()]
        return render_terms(items, self.labels)

    __str__ = render

    def grouped_text(self) -> str:
        """One line per lattice exponent with its class-coefficient polynomial."""
        lines = []
        for m, coeffs in self.by_exponent().items():
            poly = render_terms([((0, 0, c), a) for c, a in sorted(coeffs.items())], self.labels)
            mono = monomial_text(m[0], m[1], (), ()) or "1"
            lines.append(f"{mono}: {poly}")
        return "\n".join(lines)

    def specialize(self, mapping: Mapping[str, str | None]) -> "Potential":
        """Rename labels (value = new name) or set them to 1 (value = None)."""
        unknown = set(mapping) - set(self.labels)
        if unknown:
            raise UnknownClass(f"unknown labels {sorted(unknown)}")
        new_labels: list[str] = []
        for lab in self.labels:
            target = mapping.get(lab, lab)
            if target is not None and target not in new_labels:
                new_labels.append(target)
        idx = [new_labels.index(mapping.get(lab, lab)) if mapping.get(lab, lab) is not None else None for lab in self.labels]
        out: dict = {}
        for (m, c), a in self.terms.items():
            nc = [0] * len(new_labels)
            for i, e in zip(idx, c):
                if i is not None:
                    nc[i] += e
            key = (m, tuple(nc))
            out[key] = out.get(key, 0) + a
        return Potential(tuple(new_labels), out, self.chamber_id)

    def to_series(self, ctx: SeriesContext) -> TruncatedSeries:
        idx = [ctx.labels.index(lab) for lab in self.labels]
        terms = {}
        for (m, c), a in self.terms.items():
            nc = [0] * len(ctx.labels)
            for i, e in zip(idx, c):
                nc[i] += e
            terms[(m[0], m[1], tuple(nc))] = a
        return TruncatedSeries(ctx, terms)

    @classmethod
    def from_series(cls, f: TruncatedSeries, chamber_id: str = "") -> "Potential":
        return cls(f.ctx.labels, {((mx, my), c): a for (mx, my, c), a in f.terms.items()}, chamber_id)

    def as_data(self) -> dict:
        return {
            "labels": list(self.labels),
            "chamber": self.chamber_id,
            "terms": [[m[0], m[1], list(c), str(a)] for (m, c), a in self.terms.items()],
        }


def _term_key(k):
    (mx, my), c = k
    return (sum(c), mx, my, c)


def chamber_id(diagram: ScatteringDiagram, u: Sequence) -> str:
    """Sign pattern of ``u`` against every wall (rays it lies behind are marked 'o')."""
    u = as_point(u)
    marks = []
    for w in diagram.sorted_walls():
        s = w.offset(u)
        if not w.is_line and w.param(u) < 0:
            marks.append("o")
        else:
            marks.append("+" if s > 0 else "-" if s < 0 else "0")
    return "".join(marks)


def potential_labels(diagram: ScatteringDiagram, model: ToricModel) -> tuple[str, ...]:
    labels = list(model.ray_labels)
    for lab in diagram.context.labels:
        if lab not in labels:
            labels.append(lab)
    for _, s in model.sphere_units:
        if s not in labels:
            labels.append(s)
    return tuple(labels)


def theta_lines(diagram: ScatteringDiagram, u: Sequence, model: ToricModel, order_cap: int | None = None):
    """Broken lines from every divisor ray of the model, in ray order."""
    out = []
    for j, v in enumerate(model.fan.rays):
        out.extend(enumerate_broken_lines(diagram, u, v, order_cap, source_index=j))
    return out


def potential(diagram: ScatteringDiagram, u: Sequence, model: ToricModel, order_cap: int | None = None) -> Potential:
    """Sum over divisor rays of broken-line final monomials, weighted by t^(beta_j)."""
    labels = potential_labels(diagram, model)
    dlabels = diagram.context.labels
    pos = {lab: i for i, lab in enumerate(labels)}
    units: dict[int, list[str]] = {}
    for i, s in model.sphere_units:
        units.setdefault(i, []).append(s)
    terms: dict = {}
    for line in theta_lines(diagram, u, model, order_cap):
        a, m, c = line.final
        base = [0] * len(labels)
        base[pos[model.ray_labels[line.source_index]]] += 1
        for lab, e in zip(dlabels, c):
            base[pos[lab]] += e
        variants = [(tuple(base), a)]
        for s in units.get(line.source_index, []):
            grown = []
            for cv, av in variants:
                bumped = list(cv)
                bumped[pos[s]] += 1
                grown.append((tuple(bumped), av))
            variants += grown
        for cv, av in variants:
            key = ((m.x, m.y), cv)
            terms[key] = terms.get(key, 0) + av
    return Potential(labels, terms, chamber_id(diagram, u))


def blowdown_filter(pot: Potential, exceptional_labels: Iterable[str]) -> Potential:
    """Keep terms with zero exponent on every listed class, then drop those coordinates."""
    drop = list(exceptional_labels)
    unknown = [lab for lab in drop if lab not in pot.labels]
    if unknown:
        raise UnknownClass(f"unknown class labels {unknown}")
    keep_idx = [i for i, lab in enumerate(pot.labels) if lab not in drop]
    drop_idx = [i for i, lab in enumerate(pot.labels) if lab in drop]
    out = {}
    for (m, c), a in pot.terms.items():
        if any(c[i] for i in drop_idx):
            continue
        out[(m, tuple(c[i] for i in keep_idx))] = a
    return Potential(tuple(pot.labels[i] for i in keep_idx), out, pot.chamber_id)


def transport(pot: Potential, wall: Wall, velocity: Sequence[int], order_cap: int) -> Potential:
    """Apply the crossing automorphism of ``wall`` to a potential (coordinate change across it)."""
    labels = pot.labels
    ctx = SeriesContext.make(labels, order_cap)
    f = wall.function.recast(ctx)
    w = wall.with_function(f)
    auto = cross_wall(PathAutomorphism.identity(ctx), w, velocity=velocity)
    return Potential.from_series(auto.apply(pot.to_series(ctx)), pot.chamber_id)


def dump_lines(lines: Iterable[BrokenLine], labels: Sequence[str]) -> str:
    return "\n".join(bl.as_text(labels) for bl in lines) + "\n"


__all__ = [
    "Bend",
    "BrokenLine",
    "Potential",
    "enumerate_broken_lines",
    "theta_lines",
    "potential",
    "blowdown_filter",
    "chamber_id",
    "replay",
    "transport",
    "dump_lines",
]
