"""Tropical discs: balancing, Maslov indices, Mikhalkin multiplicity, clipping,
semi-Fano coefficients and a brute-force blowup-chain enumerator.

Directions of unbounded edges point towards infinity.  A disc with a single
unbounded edge of direction ``-v`` has boundary monomial ``z^v``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .broken import Potential
from .errors import (
    ExcludedSurface,
    InvalidModel,
    NotClippable,
    NotSemiFano,
    NotSemiFanoChain,
    NotTrivalent,
)
from .lattice import Fan, LatticeVector, Point, angle_key, primitive, vec, wedge
from .scattering import as_point


@dataclass(frozen=True)
class Edge:
    start: int
    end: int | None  # None: unbounded towards infinity
    direction: LatticeVector  # primitive, pointing from start to end (or to infinity)
    weight: int = 1

    @property
    def bounded(self) -> bool:
        return self.end is not None

    @property
    def vector(self) -> LatticeVector:
        return self.direction * self.weight


@dataclass(frozen=True)
class TropicalDisc:
    vertices: tuple[Point, ...]
    edges: tuple[Edge, ...]
    root: int = 0
    point_constraints: tuple[Point, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(as_point(v) for v in self.vertices))
        object.__setattr__(self, "point_constraints", tuple(as_point(p) for p in self.point_constraints))
        edges = []
        for e in self.edges:
            d, k = primitive(e.direction)
            if k != 1:
                raise InvalidModel("edge directions must be primitive")
            if e.weight < 1:
                raise InvalidModel("edge weights must be positive")
            if e.end is not None:
                a, b = self.vertices[e.start], self.vertices[e.end]
                diff = (b[0] - a[0], b[1] - a[1])
                if wedge(diff, d) != 0 or diff[0] * d.x + diff[1] * d.y <= 0:
                    raise InvalidModel("bounded edge direction disagrees with its endpoints")
            edges.append(Edge(e.start, e.end, d, e.weight))
        object.__setattr__(self, "edges", tuple(edges))

    def incident(self, v: int) -> list[tuple[LatticeVector, Edge]]:
        """Outgoing weighted directions at vertex ``v``."""
        out = []
        for e in self.edges:
            if e.start == v:
                out.append((e.vector, e))
            if e.end == v:
                out.append((-e.vector, e))
        return out

    @property
    def unbounded(self) -> list[Edge]:
        return [e for e in self.edges if e.end is None]

    def boundary(self) -> LatticeVector:
        """Boundary monomial exponent: minus the sum of weighted unbounded directions."""
        s = LatticeVector(0, 0)
        for e in self.unbounded:
            s = s - e.vector
        return s

    def non_root_vertices(self) -> list[int]:
        return [i for i in range(len(self.vertices)) if i != self.root]

    def describe(self) -> dict:
        return {
            "vertices": [[str(x), str(y)] for x, y in self.vertices],
            "root": self.root,
            "edges": [[e.start, e.end, list(e.direction), e.weight] for e in self.edges],
            "constraints": [[str(x), str(y)] for x, y in self.point_constraints],
        }


def check_balancing(d: TropicalDisc) -> bool:
    for v in d.non_root_vertices():
        s = LatticeVector(0, 0)
        for vecw, _ in d.incident(v):
            s = s + vecw
        if not s.is_zero():
            return False
    return True


def maslov_index(d: TropicalDisc) -> int:
    return 2 * sum(e.weight for e in d.unbounded)


def generalized_maslov(d: TropicalDisc) -> int:
    """Unbounded edges counted without weights, minus twice the constraint count."""
    return len(d.unbounded) - 2 * len(d.point_constraints)


def multiplicity(d: TropicalDisc) -> int:
    total = 1
    for v in d.non_root_vertices():
        inc = d.incident(v)
        if len(inc) > 3:
            raise NotTrivalent(f"vertex {v} has valence {len(inc)}")
        if len(inc) < 3:
            continue
        total *= abs(wedge(inc[0][0], inc[1][0]))
    return total


def _on_edge(d: TropicalDisc, e: Edge, p: Point) -> Fraction | None:
    """Parameter of ``p`` along ``e`` (strictly inside) or None."""
    a = d.vertices[e.start]
    diff = (p[0] - a[0], p[1] - a[1])
    if wedge(diff, e.direction) != 0:
        return None
    t = Fraction(diff[0] * e.direction.x + diff[1] * e.direction.y)
    if t <= 0:
        return None
    if e.end is not None:
        b = d.vertices[e.end]
        length = (b[0] - a[0]) * e.direction.x + (b[1] - a[1]) * e.direction.y
        if t >= length:
            return None
    return t


def clip(d: TropicalDisc, p: Sequence, w1: Sequence[int], w2: Sequence[int]) -> tuple[TropicalDisc, str]:
    """Remove the unbounded edge through ``p`` together with its vertex and sibling.

    The edge through ``p`` must be unbounded with direction ``-w1`` or
    ``-w2``, and one of the other two edges at its vertex must be unbounded
    as well.  The third edge is then extended to infinity; it must have
    weight one.  Returns the new disc and ``"clipped"``, or the input and
    ``"untouched"`` when the disc misses ``p``.
    """
    p = as_point(p)
    w1, w2 = vec(w1), vec(w2)
    hits = [e for e in d.edges if _on_edge(d, e, p) is not None]
    if not hits:
        if any(v == p for v in d.vertices):
            raise NotClippable("point sits on a vertex")
        return d, "untouched"
    e = hits[0]
    if e.end is not None:
        raise NotClippable("edge through the point is bounded")
    if e.direction not in (-w1, -w2) or e.weight != 1:
        raise NotClippable("edge through the point is not along -w1 or -w2 with weight 1")
    v = e.start
    if v == d.root:
        raise NotClippable("no vertex survives clipping")
    inc = [(x, f) for x, f in d.incident(v) if f is not e]
    if len(inc) != 2:
        raise NotClippable("vertex next to the point is not trivalent")
    sib = [f for x, f in inc if f.end is None and f.start == v]
    if len(sib) != 1:
        raise NotClippable("exactly one sibling edge must be unbounded")
    keep = [f for x, f in inc if f is not sib[0]][0]
    if keep.end != v or keep.weight != 1:
        raise NotClippable("surviving edge cannot be extended with weight 1")
    # rebuild without vertex v
    mapping = {}
    verts = []
    for i, q in enumerate(d.vertices):
        if i != v:
            mapping[i] = len(verts)
            verts.append(q)
    edges = []
    for f in d.edges:
        if f is e or f is sib[0]:
            continue
        if f is keep:
            edges.append(Edge(mapping[f.start], None, f.direction, 1))
        else:
            edges.append(Edge(mapping[f.start], None if f.end is None else mapping[f.end], f.direction, f.weight))
    cons = tuple(q for q in d.point_constraints if q != p)
    return TropicalDisc(tuple(verts), tuple(edges), mapping[d.root], cons), "clipped"


# ---------------------------------------------------------------------------
# semi-Fano coefficients


def _is_f2(fan: Fan, selfint: Sequence[int]) -> bool:
    return len(fan.rays) == 4 and sorted(selfint) == [-2, 0, 0, 2]


def minus_two_runs(fan: Fan) -> list[list[int]]:
    """Maximal cyclic runs of consecutive rays whose divisors have self-intersection -2."""
    si = fan.self_intersections()
    n = len(si)
    flags = [x == -2 for x in si]
    if all(flags):
        return [list(range(n))]
    start = next(i for i in range(n) if not flags[i])
    runs, cur = [], []
    for step in range(1, n + 1):
        i = (start + step) % n
        if flags[i]:
            cur.append(i)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return runs


def check_semifano(fan: Fan, error=NotSemiFano) -> tuple[int, ...]:
    if not fan.complete or not fan.is_smooth():
        raise error("fan must be complete and smooth")
    si = fan.self_intersections()
    if min(si) < -2:
        raise error(f"self-intersections {si} include a curve below -2")
    return si


def semifano_toric_potential(fan: Fan, run_structure: Sequence[Sequence[int]] | None = None, labels=None) -> Potential:
    """One term ``C(m_v+1, l_v) t^(beta_v) z^v`` per ray, ``m_v`` the run length, ``l_v`` the position."""
    si = check_semifano(fan)
    if _is_f2(fan, si):
        raise ExcludedSurface("the Hirzebruch surface F2 is excluded")
    runs = [list(r) for r in (run_structure if run_structure is not None else minus_two_runs(fan))]
    coef = {i: 1 for i in range(len(fan.rays))}
    for run in runs:
        m = len(run)
        for pos, i in enumerate(run, start=1):
            coef[i] = comb(m + 1, pos)
    labels = tuple(labels or (f"beta{i + 1}" for i in range(len(fan.rays))))
    terms = {}
    for i, v in enumerate(fan.rays):
        c = tuple(1 if j == i else 0 for j in range(len(fan.rays)))
        terms[((v.x, v.y), c)] = coef[i]
    return Potential(labels, terms, "semifano")


# ---------------------------------------------------------------------------
# blowup chains and the brute-force oracle


def chain_fans(fano_fan: Fan, chain: Sequence[tuple[Sequence[int], Sequence[int]]]) -> list[Fan]:
    """Fans after each corner blowup ``(w1, w2) -> w1 + w2``; validates semi-Fano at every step."""
    fans = [fano_fan]
    check_semifano(fano_fan, NotSemiFanoChain)
    cur = list(fano_fan.rays)
    for w1, w2 in chain:
        w1, w2 = vec(w1), vec(w2)
        n = len(cur)
        idx = None
        for i in range(n):
            a, b = cur[i], cur[(i + 1) % n]
            if {a, b} == {w1, w2}:
                idx = i
        if idx is None:
            raise NotSemiFanoChain(f"{tuple(w1)} and {tuple(w2)} are not adjacent rays")
        new = w1 + w2
        cur = cur[: idx + 1] + [new] + cur[idx + 1 :]
        cur = sorted(cur, key=angle_key)
        try:
            fan = Fan(tuple(cur))
        except InvalidModel as exc:
            raise NotSemiFanoChain(str(exc)) from exc
        check_semifano(fan, NotSemiFanoChain)
        fans.append(fan)
    return fans


def _trees(leaves: tuple[int, ...]):
    """Unordered full binary trees over a multiset of leaf labels (nested tuples)."""
    if len(leaves) == 1:
        yield leaves[0]
        return
    seen = set()
    n = len(leaves)
    first, rest = leaves[0], leaves[1:]
    for r in range(0, n - 1):
        for combo in itertools.combinations(range(len(rest)), r):
            left = (first,) + tuple(rest[i] for i in combo)
            right = tuple(rest[i] for i in range(len(rest)) if i not in combo)
            for lt in _trees(tuple(sorted(left))):
                for rt in _trees(tuple(sorted(right))):
                    key = tuple(sorted((repr(lt), repr(rt))))
                    if key not in seen:
                        seen.add(key)
                        yield (lt, rt)


def _tree_canon(t) -> str:
    if not isinstance(t, tuple):
        return str(t)
    a, b = sorted((_tree_canon(t[0]), _tree_canon(t[1])))
    return f"({a},{b})"


@dataclass
class _Node:
    leaf: int | None
    children: tuple
    total: LatticeVector


def _build(t, rays) -> _Node:
    if not isinstance(t, tuple):
        return _Node(t, (), rays[t])
    a, b = _build(t[0], rays), _build(t[1], rays)
    return _Node(None, (a, b), a.total + b.total)


def _edges_of(root: _Node):
    """Edges as (parent_node_or_None, child_node); parent None is the stop point."""
    out = [(None, root)]
    stack = [root]
    while stack:
        nd = stack.pop()
        for ch in nd.children:
            out.append((nd, ch))
            stack.append(ch)
    return out


def _solve_exact(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def enumerate_constrained_discs(
    fan: Fan, stop: Sequence, points: Sequence[Sequence], max_leaves: int = 4
) -> list[TropicalDisc]:
    """Rooted trees with weight-one leaves along fan rays, passing through exactly the given points.

    Each disc through ``k`` points has ``k + 1`` leaves, so its Maslov index
    minus twice its constraint count equals 2.  Positions are solved exactly.
    """
    u = as_point(stop)
    pts = [as_point(p) for p in points]
    k = len(pts)
    nleaves = k + 1
    if nleaves > max_leaves:
        return []
    rays = list(fan.rays)
    found: dict[str, TropicalDisc] = {}
    for leaves in itertools.combinations_with_replacement(range(len(rays)), nleaves):
        for t in _trees(leaves):
            root = _build(t, rays)
            edges = _edges_of(root)
            if any(ch.total.is_zero() for _, ch in edges):
                continue
            internal = [(par, ch) for par, ch in edges if ch.leaf is None]  # bounded edges
            # unknown lengths: one per bounded edge, indexed by child node
            idx = {id(ch): i for i, (_, ch) in enumerate(internal)}
            nb = len(internal)
            if nb != k:
                continue
            dirs = {}
            for par, ch in edges:
                d, w = primitive(-ch.total)
                dirs[id(ch)] = (d, w)
            # vertex position of node = u + sum over bounded edges on the path of len * dir
            paths: dict[int, list[int]] = {}

            def walk(nd, acc):
                if nd.leaf is None:
                    acc = acc + [id(nd)]
                    paths[id(nd)] = acc
                    for ch in nd.children:
                        walk(ch, acc)

            walk(root, [])
            for assign in itertools.product(range(len(edges)), repeat=k):
                rows, rhs = [], []
                for p, ei in zip(pts, assign):
                    par, ch = edges[ei]
                    d, _ = dirs[id(ch)]
                    start_path = paths[id(par)] if par is not None else []
                    # cross(p - A, d) = 0 with A = u + sum len_j dir_j
                    row = [Fraction(0)] * nb
                    for j in start_path:
                        dj = dirs[j][0]
                        row[idx[j]] -= wedge(dj, d)
                    rows.append(row)
                    rhs.append(-wedge((p[0] - u[0], p[1] - u[1]), d))
                sol = _solve_exact(rows, rhs) if k else []
                if sol is None or any(x <= 0 for x in sol):
                    continue
                disc = _realize(u, root, edges, dirs, idx, sol, pts)
                if disc is None:
                    continue
                key = _disc_key(disc)
                found.setdefault(key, disc)
    return [found[k] for k in sorted(found)]


def _realize(u, root, edges, dirs, idx, sol, pts) -> TropicalDisc | None:
    verts = [u]
    elist = []

    def place(nd, parent_vertex):
        d, w = dirs[id(nd)]
        if nd.leaf is not None:
            elist.append(Edge(parent_vertex, None, d, w))
            return
        length = sol[idx[id(nd)]]
        a = verts[parent_vertex]
        q = (a[0] + length * d.x, a[1] + length * d.y)
        verts.append(q)
        me = len(verts) - 1
        elist.append(Edge(parent_vertex, me, d, w))
        for ch in nd.children:
            place(ch, me)

    place(root, 0)
    try:
        disc = TropicalDisc(tuple(verts), tuple(elist), 0, tuple(pts))
    except InvalidModel:
        return None
    for p in pts:
        if any(p == v for v in disc.vertices):
            return None
        if sum(1 for e in disc.edges if _on_edge(disc, e, p) is not None) != 1:
            return None
    if len(set(disc.vertices)) != len(disc.vertices):
        return None
    return disc


def _disc_key(d: TropicalDisc) -> str:
    parts = sorted(f"{d.vertices[e.start]}>{e.direction}x{e.weight}" for e in d.edges)
    return "|".join(parts) + f"#{sorted(d.point_constraints)}"


def bulk_discs(fano_fan: Fan, stop, points, max_leaves: int = 4) -> list[TropicalDisc]:
    """All constrained discs through every subset of the points (subset order preserved)."""
    out = []
    for r in range(len(points) + 1):
        for subset in itertools.combinations(points, r):
            out.extend(enumerate_constrained_discs(fano_fan, stop, subset, max_leaves))
    return out


def bulk_potential_via_chain(
    fano_fan: Fan,
    blowup_chain: Sequence[tuple[Sequence[int], Sequence[int]]],
    constraint_points: Sequence[Sequence],
    stop: Sequence = (0, 0),
    max_leaves: int = 4,
    labels=None,
) -> Potential:
    """Bulk-deformed potential of the Fano surface, unclipped along the chain.

    Every constrained disc is clipped at ``p_1, ..., p_n`` in turn, with the
    corner ``(w1, w2)`` of the matching blowup step; a disc that survives as
    a single leaf ``-v`` contributes its multiplicity to ``z^v``.
    """
    fans = chain_fans(fano_fan, blowup_chain)
    final = fans[-1]
    if len(constraint_points) != len(blowup_chain):
        raise NotSemiFanoChain("one constraint point per blowup step is required")
    labels = tuple(labels or (f"beta{i + 1}" for i in range(len(final.rays))))
    terms: dict = {}
    for disc in bulk_discs(fano_fan, stop, constraint_points, max_leaves):
        weight = multiplicity(disc)
        cur = disc
        for (w1, w2), p in zip(blowup_chain, constraint_points):
            cur, _ = clip(cur, p, w1, w2)
        if len(cur.unbounded) != 1 or cur.point_constraints:
            raise NotClippable("a constrained disc did not reduce to a single leaf")
        v = cur.boundary()
        if v not in final.rays:
            raise NotClippable(f"disc boundary {tuple(v)} is not a ray of the final fan")
        i = final.rays.index(v)
        c = tuple(1 if j == i else 0 for j in range(len(final.rays)))
        terms[((v.x, v.y), c)] = terms.get(((v.x, v.y), c), 0) + weight
    return Potential(labels, terms, "bulk")


__all__ = [
    "Edge",
    "TropicalDisc",
    "check_balancing",
    "maslov_index",
    "generalized_maslov",
    "multiplicity",
    "clip",
    "semifano_toric_potential",
    "minus_two_runs",
    "chain_fans",
    "enumerate_constrained_discs",
    "bulk_discs",
    "bulk_potential_via_chain",
]
