"""Integer lattice primitives, complete fans in the plane and toric models."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .errors import InvalidModel, NotBasis, ZeroVector

Point = tuple[Fraction, Fraction]


class LatticeVector(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return LatticeVector(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return LatticeVector(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return LatticeVector(-self.x, -self.y)

    def __mul__(self, k):  # type: ignore[override]
        return LatticeVector(self.x * k, self.y * k)

    __rmul__ = __mul__

    def dot(self, other) -> int:
        return self.x * other[0] + self.y * other[1]

    def rot90(self) -> "LatticeVector":
        """Counterclockwise quarter turn."""
        return LatticeVector(-self.y, self.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


def vec(v: Sequence[int]) -> LatticeVector:
    return v if isinstance(v, LatticeVector) else LatticeVector(int(v[0]), int(v[1]))


def primitive(v: Sequence[int]) -> tuple[LatticeVector, int]:
    """Split ``v`` as ``k * p`` with ``p`` primitive and ``k >= 1``."""
    x, y = int(v[0]), int(v[1])
    if x == 0 and y == 0:
        raise ZeroVector("cannot take the primitive part of (0,0)")
    k = gcd(x, y)
    return LatticeVector(x // k, y // k), k


def wedge(v: Sequence, w: Sequence):
    return v[0] * w[1] - v[1] * w[0]


def dot(v: Sequence, w: Sequence):
    return v[0] * w[0] + v[1] * w[1]


def _half(v: Sequence) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def angle_cmp(v: Sequence, w: Sequence) -> int:
    """Exact comparison of polar angles in [0, 2pi)."""
    hv, hw = _half(v), _half(w)
    if hv != hw:
        return -1 if hv < hw else 1
    c = wedge(v, w)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


angle_key = functools.cmp_to_key(angle_cmp)


def solve2(a: Sequence, b: Sequence, w: Sequence) -> tuple[Fraction, Fraction]:
    """Coefficients (s, t) with ``w = s*a + t*b``; ``a`` and ``b`` independent."""
    det = wedge(a, b)
    if det == 0:
        raise NotBasis(f"{tuple(a)} and {tuple(b)} are parallel")
    s = Fraction(wedge(w, b), det)
    t = Fraction(wedge(a, w), det)
    return s, t


@dataclass(frozen=True)
class Fan:
    """Rays listed counterclockwise, starting from the positive x-axis sector."""

    rays: tuple[LatticeVector, ...]
    complete: bool = True

    def __post_init__(self):
        rays = tuple(vec(r) for r in self.rays)
        object.__setattr__(self, "rays", rays)
        if not rays:
            raise InvalidModel("a fan needs at least one ray")
        for r in rays:
            if r.is_zero() or primitive(r)[1] != 1:
                raise InvalidModel(f"ray {tuple(r)} is not primitive")
        if len(set(rays)) != len(rays):
            raise InvalidModel("repeated ray")
        if sorted(rays, key=angle_key) != list(rays):
            raise InvalidModel("rays must be sorted counterclockwise from the positive x-axis")
        n = len(rays)
        pairs = n if self.complete else n - 1
        for i in range(pairs):
            if wedge(rays[i], rays[(i + 1) % n]) <= 0:
                raise InvalidModel(f"cone {i} between consecutive rays is not strictly convex")

    def __len__(self) -> int:
        return len(self.rays)

    def self_intersections(self) -> tuple[int, ...]:
        """D_i^2 = -a_i where v_{i-1} + v_{i+1} = a_i v_i (smooth complete fans)."""
        if not self.complete:
            raise InvalidModel("self-intersections need a complete fan")
        n = len(self.rays)
        out = []
        for i, v in enumerate(self.rays):
            s = self.rays[i - 1] + self.rays[(i + 1) % n]
            if wedge(s, v) != 0:
                raise InvalidModel("fan is not smooth")
            a = s.x // v.x if v.x else s.y // v.y
            out.append(-a)
        return tuple(out)

    def is_smooth(self) -> bool:
        n = len(self.rays)
        pairs = n if self.complete else n - 1
        return all(wedge(self.rays[i], self.rays[(i + 1) % n]) == 1 for i in range(pairs))

    def locate(self, w: Sequence[int]) -> tuple[int, Fraction, Fraction] | None:
        """Cone index ``i`` and ``(a, b) >= 0`` with ``w = a v_i + b v_{i+1}``."""
        n = len(self.rays)
        pairs = n if self.complete else n - 1
        for i in range(pairs):
            a, b = solve2(self.rays[i], self.rays[(i + 1) % n], w)
            if a >= 0 and b >= 0:
                return i, a, b
        return None


def semifano_decomposition_check(fan: Fan, w1: Sequence[int], w2: Sequence[int]) -> bool:
    if abs(wedge(w1, w2)) != 1:
        raise NotBasis(f"{tuple(w1)}, {tuple(w2)} is not a unimodular basis")
    for r in fan.rays:
        b, c = solve2(w1, w2, r)
        if not (b < 2 and c < 2):
            return False
    return True


@dataclass(frozen=True)
class BlowupPoint:
    """A non-toric blowup point on the divisor of ``fan.rays[ray_index]``.

    ``position`` fixes the induced wall line: its base point is
    ``position * rot90(v)`` for the ray ``v``.
    """

    ray_index: int
    position: Fraction
    multiplicity: int = 1
    class_label: str = "s"

    def __post_init__(self):
        object.__setattr__(self, "position", Fraction(self.position))


@dataclass(frozen=True)
class ToricModel:
    fan: Fan
    divisor_areas: tuple[Fraction, ...] = ()
    blowup_points: tuple[BlowupPoint, ...] = ()
    sphere_units: tuple[tuple[int, str], ...] = ()
    ray_labels: tuple[str, ...] = ()
    class_weights: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self):
        n = len(self.fan)
        areas = tuple(Fraction(a) for a in self.divisor_areas) or tuple(Fraction(0) for _ in range(n))
        object.__setattr__(self, "divisor_areas", areas)
        object.__setattr__(self, "blowup_points", tuple(self.blowup_points))
        object.__setattr__(self, "sphere_units", tuple((int(i), str(s)) for i, s in self.sphere_units))
        labels = tuple(self.ray_labels) or tuple(f"beta{i + 1}" for i in range(n))
        object.__setattr__(self, "ray_labels", labels)
        if len(areas) != n or len(labels) != n:
            raise InvalidModel("one area and one label per ray are required")
        if any(a < 0 for a in areas):
            raise InvalidModel("divisor areas must be non-negative")
        seen: set[str] = set()
        per_line: set[tuple] = set()
        for p in self.blowup_points:
            if not 0 <= p.ray_index < n:
                raise InvalidModel(f"ray_index {p.ray_index} out of range")
            if p.multiplicity < 1:
                raise InvalidModel("multiplicity must be at least 1")
            if p.class_label in seen:
                raise InvalidModel(f"duplicate class label {p.class_label!r}")
            seen.add(p.class_label)
            key = self._line_key(p)
            if key in per_line:
                raise InvalidModel(f"blowup point {p.class_label!r} coincides with another wall line")
            per_line.add(key)
        for i, s in self.sphere_units:
            if not 0 <= i < n:
                raise InvalidModel(f"sphere unit ray index {i} out of range")
        if len(set(labels)) != n:
            raise InvalidModel("ray labels must be distinct")

    def _line_key(self, p: BlowupPoint):
        # lines from v and -v share a support when their offsets agree
        v = self.fan.rays[p.ray_index]
        base = self.line_base(p)
        d, _ = primitive(v)
        if (d.x, d.y) < (0, 0):
            d = -d
        return (tuple(d), wedge(d, base))

    def line_base(self, p: BlowupPoint) -> Point:
        v = self.fan.rays[p.ray_index]
        r = v.rot90()
        return (p.position * r.x, p.position * r.y)

    @property
    def class_labels(self) -> tuple[str, ...]:
        return tuple(p.class_label for p in self.blowup_points)

    def weight_of(self, label: str) -> int:
        return dict(self.class_weights).get(label, 1)
