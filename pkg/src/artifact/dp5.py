"""Degree-5 del Pezzo workbench: chamber potentials, chart data, critical points.

The numeric layer specializes the Novikov parameter ``T`` to a real number
``t`` and writes ``A = t^a``, ``B = t^b``, ``C = t^c``. Valuations are read
off as two-point log-slopes along a continuation path in ``t``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
import sympy as sp

from .broken import Potential, potential
from .errors import DegenerateParams, InvalidModel, UnknownChamber, ValuationMismatch
from .lattice import BlowupPoint, Fan, ToricModel
from .scattering import ScatteringDiagram, complete, gps_initial_diagram

CHAMBERS = ("central", "up", "right")

# Limit potentials (epsilon = 0) as {exponent: {(a, b, c): coef}} where
# (a, b, c) are the powers of A, B, C.
DISPLAYED = {
    "central": {
        (1, 0): {(0, 0, 0): 1},
        (0, 1): {(0, 0, 0): 1},
        (-1, 0): {(1, 0, 0): 1, (0, 0, 1): 1},
        (0, -1): {(0, 1, 0): 1, (0, 0, 1): 1},
        (-1, 1): {(1, 0, 0): 1},
        (1, -1): {(0, 1, 0): 1},
        (-1, -1): {(0, 0, 1): 1},
    },
    "up": {
        (1, 0): {(0, 0, 0): 1},
        (0, 1): {(0, 0, 0): 1, (1, 0, 0): 1},
        (1, 1): {(0, 0, 0): 1},
        (-1, 0): {(1, 0, 0): 1, (0, 0, 1): 1},
        (0, -1): {(0, 1, 0): 1},
        (-1, 1): {(1, 0, 0): 1},
        (-1, -1): {(0, 0, 1): 1},
    },
    "right": {
        (1, 0): {(0, 0, 0): 1, (0, 1, 0): 1},
        (0, 1): {(0, 0, 0): 1},
        (1, 1): {(0, 0, 0): 1},
        (-1, 0): {(1, 0, 0): 1},
        (0, -1): {(0, 1, 0): 1, (0, 0, 1): 1},
        (1, -1): {(0, 1, 0): 1},
        (-1, -1): {(0, 0, 1): 1},
    },
}

QUINTIC_DISPLAYED = ("1", "-1", "-2*A*B", "2*A*B - C**2", "A**2*B**2 - C**2*(A + B)", "-A*B*C**2 - A**2*B**2")


@dataclass(frozen=True)
class Dp5Params:
    a: Fraction = Fraction(2)
    b: Fraction = Fraction(2)
    c: Fraction = Fraction(5)
    a_prime: Fraction = Fraction(1)
    b_prime: Fraction = Fraction(1)
    a_dprime: Fraction | None = None
    b_dprime: Fraction | None = None
    t_numeric: float = 0.1

    def __post_init__(self):
        for name in ("a", "b", "c", "a_prime", "b_prime"):
            v = Fraction(getattr(self, name))
            if v <= 0:
                raise InvalidModel(f"{name} must be positive")
            object.__setattr__(self, name, v)
        for name, default in (("a_dprime", self.a_prime), ("b_dprime", self.b_prime)):
            v = getattr(self, name)
            object.__setattr__(self, name, Fraction(default if v is None else v))
        if not self.a_prime < self.a or not self.b_prime < self.b:
            raise InvalidModel("need 0 < a' < a and 0 < b' < b")
        if not 0 < self.t_numeric < 1:
            raise InvalidModel("t_numeric must lie in (0, 1)")
        object.__setattr__(self, "t_numeric", float(self.t_numeric))

    def numeric(self, t: float | None = None) -> tuple[float, float, float]:
        t = self.t_numeric if t is None else t
        return t ** float(self.a), t ** float(self.b), t ** float(self.c)


def dp5_model(params: Dp5Params) -> ToricModel:
    fan = Fan(((1, 0), (0, 1), (-1, 0), (-1, -1), (0, -1)))
    return ToricModel(
        fan,
        (0, 0, params.a, params.c, params.b),
        (BlowupPoint(0, params.b_prime, 1, "s1"), BlowupPoint(1, -params.a_prime, 1, "s2")),
    )


def chamber_point(params: Dp5Params, chamber: str) -> tuple[Fraction, Fraction]:
    """A generic base point inside the named chamber."""
    ap, bp, a, b = params.a_prime, params.b_prime, params.a, params.b
    if chamber == "central":
        return (ap / 2, bp / 3)
    if chamber == "up":
        return (ap * Fraction(2, 7), bp + (b - bp) * Fraction(6, 11))
    if chamber == "right":
        return (ap + (a - ap) * Fraction(6, 11), bp * Fraction(2, 7))
    raise UnknownChamber(f"unknown chamber {chamber!r}; expected one of {CHAMBERS}")


@lru_cache(maxsize=16)
def dp5_diagram(params: Dp5Params, order_cap: int = 6) -> ScatteringDiagram:
    return complete(gps_initial_diagram(dp5_model(params), order_cap), order_cap)


def dp5_potential(params: Dp5Params, chamber: str = "central", order_cap: int = 6, limit: bool = True) -> Potential:
    """Chamber potential from broken lines.

    With ``limit`` the exceptional classes and the two zero-area divisors are
    set to 1 and ``beta3, beta5, beta4`` are renamed ``A, B, C``.
    """
    u = chamber_point(params, chamber)
    model = dp5_model(params)
    pot = potential(dp5_diagram(params, order_cap), u, model, order_cap)
    pot = Potential(pot.labels, pot.terms, chamber)
    if not limit:
        return pot
    return limit_form(pot)


def limit_form(pot: Potential) -> Potential:
    named = pot.specialize({"beta1": None, "beta2": None, "beta3": "A", "beta5": "B", "beta4": "C", "s1": None, "s2": None})
    order = [named.labels.index(x) for x in ("A", "B", "C")]
    terms = {(m, tuple(c[i] for i in order)): v for (m, c), v in named.terms.items()}
    return Potential(("A", "B", "C"), terms, pot.chamber_id)


def displayed_potential(chamber: str) -> Potential:
    if chamber not in DISPLAYED:
        raise UnknownChamber(f"unknown chamber {chamber!r}")
    terms = {(m, c): Fraction(v) for m, cs in DISPLAYED[chamber].items() for c, v in cs.items()}
    return Potential(("A", "B", "C"), terms, chamber)


# ---------------------------------------------------------------- symbolic


A_, B_, C_, Z1, Z2, LAM = sp.symbols("A B C z1 z2 lambda")


def symbolic_potential():
    A, B, C, z1, z2 = A_, B_, C_, Z1, Z2
    return z1 + z2 + (A + C) / z1 + (B + C) / z2 + A * z2 / z1 + B * z1 / z2 + C / (z1 * z2)


def displayed_fg():
    A, B, C, z1, z2 = A_, B_, C_, Z1, Z2
    f = z1**2 * z2 - (A + C) * z2 - A * z2**2 + B * z1**2 - C
    g = z1 * z2**2 - (B + C) * z1 - B * z1**2 + A * z2**2 - C
    return f, g


def _alpha_beta_gamma():
    A, B, C, z1, z2 = A_, B_, C_, Z1, Z2
    alpha = z1 + z2 + 1
    beta = z1 * (C + B * z1) - z2 * (C + A * z2)
    gamma = (z1 + z2) * (z1 * z2 - C) - B * z1 - A * z2 - 2 * C
    return alpha, beta, gamma


def _param_z(lam):
    d = lam**2 - A_ * B_
    return C_ * (lam + A_) / d, C_ * (lam + B_) / d


def quintic_from_relation(shift) -> list:
    """Eliminate along ``lambda = z1 z2 + shift`` with the closed forms for ``z1, z2``.

    Returns the monic coefficient list (highest degree first) of
    ``(lambda - shift)(lambda^2 - AB)^2 - C^2 (lambda + A)(lambda + B)``.
    """
    lam = LAM
    p = (lam - shift) * (lam**2 - A_ * B_) ** 2 - C_**2 * (lam + A_) * (lam + B_)
    return [sp.expand(c) for c in sp.Poly(sp.expand(p), lam).all_coeffs()]


def displayed_quintic() -> list:
    return [sp.expand(sp.sympify(s, locals={"A": A_, "B": B_, "C": C_})) for s in QUINTIC_DISPLAYED]


def gamma2_polynomial(shift=1) -> list:
    """``(lambda^2 - AB)^2 (z1 z2 + shift - lambda)`` on the closed-form curve, as coefficients."""
    z1, z2 = _param_z(LAM)
    expr = sp.cancel((LAM**2 - A_ * B_) ** 2 * (z1 * z2 + shift - LAM))
    return [sp.expand(c) for c in sp.Poly(sp.expand(expr), LAM).all_coeffs()]


def symbolic_checks() -> dict[str, bool]:
    """Exact polynomial identities around the critical equations."""
    W = symbolic_potential()
    f, g = displayed_fg()
    alpha, beta, gamma = _alpha_beta_gamma()
    z1, z2 = Z1, Z2
    out = {}
    out["f_is_cleared_dW1"] = sp.expand(sp.cancel(sp.diff(W, z1) * z1**2 * z2) - f) == 0
    out["g_is_cleared_dW2"] = sp.expand(sp.cancel(sp.diff(W, z2) * z1 * z2**2) - g) == 0
    out["z2f_minus_z1g_factors"] = sp.expand(z2 * f - z1 * g - alpha * beta) == 0
    out["f_plus_g_is_gamma"] = sp.expand(f + g - gamma) == 0
    out["quintic_matches_display"] = [sp.expand(a - b) for a, b in zip(quintic_from_relation(1), displayed_quintic())] == [0] * 6
    out["gamma2_is_negative_quintic"] = [sp.expand(a + b) for a, b in zip(gamma2_polynomial(1), displayed_quintic())] == [0] * 6
    # on beta = 0 with both lambda relations, f + g equals (z1 + z2)(z1 z2 - C - lambda)
    lz1, lz2 = _param_z(LAM)
    lhs = sp.cancel(gamma.subs({z1: lz1, z2: lz2}, simultaneous=True))
    out["sum_relation_shift_is_minus_C"] = sp.simplify(lhs - (lz1 + lz2) * (lz1 * lz2 - C_ - LAM)) == 0
    out["sum_relation_shift_is_plus_1"] = sp.simplify(lhs - (lz1 + lz2) * (lz1 * lz2 + 1 - LAM)) == 0
    return out


def cubic_relation_check(relations=None, substitution=None) -> bool:
    """Does ``xyz + x + z + 1 = 0`` follow from the chart transitions at ``T = 1``?

    ``relations`` are expressions in ``u1, v1, u2, v2`` that vanish;
    ``substitution`` maps ``x, y, z`` to expressions in the same variables.
    """
    u1, v1, u2, v2 = sp.symbols("u1 v1 u2 v2")
    names = {"u1": u1, "v1": v1, "u2": u2, "v2": v2}
    if relations is None:
        relations = ("u1*v1 - 1 - u2", "u2*v2 - 1 - u1")
    if substitution is None:
        substitution = {"x": "u1", "y": "-v1", "z": "v2"}
    rels = [sp.sympify(r, locals=names) for r in relations]
    x, y, z = (sp.sympify(substitution[k], locals=names) for k in ("x", "y", "z"))
    target = sp.expand(x * y * z + x + z + 1)
    G = sp.groebner(rels, u1, v1, u2, v2, order="lex")
    return G.reduce(target)[1] == 0


# ---------------------------------------------------------------- numeric


def _fg(z1, z2, A, B, C):
    f = z1 * z1 * z2 - (A + C) * z2 - A * z2 * z2 + B * z1 * z1 - C
    g = z1 * z2 * z2 - (B + C) * z1 - B * z1 * z1 + A * z2 * z2 - C
    return f, g


def _fg_scale(z1, z2, A, B, C):
    a1, a2 = abs(z1), abs(z2)
    sf = a1 * a1 * a2 + (A + C) * a2 + A * a2 * a2 + B * a1 * a1 + C
    sg = a1 * a2 * a2 + (B + C) * a1 + B * a1 * a1 + A * a2 * a2 + C
    return sf, sg


def relative_residual(z1, z2, A, B, C) -> float:
    f, g = _fg(z1, z2, A, B, C)
    sf, sg = _fg_scale(z1, z2, A, B, C)
    return max(abs(f) / sf, abs(g) / sg)


def _newton(z1, z2, A, B, C, steps=60):
    for _ in range(steps):
        f, g = _fg(z1, z2, A, B, C)
        j11 = 2 * z1 * z2 + 2 * B * z1
        j12 = z1 * z1 - (A + C) - 2 * A * z2
        j21 = z2 * z2 - (B + C) - 2 * B * z1
        j22 = 2 * z1 * z2 + 2 * A * z2
        det = j11 * j22 - j12 * j21
        if det == 0:
            break
        d1 = (f * j22 - g * j12) / det
        d2 = (j11 * g - j21 * f) / det
        z1, z2 = z1 - d1, z2 - d2
        if abs(d1) <= 1e-17 * max(abs(z1), 1e-300) and abs(d2) <= 1e-17 * max(abs(z2), 1e-300):
            break
    return z1, z2


@lru_cache(maxsize=1)
def _case2_eliminants():
    """Resultants of beta and gamma in z2 and in z1, as coefficient functions of (A, B, C)."""
    _, beta, gamma = _alpha_beta_gamma()
    out = []
    for keep, drop in ((Z1, Z2), (Z2, Z1)):
        res = sp.Poly(sp.resultant(beta, gamma, drop), keep)
        out.append([sp.lambdify((A_, B_, C_), c, "math") for c in res.all_coeffs()])
    return tuple(out)


def _trimmed_roots(coeffs):
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if len(coeffs) < 2:
        return []
    return [complex(r) for r in np.roots(coeffs)]


def _case2_candidates(A, B, C):
    """Pairs from either eliminant, completed with both roots of beta in the other variable."""
    e1, e2 = _case2_eliminants()
    cands = []
    for z1 in _trimmed_roots([c(A, B, C) for c in e1]):
        # beta = -A z2^2 - C z2 + (B z1^2 + C z1)
        for z2 in np.roots([-A, -C, B * z1 * z1 + C * z1]):
            cands.append((z1, complex(z2)))
    for z2 in _trimmed_roots([c(A, B, C) for c in e2]):
        # beta = B z1^2 + C z1 - (A z2^2 + C z2)
        for z1 in np.roots([B, C, -(A * z2 * z2 + C * z2)]):
            cands.append((complex(z1), z2))
    return cands


def _raw_points(A, B, C):
    """Candidate solutions of f = g = 0 as (kind, z1, z2), before filtering."""
    out = []
    disc = cmath.sqrt(1 - 2 * A - 2 * B - 2 * A * B + A * A + B * B + 4 * C)
    for sgn in (1, -1):
        z1 = (-A + B - 1 + sgn * disc) / 2
        z2 = -1 - z1
        out.append(("case1", *_newton(complex(z1), complex(z2), A, B, C)))
    for z1, z2 in _case2_candidates(A, B, C):
        if z1 == 0 or z2 == 0:
            continue
        out.append(("case2", *_newton(z1, z2, A, B, C)))
    return out


def _dedupe(points, A, B, C):
    kept = []
    for kind, z1, z2 in points:
        if abs(z1) == 0 or abs(z2) == 0 or not (math.isfinite(abs(z1)) and math.isfinite(abs(z2))):
            continue
        if relative_residual(z1, z2, A, B, C) > 1e-12:
            continue
        if kind == "case2" and abs(z1 + z2 + 1) < 1e-9 * (abs(z1) + abs(z2) + 1):
            continue
        dup = False
        for _, w1, w2 in kept:
            if abs(z1 - w1) <= 1e-7 * abs(w1) and abs(z2 - w2) <= 1e-7 * abs(w2):
                dup = True
                break
        if not dup:
            kept.append((kind, z1, z2))
    return kept


def hessian(z1, z2, A, B, C):
    w11 = 2 * (A + C) / z1**3 + 2 * A * z2 / z1**3 + 2 * C / (z1**3 * z2)
    w22 = 2 * (B + C) / z2**3 + 2 * B * z1 / z2**3 + 2 * C / (z1 * z2**3)
    w12 = -A / z1**2 - B / z2**2 + C / (z1**2 * z2**2)
    return w11, w12, w22


def relative_hessian_det(z1, z2, A, B, C) -> float:
    w11, w12, w22 = hessian(z1, z2, A, B, C)
    det = w11 * w22 - w12 * w12
    return abs(det) / (abs(w11 * w22) + abs(w12) ** 2)


def potential_value(z1, z2, A, B, C):
    return z1 + z2 + (A + C) / z1 + (B + C) / z2 + A * z2 / z1 + B * z1 / z2 + C / (z1 * z2)


@dataclass(frozen=True)
class CriticalPoint:
    kind: str  # case1 | case2 | antidiagonal
    chart: str
    z: tuple[complex, complex]
    valuation: tuple[float, float]
    lam: complex | None = None
    lam_valuation: float | None = None
    chart_coords: tuple[complex, complex] | None = None
    chart_valuation: tuple[float, float] | None = None
    residual: float = 0.0
    hessian_det: float = 0.0
    value: complex = 0j
    label: str | None = None
    predicted: tuple[float, float] | None = None

    def as_data(self) -> dict:
        def cx(z):
            return [float(z.real), float(z.imag)]

        return {
            "kind": self.kind,
            "chart": self.chart,
            "z": [cx(self.z[0]), cx(self.z[1])],
            "valuation": [round(v, 6) for v in self.valuation],
            "label": self.label,
            "predicted": None if self.predicted is None else [float(x) for x in self.predicted],
            "chart_coords": None if self.chart_coords is None else [cx(w) for w in self.chart_coords],
            "chart_valuation": None if self.chart_valuation is None else [round(v, 6) for v in self.chart_valuation],
            "residual": float(f"{self.residual:.3e}"),
            "hessian_det": float(f"{self.hessian_det:.6e}"),
        }


@dataclass
class CriticalReport:
    params: Dp5Params
    points: list[CriticalPoint]
    nongeometric: list[CriticalPoint] = field(default_factory=list)

    @property
    def geometric_count(self) -> int:
        return len(self.points)


def _track(z, t0, t1, A_of, steps=12):
    z1, z2 = z
    for k in range(1, steps + 1):
        t = t0 * (t1 / t0) ** (k / steps)
        z1, z2 = _newton(z1, z2, *A_of(t))
    return z1, z2


def _slope(v0, v1, t0, t1):
    if v0 == 0 or v1 == 0:
        return math.inf
    return (math.log(abs(v0)) - math.log(abs(v1))) / (math.log(t0) - math.log(t1))


def _region(params: Dp5Params, x: float, y: float) -> str:
    ap, bp, a, b = (float(v) for v in (params.a_prime, params.b_prime, params.a, params.b))
    if 0 < x < ap and 0 < y < bp:
        return "torus:central"
    if 0 < x < ap and bp < y < b:
        return "torus:up"
    if ap < x < a and 0 < y < bp:
        return "torus:right"
    return "torus:other"


def critical_points(params: Dp5Params | None = None, t_ratio: float = 0.5) -> CriticalReport:
    """All critical points of the central limit potential at ``t = params.t_numeric``.

    Case 1 comes from the quadratic on ``z1 + z2 + 1 = 0``; Case 2 from the
    eliminant of the two factors ``beta`` and ``gamma``. Valuations are
    two-point log-slopes between ``t`` and ``t * t_ratio``.
    """
    params = params or Dp5Params()
    t0 = params.t_numeric
    t1 = t0 * t_ratio
    A, B, C = params.numeric(t0)
    pts = _dedupe(_raw_points(A, B, C), A, B, C)
    geo: list[CriticalPoint] = []
    non: list[CriticalPoint] = []
    for kind, z1, z2 in pts:
        w1, w2 = _track((z1, z2), t0, t1, params.numeric)
        val = (_slope(z1, w1, t0, t1), _slope(z2, w2, t0, t1))
        res = relative_residual(z1, z2, A, B, C)
        hd = relative_hessian_det(z1, z2, A, B, C)
        value = potential_value(z1, z2, A, B, C)
        if kind == "case1":
            if abs(val[0]) < abs(val[1]):
                # (z1, z2) ~ (-1 + B, -B): immersed chart 1
                bd = float(params.b_dprime)
                u = z2 * t0 ** (-bd)
                v = (1 + z1) / u
                u1 = w2 * t1 ** (-bd)
                v1 = (1 + w1) / u1
                pred = (0.0, float(params.b))
                chart = "immersed:1"
            else:
                ad = float(params.a_dprime)
                u = z1 * t0 ** (-ad)
                v = (1 + z2) / u
                u1 = w1 * t1 ** (-ad)
                v1 = (1 + w2) / u1
                pred = (float(params.a), 0.0)
                chart = "immersed:2"
            cval = (_slope(u, u1, t0, t1), _slope(v, v1, t0, t1))
            geo.append(
                CriticalPoint(
                    "case1", chart, (z1, z2), val, chart_coords=(u, v), chart_valuation=cval,
                    residual=res, hessian_det=hd, value=value, label="1", predicted=pred,
                )
            )
        else:
            lam0 = (B * z1 + C) / z2
            lam1 = (params.numeric(t1)[1] * w1 + params.numeric(t1)[2]) / w2
            geo.append(
                CriticalPoint(
                    "case2", _region(params, *val), (z1, z2), val, lam=lam0,
                    lam_valuation=_slope(lam0, lam1, t0, t1), residual=res, hessian_det=hd, value=value,
                )
            )
    if A != B:
        # the antidiagonal candidate; it solves both factored combinations but not f itself
        z1 = 2 * C / (A - B)
        non.append(
            CriticalPoint(
                "antidiagonal", "none", (complex(z1), complex(-z1)), (float(params.c - min(params.a, params.b)),) * 2,
                residual=relative_residual(complex(z1), complex(-z1), A, B, C),
            )
        )
    if len(geo) != 7:
        raise DegenerateParams(f"found {len(geo)} distinct critical points, expected 7")
    geo.sort(key=_point_key)
    _check_distinct(geo)
    return CriticalReport(params, geo, non)


def _point_key(p: CriticalPoint):
    return (p.kind, round(p.valuation[0], 6), round(p.valuation[1], 6), round(p.z[0].real, 12), round(p.z[0].imag, 12))


def _check_distinct(points):
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            a, b = points[i].z, points[j].z
            scale = abs(a[0]) + abs(a[1]) + abs(b[0]) + abs(b[1])
            if abs(a[0] - b[0]) + abs(a[1] - b[1]) < 1e-8 * scale:
                raise DegenerateParams("two critical points coincide at this parameter choice")


def case_formulas(params: Dp5Params) -> dict[str, tuple[float, float]]:
    a, b, c = float(params.a), float(params.b), float(params.c)
    return {
        "i": (a / 2, b / 2),
        "ii": (c / 2 - b / 4, b / 2),
        "iii": (a / 2, c / 2 - a / 4),
        "iv": (c / 3, c / 3),
    }


def _close(v, p, rel):
    return all(abs(x - y) <= rel * max(1.0, abs(y)) for x, y in zip(v, p))


def classify_valuations(report: CriticalReport, rel_tol: float = 0.02, strict: bool = True) -> list[CriticalPoint]:
    """Attach case labels (i)-(iv) to Case-2 points by matching valuation formulas.

    With ``strict`` an unmatched point raises ``ValuationMismatch``; otherwise
    it keeps ``label=None``.
    """
    forms = case_formulas(report.params)
    out = []
    unmatched = []
    for p in report.points:
        if p.kind != "case2":
            out.append(p)
            continue
        hits = [k for k, v in forms.items() if _close(p.valuation, v, rel_tol)]
        if not hits:
            unmatched.append(p)
            out.append(p)
            continue
        label = hits[0]
        out.append(
            CriticalPoint(**{**p.__dict__, "label": label, "predicted": forms[label]})
        )
    report.points = out
    if unmatched and strict:
        vals = ", ".join(f"({p.valuation[0]:.3f}, {p.valuation[1]:.3f})" for p in unmatched)
        raise ValuationMismatch(f"no case formula matches valuation pair(s) {vals}")
    return out


@dataclass
class NondegeneracyReport:
    hessian_ok: bool
    min_relative_det: float
    values_distinct: bool
    symbolic: dict[str, bool]
    residual_ok: bool
    max_residual: float

    @property
    def passed(self) -> bool:
        return self.hessian_ok and self.residual_ok


def verify_nondegeneracy(report: CriticalReport, det_tol: float = 1e-8, res_tol: float = 1e-10) -> NondegeneracyReport:
    pts = report.points
    dets = [p.hessian_det for p in pts]
    res = [p.residual for p in pts]
    vals = [p.value for p in pts]
    distinct = True
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if abs(vals[i] - vals[j]) <= 1e-12 * (abs(vals[i]) + abs(vals[j])):
                distinct = False
    return NondegeneracyReport(
        hessian_ok=min(dets) > det_tol,
        min_relative_det=min(dets),
        values_distinct=distinct,
        symbolic=symbolic_checks(),
        residual_ok=max(res) < res_tol,
        max_residual=max(res),
    )


__all__ = [
    "Dp5Params",
    "CriticalPoint",
    "CriticalReport",
    "NondegeneracyReport",
    "CHAMBERS",
    "dp5_model",
    "dp5_diagram",
    "dp5_potential",
    "displayed_potential",
    "limit_form",
    "chamber_point",
    "symbolic_checks",
    "quintic_from_relation",
    "displayed_quintic",
    "gamma2_polynomial",
    "cubic_relation_check",
    "critical_points",
    "classify_valuations",
    "case_formulas",
    "verify_nondegeneracy",
    "relative_residual",
    "relative_hessian_det",
]
