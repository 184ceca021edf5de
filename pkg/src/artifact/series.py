"""Exact truncated series in lattice monomials z^m and curve-class parameters s^c.

A term is keyed by ``(mx, my, c)`` where ``c`` is a tuple of non-negative
integers indexed by the context labels.  The graded order of a term is the
weighted sum of ``c``; terms above ``order_cap`` are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import BadConstantTerm, ContextMismatch, NotInvertible

Key = tuple  # (mx, my, c)


@dataclass(frozen=True)
class SeriesContext:
    labels: tuple[str, ...]
    weights: tuple[int, ...]
    order_cap: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        w = tuple(int(x) for x in self.weights) if self.weights else tuple(1 for _ in self.labels)
        object.__setattr__(self, "weights", w)
        if len(w) != len(self.labels):
            raise ContextMismatch("one weight per label")
        if any(x <= 0 for x in w):
            raise ContextMismatch("label weights must be positive")
        if len(set(self.labels)) != len(self.labels):
            raise ContextMismatch("duplicate labels")
        if self.order_cap < 0:
            raise ContextMismatch("order_cap must be non-negative")

    @classmethod
    def make(cls, labels: Iterable[str], order_cap: int, weights: Iterable[int] | None = None):
        labels = tuple(labels)
        return cls(labels, tuple(weights) if weights is not None else tuple(1 for _ in labels), order_cap)

    def order(self, c: tuple[int, ...]) -> int:
        return sum(w * e for w, e in zip(self.weights, c))

    def zero_class(self) -> tuple[int, ...]:
        return (0,) * len(self.labels)

    def class_vector(self, c: Mapping[str, int] | Iterable[int] | None) -> tuple[int, ...]:
        if c is None:
            return self.zero_class()
        if isinstance(c, Mapping):
            unknown = set(c) - set(self.labels)
            if unknown:
                raise ContextMismatch(f"unknown labels {sorted(unknown)}")
            return tuple(int(c.get(lab, 0)) for lab in self.labels)
        c = tuple(int(x) for x in c)
        if len(c) != len(self.labels):
            raise ContextMismatch("class vector has the wrong length")
        return c

    def with_cap(self, k: int) -> "SeriesContext":
        return SeriesContext(self.labels, self.weights, k)


def _frac(a) -> Fraction:
    return a if isinstance(a, Fraction) else Fraction(a)


class TruncatedSeries:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: SeriesContext, terms: Mapping[Key, Fraction] | None = None, *, _trusted=False):
        self.ctx = ctx
        if _trusted:
            self.terms = terms  # type: ignore[assignment]
            return
        clean: dict[Key, Fraction] = {}
        cap = ctx.order_cap
        for (mx, my, c), a in (terms or {}).items():
            c = tuple(int(e) for e in c)
            if len(c) != len(ctx.labels) or any(e < 0 for e in c):
                raise ContextMismatch(f"bad class exponent {c}")
            if ctx.order(c) > cap:
                continue
            a = _frac(a)
            if a:
                key = (int(mx), int(my), c)
                clean[key] = clean.get(key, Fraction(0)) + a
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    # construction -----------------------------------------------------------
    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {}, _trusted=True)

    @classmethod
    def one(cls, ctx):
        return cls(ctx, {(0, 0, ctx.zero_class()): Fraction(1)}, _trusted=True)

    @classmethod
    def monomial(cls, ctx, m=(0, 0), c=None, coef=1):
        cv = ctx.class_vector(c)
        return cls(ctx, {(int(m[0]), int(m[1]), cv): coef})

    @classmethod
    def constant(cls, ctx, a):
        return cls.monomial(ctx, (0, 0), None, a)

    # inspection -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == TruncatedSeries.constant(self.ctx, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"TruncatedSeries({self.render()!r}, cap={self.ctx.order_cap})"

    def coefficient(self, m=(0, 0), c=None) -> Fraction:
        return self.terms.get((int(m[0]), int(m[1]), self.ctx.class_vector(c)), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0, 0), None)

    def min_order(self) -> int | None:
        """Least graded order among non-constant terms (None when there are none)."""
        orders = [self.ctx.order(c) for (mx, my, c) in self.terms if (mx, my, c) != (0, 0, self.ctx.zero_class())]
        return min(orders) if orders else None

    def items_sorted(self):
        ctx = self.ctx
        return sorted(self.terms.items(), key=lambda kv: (ctx.order(kv[0][2]), kv[0][0], kv[0][1], kv[0][2]))

    # arithmetic -------------------------------------------------------------
    def _check(self, other: "TruncatedSeries"):
        if self.ctx != other.ctx:
            raise ContextMismatch("series live in different contexts")

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(self.ctx, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, a in other.terms.items():
            v = out.get(k, 0) + a
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TruncatedSeries(self.ctx, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.ctx, {k: -a for k, a in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, a) -> "TruncatedSeries":
        a = _frac(a)
        if not a:
            return TruncatedSeries.zero(self.ctx)
        return TruncatedSeries(self.ctx, {k: v * a for k, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        ctx = self.ctx
        cap = ctx.order_cap
        a_items = [(k, v, ctx.order(k[2])) for k, v in self.terms.items()]
        b_items = sorted(((k, v, ctx.order(k[2])) for k, v in other.terms.items()), key=lambda t: t[2])
        out: dict[Key, Fraction] = {}
        for (ax, ay, ac), av, ao in a_items:
            room = cap - ao
            for (bx, by, bc), bv, bo in b_items:
                if bo > room:
                    break
                key = (ax + bx, ay + by, tuple(p + q for p, q in zip(ac, bc)))
                v = out.get(key, 0) + av * bv
                if v:
                    out[key] = v
                else:
                    del out[key]
        return TruncatedSeries(ctx, out, _trusted=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def mul_monomial(self, m, c=None, coef=1) -> "TruncatedSeries":
        """Multiply by ``coef * z^m s^c``; cheap shift of every exponent."""
        ctx = self.ctx
        cv = ctx.class_vector(c) if not isinstance(c, tuple) else c
        cap = ctx.order_cap
        coef = _frac(coef)
        out = {}
        for (mx, my, mc), v in self.terms.items():
            nc = tuple(p + q for p, q in zip(mc, cv))
            if ctx.order(nc) <= cap:
                out[(mx + m[0], my + m[1], nc)] = v * coef
        return TruncatedSeries(ctx, out, _trusted=True)

    def _split_unit(self):
        """Return (constant, g) with self = constant * (1 + g) and g of positive order."""
        z = self.ctx.zero_class()
        a0 = self.terms.get((0, 0, z), Fraction(0))
        if not a0:
            raise NotInvertible("constant term is zero")
        for (mx, my, c) in self.terms:
            if (mx, my, c) != (0, 0, z) and self.ctx.order(c) == 0:
                raise NotInvertible("a non-constant term of order zero blocks inversion")
        g = TruncatedSeries(
            self.ctx, {k: v / a0 for k, v in self.terms.items() if k != (0, 0, z)}, _trusted=True
        )
        return a0, g

    def power(self, n) -> "TruncatedSeries":
        """``self**n``; integer ``n`` of either sign, or rational ``n`` on a unit with constant 1."""
        if isinstance(n, int) and n >= 0:
            result = TruncatedSeries.one(self.ctx)
            base = self
            while n:
                if n & 1:
                    result = result * base
                n >>= 1
                if n:
                    base = base * base
            return result
        a0, g = self._split_unit()
        n = _frac(n)
        if n.denominator != 1 and a0 != 1:
            raise NotInvertible("rational powers need constant term 1")
        # binomial series; g has order >= 1 so g^k vanishes past the cap
        result = TruncatedSeries.one(self.ctx)
        gk = TruncatedSeries.one(self.ctx)
        binom = Fraction(1)
        for k in range(1, self.ctx.order_cap + 1):
            gk = gk * g
            if not gk:
                break
            binom = binom * (n - k + 1) / k
            result = result + gk.scale(binom)
        if a0 != 1:
            result = result.scale(a0 ** int(n))
        return result

    def __pow__(self, n):
        return self.power(n)

    def inverse(self) -> "TruncatedSeries":
        return self.power(-1)

    def log(self) -> "TruncatedSeries":
        """log f for f with constant term exactly 1."""
        z = self.ctx.zero_class()
        if self.terms.get((0, 0, z)) != 1:
            raise BadConstantTerm("log needs constant term 1")
        g = self - 1
        return g.log1p()

    def log1p(self) -> "TruncatedSeries":
        """log(1 + g) for g with zero constant term and positive-order terms."""
        self._check_nilpotent("log1p")
        result = TruncatedSeries.zero(self.ctx)
        gk = TruncatedSeries.one(self.ctx)
        for k in range(1, self.ctx.order_cap + 1):
            gk = gk * self
            if not gk:
                break
            result = result + gk.scale(Fraction((-1) ** (k + 1), k))
        return result

    def exp(self) -> "TruncatedSeries":
        self._check_nilpotent("exp")
        result = TruncatedSeries.one(self.ctx)
        gk = TruncatedSeries.one(self.ctx)
        fact = 1
        for k in range(1, self.ctx.order_cap + 1):
            gk = gk * self
            if not gk:
                break
            fact *= k
            result = result + gk.scale(Fraction(1, fact))
        return result

    def _check_nilpotent(self, what):
        for (mx, my, c) in self.terms:
            if self.ctx.order(c) == 0:
                raise BadConstantTerm(f"{what} needs every term to have positive order")

    # structure --------------------------------------------------------------
    def truncate(self, k: int) -> "TruncatedSeries":
        if k > self.ctx.order_cap:
            raise ContextMismatch("cannot raise the cap by truncation")
        ctx = self.ctx.with_cap(k)
        return TruncatedSeries(ctx, {key: v for key, v in self.terms.items() if ctx.order(key[2]) <= k}, _trusted=True)

    def homogeneous_part(self, k: int) -> "TruncatedSeries":
        return TruncatedSeries(
            self.ctx, {key: v for key, v in self.terms.items() if self.ctx.order(key[2]) == k}, _trusted=True
        )

    def recast(self, ctx: SeriesContext, label_map: Mapping[str, str] | None = None) -> "TruncatedSeries":
        """Move into a context with more labels (or renamed ones)."""
        label_map = dict(label_map or {})
        idx = []
        for lab in self.ctx.labels:
            target = label_map.get(lab, lab)
            if target not in ctx.labels:
                raise ContextMismatch(f"label {lab!r} missing from target context")
            idx.append(ctx.labels.index(target))
        out: dict[Key, Fraction] = {}
        for (mx, my, c), v in self.terms.items():
            nc = [0] * len(ctx.labels)
            for i, e in zip(idx, c):
                nc[i] += e
            key = (mx, my, tuple(nc))
            if ctx.order(key[2]) <= ctx.order_cap:
                out[key] = out.get(key, 0) + v
        return TruncatedSeries(ctx, out)

    def lattice_support(self) -> set[tuple[int, int]]:
        return {(mx, my) for (mx, my, c) in self.terms}

    def evaluate(self, x, y, values: Mapping[str, object] | None = None):
        """Numeric value with z^(1,0)=x, z^(0,1)=y and labels from ``values`` (missing -> 1)."""
        values = values or {}
        vals = [values.get(lab, 1) for lab in self.ctx.labels]
        total = 0
        for (mx, my, c), v in self.terms.items():
            t = float(v) if not isinstance(x, Fraction) else v
            t = t * x**mx * y**my
            for base, e in zip(vals, c):
                if e:
                    t = t * base**e
            total = total + t
        return total

    # text -------------------------------------------------------------------
    def render(self, max_terms: int | None = None) -> str:
        return render_terms(self.items_sorted(), self.ctx.labels, max_terms)

    def __str__(self):
        return self.render()

    def to_data(self) -> list:
        return [[mx, my, list(c), str(v)] for (mx, my, c), v in self.items_sorted()]

    @classmethod
    def from_data(cls, ctx: SeriesContext, data: list) -> "TruncatedSeries":
        return cls(ctx, {(int(mx), int(my), tuple(c)): Fraction(v) for mx, my, c, v in data})


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def monomial_text(mx: int, my: int, c: tuple[int, ...], labels: tuple[str, ...]) -> str:
    parts = [_power(lab, e) for lab, e in zip(labels, c) if e]
    if mx:
        parts.append(_power("x", mx))
    if my:
        parts.append(_power("y", my))
    return "*".join(parts)


def render_terms(items, labels, max_terms: int | None = None) -> str:
    """Render ``((mx, my, c), coef)`` pairs in the given order as a signed sum."""
    items = list(items)
    if not items:
        return "0"
    shown = items if max_terms is None else items[:max_terms]
    out = []
    for i, ((mx, my, c), v) in enumerate(shown):
        mono = monomial_text(mx, my, c, labels)
        mag = abs(v)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if v < 0 else "+"
        if i == 0:
            out.append(f"-{body}" if v < 0 else body)
        else:
            out.append(f" {sign} {body}")
    if max_terms is not None and len(items) > max_terms:
        out.append(" + ...")
    return "".join(out)
