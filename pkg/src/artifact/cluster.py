"""Cluster fixed data, seeds, mutation, Langlands duality and rank-two quotients.

Coordinates: a seed ``e_1..e_n`` is the standard basis of ``N``; ``N°`` is
spanned by ``d_i e_i`` and ``M°`` carries the dual basis ``f_i = e_i^*/d_i``.
In these coordinates ``p^*(e_i)`` is row ``i`` of ``eps = omega * diag(d)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import InvalidModel, ParallelImages, WrongRank
from .lattice import primitive, wedge
from .scattering import ScatteringDiagram, Wall
from .series import SeriesContext, TruncatedSeries

Matrix = tuple[tuple[Fraction, ...], ...]


def _mat(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def integer_left_kernel(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of ``{a in Z^n : a^T A = 0}`` for an ``n x m`` integer matrix ``A``.

    Integer row reduction of ``[A | I]``; a unimodular transform keeps the
    kernel basis saturated.
    """
    n = len(rows)
    m = len(rows[0]) if n else 0
    aug = [list(map(int, rows[i])) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(m):
        while True:
            nz = [i for i in range(r, n) if aug[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(aug[i][c]))
            aug[r], aug[piv] = aug[piv], aug[r]
            done = True
            for i in range(r + 1, n):
                if aug[i][c]:
                    q = aug[i][c] // aug[r][c]
                    aug[i] = [a - q * b for a, b in zip(aug[i], aug[r])]
                    if aug[i][c]:
                        done = False
            if done:
                r += 1
                break
        if r == n:
            break
    return [row[m:] for row in aug[r:] if not any(row[:m])]


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form (positive pivots, reduced above), zero rows removed."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return []
    n, m = len(a), len(a[0])
    r = 0
    for c in range(m):
        while True:
            nz = [i for i in range(r, n) if a[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            clean = True
            for i in range(r + 1, n):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    clean = clean and a[i][c] == 0
            if clean:
                break
        if r < n and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
        if r == n:
            break
    return [row for row in a if any(row)]


@dataclass(frozen=True)
class FixedData:
    skew_form: Matrix
    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "skew_form", _mat(self.skew_form))
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        n = len(self.d)
        w = self.skew_form
        if len(w) != n or any(len(r) != n for r in w):
            raise InvalidModel("skew form must be n x n with one weight per index")
        for i in range(n):
            for j in range(n):
                if w[i][j] != -w[j][i]:
                    raise InvalidModel("form is not skew-symmetric")
        if any(x <= 0 for x in self.d):
            raise InvalidModel("weights d_i must be positive")
        g = 0
        for x in self.d:
            g = gcd(g, x)
        if g != 1:
            raise InvalidModel("weights d_i must have gcd 1")
        for i in range(n):
            for j in range(n):
                if (w[i][j] * self.d[j]).denominator != 1:
                    raise InvalidModel("integrality {N, N°} in Z fails")

    @property
    def rank(self) -> int:
        return len(self.d)

    @property
    def D(self) -> int:
        out = 1
        for x in self.d:
            out = lcm(out, x)
        return out

    def form(self, a: Sequence, b: Sequence) -> Fraction:
        return sum(a[i] * self.skew_form[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))


@dataclass(frozen=True)
class Seed:
    """Basis vectors of ``N`` as integer rows; ``last`` records the previous mutation (ignored by ==)."""

    basis: tuple[tuple[int, ...], ...]
    last: tuple[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        b = tuple(tuple(int(x) for x in r) for r in self.basis)
        object.__setattr__(self, "basis", b)
        if abs(_det_int(b)) != 1:
            raise InvalidModel("seed basis must be unimodular")

    @classmethod
    def standard(cls, n: int) -> "Seed":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def _det_int(m) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in r] for r in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


def seed_form(data: FixedData, s: Seed) -> Matrix:
    """omega_ij = {e_i, e_j} in the seed basis."""
    return tuple(tuple(data.form(a, b) for b in s.basis) for a in s.basis)


def exchange_matrix(data: FixedData, s: Seed) -> Matrix:
    """eps_ij = {e_i, e_j} d_j."""
    w = seed_form(data, s)
    return tuple(tuple(w[i][j] * data.d[j] for j in range(data.rank)) for i in range(data.rank))


def mutate_seed(data: FixedData, s: Seed, k: int, sign: int | None = None) -> Seed:
    """Signed mutation: ``e_k -> -e_k`` and ``e_i -> e_i + [sign * eps_ik]_+ e_k``.

    Without an explicit sign the opposite of the previous sign is used when
    the previous mutation was in the same direction (otherwise +1), which
    makes repeated mutation in one direction an involution.
    """
    if not 0 <= k < data.rank:
        raise InvalidModel(f"direction {k} out of range")
    if sign is None:
        sign = -s.last[1] if (s.last is not None and s.last[0] == k) else 1
    eps = exchange_matrix(data, s)
    ek = s.basis[k]
    new = []
    for i, ei in enumerate(s.basis):
        if i == k:
            new.append(tuple(-x for x in ek))
            continue
        c = max(Fraction(0), sign * eps[i][k])
        if c.denominator != 1:
            raise InvalidModel("exchange matrix entry is not integral")
        new.append(tuple(a + int(c) * b for a, b in zip(ei, ek)))
    return Seed(tuple(new), (k, sign))


@dataclass(frozen=True)
class MutationPullback:
    """``z^n -> z^n (1 + z^exchange)^(<exponent, n>)`` on the named side."""

    side: str
    exchange: tuple[Fraction, ...]
    exponent: tuple[Fraction, ...]

    def power_on(self, n: Sequence[int]) -> Fraction:
        return sum(Fraction(a) * b for a, b in zip(self.exponent, n))

    def is_identity_on(self, n: Sequence[int]) -> bool:
        return self.power_on(n) == 0


def mutation_pullbacks(data: FixedData, s: Seed, k: int) -> tuple[MutationPullback, MutationPullback]:
    """X-side and A-side substitution data at direction ``k`` in seed coordinates.

    X side: ``z^n (1 + z^(e_k))^(-{n, e_k} d_k)`` for ``n`` in ``N``.
    A side: ``z^m (1 + z^(v_k))^(-<d_k e_k, m>)`` for ``m`` in ``M°`` (``f``-coordinates).
    """
    n = data.rank
    eps = exchange_matrix(data, s)
    xs = MutationPullback(
        "X",
        tuple(Fraction(1 if j == k else 0) for j in range(n)),
        tuple(-eps[i][k] for i in range(n)),
    )
    a_side = MutationPullback(
        "A",
        tuple(eps[k]),
        tuple(Fraction(-1 if j == k else 0) for j in range(n)),
    )
    return xs, a_side


def langlands_dual(data: FixedData) -> FixedData:
    """Dual weights ``D/d_i``; form rescaled by ``1/D`` and written in the basis ``d_i e_i``."""
    D = data.D
    n = data.rank
    d = data.d
    w = tuple(
        tuple(Fraction(d[i] * d[j]) * data.skew_form[i][j] / D for j in range(n)) for i in range(n)
    )
    return FixedData(w, tuple(D // x for x in d))


def langlands_mutation_factors(data: FixedData, k: int) -> list[tuple[int, Fraction]]:
    """For the dual X side at direction ``k``: ``(j, power)`` with ``z^(Le_j)`` picking up
    ``(1 + z^(Le_k))^power``."""
    dual = langlands_dual(data)
    xs, _ = mutation_pullbacks(dual, Seed.standard(dual.rank), k)
    return [(j, xs.exponent[j]) for j in range(dual.rank)]


@dataclass(frozen=True)
class Quotient:
    quotient_map: tuple[tuple[int, ...], ...]  # 2 x n, acting on N° coordinates
    kernel: tuple[tuple[int, ...], ...]  # basis of K° in N° coordinates
    images: tuple[tuple[int, int], ...]  # d_i e_i-bar
    e_bar: tuple[tuple[Fraction, Fraction], ...]
    v_bar: tuple[tuple[Fraction, Fraction], ...]
    ind_e: tuple[int, ...]  # divisibility of d_i e_i-bar
    ind_v: tuple[int, ...]  # divisibility of v_i-bar
    d: tuple[int, ...]


def _quotient_map(form_n0: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], list[list[int]]]:
    """Quotient of ``N°`` by the kernel of the form (given on the ``N°`` basis)."""
    rows = [[x for x in r] for r in form_n0]
    denom = 1
    for r in rows:
        for x in r:
            denom = lcm(denom, Fraction(x).denominator)
    ints = [[int(x * denom) for x in r] for r in rows]
    kernel = integer_left_kernel(ints)
    n = len(rows)
    if kernel:
        ann = integer_left_kernel([[kv[i] for kv in kernel] for i in range(n)])
    else:
        ann = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    q = hermite_rows(ann)
    return q, hermite_rows(kernel) if kernel else []


def kernel_quotient(data: FixedData, s: Seed | None = None) -> Quotient:
    s = s or Seed.standard(data.rank)
    n = data.rank
    w = seed_form(data, s)
    if _rank(w) != 2:
        raise WrongRank(f"skew form has rank {_rank(w)}, expected 2")
    d = data.d
    # the form on N° in the basis d_i e_i
    w0 = [[w[i][j] * d[i] * d[j] for j in range(n)] for i in range(n)]
    q, kernel = _quotient_map(w0)
    if len(q) != 2:
        raise WrongRank("quotient lattice is not of rank 2")
    images = tuple((q[0][i], q[1][i]) for i in range(n))
    for i, im in enumerate(images):
        if im == (0, 0):
            raise ParallelImages(f"image of d_{i + 1} e_{i + 1} vanishes")
    for i in range(n):
        for j in range(i + 1, n):
            if wedge(images[i], images[j]) == 0:
                raise ParallelImages(
                    f"images of e_{i + 1} and e_{j + 1} are parallel; combine the two mutations first"
                )
    eps = exchange_matrix(data, s)
    v_bar = []
    for i in range(n):
        v = eps[i]
        sol = _solve_transpose(q, v)
        v_bar.append(sol)
    ind_v = []
    for vb in v_bar:
        if any(x.denominator != 1 for x in vb):
            raise WrongRank("v_i does not descend to the quotient lattice")
        ind_v.append(gcd(int(vb[0]), int(vb[1])))
    ind_e = tuple(gcd(a, b) for a, b in images)
    e_bar = tuple((Fraction(a, d[i]), Fraction(b, d[i])) for i, (a, b) in enumerate(images))
    return Quotient(
        tuple(tuple(r) for r in q),
        tuple(tuple(r) for r in kernel),
        images,
        e_bar,
        tuple(tuple(x) for x in v_bar),
        ind_e,
        tuple(ind_v),
        d,
    )


def _solve_transpose(q: Sequence[Sequence[int]], v: Sequence[Fraction]) -> tuple[Fraction, Fraction]:
    """Solve ``v = q^T x`` for ``x`` in Q^2 (exact); raises if inconsistent."""
    n = len(v)
    best = None
    for i in range(n):
        for j in range(i + 1, n):
            det = q[0][i] * q[1][j] - q[1][i] * q[0][j]
            if det:
                best = (i, j, det)
                break
        if best:
            break
    if best is None:
        raise WrongRank("quotient map is degenerate")
    i, j, det = best
    x0 = Fraction(v[i] * q[1][j] - v[j] * q[1][i], det)
    x1 = Fraction(q[0][i] * v[j] - q[0][j] * v[i], det)
    for c in range(n):
        if q[0][c] * x0 + q[1][c] * x1 != v[c]:
            raise WrongRank("v_i is not in the image of the dual quotient map")
    return (x0, x1)


@dataclass(frozen=True)
class ClusterReport:
    gps: ScatteringDiagram
    dual_x: ScatteringDiagram
    equal: bool
    note: str


def _walls_from(images, powers, label: str, cap: int | None = None) -> ScatteringDiagram:
    cap = cap or max(1, max(powers))
    ctx = SeriesContext.make((label,), cap)
    walls = []
    for im, p in zip(images, powers):
        d, _ = primitive(im)
        f = (TruncatedSeries.one(ctx) + TruncatedSeries.monomial(ctx, im, {label: 1})).power(int(p))
        walls.append(Wall((0, 0), d, True, f, "cluster"))
    return ScatteringDiagram(tuple(walls), cap, ctx)


def cluster_initial_diagram(data: FixedData, s: Seed | None = None, label: str = "t") -> ClusterReport:
    """GPS initial diagram of the quotient, the dual X-side initial diagram, and their comparison.

    The dual side is computed from the Langlands dual data alone: its lattice
    is ``N°`` with basis ``d_i e_i``, and the exponent on wall ``i`` is the
    gcd over ``j`` of ``Ld_i * Lomega_ij``.
    """
    s = s or Seed.standard(data.rank)
    q = kernel_quotient(data, s)
    gps = _walls_from(q.images, q.ind_v, label)
    dual = langlands_dual(data)
    n = dual.rank
    # dual seed L e_i = d_i e_i; its form in that basis is the dual skew form
    lw = [[dual.skew_form[i][j] * 1 for j in range(n)] for i in range(n)]
    if _rank(lw) != 2:
        raise WrongRank("dual form has rank different from 2")
    lq, _ = _quotient_map(lw)
    limages = tuple((lq[0][i], lq[1][i]) for i in range(n))
    lpowers = []
    for i in range(n):
        g = 0
        for j in range(n):
            val = dual.d[i] * dual.skew_form[i][j]
            if val.denominator != 1:
                raise WrongRank("dual exponent is not integral")
            g = gcd(g, int(val))
        lpowers.append(g)
    cap = max(1, max(q.ind_v), max(lpowers))
    gps = _walls_from(q.images, q.ind_v, label, cap)
    lx = _walls_from(limages, lpowers, label, cap)
    equal = gps == lx
    note = "walls compared as lines through the origin; ray orientation follows the GPS convention"
    return ClusterReport(gps, lx, equal, note)


__all__ = [
    "FixedData",
    "Seed",
    "MutationPullback",
    "Quotient",
    "ClusterReport",
    "mutate_seed",
    "mutation_pullbacks",
    "langlands_dual",
    "langlands_mutation_factors",
    "kernel_quotient",
    "cluster_initial_diagram",
    "exchange_matrix",
    "seed_form",
    "integer_left_kernel",
    "hermite_rows",
]
