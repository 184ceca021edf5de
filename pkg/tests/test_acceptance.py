"""One test per acceptance criterion. Tolerances and runtime budgets are pinned here."""

import hashlib
import os
import random
import subprocess
import sys
import time
from fractions import Fraction as F
from math import comb, gcd
from pathlib import Path

import sympy as sp

from artifact.cluster import cluster_initial_diagram
from artifact.dp5 import (
    Dp5Params,
    classify_valuations,
    critical_points,
    displayed_potential,
    displayed_quintic,
    dp5_model,
    dp5_potential,
    gamma2_polynomial,
    quintic_from_relation,
    verify_nondegeneracy,
)
from artifact.lattice import Fan
from artifact.models import (
    P2_CHAINS,
    P2_FAN,
    a2_initial,
    count_broken_lines_cubic,
    cubic_lines,
    f2_potential,
    f3_potential,
    rank2_example,
    rank3_example,
    squared_initial,
)
from artifact.scattering import PathAutomorphism, Wall, complete, cross_wall, gps_initial_diagram, log_jacobian, loop_product
from artifact.series import SeriesContext, TruncatedSeries as T
from artifact.tropical import bulk_potential_via_chain, chain_fans, minus_two_runs, semifano_toric_potential
from conftest import by_names, sorted_names
from oracles import (
    A2_SCATTERED,
    CUBIC_COUNT,
    CUBIC_MINIMAL_CAP,
    DP5_CENTRAL,
    DP5_CENTRAL_EXPONENTS,
    DP5_DEFAULT,
    F2_TERMS,
    F3_TERMS,
    QUINTIC,
)

ROOT = Path(__file__).resolve().parents[1]
CONFIGS = ROOT / "demos" / "configs"

RESIDUAL_TOL = 1e-10
HESSIAN_TOL = 1e-8
CASE1_REL_TOL = 0.02
SEED = 20240611


def test_c1_a2_reproduction():
    t0 = time.perf_counter()
    for k in range(2, 11):
        d = complete(a2_initial(k), k)
        got = [(tuple(w.direction), dict(w.function.terms)) for w in d.scattered()]
        assert got == A2_SCATTERED, f"order cap {k}"
    assert time.perf_counter() - t0 < 1.0


def test_c2_consistency_suite():
    def dp5_init(k):
        return gps_initial_diagram(dp5_model(Dp5Params()), k)

    t0 = time.perf_counter()
    for name, make in (("A2", a2_initial), ("dP5", dp5_init), ("squared", squared_initial)):
        for k in range(1, 9):
            d = complete(make(k), k)
            pts = d.singular_points()
            assert pts, name
            for p in pts:
                auto = loop_product(d, p, order_cap=k)
                one = T.one(auto.ctx)
                assert auto.ux == one and auto.uy == one, f"{name} k={k} at {p}"
    assert time.perf_counter() - t0 < 60.0


def _random_wall(rng: random.Random):
    cap = rng.randint(1, 5)
    ctx = SeriesContext.make(("t1", "t2"), cap, (1, rng.randint(1, 2)))
    while True:
        m = (rng.randint(-4, 4), rng.randint(-4, 4))
        if m != (0, 0) and gcd(*m) == 1:
            break
    f = T.one(ctx)
    for _ in range(rng.randint(1, 4)):
        j = rng.randint(1, 3)
        c = {"t1": rng.randint(0, 2), "t2": rng.randint(0, 2)}
        if c["t1"] + c["t2"] == 0:
            c["t1"] = 1
        coef = F(rng.randint(-5, 5), rng.randint(1, 4))
        f = f + T.monomial(ctx, (j * m[0], j * m[1]), c, coef)
    base = (F(rng.randint(-3, 3)), F(rng.randint(-3, 3)))
    return Wall(base, m, rng.random() < 0.5, f), ctx


def test_c3_volume_form():
    rng = random.Random(SEED)
    for i in range(1000):
        w, ctx = _random_wall(rng)
        sign = rng.choice((1, -1))
        auto = cross_wall(PathAutomorphism.identity(ctx), w, sign)
        assert log_jacobian(auto) == T.one(ctx), f"sample {i}: {w.direction} {w.function}"


def test_c4_dp5_chamber_potentials():
    t0 = time.perf_counter()
    p = Dp5Params()
    central = dp5_potential(p, "central", order_cap=6)
    assert central.exponents() == DP5_CENTRAL_EXPONENTS
    assert len(central.exponents()) == 7
    assert {m: dict(cs) for m, cs in central.by_exponent().items()} == DP5_CENTRAL
    for chamber in ("up", "right"):
        assert dp5_potential(p, chamber, order_cap=6) == displayed_potential(chamber)
    assert time.perf_counter() - t0 < 10.0


def test_c5_cubic_count():
    cap, count, counts = count_broken_lines_cubic(max_cap=6)
    assert cap == CUBIC_MINIMAL_CAP, counts
    t0 = time.perf_counter()
    lines = cubic_lines(cap)
    elapsed = time.perf_counter() - t0
    assert len(lines) == count == CUBIC_COUNT
    assert elapsed < 120.0


def test_c6_f2_f3_potentials():
    assert by_names(f2_potential()) == sorted_names(F2_TERMS)
    f3 = by_names(f3_potential())
    assert f3 == sorted_names(F3_TERMS)
    assert f3[(0, 2)] == {("alpha", "beta4"): 2}


def test_c7_semifano_coefficients():
    t0 = time.perf_counter()
    p2 = Fan(P2_FAN)
    for name in ("corner", "long", "mirror"):
        chain, pts = P2_CHAINS[name]
        fan = chain_fans(p2, chain)[-1]
        bulk = bulk_potential_via_chain(p2, chain, pts, max_leaves=4)
        formula = semifano_toric_potential(fan)
        assert bulk == formula, name
        expected = {tuple(v): 1 for v in fan.rays}
        for run in minus_two_runs(fan):
            for pos, i in enumerate(run, start=1):
                expected[tuple(fan.rays[i])] = comb(len(run) + 1, pos)
        assert {m: a for (m, _), a in bulk.terms.items()} == expected, name
        assert any(a > 1 for a in expected.values()), name
    assert time.perf_counter() - t0 < 120.0


def _support_function_set(d):
    return {
        (tuple(w.base), tuple(w.direction), w.is_line, tuple(sorted(w.function.terms.items())))
        for w in d.walls
    }


def test_c8_cluster_quotient_matches_dual():
    for data in (rank3_example(), rank2_example(1, 2), rank2_example(2, 3)):
        rep = cluster_initial_diagram(data)
        assert _support_function_set(rep.gps) == _support_function_set(rep.dual_x)
        assert rep.equal


def test_c9_dp5_critical_points():
    t0 = time.perf_counter()
    problems = []
    got = quintic_from_relation(1)
    want = [sp.sympify(s, locals=dict(zip("ABC", sp.symbols("A B C")))) for s in QUINTIC]
    if [sp.expand(a - b) for a, b in zip(displayed_quintic(), want)] != [0] * 6:
        problems.append("displayed quintic list differs")
    if [sp.expand(a - b) for a, b in zip(got, want)] != [0] * 6:
        problems.append("quintic coefficients differ")
    if [sp.expand(a + b) for a, b in zip(gamma2_polynomial(1), want)] != [0] * 6:
        problems.append("gamma2 polynomial is not the negative quintic")

    d = DP5_DEFAULT
    params = Dp5Params(a=d["a"], b=d["b"], c=d["c"], a_prime=d["a_prime"], b_prime=d["b_prime"], t_numeric=d["t"])
    rep = critical_points(params)
    if rep.geometric_count != 7:
        problems.append(f"{rep.geometric_count} geometric points")
    nd = verify_nondegeneracy(rep, det_tol=HESSIAN_TOL, res_tol=RESIDUAL_TOL)
    if nd.max_residual >= RESIDUAL_TOL:
        problems.append(f"residual {nd.max_residual:.2e}")
    if nd.min_relative_det <= HESSIAN_TOL:
        problems.append(f"relative Hessian det {nd.min_relative_det:.2e}")
    for p in rep.points:
        if p.kind == "case1":
            ok = all(abs(v - w) <= CASE1_REL_TOL * max(1.0, abs(w)) for v, w in zip(p.valuation, p.predicted))
            if not ok:
                problems.append(f"case-1 valuation {p.valuation} vs {p.predicted}")
    pts = classify_valuations(rep, rel_tol=CASE1_REL_TOL, strict=False)
    unlabeled = [p.valuation for p in pts if p.kind == "case2" and p.label not in ("i", "ii", "iii", "iv")]
    if unlabeled:
        problems.append(f"no case (i)-(iv) matches valuation(s) {[tuple(round(x, 3) for x in v) for v in unlabeled]}")
    if time.perf_counter() - t0 >= 5.0:
        problems.append("runtime budget exceeded")
    assert not problems, "; ".join(problems)


# Criterion 10: each command is run in two fresh interpreters (different hash seeds).
DETERMINISM_RUNS = [
    ["complete", "a2.json", "--order", "10"],
    ["complete", "squared.json", "--order", "8"],
    ["potential", "dp5.json", "--chamber", "central"],
    ["potential", "dp5.json", "--chamber", "up"],
    ["potential", "dp5.json", "--chamber", "right"],
    ["theta", "cubic.json", "--order", "4"],
    ["potential", "f2.json"],
    ["potential", "f3.json"],
    ["tropical", "chain_corner.json"],
    ["tropical", "chain_long.json"],
    ["cluster", "rank3.json"],
    ["cluster", "rank2.json"],
    ["dp5", "dp5.json"],
]

VOLUME_SNIPPET = """
import random, sys
sys.path.insert(0, {tests!r})
from test_acceptance import _random_wall, SEED
from artifact.scattering import PathAutomorphism, cross_wall, log_jacobian
rng = random.Random(SEED)
for _ in range(1000):
    w, ctx = _random_wall(rng)
    s = rng.choice((1, -1))
    print(log_jacobian(cross_wall(PathAutomorphism.identity(ctx), w, s)).to_data())
"""

CONSISTENCY_SNIPPET = """
from artifact.models import a2_initial, squared_initial
from artifact.scattering import complete, loop_product
for make in (a2_initial, squared_initial):
    d = complete(make(8), 8)
    for p in d.singular_points():
        ux, uy = loop_product(d, p).images
        print(p, ux.to_data(), uy.to_data())
"""


def _digest(cmd, seed):
    env = {**os.environ, "PYTHONHASHSEED": str(seed)}
    out = subprocess.run(cmd, cwd=CONFIGS, env=env, capture_output=True, check=True).stdout
    return hashlib.sha256(out).hexdigest()


def test_c10_determinism(tmp_path):
    py = sys.executable
    cmds = [[py, "-m", "artifact", *args] for args in DETERMINISM_RUNS]
    cmds.append([py, "-c", VOLUME_SNIPPET.format(tests=str(Path(__file__).parent))])
    cmds.append([py, "-c", CONSISTENCY_SNIPPET])
    render_src = tmp_path / "a2_diagram.json"
    subprocess.run([py, "-m", "artifact", "complete", "a2.json", "--out", str(render_src)], cwd=CONFIGS, check=True)
    cmds.append([py, "-m", "artifact", "render", str(render_src)])
    for cmd in cmds:
        assert _digest(cmd, 1) == _digest(cmd, 2), " ".join(cmd[1:4])
