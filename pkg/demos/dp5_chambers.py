"""Mirror potential of a degree-5 del Pezzo surface, chamber by chamber.

Broken lines are summed at a point in each of three chambers. Setting the
exceptional classes to 1 recovers a Laurent polynomial in A, B, C.
"""

from artifact.dp5 import CHAMBERS, Dp5Params, chamber_point, dp5_diagram, dp5_potential

params = Dp5Params(a=2, b=2, c=5, a_prime=1, b_prime=1)
d = dp5_diagram(params, 6)
print("completed diagram:")
for w in d.sorted_walls():
    kind = "line" if w.is_line else "ray"
    print(f"  {kind} {tuple(w.direction)} through {tuple(map(str, w.base))}: {w.function}")

for ch in CHAMBERS:
    u = chamber_point(params, ch)
    full = dp5_potential(params, ch, limit=False)
    lim = dp5_potential(params, ch)
    print(f"\n[{ch}] stop at ({u[0]}, {u[1]}): {len(full)} monomials, {len(full.exponents())} exponents")
    print(full.grouped_text())
    print("  with exceptional classes set to 1:")
    for line in lim.grouped_text().splitlines():
        print("   ", line)
