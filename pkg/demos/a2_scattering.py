"""Two crossing lines, their forced ray, and the loop that proves the diagram is consistent.

Run: python3 demos/a2_scattering.py [outdir]
"""

import sys
from pathlib import Path

from artifact.models import a2_initial, squared_initial
from artifact.scattering import complete, is_consistent, loop_product
from artifact.svg import render_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

k = 6
start = a2_initial(k)
print("initial walls:")
for w in start.sorted_walls():
    print(f"  line along {tuple(w.direction)}: {w.function}")

# Loop around the crossing before completion: the composite is not the identity.
theta = loop_product(start, (0, 0))
print("loop around the origin, before completion, sends y to", theta.images[1].render(4))

done = complete(start, k)
for w in done.scattered():
    print(f"added ray {tuple(w.direction)} from {tuple(map(str, w.base))}: {w.function}")
print("consistent after completion:", is_consistent(done))

# Squaring both functions produces an infinite family; at order k we see its first members.
sq = complete(squared_initial(k), k)
print(f"(1+x)^2 / (1+y)^2 at order {k}: {len(sq.scattered())} added rays")
for w in sq.scattered():
    print(f"  {tuple(w.direction)}: {w.function.render(3)}")

(out / "a2.svg").write_text(render_svg(done))
(out / "squared.svg").write_text(render_svg(sq, scale=30))
print("wrote", out / "a2.svg", "and", out / "squared.svg")
