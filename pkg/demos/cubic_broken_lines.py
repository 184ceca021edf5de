"""Count broken lines on a cubic surface model and draw them.

Six points are blown up on the boundary of the projective plane, two per
line. The stop sits in the middle chamber. Raising the order cap adds
lines until the count stabilises.
"""

import sys
import time
from pathlib import Path

from artifact.models import CUBIC_STOP, count_broken_lines_cubic, cubic_lines
from artifact.serialize import lines_to_doc
from artifact.svg import render_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

t = time.perf_counter()
cap, n, counts = count_broken_lines_cubic(max_cap=6)
print("counts by order cap:", dict(enumerate(counts, start=1)))
print(f"stable from cap {cap}: {n} broken lines ({time.perf_counter() - t:.1f} s)")

lines = cubic_lines(cap)
bends = sorted(len(bl.bends) for bl in lines)
print("bends per line:", bends)
labels = tuple(f"e{i}" for i in range(1, 7))
doc = lines_to_doc(lines, labels, CUBIC_STOP)
(out / "cubic_lines.svg").write_text(render_svg(doc, scale=12))
print("wrote", out / "cubic_lines.svg")
