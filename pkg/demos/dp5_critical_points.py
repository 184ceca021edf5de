"""Critical points of the dP5 potential at a numeric value of t.

Seven points appear. Two sit near z1 + z2 + 1 = 0 and need a chart change;
the rest are read off on the torus. Valuations come from tracking each
point as t halves.
"""

import sys

from artifact.dp5 import Dp5Params, classify_valuations, critical_points, symbolic_checks, verify_nondegeneracy

t = float(sys.argv[1]) if len(sys.argv) > 1 else 0.1
params = Dp5Params(a=2, b=2, c=5, a_prime=1, b_prime=1, t_numeric=t)
rep = critical_points(params)
classify_valuations(rep, strict=False)
for p in rep.points:
    z = ", ".join(f"{w.real:+.6g}{w.imag:+.6g}j" for w in p.z)
    val = tuple(round(v, 3) for v in p.valuation)
    print(f"{p.kind:6s} {p.chart:14s} z=({z}) val={val} label={p.label} det={p.hessian_det:.3f} res={p.residual:.1e}")
for p in rep.nongeometric:
    print(f"candidate {p.z[0]:.4g}, {p.z[1]:.4g} is not critical (relative residual {p.residual:.2f})")

nd = verify_nondegeneracy(rep)
print("nondegenerate:", nd.passed, " critical values distinct:", nd.values_distinct)
for k, v in symbolic_checks().items():
    print(f"  {k}: {v}")
