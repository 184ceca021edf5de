"""Blow up corners of P^2 and compare two ways of getting the potential.

One way counts tropical discs through bulk points in the original plane and
clips them step by step. The other reads binomial coefficients off the runs
of -2 curves in the final fan.
"""

from artifact.lattice import Fan
from artifact.models import P2_CHAINS, P2_FAN
from artifact.tropical import bulk_discs, bulk_potential_via_chain, chain_fans, minus_two_runs, semifano_toric_potential

p2 = Fan(P2_FAN)
for name, (chain, pts) in P2_CHAINS.items():
    fan = chain_fans(p2, chain)[-1]
    discs = bulk_discs(p2, (0, 0), pts)
    bulk = bulk_potential_via_chain(p2, chain, pts)
    formula = semifano_toric_potential(fan)
    print(f"{name}: rays {[tuple(v) for v in fan.rays]}")
    print(f"  self-intersections {fan.self_intersections()}, -2 runs {minus_two_runs(fan)}")
    print(f"  {len(discs)} constrained discs -> {bulk}")
    print(f"  formula                  -> {formula}")
    print(f"  agree: {bulk == formula}")
