"""Quotient a skew form by its kernel and compare with the Langlands-dual side."""

from artifact.cluster import Seed, cluster_initial_diagram, kernel_quotient, mutate_seed
from artifact.models import rank2_example, rank3_example

for name, data in (("rank 3", rank3_example()), ("rank 2 (1,2)", rank2_example(1, 2)), ("rank 2 (2,3)", rank2_example(2, 3))):
    q = kernel_quotient(data)
    rep = cluster_initial_diagram(data)
    print(f"{name}: kernel {q.kernel}, images {q.images}")
    for w in rep.gps.sorted_walls():
        print(f"   wall {tuple(w.direction)}: {w.function}")
    print("   dual side agrees:", rep.equal)

data = rank3_example()
s = Seed.standard(3)
s1 = mutate_seed(data, s, 0)
print("mutating at e1:", s1.basis, "and back:", mutate_seed(data, s1, 0).basis)
