import pytest

from artifact.cluster import (
    FixedData,
    Seed,
    cluster_initial_diagram,
    exchange_matrix,
    hermite_rows,
    integer_left_kernel,
    kernel_quotient,
    langlands_dual,
    langlands_mutation_factors,
    mutate_seed,
    mutation_pullbacks,
)
from artifact.errors import InvalidModel, ParallelImages, WrongRank
from artifact.models import rank2_example, rank3_example
from oracles import RANK3_IMAGES


def _walls(d):
    return sorted((tuple(w.direction), tuple(sorted(w.function.terms.items()))) for w in d.walls)


def test_integer_kernel_and_hermite():
    k = integer_left_kernel([[0, 1, -1], [-1, 0, 1], [1, -1, 0]])
    assert len(k) == 1 and sorted(map(abs, k[0])) == [1, 1, 1]
    assert hermite_rows([[2, 4], [1, 3]]) == [[1, 1], [0, 2]]


def test_fixed_data_validation():
    with pytest.raises(InvalidModel):
        FixedData(((0, 1), (1, 0)), (1, 1))
    with pytest.raises(InvalidModel):
        FixedData(((0, 1), (-1, 0)), (2, 2))


def test_rank3_quotient():
    q = kernel_quotient(rank3_example())
    assert [tuple(x) for x in q.images] == RANK3_IMAGES
    assert q.kernel == ((1, 1, 1),)


def test_mutation_is_involutive():
    data = rank3_example()
    s = Seed.standard(3)
    for k in range(3):
        assert mutate_seed(data, mutate_seed(data, s, k), k) == s


def test_mutation_pullback_exponents():
    data = rank2_example(2, 3)
    x, a = mutation_pullbacks(data, Seed.standard(2), 0)
    eps = exchange_matrix(data, Seed.standard(2))
    assert x.power_on((0, 1)) == -eps[1][0]
    assert a.power_on((1, 0)) == -1


def test_langlands_dual_involution():
    data = rank2_example(2, 3)
    assert langlands_dual(langlands_dual(data)) == data
    f = langlands_mutation_factors(data, 0)
    assert f == [(0, 0), (1, 3)]


@pytest.mark.parametrize("data", [rank3_example(), rank2_example(1, 2), rank2_example(2, 3)])
def test_gps_equals_dual(data):
    rep = cluster_initial_diagram(data)
    assert rep.equal
    assert _walls(rep.gps) == _walls(rep.dual_x)


def test_rank_and_parallel_errors():
    big = FixedData(((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0)), (1, 1, 1, 1))
    with pytest.raises(WrongRank):
        kernel_quotient(big)
    par = FixedData(((0, 1, 1), (-1, 0, 0), (-1, 0, 0)), (1, 1, 1))
    with pytest.raises(ParallelImages):
        cluster_initial_diagram(par)
