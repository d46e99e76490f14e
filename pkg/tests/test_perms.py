from math import factorial

import pytest
from hypothesis import given, strategies as st

from whitehouse.perms import (Permutation, class_representative, class_size, compose,
                              conjugacy_classes, parse_partition, partition_label, partitions, sign,
                              stirling, stirling_cycle_count, symmetric_group)

from oracles import count_cycles

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def test_rejects_non_permutations():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_compose_is_function_composition():
    a = Permutation.from_cycles(3, [(1, 2)])
    b = Permutation.from_cycles(3, [(2, 3)])
    ab = a * b
    assert [ab(i) for i in (1, 2, 3)] == [a(b(i)) for i in (1, 2, 3)]
    with pytest.raises(ValueError):
        compose(a, Permutation.identity(2))


def test_cycles_and_repr():
    w = Permutation((3, 1, 2))
    assert w.cycles() == [(1, 3, 2)]
    assert repr(w) == "Permutation(1 3 2)[n=3]"
    assert w.cycle_type() == (3,)


@given(perms)
def test_inverse_and_sign(w):
    e = Permutation.identity(len(w))
    assert w * w.inverse() == e
    assert sign(w * w) == 1
    assert Permutation.from_cycles(len(w), w.cycles()) == w


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert parse_partition(partition_label((3, 1, 1))) == (3, 1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_sum(n):
    assert sum(s for _, s, _ in conjugacy_classes(n)) == factorial(n)
    for p, _, rep in conjugacy_classes(n):
        assert rep.cycle_type() == p
    assert class_size((2, 1)) == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_stirling_against_count(n):
    for j in range(1, n + 1):
        assert stirling(n, j) == count_cycles(n, j)
    assert sum(stirling(n, j) for j in range(1, n + 1)) == factorial(n)


def test_stirling_errors():
    with pytest.raises(ValueError):
        stirling(3, 0)
    assert stirling_cycle_count(0, 0) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_multiplication_table(n):
    G = symmetric_group(n)
    for i, a in enumerate(G.elements):
        for j, b in enumerate(G.elements):
            assert G.elements[G.table[i, j]] == a * b
    assert all(G.elements[G.inverse[i]] == a.inverse() for i, a in enumerate(G.elements))


def test_embed():
    assert Permutation((2, 1)).embed(4) == Permutation((2, 1, 3, 4))
    assert class_representative((2, 2)) == Permutation.from_cycles(4, [(1, 2), (3, 4)])
