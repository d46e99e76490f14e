from fractions import Fraction

import pytest

from whitehouse.characters import decompose, sign_character
from whitehouse.group_algebra import (GroupAlgebraElement, NotIdempotentError, eulerian_idempotents,
                                      lambda_idempotent, long_cycle, module_character,
                                      right_ideal_basis, s_total, shuffle_element,
                                      whitehouse_idempotents)
from whitehouse.perms import Permutation, stirling

from oracles import class_sum_character

GA = GroupAlgebraElement


def test_shuffle_element_s2():
    # increasing on the single first letter and the single last letter: everything
    s = shuffle_element(2, 1)
    assert s.coeffs == {Permutation((1, 2)): 1, Permutation((2, 1)): -1}
    with pytest.raises(ValueError):
        shuffle_element(3, 3)


def test_s_total_needs_n2():
    with pytest.raises(ValueError):
        s_total(1)


def test_eulerian_n2():
    e1, e2 = eulerian_idempotents(2)
    t = Permutation((2, 1))
    # eigenvalues 0 and 2 of s = 1 - (12)
    assert e1 == GA.from_terms(2, {Permutation((1, 2)): Fraction(1, 2), t: Fraction(1, 2)})
    assert e2 == GA.from_terms(2, {Permutation((1, 2)): Fraction(1, 2), t: Fraction(-1, 2)})


def test_n1_is_trivial():
    assert eulerian_idempotents(1) == (GA.unit(1),)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_idempotent_suite(n):
    es = eulerian_idempotents(n)
    one = GA.unit(n)
    total = GA.zero(n)
    for i, a in enumerate(es):
        total = total + a
        for j, b in enumerate(es):
            assert a * b == (a if i == j else GA.zero(n))
        assert s_total(n) * a == a.scale(2 ** (i + 1) - 2)
    assert total == one


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_module_character_matches_class_sums(n):
    for e in eulerian_idempotents(n) + whitehouse_idempotents(n):
        assert module_character(e).values == class_sum_character(e)


def test_dims_n4():
    assert [module_character(e).degree() for e in eulerian_idempotents(4)] == [6, 11, 6, 1]


def test_top_idempotent_is_sign():
    assert module_character(eulerian_idempotents(4)[-1]) == sign_character(4)
    assert decompose(module_character(eulerian_idempotents(3)[0])) == {(2, 1): 1}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lifts(n):
    lam = lambda_idempotent(n)
    assert lam * lam == lam
    for j, (e, f) in enumerate(zip(eulerian_idempotents(n - 1), whitehouse_idempotents(n)), 1):
        assert lam * e.embed(n) == e.embed(n) * lam
        assert f * f == f
        assert module_character(f).degree() == stirling(n - 1, j)


def test_long_cycle():
    assert long_cycle(4) == Permutation((2, 3, 4, 1))


def test_not_idempotent():
    with pytest.raises(NotIdempotentError):
        module_character(GA.unit(3).scale(2))


def test_arithmetic_and_mismatch():
    a = GA.basis(Permutation((2, 1, 3)))
    assert a * a == GA.unit(3)
    assert (a - a) == GA.zero(3)
    assert 2 * a == a.scale(2)
    with pytest.raises(ValueError):
        a + GA.unit(2)
    with pytest.raises(ValueError):
        GA.from_terms(3, {Permutation((2, 1)): 1})


def test_json_round_trip():
    e = eulerian_idempotents(3)[0]
    assert GA.from_json(e.to_json()) == e
    assert e.to_json()["n"] == 3


def test_right_ideal_rank():
    for e in eulerian_idempotents(4):
        rows, piv = right_ideal_basis(e)
        assert len(rows) == module_character(e).degree()
