import pytest
from hypothesis import given
from hypothesis import strategies as st

from fitlab.errors import DegreeMismatch, InvalidPermutation
from fitlab.perm import Permutation, compose, identity_tuple, permutation_product


def perms(degree: int):
    return st.permutations(range(degree)).map(Permutation)


def test_identity():
    e = Permutation.identity(4)
    assert e.images == (0, 1, 2, 3)
    assert e.is_identity()
    assert e.order() == 1
    assert e.cycle_string() == "()"


def test_rejects_non_bijection():
    with pytest.raises(InvalidPermutation):
        Permutation((0, 0, 1))
    with pytest.raises(InvalidPermutation):
        Permutation((0, 3))
    with pytest.raises(InvalidPermutation):
        Permutation.from_one_based((2, 2, 1))


def test_from_cycles():
    p = Permutation.from_cycles(5, [(1, 2, 3), (4, 5)])
    assert p.images == (1, 2, 0, 4, 3)
    assert p.cycle_string() == "(1 2 3)(4 5)"
    assert p.order() == 6


def test_from_cycles_rejects_repeats():
    with pytest.raises(InvalidPermutation):
        Permutation.from_cycles(4, [(1, 2), (2, 3)])


def test_one_based_round_trip():
    p = Permutation.from_one_based((2, 3, 1))
    assert p.one_based() == (2, 3, 1)
    assert p.images == (1, 2, 0)


def test_product_applies_left_then_right():
    a = Permutation.from_cycles(3, [(1, 2)])
    b = Permutation.from_cycles(3, [(2, 3)])
    assert (a * b)(0) == b(a(0))
    assert (a * b).images == compose(a.images, b.images)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        Permutation((1, 0)) * Permutation((1, 2, 0))


@given(perms(6), perms(6), perms(6))
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms(6))
def test_inverse_cancels(p):
    e = Permutation.identity(6)
    assert p * p.inverse() == e
    assert p.inverse() * p == e


@given(perms(6))
def test_order_annihilates(p):
    acc = Permutation.identity(6)
    for _ in range(p.order()):
        acc = acc * p
    assert acc.is_identity()


@given(perms(5))
def test_cycles_rebuild(p):
    assert Permutation.from_cycles(5, p.cycles()) == p


@given(st.permutations(range(7)))
def test_compose_matches_product(images):
    p = Permutation(images)
    q = Permutation(tuple(reversed(range(7)))[0:7])
    assert permutation_product(p, q).images == compose(p.images, q.images)


def test_identity_tuple():
    assert identity_tuple(3) == (0, 1, 2)


def test_sorting_is_by_images():
    a = Permutation((0, 1, 2))
    b = Permutation((0, 2, 1))
    assert a < b
    assert sorted([b, a]) == [a, b]
