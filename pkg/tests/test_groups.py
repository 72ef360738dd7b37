import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fitlab.errors import OrderCapExceeded
from fitlab.group import (
    Group,
    center,
    conjugacy_classes,
    derived_subgroup,
    full_subgroup,
    generated_subgroup,
    group_closure,
    is_normal,
    is_subgroup_set,
    make_subgroup,
    normal_closure,
    set_product_tuples,
    small_generating_set,
    subgroup_core,
    trivial_subgroup,
)
from fitlab.perm import Permutation


def test_closure_s3(G):
    g = G("S3")
    assert g.order == 6
    assert g.degree == 3
    assert Permutation((1, 0, 2)) in g


def test_known_orders(G):
    for spec, order in [
        ("C7", 7), ("D6", 12), ("S5", 120), ("A5", 60), ("Q8", 8),
        ("SL(2,3)", 24), ("SL(2,5)", 120), ("PSL(2,7)", 168),
    ]:
        assert G(spec).order == order, spec


def test_order_cap():
    gens = [Permutation.from_cycles(9, [tuple(range(1, 10))]).images,
            Permutation.from_cycles(9, [(1, 2)]).images]
    with pytest.raises(OrderCapExceeded):
        group_closure([Permutation(t) for t in gens], degree=9, cap=1000)


def test_subgroup_interning(G):
    g = G("S4")
    a = generated_subgroup(g, [Permutation.from_cycles(4, [(1, 2)]).images])
    b = make_subgroup(g, a.tuple_set)
    assert a is b


def test_subgroup_of_subgroup_lives_in_parent(G):
    g = G("S4")
    a4 = derived_subgroup(g)
    v4 = derived_subgroup(a4)
    assert v4.order == 4
    assert make_subgroup(a4, v4.tuple_set) is v4


def test_trivial_and_full(G):
    g = G("D4")
    assert trivial_subgroup(g).order == 1
    assert full_subgroup(g).order == 8
    assert full_subgroup(g).contains_subgroup(trivial_subgroup(g))


def test_small_generating_set(G):
    g = G("S4")
    a4 = derived_subgroup(g)
    gens = small_generating_set(a4)
    assert len(gens) <= 3
    assert generated_subgroup(g, gens).tuple_set == a4.tuple_set


def test_centers(G):
    assert center(G("S3")).order == 1
    assert center(G("Q8")).order == 2
    assert center(G("D4")).order == 2
    assert center(G("C12")).order == 12
    assert center(G("SL(2,5)")).order == 2


def test_derived_subgroups(G):
    assert derived_subgroup(G("S4")).order == 12
    assert derived_subgroup(G("A5")).order == 60
    assert derived_subgroup(G("C10")).order == 1
    assert derived_subgroup(G("Q8")).order == 2


def test_conjugacy_class_counts(G):
    assert len(conjugacy_classes(G("S4"))) == 5
    assert len(conjugacy_classes(G("S5"))) == 7
    assert len(conjugacy_classes(G("A5"))) == 5
    assert len(conjugacy_classes(G("Q8"))) == 5


def test_class_sizes_sum(G):
    g = G("PSL(2,7)")
    assert sum(len(c) for c in conjugacy_classes(g)) == g.order


def test_is_normal(G):
    g = G("S4")
    a4 = derived_subgroup(g)
    c2 = generated_subgroup(g, [Permutation.from_cycles(4, [(1, 2)]).images])
    assert is_normal(a4, g)
    assert not is_normal(c2, g)


def test_normal_closure(G):
    g = G("S4")
    t = Permutation.from_cycles(4, [(1, 2)]).images
    assert normal_closure(g, [t]).order == 24
    d = Permutation.from_cycles(4, [(1, 2), (3, 4)]).images
    assert normal_closure(g, [d]).order == 4


def test_subgroup_core(G):
    g = G("S4")
    s3 = generated_subgroup(g, [
        Permutation.from_cycles(4, [(1, 2)]).images,
        Permutation.from_cycles(4, [(1, 2, 3)]).images,
    ])
    assert s3.order == 6
    assert subgroup_core(g, s3).order == 1
    a4 = derived_subgroup(g)
    assert subgroup_core(g, a4) is a4


def test_set_product(G):
    g = G("S3")
    c3 = generated_subgroup(g, [Permutation.from_cycles(3, [(1, 2, 3)]).images])
    c2 = generated_subgroup(g, [Permutation.from_cycles(3, [(1, 2)]).images])
    prod = set_product_tuples(g, c3.tuple_set, c2.tuple_set)
    assert len(prod) == 6
    assert is_subgroup_set(g, frozenset(prod))


def test_is_subgroup_set_rejects_non_closed(G):
    g = G("S3")
    t = Permutation.from_cycles(3, [(1, 2, 3)]).images
    assert not is_subgroup_set(g, frozenset([g.identity_t, t]))


@settings(max_examples=25)
@given(st.lists(st.permutations(range(4)), min_size=1, max_size=3))
def test_generated_subgroups_are_subgroups(seeds):
    g = group_closure(
        [Permutation((1, 0, 2, 3)), Permutation((1, 2, 3, 0))], degree=4
    )
    sub = generated_subgroup(g, [tuple(s) for s in seeds])
    assert g.order % sub.order == 0
    assert is_subgroup_set(g, sub.tuple_set)


def test_group_equality_by_elements():
    a = group_closure([Permutation((1, 0, 2))], degree=3)
    b = group_closure([Permutation((1, 0, 2))], degree=3)
    assert a == b
    assert hash(a) == hash(b)
    # interning is still per carrier: same-shaped subgroups of distinct
    # carriers are distinct objects
    sa = make_subgroup(a, a.tuple_set)
    sb = make_subgroup(b, b.tuple_set)
    assert sa is not sb


def test_subgroup_name_lists_generator_cycles(G):
    g = G("S4")
    v4 = derived_subgroup(derived_subgroup(g))
    assert v4.name.startswith("<(")
    assert ")" in v4.name
