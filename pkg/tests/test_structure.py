import pytest

from fitlab.errors import DegenerateFactor, InvalidParameter, InvalidPrime, NotNormal
from fitlab.group import derived_subgroup, is_normal, trivial_subgroup
from fitlab.lattice import all_subgroups
from fitlab.structure import (
    check_prime,
    chief_series,
    class_predicate,
    element_order,
    fitting_height,
    fitting_subgroup,
    fstar_subgroup,
    inneriser,
    is_abelian,
    is_nilpotent,
    is_p_soluble,
    is_perfect,
    is_quasinilpotent,
    is_semisimple,
    is_simple,
    is_soluble,
    is_subnormal,
    join_of_normals,
    largest_normal_p_subgroup,
    minimal_normal_subgroups,
    nilpotent_residual,
    normal_subgroups,
    p_soluble_radical,
    section_centralizer,
    socle_subgroup,
    soluble_radical,
)


def test_normal_subgroup_counts(G):
    for spec, count in [
        ("S3", 3), ("S4", 4), ("Q8", 6), ("D4", 6), ("D6", 7),
        ("A4", 3), ("A5", 2), ("S5", 3), ("SL(2,3)", 4),
        ("S3xS3", 10), ("D4xC2", 19), ("C6xD4", 38),
    ]:
        assert len(normal_subgroups(G(spec))) == count, spec


def test_normal_subgroups_match_lattice_filter(G):
    # independent route: enumerate every subgroup, keep the normal ones
    for spec in ["S4", "Q8", "D6", "A4", "SL(2,3)", "S3xS3", "C2wrC3", "D5xD4"]:
        g = G(spec)
        fast = [n.tuple_set for n in normal_subgroups(g)]
        slow = sorted(
            (s.tuple_set for s in all_subgroups(g, cap=None) if is_normal(s, g)),
            key=lambda ts: (len(ts), tuple(sorted(ts))),
        )
        assert fast == slow, spec


def test_normals_sorted_and_bounded(G):
    ns = normal_subgroups(G("D12"))
    orders = [n.order for n in ns]
    assert orders == sorted(orders)
    assert orders[0] == 1 and orders[-1] == 24


def test_minimal_normals(G):
    assert [n.order for n in minimal_normal_subgroups(G("S4"))] == [4]
    assert [n.order for n in minimal_normal_subgroups(G("D6"))] == [2, 3]
    assert [n.order for n in minimal_normal_subgroups(G("A5"))] == [60]
    assert [n.order for n in minimal_normal_subgroups(G("S3xS3"))] == [3, 3]


def test_minimal_normals_are_minimal(G):
    g = G("D4xC2")
    mins = minimal_normal_subgroups(g)
    normals = [n for n in normal_subgroups(g) if n.order > 1]
    for m in mins:
        assert not any(n.tuple_set < m.tuple_set for n in normals)


def test_join_of_normals(G):
    g = G("D6")
    mins = minimal_normal_subgroups(g)
    assert join_of_normals(g, mins).order == 6


def test_socle(G):
    assert socle_subgroup(G("S4")).order == 4
    assert socle_subgroup(G("S3xS3")).order == 9
    assert socle_subgroup(G("A5")).order == 60
    assert socle_subgroup(G("Q8")).order == 2


def test_chief_series_s4(G):
    cs = chief_series(G("S4"))
    assert [t.order for t in cs.terms] == [1, 4, 12, 24]
    assert [f.kind for f in cs.factors] == ["elementary", "elementary", "elementary"]
    assert [f.prime for f in cs.factors] == [2, 3, 2]


def test_chief_series_s5_kinds(G):
    cs = chief_series(G("S5"))
    assert [f.order for f in cs.factors] == [60, 2]
    assert [f.kind for f in cs.factors] == ["semisimple", "elementary"]


def test_chief_series_alternate_preference(G):
    g = G("S4")
    small = chief_series(g, prefer="smallest")
    large = chief_series(g, prefer="largest")
    assert small.terms[0].order == large.terms[0].order == 1
    assert small.terms[-1].order == large.terms[-1].order == 24
    with pytest.raises(InvalidParameter):
        chief_series(g, prefer="shortest")


def test_fstar_series_independent(G):
    # the inneriser intersection must not depend on the chosen series
    for spec in ["S5", "A5xC2", "SL(2,5)", "S3xA5"]:
        g = G(spec)
        values = []
        for prefer in ("smallest", "largest"):
            acc = set(g.tuples)
            for f in chief_series(g, prefer=prefer).factors:
                acc &= inneriser(g, f.above, f.below).tuple_set
            values.append(frozenset(acc))
        assert values[0] == values[1], spec


def test_section_centralizer(G):
    g = G("S4")
    v4 = derived_subgroup(derived_subgroup(g))
    cent = section_centralizer(g, v4, trivial_subgroup(g))
    assert cent.order == 4  # V4 is self-centralizing in S4


def test_inneriser_values(G):
    g = G("S4")
    ns = normal_subgroups(g)
    v4, a4 = ns[1], ns[2]
    assert inneriser(g, v4, trivial_subgroup(g)).order == 4
    assert inneriser(g, a4, v4).order == 12  # abelian section: inner = central
    with pytest.raises(DegenerateFactor):
        inneriser(g, v4, v4)
    with pytest.raises(NotNormal):
        inneriser(g, trivial_subgroup(g), v4)


def test_fitting_subgroup(G):
    assert fitting_subgroup(G("S4")).order == 4
    assert fitting_subgroup(G("SL(2,3)")).order == 8
    assert fitting_subgroup(G("S5")).order == 1
    assert fitting_subgroup(G("C12")).order == 12
    assert fitting_subgroup(G("SL(2,5)")).order == 2


def test_fstar_subgroup(G):
    assert fstar_subgroup(G("S4")).order == 4
    assert fstar_subgroup(G("A5")).order == 60
    assert fstar_subgroup(G("S5")).order == 60
    assert fstar_subgroup(G("SL(2,5)")).order == 120
    assert fstar_subgroup(G("A5xC2")).order == 120
    assert fstar_subgroup(G("PSL(2,7)")).order == 168


def test_fstar_contains_fitting(G):
    for spec in ["S4", "S5", "SL(2,5)", "D6", "S3xA5"]:
        g = G(spec)
        assert fstar_subgroup(g).contains_subgroup(fitting_subgroup(g))


def test_radicals(G):
    g = G("S4")
    assert largest_normal_p_subgroup(g, 2).order == 4
    assert largest_normal_p_subgroup(g, 3).order == 1
    assert soluble_radical(g).order == 24
    assert soluble_radical(G("A5")).order == 1
    assert soluble_radical(G("A5xC2")).order == 2
    assert soluble_radical(G("SL(2,5)")).order == 2
    assert p_soluble_radical(G("A5xC2"), 7).order == 120
    assert p_soluble_radical(G("A5xC2"), 2).order == 2


def test_class_predicates(G):
    assert is_nilpotent(G("Q8"))
    assert not is_nilpotent(G("S3"))
    assert is_soluble(G("S4"))
    assert not is_soluble(G("A5"))
    assert is_p_soluble(G("A5"), 7)
    assert not is_p_soluble(G("A5"), 2)
    assert not is_p_soluble(G("A5"), 5)
    assert is_quasinilpotent(G("SL(2,5)"))
    assert is_quasinilpotent(G("A5xC2"))
    assert not is_quasinilpotent(G("S5"))
    assert is_semisimple(G("A5"))
    assert not is_semisimple(G("SL(2,5)"))
    assert is_simple(G("PSL(2,7)"))
    assert not is_simple(G("A5xC2"))
    assert is_perfect(G("SL(2,5)"))
    assert is_abelian(G("C12"))


def test_class_predicate_dispatch(G):
    g = G("A5")
    assert class_predicate("quasinilpotent", g)
    assert not class_predicate("soluble", g)
    assert class_predicate("p-soluble", g, 7)
    with pytest.raises(InvalidParameter):
        class_predicate("friendly", g)


def test_check_prime():
    assert check_prime(13) == 13
    with pytest.raises(InvalidPrime):
        check_prime(6)
    with pytest.raises(InvalidPrime):
        check_prime(1)


def test_element_order(G):
    g = G("S4")
    counts = sorted(element_order(g, t) for t in g.tuples)
    assert counts.count(1) == 1
    assert counts.count(2) == 9
    assert counts.count(4) == 6


def test_is_subnormal(G):
    g = G("S4")
    v4 = derived_subgroup(derived_subgroup(g))
    assert is_subnormal(v4, g)
    from fitlab.group import generated_subgroup
    from fitlab.perm import Permutation
    c2 = generated_subgroup(g, [Permutation.from_cycles(4, [(1, 2)]).images])
    assert not is_subnormal(c2, g)


def test_nilpotent_residual(G):
    assert nilpotent_residual(G("S4")).order == 12
    assert nilpotent_residual(G("S3")).order == 3
    assert nilpotent_residual(G("Q8")).order == 1
    assert nilpotent_residual(G("A5")).order == 60


def test_fitting_height(G):
    assert fitting_height(G("C12")) == 1
    assert fitting_height(G("S3")) == 2
    assert fitting_height(G("S4")) == 3
    assert fitting_height(G("D12")) == 2
    assert fitting_height(G("SL(2,3)")) == 2
    with pytest.raises(InvalidParameter):
        fitting_height(G("A5"))
