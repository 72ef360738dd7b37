"""Finite permutation groups with explicit element enumeration.

A group, a subgroup of a group, and a quotient group all expose the same
small operand protocol used by every structural algorithm in the package:

* ``tuples``        sorted tuple of raw image tuples (the canonical order)
* ``tuple_set``     the same elements as a frozenset
* ``generator_tuples``  a small generating list of raw tuples
* ``mul_t(a, b)``   product with the left operand applied first
* ``inv_t(a)``      inverse
* ``identity_t``    the identity element
* ``order``, ``degree``, ``name``

Everything is immutable after construction; derived data is cached on the
instance and safe to share between concurrent readers.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import (
    DegreeMismatch,
    EmptyStructure,
    InvalidParameter,
    OrderCapExceeded,
)
from .perm import Permutation, compose, identity_tuple

__all__ = [
    "DEFAULT_ORDER_CAP",
    "Group",
    "Subgroup",
    "group_closure",
    "make_subgroup",
    "trivial_subgroup",
    "full_subgroup",
    "set_product",
    "set_product_tuples",
    "generated_subgroup",
    "normal_closure",
    "centralizer_of_set",
    "subgroup_core",
    "is_normal",
    "is_subgroup_set",
    "conjugacy_classes",
    "derived_subgroup",
    "center",
    "small_generating_set",
]

DEFAULT_ORDER_CAP = 5040


def _invert(t: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(t)
    for i, j in enumerate(t):
        inv[j] = i
    return tuple(inv)


def _closure(
    gens: Sequence[tuple[int, ...]],
    mul: Callable[[tuple[int, ...], tuple[int, ...]], tuple[int, ...]],
    identity: tuple[int, ...],
    cap: int | None = None,
) -> set[tuple[int, ...]]:
    """Closure of ``gens`` under ``mul``; raises past ``cap`` elements."""
    found: set[tuple[int, ...]] = {identity}
    found.update(gens)
    work = [g for g in gens if g != identity]
    while work:
        nxt: list[tuple[int, ...]] = []
        for x in work:
            for g in gens:
                y = mul(x, g)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        if cap is not None and len(found) > cap:
            raise OrderCapExceeded(
                f"closure exceeded cap {cap}", partial_count=len(found)
            )
        work = nxt
    return found


def _extend_closure(
    base: set[tuple[int, ...]],
    base_gens: Sequence[tuple[int, ...]],
    new_gens: Sequence[tuple[int, ...]],
    mul: Callable[[tuple[int, ...], tuple[int, ...]], tuple[int, ...]],
    cap: int | None = None,
) -> set[tuple[int, ...]]:
    """Closure of ``base`` (already a subgroup) joined with ``new_gens``."""
    fresh = [g for g in new_gens if g not in base]
    if not fresh:
        return set(base)
    found = set(base)
    found.update(fresh)
    all_gens = list(base_gens) + fresh
    work = list(fresh)
    # Existing members still need probing against the fresh generators once.
    for x in base:
        for g in fresh:
            y = mul(x, g)
            if y not in found:
                found.add(y)
                work.append(y)
    while work:
        nxt: list[tuple[int, ...]] = []
        for x in work:
            for g in all_gens:
                y = mul(x, g)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        if cap is not None and len(found) > cap:
            raise OrderCapExceeded(
                f"closure exceeded cap {cap}", partial_count=len(found)
            )
        work = nxt
    return found


class Group:
    """A permutation group with its full element set."""

    plain_perms = True  # element order can be read off cycle lengths

    def __init__(
        self,
        degree: int,
        generator_tuples: Sequence[tuple[int, ...]],
        tuples: Sequence[tuple[int, ...]],
        name: str | None = None,
    ) -> None:
        self.degree = degree
        self.generator_tuples = tuple(generator_tuples)
        self.tuples = tuple(sorted(tuples))
        self.tuple_set = frozenset(self.tuples)
        self.identity_t = identity_tuple(degree)
        self.name = name if name is not None else f"G{len(self.tuples)}"
        self._cache: dict = {}
        # Optional build metadata: set by the direct-product builder.
        self.direct_factors: tuple["Subgroup", "Subgroup"] | None = None
        self.factor_groups: tuple["Group", "Group"] | None = None

    @property
    def order(self) -> int:
        return len(self.tuples)

    @staticmethod
    def mul_t(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(map(b.__getitem__, a))

    @staticmethod
    def inv_t(a: tuple[int, ...]) -> tuple[int, ...]:
        return _invert(a)

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(g) for g in self.generator_tuples)

    @property
    def elements(self) -> frozenset[Permutation]:
        got = self._cache.get("elements")
        if got is None:
            got = frozenset(Permutation(t) for t in self.tuples)
            self._cache["elements"] = got
        return got

    def __contains__(self, p: Permutation | tuple[int, ...]) -> bool:
        t = p.images if isinstance(p, Permutation) else p
        return t in self.tuple_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return self.degree == other.degree and self.tuple_set == other.tuple_set

    def __hash__(self) -> int:
        return hash((self.degree, self.tuple_set))

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order}, degree={self.degree})"


class Subgroup:
    """A subgroup of a carrier group, identified by its element set."""

    def __init__(
        self,
        parent,
        tuples: frozenset,
        generator_tuples: tuple | None = None,
    ) -> None:
        self.parent = parent
        self.tuple_set = tuples
        self._gens = generator_tuples
        self._cache: dict = {}

    @property
    def order(self) -> int:
        return len(self.tuple_set)

    @property
    def degree(self) -> int:
        return self.parent.degree

    @property
    def identity_t(self) -> tuple[int, ...]:
        return self.parent.identity_t

    @property
    def mul_t(self):
        return self.parent.mul_t

    @property
    def inv_t(self):
        return self.parent.inv_t

    @property
    def plain_perms(self) -> bool:
        return getattr(self.parent, "plain_perms", True)

    @property
    def tuples(self) -> tuple:
        got = self._cache.get("tuples")
        if got is None:
            got = tuple(sorted(self.tuple_set))
            self._cache["tuples"] = got
        return got

    @property
    def generator_tuples(self) -> tuple:
        if self._gens is None:
            self._gens = small_generating_set(self)
        return self._gens

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(g) for g in self.generator_tuples)

    @property
    def elements(self) -> frozenset[Permutation]:
        got = self._cache.get("elements")
        if got is None:
            got = frozenset(Permutation(t) for t in self.tuple_set)
            self._cache["elements"] = got
        return got

    @property
    def name(self) -> str:
        got = self._cache.get("name")
        if got is None:
            gens = ", ".join(Permutation(g).cycle_string() for g in self.generator_tuples)
            got = f"<{gens}>" if gens else "<()>"
            self._cache["name"] = got
        return got

    def is_trivial(self) -> bool:
        return len(self.tuple_set) == 1

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return other.tuple_set <= self.tuple_set

    def __contains__(self, p: Permutation | tuple[int, ...]) -> bool:
        t = p.images if isinstance(p, Permutation) else p
        return t in self.tuple_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.tuple_set == other.tuple_set

    def __hash__(self) -> int:
        return hash(self.tuple_set)

    def __repr__(self) -> str:
        return f"Subgroup({self.name}, order={self.order} of {self.parent.name})"


def make_subgroup(carrier, tuples: Iterable[tuple], gens=None) -> Subgroup:
    """Intern a subgroup of ``carrier`` by its element set."""
    if isinstance(carrier, Subgroup):
        carrier = carrier.parent
    key = tuples if isinstance(tuples, frozenset) else frozenset(tuples)
    intern = carrier._cache.setdefault("sub_intern", {})
    got = intern.get(key)
    if got is None:
        got = Subgroup(carrier, key, tuple(gens) if gens is not None else None)
        intern[key] = got
    return got


def trivial_subgroup(carrier) -> Subgroup:
    return make_subgroup(carrier, frozenset((carrier.identity_t,)), ())


def full_subgroup(carrier) -> Subgroup:
    """The operand itself, viewed as one of its own subgroups."""
    return make_subgroup(carrier, frozenset(carrier.tuples), carrier.generator_tuples)


def group_closure(
    generators: Sequence[Permutation],
    degree: int | None = None,
    cap: int | None = DEFAULT_ORDER_CAP,
    name: str | None = None,
) -> Group:
    """Enumerate the group generated by ``generators``.

    Stops with :class:`OrderCapExceeded` once more than ``cap`` elements
    appear.  An empty generator list needs an explicit ``degree``.
    """
    if not generators:
        if degree is None:
            raise EmptyStructure("no generators and no degree given")
        return Group(degree, (), (identity_tuple(degree),), name=name)
    degs = {p.degree for p in generators}
    if len(degs) != 1:
        raise DegreeMismatch(f"mixed generator degrees {sorted(degs)}")
    deg = degs.pop()
    if degree is not None and degree != deg:
        raise DegreeMismatch(f"declared degree {degree}, generators act on {deg}")
    gens = [p.images for p in generators]
    found = _closure(gens, compose, identity_tuple(deg), cap=cap)
    return Group(deg, gens, sorted(found), name=name)


def generated_subgroup(operand, seeds: Iterable[tuple]) -> Subgroup:
    """Subgroup of the operand's carrier generated by raw tuples ``seeds``."""
    seeds = [s for s in dict.fromkeys(seeds) if s != operand.identity_t]
    if not seeds:
        return trivial_subgroup(operand)
    found = _closure(seeds, operand.mul_t, operand.identity_t)
    return make_subgroup(operand, frozenset(found), tuple(seeds))


def small_generating_set(sub) -> tuple:
    """A short deterministic generating sequence for a subgroup."""
    if len(sub.tuple_set) == 1:
        return ()
    mul = sub.mul_t
    ident = sub.identity_t
    gens: list[tuple] = []
    have: set[tuple] = {ident}
    have_gens: list[tuple] = []
    for x in sub.tuples:
        if x in have:
            continue
        have = _extend_closure(have, have_gens, [x], mul)
        have_gens.append(x)
        gens.append(x)
        if len(have) == len(sub.tuple_set):
            break
    return tuple(gens)


def set_product_tuples(operand, a: Iterable[tuple], b: Iterable[tuple]) -> set[tuple]:
    mul = operand.mul_t
    blist = list(b)
    return {mul(x, y) for x in a for y in blist}


def set_product(a: Subgroup, b: Subgroup) -> frozenset[Permutation]:
    """The product set A·B; a subgroup exactly when A and B permute."""
    if a.parent is not b.parent:
        raise DegreeMismatch("set_product needs subgroups of the same carrier")
    prod = set_product_tuples(a.parent, a.tuple_set, b.tuple_set)
    return frozenset(Permutation(t) for t in prod)


def is_subgroup_set(operand, tuples: frozenset) -> bool:
    """Is a finite subset closed under the operand's product?"""
    if operand.identity_t not in tuples:
        return False
    mul = operand.mul_t
    for x in tuples:
        for y in tuples:
            if mul(x, y) not in tuples:
                return False
    return True


def is_normal(sub: Subgroup, operand) -> bool:
    """Is ``sub`` normal, conjugating by the operand's generators only."""
    mul = operand.mul_t
    inv = operand.inv_t
    members = sub.tuple_set
    for g in operand.generator_tuples:
        gi = inv(g)
        for h in sub.generator_tuples:
            if mul(mul(gi, h), g) not in members:
                return False
    return True


def normal_closure(operand, seeds: Iterable[tuple]) -> Subgroup:
    """Smallest subgroup containing ``seeds`` normal in the operand."""
    mul = operand.mul_t
    inv = operand.inv_t
    sub = generated_subgroup(operand, seeds)
    found = set(sub.tuple_set)
    gens = list(sub.generator_tuples)
    ggens = [(g, inv(g)) for g in operand.generator_tuples]
    while True:
        new: list[tuple] = []
        for g, gi in ggens:
            for h in gens:
                y = mul(mul(gi, h), g)
                if y not in found:
                    new.append(y)
        if not new:
            break
        found = _extend_closure(found, gens, new, mul)
        gens.extend(dict.fromkeys(new))
    return make_subgroup(operand, frozenset(found), tuple(gens))


def centralizer_of_set(operand, targets) -> Subgroup:
    """Elements commuting with every target.

    ``targets``: a Subgroup (its generators suffice), or an iterable of
    raw tuples / Permutations.
    """
    if isinstance(targets, Subgroup):
        tgt = list(targets.generator_tuples)
    else:
        tgt = [t.images if isinstance(t, Permutation) else t for t in targets]
    mul = operand.mul_t
    members = [
        g for g in operand.tuples if all(mul(g, t) == mul(t, g) for t in tgt)
    ]
    return make_subgroup(operand, frozenset(members))


def subgroup_core(operand, sub: Subgroup) -> Subgroup:
    """Largest subgroup of ``sub`` normal in the operand.

    Equals the union of the operand's conjugacy classes lying inside
    ``sub``, which is automatically a subgroup.
    """
    members: set[tuple] = set()
    for cls in conjugacy_classes(operand):
        if cls <= sub.tuple_set:
            members.update(cls)
    return make_subgroup(operand, frozenset(members))


def conjugacy_classes(operand) -> tuple[frozenset, ...]:
    """Conjugacy classes, sorted by their minimal element."""
    got = operand._cache.get("classes")
    if got is not None:
        return got
    mul = operand.mul_t
    inv = operand.inv_t
    ggens = [(g, inv(g)) for g in operand.generator_tuples]
    seen: set[tuple] = set()
    classes: list[frozenset] = []
    for x in operand.tuples:
        if x in seen:
            continue
        orbit = {x}
        work = [x]
        while work:
            y = work.pop()
            for g, gi in ggens:
                z = mul(mul(gi, y), g)
                if z not in orbit:
                    orbit.add(z)
                    work.append(z)
        seen.update(orbit)
        classes.append(frozenset(orbit))
    got = tuple(classes)
    operand._cache["classes"] = got
    return got


def derived_subgroup(operand) -> Subgroup:
    """Commutator subgroup: normal closure of generator commutators."""
    got = operand._cache.get("derived")
    if got is not None:
        return got
    mul = operand.mul_t
    inv = operand.inv_t
    gens = operand.generator_tuples
    comms = []
    for a in gens:
        ai = inv(a)
        for b in gens:
            comms.append(mul(mul(mul(ai, inv(b)), a), b))
    got = normal_closure(operand, comms)
    operand._cache["derived"] = got
    return got


def center(operand) -> Subgroup:
    got = operand._cache.get("center")
    if got is not None:
        return got
    got = centralizer_of_set(operand, _gens_as_targets(operand))
    operand._cache["center"] = got
    return got


def _gens_as_targets(operand):
    return [g for g in operand.generator_tuples]
