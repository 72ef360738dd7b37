"""Normal structure: normal subgroups, chief series, section innerisers.

Normal subgroups are enumerated at the level of conjugacy classes: every
normal subgroup is a union of classes containing the identity that is
closed under products, and every such union is the join of normal
closures of single classes.  All heavy results are cached per operand.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import (
    DegenerateFactor,
    InvalidParameter,
    InvalidPrime,
    NotNormal,
)
from .group import (
    Subgroup,
    conjugacy_classes,
    derived_subgroup,
    full_subgroup,
    generated_subgroup,
    make_subgroup,
    normal_closure,
    set_product_tuples,
    trivial_subgroup,
)

__all__ = [
    "normal_subgroups",
    "minimal_normal_subgroups",
    "join_of_normals",
    "socle_subgroup",
    "ChiefFactor",
    "ChiefSeries",
    "chief_series",
    "inneriser",
    "section_centralizer",
    "fitting_subgroup",
    "fstar_subgroup",
    "nilpotent_residual",
    "fitting_height",
    "is_subnormal",
    "element_order",
    "is_abelian",
    "is_nilpotent",
    "is_soluble",
    "is_p_soluble",
    "is_quasinilpotent",
    "is_semisimple",
    "is_simple",
    "is_perfect",
    "class_predicate",
    "check_prime",
    "largest_normal_p_subgroup",
    "soluble_radical",
    "p_soluble_radical",
]


def check_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2:
        raise InvalidPrime(f"{p!r} is not a prime")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise InvalidPrime(f"{p} = {d} * {p // d} is not a prime")
        d += 1
    return p


class _NormalCtx:
    """Per-operand scratch space for class-level normal subgroup work."""

    def __init__(self, operand) -> None:
        self.operand = operand
        self.classes = conjugacy_classes(operand)
        self.class_of = {
            t: i for i, cls in enumerate(self.classes) for t in cls
        }
        self.reps = [min(cls) for cls in self.classes]
        self.ident = self.class_of[operand.identity_t]
        self.ncl: dict[int, frozenset[int]] = {}
        self.joins: dict[frozenset[int], frozenset[int]] = {}

    def close(self, seeds) -> frozenset[int]:
        """Smallest product-closed class union containing the seeds.

        Conjugation-invariant sets satisfy class(xy) = class(yx), so
        closing one-sided products of class representatives against
        whole classes suffices.
        """
        mul = self.operand.mul_t
        classes = self.classes
        class_of = self.class_of
        reps = self.reps
        members: set[int] = {self.ident}
        work: list[int] = []

        def admit(c: int) -> None:
            if c in members:
                return
            members.add(c)
            work.append(c)
            known = self.ncl.get(c)
            if known is not None:
                for d in known:
                    admit(d)

        for s in seeds:
            admit(s)
        while work:
            c = work.pop()
            rc = reps[c]
            for d in list(members):
                for y in classes[d]:
                    admit(class_of[mul(rc, y)])
        return frozenset(members)

    def join_classes(self, u: frozenset[int], v: frozenset[int]) -> frozenset[int]:
        """Join of two class-closed subgroups: their product set, which
        is already a subgroup, so no closure pass is needed."""
        union = u | v
        got = self.joins.get(union)
        if got is not None:
            return got
        mul = self.operand.mul_t
        classes = self.classes
        class_of = self.class_of
        reps = self.reps
        members: set[int] = set(union)
        for c in u:
            rc = reps[c]
            for d in v:
                for y in classes[d]:
                    members.add(class_of[mul(rc, y)])
        got = frozenset(members)
        self.joins[union] = got
        return got

    def class_closure(self, i: int) -> frozenset[int]:
        """Class set of the normal closure of one conjugacy class."""
        got = self.ncl.get(i)
        if got is None:
            got = self.close([i])
            self.ncl[i] = got
        return got

    def size_of(self, class_set: frozenset[int]) -> int:
        return sum(len(self.classes[c]) for c in class_set)

    def class_set_of_subgroup(self, sub: Subgroup) -> frozenset[int]:
        return frozenset(self.class_of[t] for t in _class_reps_in(sub, self))

    def subgroup_from(self, class_set: frozenset[int]) -> Subgroup:
        members: set[tuple] = set()
        for i in class_set:
            members.update(self.classes[i])
        return make_subgroup(self.operand, frozenset(members))


def _class_reps_in(sub: Subgroup, ctx: _NormalCtx):
    seen: set[int] = set()
    for t in sub.tuple_set:
        i = ctx.class_of[t]
        if i not in seen:
            seen.add(i)
            yield t


def _normal_ctx(operand) -> _NormalCtx:
    ctx = operand._cache.get("normal_ctx")
    if ctx is None:
        ctx = _NormalCtx(operand)
        operand._cache["normal_ctx"] = ctx
    return ctx


def normal_subgroups(operand) -> tuple[Subgroup, ...]:
    """All normal subgroups, sorted by order then element set."""
    got = operand._cache.get("normals")
    if got is not None:
        return got
    ctx = _normal_ctx(operand)
    base: list[frozenset[int]] = []
    for i in range(len(ctx.classes)):
        if i == ctx.ident:
            continue
        base.append(ctx.class_closure(i))
    sizes: dict[frozenset[int], int] = {}

    def size(cs: frozenset[int]) -> int:
        got = sizes.get(cs)
        if got is None:
            got = ctx.size_of(cs)
            sizes[cs] = got
        return got

    found: set[frozenset[int]] = {frozenset([ctx.ident])}
    by_size: dict[int, list[frozenset[int]]] = {1: [frozenset([ctx.ident])]}
    work: list[frozenset[int]] = []
    for cs in dict.fromkeys(base):
        if cs not in found:
            found.add(cs)
            by_size.setdefault(size(cs), []).append(cs)
            work.append(cs)
    while work:
        u = work.pop()
        for v in list(found):
            if u <= v or v <= u:
                continue
            # The join of two normals is their product set, of size
            # |u||v|/|u n v|; a known normal of that size containing
            # both is the join, skipping the product computation.
            target = size(u) * size(v) // size(u & v)
            union = u | v
            join = None
            for w in by_size.get(target, ()):
                if union <= w:
                    join = w
                    break
            if join is None:
                join = ctx.join_classes(u, v)
                found.add(join)
                by_size.setdefault(size(join), []).append(join)
                work.append(join)
    subs = [ctx.subgroup_from(cs) for cs in found]
    subs.sort(key=lambda s: (s.order, s.tuples))
    got = tuple(subs)
    operand._cache["normals"] = got
    return got


def minimal_normal_subgroups(operand) -> tuple[Subgroup, ...]:
    """Minimal elements among normal closures of single classes.

    Every minimal normal subgroup is the closure of any one of its
    nontrivial classes, so the full lattice is never needed here.
    """
    got = operand._cache.get("minimal_normals")
    if got is not None:
        return got
    ctx = _normal_ctx(operand)
    closures = {
        ctx.class_closure(i)
        for i in range(len(ctx.classes))
        if i != ctx.ident
    }
    subs = [ctx.subgroup_from(cs) for cs in closures]
    subs.sort(key=lambda s: (s.order, s.tuples))
    out: list[Subgroup] = []
    for n in subs:
        if not any(m.tuple_set < n.tuple_set for m in out):
            out.append(n)
    got = tuple(out)
    operand._cache["minimal_normals"] = got
    return got


def join_of_normals(operand, subs) -> Subgroup:
    """Join of normal subgroups of the operand, via class unions."""
    ctx = _normal_ctx(operand)
    seeds: set[int] = set()
    for s in subs:
        seeds.update(ctx.class_of[t] for t in _class_reps_in(s, ctx))
    return ctx.subgroup_from(ctx.close(seeds))


def socle_subgroup(operand) -> Subgroup:
    got = operand._cache.get("socle")
    if got is None:
        mins = minimal_normal_subgroups(operand)
        if not mins:
            got = trivial_subgroup(operand)
        else:
            got = join_of_normals(operand, mins)
        operand._cache["socle"] = got
    return got


@dataclass(frozen=True)
class ChiefFactor:
    """One factor of a chief series, classified by its own structure."""

    below: Subgroup
    above: Subgroup
    order: int
    kind: str  # "elementary" or "semisimple"
    prime: int | None


@dataclass(frozen=True)
class ChiefSeries:
    terms: tuple[Subgroup, ...]
    factors: tuple[ChiefFactor, ...]


def _factor_kind(operand, below: Subgroup, above: Subgroup) -> tuple[str, int | None]:
    """Classify a chief factor: elementary abelian or centreless semisimple."""
    mul = operand.mul_t
    inv = operand.inv_t
    kset = below.tuple_set
    hgens = [(h, inv(h)) for h in above.generator_tuples]
    central = [
        x
        for x in above.tuple_set
        if all(mul(mul(mul(inv(x), hi), x), h) in kset for h, hi in hgens)
    ]
    forder = above.order // below.order
    if len(central) == above.order:
        p = _smallest_prime_factor(forder)
        if p ** _ilog(forder, p) != forder:
            raise AssertionError(
                f"abelian chief factor of order {forder} is not a p-group"
            )
        for h in above.generator_tuples:
            if _pow_t(operand, h, p) not in kset:
                raise AssertionError("abelian chief factor is not elementary")
        return "elementary", p
    if len(central) != below.order:
        raise AssertionError("chief factor has proper nontrivial centre")
    return "semisimple", None


def _pow_t(operand, t, n: int):
    mul = operand.mul_t
    acc = operand.identity_t
    for _ in range(n):
        acc = mul(acc, t)
    return acc


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _ilog(n: int, p: int) -> int:
    k = 0
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    return k


def chief_series(operand, prefer: str = "smallest") -> ChiefSeries:
    """A chief series, built upward through the normal subgroup lattice.

    Each step picks a normal subgroup covering the current term; with
    ``prefer="smallest"`` the smallest-order cover (ties by element set),
    with ``prefer="largest"`` the largest.  The alternate preference exists
    so tests can confirm series-independent consumers really are.
    """
    if prefer not in ("smallest", "largest"):
        raise InvalidParameter(f"unknown preference {prefer!r}")
    key = "chief_series" if prefer == "smallest" else "chief_series_alt"
    got = operand._cache.get(key)
    if got is not None:
        return got
    normals = normal_subgroups(operand)
    term = normals[0]
    terms = [term]
    factors: list[ChiefFactor] = []
    full_order = operand.order
    while term.order < full_order:
        covers = [
            n
            for n in normals
            if n.order > term.order and term.tuple_set < n.tuple_set
        ]
        nxt = covers[0]
        if prefer == "largest":
            # A candidate is a cover when no smaller candidate sits inside it.
            strict = [
                n
                for n in covers
                if not any(
                    m.order < n.order and m.tuple_set < n.tuple_set
                    for m in covers
                )
            ]
            nxt = strict[-1]
        kind, p = _factor_kind(operand, term, nxt)
        factors.append(
            ChiefFactor(term, nxt, nxt.order // term.order, kind, p)
        )
        terms.append(nxt)
        term = nxt
    got = ChiefSeries(tuple(terms), tuple(factors))
    operand._cache[key] = got
    return got


def section_centralizer(operand, above: Subgroup, below: Subgroup) -> Subgroup:
    """Elements whose commutators with ``above`` land in ``below``."""
    mul = operand.mul_t
    inv = operand.inv_t
    kset = below.tuple_set
    candidates = operand.tuples
    for h in above.generator_tuples:
        hi = inv(h)
        kept = []
        for g in candidates:
            if mul(mul(mul(inv(g), hi), g), h) in kset:
                kept.append(g)
        candidates = kept
    return make_subgroup(operand, frozenset(candidates))


def inneriser(operand, above: Subgroup, below: Subgroup) -> Subgroup:
    """H * C_G(H/K): elements acting on the section as inner automorphisms.

    Both subgroups must be normal in the operand with K strictly below H.
    """
    if below.tuple_set == above.tuple_set:
        raise DegenerateFactor("section H/K needs K strictly below H")
    if not below.tuple_set < above.tuple_set:
        raise NotNormal("section H/K needs K inside H")
    from .group import is_normal

    for sub, label in ((above, "H"), (below, "K")):
        if not is_normal(sub, operand):
            raise NotNormal(f"{label} is not normal in {operand.name}")
    cent = section_centralizer(operand, above, below)
    mul = operand.mul_t
    members: set[tuple] = set()
    hlist = above.tuples
    for c in cent.tuples:
        if c in members:
            continue
        members.update(mul(h, c) for h in hlist)
    members.update(above.tuple_set)
    return make_subgroup(operand, frozenset(members))


def fitting_subgroup(operand) -> Subgroup:
    """Product of the p-cores over the primes dividing the order."""
    got = operand._cache.get("fitting")
    if got is not None:
        return got
    members = frozenset((operand.identity_t,))
    total = 1
    for p in _prime_factors(operand.order):
        core = largest_normal_p_subgroup(operand, p)
        if core.order == 1:
            continue
        total *= core.order
        members = frozenset(set_product_tuples(operand, members, core.tuple_set))
    got = make_subgroup(operand, members)
    assert got.order == total  # cores for distinct primes intersect trivially
    operand._cache["fitting"] = got
    return got


def fstar_subgroup(operand) -> Subgroup:
    """Intersection of the innerisers over the factors of a chief series.

    Soluble operands shortcut to the Fitting subgroup, which the
    intersection would reproduce anyway; the equivalence of the two
    routes is covered by the oracle suite.
    """
    got = operand._cache.get("fstar")
    if got is not None:
        return got
    if is_soluble(operand):
        got = fitting_subgroup(operand)
        operand._cache["fstar"] = got
        return got
    series = chief_series(operand)
    acc = set(operand.tuples)
    for factor in series.factors:
        inn = inneriser(operand, factor.above, factor.below)
        acc &= inn.tuple_set
    got = make_subgroup(operand, frozenset(acc))
    operand._cache["fstar"] = got
    return got


def nilpotent_residual(operand) -> Subgroup:
    """Limit of the lower central series, as a subgroup of the carrier."""
    got = operand._cache.get("nilpotent_residual")
    if got is not None:
        return got
    mul = operand.mul_t
    inv = operand.inv_t
    gens = operand.generator_tuples
    current = full_subgroup(operand)
    while True:
        seeds = set()
        for a in current.tuples:
            ai = inv(a)
            for g in gens:
                seeds.add(mul(mul(mul(ai, inv(g)), a), g))
        nxt = normal_closure(operand, seeds)
        if nxt.order == current.order:
            break
        current = nxt
    operand._cache["nilpotent_residual"] = current
    return current


def fitting_height(operand) -> int:
    """Length of the descending nilpotent-residual tower.

    Defined for soluble operands, where it agrees with the height of
    the ascending Fitting series but needs no quotient groups.
    """
    got = operand._cache.get("fitting_height")
    if got is not None:
        return got
    if not is_soluble(operand):
        raise InvalidParameter(f"{operand.name} is not soluble")
    h = 0
    current = operand
    while current.order > 1:
        nxt = nilpotent_residual(current)
        assert nxt.order < current.order  # soluble towers descend
        current = nxt
        h += 1
    operand._cache["fitting_height"] = h
    return h


def is_subnormal(sub: Subgroup, operand) -> bool:
    """Descend through iterated normal closures until they stabilize."""
    if not sub.tuple_set <= operand.tuple_set:
        return False
    current = full_subgroup(operand)
    while True:
        nxt = normal_closure(current, sub.generator_tuples)
        if nxt.tuple_set == current.tuple_set:
            return current.tuple_set == sub.tuple_set
        current = nxt
        if current.tuple_set == sub.tuple_set:
            return True


def element_order(operand, t) -> int:
    if getattr(operand, "plain_perms", True):
        cyc = _cycle_lengths(t)
        return lcm(*cyc) if cyc else 1
    mul = operand.mul_t
    ident = operand.identity_t
    n = 1
    acc = t
    while acc != ident:
        acc = mul(acc, t)
        n += 1
    return n


def _cycle_lengths(t) -> list[int]:
    seen = [False] * len(t)
    out = []
    for i in range(len(t)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = t[j]
            n += 1
        out.append(n)
    return out


def is_abelian(operand) -> bool:
    got = operand._cache.get("abelian")
    if got is None:
        mul = operand.mul_t
        gens = operand.generator_tuples
        got = all(
            mul(a, b) == mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :]
        )
        operand._cache["abelian"] = got
    return got


def _radical_by_classes(operand, pred) -> Subgroup:
    """Largest normal subgroup whose class fits ``pred``.

    Sound for predicates closed under normal subgroups and products of
    normal subgroups: the radical is then the join of the normal
    closures of single conjugacy classes that satisfy the predicate.
    """
    ctx = _normal_ctx(operand)
    seeds = [
        i
        for i in range(len(ctx.classes))
        if i != ctx.ident and pred(ctx, ctx.class_closure(i))
    ]
    if not seeds:
        return trivial_subgroup(operand)
    got = ctx.subgroup_from(ctx.close(seeds))
    return got


def largest_normal_p_subgroup(operand, p: int) -> Subgroup:
    """The p-core: the unique largest normal p-subgroup."""
    check_prime(p)
    cache = operand._cache.setdefault("p_cores", {})
    got = cache.get(p)
    if got is None:
        got = _radical_by_classes(
            operand, lambda ctx, cs: _is_prime_power(ctx.size_of(cs), p)
        )
        assert _is_prime_power(got.order, p)
        cache[p] = got
    return got


def soluble_radical(operand) -> Subgroup:
    got = operand._cache.get("soluble_radical")
    if got is None:
        got = _radical_by_classes(
            operand, lambda ctx, cs: is_soluble(ctx.subgroup_from(cs))
        )
        assert is_soluble(got)
        operand._cache["soluble_radical"] = got
    return got


def p_soluble_radical(operand, p: int) -> Subgroup:
    check_prime(p)
    cache = operand._cache.setdefault("p_soluble_radicals", {})
    got = cache.get(p)
    if got is None:
        got = _radical_by_classes(
            operand, lambda ctx, cs: is_p_soluble(ctx.subgroup_from(cs), p)
        )
        assert is_p_soluble(got, p)
        cache[p] = got
    return got


def _is_prime_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def is_nilpotent(operand) -> bool:
    """Nilpotent iff the p-cores multiply up to the whole order."""
    got = operand._cache.get("nilpotent")
    if got is None:
        prod = 1
        for p in _prime_factors(operand.order):
            prod *= largest_normal_p_subgroup(operand, p).order
        got = prod == operand.order
        operand._cache["nilpotent"] = got
    return got


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_soluble(operand) -> bool:
    got = operand._cache.get("soluble")
    if got is None:
        current = full_subgroup(operand)
        while True:
            nxt = derived_subgroup(current)
            if nxt.order == current.order:
                break
            current = nxt
        got = current.order == 1
        operand._cache["soluble"] = got
    return got


def is_p_soluble(operand, p: int) -> bool:
    """Every chief factor is a p-group or has order prime to p."""
    check_prime(p)
    cache = operand._cache.setdefault("p_soluble", {})
    got = cache.get(p)
    if got is None:
        if operand.order % p != 0 or is_soluble(operand):
            got = True
        else:
            got = all(
                (f.kind == "elementary" and f.prime == p) or f.order % p != 0
                for f in chief_series(operand).factors
            )
        cache[p] = got
    return got


def is_quasinilpotent(operand) -> bool:
    got = operand._cache.get("quasinilpotent")
    if got is None:
        if is_soluble(operand):
            got = is_nilpotent(operand)
        else:
            got = fstar_subgroup(operand).order == operand.order
        operand._cache["quasinilpotent"] = got
    return got


def is_semisimple(operand) -> bool:
    """A nontrivial direct product of nonabelian simple groups."""
    if operand.order == 1:
        return False
    mins = minimal_normal_subgroups(operand)
    if any(is_abelian(m) for m in mins):
        return False
    return socle_subgroup(operand).order == operand.order


def is_simple(operand) -> bool:
    return operand.order > 1 and len(normal_subgroups(operand)) == 2


def is_perfect(operand) -> bool:
    return derived_subgroup(operand).order == operand.order


def class_predicate(kind: str, operand, p: int | None = None) -> bool:
    """Named membership tests used by radicals and the theorem harness."""
    if kind == "nilpotent":
        return is_nilpotent(operand)
    if kind == "soluble":
        return is_soluble(operand)
    if kind == "p-soluble":
        if p is None:
            raise InvalidParameter("p-soluble needs a prime")
        return is_p_soluble(operand, p)
    if kind == "quasinilpotent":
        return is_quasinilpotent(operand)
    if kind == "semisimple":
        return is_semisimple(operand)
    if kind == "simple":
        return is_simple(operand)
    if kind == "perfect":
        return is_perfect(operand)
    if kind == "abelian":
        return is_abelian(operand)
    raise InvalidParameter(f"unknown class predicate {kind!r}")
