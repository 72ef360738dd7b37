"""Full subgroup lattices, Frattini subgroups and permutable factorizations.

Subgroups are held as bitmasks over the operand's element indexes.  The
generic enumeration grows subgroups bottom-up by adjoining prime-power
cyclic subgroups, with a canonical-chain rule so each subgroup is built
essentially once.  Groups assembled as direct products take a Goursat
route through the factor lattices instead, which is much faster for the
large products.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatch, InvalidParameter, LatticeCapExceeded
from .group import (
    Subgroup,
    conjugacy_classes,
    make_subgroup,
    set_product_tuples,
)
from .structure import element_order, is_abelian, normal_subgroups

__all__ = [
    "DEFAULT_LATTICE_CAP",
    "all_subgroups",
    "maximal_subgroups",
    "frattini",
    "permutes",
    "FactorizationRecord",
    "classify_factorization",
    "find_factorizations",
]

DEFAULT_LATTICE_CAP = 600


class _Lattice:
    """Bitmask view of every subgroup of one operand."""

    def __init__(self, operand) -> None:
        self.operand = operand
        self.tuples = operand.tuples
        self.index = {t: i for i, t in enumerate(self.tuples)}
        self.ident_idx = self.index[operand.identity_t]
        self.full_mask = (1 << len(self.tuples)) - 1
        self._cols: dict[int, list[int]] = {}
        # Filled by the builders: parallel lists sorted by (order, mask).
        self.masks: list[int] = []
        self.orders: list[int] = []
        self.gen_idxs: list[tuple[int, ...] | None] = []
        self.pos: dict[int, int] = {}
        self._members: dict[int, list[int]] = {}
        self._normal: dict[int, bool] = {}
        self._class_idx: list[int] | None = None
        self._below: dict[int, list[int]] = {}
        self._pp_positions: list[int] | None = None
        self._pp_below: dict[int, list[int]] = {}

    # -- index-level products ------------------------------------------

    def col(self, g: int) -> list[int]:
        got = self._cols.get(g)
        if got is None:
            mul = self.operand.mul_t
            gt = self.tuples[g]
            idx = self.index
            got = [idx[mul(t, gt)] for t in self.tuples]
            self._cols[g] = got
        return got

    def close(
        self,
        seed: list[int],
        gens: tuple[int, ...],
        abort_above: int | None = None,
    ) -> tuple[int, int] | None:
        """Closure mask and size, or None once past ``abort_above``."""
        cols = [self.col(g) for g in gens]
        mask = 1 << self.ident_idx
        count = 1
        work: list[int] = []
        for x in seed:
            if not (mask >> x) & 1:
                mask |= 1 << x
                count += 1
                work.append(x)
        while work:
            nxt: list[int] = []
            for x in work:
                for colg in cols:
                    y = colg[x]
                    if not (mask >> y) & 1:
                        mask |= 1 << y
                        count += 1
                        nxt.append(y)
            if abort_above is not None and count > abort_above:
                return None
            work = nxt
        return mask, count

    # -- member/metadata helpers ---------------------------------------

    def members(self, mask: int) -> list[int]:
        got = self._members.get(mask)
        if got is None:
            got = []
            m = mask
            while m:
                low = m & -m
                got.append(low.bit_length() - 1)
                m ^= low
            self._members[mask] = got
        return got

    def subgroup(self, i: int) -> Subgroup:
        members = frozenset(self.tuples[j] for j in self.members(self.masks[i]))
        idxs = self.gen_idxs[i]
        gens = tuple(self.tuples[j] for j in idxs) if idxs is not None else None
        return make_subgroup(self.operand, members, gens)

    def gens_of(self, i: int) -> tuple[int, ...]:
        got = self.gen_idxs[i]
        if got is None:
            got = _mask_generators(self, self.masks[i], self.orders[i])
            self.gen_idxs[i] = got
        return got

    def class_idx(self) -> list[int]:
        if self._class_idx is None:
            arr = [0] * len(self.tuples)
            for ci, cls in enumerate(conjugacy_classes(self.operand)):
                for t in cls:
                    arr[self.index[t]] = ci
            self._class_idx = arr
        return self._class_idx

    def is_normal_member(self, i: int) -> bool:
        got = self._normal.get(i)
        if got is None:
            cls = self.class_idx()
            sizes: dict[int, int] = {}
            for j in self.members(self.masks[i]):
                sizes[cls[j]] = sizes.get(cls[j], 0) + 1
            classes = conjugacy_classes(self.operand)
            got = all(len(classes[c]) == n for c, n in sizes.items())
            self._normal[i] = got
        return got

    def below(self, i: int) -> list[int]:
        """Indexes of all subgroups contained in subgroup ``i``."""
        got = self._below.get(i)
        if got is None:
            big = self.masks[i]
            got = [j for j, m in enumerate(self.masks) if m & big == m]
            self._below[i] = got
        return got

    def pp_positions(self) -> list[int]:
        """Lattice positions of the prime-power cyclic subgroups."""
        if self._pp_positions is None:
            self._pp_positions = sorted(
                self.pos[mask] for _, mask, _ in _prime_power_cyclics(self)
            )
        return self._pp_positions

    def pp_below(self, i: int) -> list[int]:
        got = self._pp_below.get(i)
        if got is None:
            big = self.masks[i]
            got = [
                k for k in self.pp_positions() if self.masks[k] & big == self.masks[k]
            ]
            self._pp_below[i] = got
        return got

    def join_order(self, seed: list[int], gens: tuple[int, ...]) -> int:
        res = self.close(seed, gens)
        assert res is not None
        return res[1]


def _prime_power_cyclics(lat: _Lattice) -> list[tuple[int, int, int]]:
    """(order, mask, generator index) per cyclic p-subgroup, canonical order."""
    operand = lat.operand
    mul = operand.mul_t
    out: dict[int, tuple[int, int, int]] = {}
    for i, t in enumerate(lat.tuples):
        if i == lat.ident_idx:
            continue
        n = element_order(operand, t)
        if not _is_prime_power(n):
            continue
        mask = 1 << lat.ident_idx
        acc = t
        while acc != operand.identity_t:
            mask |= 1 << lat.index[acc]
            acc = mul(acc, t)
        if mask not in out:
            out[mask] = (n, mask, i)
    return sorted(out.values())


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    while n % p == 0:
        n //= p
    return n == 1


def _build_generic(lat: _Lattice) -> None:
    cyclics = _prime_power_cyclics(lat)
    cyc_masks = [c[1] for c in cyclics]
    cyc_gens = [c[2] for c in cyclics]
    m = len(cyclics)
    inside = [
        [k for k in range(m) if k != j and cyc_masks[k] & cyc_masks[j] == cyc_masks[k]]
        for j in range(m)
    ]
    trivial_mask = 1 << lat.ident_idx
    found: dict[int, tuple[int, tuple[int, ...]]] = {trivial_mask: (1, ())}
    queue: list[tuple[int, int, tuple[int, ...]]] = [(trivial_mask, 1, ())]
    head = 0
    while head < len(queue):
        s_mask, s_count, s_gens = queue[head]
        head += 1
        s_members = lat.members(s_mask)
        for j in range(m):
            cm = cyc_masks[j]
            if cm & s_mask == cm:
                continue
            # Reject quickly: a smaller missing cyclic inside this one would
            # also land in the closure, so the chain would not be canonical.
            if any(
                cyc_masks[k] & s_mask != cyc_masks[k]
                for k in inside[j]
                if k < j
            ):
                continue
            gens = s_gens + (cyc_gens[j],)
            res = lat.close(s_members + [cyc_gens[j]], gens)
            assert res is not None
            t_mask, t_count = res
            if t_mask in found:
                continue
            canonical = True
            for k in range(j):
                ck = cyc_masks[k]
                if ck & s_mask != ck and ck & t_mask == ck:
                    canonical = False
                    break
            if not canonical:
                continue
            found[t_mask] = (t_count, gens)
            queue.append((t_mask, t_count, gens))
    _store(lat, found)


def _store(
    lat: _Lattice, found: dict[int, tuple[int, tuple[int, ...] | None]]
) -> None:
    items = sorted((order, mask) for mask, (order, _) in found.items())
    lat.masks = [mask for _, mask in items]
    lat.orders = [order for order, _ in items]
    lat.gen_idxs = [found[mask][1] for _, mask in items]
    lat.pos = {mask: i for i, (_, mask) in enumerate(items)}


def _build_goursat(lat: _Lattice) -> None:
    operand = lat.operand
    grp_a, grp_b = operand.factor_groups
    deg_a = grp_a.degree
    shift = tuple(range(deg_a))

    def glue(ta: tuple, tb: tuple) -> tuple:
        return ta + tuple(x + deg_a for x in tb)

    pair_idx: dict[tuple[tuple, tuple], int] = {}
    for ta in grp_a.tuples:
        for tb in grp_b.tuples:
            pair_idx[(ta, tb)] = lat.index[glue(ta, tb)]

    sections_a = _sections(grp_a)
    sections_b = _sections(grp_b)
    found: dict[int, tuple[int, tuple[int, ...] | None]] = {}
    for p_sub, p0_sub, q_a in sections_a:
        for q_sub, q0_sub, q_b in sections_b:
            if q_a.order != q_b.order:
                continue
            for iso in _isomorphisms(q_a, q_b):
                mask = 0
                count = 0
                for p in p_sub.tuples:
                    qbar = iso[q_a.project_t(p)]
                    for q0 in q0_sub.tuples:
                        mask |= 1 << pair_idx[(p, grp_b.mul_t(qbar, q0))]
                        count += 1
                if mask not in found:
                    found[mask] = (count, None)
    _store(lat, found)


def _mask_generators(lat: _Lattice, mask: int, count: int) -> tuple[int, ...]:
    """Small generating indexes for a known-closed member mask."""
    if count == 1:
        return ()
    gens: list[int] = []
    have = 1 << lat.ident_idx
    n_have = 1
    for j in lat.members(mask):
        if (have >> j) & 1:
            continue
        gens.append(j)
        res = lat.close(lat.members(have) + [j], tuple(gens))
        assert res is not None
        have, n_have = res
        if n_have == count:
            break
    return tuple(gens)


def _sections(grp):
    """(subgroup, normal-in-it, quotient) triples over a factor group."""
    got = grp._cache.get("goursat_sections")
    if got is None:
        from .quotients import quotient

        out = []
        for sub in all_subgroups(grp, cap=None):
            for nrm in normal_subgroups(sub):
                out.append((sub, nrm, quotient(sub, nrm)))
        got = tuple(out)
        grp._cache["goursat_sections"] = got
    return got


def _isomorphisms(q_a, q_b) -> list[dict]:
    """Every isomorphism between two small quotient operands."""
    if q_a.order != q_b.order:
        return []
    gens = list(q_a.generator_tuples)
    if not gens:
        return [{q_a.identity_t: q_b.identity_t}]
    orders_b: dict[int, list[tuple]] = {}
    for t in q_b.tuples:
        orders_b.setdefault(element_order(q_b, t), []).append(t)
    gen_orders = [element_order(q_a, g) for g in gens]
    out: list[dict] = []

    def assign(k: int, images: list[tuple]) -> None:
        if k == len(gens):
            mapping = _extend_hom(q_a, q_b, gens, images)
            if mapping is not None and len(set(mapping.values())) == q_a.order:
                out.append(mapping)
            return
        for cand in orders_b.get(gen_orders[k], ()):
            assign(k + 1, images + [cand])

    assign(0, [])
    return out


def _extend_hom(q_a, q_b, gens, images) -> dict | None:
    """Grow a generator assignment into a full homomorphism, or fail."""
    mapping = {q_a.identity_t: q_b.identity_t}
    work = [q_a.identity_t]
    mul_a = q_a.mul_t
    mul_b = q_b.mul_t
    while work:
        x = work.pop()
        fx = mapping[x]
        for g, fg in zip(gens, images):
            y = mul_a(x, g)
            fy = mul_b(fx, fg)
            seen = mapping.get(y)
            if seen is None:
                mapping[y] = fy
                work.append(y)
            elif seen != fy:
                return None
    if len(mapping) != q_a.order:
        return None
    return mapping


def _lattice(operand, cap: int | None = DEFAULT_LATTICE_CAP) -> _Lattice:
    got = operand._cache.get("lattice")
    if got is not None:
        return got
    if cap is not None and operand.order > cap:
        raise LatticeCapExceeded(
            f"{operand.name} has order {operand.order}, over the lattice cap {cap}"
        )
    lat = _Lattice(operand)
    if getattr(operand, "factor_groups", None) is not None:
        _build_goursat(lat)
    else:
        _build_generic(lat)
    operand._cache["lattice"] = lat
    return lat


def all_subgroups(operand, cap: int | None = DEFAULT_LATTICE_CAP) -> tuple[Subgroup, ...]:
    """Every subgroup, sorted by order then element set."""
    lat = _lattice(operand, cap)
    return tuple(lat.subgroup(i) for i in range(len(lat.masks)))


def maximal_subgroups(operand, cap: int | None = DEFAULT_LATTICE_CAP) -> tuple[Subgroup, ...]:
    lat = _lattice(operand, cap)
    n = len(lat.masks)
    out = []
    for i in range(n - 2, -1, -1):  # skip the whole group at the top
        mask = lat.masks[i]
        if not any(
            mask & lat.masks[j] == mask for j in range(i + 1, n - 1)
        ):
            out.append(i)
    return tuple(lat.subgroup(i) for i in sorted(out))


def frattini(operand, cap: int | None = DEFAULT_LATTICE_CAP) -> Subgroup:
    """Intersection of the maximal subgroups."""
    got = operand._cache.get("frattini")
    if got is not None:
        return got
    lat = _lattice(operand, cap)
    n = len(lat.masks)
    acc = lat.full_mask if n > 1 else lat.masks[-1]
    top = lat.masks[-1]
    for i in range(n - 2, -1, -1):
        mask = lat.masks[i]
        if mask & acc == acc:
            continue  # cannot shrink the running intersection
        if not any(mask & lat.masks[j] == mask for j in range(i + 1, n - 1)):
            acc &= mask
    if n == 1:
        acc = top
    got = make_subgroup(operand, frozenset(lat.tuples[j] for j in lat.members(acc)))
    operand._cache["frattini"] = got
    return got


def permutes(a: Subgroup, b: Subgroup) -> bool:
    """Do two subgroups permute, i.e. is the product set AB equal to BA?"""
    if a.parent is not b.parent:
        raise DegreeMismatch("permutes needs subgroups of a common carrier")
    ab = set_product_tuples(a.parent, a.tuple_set, b.tuple_set)
    ba = set_product_tuples(a.parent, b.tuple_set, a.tuple_set)
    return ab == ba


@dataclass(frozen=True)
class FactorizationRecord:
    """One subgroup pair A, B with G = AB, classified by permutability."""

    a: Subgroup
    b: Subgroup
    is_product: bool
    mutually: bool
    totally: bool
    mutual_witness: tuple[str, Subgroup] | None = None
    total_witness: tuple[str, Subgroup] | None = None

    @property
    def nontrivial(self) -> bool:
        whole = len(self.a.parent.tuples)
        return 1 < self.a.order < whole and 1 < self.b.order < whole


class _PairChecker:
    """Fast permutability tests against one lattice.

    Permutability is closed under joins in either argument: if AX = XA
    and AY = YA then A permutes with ⟨X, Y⟩, by pushing A through the
    alternating word sets.  Every subgroup is the join of its prime-power
    cyclic subgroups, so the quantified scans below only ever visit
    prime-power cyclics.
    """

    def __init__(self, lat: _Lattice) -> None:
        self.lat = lat
        self.abelian = is_abelian(lat.operand)
        self.whole = len(lat.tuples)
        self._memo: dict[tuple[int, int], bool] = {}

    def permutes_idx(self, i: int, j: int) -> bool:
        lat = self.lat
        mi, mj = lat.masks[i], lat.masks[j]
        if mi & mj in (mi, mj):
            return True
        if self.abelian:
            return True
        key = (i, j) if i < j else (j, i)
        got = self._memo.get(key)
        if got is not None:
            return got
        if lat.is_normal_member(i) or lat.is_normal_member(j):
            got = True
        else:
            inter = (mi & mj).bit_count()
            target = lat.orders[i] * lat.orders[j] // inter
            if target == self.whole:
                got = True
            else:
                gi, gj = lat.gens_of(i), lat.gens_of(j)
                res = lat.close(
                    lat.members(mi) + list(gj), gi + gj, abort_above=target
                )
                got = res is not None
        self._memo[key] = got
        return got

    def first_nonpermuting(self, i: int, j: int) -> int | None:
        """Smallest prime-power cyclic below j not permuting with i."""
        for x in self.lat.pp_below(j):
            if not self.permutes_idx(i, x):
                return x
        return None

    def totally_witness(self, i: int, j: int) -> tuple[int, int] | None:
        for x in self.lat.pp_below(i):
            for y in self.lat.pp_below(j):
                if not self.permutes_idx(x, y):
                    return x, y
        return None


def classify_factorization(operand, a: Subgroup, b: Subgroup,
                           cap: int | None = DEFAULT_LATTICE_CAP) -> FactorizationRecord:
    """Classify one candidate pair of subgroups of the operand."""
    if a.parent is not b.parent:
        raise DegreeMismatch("factors must share a carrier")
    lat = _lattice(operand, cap)
    inter = len(a.tuple_set & b.tuple_set)
    is_product = a.order * b.order == operand.order * inter
    checker = _PairChecker(lat)
    i = lat.pos[_mask_of(lat, a)]
    j = lat.pos[_mask_of(lat, b)]
    return _classify_pair(checker, i, j, is_product)


def _mask_of(lat: _Lattice, sub: Subgroup) -> int:
    mask = 0
    for t in sub.tuple_set:
        i = lat.index.get(t)
        if i is None:
            raise InvalidParameter("factor is not a subgroup of the operand")
        mask |= 1 << i
    return mask


def _classify_pair(checker: _PairChecker, i: int, j: int,
                   is_product: bool) -> FactorizationRecord:
    lat = checker.lat
    if checker.abelian:
        return FactorizationRecord(
            lat.subgroup(i), lat.subgroup(j), is_product, True, True
        )
    mutual_witness = None
    total_witness = None
    x = checker.first_nonpermuting(i, j)
    if x is not None:
        mutual_witness = ("B", lat.subgroup(x))
        mutually = False
    else:
        x = checker.first_nonpermuting(j, i)
        if x is not None:
            mutual_witness = ("A", lat.subgroup(x))
            mutually = False
        else:
            mutually = True
    totally = False
    if mutually:
        wit = checker.totally_witness(i, j)
        if wit is None:
            totally = True
        else:
            total_witness = ("A", lat.subgroup(wit[0]))
    return FactorizationRecord(
        lat.subgroup(i),
        lat.subgroup(j),
        is_product,
        mutually,
        totally,
        mutual_witness,
        total_witness,
    )


def find_factorizations(operand, mode: str = "all",
                        cap: int | None = DEFAULT_LATTICE_CAP) -> tuple[FactorizationRecord, ...]:
    """Unordered pairs of proper subgroups with AB = G, filtered by mode.

    Pairs with a whole-group factor are left out: G = AG holds for every
    subgroup A and says nothing.  ``mode`` is "all", "mutually"
    (mutually permutable only) or "totally".
    """
    if mode not in ("all", "mutually", "totally"):
        raise InvalidParameter(f"unknown factorization mode {mode!r}")
    key = ("factorizations", mode)
    got = operand._cache.get(key)
    if got is not None:
        return got
    lat = _lattice(operand, cap)
    checker = _PairChecker(lat)
    whole = len(lat.tuples)
    n = len(lat.masks)
    records = []
    for i in range(n - 2, -1, -1):
        oi = lat.orders[i]
        if oi * oi < whole:
            break
        mi = lat.masks[i]
        for j in range(i, -1, -1):
            oj = lat.orders[j]
            if oi * oj < whole:
                break
            inter = (mi & lat.masks[j]).bit_count()
            if oi * oj != whole * inter:
                continue
            if mode != "all":
                # Cheap screen first; materialize survivors only.
                if not checker.abelian and (
                    checker.first_nonpermuting(i, j) is not None
                    or checker.first_nonpermuting(j, i) is not None
                ):
                    continue
                if mode == "totally":
                    if not checker.abelian and checker.totally_witness(j, i) is not None:
                        continue
                    records.append(
                        FactorizationRecord(
                            lat.subgroup(j), lat.subgroup(i), True, True, True
                        )
                    )
                    continue
            rec = _classify_pair(checker, j, i, True)
            if mode == "mutually" and not rec.mutually:
                continue
            records.append(rec)
    records.sort(
        key=lambda r: (r.a.order, r.a.tuples, r.b.order, r.b.tuples)
    )
    got = tuple(records)
    operand._cache[key] = got
    return got
