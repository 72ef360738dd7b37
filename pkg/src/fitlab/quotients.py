"""Quotient groups represented by canonical coset representatives.

A quotient keeps the parent's raw element tuples: each coset is named by
its lexicographically least member, and multiplication is the parent
product followed by canonicalization.  A quotient is itself a full operand
(and a carrier for its own subgroups), so every structural algorithm in
the package runs on quotients unchanged.
"""

from __future__ import annotations

from typing import Iterable

from .errors import NotNormal
from .group import Subgroup, is_normal, make_subgroup
from .perm import Permutation

__all__ = ["QuotientGroup", "quotient"]


class QuotientGroup:
    """Operand for G/N with elements the canonical coset representatives."""

    plain_perms = False  # representatives do not carry their coset's order

    def __init__(self, source, kernel: Subgroup) -> None:
        self.source = source
        self.kernel = kernel
        src_mul = source.mul_t
        canon: dict[tuple, tuple] = {}
        reps: list[tuple] = []
        kernel_tuples = kernel.tuples
        for x in source.tuples:
            if x in canon:
                continue
            coset = [src_mul(x, n) for n in kernel_tuples]
            rep = min(coset)
            for y in coset:
                canon[y] = rep
            reps.append(rep)
        self._canon = canon
        self.tuples = tuple(sorted(reps))
        self.tuple_set = frozenset(self.tuples)
        self.identity_t = source.identity_t
        self.degree = source.degree
        gens = []
        for g in source.generator_tuples:
            img = canon[g]
            if img != self.identity_t and img not in gens:
                gens.append(img)
        self.generator_tuples = tuple(gens)
        self.name = f"{source.name}/[{kernel.order}]"
        self._cache: dict = {}
        self._src_mul = src_mul
        self._src_inv = source.inv_t

    @property
    def order(self) -> int:
        return len(self.tuples)

    def mul_t(self, a: tuple, b: tuple) -> tuple:
        return self._canon[self._src_mul(a, b)]

    def inv_t(self, a: tuple) -> tuple:
        return self._canon[self._src_inv(a)]

    def project_t(self, t: tuple) -> tuple:
        """Image of a source element under the natural map."""
        return self._canon[t]

    def project(self, sub: Subgroup) -> Subgroup:
        """Image in the quotient of a subgroup of the source."""
        return make_subgroup(self, frozenset(self._canon[t] for t in sub.tuple_set))

    def preimage(self, sub: Subgroup) -> Subgroup:
        """Full preimage in the source of a subgroup of this quotient."""
        members = sub.tuple_set
        canon = self._canon
        pre = frozenset(t for t in self.source.tuples if canon[t] in members)
        carrier = self.source.parent if isinstance(self.source, Subgroup) else self.source
        return make_subgroup(carrier, pre)

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

    def __contains__(self, p: Permutation | tuple) -> bool:
        t = p.images if isinstance(p, Permutation) else p
        return t in self.tuple_set

    def __repr__(self) -> str:
        return f"QuotientGroup({self.name}, order={self.order})"


def quotient(operand, kernel: Subgroup) -> QuotientGroup:
    """G/N for N normal in the operand.  Results are cached per kernel."""
    cache = operand._cache.setdefault("quotients", {})
    got = cache.get(kernel.tuple_set)
    if got is not None:
        return got
    if not kernel.tuple_set <= operand.tuple_set:
        raise NotNormal(f"kernel of order {kernel.order} is not inside {operand.name}")
    if not is_normal(kernel, operand):
        raise NotNormal(f"subgroup of order {kernel.order} is not normal in {operand.name}")
    q = QuotientGroup(operand, kernel)
    cache[kernel.tuple_set] = q
    return q
