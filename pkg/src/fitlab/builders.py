"""Constructors for the built-in group families and the demo corpus.

Groups are named by a tiny grammar: base names like ``S4`` or ``PSL(2,7)``,
wreath products like ``C2wrC3``, and direct products joined with ``x``,
with parentheses for grouping.  ``build_group`` parses such a name;
``default_corpus`` lists everything the sweep runs over.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidParameter
from .group import DEFAULT_ORDER_CAP, Group, group_closure, make_subgroup
from .perm import Permutation, identity_tuple
from .structure import element_order

__all__ = [
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "special_linear2",
    "projective_special_linear2",
    "direct_product",
    "wreath_regular",
    "build_group",
    "CorpusSpec",
    "default_corpus",
]


def cyclic(n: int) -> Group:
    if n < 1:
        raise InvalidParameter("cyclic group order must be at least 1")
    if n == 1:
        return Group(1, (), (identity_tuple(1),), name="C1")
    rot = tuple((i + 1) % n for i in range(n))
    return group_closure([Permutation(rot)], name=f"C{n}")


def dihedral(n: int) -> Group:
    """Symmetries of the regular n-gon, order 2n."""
    if n < 3:
        raise InvalidParameter("dihedral groups need at least 3 vertices")
    rot = tuple((i + 1) % n for i in range(n))
    flip = tuple((n - i) % n for i in range(n))
    return group_closure([Permutation(rot), Permutation(flip)], name=f"D{n}")


def symmetric(n: int) -> Group:
    if n < 1:
        raise InvalidParameter("symmetric group degree must be at least 1")
    if n == 1:
        return Group(1, (), (identity_tuple(1),), name="S1")
    gens = [Permutation.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return group_closure(gens, name=f"S{n}")


def alternating(n: int) -> Group:
    if n < 3:
        raise InvalidParameter("alternating groups need degree at least 3")
    gens = [Permutation.from_cycles(n, [(1, 2, 3)])]
    if n > 3:
        if n % 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
        else:
            gens.append(Permutation.from_cycles(n, [tuple(range(2, n + 1))]))
    return group_closure(gens, name=f"A{n}")


def quaternion8() -> Group:
    """The quaternion group in its regular action on 8 points."""
    i = Permutation.from_cycles(8, [(1, 2, 3, 4), (5, 8, 7, 6)])
    j = Permutation.from_cycles(8, [(1, 5, 3, 7), (2, 6, 4, 8)])
    grp = group_closure([i, j], name="Q8")
    orders = sorted(element_order(grp, t) for t in grp.tuples)
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
    return grp


def _check_odd_prime(q: int) -> None:
    if q < 3 or any(q % d == 0 for d in range(2, q)):
        raise InvalidParameter(f"{q} is not an odd prime")


def special_linear2(q: int) -> Group:
    """SL(2,q) acting on the nonzero vectors of a 2-dimensional space."""
    _check_odd_prime(q)
    points = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(points)}

    def action(mat):
        a, b, c, d = mat
        return Permutation(
            tuple(
                index[((a * x + c * y) % q, (b * x + d * y) % q)]
                for x, y in points
            )
        )

    gens = [action((1, 1, 0, 1)), action((0, -1 % q, 1, 0))]
    grp = group_closure(gens, cap=q * (q * q - 1), name=f"SL(2,{q})")
    assert grp.order == q * (q * q - 1)
    return grp


def projective_special_linear2(q: int) -> Group:
    """PSL(2,q) acting on the projective line, q + 1 points."""
    _check_odd_prime(q)
    infinity = q  # points are 0..q-1 and one extra symbol

    def frac(num, den):
        if den % q == 0:
            return infinity
        return (num * pow(den, q - 2, q)) % q

    shift = tuple((x + 1) % q for x in range(q)) + (infinity,)
    turn = tuple(frac(-1, x) for x in range(q)) + (0,)
    grp = group_closure(
        [Permutation(shift), Permutation(turn)],
        cap=q * (q * q - 1) // 2,
        name=f"PSL(2,{q})",
    )
    assert grp.order == q * (q * q - 1) // 2
    return grp


def direct_product(a: Group, b: Group, name: str | None = None) -> Group:
    """External direct product on the disjoint union of the point sets."""
    da = a.degree
    ident_b = identity_tuple(b.degree)
    ident_a = identity_tuple(a.degree)

    def glue(ta, tb):
        return ta + tuple(x + da for x in tb)

    tuples = [glue(ta, tb) for ta in a.tuples for tb in b.tuples]
    gens = [glue(g, ident_b) for g in a.generator_tuples]
    gens += [glue(ident_a, g) for g in b.generator_tuples]
    grp = Group(
        a.degree + b.degree,
        gens,
        tuples,
        name=name if name is not None else f"{a.name}x{b.name}",
    )
    emb_a = make_subgroup(
        grp,
        frozenset(glue(ta, ident_b) for ta in a.tuples),
        tuple(glue(g, ident_b) for g in a.generator_tuples),
    )
    emb_b = make_subgroup(
        grp,
        frozenset(glue(ident_a, tb) for tb in b.tuples),
        tuple(glue(ident_a, g) for g in b.generator_tuples),
    )
    grp.direct_factors = (emb_a, emb_b)
    grp.factor_groups = (a, b)
    return grp


def wreath_regular(a: Group, b: Group, name: str | None = None) -> Group:
    """Regular wreath product: one copy of ``a`` per element of ``b``."""
    nb = b.order
    da = a.degree
    degree = da * nb
    b_index = {t: i for i, t in enumerate(b.tuples)}

    gens = []
    for g in a.generator_tuples:
        # Act inside the block of b's identity only.
        block = b_index[b.identity_t]
        images = list(range(degree))
        for p in range(da):
            images[block * da + p] = block * da + g[p]
        gens.append(Permutation(tuple(images)))
    for g in b.generator_tuples:
        # Permute the blocks by right multiplication.
        images = list(range(degree))
        for t, i in b_index.items():
            j = b_index[b.mul_t(t, g)]
            for p in range(da):
                images[i * da + p] = j * da + p
        gens.append(Permutation(tuple(images)))
    label = name if name is not None else f"{a.name}wr{b.name}"
    grp = group_closure(gens, degree=degree, cap=a.order**nb * nb, name=label)
    assert grp.order == a.order**nb * nb
    return grp


_BASE_PATTERNS: tuple[tuple[re.Pattern, object], ...] = (
    (re.compile(r"C(\d+)$"), lambda m: cyclic(int(m.group(1)))),
    (re.compile(r"D(\d+)$"), lambda m: dihedral(int(m.group(1)))),
    (re.compile(r"S(\d+)$"), lambda m: symmetric(int(m.group(1)))),
    (re.compile(r"A(\d+)$"), lambda m: alternating(int(m.group(1)))),
    (re.compile(r"Q8$"), lambda m: quaternion8()),
    (
        re.compile(r"SL\(2,(\d+)\)$"),
        lambda m: special_linear2(int(m.group(1))),
    ),
    (
        re.compile(r"PSL\(2,(\d+)\)$"),
        lambda m: projective_special_linear2(int(m.group(1))),
    ),
)


def _split_product(text: str) -> list[str]:
    """Split on 'x' at parenthesis depth zero."""
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidParameter(f"unbalanced parentheses in {text!r}")
        elif ch == "x" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise InvalidParameter(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:])
    return parts


def build_group(spec: str) -> Group:
    """Materialize a group from its name."""
    text = spec.strip()
    if not text:
        raise InvalidParameter("empty group name")
    parts = _split_product(text)
    if len(parts) > 1:
        grp = _build_atom(parts[0])
        for part in parts[1:]:
            grp = direct_product(grp, _build_atom(part))
        if grp.name != text:
            grp.name = text
        return grp
    return _build_atom(parts[0])


def _build_atom(text: str) -> Group:
    text = text.strip()
    if not text:
        raise InvalidParameter("empty factor in group name")
    if text.startswith("(") and text.endswith(")"):
        return build_group(text[1:-1])
    if "wr" in text:
        left, _, right = text.partition("wr")
        return wreath_regular(_build_atom(left), _build_atom(right))
    for pattern, make in _BASE_PATTERNS:
        m = pattern.match(text)
        if m:
            return make(m)
    raise InvalidParameter(f"unknown group name {text!r}")


@dataclass(frozen=True)
class CorpusSpec:
    """A corpus entry: group name plus its known order."""

    name: str
    order: int

    def build(self) -> Group:
        return build_group(self.name)


_BASE_NAMES: tuple[tuple[str, int], ...] = tuple(
    [(f"C{n}", n) for n in range(2, 13)]
    + [(f"D{n}", 2 * n) for n in range(4, 13)]
    + [(f"S{n}", [6, 24, 120, 720][n - 3]) for n in range(3, 7)]
    + [(f"A{n}", [12, 60, 360][n - 4]) for n in range(4, 7)]
    + [("Q8", 8), ("SL(2,3)", 24), ("SL(2,5)", 120), ("PSL(2,7)", 168)]
)

_WREATH_NAMES: tuple[tuple[str, int], ...] = (
    ("C2wrC2", 8),
    ("C2wrC3", 24),
    ("C3wrC2", 18),
)


def default_corpus(order_cap: int = DEFAULT_ORDER_CAP) -> tuple[CorpusSpec, ...]:
    """Base families, their pairwise direct products, and a few wreaths."""
    specs = [CorpusSpec(n, o) for n, o in _BASE_NAMES if o <= order_cap]
    for i, (na, oa) in enumerate(_BASE_NAMES):
        for nb, ob in _BASE_NAMES[i:]:
            if oa * ob <= order_cap:
                specs.append(CorpusSpec(f"{na}x{nb}", oa * ob))
    specs += [CorpusSpec(n, o) for n, o in _WREATH_NAMES if o <= order_cap]
    specs.sort(key=lambda s: (s.order, s.name))
    return tuple(specs)
