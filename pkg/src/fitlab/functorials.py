"""Functorials and their calculus: star products, series, heights.

A functorial assigns to each operand a characteristic subgroup.  Two
functorials compose through the star product, which applies the left
one, passes to the quotient by its value, applies the right one there,
and pulls the result back.  Iterating a single functorial upward from
the trivial subgroup yields its series; the number of steps needed to
exhaust the operand is the height, the central invariant here.

Values are cached on the operand under the functorial's name, so
repeated height and property computations share work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import InvalidParameter, LatticeCapExceeded, StepBudgetExceeded
from .group import (
    Subgroup,
    center,
    full_subgroup,
    make_subgroup,
    trivial_subgroup,
)
from .lattice import DEFAULT_LATTICE_CAP, frattini
from .quotients import quotient
from .structure import (
    check_prime,
    class_predicate,
    fitting_height,
    fitting_subgroup,
    fstar_subgroup,
    is_p_soluble,
    is_soluble,
    largest_normal_p_subgroup,
    normal_subgroups,
    p_soluble_radical,
    socle_subgroup,
    soluble_radical,
)

__all__ = [
    "UNBOUNDED",
    "PROPERTY_NAMES",
    "BUILTIN_ATOMS",
    "Functorial",
    "builtin_functorial",
    "star",
    "p_height_functorial",
    "GammaSeries",
    "gamma_series",
    "height_of",
    "hstar_height",
    "htilde_height",
    "lambda_height",
    "HeightReport",
    "named_heights",
    "residual",
    "class_residual",
    "PropertyVerdict",
    "check_property",
]

UNBOUNDED = float("inf")

PROPERTY_NAMES = ("F1", "F2", "F3")

DEFAULT_STEP_BUDGET = 64


@dataclass(frozen=True)
class Functorial:
    """A named map from operands to characteristic subgroups.

    ``flags`` declares which hereditary properties the map is claimed
    to satisfy: "F1" (images under epimorphisms stay inside the value),
    "F2" (values of normal subgroups stay inside the value), "F3" (the
    value meets every normal subgroup inside that subgroup's value).
    ``guarantees_progress`` promises a nontrivial value on every
    nontrivial operand, which forces series heights to be finite.  Both
    are declarations; the property checker and the series runner test
    them rather than trust them.
    """

    name: str
    flags: frozenset
    guarantees_progress: bool
    evaluator: Callable = field(repr=False, compare=False)

    def __call__(self, operand) -> Subgroup:
        cache = operand._cache.setdefault("functorial_values", {})
        got = cache.get(self.name)
        if got is None:
            got = self.evaluator(operand)
            cache[self.name] = got
        return got

    def __mul__(self, other: "Functorial") -> "Functorial":
        return star(self, other)

    def __repr__(self) -> str:
        return f"Functorial({self.name})"


def star(bottom: Functorial, top: Functorial) -> Functorial:
    """Composite functorial; the left operand is applied first.

    The value on G is the preimage of ``top``'s value on the quotient
    of G by ``bottom``'s value.  Flags carry over only as licensed:
    F1 and F2 when both parts have them, F3 additionally when both
    parts have it too.  Progress of either part forces progress of the
    composite, since the value contains the bottom value and maps onto
    the top one.
    """
    flags: set[str] = set()
    if {"F1", "F2"} <= bottom.flags and {"F1", "F2"} <= top.flags:
        flags.update(("F1", "F2"))
        if "F3" in bottom.flags and "F3" in top.flags:
            flags.add("F3")

    def evaluate(operand, _bottom=bottom, _top=top):
        base = _bottom(operand)
        if base.order == operand.order:
            return base
        if base.order == 1:
            return _top(operand)
        q = quotient(operand, base)
        return q.preimage(_top(q))

    return Functorial(
        name=f"{bottom.name}*{top.name}",
        flags=frozenset(flags),
        guarantees_progress=bottom.guarantees_progress or top.guarantees_progress,
        evaluator=evaluate,
    )


_F123 = frozenset(("F1", "F2", "F3"))

# name -> (flags, guarantees_progress, evaluator)
_PLAIN_ATOMS = {
    "Z": (frozenset(("F1", "F3")), False, center),
    "Fit": (_F123, False, fitting_subgroup),
    "Soc": (frozenset(), True, socle_subgroup),
    "Rsol": (_F123, False, soluble_radical),
    "Fstar": (_F123, True, fstar_subgroup),
}

BUILTIN_ATOMS = ("Z", "Fit", "Soc", "Phi", "Fstar", "Rsol", "Rp", "Op")


def builtin_functorial(
    name: str,
    p: int | None = None,
    lattice_cap: int | None = DEFAULT_LATTICE_CAP,
) -> Functorial:
    """Look up a named atom.

    ``Rp`` (largest normal p-soluble subgroup) and ``Op`` (the p-core)
    need a prime and render as ``Rp[p]`` / ``Op[p]``.  ``Phi`` needs a
    subgroup lattice and raises :class:`LatticeCapExceeded` on operands
    over ``lattice_cap``.  The remaining atoms are Z (centre), Fit
    (product of the p-cores), Soc (join of the minimal normal
    subgroups), Rsol (soluble radical) and Fstar (intersection of the
    innerisers over a chief series).
    """
    plain = _PLAIN_ATOMS.get(name)
    if plain is not None:
        if p is not None:
            raise InvalidParameter(f"{name} takes no prime")
        flags, progress, evaluator = plain
        return Functorial(name, flags, progress, evaluator)
    if name == "Phi":
        if p is not None:
            raise InvalidParameter("Phi takes no prime")

        def evaluate(operand, _cap=lattice_cap):
            return frattini(operand, _cap)

        return Functorial("Phi", frozenset(("F1", "F2")), False, evaluate)
    if name in ("Rp", "Op"):
        if p is None:
            raise InvalidParameter(f"{name} needs a prime, as in {name}[2]")
        check_prime(p)
        if name == "Rp":

            def evaluate(operand, _p=p):
                return p_soluble_radical(operand, _p)

        else:

            def evaluate(operand, _p=p):
                return largest_normal_p_subgroup(operand, _p)

        return Functorial(f"{name}[{p}]", _F123, False, evaluate)
    raise InvalidParameter(f"unknown functorial {name!r}")


def p_height_functorial(p: int) -> Functorial:
    """The composite whose height is lambda_p on non-p-soluble operands.

    It wraps the quasinilpotent lift between two passes of the
    p-soluble radical, so each series step absorbs a maximal p-soluble
    stretch, one semisimple layer, and another p-soluble stretch.
    """
    rp = builtin_functorial("Rp", p)
    return star(star(rp, builtin_functorial("Fstar")), rp)


@dataclass(frozen=True)
class GammaSeries:
    """One functorial series: ascending terms and the resulting height."""

    functorial: Functorial
    terms: tuple[Subgroup, ...]
    height: int | float

    @property
    def stalled(self) -> bool:
        return self.height == UNBOUNDED

    @property
    def term_orders(self) -> tuple[int, ...]:
        return tuple(t.order for t in self.terms)


def gamma_series(
    gamma: Functorial, operand, max_steps: int = DEFAULT_STEP_BUDGET
) -> GammaSeries:
    """Iterate ``gamma`` upward from the trivial subgroup.

    Each step pulls the functorial's value on the quotient by the
    current term back to the carrier.  The series ends at the whole
    operand (height = number of steps) or at the first stall strictly
    below it (height UNBOUNDED).  A functorial that promises progress
    must not stall; that promise is asserted here, so every run over
    the corpus doubles as evidence for it.
    """
    cache = operand._cache.setdefault("gamma_series", {})
    got = cache.get(gamma.name)
    if got is not None:
        return got
    whole = operand.order
    term = trivial_subgroup(operand)
    terms = [term]
    while term.order < whole:
        if len(terms) > max_steps:
            raise StepBudgetExceeded(
                f"{gamma.name}-series on {operand.name} passed {max_steps} steps"
            )
        if term.order == 1:
            nxt = gamma(operand)
        else:
            q = quotient(operand, term)
            nxt = q.preimage(gamma(q))
        if nxt.order == term.order:
            assert not gamma.guarantees_progress, (
                f"{gamma.name} stalled on {operand.name} despite its progress flag"
            )
            series = GammaSeries(gamma, tuple(terms), UNBOUNDED)
            cache[gamma.name] = series
            return series
        terms.append(nxt)
        term = nxt
    series = GammaSeries(gamma, tuple(terms), len(terms) - 1)
    cache[gamma.name] = series
    return series


def height_of(gamma: Functorial, operand, max_steps: int = DEFAULT_STEP_BUDGET):
    return gamma_series(gamma, operand, max_steps).height


def hstar_height(operand) -> int:
    """The quasinilpotent-series height h*.

    On soluble operands h* equals the Fitting height, which the
    quotient-free residual tower computes far faster than the series;
    the two routes are checked against each other by the tests.
    """
    if is_soluble(operand):
        return fitting_height(operand)
    return gamma_series(builtin_functorial("Fstar"), operand).height


def htilde_height(
    operand, lattice_cap: int | None = DEFAULT_LATTICE_CAP
) -> int:
    """The height of Phi*Fstar, which also equals the Fitting height on
    soluble operands.  Nonsoluble operands over the lattice cap raise
    :class:`LatticeCapExceeded`."""
    if is_soluble(operand):
        return fitting_height(operand)
    gamma = star(
        builtin_functorial("Phi", lattice_cap=lattice_cap),
        builtin_functorial("Fstar"),
    )
    return gamma_series(gamma, operand).height


def lambda_height(operand, p: int) -> int:
    """The non-p-soluble length: zero for p-soluble operands, else the
    height of the radical-wrapped quasinilpotent composite."""
    if is_p_soluble(operand, p):
        return 0
    return gamma_series(p_height_functorial(p), operand).height


@dataclass(frozen=True)
class HeightReport:
    """The named heights of one operand.

    ``h`` is the Fitting-series height (UNBOUNDED unless soluble),
    ``hstar`` the quasinilpotent-series height (always finite),
    ``htilde`` the height of Phi*Fstar (None when a Frattini value
    would need a lattice over the cap), and ``lambdas`` one pair per
    requested prime, zero for p-soluble operands.
    """

    h: int | float
    hstar: int
    htilde: int | None
    lambdas: tuple[tuple[int, int], ...]

    def lambda_for(self, p: int) -> int:
        for q, value in self.lambdas:
            if q == p:
                return value
        raise InvalidParameter(f"no lambda computed for p={p}")


def named_heights(
    operand,
    primes: tuple[int, ...] = (2, 3, 5, 7),
    lattice_cap: int | None = DEFAULT_LATTICE_CAP,
) -> HeightReport:
    h = fitting_height(operand) if is_soluble(operand) else UNBOUNDED
    hstar = hstar_height(operand)
    try:
        htilde = htilde_height(operand, lattice_cap)
    except LatticeCapExceeded:
        htilde = None
    lams = []
    for p in primes:
        check_prime(p)
        lams.append((p, lambda_height(operand, p)))
    return HeightReport(h, hstar, htilde, tuple(lams))


def residual(operand, member: Callable, label: str) -> Subgroup:
    """Smallest normal subgroup whose quotient satisfies ``member``.

    Computed as the intersection of every proper normal subgroup whose
    quotient is in the class, so it is sound exactly when the class is
    a formation containing the trivial group; the intersection is
    checked to be a witness itself whenever it is proper.  Results are
    cached under ``label``.
    """
    cache = operand._cache.setdefault("residuals", {})
    got = cache.get(label)
    if got is not None:
        return got
    acc = frozenset(operand.tuple_set)
    for n in normal_subgroups(operand):
        if n.order == operand.order or acc <= n.tuple_set:
            continue
        if member(quotient(operand, n)):
            acc = acc & n.tuple_set
    if len(acc) == operand.order:
        got = full_subgroup(operand)
    else:
        got = make_subgroup(operand, acc)
        assert member(quotient(operand, got)), (
            f"witness kernels for {label} do not intersect to a witness"
        )
    cache[label] = got
    return got


def class_residual(operand, kind: str, p: int | None = None) -> Subgroup:
    """Residual for one of the named classes in ``class_predicate``."""
    if kind == "p-soluble" and p is None:
        raise InvalidParameter("p-soluble residual needs a prime")
    label = kind if p is None else f"{kind}[{p}]"
    return residual(operand, lambda q: class_predicate(kind, q, p), label)


@dataclass(frozen=True)
class PropertyVerdict:
    prop: str
    functorial: str
    group: str
    holds: bool
    witness: Subgroup | None = None


def check_property(prop: str, gamma: Functorial, operand) -> PropertyVerdict:
    """Test one hereditary property of ``gamma`` on one operand.

    F1 quantifies over the natural maps onto G/N for every normal N;
    every epimorphic image is isomorphic to such a quotient, and a
    functorial respects isomorphisms by definition.  F2 and F3 range
    over normal subgroups directly.  The endpoints N = 1 and N = G
    hold by inspection and are skipped; the witness is the first
    failing subgroup in order-then-elements order.
    """
    if prop not in PROPERTY_NAMES:
        raise InvalidParameter(f"unknown property {prop!r}")
    value = gamma(operand)
    for n in normal_subgroups(operand):
        if n.order == 1 or n.order == operand.order:
            continue
        if prop == "F1":
            q = quotient(operand, n)
            ok = q.project(value).tuple_set <= gamma(q).tuple_set
        elif prop == "F2":
            ok = gamma(n).tuple_set <= value.tuple_set
        else:
            ok = (value.tuple_set & n.tuple_set) <= gamma(n).tuple_set
        if not ok:
            return PropertyVerdict(prop, gamma.name, operand.name, False, n)
    return PropertyVerdict(prop, gamma.name, operand.name, True, None)
