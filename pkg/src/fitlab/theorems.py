"""Verification suites for the height and factorization statements.

Every suite checks one statement of the calculus over corpus groups and
returns one verdict per tested instance; instances a suite cannot
afford (order over the relevant cap) yield explicit skipped verdicts
instead of being dropped.  Suites only read from their group, so
verification parallelizes per group, and the final verdict list is
globally sorted, which makes reports independent of scheduling.

Suite ids are short stable tokens used by the CLI and the report; each
checker's docstring states the property it verifies.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .builders import CorpusSpec, default_corpus
from .errors import InvalidParameter
from .functorials import (
    UNBOUNDED,
    builtin_functorial,
    gamma_series,
    hstar_height,
    htilde_height,
    lambda_height,
    p_height_functorial,
    residual,
    star,
)
from .group import (
    DEFAULT_ORDER_CAP,
    Subgroup,
    derived_subgroup,
    make_subgroup,
    set_product_tuples,
    subgroup_core,
    trivial_subgroup,
)
from .lattice import DEFAULT_LATTICE_CAP, find_factorizations
from .perm import Permutation
from .quotients import quotient
from .structure import (
    chief_series,
    fstar_subgroup,
    inneriser,
    is_p_soluble,
    is_quasinilpotent,
    is_semisimple,
    is_soluble,
    is_subnormal,
    minimal_normal_subgroups,
    normal_subgroups,
)

__all__ = [
    "TheoremVerdict",
    "VerifyOptions",
    "THEOREM_IDS",
    "MUTATION_NAMES",
    "verify_theorem",
    "run_verify",
]

MUTATION_NAMES = ("tight-bound", "corrupt-inneriser")

DEFAULT_RECORD_SAMPLE = 200
DEFAULT_ORACLE_CAP = 400


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one checked instance; detail pairs are preformatted."""

    theorem: str
    group: str
    status: str  # "pass" | "fail" | "skipped"
    detail: tuple[tuple[str, str], ...] = ()

    @property
    def detail_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.detail)

    @property
    def sort_key(self) -> tuple[str, str, str, str]:
        return (self.theorem, self.group, self.detail_text, self.status)


@dataclass(frozen=True)
class VerifyOptions:
    """Shared knobs for every suite.

    ``record_sample`` bounds how many factorization records the
    auxiliary record suites consume per group; the two height suites
    for mutual products stay exhaustive.  ``oracle_cap`` bounds the
    brute-force series-length oracle.
    """

    primes: tuple[int, ...] = (2, 3, 5, 7)
    lattice_cap: int = DEFAULT_LATTICE_CAP
    order_cap: int = DEFAULT_ORDER_CAP
    record_sample: int = DEFAULT_RECORD_SAMPLE
    oracle_cap: int = DEFAULT_ORACLE_CAP
    mutations: frozenset = frozenset()


def _fmt(value) -> str:
    if value == UNBOUNDED:
        return "inf"
    return str(value)


def _key(sub: Subgroup) -> str:
    """Compact generator key identifying a subgroup inside its carrier."""
    gens = sub.generator_tuples
    if not gens:
        return "()"
    return "&".join(
        Permutation(g).cycle_string().replace(" ", ",") for g in gens
    )


def _verdict(tid: str, grp, ok: bool, *pairs) -> TheoremVerdict:
    return TheoremVerdict(tid, grp.name, "pass" if ok else "fail", tuple(pairs))


def _skip(tid: str, grp, cap: int) -> TheoremVerdict:
    detail = (("reason", "lattice-cap"), ("cap", str(cap)), ("order", str(grp.order)))
    return TheoremVerdict(tid, grp.name, "skipped", detail)


def _mutual_records(grp, opts: VerifyOptions):
    return find_factorizations(grp, mode="mutually", cap=opts.lattice_cap)


def _fbar_height(operand, p: int):
    """Series height of the radical-wrapped quasinilpotent composite.

    One step suffices exactly on nontrivial p-soluble operands, so only
    the rest pay for the series.
    """
    if operand.order == 1:
        return 0
    if is_p_soluble(operand, p):
        return 1
    return gamma_series(p_height_functorial(p), operand).height


# -- factorization height suites -------------------------------------


def _check_height_bound(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Mutually permutable factors: max{h*(A), h*(B)} <= h*(G) <= max + 1."""
    tid = "thm1.2.1"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    slack = 0 if "tight-bound" in opts.mutations else 1
    hg = hstar_height(grp)
    out = []
    for rec in _mutual_records(grp, opts):
        m = max(hstar_height(rec.a), hstar_height(rec.b))
        ok = m <= hg <= m + slack
        out.append(
            _verdict(
                tid, grp, ok,
                ("a", _key(rec.a)), ("b", _key(rec.b)),
                ("max", _fmt(m)), ("hstar", _fmt(hg)),
            )
        )
    return out


def _check_lambda_equality(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Mutually permutable factors: max{lambda_p(A), lambda_p(B)} = lambda_p(G)."""
    tid = "thm1.2.2"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    lam_g = [lambda_height(grp, p) for p in opts.primes]
    out = []
    for rec in _mutual_records(grp, opts):
        lam_max = [
            max(lambda_height(rec.a, p), lambda_height(rec.b, p))
            for p in opts.primes
        ]
        ok = lam_max == lam_g
        out.append(
            _verdict(
                tid, grp, ok,
                ("a", _key(rec.a)), ("b", _key(rec.b)),
                ("primes", ",".join(map(str, opts.primes))),
                ("factors", ",".join(map(_fmt, lam_max))),
                ("whole", ",".join(map(_fmt, lam_g))),
            )
        )
    return out


def _check_soluble_height_bound(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Soluble mutual products: the Fitting height obeys the same bound."""
    tid = "cor1.3"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    if not is_soluble(grp):
        return []
    hg = hstar_height(grp)  # Fitting height on soluble operands
    out = []
    for rec in _mutual_records(grp, opts)[: opts.record_sample]:
        m = max(hstar_height(rec.a), hstar_height(rec.b))
        ok = m <= hg <= m + 1
        out.append(
            _verdict(
                tid, grp, ok,
                ("a", _key(rec.a)), ("b", _key(rec.b)),
                ("max", _fmt(m)), ("h", _fmt(hg)),
            )
        )
    return out


# -- functorial identity suites --------------------------------------


def _check_product_identity(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """On direct products the value splits: gamma(G1 x G2) = gamma(G1) x gamma(G2)."""
    tid = "lem2.2"
    if grp.direct_factors is None:
        return []
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    a, b = grp.direct_factors
    gammas = (
        builtin_functorial("Fit"),
        builtin_functorial("Fstar"),
        builtin_functorial("Rp", 2),
        builtin_functorial("Soc"),
    )
    out = []
    for gamma in gammas:
        lhs = gamma(grp)
        rhs = set_product_tuples(grp, gamma(a).tuple_set, gamma(b).tuple_set)
        ok = lhs.tuple_set == frozenset(rhs)
        out.append(
            _verdict(
                tid, grp, ok,
                ("gamma", gamma.name),
                ("value", str(lhs.order)), ("split", str(len(rhs))),
            )
        )
    return out


def _check_height_inequalities(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """For every normal N: h(G/N) <= h(G) <= h(N) + h(G/N), and h(N) <= h(G)."""
    tid = "lem2.5"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    fb2 = p_height_functorial(2)
    gammas = (
        ("Fstar", hstar_height),
        (fb2.name, lambda op: _fbar_height(op, 2)),
    )
    normals = [n for n in normal_subgroups(grp) if 1 < n.order < grp.order]
    out = []
    for label, height in gammas:
        hg = height(grp)
        witness = None
        for n in normals:
            hn = height(n)
            hq = height(quotient(grp, n))
            if not (hq <= hg <= hn + hq and hn <= hg):
                witness = (n, hn, hq)
                break
        pairs = [("gamma", label), ("h", _fmt(hg)), ("normals", str(len(normals)))]
        if witness is not None:
            n, hn, hq = witness
            pairs += [("n", _key(n)), ("hn", _fmt(hn)), ("hq", _fmt(hq))]
        out.append(_verdict(tid, grp, witness is None, *pairs))
    return out


def _lambda2_bruteforce(grp) -> int:
    """Shortest-series oracle: fewest semisimple layers over normal
    series whose other factors are 2-soluble, by dynamic programming
    over the normal subgroup lattice."""
    normals = normal_subgroups(grp)
    best: list[float] = [UNBOUNDED] * len(normals)
    best[0] = 0
    for j in range(1, len(normals)):
        nj = normals[j]
        for i in range(j):
            if best[i] == UNBOUNDED:
                continue
            ni = normals[i]
            if not ni.tuple_set < nj.tuple_set:
                continue
            section = quotient(nj, ni) if ni.order > 1 else nj
            if is_p_soluble(section, 2):
                cost = 0
            elif is_semisimple(section):
                cost = 1
            else:
                continue
            if best[i] + cost < best[j]:
                best[j] = best[i] + cost
    assert best[-1] != UNBOUNDED
    return int(best[-1])


def _check_lambda_oracle(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """lambda_2 from the series equals the brute-force shortest series."""
    tid = "lem2.6"
    if is_soluble(grp):
        return []
    if grp.order > opts.oracle_cap:
        return [_skip(tid, grp, opts.oracle_cap)]
    lam = lambda_height(grp, 2)
    oracle = _lambda2_bruteforce(grp)
    return [
        _verdict(
            tid, grp, lam == oracle,
            ("series", _fmt(lam)), ("oracle", _fmt(oracle)),
        )
    ]


def _join_instances(grp, opts: VerifyOptions, limit: int = 8):
    """Families whose join is the whole group: the two direct factors
    when the group is a built product, and up to ``limit`` pairs of
    normal subgroups whose product set is everything."""
    out = []
    if grp.direct_factors is not None:
        a, b = grp.direct_factors
        out.append(("product", a, b))
    if grp.order <= opts.lattice_cap:
        normals = [n for n in normal_subgroups(grp) if 1 < n.order < grp.order]
        whole = grp.order
        found = 0
        for i in range(len(normals) - 1, -1, -1):
            if found >= limit:
                break
            ni = normals[i]
            for j in range(i, -1, -1):
                nj = normals[j]
                if ni.order * nj.order < whole:
                    break  # ascending order list: later j only shrink
                inter = len(ni.tuple_set & nj.tuple_set)
                if ni.order * nj.order == whole * inter:
                    out.append(("join", ni, nj))
                    found += 1
                    if found >= limit:
                        break
    return out


def _check_join_heights(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Joins of subnormal subgroups: the height is the max over the parts."""
    tid = "thm2.8"
    instances = _join_instances(grp, opts)
    if not instances:
        if grp.order > opts.lattice_cap:
            return [_skip(tid, grp, opts.lattice_cap)]
        return []
    fb2 = p_height_functorial(2)
    gammas = (
        ("Fstar", hstar_height),
        (fb2.name, lambda op: _fbar_height(op, 2)),
    )
    out = []
    for kind, x, y in instances:
        for label, height in gammas:
            hg = height(grp)
            hmax = max(height(x), height(y))
            out.append(
                _verdict(
                    tid, grp, hg == hmax,
                    ("kind", kind), ("gamma", label),
                    ("parts", f"{x.order},{y.order}"),
                    ("hmax", _fmt(hmax)), ("h", _fmt(hg)),
                )
            )
    return out


def _check_residual_drop(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """The class residual loses exactly one height step: h(G^F) = h(G) - 1."""
    tid = "lem3.3"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    fstar = builtin_functorial("Fstar")
    fstar2 = star(fstar, fstar)

    def h_one(op):
        return hstar_height(op)

    def h_two(op):
        return gamma_series(fstar2, op).height

    def h_r2(op):
        return 0 if op.order == 1 else 1  # inside the 2-soluble class

    families = [
        ("quasinilpotent", is_quasinilpotent, h_one),
        ("quasinilpotent-2", lambda q: hstar_height(q) <= 2, h_two),
    ]
    if is_p_soluble(grp, 2):
        families.append(("2-soluble", lambda q: is_p_soluble(q, 2), h_r2))
    out = []
    for label, member, height in families:
        res = residual(grp, member, label)
        hg = height(grp)
        hr = height(res)
        out.append(
            _verdict(
                tid, grp, hr == hg - 1,
                ("family", label), ("h", _fmt(hg)),
                ("residual", str(res.order)), ("hres", _fmt(hr)),
            )
        )
    return out


def _check_mutual_structure(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Structure facts for mutually permutable factors: minimal normals
    meet each factor trivially or fully, the two cores cannot both be
    trivial, and both derived subgroups are subnormal."""
    tid = "lem3.6"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    records = _mutual_records(grp, opts)[: opts.record_sample]
    if not records:
        return []
    mins = minimal_normal_subgroups(grp)
    cores: dict[Subgroup, Subgroup] = {}
    subnormal: dict[Subgroup, bool] = {}

    def core_of(sub):
        got = cores.get(sub)
        if got is None:
            got = subgroup_core(grp, sub)
            cores[sub] = got
        return got

    def derived_is_subnormal(sub):
        der = derived_subgroup(sub)
        got = subnormal.get(der)
        if got is None:
            got = is_subnormal(der, grp)
            subnormal[der] = got
        return got

    out = []
    for rec in records:
        a, b = rec.a, rec.b
        meets = all(
            len(n.tuple_set & s.tuple_set) in (1, n.order)
            for n in mins
            for s in (a, b)
        )
        ca, cb = core_of(a), core_of(b)
        cores_ok = ca.order > 1 or cb.order > 1
        derived_ok = derived_is_subnormal(a) and derived_is_subnormal(b)
        out.append(
            _verdict(
                tid, grp, meets and cores_ok and derived_ok,
                ("a", _key(a)), ("b", _key(b)),
                ("meets", "yes" if meets else "no"),
                ("cores", f"{ca.order},{cb.order}"),
                ("derived_subnormal", "yes" if derived_ok else "no"),
            )
        )
    return out


def _check_section_terms(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Series terms pass through a minimal normal subgroup N once the
    quotient by its inneriser has small enough height: the k-th
    quasinilpotent term of G/N is the image of the k-th term of G."""
    tid = "lem4.2"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    fstar = builtin_functorial("Fstar")
    series_g = gamma_series(fstar, grp)
    out = []
    for n in minimal_normal_subgroups(grp):
        if n.order == grp.order:
            continue
        cstar = inneriser(grp, n, trivial_subgroup(grp))
        if cstar.order == grp.order:
            k = 1
        else:
            k = hstar_height(quotient(grp, cstar)) + 1
        qn = quotient(grp, n)
        series_q = gamma_series(fstar, qn)
        lhs = series_q.terms[min(k, len(series_q.terms) - 1)]
        rhs = qn.project(series_g.terms[min(k, len(series_g.terms) - 1)])
        out.append(
            _verdict(
                tid, grp, lhs.tuple_set == rhs.tuple_set,
                ("n", _key(n)), ("k", str(k)),
                ("term", str(lhs.order)), ("image", str(rhs.order)),
            )
        )
    return out


def _check_quasinilpotent_product(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Mutually permutable quasinilpotent factors force h*(G) <= 2."""
    tid = "lem4.3"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    records = _mutual_records(grp, opts)[: opts.record_sample]
    out = []
    hg = None
    for rec in records:
        if not (is_quasinilpotent(rec.a) and is_quasinilpotent(rec.b)):
            continue
        if hg is None:
            hg = hstar_height(grp)
        out.append(
            _verdict(
                tid, grp, hg <= 2,
                ("a", _key(rec.a)), ("b", _key(rec.b)), ("hstar", _fmt(hg)),
            )
        )
    return out


def _check_tower_class_closure(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Mutually permutable products of groups whose radical-wrapped
    tower finishes in one step stay in that class, prime by prime."""
    tid = "lem5.1"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    records = _mutual_records(grp, opts)[: opts.record_sample]
    if not records:
        return []
    member_g = {p: lambda_height(grp, p) <= 1 for p in opts.primes}
    out = []
    for rec in records:
        qualifying = [
            p
            for p in opts.primes
            if lambda_height(rec.a, p) <= 1 and lambda_height(rec.b, p) <= 1
        ]
        if not qualifying:
            continue
        ok = all(member_g[p] for p in qualifying)
        out.append(
            _verdict(
                tid, grp, ok,
                ("a", _key(rec.a)), ("b", _key(rec.b)),
                ("primes", ",".join(map(str, qualifying))),
                ("whole_in", ",".join("1" if member_g[p] else "0" for p in qualifying)),
            )
        )
    return out


# -- non-Frattini height suites --------------------------------------


def _check_height_sandwich(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """The non-Frattini height pins the quasinilpotent one: h~ <= h* <= 2h~."""
    tid = "thm6.3"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    ht = htilde_height(grp, opts.lattice_cap)
    hs = hstar_height(grp)
    return [
        _verdict(
            tid, grp, ht <= hs <= 2 * ht,
            ("htilde", _fmt(ht)), ("hstar", _fmt(hs)), ("twice", _fmt(2 * ht)),
        )
    ]


def _check_join_nonfrattini(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Joins of subnormal subgroups never push the non-Frattini height
    above the max over the parts."""
    tid = "prop6.4"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    instances = _join_instances(grp, opts)
    if not instances:
        return []
    hg = htilde_height(grp, opts.lattice_cap)
    out = []
    for kind, x, y in instances:
        hmax = max(
            htilde_height(x, opts.lattice_cap),
            htilde_height(y, opts.lattice_cap),
        )
        out.append(
            _verdict(
                tid, grp, hg <= hmax,
                ("kind", kind), ("parts", f"{x.order},{y.order}"),
                ("hmax", _fmt(hmax)), ("htilde", _fmt(hg)),
            )
        )
    return out


def _check_total_product_nonfrattini(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Totally permutable factors: max{h~(A), h~(B)} - 1 <= h~(G) <= max + 1."""
    tid = "thm6.6"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    records = find_factorizations(grp, mode="totally", cap=opts.lattice_cap)
    records = records[: opts.record_sample]
    if not records:
        return []
    hg = htilde_height(grp, opts.lattice_cap)
    out = []
    for rec in records:
        hmax = max(
            htilde_height(rec.a, opts.lattice_cap),
            htilde_height(rec.b, opts.lattice_cap),
        )
        out.append(
            _verdict(
                tid, grp, hmax - 1 <= hg <= hmax + 1,
                ("a", _key(rec.a)), ("b", _key(rec.b)),
                ("hmax", _fmt(hmax)), ("htilde", _fmt(hg)),
            )
        )
    return out


def _check_normal_nonfrattini_gap(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Search for normal subgroups whose non-Frattini height exceeds the
    group's own; findings are reported, never failed."""
    tid = "ex6.5"
    if grp.order > opts.lattice_cap:
        return [_skip(tid, grp, opts.lattice_cap)]
    hg = htilde_height(grp, opts.lattice_cap)
    findings = []
    for n in normal_subgroups(grp):
        if not 1 < n.order < grp.order:
            continue
        hn = htilde_height(n, opts.lattice_cap)
        if hn > hg:
            findings.append((n, hn))
    pairs = [("htilde", _fmt(hg)), ("found", str(len(findings)))]
    if findings:
        first, hn = findings[0]
        pairs += [("n", _key(first)), ("hn", _fmt(hn))]
    return [TheoremVerdict(tid, grp.name, "pass", tuple(pairs))]


# -- oracle and property suites --------------------------------------


def _inneriser_walk(grp, corrupt: bool) -> Subgroup:
    """Intersection of the innerisers over a chief series; the corrupt
    variant collapses every factor's floor to the trivial subgroup,
    which yields a provably wrong value on some groups."""
    acc = set(grp.tuples)
    floor = trivial_subgroup(grp)
    for factor in chief_series(grp).factors:
        below = floor if corrupt else factor.below
        acc &= inneriser(grp, factor.above, below).tuple_set
    return make_subgroup(grp, frozenset(acc))


def _quasinilpotent_scan(grp) -> Subgroup:
    """Largest quasinilpotent normal subgroup by direct scan.

    Proper candidates are judged by their own internal structure, in
    descending order; the first quasinilpotent one is the answer.  The
    whole group cannot be judged that way without consulting the value
    under test, so it is checked against a walk over the alternate
    chief series instead.
    """
    alt = set(grp.tuples)
    for factor in chief_series(grp, prefer="largest").factors:
        alt &= inneriser(grp, factor.above, factor.below).tuple_set
    if len(alt) == grp.order:
        return make_subgroup(grp, frozenset(alt))
    for n in reversed(normal_subgroups(grp)):
        if n.order == grp.order:
            continue
        if is_quasinilpotent(n):
            return n
    return trivial_subgroup(grp)


def _check_fstar_oracle(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """The inneriser walk, the cached value, and a normal-subgroup scan
    must all give the same generalized Fitting subgroup."""
    tid = "fstar-oracle"
    walk = _inneriser_walk(grp, corrupt="corrupt-inneriser" in opts.mutations)
    scan = _quasinilpotent_scan(grp)
    value = fstar_subgroup(grp)
    ok = walk.tuple_set == scan.tuple_set == value.tuple_set
    return [
        _verdict(
            tid, grp, ok,
            ("walk", str(walk.order)), ("scan", str(scan.order)),
            ("value", str(value.order)),
        )
    ]


def _sampled_property(prop: str, gamma, grp, opts: VerifyOptions):
    """One hereditary property over a normal-subgroup sample.

    Groups at or under the lattice cap check up to 16 normals, larger
    ones 5; the sample takes the largest normals for the epimorphism
    property (small quotients) and the smallest for the other two
    (small operands).  Returns (holds, witness, sample size).
    """
    normals = [n for n in normal_subgroups(grp) if 1 < n.order < grp.order]
    k = 16 if grp.order <= opts.lattice_cap else 5
    if len(normals) > k:
        normals = normals[-k:] if prop == "F1" else normals[:k]
    value = gamma(grp)
    for n in normals:
        if prop == "F1":
            q = quotient(grp, n)
            ok = q.project(value).tuple_set <= gamma(q).tuple_set
        elif prop == "F2":
            ok = gamma(n).tuple_set <= value.tuple_set
        else:
            ok = (value.tuple_set & n.tuple_set) <= gamma(n).tuple_set
        if not ok:
            return False, n, len(normals)
    return True, None, len(normals)


def _check_declared_properties(grp, opts: VerifyOptions) -> list[TheoremVerdict]:
    """Every declared flag of Fstar, Rp[2] and Phi holds empirically."""
    tid = "props"
    gammas = (
        builtin_functorial("Fstar"),
        builtin_functorial("Rp", 2),
        builtin_functorial("Phi", lattice_cap=opts.lattice_cap),
    )
    out = []
    for gamma in gammas:
        for prop in ("F1", "F2", "F3"):
            if prop not in gamma.flags:
                continue
            if gamma.name == "Phi" and grp.order > opts.lattice_cap:
                out.append(
                    TheoremVerdict(
                        tid, grp.name, "skipped",
                        (
                            ("gamma", "Phi"), ("prop", prop),
                            ("reason", "lattice-cap"),
                            ("cap", str(opts.lattice_cap)),
                        ),
                    )
                )
                continue
            ok, witness, checked = _sampled_property(prop, gamma, grp, opts)
            pairs = [("gamma", gamma.name), ("prop", prop), ("checked", str(checked))]
            if witness is not None:
                pairs.append(("witness", _key(witness)))
            out.append(_verdict(tid, grp, ok, *pairs))
    return out


# -- registry and runner ----------------------------------------------

_CHECKS: dict[str, Callable] = {
    "thm1.2.1": _check_height_bound,
    "thm1.2.2": _check_lambda_equality,
    "cor1.3": _check_soluble_height_bound,
    "lem2.2": _check_product_identity,
    "lem2.5": _check_height_inequalities,
    "lem2.6": _check_lambda_oracle,
    "thm2.8": _check_join_heights,
    "lem3.3": _check_residual_drop,
    "lem3.6": _check_mutual_structure,
    "lem4.2": _check_section_terms,
    "lem4.3": _check_quasinilpotent_product,
    "lem5.1": _check_tower_class_closure,
    "thm6.3": _check_height_sandwich,
    "prop6.4": _check_join_nonfrattini,
    "thm6.6": _check_total_product_nonfrattini,
    "ex6.5": _check_normal_nonfrattini_gap,
    "fstar-oracle": _check_fstar_oracle,
    "props": _check_declared_properties,
}

THEOREM_IDS = tuple(_CHECKS)


def _resolve_theorems(theorems) -> tuple[str, ...]:
    if theorems is None:
        return THEOREM_IDS
    if isinstance(theorems, str):
        theorems = [theorems]
    tids = []
    for tid in theorems:
        if tid == "all":
            tids.extend(THEOREM_IDS)
            continue
        if tid not in _CHECKS:
            raise InvalidParameter(
                f"unknown theorem id {tid!r}; known: {', '.join(THEOREM_IDS)}"
            )
        tids.append(tid)
    return tuple(dict.fromkeys(tids))


def _verify_task(task) -> list[TheoremVerdict]:
    spec, tids, opts = task
    grp = spec.build()
    out: list[TheoremVerdict] = []
    for tid in tids:
        out.extend(_CHECKS[tid](grp, opts))
    return out


def run_verify(
    specs: Sequence[CorpusSpec] | None = None,
    theorems: Iterable[str] | str | None = None,
    jobs: int = 1,
    primes: tuple[int, ...] = (2, 3, 5, 7),
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    order_cap: int = DEFAULT_ORDER_CAP,
    mutations: Iterable[str] = (),
    record_sample: int = DEFAULT_RECORD_SAMPLE,
) -> list[TheoremVerdict]:
    """Run suites over the corpus and return globally sorted verdicts.

    Groups are verified independently (in ``jobs`` worker processes
    when over 1), each task building its group from the spec, so the
    output never depends on scheduling.
    """
    mutations = frozenset(mutations)
    for name in mutations:
        if name not in MUTATION_NAMES:
            raise InvalidParameter(
                f"unknown mutation {name!r}; known: {', '.join(MUTATION_NAMES)}"
            )
    tids = _resolve_theorems(theorems)
    if specs is None:
        specs = default_corpus(order_cap)
    opts = VerifyOptions(
        primes=tuple(primes),
        lattice_cap=lattice_cap,
        order_cap=order_cap,
        record_sample=record_sample,
        mutations=mutations,
    )
    tasks = [(spec, tids, opts) for spec in specs]
    if jobs <= 1:
        chunks = [_verify_task(task) for task in tasks]
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=jobs) as pool:
            chunks = pool.map(_verify_task, tasks, chunksize=1)
    verdicts = [v for chunk in chunks for v in chunk]
    verdicts.sort(key=lambda v: v.sort_key)
    return verdicts


def verify_theorem(
    theorem_id: str,
    specs: Sequence[CorpusSpec] | None = None,
    **kwargs,
) -> list[TheoremVerdict]:
    """All verdicts of one suite over the corpus."""
    return run_verify(specs, [theorem_id], **kwargs)
