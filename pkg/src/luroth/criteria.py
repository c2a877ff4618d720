"""Exact hypothesis checkers for Cantor-sumset criteria, and congruence drivers.

Each checker evaluates the hypotheses of a known sumset criterion (Hall,
Hlavka's pair and multi-set inequalities, Astels' thickness criterion) in
exact arithmetic and returns a :class:`CheckReport`. A report only claims a
conclusion when every listed condition holds.

The drivers assemble these checks into proofs that sums of Lüroth sets
cover the real line mod 1, or refute it with a gap certificate.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .construction import (
    Construction,
    band_interval,
    fixture_unordered_3_26,
    gamma_closed_form,
    max_gap,
    quantities,
    scc,
    thickness_closed_form,
)
from .exact import (
    DigitSet,
    LurothDomainError,
    LurothWord,
    as_fraction,
    fraction_str,
    periodic_value,
)
from .sumset import Interval, certify_gap, certify_member

__all__ = [
    "Condition",
    "CheckReport",
    "AstelsEntry",
    "EpsilonPlan",
    "CERTIFIED_INTERVAL",
    "CERTIFIED_THICKNESS",
    "CERTIFIED_NON_CONGRUENCE",
    "CERTIFIED_TRIVIAL",
    "INCONCLUSIVE",
    "hall_check",
    "hlavka_pair_check",
    "hlavka_multi_check",
    "astels_check",
    "band_entry",
    "diam_ray",
    "small_gap_ray",
    "helper_conditions",
    "choose_N",
    "theorem1_driver",
    "theorem2_driver",
    "theorem2_plan",
    "corollary3_driver",
    "theorem4_driver",
    "optimality_check",
    "lemma_sweep",
]

CERTIFIED_INTERVAL = "certified_interval"
CERTIFIED_THICKNESS = "certified_thickness_bound"
CERTIFIED_NON_CONGRUENCE = "certified_non_congruence"
CERTIFIED_TRIVIAL = "certified_trivial"
INCONCLUSIVE = "inconclusive"

_RELATIONS = {
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
    "==": lambda a, b: a == b,
}


@dataclass(frozen=True)
class Condition:
    name: str
    lhs: Fraction
    relation: str
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return _RELATIONS[self.relation](self.lhs, self.rhs)

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": fraction_str(self.lhs), "relation": self.relation,
                "rhs": fraction_str(self.rhs), "holds": self.holds}

    def __str__(self) -> str:
        mark = "ok" if self.holds else "FAILS"
        return f"{self.name}: {self.lhs} {self.relation} {self.rhs}  [{mark}]"


def _cond(name: str, lhs, relation: str, rhs) -> Condition:
    return Condition(name, Fraction(lhs), relation, Fraction(rhs))


def _jsonable(value):
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, Interval):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


@dataclass
class CheckReport:
    """Verdict of one criterion check or driver run."""

    criterion: str
    inputs: dict
    conditions: list[Condition] = field(default_factory=list)
    verdict: str = INCONCLUSIVE
    interval: Interval | None = None
    thickness_bound: Fraction | None = None
    notes: list[str] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    sub_reports: list["CheckReport"] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.conditions)

    @property
    def certified(self) -> bool:
        return self.verdict != INCONCLUSIVE

    @property
    def failing(self) -> list[Condition]:
        return [c for c in self.conditions if not c.holds]

    @property
    def inputs_digest(self) -> str:
        blob = json.dumps(_jsonable(self.inputs), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def condition(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "inputs": _jsonable(self.inputs),
            "inputs_digest": self.inputs_digest,
            "conditions": [c.to_json() for c in self.conditions],
            "verdict": self.verdict,
            "interval": self.interval.to_json() if self.interval else None,
            "thickness_bound": fraction_str(self.thickness_bound)
            if self.thickness_bound is not None else None,
            "notes": list(self.notes),
            "discrepancies": _jsonable(self.discrepancies),
            "extras": _jsonable(self.extras),
            "sub_reports": [r.to_json() for r in self.sub_reports],
        }

    def summary(self) -> str:
        lines = [f"{self.criterion}: {self.verdict}"]
        if self.interval is not None:
            lines.append(f"  interval {self.interval}")
        if self.thickness_bound is not None:
            lines.append(f"  thickness bound {self.thickness_bound}")
        lines += [f"  {c}" for c in self.conditions]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def _interval_of(c: Construction) -> Interval:
    return Interval(c.root.lo, c.root.hi)


def _sum_intervals(intervals: Sequence[Interval]) -> Interval:
    return Interval(sum((i.lo for i in intervals), Fraction(0)),
                    sum((i.hi for i in intervals), Fraction(0)))


# ---------------------------------------------------------------------------
# criteria


def hall_check(da: Construction, db: Construction) -> CheckReport:
    """Hall: gaps no longer than either neighbour, then a size-ratio test."""
    report = CheckReport("Hall", {"A": da.name, "B": db.name})
    for tag, d in (("A", da), ("B", db)):
        q = quantities(d)
        node = d.template[q.attained_at["tau"]]
        left = d.template[2 * node.index].length
        right = d.template[2 * node.index + 1].length
        report.conditions.append(
            _cond(f"{tag}: gap <= shorter child at worst node {node.index}",
                  node.gap_length, "<=", min(left, right)))
        if not q.exact:
            report.notes.append(f"{tag}: checked to materialised depth only")
    ia, ib = _interval_of(da), _interval_of(db)
    a, b = ia.length, ib.length
    e = min(a, b)
    x, y = ia.lo, ib.lo
    partial = [Interval(x + y, x + y + 2 * e), Interval(x + y + a + b - 2 * e, x + y + a + b)]
    gaps_ok = report.all_hold
    report.conditions += [_cond("size ratio a/b >= 1/3", a / b, ">=", Fraction(1, 3)),
                          _cond("size ratio a/b <= 3", a / b, "<=", 3)]
    if gaps_ok:
        report.extras["certified_subintervals"] = partial
    if report.all_hold:
        report.verdict = CERTIFIED_INTERVAL
        report.interval = ia + ib
    elif gaps_ok:
        report.notes.append("gap condition holds; only the two end sub-intervals are certified")
    return report


def hlavka_pair_check(ga, ha, ia: Interval, gb, hb, ib: Interval) -> CheckReport:
    """Hlavka's two-set criterion: gA gB <= hA hB plus two size conditions."""
    ga, ha, gb, hb = map(as_fraction, (ga, ha, gb, hb))
    report = CheckReport("Hlavka3", {"gA": ga, "hA": ha, "IA": ia, "gB": gb, "hB": hb, "IB": ib})
    report.conditions = [
        _cond("gA*gB <= hA*hB", ga * gb, "<=", ha * hb),
        _cond("gA*|IA| <= |IB|", ga * ia.length, "<=", ib.length),
        _cond("gB*|IB| <= |IA|", gb * ib.length, "<=", ia.length),
    ]
    if report.all_hold:
        report.verdict = CERTIFIED_INTERVAL
        report.interval = ia + ib
    return report


def hlavka_multi_check(items: Sequence[tuple]) -> CheckReport:
    """Hlavka's n-set criterion over ``(g, h, I)`` triples, n >= 2."""
    if len(items) < 2:
        raise ValueError("need at least two sets")
    items = [(as_fraction(g), as_fraction(h), i) for g, h, i in items]
    report = CheckReport("Hlavka10", {"items": [list(t) for t in items]})
    total_h = sum((h for _, h, _ in items), Fraction(0))
    n = len(items)
    for i in range(n):
        for j in range(n):
            if i != j:
                hi, ii = items[i][1], items[i][2]
                report.conditions.append(
                    _cond(f"h{i + 1} <= |I{i + 1}|/|I{j + 1}|", hi, "<=", ii.length / items[j][2].length))
    for i, (g, h, _) in enumerate(items):
        report.conditions.append(_cond(f"g{i + 1}+h{i + 1} <= sum h", g + h, "<=", total_h))
    if report.all_hold:
        report.verdict = CERTIFIED_INTERVAL
        report.interval = _sum_intervals([t[2] for t in items])
    return report


@dataclass(frozen=True)
class AstelsEntry:
    gamma: Fraction
    interval: Interval
    max_gap: Fraction
    label: str = ""


def band_entry(n1: int, n2: int) -> AstelsEntry:
    """Exact (gamma, hull, largest gap) of L_{N1,N2} from its ordered construction."""
    lo, hi = band_interval(n1, n2)
    return AstelsEntry(gamma_closed_form(n1, n2), Interval(lo, hi), max_gap(n1, n2), f"L_{n1},{n2}")


def _astels_order_conditions(entries: Sequence[AstelsEntry], order: Sequence[int]) -> list[Condition]:
    seq = [entries[i] for i in order]
    out = []
    for i in range(1, len(seq)):
        for j in range(i):
            out.append(_cond(f"|I_{seq[i].label}| >= |O_{seq[j].label}|",
                             seq[i].interval.length, ">=", seq[j].max_gap))
    prefix = Fraction(0)
    for i in range(len(seq) - 1):
        prefix += seq[i].interval.length
        out.append(_cond(f"prefix length through {seq[i].label} >= |O_{seq[i + 1].label}|",
                         prefix, ">=", seq[i + 1].max_gap))
    return out


def astels_check(entries: Sequence[AstelsEntry | tuple], try_permutations: bool = True,
                 max_orderings: int = 40320) -> CheckReport:
    """Astels' thickness criterion.

    S = sum of gammas. With S >= 1 and the gap-covering conditions for some
    ordering of the sets, the sum equals the sum of hulls. With S < 1 the
    sum contains a Cantor set of thickness at least S/(1-S).
    """
    if not entries:
        raise ValueError("astels_check needs at least one set")
    entries = [e if isinstance(e, AstelsEntry) else AstelsEntry(*e) for e in entries]
    entries = [e if e.label else AstelsEntry(e.gamma, e.interval, e.max_gap, f"A{i + 1}")
               for i, e in enumerate(entries)]
    s = sum((e.gamma for e in entries), Fraction(0))
    report = CheckReport("Astels2", {"entries": [[e.label, e.gamma, e.interval, e.max_gap]
                                                 for e in entries]})
    report.extras["S_gamma"] = s
    if s < 1:
        report.criterion = "Astels1"
        report.conditions = [_cond("S_gamma < 1", s, "<", 1)]
        report.verdict = CERTIFIED_THICKNESS
        report.thickness_bound = s / (1 - s)
        report.extras["dimension_lower_bound"] = (
            min(1.0, math.log(2) / math.log(1 + 1 / s)) if s > 0 else 0.0)
        return report

    orders = [tuple(range(len(entries)))]
    if try_permutations:
        orders += [p for p in itertools.islice(itertools.permutations(range(len(entries))),
                                               max_orderings) if p != orders[0]]
    tried = []
    chosen = None
    for order in orders:
        conds = _astels_order_conditions(entries, order)
        tried.append({"order": [entries[i].label for i in order],
                      "holds": all(c.holds for c in conds)})
        if all(c.holds for c in conds):
            chosen = (order, conds)
            break
    report.extras["orderings_tried"] = tried
    sum_cond = _cond("S_gamma >= 1", s, ">=", 1)
    if chosen is None:
        report.conditions = [sum_cond] + _astels_order_conditions(entries, orders[0])
        report.notes.append("S_gamma >= 1 so the sum contains an interval, "
                            "but no ordering satisfies the gap-covering conditions")
        return report
    order, conds = chosen
    report.conditions = [sum_cond] + conds
    report.extras["ordering"] = [entries[i].label for i in order]
    report.verdict = CERTIFIED_INTERVAL
    report.interval = _sum_intervals([e.interval for e in entries])
    return report


# ---------------------------------------------------------------------------
# approximating rays by bands


def diam_ray(k: int) -> Fraction:
    """Diameter of L_{>=k}: (k-1)/(k(k-1)-1)."""
    return periodic_value(k)


def small_gap_ray(k: int) -> Fraction:
    """Limit of the largest gap of L_{k,N} as N grows: (k-2)/(k(k^2-2)-1)."""
    return Fraction(k - 2, k * (k * k - 2) - 1)


def helper_conditions(k: int, n: int, eps) -> list[Condition]:
    """The three band-approximation bounds for L_{k,N} at tolerance eps."""
    eps = as_fraction(eps)
    c = diam_ray(k)
    lo, hi = band_interval(k, n)
    return [
        _cond(f"gamma_{k},{n} > diam - eps", gamma_closed_form(k, n), ">", c - eps),
        _cond(f"|I_{k},{n}| > diam - eps", hi - lo, ">", c - eps),
        _cond(f"|O_{k},{n}| < limit gap + eps", max_gap(k, n), "<", small_gap_ray(k) + eps),
    ]


def choose_N(k: int, eps) -> int:
    """Smallest integer N >= max{k, (c+1)/eps + 1} + 1, re-verified exactly."""
    eps = as_fraction(eps)
    if k < 2:
        raise LurothDomainError("k must be >= 2")
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    bound = max(Fraction(k), (diam_ray(k) + 1) / eps + 1) + 1
    n = math.ceil(bound)
    failed = [c for c in helper_conditions(k, n, eps) if not c.holds]
    if failed:
        raise ArithmeticError(f"band approximation failed for k={k}, N={n}: {failed}")
    return n


@dataclass
class EpsilonPlan:
    ks: list[int]
    epsilon: Fraction
    N_list: list[int]
    constraint_values: list[tuple[str, Fraction]]

    def __post_init__(self):
        if self.epsilon <= 0 or any(self.epsilon >= v for _, v in self.constraint_values):
            raise ValueError("epsilon must be positive and below every constraint")


# ---------------------------------------------------------------------------
# drivers


def _band_label(n1: int, n2: int) -> str:
    return f"L<={n2}" if n1 == 2 else f"L_{n1},{n2}"


def _covers_circle(report: CheckReport) -> Condition:
    return _cond("certified interval length >= 1", report.interval.length, ">=", 1)


def theorem1_driver(sizes: Sequence[int], gap_depths: Sequence[int] | None = None) -> CheckReport:
    """Decide whether L<=k1 + ... + L<=kn covers the reals mod 1.

    Tries Hall (pairs), Hlavka (pair / multi) and Astels on the stepwise
    complete constructions. If none certifies an interval of length >= 1,
    searches for mod-1 gaps of level covers (pairs only); it also records
    when the sum is provably not an interval.
    """
    sizes = [int(k) for k in sizes]
    if len(sizes) < 2 or any(k < 3 for k in sizes):
        raise LurothDomainError("need at least two bounds, each >= 3")
    labels = [_band_label(2, k) for k in sizes]
    report = CheckReport("CongruenceBounded", {"sets": labels})
    cons = [scc(2, k) for k in sizes]
    qs = [quantities(c) for c in cons]
    ivs = [_interval_of(c) for c in cons]

    subs = []
    if len(sizes) == 2:
        subs.append(hall_check(*cons))
        subs.append(hlavka_pair_check(qs[0].g, qs[0].h, ivs[0], qs[1].g, qs[1].h, ivs[1]))
    else:
        subs.append(hlavka_multi_check([(q.g, q.h, i) for q, i in zip(qs, ivs)]))
    subs.append(astels_check([band_entry(2, k) for k in sizes]))
    report.sub_reports = subs
    report.extras["quantities"] = {lab: {"g": q.g, "h": q.h, "tau": q.tau, "gamma": q.gamma}
                                   for lab, q in zip(labels, qs)}

    for sub in subs:
        if sub.verdict == CERTIFIED_INTERVAL:
            length = _covers_circle(sub)
            report.conditions = sub.conditions + [length]
            report.interval = sub.interval
            report.extras["certified_by"] = sub.criterion
            if length.holds:
                report.verdict = CERTIFIED_INTERVAL
                return report
            report.notes.append("the sum is an interval shorter than 1, so it cannot cover mod 1")
            report.verdict = CERTIFIED_NON_CONGRUENCE
            return report

    if len(sizes) != 2:
        report.notes.append("no criterion applies; gap search is implemented for pairs only")
        return report
    depths = tuple(gap_depths) if gap_depths else tuple(min(k, 6) for k in sizes)
    cert = certify_gap(DigitSet.band(2, sizes[0]), DigitSet.band(2, sizes[1]), depths)
    report.extras["gap_certificate"] = cert.to_json()
    if cert.hull_gaps:
        lo_word = [LurothWord.periodic(k) for k in sizes]
        hi_word = [LurothWord.periodic(2) for _ in sizes]
        lo_m = certify_member(lo_word, sum(periodic_value(k) for k in sizes),
                              [DigitSet.band(2, k) for k in sizes])
        hi_m = certify_member(hi_word, len(sizes), [DigitSet.band(2, k) for k in sizes])
        a, b = cert.hull_gaps[0]
        report.extras["not_interval"] = {"gap": [a, b], "members": [lo_m.to_json(), hi_m.to_json()]}
        report.notes.append(f"not an interval: ({a}, {b}) separates members "
                            f"{lo_m.total} and {hi_m.total}")
    if cert.gaps:
        report.verdict = CERTIFIED_NON_CONGRUENCE
        report.conditions = [_cond(f"mod-1 gap ({a}, {b}) at depths {depths}", b - a, ">", 0)
                             for a, b in cert.gaps]
    else:
        report.notes.append(f"no mod-1 gap at depths {depths}; congruence undecided")
    return report


def theorem2_plan(ks: Sequence[int]) -> EpsilonPlan:
    """Pick epsilon below every constraint of the band-approximation argument."""
    ks = list(ks)
    n = len(ks)
    c = [diam_ray(k) for k in ks]
    o = [small_gap_ray(k) for k in ks]
    cons = [("sum slack", (sum(c, Fraction(0)) - 1) / n)]
    for i in range(n):
        for j in range(i + 1, n):
            cons.append((f"half I vs O ({ks[i]},{ks[j]})", (c[i] - o[j]) / 2))
    for j in range(1, n):
        cons.append((f"diam vs 1/k at {ks[j]}", c[j] - Fraction(1, ks[j])))
        p = ks[j - 1]
        cons.append((f"spread bound vs gap at {p}", Fraction(1, p * p + 2 * p + 2) - o[j - 1]))
    eps = min(v for _, v in cons) / 2
    return EpsilonPlan(ks, eps, [choose_N(k, eps) for k in ks], cons)


def theorem2_driver(ks: Sequence[int]) -> CheckReport:
    """Decide L>=k1 + ... + L>=kn covering mod 1 through band approximations."""
    ks = [int(k) for k in ks]
    if not ks or any(k < 2 for k in ks):
        raise LurothDomainError("each k must be >= 2")
    report = CheckReport("CongruenceRays", {"ks": ks})
    total = sum((diam_ray(k) for k in ks), Fraction(0))
    report.conditions.append(_cond("total diameter >= 1", total, ">=", 1))
    for j in range(1, len(ks)):
        p, q = ks[j - 1], ks[j]
        report.conditions.append(_cond(f"spread: k{j} <= k{j + 1}", p, "<=", q))
        report.conditions.append(
            _cond(f"spread: k{j + 1} <= k{j}^2+2k{j}+2", q, "<=", p * p + 2 * p + 2))
    if not report.all_hold:
        report.notes.append("failing: " + "; ".join(c.name for c in report.failing))
        if total < 1:
            report.verdict = CERTIFIED_NON_CONGRUENCE
            report.notes.append("total diameter below 1: the sum is too short to cover mod 1")
        return report
    if total == 1:
        report.verdict = CERTIFIED_TRIVIAL
        report.notes.append("L>=2 = (0,1] already covers the reals mod 1")
        return report

    plan = theorem2_plan(ks)
    report.extras["epsilon"] = plan.epsilon
    report.extras["N"] = plan.N_list
    report.extras["constraints"] = plan.constraint_values
    # largest k first: its small gaps are covered by the larger sets that follow
    entries = [band_entry(k, n) for k, n in reversed(list(zip(ks, plan.N_list)))]
    sub = astels_check(entries, try_permutations=False)
    report.sub_reports.append(sub)
    if sub.verdict != CERTIFIED_INTERVAL:
        report.notes.append("Astels criterion failed for the chosen bands")
        return report
    report.conditions += sub.conditions
    report.conditions.append(_covers_circle(sub))
    report.interval = sub.interval
    if report.all_hold:
        report.verdict = CERTIFIED_INTERVAL
    return report


def _k_gamma_forms(k: int) -> tuple[Fraction, Fraction]:
    """Two polynomial forms of k * gamma_{k,k^3}."""
    prod_form = Fraction(k * (k - 1) * (k + 1) * (k ** 3 - 2) * (k ** 4 - k ** 3 - k + 2),
                         k ** 2 * (k * k - k - 1) * (k ** 6 - 3 * k ** 3 + 3))
    excess = Fraction(k ** 6 + k ** 5 - 5 * k ** 3 - k * k + k + 4,
                      k ** 9 - k ** 8 - k ** 7 - 3 * k ** 6 + 3 * k ** 5 + 3 * k ** 4
                      + 3 * k ** 3 - 3 * k * k - 3 * k)
    return prod_form, 1 + excess


def corollary3_driver(k: int, N: int | None = None, route: str = "astels") -> CheckReport:
    """k copies of L>=k cover mod 1, via k copies of the band L_{k,N}.

    ``route="hlavka"`` (k = 3 only) uses the unordered construction of
    L_{3,26} and Hlavka's multi-set inequalities instead.
    """
    k = int(k)
    if k < 2:
        raise LurothDomainError("k must be >= 2")
    report = CheckReport("CopiesOfRay", {"k": k, "N": N, "route": route})
    if k == 2:
        report.verdict = CERTIFIED_TRIVIAL
        report.notes.append("L>=2 = (0,1] already covers the reals mod 1")
        return report
    if route == "hlavka":
        if k != 3:
            raise LurothDomainError("the unordered-construction route exists for k = 3 only")
        fix = fixture_unordered_3_26()
        q = quantities(fix)
        iv = _interval_of(fix)
        sub = hlavka_multi_check([(q.g, q.h, iv)] * 3)
        report.sub_reports.append(sub)
        report.extras["quantities"] = {"g": q.g, "h": q.h, "tau": q.tau}
        report.conditions = list(sub.conditions)
        if sub.verdict == CERTIFIED_INTERVAL:
            report.conditions.append(_covers_circle(sub))
            report.interval = sub.interval
        if report.all_hold and report.interval is not None:
            report.verdict = CERTIFIED_INTERVAL
        return report
    if route != "astels":
        raise ValueError(f"unknown route {route!r}")

    n = k ** 3 if N is None else int(N)
    report.inputs["N"] = n
    gamma = gamma_closed_form(k, n)
    report.conditions.append(_cond(f"k*gamma_{k},{n} >= 1", k * gamma, ">=", 1))
    if n == k ** 3:
        for i, form in enumerate(_k_gamma_forms(k)):
            report.conditions.append(_cond(f"closed form {i + 1} of k*gamma", form, "==", k * gamma))
    entry = band_entry(k, n)
    report.conditions.append(_cond(f"k*|I_{k},{n}| > 1", k * entry.interval.length, ">", 1))
    sub = astels_check([entry] * k, try_permutations=False)
    report.sub_reports.append(sub)
    report.conditions += sub.conditions
    if sub.verdict == CERTIFIED_INTERVAL:
        report.interval = sub.interval
    if report.all_hold and report.interval is not None:
        report.verdict = CERTIFIED_INTERVAL
    return report


def theorem4_epsilon(k: int) -> Fraction:
    return min(Fraction(2 * k, k ** 4 - k ** 2 - 2 * k - 1),
               Fraction(2 * k * k, k ** 4 + 2 * k ** 3 - 3 * k * k - 4 * k - 1),
               Fraction(1, 2))


def theorem4_driver(k: int) -> CheckReport:
    """L<=k+2 + L>=k covers mod 1, via the band L_{k,N} for a suitable N."""
    k = int(k)
    if k < 2:
        raise LurothDomainError("k must be >= 2")
    report = CheckReport("BoundedPlusRay", {"k": k})
    gamma_top = Fraction(k * k, k * k + k + 1)
    report.conditions.append(_cond(f"gamma<={k + 2} closed form", gamma_top, "==",
                                   gamma_closed_form(2, k + 2)))
    report.conditions.append(_cond(f"tau<={k + 2} = k^2/(k+1)", thickness_closed_form(2, k + 2),
                                   "==", Fraction(k * k, k + 1)))
    eps = theorem4_epsilon(k)
    n = choose_N(k, eps)
    report.extras.update({"epsilon": eps, "N": n})
    top, ray = band_entry(2, k + 2), band_entry(k, n)
    report.conditions += [
        _cond("gamma sum >= 1", top.gamma + ray.gamma, ">=", 1),
        _cond(f"|I<={k + 2}| >= |O_{k},{n}|", top.interval.length, ">=", ray.max_gap),
        _cond(f"|I<={k + 2}| closed form", top.interval.length, "==",
              Fraction(k * (k + 2), k * k + 3 * k + 1)),
        _cond(f"|I<={k + 2}| + |I_{k},{n}| > 1", top.interval.length + ray.interval.length, ">", 1),
    ]
    sub = astels_check([top, ray], try_permutations=True)
    report.sub_reports.append(sub)
    report.conditions += sub.conditions
    if sub.verdict == CERTIFIED_INTERVAL:
        report.interval = sub.interval
    if report.all_hold and report.interval is not None:
        report.verdict = CERTIFIED_INTERVAL
    return report


def optimality_check(k: int) -> CheckReport:
    """(k-1) copies of L>=k are too short to cover mod 1, for k >= 3."""
    k = int(k)
    if k < 3:
        raise LurothDomainError("optimality needs k >= 3")
    report = CheckReport("TooFewCopies", {"k": k})
    total = (k - 1) * diam_ray(k)
    report.conditions = [
        _cond(f"{k - 1} * diam L>={k} < 1", total, "<", 1),
        _cond("equals 1 - (k-2)/(k^2-k-1)", total, "==", 1 - Fraction(k - 2, k * k - k - 1)),
    ]
    if report.all_hold:
        report.verdict = CERTIFIED_NON_CONGRUENCE
    return report


def lemma_sweep(n1_range=range(2, 21), n2_max: int = 40):
    from .lemmas import lemma_sweep as _sweep
    return _sweep(n1_range, n2_max)
