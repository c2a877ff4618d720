"""General Cantor set constructions of Lüroth sets.

A :class:`Construction` stores one finite *template* tree in heap order
(children of node ``i`` are ``2i`` on the left, ``2i+1`` on the right).
When ``self_similar_leaves`` is set, every template leaf is an affine,
orientation-preserving copy of the root, so the infinite construction is
generated by repeatedly substituting the template into its own leaves.
Scale-free quantities (g, h, thickness, orderedness) of the infinite tree
are then extrema over the template's internal nodes, computed exactly.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .exact import (
    DigitSet,
    LurothDomainError,
    chevron_left,
    chevron_right,
    periodic_value,
)

__all__ = [
    "Node",
    "Construction",
    "QuantityReport",
    "OrderednessReport",
    "FixtureError",
    "from_digit_splits",
    "scc",
    "scc_splits",
    "scc_level_lengths",
    "quantities",
    "thickness_closed_form",
    "thickness_polynomial_form",
    "gamma_closed_form",
    "verify_ordered",
    "is_ordered",
    "diameter",
    "band_interval",
    "max_gap",
    "fixture_unordered_3_26",
    "load_split_fixture",
    "middle_thirds_fixture",
]


class FixtureError(ValueError):
    """A bundled construction fixture failed validation."""


@dataclass(frozen=True)
class Node:
    """One template node: closed interval, optional removed open gap, label."""

    index: int
    lo: Fraction
    hi: Fraction
    gap: tuple[Fraction, Fraction] | None = None
    label: str = ""

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def gap_length(self) -> Fraction:
        if self.gap is None:
            raise ValueError(f"node {self.index} is a leaf")
        return self.gap[1] - self.gap[0]

    @property
    def is_leaf(self) -> bool:
        return self.gap is None


@dataclass(frozen=True)
class Construction:
    """A general Cantor set construction, possibly infinite by self-similarity.

    ``template`` maps heap indices to :class:`Node`. ``depth`` is how many
    levels :meth:`nodes` and :meth:`levels` materialise.
    """

    template: dict[int, Node]
    depth: int = 1
    self_similar_leaves: bool = True
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if 1 not in self.template:
            raise ValueError("construction has no root")
        for i, node in self.template.items():
            if node.lo >= node.hi:
                raise ValueError(f"node {i}: interval must have positive length")
            if node.gap is None:
                continue
            left, right = self.template.get(2 * i), self.template.get(2 * i + 1)
            if left is None or right is None:
                raise ValueError(f"node {i}: internal node without two children")
            g_lo, g_hi = node.gap
            if not (left.lo == node.lo and left.hi == g_lo and g_lo < g_hi
                    and right.lo == g_hi and right.hi == node.hi):
                raise ValueError(f"node {i}: children and gap do not partition it")

    @property
    def root(self) -> Node:
        return self.template[1]

    def internal(self) -> list[Node]:
        return [n for _, n in sorted(self.template.items()) if n.gap is not None]

    def leaves(self) -> list[Node]:
        return [n for _, n in sorted(self.template.items()) if n.gap is None]

    def with_depth(self, depth: int) -> "Construction":
        return Construction(self.template, depth, self.self_similar_leaves, self.name, self.meta)

    def child_gap_length(self, i: int) -> Fraction:
        """Gap length removed from node ``i``; a leaf copy inherits the root's ratio."""
        node = self.template[i]
        if node.gap is not None:
            return node.gap_length
        if not self.self_similar_leaves:
            raise ValueError(f"node {i} is a terminal leaf")
        root = self.root
        return root.gap_length / root.length * node.length

    def level(self, n: int) -> list[tuple[Fraction, Fraction]]:
        """Closed intervals remaining after ``n`` levels, left to right."""
        return [(lo, hi) for _, _, lo, hi in _materialise(self, n)[-1]]

    def levels(self, n: int | None = None) -> list[list[tuple[Fraction, Fraction]]]:
        n = self.depth if n is None else n
        return [[(lo, hi) for _, _, lo, hi in lvl] for lvl in _materialise(self, n)]

    def nodes(self) -> dict[int, Node]:
        """Materialised nodes down to ``depth`` in global heap indexing."""
        out: dict[int, Node] = {}
        lvls = _materialise(self, self.depth)
        for depth, lvl in enumerate(lvls):
            for pos, (t, scale, lo, hi) in enumerate(lvl):
                idx = (1 << depth) + pos
                gap = None
                if depth < self.depth:
                    tnode = self.template[t]
                    root = self.template[1]
                    if tnode.gap is not None:
                        a, b = tnode.gap
                        gap = (lo + (a - tnode.lo) * scale, lo + (b - tnode.lo) * scale)
                    elif self.self_similar_leaves:
                        a, b = root.gap
                        s = (hi - lo) / root.length
                        gap = (lo + (a - root.lo) * s, lo + (b - root.lo) * s)
                out[idx] = Node(idx, lo, hi, gap, self.template[t].label)
        return out


def _materialise(c: Construction, n: int) -> list[list[tuple[int, Fraction, Fraction, Fraction]]]:
    """Levels 0..n as lists of (template index, scale, lo, hi).

    ``scale`` maps template node ``t`` onto [lo, hi]:  x -> lo + (x - t.lo) * scale.
    """
    if n < 0:
        raise ValueError("level must be >= 0")
    root = c.template[1]
    levels = [[(1, Fraction(1), root.lo, root.hi)]]
    for _ in range(n):
        nxt = []
        for t, scale, lo, hi in levels[-1]:
            node = c.template[t]
            if node.gap is None:
                if not c.self_similar_leaves:
                    nxt.append((t, scale, lo, hi))
                    continue
                # the leaf is a copy of the root: restart from the template root
                t, node = 1, root
                scale = (hi - lo) / root.length
            for ci in (2 * t, 2 * t + 1):
                child = c.template[ci]
                clo = lo + (child.lo - node.lo) * scale
                chi = lo + (child.hi - node.lo) * scale
                nxt.append((ci, scale, clo, chi))
        levels.append(nxt)
    return levels


# ---------------------------------------------------------------------------
# digit-range trees (SCC and the appendix fixture)


def _range_interval(lo_digit: int, hi_digit: int, n1: int, n2: int) -> tuple[Fraction, Fraction]:
    return chevron_left(hi_digit, n2), chevron_right(lo_digit, n1)


def from_digit_splits(n1: int, n2: int, splits: Iterable[Sequence[int]], depth: int = 1,
                      name: str = "") -> Construction:
    """Build a template from digit-range splits ``(level, low, pivot, high)``.

    Each split cuts the range {low..high} present at ``level - 1`` into the
    high digits {pivot..high} (left child, smaller values) and the low digits
    {low..pivot-1} (right child). Endpoints come from the chevron formulas.
    Singleton ranges are leaves, i.e. proportional copies of the root.
    """
    if not 2 <= n1 < n2:
        raise LurothDomainError(f"need 2 <= N1 < N2, got ({n1}, {n2})")
    by_level: dict[int, list[tuple[int, int, int]]] = {}
    for lvl, low, pivot, high in splits:
        by_level.setdefault(int(lvl), []).append((int(low), int(pivot), int(high)))

    ranges = {1: (n1, n2)}
    frontier = {(n1, n2): 1}
    template: dict[int, Node] = {}
    for lvl in sorted(by_level):
        nxt: dict[tuple[int, int], int] = {}
        for low, pivot, high in by_level[lvl]:
            idx = frontier.get((low, high))
            if idx is None:
                raise FixtureError(f"level {lvl}: no range {low}..{high} at the previous level")
            if not low < pivot <= high:
                raise FixtureError(f"level {lvl}: bad pivot {pivot} for {low}..{high}")
            ranges[2 * idx] = (pivot, high)
            ranges[2 * idx + 1] = (low, pivot - 1)
            nxt[(pivot, high)] = 2 * idx
            nxt[(low, pivot - 1)] = 2 * idx + 1
            del frontier[(low, high)]
        for rng, idx in frontier.items():
            if rng[0] != rng[1]:
                raise FixtureError(f"range {rng[0]}..{rng[1]} left unsplit at level {lvl}")
        frontier = nxt
    if any(lo != hi for lo, hi in frontier):
        raise FixtureError("construction does not end in singleton digit ranges")

    for idx, (low, high) in ranges.items():
        lo, hi = _range_interval(low, high, n1, n2)
        gap = None
        if 2 * idx in ranges:
            pivot = ranges[2 * idx][0]
            gap = (chevron_right(pivot, n1), chevron_left(pivot - 1, n2))
        label = f"{low}" if low == high else f"{low}..{high}"
        template[idx] = Node(idx, lo, hi, gap, label)
    return Construction(template, depth, True, name, {"N1": n1, "N2": n2})


def scc_splits(n1: int, n2: int) -> list[tuple[int, int, int, int]]:
    """Splits of the stepwise complete construction: level i peels off digit N1+i-1."""
    return [(i, n1 + i - 1, n1 + i, n2) for i in range(1, n2 - n1 + 1)]


def scc(n1: int, n2: int, depth: int = 1) -> Construction:
    """Stepwise complete construction of L_{N1,N2} materialised to ``depth`` levels."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return from_digit_splits(n1, n2, scc_splits(n1, n2), depth, name=f"SCC({n1},{n2})")


def scc_level_lengths(n1: int, n2: int, i: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(main, left, gap, right) lengths at SCC level ``i``, 1 <= i <= N2-N1."""
    if not 2 <= n1 < n2:
        raise LurothDomainError(f"need 2 <= N1 < N2, got ({n1}, {n2})")
    if not 1 <= i <= n2 - n1:
        raise IndexError(f"level {i} outside 1..{n2 - n1}")
    a = n1 + i - 1
    b = n1 + i
    main = chevron_right(a, n1) - chevron_left(n2, n2)
    left = chevron_right(b, n1) - chevron_left(n2, n2)
    gap = chevron_left(a, n2) - chevron_right(b, n1)
    right = chevron_right(a, n1) - chevron_left(a, n2)
    return main, left, gap, right


# ---------------------------------------------------------------------------
# quantities


@dataclass(frozen=True)
class QuantityReport:
    g: Fraction
    h: Fraction
    tau: Fraction
    gamma: Fraction
    attained_at: dict[str, int]
    exact: bool
    """True when the extrema cover the whole infinite construction."""


def quantities(c: Construction) -> QuantityReport:
    """Hlavka's g and h, the construction thickness tau and gamma = tau/(1+tau).

    Always computed from the definitions as sup/inf over internal nodes.
    """
    internal = c.internal()
    if not internal:
        raise ValueError("construction has no gaps")
    if c.self_similar_leaves:
        nodes = [(n, c.template[2 * n.index], c.template[2 * n.index + 1]) for n in internal]
    else:
        mat = c.nodes()
        nodes = [(n, mat[2 * i], mat[2 * i + 1]) for i, n in mat.items()
                 if n.gap is not None and 2 * i in mat]

    g = h = tau = None
    at: dict[str, int] = {}
    for node, left, right in nodes:
        length, gap = node.length, node.gap_length
        shorter = min(left.length, right.length)
        r_g = gap / length
        r_h = shorter / length
        r_t = shorter / gap
        if g is None or r_g > g:
            g, at["g"] = r_g, node.index
        if h is None or r_h < h:
            h, at["h"] = r_h, node.index
        if tau is None or r_t < tau:
            tau, at["tau"] = r_t, node.index
    return QuantityReport(g, h, tau, tau / (1 + tau), at, c.self_similar_leaves)


def thickness_closed_form(n1: int, n2: int) -> Fraction:
    """Thickness of L_{N1,N2}: (N2> - <N2) / (<(N2-1) - N2>)."""
    if not 2 <= n1 < n2:
        raise LurothDomainError(f"need 2 <= N1 < N2, got ({n1}, {n2})")
    num = chevron_right(n2, n1) - chevron_left(n2, n2)
    den = chevron_left(n2 - 1, n2) - chevron_right(n2, n1)
    return num / den


def thickness_polynomial_form(n1: int, n2: int) -> Fraction:
    """The same thickness written as a quotient of integer polynomials."""
    if not 2 <= n1 < n2:
        raise LurothDomainError(f"need 2 <= N1 < N2, got ({n1}, {n2})")
    num = (n2 - n1) * (n2 - 2) * (n1 * n2 - n1 - n2 + 2)
    den = (n1 ** 2 * (n2 ** 3 - 2 * n2 ** 2 + 2)
           - n1 * (2 * n2 ** 3 - 5 * n2 ** 2 + n2 + 4)
           - (n2 ** 2 - n2))
    return Fraction(num, den)


def gamma_closed_form(n1: int, n2: int) -> Fraction:
    tau = thickness_closed_form(n1, n2)
    return tau / (1 + tau)


# ---------------------------------------------------------------------------
# orderedness


@dataclass
class OrderednessReport:
    n1: int
    n2: int
    alpha: Fraction | None
    deltas: list[tuple[str, int, Fraction]]
    counterexamples: list[tuple[str, int, Fraction]]

    @property
    def ordered(self) -> bool:
        return not self.counterexamples

    @property
    def verdict(self) -> str:
        return "ordered" if self.ordered else "unordered"


def verify_ordered(n1: int, n2: int) -> OrderednessReport:
    """Exact orderedness proof for the SCC of L_{N1,N2}.

    ``delta0`` compares the spine gap at level i with the next spine gap,
    ``delta1`` with the gap inside the right sibling copy (ratio alpha).
    The final level, whose two children are both root copies, is checked
    too (``delta_last_*``); negative values are returned as counterexamples.
    """
    if not 2 <= n1 < n2:
        raise LurothDomainError(f"need 2 <= N1 < N2, got ({n1}, {n2})")
    alpha = (chevron_left(n1, n2) - chevron_right(n1 + 1, n1)) / (
        chevron_right(n1, n1) - chevron_left(n2, n2))
    deltas = []
    m = n2 - n1
    for i in range(1, m):
        _, _, gap, _ = scc_level_lengths(n1, n2, i)
        _, _, next_gap, right_next = scc_level_lengths(n1, n2, i + 1)
        _, _, _, right = scc_level_lengths(n1, n2, i)
        deltas.append(("delta0", i, gap - next_gap))
        deltas.append(("delta1", i, gap - alpha * right))
    _, left, gap, right = scc_level_lengths(n1, n2, m)
    deltas.append(("delta_last_left", m, gap - alpha * left))
    deltas.append(("delta_last_right", m, gap - alpha * right))
    bad = [d for d in deltas if d[2] < 0]
    return OrderednessReport(n1, n2, alpha, deltas, bad)


def is_ordered(c: Construction) -> tuple[bool, list[int]]:
    """Check |O^i| >= max(|O^2i|, |O^2i+1|) on every node; returns offending nodes."""
    bad = []
    for node in c.internal():
        i = node.index
        if node.gap_length < max(c.child_gap_length(2 * i), c.child_gap_length(2 * i + 1)):
            bad.append(i)
    return not bad, bad


# ---------------------------------------------------------------------------
# sizes


def band_interval(n1: int, n2: int) -> tuple[Fraction, Fraction]:
    """Convex hull [<N2, N1>] of L_{N1,N2}."""
    if not 2 <= n1 < n2:
        raise LurothDomainError(f"need 2 <= N1 < N2, got ({n1}, {n2})")
    return chevron_left(n2, n2), chevron_right(n1, n1)


def diameter(ds: DigitSet) -> Fraction:
    """sup - inf of the Lüroth set; for a ray the infimum is 0."""
    if ds.kind == "ray":
        return periodic_value(ds.lo)
    if ds.lo == ds.hi:
        return Fraction(0)
    return periodic_value(ds.lo) - periodic_value(ds.hi)


def max_gap(n1: int, n2: int) -> Fraction:
    """Largest gap of L_{N1,N2}: <N1 - (N1+1)>, the first SCC gap."""
    if not 2 <= n1 < n2:
        raise LurothDomainError(f"need 2 <= N1 < N2, got ({n1}, {n2})")
    return chevron_left(n1, n2) - chevron_right(n1 + 1, n1)


# ---------------------------------------------------------------------------
# fixtures


def _checksum(doc: dict) -> str:
    body = {k: v for k, v in doc.items() if k != "checksum"}
    blob = json.dumps(body, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def load_split_fixture(text: str, depth: int = 1) -> Construction:
    """Load a digit-split JSON fixture, verifying its checksum."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"fixture is not valid JSON: {exc}") from exc
    if doc.get("checksum") != _checksum(doc):
        raise FixtureError("fixture checksum mismatch")
    return from_digit_splits(doc["N1"], doc["N2"], doc["splits"], depth,
                             name=doc.get("name", f"L_{doc['N1']},{doc['N2']}"))


@lru_cache(maxsize=None)
def _fixture_text(name: str) -> str:
    return resources.files("luroth.data").joinpath(name).read_text(encoding="utf-8")


def fixture_unordered_3_26(depth: int = 1) -> Construction:
    """The unordered digit-split construction of L_{3,26} (six levels)."""
    return load_split_fixture(_fixture_text("l_3_26_unordered.json"), depth)


def middle_thirds_fixture(depth: int = 1) -> Construction:
    third = Fraction(1, 3)
    template = {
        1: Node(1, Fraction(0), Fraction(1), (third, 2 * third)),
        2: Node(2, Fraction(0), third),
        3: Node(3, 2 * third, Fraction(1)),
    }
    return Construction(template, depth, True, "C_1/3")
