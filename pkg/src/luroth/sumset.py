"""Exact interval unions, Lüroth level covers, sums, and mod-1 gap certificates.

Level covers are supersets of the Lüroth set, so any gap of a cover sum is a
gap of the true sum. That makes :func:`certify_gap` a proof of
non-congruence; it can never prove congruence.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .construction import Construction, scc
from .exact import DigitSet, LurothDomainError, LurothWord, as_fraction, eval_word, fraction_str

__all__ = [
    "Interval",
    "IntervalUnion",
    "CoverOverflowError",
    "GapCertificate",
    "MembershipCertificate",
    "max_parts",
    "level_cover",
    "minkowski",
    "nfold",
    "mod1",
    "gaps_mod1",
    "certify_gap",
    "certify_member",
]

DEFAULT_MAX_PARTS = 2 ** 20


class CoverOverflowError(RuntimeError):
    """A cover or sum would exceed the part-count guard ("depth too large")."""


def max_parts() -> int:
    """Part-count guard, overridable through ``LUROTH_MAX_PARTS``."""
    raw = os.environ.get("LUROTH_MAX_PARTS")
    return int(raw) if raw else DEFAULT_MAX_PARTS


def _guard(count: int) -> None:
    limit = max_parts()
    if count > limit:
        raise CoverOverflowError(
            f"depth too large: {count} parts exceeds the limit of {limit} (LUROTH_MAX_PARTS)")


@dataclass(frozen=True, order=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_fraction(self.lo), as_fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def to_json(self) -> list[str]:
        return [fraction_str(self.lo), fraction_str(self.hi)]

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _merge(parts: Iterable[Interval]) -> tuple[Interval, ...]:
    out: list[Interval] = []
    for p in sorted(parts):
        if out and p.lo <= out[-1].hi:
            if p.hi > out[-1].hi:
                out[-1] = Interval(out[-1].lo, p.hi)
        else:
            out.append(p)
    return tuple(out)


class IntervalUnion:
    """Finite union of closed intervals in normal form (sorted, separated)."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[Interval | Sequence] = ()):
        items = [p if isinstance(p, Interval) else Interval(*p) for p in parts]
        self.parts: tuple[Interval, ...] = _merge(items)

    @classmethod
    def of(cls, *pairs) -> "IntervalUnion":
        return cls(Interval(as_fraction(a), as_fraction(b)) for a, b in pairs)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalUnion) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __or__(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion(self.parts + other.parts)

    def __add__(self, other: "IntervalUnion") -> "IntervalUnion":
        return minkowski(self, other)

    @property
    def measure(self) -> Fraction:
        return sum((p.length for p in self.parts), Fraction(0))

    @property
    def hull(self) -> Interval:
        if not self.parts:
            raise ValueError("empty union has no hull")
        return Interval(self.parts[0].lo, self.parts[-1].hi)

    def contains(self, x) -> bool:
        x = as_fraction(x)
        return any(p.contains(x) for p in self.parts)

    def issubset(self, other: "IntervalUnion") -> bool:
        return all(any(q.lo <= p.lo and p.hi <= q.hi for q in other.parts) for p in self.parts)

    def gaps(self) -> list[tuple[Fraction, Fraction]]:
        """Open gaps between consecutive parts (inside the hull)."""
        return [(a.hi, b.lo) for a, b in zip(self.parts, self.parts[1:])]

    def to_json(self) -> list[list[str]]:
        return [p.to_json() for p in self.parts]

    @classmethod
    def from_json(cls, data) -> "IntervalUnion":
        return cls(Interval(Fraction(a), Fraction(b)) for a, b in data)

    def __repr__(self) -> str:
        return "IntervalUnion(" + " ∪ ".join(map(str, self.parts)) + ")"


def level_cover(source: DigitSet | Construction, n: int) -> IntervalUnion:
    """Union of the closed intervals left after ``n`` construction levels.

    A Band is covered through its stepwise complete construction; any
    :class:`Construction` may be passed directly.
    """
    if n < 0:
        raise ValueError("level must be >= 0")
    if isinstance(source, DigitSet):
        if source.kind != "band":
            raise LurothDomainError("level covers are defined for Band digit sets")
        source = scc(source.lo, source.hi)
    _guard(2 ** n)
    return IntervalUnion(Interval(lo, hi) for lo, hi in source.level(n))


def minkowski(u: IntervalUnion, v: IntervalUnion) -> IntervalUnion:
    _guard(len(u) * len(v))
    return IntervalUnion(a + b for a in u.parts for b in v.parts)


def nfold(u: IntervalUnion, n: int) -> IntervalUnion:
    """``u + u + ... + u`` (n copies), by repeated doubling."""
    if n < 1:
        raise ValueError("n must be >= 1")
    result = None
    power = u
    while n:
        if n & 1:
            result = power if result is None else minkowski(result, power)
        n >>= 1
        if n:
            power = minkowski(power, power)
    return result


def mod1(u: IntervalUnion) -> IntervalUnion:
    """Fold into [0, 1] with 1 identified with 0.

    Parts are closed; a part reaching 1 also contributes the point [0, 0].
    """
    out: list[Interval] = []
    one = Fraction(1)
    for p in u.parts:
        if p.length >= 1:
            return IntervalUnion([Interval(0, 1)])
        shift = math.floor(p.lo)
        a, b = p.lo - shift, p.hi - shift
        if b <= 1:
            out.append(Interval(a, b))
        else:
            out.append(Interval(a, one))
            out.append(Interval(0, b - 1))
        if b >= 1:
            out.append(Interval(0, 0))
    return IntervalUnion(out)


def gaps_mod1(u: IntervalUnion) -> list[tuple[Fraction, Fraction]]:
    """Maximal open arcs of the circle [0, 1) missed by ``mod1(u)``.

    A gap wrapping through 0 is reported as ``(hi, 1 + lo)``.
    """
    parts = mod1(u).parts
    if not parts:
        return [(Fraction(0), Fraction(1))]
    gaps = [(a.hi, b.lo) for a, b in zip(parts, parts[1:])]
    first, last = parts[0], parts[-1]
    # mod1 adds [0, 0] whenever a part reaches 1, so last.hi == 1 implies first.lo == 0
    if last.hi < 1:
        if first.lo == 0:
            gaps.append((last.hi, Fraction(1)))
        else:
            gaps.append((last.hi, 1 + first.lo))
    return gaps


@dataclass
class GapCertificate:
    """Gaps of a finite-level cover sum; any mod-1 gap proves non-congruence."""

    alphabets: tuple[str, str]
    depths: tuple[int, int]
    cover: IntervalUnion
    gaps: list[tuple[Fraction, Fraction]]
    hull_gaps: list[tuple[Fraction, Fraction]]
    max_parts: int = field(default_factory=max_parts)

    @property
    def certified(self) -> bool:
        return bool(self.gaps)

    def to_json(self) -> dict:
        return {
            "alphabets": list(self.alphabets),
            "depths": list(self.depths),
            "cover": self.cover.to_json(),
            "gaps_mod1": [[fraction_str(a), fraction_str(b)] for a, b in self.gaps],
            "hull_gaps": [[fraction_str(a), fraction_str(b)] for a, b in self.hull_gaps],
            "non_congruence_certified": self.certified,
            "build": {"max_parts": self.max_parts, "cover": "stepwise complete construction"},
        }


def certify_gap(ds_a: DigitSet, ds_b: DigitSet, depth: int | tuple[int, int]) -> GapCertificate:
    """Sum the level covers of two Bands and report every gap, mod 1 and in the hull."""
    da, db = (depth, depth) if isinstance(depth, int) else depth
    cover = minkowski(level_cover(ds_a, da), level_cover(ds_b, db))
    return GapCertificate((str(ds_a), str(ds_b)), (da, db), cover, gaps_mod1(cover), cover.gaps())


@dataclass
class MembershipCertificate:
    words: tuple[LurothWord, ...]
    values: tuple[Fraction, ...]
    total: Fraction
    target: Fraction

    @property
    def holds(self) -> bool:
        return self.total == self.target

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {
            "words": [w.to_json() for w in self.words],
            "values": [fraction_str(v) for v in self.values],
            "sum": fraction_str(self.total),
            "target": fraction_str(self.target),
            "holds": self.holds,
        }


def certify_member(words: Sequence[LurothWord], target,
                   alphabets: Sequence[DigitSet] | None = None) -> MembershipCertificate:
    """Check ``sum(eval_word(w)) == target`` exactly.

    With ``alphabets`` given (one per word), every digit is checked first.
    """
    target = as_fraction(target)
    if alphabets is not None:
        if len(alphabets) != len(words):
            raise ValueError("need one alphabet per word")
        for w, ds in zip(words, alphabets):
            for d in sorted(w.all_digits()):
                if d not in ds:
                    raise LurothDomainError(f"digit {d} of {w} is not in {ds}")
    values = tuple(eval_word(w) for w in words)
    return MembershipCertificate(tuple(words), values, sum(values, Fraction(0)), target)
