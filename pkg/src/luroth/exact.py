"""Exact Lüroth arithmetic: words, the Lüroth map, and chevron endpoints.

Every value here is a :class:`fractions.Fraction`; nothing in this module
touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    "LurothDomainError",
    "LurothWord",
    "DigitSet",
    "as_fraction",
    "fraction_str",
    "periodic_value",
    "eval_word",
    "digit_of",
    "luroth_map",
    "expand",
    "chevron_left",
    "chevron_right",
]


class LurothDomainError(ValueError):
    """Raised when an argument lies outside the domain of a Lüroth operation."""


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction (never floats)."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction or 'p/q' string")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def fraction_str(x: Fraction) -> str:
    """Render as ``p/q`` with an explicit denominator, e.g. ``2/1``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _check_digits(digits: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(d) for d in digits)
    for d in out:
        if d < 2:
            raise LurothDomainError(f"Lüroth digits must be >= 2, got {d}")
    return out


def _minimal_period(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for p in range(1, n + 1):
        if n % p == 0 and period[:p] * (n // p) == period:
            return period[:p]
    return period


@dataclass(frozen=True)
class LurothWord:
    """An eventually periodic digit string ``preperiod + period^inf``.

    The constructor canonicalises: the period is made primitive and any tail
    of the preperiod that is absorbed by rotating the period is moved into it,
    so two words are equal iff they denote the same number.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        pre = list(_check_digits(self.preperiod))
        per = _check_digits(self.period)
        if not per:
            raise LurothDomainError("period must be non-empty")
        per = _minimal_period(per)
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = (per[-1],) + per[:-1]
        object.__setattr__(self, "preperiod", tuple(pre))
        object.__setattr__(self, "period", per)

    @classmethod
    def periodic(cls, *digits: int) -> "LurothWord":
        return cls((), tuple(digits))

    def digits(self) -> Iterator[int]:
        """Infinite iterator over the digits."""
        yield from self.preperiod
        while True:
            yield from self.period

    def shift(self) -> "LurothWord":
        """Drop the first digit (the symbolic action of the Lüroth map)."""
        if self.preperiod:
            return LurothWord(self.preperiod[1:], self.period)
        return LurothWord((), self.period[1:] + self.period[:1])

    def all_digits(self) -> set[int]:
        return set(self.preperiod) | set(self.period)

    def value(self) -> Fraction:
        return eval_word(self)

    def to_json(self) -> dict:
        return {"preperiod": list(self.preperiod), "period": list(self.period)}

    @classmethod
    def from_json(cls, obj: dict) -> "LurothWord":
        return cls(tuple(obj.get("preperiod", ())), tuple(obj["period"]))

    def __str__(self) -> str:
        pre = ",".join(map(str, self.preperiod))
        per = ",".join(map(str, self.period))
        return f"[{pre + ';' if pre else ''}({per})]"


def _block(digits: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Return (partial sum, scale) of a finite block of digits.

    For ``x = [digits..., y]`` we have ``x = partial + scale * y``.
    """
    total = Fraction(0)
    scale = Fraction(1)
    for d in digits:
        total += scale / d
        scale /= d * (d - 1)
    return total, scale


def periodic_value(d: int) -> Fraction:
    """Value of the constant word ``[d, d, d, ...]``, i.e. (d-1)/(d(d-1)-1)."""
    if d < 2:
        raise LurothDomainError(f"digit must be >= 2, got {d}")
    return Fraction(d - 1, d * (d - 1) - 1)


def eval_word(w: LurothWord) -> Fraction:
    """Exact value of an eventually periodic Lüroth word.

    The period contributes a geometric series with ratio ``1/prod d(d-1)``,
    so ``y = A / (1 - B)`` for the repeating tail and the preperiod is an
    affine map applied on top.
    """
    a, b = _block(w.period)
    tail = a / (1 - b)
    p, q = _block(w.preperiod)
    return p + q * tail


def _check_unit(x: Fraction) -> Fraction:
    x = as_fraction(x)
    if not (0 < x <= 1):
        raise LurothDomainError(f"expected 0 < x <= 1, got {x}")
    return x


def digit_of(x) -> int:
    """First Lüroth digit: the unique d >= 2 with 1/d < x <= 1/(d-1)."""
    x = _check_unit(x)
    # floor(1/x) computed on integers, no float rounding at x = 1/(d-1)
    return x.denominator // x.numerator + 1


def luroth_map(x) -> Fraction:
    """T(x) = (d-1)(d x - 1) where d = digit_of(x)."""
    x = _check_unit(x)
    d = digit_of(x)
    return (d - 1) * (d * x - 1)


def expand(x) -> LurothWord:
    """Canonical Lüroth word of a rational in (0, 1].

    T sends p/q to a rational whose denominator divides q, so the orbit lives
    in a finite set and must cycle; the first repeated state splits the
    digit string into preperiod and period.
    """
    x = _check_unit(x)
    seen: dict[Fraction, int] = {}
    digits: list[int] = []
    while x not in seen:
        seen[x] = len(digits)
        digits.append(digit_of(x))
        x = luroth_map(x)
    start = seen[x]
    return LurothWord(tuple(digits[:start]), tuple(digits[start:]))


def chevron_left(d: int, n2: int) -> Fraction:
    """``<d`` = [d, n2, n2, ...]: smallest element of L_{N1,N2} with first digit d."""
    if d < 2 or n2 < 2:
        raise LurothDomainError("chevron digits must be >= 2")
    return Fraction(1, d) + Fraction(1, d * (d - 1)) * periodic_value(n2)


def chevron_right(d: int, n1: int) -> Fraction:
    """``d>`` = [d, n1, n1, ...]: largest element of L_{N1,N2} with first digit d."""
    if d < 2 or n1 < 2:
        raise LurothDomainError("chevron digits must be >= 2")
    return Fraction(1, d) + Fraction(1, d * (d - 1)) * periodic_value(n1)


@dataclass(frozen=True)
class DigitSet:
    """An alphabet of Lüroth digits.

    ``kind`` is ``"finite"`` (explicit digits), ``"band"`` ({lo, ..., hi})
    or ``"ray"`` ({lo, lo+1, ...}). Use the classmethod constructors.
    """

    kind: str
    lo: int
    hi: int | None = None
    explicit: tuple[int, ...] = ()

    @classmethod
    def finite(cls, digits: Iterable[int]) -> "DigitSet":
        ds = tuple(sorted(set(_check_digits(digits))))
        if not ds:
            raise LurothDomainError("finite digit set must be non-empty")
        return cls("finite", ds[0], ds[-1], ds)

    @classmethod
    def band(cls, n1: int, n2: int) -> "DigitSet":
        _check_digits((n1, n2))
        if not n1 < n2:
            raise LurothDomainError(f"band needs N1 < N2, got ({n1}, {n2})")
        return cls("band", n1, n2)

    @classmethod
    def ray(cls, k: int) -> "DigitSet":
        _check_digits((k,))
        return cls("ray", k, None)

    @classmethod
    def parse(cls, text: str) -> "DigitSet":
        """Parse ``"2,3,7"``, ``"2..5"`` (band) or ``"3.."`` (ray)."""
        text = text.strip()
        if ".." in text:
            lo, _, hi = text.partition("..")
            if not hi.strip():
                return cls.ray(int(lo))
            return cls.band(int(lo), int(hi))
        return cls.finite(int(t) for t in text.split(",") if t.strip())

    @property
    def is_finite(self) -> bool:
        return self.kind != "ray"

    @property
    def digits(self) -> tuple[int, ...]:
        if self.kind == "finite":
            return self.explicit
        if self.kind == "band":
            return tuple(range(self.lo, self.hi + 1))
        raise LurothDomainError("a ray has infinitely many digits")

    def __contains__(self, d: int) -> bool:
        if self.kind == "finite":
            return d in self.explicit
        return d >= self.lo and (self.hi is None or d <= self.hi)

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        if self.kind == "finite":
            return "{" + ",".join(map(str, self.explicit)) + "}"
        if self.kind == "band":
            return f"{self.lo}..{self.hi}"
        return f"{self.lo}.."
