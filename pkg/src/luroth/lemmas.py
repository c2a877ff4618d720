"""Exact sign checks behind the closed-form thickness of L_{N1,N2}.

The thickness of the stepwise complete construction is a minimum of two
ratio families along the spine, ``f0(x)`` (left child over gap) and
``f1(x)`` (right child over gap) at level ``x + 1``. The closed form says the
minimum is ``f0`` at the last level. The checks below verify, in exact
arithmetic at every integer level used, each inequality that argument needs,
together with the polynomial identities that make it work.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .construction import thickness_closed_form
from .exact import chevron_left as L
from .exact import chevron_right as R

__all__ = [
    "f0",
    "f1",
    "numerator_gap",
    "cubic_coefficients",
    "cubic",
    "cubic_scale",
    "P",
    "dP_dx",
    "LemmaReport",
    "lemma_sweep",
    "printed_small_thickness",
]


def f0(n1: int, n2: int, x: int) -> Fraction:
    """Left child over gap at spine level x+1."""
    m = n1 + x
    return (R(m + 1, n1) - L(n2, n2)) / (L(m, n2) - R(m + 1, n1))


def f1(n1: int, n2: int, x: int) -> Fraction:
    """Right child over gap at spine level x+1."""
    m = n1 + x
    return (R(m, n1) - L(m, n2)) / (L(m, n2) - R(m + 1, n1))


def numerator_gap(n1: int, n2: int, x) -> Fraction:
    """Difference of the numerators of f0 and f1 (same denominator)."""
    x = Fraction(x)
    m = n1 + x
    top = R(n1, n1)
    low = L(n2, n2)
    return 1 / (m + 1) * (1 + top / m) - low - (top - low) / (m * (m - 1))


def cubic_coefficients(n1: int, n2: int) -> tuple[int, int, int, int]:
    a, b = n1, n2
    c0 = (-a**5 * b + a**5 + a**4 * b**2 - 2 * a**4 - 2 * a**3 * b**2 + 5 * a**3 * b - a**3
          - a**2 * b + a**2 - a * b**2 - 2 * a * b + 4 * a + 2 * b**2 - 3 * b - 1)
    c1 = (-3 * a**4 * b + 3 * a**4 + 2 * a**3 * b**2 + a**3 * b - 5 * a**3 - 3 * a**2 * b**2
          + 8 * a**2 * b - 2 * a**2 - a * b**2 - a * b + 3 * a + b**2 - 3 * b + 1)
    c2 = (-3 * a**3 * b + 3 * a**3 + a**2 * b**2 + 2 * a**2 * b - 4 * a**2 - a * b**2
          + 4 * a * b - 2 * a - b**2 + b + 1)
    c3 = -a**2 * b + a**2 + a * b - a + b - 1
    return c0, c1, c2, c3


def cubic(n1: int, n2: int, x) -> Fraction:
    c0, c1, c2, c3 = cubic_coefficients(n1, n2)
    x = Fraction(x)
    return c0 + c1 * x + c2 * x**2 + c3 * x**3


def cubic_scale(n1: int, n2: int) -> int:
    return (n1 * n1 - n1 - 1) * (n2 * n2 - n2 - 1)


def _a(y):
    return -11 + 14 * y - 6 * y**2 + y**3


def _b(y):
    return 13 - 12 * y + 4 * y**2 - y**3


def _c(y):
    return 9 - 16 * y + 8 * y**2 - y**3


def P(x, y):
    return _a(y) * x**2 + _b(y) * x + _c(y)


def dP_dx(x, y):
    return 2 * _a(y) * x + _b(y)


def printed_small_thickness() -> dict[int, Fraction]:
    """Thickness values as printed for L<=3, L<=4, L<=5 (kept for comparison)."""
    return {3: Fraction(1, 7), 4: Fraction(4, 7), 5: Fraction(9, 13)}


@dataclass
class LemmaReport:
    checks: dict[str, int] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)

    def check(self, name: str, ok: bool, **detail) -> None:
        self.checks[name] = self.checks.get(name, 0) + 1
        if not ok:
            self.counterexamples.append({"check": name, **{k: str(v) for k, v in detail.items()}})

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def failures(self, name: str) -> list[dict]:
        return [c for c in self.counterexamples if c["check"] == name]

    def to_json(self) -> dict:
        return {"checks": dict(self.checks), "counterexamples": self.counterexamples,
                "discrepancies": self.discrepancies, "passed": self.passed}


def _sweep_pair(rep: LemmaReport, n1: int, n2: int) -> None:
    m = n2 - n1
    # f1 decreasing, and the monotone factor behind it; for N1 = 2 the
    # factor (1 - N1>) vanishes and f1 is constant, so strictness fails there
    for x in range(m - 1):
        a, b = f1(n1, n2, x), f1(n1, n2, x + 1)
        rep.check("f1 strictly decreasing", a > b, N1=n1, N2=n2, x=x, values=(a, b))
        rep.check("f1 non-increasing", a >= b, N1=n1, N2=n2, x=x)
        rep.check("(N1+x-1)/(N1+x+1) increasing",
                  (n1 + x - 1) * (n1 + x + 2) < (n1 + x) * (n1 + x + 1), N1=n1, N2=n2, x=x)
    # last level: f0 below f1
    last = numerator_gap(n1, n2, m - 1)
    rep.check("D(N2-N1-1) < 0", last < 0, N1=n1, N2=n2, value=last)
    closed = Fraction(4 * n1 - 2 * n1**2 - 4 * n2 + 2 * n1**2 * n2 + 2 * n2**2 - 2 * n1 * n2**2,
                      (n1**2 - n1 - 1) * n2 * (n2 - 1) * (n2 - 2) * (n2**2 - n2 - 1))
    rep.check("D(N2-N1-1) closed form", last == closed, N1=n1, N2=n2, value=last)
    rep.check("f0 < f1 at last level", f0(n1, n2, m - 1) < f1(n1, n2, m - 1), N1=n1, N2=n2)

    if n1 == 2 and n2 >= 6:
        lhs = ((R(3, 2) - L(n2, n2)) * (L(n2 - 1, n2) - R(n2, 2))
               - (R(n2, 2) - L(n2, n2)) * (L(2, n2) - R(3, 2)))
        rep.check("f0(0) > f0(N2-3)", f0(2, n2, 0) > f0(2, n2, n2 - 3), N2=n2)
        rep.check("cross-multiplied difference closed form",
                  lhs == Fraction(n2 - 3, 2 * (n2 - 2) * (n2**2 - n2 - 1) ** 2), N2=n2, value=lhs)
        for x in range(1, n2 - 3):
            rep.check("D(x) >= 0 for N1 = 2", numerator_gap(2, n2, x) >= 0, N2=n2, x=x)
            rep.check("f0 >= f1 for N1 = 2", f0(2, n2, x) >= f1(2, n2, x), N2=n2, x=x)

    if n1 >= 3 and n2 >= n1 + 2:
        c0, c1, c2, c3 = cubic_coefficients(n1, n2)
        rep.check("c3 < 0", c3 < 0, N1=n1, N2=n2, c3=c3)
        rep.check("c3 factorisation", c3 == -(n1**2 - n1 - 1) * (n2 - 1), N1=n1, N2=n2)
        e_neg = cubic(n1, n2, -n1)
        rep.check("E(-N1) < 0", e_neg < 0, N1=n1, N2=n2, value=e_neg)
        rep.check("E(-N1) expansion", e_neg == (-1 + 3 * n1 - n1**2) + (-3 + n1 + n1**2) * n2
                  + (2 - 2 * n1) * n2**2, N1=n1, N2=n2)
        rep.check("E(0) > 0", c0 > 0, N1=n1, N2=n2, value=c0)
        e_top = cubic(n1, n2, m - 2)
        rep.check("E(N2-N1-2) > 0", e_top > 0, N1=n1, N2=n2, value=e_top)
        rep.check("E(N2-N1-2) = P(N1, N2)", e_top == P(n1, n2), N1=n1, N2=n2)
        scale = cubic_scale(n1, n2)
        for x in range(0, m):
            d = numerator_gap(n1, n2, x)
            e = cubic(n1, n2, x)
            rep.check("D * C * (N1+x-1)(N1+x)(N1+x+1) = E",
                      d * scale * (n1 + x - 1) * (n1 + x) * (n1 + x + 1) == e, N1=n1, N2=n2, x=x)
            if x <= m - 2:
                rep.check("f0 >= f1 for N1 >= 3", f0(n1, n2, x) >= f1(n1, n2, x), N1=n1, N2=n2, x=x)


def lemma_sweep(n1_range=range(2, 21), n2_max: int = 40) -> LemmaReport:
    """Run every sign check for all N1 in ``n1_range`` and N1 < N2 <= n2_max."""
    rep = LemmaReport()
    for n1 in n1_range:
        for n2 in range(n1 + 1, n2_max + 1):
            _sweep_pair(rep, n1, n2)
    for y in range(5, n2_max + 1):
        rep.check("P(3,y) > 0", P(3, y) > 0, y=y)
        rep.check("P(3,y) factorisation", P(3, y) == (y - 3) * (5 * y * y - 19 * y + 17), y=y)
        rep.check("dP/dx(3,y) > 0", dP_dx(3, y) > 0, y=y)
        rep.check("dP/dx(3,y) expansion", dP_dx(3, y) == 5 * y**3 - 32 * y**2 + 72 * y - 53, y=y)
        rep.check("a(y) >= 34", _a(y) >= 34, y=y)
    for n2, printed in printed_small_thickness().items():
        actual = thickness_closed_form(2, n2)
        if actual != printed:
            rep.discrepancies.append({"quantity": f"tau<={n2}", "printed": str(printed),
                                      "definitional": str(actual)})
    return rep
