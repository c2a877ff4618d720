"""Hausdorff dimension of Lüroth sets through the Moran equation.

For a finite alphabet A the dimension is the root s of
``sum_{d in A} (d(d-1))^(-s) = 1``. The left side is strictly decreasing in
s, so bisection with a sign-checked bracket certifies the root.

Rays L_{>=k} are handled through bands L_{k,N}. Large bands are never
enumerated: the digits above a cut-off M are replaced by an integral that
bounds their contribution from below, which keeps the result a certified
lower bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import DigitSet, LurothDomainError, fraction_str

__all__ = [
    "DimensionResult",
    "moran_sum",
    "moran_sum_s1",
    "moran_solve",
    "ray_lower_bound",
    "ray_sup_search",
    "good_bound",
    "good_bound_internals",
    "sumset_dim",
    "dim_band_k_3k",
    "multiplicatively_independent",
]

MAX_ITER = 200
HEAD = 2 ** 14          # digits summed term by term before the integral tail
DIRECT_LIMIT = 2 ** 22  # largest alphabet enumerated explicitly
EPS = np.finfo(float).eps


@dataclass
class DimensionResult:
    value: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    exact_s1: Fraction | None = None
    method: str = "bisection"
    extras: dict = field(default_factory=dict)

    @property
    def certified_lower(self) -> float:
        """Left end of the bracket: the Moran sum there is certified to exceed 1."""
        return self.bracket[0]

    def to_json(self) -> dict:
        return {
            "value": repr(self.value),
            "bracket": [repr(self.bracket[0]), repr(self.bracket[1])],
            "residual": repr(self.residual),
            "iterations": self.iterations,
            "exact_s1": fraction_str(self.exact_s1) if self.exact_s1 is not None else None,
            "method": self.method,
            "log_base": "natural",
            "extras": {k: (repr(v) if isinstance(v, float) else v) for k, v in self.extras.items()},
        }


def _check_tol(tol: float) -> float:
    if not (2.0 ** -52 <= tol <= 1e-3):
        raise ValueError(f"tolerance must lie in [2^-52, 1e-3], got {tol}")
    return tol


def _digits(ds: DigitSet) -> np.ndarray:
    if not ds.is_finite:
        raise LurothDomainError("Moran sums need a finite alphabet; use ray_lower_bound")
    if ds.kind == "band" and ds.hi - ds.lo + 1 > DIRECT_LIMIT:
        raise LurothDomainError("band too large to enumerate; use ray_lower_bound")
    return np.asarray(ds.digits, dtype=np.float64)


def _log_weights(digits: np.ndarray) -> np.ndarray:
    return np.log(digits) + np.log(digits - 1.0)


def moran_sum(ds: DigitSet, s: float) -> float:
    """sum (d(d-1))^(-s) in binary64 with compensated summation."""
    return math.fsum(np.exp(-s * _log_weights(_digits(ds))))


def moran_sum_s1(ds: DigitSet) -> Fraction:
    """Exact Moran sum at s = 1; telescopes to 1/(N1-1) - 1/N2 on a band."""
    if ds.kind == "band":
        return Fraction(1, ds.lo - 1) - Fraction(1, ds.hi)
    if ds.kind == "finite":
        return sum((Fraction(1, d * (d - 1)) for d in ds.digits), Fraction(0))
    return Fraction(1, ds.lo - 1)


def _bisect(fun, count: int, tol: float) -> tuple[float, float, int]:
    """Root bracket of a decreasing ``fun(s) - 1`` on [0, 1], margin-checked."""
    margin = 10 * EPS * max(count, 1)
    lo, hi = 0.0, 1.0
    if not (fun(lo) > 1 + margin and fun(hi) < 1 - margin):
        raise ArithmeticError("Moran sum does not change sign on [0, 1]")
    it = 0
    while hi - lo > tol and it < MAX_ITER:
        mid = 0.5 * (lo + hi)
        if fun(mid) > 1:
            lo = mid
        else:
            hi = mid
        it += 1
    # widen until both ends clear the rounding margin
    step = tol / 8
    for _ in range(4):
        if fun(lo) > 1 + margin:
            break
        lo = max(0.0, lo - step)
    for _ in range(4):
        if fun(hi) < 1 - margin:
            break
        hi = min(1.0, hi + step)
    if not (fun(lo) > 1 + margin and fun(hi) < 1 - margin):
        raise ArithmeticError("could not certify the bracket above rounding error")
    return lo, hi, it


def moran_solve(ds: DigitSet, tolerance: float = 1e-9) -> DimensionResult:
    """Dimension of L_A for a finite alphabet A."""
    _check_tol(tolerance)
    weights = _log_weights(_digits(ds))
    if len(weights) == 0:
        raise LurothDomainError("empty alphabet")
    if len(weights) == 1:
        return DimensionResult(0.0, (0.0, 0.0), 0.0, 0, moran_sum_s1(ds), "singleton")

    def fun(s: float) -> float:
        return math.fsum(np.exp(-s * weights))

    lo, hi, it = _bisect(fun, len(weights), tolerance)
    value = 0.5 * (lo + hi)
    exact = moran_sum_s1(ds)
    result = DimensionResult(value, (lo, hi), abs(fun(value) - 1), it, exact)
    result.extras["s1_float"] = fun(1.0)
    return result


def _tail_integral(a: float, b: float, s: float) -> float:
    """Integral of x^(-2s) over [a, b]; b = inf allowed when s > 1/2."""
    e = 1.0 - 2.0 * s
    if math.isinf(b):
        if e >= 0:
            return math.inf
        return a ** e / -e
    if e == 0:
        return math.log(b / a)
    # a^e * expm1(e log(b/a)) / e keeps accuracy for e near 0
    return a ** e * math.expm1(e * math.log(b / a)) / e


def _ray_lower_sum(k: int, n: float, head: int = HEAD):
    """Lower bound for the Moran sum of L_{k,N}, as a function of s.

    Digits k..M are summed exactly; for d > M, (d(d-1))^(-s) > (d-1/2)^(-2s),
    which dominates the integral of x^(-2s) over [d-1/2, d+1/2].
    """
    m = min(int(n), k + head) if not math.isinf(n) else k + head
    weights = _log_weights(np.arange(k, m + 1, dtype=np.float64))

    def fun(s: float) -> float:
        total = math.fsum(np.exp(-s * weights))
        if n > m:
            total += _tail_integral(m + 0.5, n + 0.5, s)
        return total

    return fun, len(weights)


def ray_lower_bound(k: int, N: int, tolerance: float = 1e-9) -> DimensionResult:
    """Certified lower bound for dim L_{k,N}, hence for dim L_{>=k}."""
    _check_tol(tolerance)
    if not 2 <= k < N:
        raise LurothDomainError(f"need 2 <= k < N, got ({k}, {N})")
    if N - k + 1 <= HEAD:
        res = moran_solve(DigitSet.band(k, N), tolerance)
        res.method = "exact band"
        return res
    fun, count = _ray_lower_sum(k, N)
    lo, hi, it = _bisect(fun, count, tolerance)
    value = 0.5 * (lo + hi)
    return DimensionResult(value, (lo, hi), abs(fun(value) - 1), it,
                           Fraction(1, k - 1) - Fraction(1, N), "head sum + integral tail")


def ray_sup_search(k: int, tolerance: float = 1e-9, n_start: int | None = None,
                   n_max: float = 1e18) -> tuple[DimensionResult, int]:
    """Double N until the certified lower bound gains less than ``tolerance``."""
    n = n_start or 2 * k
    best = ray_lower_bound(k, n, tolerance)
    while 2 * n <= n_max:
        nxt = ray_lower_bound(k, 2 * n, tolerance)
        gain = nxt.certified_lower - best.certified_lower
        n, best = 2 * n, nxt
        if gain < tolerance:
            break
    best.extras["N"] = n
    return best, n


def good_bound(k: int) -> float:
    """1/2 + 1/(2 log max{16, k}), natural logarithm."""
    if k < 2:
        raise LurothDomainError("k must be >= 2")
    return 0.5 + 1.0 / (2.0 * math.log(max(16, k)))


def good_bound_internals(k: int, epsilon: float = 1e-3) -> dict:
    """x_k with k^(-x_k) = x_k, s_k = (x_k+1)/2, the cut-off N, and signs of F."""
    if k < 16:
        raise LurothDomainError("the bound is proved for k >= 16")
    lo, hi = 0.0, 1.0
    for _ in range(MAX_ITER):
        mid = 0.5 * (lo + hi)
        if k ** -mid - mid > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    x_k = 0.5 * (lo + hi)
    if not 0 < epsilon < x_k:
        raise ValueError(f"epsilon must lie in (0, x_k) = (0, {x_k})")
    n = max(k + 1, math.ceil((x_k * (k ** epsilon - 1)) ** (-1.0 / (x_k - epsilon))))

    def F(x: float) -> float:
        return k ** -x - n ** -x - x

    return {
        "k": k,
        "x_k": x_k,
        "s_k": (x_k + 1) / 2,
        "epsilon": epsilon,
        "N": n,
        "F_at_x_k_minus_eps": F(x_k - epsilon),
        "F_at_x_k": F(x_k),
        "sign_change": F(x_k - epsilon) > 0 > F(x_k),
        "good_bound": good_bound(k),
    }


def multiplicatively_independent(m: int, n: int) -> bool:
    """True iff log m / log n is irrational, i.e. m, n are not powers of one integer."""
    if m < 2 or n < 2:
        raise ValueError("need integers >= 2")
    while m != n:
        if m < n:
            m, n = n, m
        if m % n:
            return True
        m //= n
    return False


def sumset_dim(ds_a: DigitSet, ds_b: DigitSet, tolerance: float = 1e-9) -> DimensionResult:
    """dim(L_A + L_B) = min{1, dim L_A + dim L_B} for finite alphabets."""
    ra, rb = moran_solve(ds_a, tolerance), moran_solve(ds_b, tolerance)
    value = min(1.0, ra.value + rb.value)
    lo = min(1.0, ra.bracket[0] + rb.bracket[0])
    hi = min(1.0, ra.bracket[1] + rb.bracket[1])
    result = DimensionResult(value, (lo, hi), 0.0, ra.iterations + rb.iterations, None, "sum rule")
    da, db = ds_a.digits, ds_b.digits
    if len(da) == 1 or len(db) == 1:
        result.extras["route"] = "singleton"
    else:
        pair = next((a, b) for a in da for b in db if a != b)
        result.extras["route"] = "irrational contraction ratio"
        result.extras["witness"] = list(pair)
        result.extras["independent"] = multiplicatively_independent(
            pair[0] * (pair[0] - 1), pair[1] * (pair[1] - 1))
    return result


def _e_upper() -> Fraction:
    """Rational upper bound for e: sum_{n<=12} 1/n! plus a geometric remainder."""
    total, term = Fraction(0), Fraction(1)
    for n in range(13):
        if n:
            term /= n
        total += term
    return total + term / 12     # remainder < term * sum (1/13)^j < term / 12


def dim_band_k_3k(k: int, tolerance: float = 1e-9) -> DimensionResult:
    """dim L_{k,3k} > 1/2 with both endpoint checks of the sign change."""
    if k < 2:
        raise LurothDomainError("k must be >= 2")
    s1 = moran_sum_s1(DigitSet.band(k, 3 * k))
    closed = Fraction(2 * k + 1, 3 * k * (k - 1))
    # sqrt(d(d-1)) < d, and sum_{d=k}^{3k} 1/d > log((3k+1)/k) > log 3 > 1 since 3 > e
    e_up = _e_upper()
    half_sum = math.fsum(np.exp(-0.5 * _log_weights(np.arange(k, 3 * k + 1, dtype=np.float64))))
    result = moran_solve(DigitSet.band(k, 3 * k), tolerance)
    result.extras.update({
        "s1_sum_equals_closed_form": s1 == closed,
        "s1_sum_below_one": s1 < 1,
        "e_upper_bound": fraction_str(e_up),
        "three_exceeds_e": e_up < 3,
        "half_sum_float": half_sum,
        "half_sum_exceeds_one": half_sum > 1,
        "above_half": result.certified_lower > 0.5,
    })
    return result
