import math
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from luroth import dimension as Dm
from luroth.exact import DigitSet, LurothDomainError

mpmath.mp.dps = 40


def mp_moran(digits, s):
    return mpmath.fsum(mpmath.power(d * (d - 1), -s) for d in digits)


def mp_root(digits):
    return mpmath.findroot(lambda s: mp_moran(digits, s) - 1, (mpmath.mpf("0.01"), mpmath.mpf(1)),
                           solver="bisect", tol=mpmath.mpf(10) ** -30)


def test_l3_dimension_against_mp_oracle():
    res = Dm.moran_solve(DigitSet.band(2, 3))
    assert abs(res.value - 0.600967) < 1e-5
    root = mp_root([2, 3])
    lo, hi = res.bracket
    assert lo <= root <= hi
    assert res.exact_s1 == F(2, 3)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(2, 60), min_size=2, max_size=8, unique=True))
def test_bracket_contains_mp_root(digits):
    ds = DigitSet.finite(digits)
    # the full alphabet telescopes to 1, so every finite one sums below 1 at s = 1
    assert Dm.moran_sum_s1(ds) < 1
    res = Dm.moran_solve(ds, 1e-10)
    lo, hi = res.bracket
    root = mp_root(sorted(digits))
    assert lo <= root <= hi and hi - lo < 2e-10


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 40).flatmap(lambda a: st.tuples(st.just(a), st.integers(a + 1, 400))))
def test_s1_sum_telescopes(pair):
    ds = DigitSet.band(*pair)
    assert Dm.moran_sum_s1(ds) == sum(F(1, d * (d - 1)) for d in ds.digits)
    assert abs(Dm.moran_sum(ds, 1.0) - float(Dm.moran_sum_s1(ds))) < 1e-12


def test_ray_bound_is_certified_by_mp():
    # head-plus-tail regime: the true band sum at the reported lower end exceeds 1
    res = Dm.ray_lower_bound(3, 40000)
    assert res.method == "head sum + integral tail"
    lo = mpmath.mpf(res.certified_lower)
    assert mp_moran(range(3, 40001), lo) > 1
    exact_band = Dm.ray_lower_bound(3, 2000)
    assert exact_band.method == "exact band"
    assert mp_moran(range(3, 2001), mpmath.mpf(exact_band.certified_lower)) > 1


def test_ray_bounds_monotone_in_n():
    vals = [Dm.ray_lower_bound(4, n).certified_lower for n in (10, 100, 10 ** 4, 10 ** 6)]
    assert vals == sorted(vals)


def test_ray_search_beats_published_k3():
    best, n = Dm.ray_sup_search(3)
    assert best.certified_lower > 0.8209 and n > 10 ** 9


def test_tail_integral_closed_forms():
    assert math.isclose(Dm._tail_integral(2.0, 8.0, 0.5), math.log(4.0))
    assert math.isclose(Dm._tail_integral(1.0, math.inf, 1.0), 1.0)
    assert Dm._tail_integral(1.0, math.inf, 0.5) == math.inf
    assert math.isclose(Dm._tail_integral(1.0, 2.0, 1.0), 0.5)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Dm.moran_solve(DigitSet.band(2, 3), 1e-2)
    with pytest.raises(ValueError):
        Dm.moran_solve(DigitSet.band(2, 3), 1e-17)
    with pytest.raises(LurothDomainError):
        Dm.moran_solve(DigitSet.ray(3))
    single = Dm.moran_solve(DigitSet.finite([5]))
    assert single.value == 0.0


def test_good_bound():
    assert math.isclose(Dm.good_bound(16), 0.680337, abs_tol=1e-6)
    assert Dm.good_bound(2) == Dm.good_bound(16)
    info = Dm.good_bound_internals(16, 0.01)
    assert info["sign_change"] and math.isclose(info["x_k"], 0.364250, abs_tol=1e-6)
    assert info["N"] == 413621
    assert math.isclose(16 ** -info["x_k"], info["x_k"], rel_tol=1e-12)
    with pytest.raises(LurothDomainError):
        Dm.good_bound_internals(10)


def test_multiplicative_independence():
    assert not Dm.multiplicatively_independent(4, 8)
    assert not Dm.multiplicatively_independent(9, 27)
    assert Dm.multiplicatively_independent(2, 6)
    assert Dm.multiplicatively_independent(12, 18)


def test_sumset_dim():
    res = Dm.sumset_dim(DigitSet.finite([2, 3]), DigitSet.finite([2, 3]))
    assert res.value == 1.0 and res.extras["independent"]
    half = Dm.sumset_dim(DigitSet.finite([5, 6]), DigitSet.finite([7, 8]))
    assert half.value < 1


def test_band_k_3k():
    for k in (2, 10, 100, 1000):
        res = Dm.dim_band_k_3k(k)
        assert res.certified_lower > 0.5
        assert all(v is True for v in res.extras.values() if isinstance(v, bool))
