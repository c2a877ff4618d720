from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from luroth.construction import middle_thirds_fixture
from luroth.exact import DigitSet, LurothDomainError, LurothWord
from luroth.sumset import (
    CoverOverflowError,
    Interval,
    IntervalUnion,
    certify_gap,
    certify_member,
    gaps_mod1,
    level_cover,
    max_parts,
    minkowski,
    mod1,
    nfold,
)

B23, B24 = DigitSet.band(2, 3), DigitSet.band(2, 4)

rationals = st.builds(F, st.integers(-40, 80), st.integers(1, 12))


@st.composite
def unions(draw):
    pts = sorted(draw(st.lists(rationals, min_size=2, max_size=8)))
    if len(pts) % 2:
        pts = pts[:-1]
    return IntervalUnion.of(*zip(pts[::2], pts[1::2]))


def test_normal_form_merges_touching_parts():
    u = IntervalUnion.of((0, 1), (1, 2), (F(5, 2), 3), (F(1, 2), F(3, 4)))
    assert u.parts == (Interval(F(0), F(2)), Interval(F(5, 2), F(3)))
    assert u.measure == F(5, 2)
    assert u.gaps() == [(F(2), F(5, 2))]
    assert IntervalUnion.from_json(u.to_json()) == u


def test_level_one_cover_and_sum():
    assert level_cover(B23, 1) == IntervalUnion.of((F(2, 5), F(1, 2)), (F(7, 10), 1))
    s = minkowski(level_cover(B23, 1), level_cover(B23, 1))
    assert s == IntervalUnion.of((F(4, 5), 1), (F(11, 10), 2))


def test_gap_certificates():
    assert certify_gap(B23, B23, 1).gaps == [(F(0), F(1, 10))]
    cert = certify_gap(B23, B23, 2)
    assert cert.gaps == [(F(0), F(1, 10)), (F(1, 2), F(11, 20))]
    assert cert.certified
    assert cert.to_json()["gaps_mod1"][1] == ["1/2", "11/20"]


def test_mixed_depth_cover():
    cert = certify_gap(B23, B24, (3, 4))
    assert cert.cover == IntervalUnion.of((F(37, 55), F(49, 72)), (F(899, 1320), 2))
    assert cert.hull_gaps == [(F(49, 72), F(899, 1320))]
    assert not cert.certified


def test_no_gaps_for_l4_plus_l4():
    for d in range(1, 7):
        assert not certify_gap(B24, B24, d).gaps


def test_nfold_and_mod1():
    assert nfold(IntervalUnion.of((F(2, 5), 1)), 3) == IntervalUnion.of((F(6, 5), 3))
    assert mod1(IntervalUnion.of((F(11, 10), 2))) == IntervalUnion.of((0, 0), (F(1, 10), 1))
    assert gaps_mod1(IntervalUnion.of((F(11, 10), 2))) == [(F(0), F(1, 10))]
    # a wrap-around gap is reported past 1
    assert gaps_mod1(IntervalUnion.of((F(1, 5), F(3, 5)))) == [(F(3, 5), F(6, 5))]
    assert mod1(IntervalUnion.of((F(1, 3), F(7, 3)))) == IntervalUnion.of((0, 1))


def test_membership():
    seven = LurothWord.periodic(7)
    cert = certify_member([seven, seven], F(12, 41), [DigitSet.ray(3)] * 2)
    assert cert.holds and cert.to_json()["sum"] == "12/41"
    assert not certify_member([seven, seven], F(1, 3))
    with pytest.raises(LurothDomainError):
        certify_member([LurothWord.periodic(5)], F(1, 4), [B23])


def test_overflow_guard(monkeypatch):
    monkeypatch.setenv("LUROTH_MAX_PARTS", "64")
    assert max_parts() == 64
    with pytest.raises(CoverOverflowError, match="depth too large"):
        level_cover(B23, 7)
    with pytest.raises(CoverOverflowError):
        certify_gap(B23, B23, 4)


def test_cover_of_construction():
    assert level_cover(middle_thirds_fixture(), 2).measure == F(4, 9)


@settings(max_examples=500, deadline=None)
@given(unions(), unions(), st.lists(rationals, max_size=10))
def test_minkowski_matches_pairwise_oracle(u, v, extra):
    s = minkowski(u, v)
    probes = set(extra)
    for a in u:
        for b in v:
            probes |= {a.lo + b.lo, a.hi + b.hi, (a.lo + b.hi + a.hi + b.lo) / 2}
    for t in probes:
        assert s.contains(t) == any(a.lo + b.lo <= t <= a.hi + b.hi for a in u for b in v)
    assert s == minkowski(v, u)


@given(unions(), unions())
def test_union_is_commutative_superset(u, v):
    w = u | v
    assert w == v | u
    assert u.issubset(w) and v.issubset(w)


@given(unions())
def test_mod1_covers_fractional_parts(u):
    folded = mod1(u)
    for p in u:
        for t in (p.lo, p.hi, (p.lo + p.hi) / 2):
            frac = t - (t.numerator // t.denominator)
            assert folded.contains(frac)
    arcs = sum(b - a for a, b in gaps_mod1(u))
    assert arcs + folded.measure == 1


@settings(max_examples=20, deadline=None)
@given(st.integers(3, 12).flatmap(lambda n2: st.tuples(st.integers(2, n2 - 1), st.just(n2))),
       st.integers(1, 6))
def test_cover_nesting(pair, n):
    ds = DigitSet.band(*pair)
    assert level_cover(ds, n).issubset(level_cover(ds, n - 1))
