import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from luroth import criteria as K
from luroth.construction import middle_thirds_fixture, scc
from luroth.exact import DigitSet, LurothDomainError
from luroth.sumset import Interval, IntervalUnion, level_cover, minkowski, nfold

pos = st.builds(F, st.integers(1, 50), st.integers(1, 50))


def test_hall_middle_thirds():
    rep = K.hall_check(middle_thirds_fixture(), middle_thirds_fixture())
    assert rep.verdict == K.CERTIFIED_INTERVAL
    assert rep.interval == Interval(F(0), F(2))


def test_hall_l4_pair():
    rep = K.hall_check(scc(2, 4), scc(2, 4))
    assert rep.certified and rep.interval == Interval(F(6, 11), F(2))


def test_hall_fails_for_thin_sets():
    rep = K.hall_check(scc(2, 3), scc(2, 3))
    assert not rep.certified
    assert rep.failing and "gap <= shorter child" in rep.failing[0].name


def test_hlavka_pair_l3_l5():
    a, b = scc(2, 3), scc(2, 5)
    rep = K.hlavka_pair_check(F(1, 3), F(1, 6), Interval(F(2, 5), F(1)),
                              F(1, 7), F(9, 28), Interval(F(4, 19), F(1)))
    assert rep.certified and rep.interval == Interval(F(58, 95), F(2))
    assert a.root.lo + b.root.lo == F(58, 95)


def test_hlavka_multi_triple():
    l3 = (F(1, 3), F(1, 6), Interval(F(2, 5), F(1)))
    rep = K.hlavka_multi_check([l3, l3, l3])
    assert rep.certified and rep.interval == Interval(F(6, 5), F(3))
    with pytest.raises(ValueError):
        K.hlavka_multi_check([l3])


def test_astels_thin_and_thick():
    thin = K.astels_check([K.band_entry(2, 3)])
    assert thin.criterion == "Astels1" and thin.verdict == K.CERTIFIED_THICKNESS
    assert thin.thickness_bound == F(1, 2)
    thick = K.astels_check([K.band_entry(2, 3), K.band_entry(2, 5)])
    assert thick.certified and thick.interval == Interval(F(58, 95), F(2))


def test_band_approximation_helpers():
    assert K.diam_ray(3) == F(2, 5)
    assert K.small_gap_ray(3) == F(1, 20)
    assert all(c.holds for c in K.helper_conditions(3, K.choose_N(3, F(1, 100)), F(1, 100)))
    with pytest.raises(LurothDomainError):
        K.choose_N(1, F(1, 10))
    with pytest.raises(ValueError):
        K.choose_N(3, 0)


def test_theorem1_outcomes():
    assert K.theorem1_driver((3, 5)).criterion == "CongruenceBounded"
    rep = K.theorem1_driver((3, 3))
    assert rep.verdict == K.CERTIFIED_NON_CONGRUENCE
    gaps = rep.extras["gap_certificate"]["gaps_mod1"]
    assert ["1/2", "11/20"] in gaps and ["0/1", "1/10"] in gaps
    rep34 = K.theorem1_driver((3, 4))
    assert rep34.verdict == K.INCONCLUSIVE
    assert any("49/72" in n and "899/1320" in n for n in rep34.notes)


def test_theorem2_condition_names():
    rep = K.theorem2_driver([3, 4, 5, 9, 245])
    names = [c.name for c in rep.conditions]
    assert "total diameter >= 1" in names and "spread: k1 <= k2" in names
    assert [c.name for c in rep.failing] == ["spread: k5 <= k4^2+2k4+2"]
    assert K.theorem2_driver([2]).verdict == K.CERTIFIED_TRIVIAL
    assert K.theorem2_driver([3, 3]).verdict == K.CERTIFIED_NON_CONGRUENCE


def test_corollary_routes():
    assert K.corollary3_driver(2).verdict == K.CERTIFIED_TRIVIAL
    astels = K.corollary3_driver(3, 16)
    hlavka = K.corollary3_driver(3, route="hlavka")
    assert astels.interval == Interval(F(45, 239), F(6, 5))
    assert hlavka.interval == Interval(F(75, 649), F(6, 5))
    assert astels.interval.length == F(1209, 1195)
    assert hlavka.interval.length == F(3519, 3245)


def test_theorem4_and_optimality_small():
    rep = K.theorem4_driver(5)
    assert rep.criterion == "BoundedPlusRay" and rep.certified
    opt = K.optimality_check(4)
    assert opt.criterion == "TooFewCopies" and opt.certified


def test_report_json_is_deterministic():
    a = json.dumps(K.theorem1_driver((4, 4)).to_json(), sort_keys=True)
    b = json.dumps(K.theorem1_driver((4, 4)).to_json(), sort_keys=True)
    assert a == b
    rep = K.theorem1_driver((4, 4))
    assert rep.to_json()["interval"] == ["6/11", "2/1"]
    assert len(rep.inputs_digest) == 16
    assert "certified_interval" in rep.summary()


@pytest.mark.parametrize("sizes", [(3, 5), (4, 4), (3, 3, 3), (4, 6), (5, 5)])
def test_certified_interval_inside_every_cover_sum(sizes):
    rep = K.theorem1_driver(sizes)
    assert rep.certified
    covers = [level_cover(DigitSet.band(2, k), 4) for k in sizes]
    total = covers[0]
    for c in covers[1:]:
        total = minkowski(total, c)
    target = IntervalUnion([rep.interval])
    assert target.issubset(total)


@given(pos, pos, pos, pos, st.integers(1, 5), st.integers(1, 5))
def test_hlavka_pair_verdict_tracks_conditions(ga, ha, gb, hb, la, lb):
    ia, ib = Interval(F(0), F(la)), Interval(F(1), F(1 + lb))
    rep = K.hlavka_pair_check(ga, ha, ia, gb, hb, ib)
    expected = ga * gb <= ha * hb and ga * la <= lb and gb * lb <= la
    assert rep.certified == expected
    assert (rep.interval is not None) == expected


@settings(max_examples=50)
@given(st.lists(st.builds(F, st.integers(1, 30), st.integers(31, 200)), min_size=1, max_size=4))
def test_astels_thin_bound(gammas):
    s = sum(gammas)
    entries = [(g, Interval(F(0), F(1)), F(1, 10)) for g in gammas]
    rep = K.astels_check(entries)
    if s < 1:
        assert rep.thickness_bound == s / (1 - s)
        assert 0 <= rep.extras["dimension_lower_bound"] <= 1
    else:
        assert rep.certified and rep.interval == Interval(F(0), F(len(gammas)))


def test_optimality_oracle():
    # (k-1) copies of the hull of L>=k are already shorter than 1
    for k in range(3, 12):
        hull = IntervalUnion.of((0, K.diam_ray(k)))
        assert nfold(hull, k - 1).hull.length < 1
