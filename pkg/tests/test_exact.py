from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from luroth.exact import (
    DigitSet,
    LurothDomainError,
    LurothWord,
    as_fraction,
    chevron_left,
    chevron_right,
    digit_of,
    eval_word,
    expand,
    fraction_str,
    luroth_map,
    periodic_value,
)


def _series(digits):
    """Independent oracle: the Lüroth series summed term by term."""
    total, weight = F(0), F(1)
    for d in digits:
        total += weight / d
        weight /= d * (d - 1)
    return total, weight


fractions_01 = st.builds(lambda q, p: F(p % q + 1, q), st.integers(1, 400), st.integers(0, 10 ** 6))


def test_published_values():
    assert eval_word(LurothWord((3,), (2,))) == F(1, 2)
    assert eval_word(LurothWord((3, 3), (2,))) == F(5, 12)
    assert eval_word(LurothWord.periodic(2)) == 1


def test_expand_examples():
    assert expand(F(1, 2)) == LurothWord((3,), (2,))
    assert expand(F(1)) == LurothWord.periodic(2)
    assert expand(F(12, 41)) == LurothWord((4, 2, 42), (2,))
    assert str(expand(F(12, 41))) == "[4,2,42;(2)]"


def test_periodic_value_closed_form():
    for d in range(2, 30):
        assert periodic_value(d) == F(d - 1, d * (d - 1) - 1)
        assert eval_word(LurothWord.periodic(d)) == periodic_value(d)


def test_chevrons_are_extreme_words():
    for n2 in range(3, 12):
        for d in range(2, n2 + 1):
            assert chevron_left(d, n2) == eval_word(LurothWord((d,), (n2,)))
    for n1 in range(2, 8):
        for d in range(n1, n1 + 10):
            assert chevron_right(d, n1) == eval_word(LurothWord((d,), (n1,)))


def test_canonical_form():
    assert LurothWord((3, 2, 2), (2, 2)) == LurothWord((3,), (2,))
    assert LurothWord((5, 3, 4), (3, 4)) == LurothWord((5,), (3, 4))
    assert LurothWord((4,), (3, 4)).preperiod == ()


def test_domain_errors():
    with pytest.raises(LurothDomainError):
        LurothWord((1,), (2,))
    with pytest.raises(LurothDomainError):
        LurothWord((3,), ())
    for bad in (0, F(3, 2), -1):
        with pytest.raises(LurothDomainError):
            expand(bad)
    with pytest.raises((TypeError, LurothDomainError)):
        as_fraction(0.5)


def test_fraction_str():
    assert fraction_str(F(2)) == "2/1"
    assert fraction_str(F(-3, 6)) == "-1/2"


def test_digit_set_parse_and_membership():
    assert DigitSet.parse("2,3") == DigitSet.finite([2, 3])
    assert DigitSet.parse("2..5") == DigitSet.band(2, 5)
    assert DigitSet.parse("3..") == DigitSet.ray(3)
    ray = DigitSet.ray(3)
    assert 3 in ray and 10 ** 9 in ray and 2 not in ray
    assert len(DigitSet.band(2, 5)) == 4
    assert str(DigitSet.band(2, 5)) == "2..5" and str(ray) == "3.."
    with pytest.raises(LurothDomainError):
        DigitSet.band(3, 3)
    with pytest.raises(LurothDomainError):
        DigitSet.finite([1, 2])


@given(fractions_01)
def test_expand_eval_round_trip(x):
    assert eval_word(expand(x)) == x


@given(fractions_01)
def test_digits_match_series_oracle(x):
    word = expand(x)
    gen = word.digits()
    prefix = [next(gen) for _ in range(12)]
    partial, weight = _series(prefix)
    tail = eval_word(word)
    # the remainder is weight * (value of the shifted word), which lies in (0, 1]
    for _ in prefix:
        word = word.shift()
    assert partial + weight * eval_word(word) == tail


@given(fractions_01)
def test_map_shifts_digits(x):
    d = digit_of(x)
    assert F(1, d) < x <= F(1, d - 1)
    w = expand(x)
    assert next(w.digits()) == d
    assert expand(luroth_map(x)) == w.shift()


@given(st.lists(st.integers(2, 30), max_size=4), st.lists(st.integers(2, 30), min_size=1, max_size=3))
def test_word_json_round_trip(pre, per):
    w = LurothWord(tuple(pre), tuple(per))
    assert LurothWord.from_json(w.to_json()) == w
    assert expand(eval_word(w)) == w
