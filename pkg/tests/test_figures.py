import re

from luroth.exact import DigitSet
from luroth.figures import WIDTH, product_square_svg, render, scc_svg, sum_cover_svg

B23, B24 = DigitSet.band(2, 3), DigitSet.band(2, 4)


def _rects(svg, fill="black"):
    return re.findall(rf'<rect x="([\d.]+)" y="[\d.]+" width="([\d.]+)" height="[\d.]+" fill="{fill}"', svg)


def test_scc_level_two_rectangles():
    svg = scc_svg(2, 3, 2)
    assert f'width="{WIDTH}"' in svg
    for lo, hi in (("2/5", "5/12"), ("9/20", "1/2"), ("7/10", "3/4"), ("17/20", "1/1")):
        assert f'data-interval="{lo},{hi}"' in svg
    assert ("400.000", "16.667") in _rects(svg)
    assert "(5/12, 9/20)" in svg


def test_product_square_cells_and_bands():
    svg = product_square_svg(B23, 2, B23, 2)
    assert svg.count('fill="black" fill-opacity') == 16
    assert svg.count("<polygon") == 3
    big = product_square_svg(B23, 3, B24, 4)
    assert 'data-gap="49/72,899/1320"' in big
    assert big.count('fill="black" fill-opacity') == 8 * 16


def test_sum_cover_marks_mod1_gaps():
    svg = sum_cover_svg(B23, 2, B23, 2)
    assert 'data-interval="1/2,11/20"' in svg and "(0/1, 1/10)" in svg


def test_deterministic():
    params = dict(a=(2, 3), la=3, b=(2, 4), lb=4)
    assert render("product_square", **params) == render("product_square", **params)
    assert render("scc", n1=3, n2=7, depth=3) == scc_svg(3, 7, 3)
