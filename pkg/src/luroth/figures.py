"""Deterministic SVG drawings of constructions, product squares and sum covers.

Output is plain text assembled in a fixed order with fixed number formatting,
so identical inputs give byte-identical files.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .construction import Construction, scc
from .exact import DigitSet, fraction_str
from .sumset import IntervalUnion, gaps_mod1, level_cover, minkowski

__all__ = ["WIDTH", "scc_svg", "product_square_svg", "sum_cover_svg", "render", "write_figure"]

WIDTH = 1000
ROW = 40
BAR = 16
MIN_LABEL_PX = 24.0


def _f(x) -> str:
    return f"{float(x):.3f}"


def _header(height: int, title: str) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}" font-family="monospace" font-size="10">',
        f"<title>{title}</title>",
        f'<rect x="0" y="0" width="{WIDTH}" height="{height}" fill="white"/>',
    ]


def _rect(x0: float, y: float, x1: float, h: float, fill: str, label: str = "") -> str:
    data = f' data-interval="{label}"' if label else ""
    return f'<rect x="{_f(x0)}" y="{_f(y)}" width="{_f(x1 - x0)}" height="{_f(h)}" fill="{fill}"{data}/>'


def _text(x: float, y: float, s: str, anchor: str = "middle") -> str:
    return f'<text x="{_f(x)}" y="{_f(y)}" text-anchor="{anchor}">{s}</text>'


class _Scale:
    """Affine map from an exact window [lo, hi] onto [pad, WIDTH - pad]."""

    def __init__(self, lo, hi, pad: int = 0):
        self.lo, self.hi, self.pad = Fraction(lo), Fraction(hi), pad

    def __call__(self, x) -> float:
        span = self.hi - self.lo
        return self.pad + float((Fraction(x) - self.lo) / span) * (WIDTH - 2 * self.pad)


def _gap_label(x0: float, x1: float, y: float, a, b) -> list[str]:
    if x1 - x0 < MIN_LABEL_PX:
        return []
    return [_text((x0 + x1) / 2, y, f"({fraction_str(a)}, {fraction_str(b)})")]


def scc_svg(n1: int, n2: int, depth: int, construction: Construction | None = None) -> str:
    """Levels 0..depth of a construction on the absolute scale x -> 1000 x.

    Without ``construction`` the stepwise complete construction of L_{n1,n2}
    is drawn. Each row holds one level; gaps wide enough get their endpoints.
    """
    c = construction if construction is not None else scc(n1, n2)
    scale = _Scale(0, 1)
    height = ROW * (depth + 1) + 20
    out = _header(height, f"construction of L_{n1},{n2}, levels 0..{depth}")
    for n in range(depth + 1):
        y = 10 + n * ROW
        parts = c.level(n)
        out.append(_text(2, y + BAR - 4, f"{n}", anchor="start"))
        for lo, hi in parts:
            out.append(_rect(scale(lo), y, scale(hi), BAR, "black",
                             f"{fraction_str(lo)},{fraction_str(hi)}"))
        for (_, a), (b, _) in zip(parts, parts[1:]):
            out.extend(_gap_label(scale(a), scale(b), y + BAR + 11, a, b))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def product_square_svg(a: DigitSet, la: int, b: DigitSet, lb: int) -> str:
    """Level ``la`` of A times level ``lb`` of B, with the sum's gaps as diagonal bands.

    A runs along x and B along y (upwards). A point lands in a band exactly
    when x + y falls in an open gap of the cover sum.
    """
    ua, ub = level_cover(a, la), level_cover(b, lb)
    ha, hb = ua.hull, ub.hull
    sx, sy = _Scale(ha.lo, ha.hi), _Scale(hb.lo, hb.hi)
    height = WIDTH
    out = _header(height, f"level {la} of {a} times level {lb} of {b}")

    def pt(x, y) -> str:
        return f"{_f(sx(x))},{_f(height - sy(y))}"

    for g0, g1 in minkowski(ua, ub).gaps():
        # clip the band g0 < x + y < g1 against the product of the hulls
        corners = []
        for s in (g0, g1):
            lo_x, hi_x = max(ha.lo, s - hb.hi), min(ha.hi, s - hb.lo)
            corners.append(((lo_x, s - lo_x), (hi_x, s - hi_x)))
        (p0, p1), (q0, q1) = corners
        poly = " ".join(pt(*p) for p in (p0, p1, q1, q0))
        out.append(f'<polygon points="{poly}" fill="#f4a0a0" '
                   f'data-gap="{fraction_str(g0)},{fraction_str(g1)}"/>')
        mid = (g0 + g1) / 2
        mx = max(ha.lo, min(ha.hi, mid - (hb.lo + hb.hi) / 2))
        out.append(_text(min(sx(mx) + 4, WIDTH - 160), height - sy(mid - mx) - 4,
                         f"({fraction_str(g0)}, {fraction_str(g1)})", anchor="start"))
    for p in ua.parts:
        for q in ub.parts:
            x0, x1 = sx(p.lo), sx(p.hi)
            y0, y1 = height - sy(q.hi), height - sy(q.lo)
            out.append(f'<rect x="{_f(x0)}" y="{_f(y0)}" width="{_f(x1 - x0)}" '
                       f'height="{_f(y1 - y0)}" fill="black" fill-opacity="0.85"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def sum_cover_svg(a: DigitSet, la: int, b: DigitSet, lb: int) -> str:
    """Rows for the cover of A, the cover of B, their sum, and the sum mod 1."""
    ua, ub = level_cover(a, la), level_cover(b, lb)
    total = minkowski(ua, ub)
    lo = min(ua.hull.lo, ub.hull.lo, total.hull.lo, Fraction(0))
    hi = max(ua.hull.hi, ub.hull.hi, total.hull.hi, Fraction(1))
    scale = _Scale(lo, hi, pad=10)
    rows: list[tuple[str, IntervalUnion, list]] = [
        (f"{a} level {la}", ua, ua.gaps()),
        (f"{b} level {lb}", ub, ub.gaps()),
        ("sum", total, total.gaps()),
    ]
    height = ROW * 5
    out = _header(height, f"sum of level covers of {a} and {b}")
    for r, (name, u, gaps) in enumerate(rows):
        y = 20 + r * ROW
        out.append(_text(10, y - 3, name, anchor="start"))
        for p in u.parts:
            out.append(_rect(scale(p.lo), y, scale(p.hi), BAR, "black",
                             f"{fraction_str(p.lo)},{fraction_str(p.hi)}"))
        for g0, g1 in gaps:
            out.extend(_gap_label(scale(g0), scale(g1), y + BAR + 11, g0, g1))
    y = 20 + 3 * ROW
    out.append(_text(10, y - 3, "sum mod 1", anchor="start"))
    out.append(_rect(scale(0), y, scale(1), BAR, "#dddddd"))
    for g0, g1 in gaps_mod1(total):
        segs = [(g0, min(g1, Fraction(1)))] + ([(Fraction(0), g1 - 1)] if g1 > 1 else [])
        for s0, s1 in segs:
            out.append(_rect(scale(s0), y, scale(s1), BAR, "#d03030",
                             f"{fraction_str(g0)},{fraction_str(g1)}"))
        out.append(_text(scale(segs[0][0]), y + BAR + 11, f"({fraction_str(g0)}, {fraction_str(g1)})",
                         anchor="start"))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(kind: str, **params) -> str:
    if kind == "scc":
        return scc_svg(params["n1"], params["n2"], params.get("depth", 2))
    if kind in ("product_square", "sum_cover"):
        fn = product_square_svg if kind == "product_square" else sum_cover_svg
        return fn(DigitSet.band(*params["a"]), params["la"], DigitSet.band(*params["b"]), params["lb"])
    raise ValueError(f"unknown figure kind {kind!r}; choose scc, product_square or sum_cover")


def write_figure(kind: str, path: str | Path, **params) -> Path:
    path = Path(path)
    path.write_text(render(kind, **params), encoding="utf-8")
    return path
