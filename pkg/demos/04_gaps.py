"""Gap certificates: exact evidence that a sum misses a residue class.

Level covers contain the Lüroth set, so a gap in the sum of covers is a gap
in the true sum. We also write the product-square picture for the
L<=3 + L<=4 case, where no gap appears mod 1 but the sum is not an interval.
"""
from fractions import Fraction
from pathlib import Path

from luroth import DigitSet, LurothWord
from luroth.figures import write_figure
from luroth.sumset import certify_gap, certify_member

b3, b4 = DigitSet.band(2, 3), DigitSet.band(2, 4)


def show(gaps):
    return " ".join(f"({a}, {b})" for a, b in gaps) or "none"


for depth in (1, 2, 3):
    cert = certify_gap(b3, b3, depth)
    print(f"L<=3 + L<=3, depth {depth}: {len(cert.cover)} parts, mod-1 gaps {show(cert.gaps)}")

cert = certify_gap(b3, b4, (3, 4))
print("\nL<=3 (depth 3) + L<=4 (depth 4):", cert.cover)
print("mod-1 gaps:", show(cert.gaps), "  hull gaps:", show(cert.hull_gaps))
lo = certify_member([LurothWord.periodic(3), LurothWord.periodic(4)], Fraction(37, 55), [b3, b4])
hi = certify_member([LurothWord.periodic(2)] * 2, 2, [b3, b4])
print("both ends are attained:", lo.holds, hi.holds)

out = Path("figures")
out.mkdir(exist_ok=True)
write_figure("scc", out / "scc_2_3.svg", n1=2, n2=3, depth=3)
write_figure("product_square", out / "square_3_4.svg", a=(2, 3), la=3, b=(2, 4), lb=4)
write_figure("sum_cover", out / "cover_3_3.svg", a=(2, 3), la=2, b=(2, 3), lb=2)
print("\nwrote", ", ".join(sorted(p.name for p in out.glob("*.svg"))))
