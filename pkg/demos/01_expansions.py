"""Lüroth expansions of rationals, and the extreme points of a band.

Every rational in (0, 1] has an eventually periodic expansion. Here we
expand a few, evaluate them back, and look at the chevrons: the smallest
and largest points of L_{N1,N2} whose first digit is d.
"""
from fractions import Fraction

from luroth import DigitSet, LurothWord, chevron_left, chevron_right, eval_word, expand

for x in (Fraction(1, 2), Fraction(5, 12), Fraction(12, 41), Fraction(1)):
    word = expand(x)
    print(f"{str(x):>6} = {word}   (back: {eval_word(word)})")

# a word with a long preperiod
w = LurothWord((9, 4, 17), (3, 5))
print(f"\n{w} = {eval_word(w)}, and expanding that gives {expand(eval_word(w))}")

# the first-digit cylinders of L_{2,5} and the gaps between them
n1, n2 = 2, 5
print(f"\nfirst-digit cylinders of {DigitSet.band(n1, n2)}:")
for d in range(n1, n2 + 1):
    print(f"  d={d}: [{chevron_left(d, n2)}, {chevron_right(d, n1)}]")
