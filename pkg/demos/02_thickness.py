"""Thickness of Lüroth bands through the stepwise complete construction.

The construction peels one first digit per level. Its ratios g (largest gap
relative to its parent), h (smallest child relative to its parent) and the
thickness tau are computed exactly from the tree, then compared with the
closed form.
"""
from luroth import construction as C

print(" N1  N2            g            h          tau   closed form agrees")
for n1, n2 in ((2, 3), (2, 4), (2, 5), (3, 7), (3, 16), (5, 12)):
    q = C.quantities(C.scc(n1, n2))
    same = C.thickness_closed_form(n1, n2) == q.tau
    print(f"{n1:>3} {n2:>3} {str(q.g):>12} {str(q.h):>12} {str(q.tau):>12}   {same}")

print("\nL_3,16 has gamma = tau/(1+tau) =", C.gamma_closed_form(3, 16))

# a deliberately unordered split tree for L_3,26
tree = C.fixture_unordered_3_26()
q = C.quantities(tree)
ordered, bad = C.is_ordered(tree)
print(f"\nunordered L_3,26 tree: g={q.g} (node {q.attained_at['g']}), h={q.h} (node {q.attained_at['h']})")
print(f"ordered? {ordered}; nodes whose gap is smaller than a child gap: {bad}")
