"""Which sums of Lüroth sets cover every residue mod 1?

Each driver checks sumset criteria (Hall, Hlavka, Astels) in exact
arithmetic. A certified interval of length at least 1 settles congruence; a
gap in a finite-level cover of the sum refutes it.
"""
from luroth import criteria as K

for sizes in ((4, 4), (3, 5), (3, 3, 3), (3, 3), (3, 4)):
    rep = K.theorem1_driver(sizes)
    label = " + ".join(f"L<={k}" for k in sizes)
    print(f"{label:<22} {rep.verdict:<26} {rep.interval or ''}")
    for note in rep.notes:
        print(f"{'':22} note: {note}")

print()
for ks in ([3, 3, 5], [3, 4, 5, 6], [3, 4, 5, 9, 245]):
    rep = K.theorem2_driver(ks)
    why = "; ".join(c.name for c in rep.failing)
    print(f"rays {ks}: {rep.verdict}" + (f" (fails: {why})" if why else ""))

print()
for k in (3, 4, 10):
    rep = K.corollary3_driver(k)
    print(f"{k} copies of L>={k}: {rep.verdict} {rep.interval}")
print("3 copies of L_3,26 via Hlavka:", K.corollary3_driver(3, route="hlavka").interval)
