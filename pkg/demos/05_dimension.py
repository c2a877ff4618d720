"""Hausdorff dimension of Lüroth sets from the Moran equation.

For a finite alphabet A the dimension s solves sum (d(d-1))^(-s) = 1. For
the infinite ray L>=k we get certified lower bounds from truncations
L_{k,N}, pushing N up geometrically.
"""
from luroth import DigitSet
from luroth import dimension as Dm

for text in ("2,3", "2..5", "3..10", "2,7,11"):
    r = Dm.moran_solve(DigitSet.parse(text))
    print(f"dim L_{{{text}}} = {r.value:.9f}  bracket [{r.bracket[0]:.10f}, {r.bracket[1]:.10f}]")

print("\nlower bounds for dim L>=k:")
for k in (3, 4, 5):
    best, n = Dm.ray_sup_search(k)
    print(f"  k={k}: > {best.certified_lower:.7f}  (truncated at N = {n:.3g})")

print("\ndim L_k,3k stays above 1/2:",
      min(Dm.dim_band_k_3k(k).certified_lower for k in (2, 10, 100, 1000)))
info = Dm.good_bound_internals(16, 0.01)
print(f"Good-type bound at k=16: {info['good_bound']:.6f} (x_k = {info['x_k']:.6f})")
print("dim(L_{2,3} + L_{2,3}) =", Dm.sumset_dim(DigitSet.finite([2, 3]), DigitSet.finite([2, 3])).value)
