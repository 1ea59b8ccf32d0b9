"""Koszul branes, tensor products and the Knorrer functor.

Given W = sum s_i * t_i, the exterior algebra on r generators carries
the differential s + t contraction; its even and odd halves form a
factorization of rank 2^(r-1).
"""
from mfcat import (coker_presentation, ext_table, knorrer_lift, koszul_brane, koszul_data, polynomial_ring,
                   reorder, tensor_product)

T = polynomial_ring("x y u v")
K2 = koszul_brane(koszul_data(T, ["x", "y"], ["u", "v"]))
print("Koszul brane of u*x + v*y:", K2.rank, K2.W)
print("alpha =", K2.alpha.tolist())

# Tensoring two rank-one Koszul branes gives the rank-two one up to reordering the basis.
K1a = koszul_brane(koszul_data(T, ["x"], ["u"]))
K1b = koszul_brane(koszul_data(T, ["y"], ["v"]))
print("K(x;u) (x) K(y;v) equals K(x,y;u,v) after reordering:",
      reorder(tensor_product(K1a, K1b), [0, 1], [1, 0]).same_data(K2))

# Knorrer: a graded module over the base becomes a factorization upstairs.
S = polynomial_ring("u x y")
data = koszul_data(S, ["y"], ["x"])
E = knorrer_lift([0], data, polynomial_ring("u"))
dims = ext_table(E, E, (0, 4)).dims()
print("\nEnd of the Knorrer lift of Q[u], degrees 0..4:", [dims[(k,)] for k in range(5)])
print("  one class per degree, matching End(Q[u]) = Q[u]")

# Cokernel of beta: the maximal Cohen-Macaulay module attached to a factorization.
R = polynomial_ring("x y")
xy = koszul_brane(koszul_data(R, ["y"], ["x"]))
print("\nHilbert function of coker(beta) for (x, y) over xy:", coker_presentation(xy).hilbert_series(0, 8))
