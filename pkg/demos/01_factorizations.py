"""Building graded matrix factorizations and moving them around.

A factorization of W is a pair of graded matrices alpha: P0 -> P1 and
beta: P1 -> P0 whose products in both orders are W times the identity.
Every constructor below checks that, together with homogeneity of each
entry, before handing the object back.
"""
from mfcat import MFMorphism, cone, direct_sum, dual, make_mf, polynomial_ring, suspension, twist
from mfcat.errors import CurvatureMismatch, HomogeneityViolation

R = polynomial_ring("x y")

K = make_mf(R, R("x*y"), [0], [1], [["x"]], [["y"]])
print("K =", K.to_dict())
print("rank", K.rank, "weight", K.w)

# Suspension swaps the two modules; doing it twice is a twist by w, on the nose.
S = suspension(K)
print("suspension:", S.to_dict())
print("suspension twice equals twist(K, w):", suspension(S).same_data(twist(K, K.w)))

# The dual factorizes -W and is an honest involution.
D = dual(K)
print("dual potential:", D.W, "| dual of dual is K:", dual(D).same_data(K))

# Cones of closed degree-zero maps are factorizations again.
C = cone(MFMorphism.identity(K))
print("cone of the identity has rank", C.rank, "valid:", C.is_valid())
print("direct sum K + K has rank", direct_sum(K, K).rank)

# Corrupted data is rejected with the offending entry named.
for label, alpha, beta, s1 in [("wrong product", [["x"]], [["y + x"]], [1]),
                               ("wrong degree", [["x"]], [["y"]], [2])]:
    try:
        make_mf(R, R("x*y"), [0], s1, alpha, beta)
    except (CurvatureMismatch, HomogeneityViolation) as exc:
        print(f"{label}: {type(exc).__name__}: {exc}")
