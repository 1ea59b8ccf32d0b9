"""Jacobi and Tyurina ideals, Groebner bases, and the action of the Tyurina algebra.

Every partial derivative of W acts on any factorization by a map that is
null-homotopic, with the derivative of the differential as an explicit
homotopy.  So Hom(E, F) is a module over R/(W, dW), which is finite
dimensional exactly when the singularity is isolated.
"""
from mfcat import (MonomialOrder, colength, groebner, jacobi_ideal, milnor_number, polynomial_ring,
                   tyurina_annihilation, tyurina_number)
from mfcat.library import sample_library

R = polynomial_ring("x y")
for W in ["x^3 + y^4", "x^2 + y^5", "x*y", "x^2*y"]:
    print(f"mu({W}) = {milnor_number(R(W))}   tau = {tyurina_number(R(W))}")

J = jacobi_ideal(R("x^3 + y^4"))
print("\nJacobi ideal of x^3 + y^4:", J)
print("reduced Groebner basis (degrevlex):", list(groebner(J).elements))
print("colength, degrevlex vs lex:", colength(J), colength(J, MonomialOrder("lex")))

print("\nTyurina annihilation across the sample library:")
for name, E in sample_library().items():
    report = tyurina_annihilation(E)
    print(f"  {name:11s} ok={report.ok} classes checked={report.checked}")
