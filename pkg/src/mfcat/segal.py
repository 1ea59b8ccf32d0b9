"""Bigraded labels over R[p, 1/p] with deg x_i = (1, 0), deg p = (-N, 2).

Only the rank-one case (a single variable ``p``) is modelled.
"""
from __future__ import annotations

from dataclasses import dataclass

from .ring import GradedRing, monomial_basis, polynomial_ring


@dataclass(frozen=True)
class BigradedLabel:
    """Free module R[1/p](a, b); (a, b) and (a - N, b + 2) are isomorphic."""

    a: int
    b: int
    N: int

    def canonical(self) -> "BigradedLabel":
        return segal_canonicalize(self)

    def is_canonical(self) -> bool:
        return self.b in (0, 1)

    def twist(self, k: int) -> "BigradedLabel":
        return BigradedLabel(self.a + k, self.b, self.N)


def segal_canonicalize(label: BigradedLabel) -> BigradedLabel:
    a, b, N = label.a, label.b, label.N
    q, b = divmod(b, 2)
    return BigradedLabel(a + q * N, b, N)


def coordinate_ring(N: int) -> GradedRing:
    """R = Q[x_1..x_N] with every variable of degree 1."""
    return polynomial_ring([f"x{i}" for i in range(1, N + 1)])


def segal_hom_dimension(source: BigradedLabel, target: BigradedLabel, ring: GradedRing | None = None,
                        hom_weight=(0, 1)) -> int:
    """dim of the (0, 1) component of Hom(R[1/p](a,b), R[1/p](a',b')).

    Equal parities give 0; otherwise the answer is dim R_{a'-a}, reached
    directly for (1, 0) and through multiplication by p for (0, 1).
    """
    if tuple(hom_weight) != (0, 1):
        raise ValueError("only the (0, 1) Hom component is modelled")
    if source.N != target.N:
        raise ValueError(f"labels use different N: {source.N} vs {target.N}")
    if not (source.is_canonical() and target.is_canonical()):
        raise ValueError("labels must be canonical (b in {0, 1})")
    if source.b == target.b:
        return 0
    if ring is None:
        ring = coordinate_ring(source.N)
    return len(monomial_basis(ring, target.a - source.a))


def hom_table(N: int, a_values, ring: GradedRing | None = None) -> dict:
    """{(a, b, a', b'): dimension} over the given range of a-values."""
    table = {}
    for a in a_values:
        for b in (0, 1):
            for a2 in a_values:
                for b2 in (0, 1):
                    table[(a, b, a2, b2)] = segal_hom_dimension(
                        BigradedLabel(a, b, N), BigradedLabel(a2, b2, N), ring)
    return table
