"""Jacobi and Tyurina ideals, Milnor numbers, Euler identity."""
from __future__ import annotations

from .errors import InhomogeneousInput, NoSlicingChannel
from .groebner import INFINITE, Ideal, MonomialOrder, colength
from .ring import ANY_DEGREE, Polynomial


def jacobi_ideal(W: Polynomial) -> Ideal:
    """Ideal generated by all partial derivatives of ``W``."""
    return Ideal(W.ring, [W.derivative(v) for v in W.ring.names])


def tyurina_ideal(W: Polynomial) -> Ideal:
    return Ideal(W.ring, list(jacobi_ideal(W).generators) + [W])


def tyurina_generators(W: Polynomial) -> list:
    """Generators of the Tyurina ideal, partials first, zeros dropped."""
    return list(tyurina_ideal(W).generators)


def milnor_number(W: Polynomial, order: MonomialOrder | None = None):
    """Colength of the Jacobi ideal; ``INFINITE`` for non-isolated critical points."""
    return colength(jacobi_ideal(W), order)


def tyurina_number(W: Polynomial, order: MonomialOrder | None = None):
    return colength(tyurina_ideal(W), order)


def euler_identity_check(W: Polynomial) -> bool:
    """Check sum_i deg(x_i) x_i dW/dx_i == deg(W) W in the slicing channel.

    Rings without a slicing channel use channel 0.
    """
    deg = W.homogeneous_degree()
    if deg is None:
        raise InhomogeneousInput(f"{W} is not homogeneous")
    ring = W.ring
    if ring.channels == 0:
        raise NoSlicingChannel("ring has no grading channels")
    c = ring.slicing_channel if ring.slicing_channel is not None else 0
    if deg is ANY_DEGREE:
        return True
    lhs = ring.zero()
    for name, d in zip(ring.names, ring.degrees):
        lhs = lhs + ring.var(name) * W.derivative(name) * d[c]
    return lhs == W * deg[c]


__all__ = [
    "INFINITE",
    "jacobi_ideal",
    "tyurina_ideal",
    "tyurina_generators",
    "milnor_number",
    "tyurina_number",
    "euler_identity_check",
]
