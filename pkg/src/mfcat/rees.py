"""One-parameter weighted degenerations W_t = t^-d W(t^m x).

A family is stored as coefficients of powers of ``t`` (a polynomial in
``t`` over the original ring), so the grading of the ring is untouched.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import FiltrationTooShallow, InputError
from .mfcore import MatrixFactorization, make_mf
from .ring import Polynomial


@dataclass(frozen=True)
class ReesChart:
    """Filtration weights per variable and the vanishing order ``d``.

    ``alpha_order`` is how many powers of t are divided out of the alpha
    block of a brane; beta gets ``d - alpha_order``.  Default ``d // 2``.
    """

    weights: Mapping
    d: int
    alpha_order: int | None = None

    def split(self):
        a = self.d // 2 if self.alpha_order is None else self.alpha_order
        return a, self.d - a


def _weight(ring, weights, exps):
    total = 0
    for name, e in zip(ring.names, exps):
        if e:
            total += e * weights.get(name, 0)
    return total


def t_expand(p: Polynomial, weights: Mapping, order: int, label="polynomial") -> dict:
    """{k: coefficient of t^k} in t^-order * p(t^m x); raises on negative k."""
    out = {}
    for m, c in p.terms.items():
        k = _weight(p.ring, weights, m) - order
        if k < 0:
            raise FiltrationTooShallow(f"{label}: term of {p} has filtration weight {k + order} < {order}")
        out.setdefault(k, {})[m] = c
    return {k: Polynomial(p.ring, t) for k, t in sorted(out.items())}


def _specialize(coeffs: dict, ring, c) -> Polynomial:
    c = Fraction(c)
    result = ring.zero()
    for k, p in coeffs.items():
        if k == 0:
            result = result + p
        elif c:
            result = result + p * c ** k
    return result


@dataclass
class ReesFamily:
    chart: ReesChart
    ring: object
    potential: dict
    alpha: list | None = None
    beta: list | None = None
    source: MatrixFactorization | None = None
    warnings: list = field(default_factory=list)

    def potential_at(self, c) -> Polynomial:
        return _specialize(self.potential, self.ring, c)

    def brane_at(self, c) -> MatrixFactorization:
        """The fiber of the family brane at t = c (verified)."""
        if self.source is None:
            raise InputError("no factorization was supplied to the degeneration")
        mf = self.source
        alpha = [[_specialize(e, self.ring, c) for e in row] for row in self.alpha]
        beta = [[_specialize(e, self.ring, c) for e in row] for row in self.beta]
        return make_mf(self.ring, self.potential_at(c), mf.shifts0, mf.shifts1, alpha, beta, mf.w)

    def specialize(self, c):
        """(W_c, brane fiber or None)."""
        W = self.potential_at(c)
        return W, (self.brane_at(c) if self.source is not None else None)


def leading_form(W: Polynomial, weights: Mapping) -> Polynomial:
    """Sum of the terms of minimal filtration weight."""
    if not W:
        return W
    low = min(_weight(W.ring, weights, m) for m in W.terms)
    return Polynomial(W.ring, {m: c for m, c in W.terms.items() if _weight(W.ring, weights, m) == low})


def rees_degenerate(W: Polynomial, chart: ReesChart, mf: MatrixFactorization | None = None) -> ReesFamily:
    """Family W_t with W_1 = W and W_0 the weight-d part of W.

    When ``mf`` is given, alpha entries are normalized by t^-a and beta by
    t^-(d-a) (see :class:`ReesChart`), giving a factorization of W_t.
    """
    potential = t_expand(W, chart.weights, chart.d, "potential")
    family = ReesFamily(chart, W.ring, potential)
    if not potential.get(0):
        msg = f"the weight-{chart.d} leading form of {W} vanishes; the t=0 fiber is 0"
        family.warnings.append(msg)
        warnings.warn(msg, stacklevel=2)
    if mf is not None:
        if mf.W != W:
            raise InputError(f"factorization is for {mf.W}, not {W}")
        a, b = chart.split()
        family.source = mf
        family.alpha = [[t_expand(e, chart.weights, a, f"alpha[{i}][{j}]") for j, e in enumerate(row)]
                        for i, row in enumerate(mf.alpha.entries)]
        family.beta = [[t_expand(e, chart.weights, b, f"beta[{i}][{j}]") for j, e in enumerate(row)]
                       for i, row in enumerate(mf.beta.entries)]
    return family
