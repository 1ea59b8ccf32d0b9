"""Buchberger's algorithm, normal forms and standard monomials."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import RingMismatch
from .ring import GradedRing, Polynomial, iter_monomials_upto

INFINITE = math.inf


@dataclass(frozen=True)
class MonomialOrder:
    """``degrevlex`` or ``lex`` with variables ranked by ``permutation``.

    ``permutation[0]`` is the index of the largest variable; ``None`` means
    the ring's own variable order.  Degrevlex compares the weighted degree
    in the slicing channel (plain total degree when the ring has none).
    """

    kind: str = "degrevlex"
    permutation: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, ring: GradedRing):
        perm = self.permutation or tuple(range(ring.nvars))
        if sorted(perm) != list(range(ring.nvars)):
            raise ValueError(f"{perm} is not a permutation of the variables of {ring}")
        if self.kind == "lex":
            return lambda m: tuple(m[i] for i in perm)
        rev = tuple(reversed(perm))
        weight = ring.order_weight
        return lambda m: (weight(m), tuple(-m[i] for i in rev))


def lex_order(*names, ring=None) -> MonomialOrder:
    """Lex order with ``names`` from largest to smallest."""
    if ring is None:
        return MonomialOrder("lex")
    return MonomialOrder("lex", tuple(ring.index(n) for n in names))


@dataclass(frozen=True)
class Ideal:
    ring: GradedRing
    generators: tuple

    def __init__(self, ring, generators=()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring(g)
            if g.ring != ring:
                raise RingMismatch(f"generator {g} lives in {g.ring}, not {ring}")
            if g:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return Ideal(self.ring, self.generators + other.generators)

    def __repr__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _leading(terms, key):
    m = max(terms, key=key)
    return m, terms[m]


def _monic(terms, key):
    m, c = _leading(terms, key)
    inv = Fraction(1) / c
    return {k: v * inv for k, v in terms.items()}


def _reduce(terms, basis, key):
    """Full reduction of ``terms`` by ``basis`` (list of (lm, monic terms))."""
    p = dict(terms)
    rem = {}
    while p:
        m, c = _leading(p, key)
        for lm, g in basis:
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                for gm, gc in g.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = p.get(t, 0) - c * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f, lf, g, lg):
    l = _lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(l, lf))
    sg = tuple(a - b for a, b in zip(l, lg))
    out = {}
    for m, c in f.items():
        t = tuple(a + b for a, b in zip(m, sf))
        out[t] = out.get(t, 0) + c
    for m, c in g.items():
        t = tuple(a + b for a, b in zip(m, sg))
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class GroebnerBasis:
    ring: GradedRing
    order: MonomialOrder
    elements: tuple

    @property
    def leading_monomials(self) -> list:
        key = self.order.key(self.ring)
        return [max(g.terms, key=key) for g in self.elements]

    def _pairs(self):
        key = self.order.key(self.ring)
        return [(max(g.terms, key=key), g.terms) for g in self.elements], key

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def buchberger(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are chosen by the normal strategy (smallest lcm first) and
    pruned with the coprime-leading-monomial and chain criteria.
    """
    order = order or MonomialOrder()
    ring = ideal.ring
    key = order.key(ring)
    basis = []  # list of (lm, terms)
    for g in ideal.generators:
        t = _monic(g.terms, key)
        basis.append((_leading(t, key)[0], t))

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm(basis[ij[0]][0], basis[ij[1]][0])), ij[1], ij[0]))
        pairs.discard((i, j))
        li, fi = basis[i]
        lj, fj = basis[j]
        if all(not (a and b) for a, b in zip(li, lj)):
            continue
        l = _lcm(li, lj)
        if any(
            k not in (i, j)
            and _divides(basis[k][0], l)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        s = _reduce(_spoly(fi, li, fj, lj), basis, key)
        if s:
            s = _monic(s, key)
            n = len(basis)
            basis.append((_leading(s, key)[0], s))
            pairs.update((k, n) for k in range(n))

    # minimalize, then interreduce
    minimal = []
    for idx, (lm, t) in enumerate(basis):
        if any(
            _divides(other, lm) and (other != lm or jdx < idx)
            for jdx, (other, _) in enumerate(basis)
            if jdx != idx
        ):
            continue
        minimal.append((lm, t))
    reduced = []
    for idx, (lm, t) in enumerate(minimal):
        others = [b for jdx, b in enumerate(minimal) if jdx != idx]
        tail = {m: c for m, c in t.items() if m != lm}
        tail = _reduce(tail, others, key)
        tail[lm] = Fraction(1)
        reduced.append((lm, tail))
    reduced.sort(key=lambda b: key(b[0]), reverse=True)
    return GroebnerBasis(ring, order, tuple(Polynomial(ring, t) for _, t in reduced))


def groebner(generators: Sequence, ring: GradedRing | None = None, order=None) -> GroebnerBasis:
    """Convenience wrapper: ``groebner(["x^2", "y^2"], R)``."""
    if isinstance(generators, Ideal):
        return buchberger(generators, order)
    if ring is None:
        ring = generators[0].ring
    return buchberger(Ideal(ring, generators), order)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if p.ring != gb.ring:
        raise RingMismatch(f"{p.ring} vs {gb.ring}")
    basis, key = gb._pairs()
    return Polynomial(p.ring, _reduce(p.terms, basis, key))


def ideal_membership(p: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(p, gb).is_zero()


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    key = order.key(f.ring)
    lf, cf = _leading(f.terms, key)
    lg, cg = _leading(g.terms, key)
    return Polynomial(f.ring, _spoly(_monic(f.terms, key), lf, _monic(g.terms, key), lg))


def s_pairs_reduce_to_zero(gb: GroebnerBasis) -> bool:
    """Check Buchberger's criterion directly on every pair of basis elements."""
    els = gb.elements
    for j in range(len(els)):
        for i in range(j):
            if not normal_form(s_polynomial(els[i], els[j], gb.order), gb).is_zero():
                return False
    return True


def _is_finite(lms, nvars):
    for i in range(nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms) and not any(not any(m) for m in lms):
            return False
    return True


def standard_monomials(gb: GroebnerBasis, bound: int | None = None):
    """Monomials outside the leading-term ideal, or ``INFINITE``.

    With ``bound`` only monomials of weighted degree ``<= bound`` are
    listed, which is always a finite answer.
    """
    ring = gb.ring
    lms = gb.leading_monomials
    key = gb.order.key(ring)
    if bound is not None:
        found = [m for m in iter_monomials_upto(ring, bound) if not any(_divides(l, m) for l in lms)]
        return sorted(found, key=key)
    if not _is_finite(lms, ring.nvars):
        return INFINITE
    found = set()
    frontier = [(0,) * ring.nvars]
    while frontier:
        m = frontier.pop()
        if m in found or any(_divides(l, m) for l in lms):
            continue
        found.add(m)
        for i in range(ring.nvars):
            frontier.append(m[:i] + (m[i] + 1,) + m[i + 1:])
    return sorted(found, key=key)


def colength(ideal: Ideal, order: MonomialOrder | None = None):
    """dim_Q R/I, or ``INFINITE``."""
    sm = standard_monomials(buchberger(ideal, order))
    return INFINITE if sm is INFINITE else len(sm)


def hilbert_function(gb: GroebnerBasis, degree) -> int:
    """dim of the degree slice of R/I (I homogeneous), counted on standard monomials."""
    from .ring import monomial_basis

    lms = gb.leading_monomials
    return sum(1 for m in monomial_basis(gb.ring, degree) if not any(_divides(l, m) for l in lms))
