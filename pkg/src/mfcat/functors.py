"""Tensor products, Koszul branes, the Knörrer lift and the coker functor."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ContractionMismatch,
    DegreeMismatch,
    HomogeneityViolation,
    NoSlicingChannel,
    RingMismatch,
    ShapeMismatch,
    VariableLeak,
)
from .linalg import rank
from .mfcore import GradedMatrix, MatrixFactorization, direct_sum, make_mf, twist, zero_mf
from .ring import (
    ANY_DEGREE,
    GradedRing,
    Polynomial,
    add_degrees,
    as_degree,
    monomial_basis,
    scale_degree,
    sub_degrees,
)


# ------------------------------------------------------------------ tensor

def tensor_product(a: MatrixFactorization, b: MatrixFactorization) -> MatrixFactorization:
    """Factorization of W_a + W_b on a ⊗ b with d = d_a ⊗ 1 + σ ⊗ d_b.

    σ is -1 on the odd part of ``a``.  Basis order: even part is
    ``P0⊗Q0`` then ``P1⊗Q1``, odd part ``P0⊗Q1`` then ``P1⊗Q0``, each
    block row-major with the left factor outer.  ``P1⊗Q1`` is twisted by
    ``-w`` so that alpha keeps weight 0.
    """
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if a.w != b.w:
        raise DegreeMismatch(f"potentials have degrees {a.w} and {b.w}")
    ring, w = a.ring, a.w
    zero = ring.zero()
    n0, n1 = a.rank
    m0, m1 = b.rank

    even = [("00", i, j) for i in range(n0) for j in range(m0)] + [("11", i, j) for i in range(n1) for j in range(m1)]
    odd = [("01", i, j) for i in range(n0) for j in range(m1)] + [("10", i, j) for i in range(n1) for j in range(m0)]
    e_idx = {k: n for n, k in enumerate(even)}
    o_idx = {k: n for n, k in enumerate(odd)}

    def shift(kind, i, j):
        sa = a.shifts0[i] if kind[0] == "0" else a.shifts1[i]
        sb = b.shifts0[j] if kind[1] == "0" else b.shifts1[j]
        s = add_degrees(sa, sb)
        return sub_degrees(s, w) if kind == "11" else s

    s0 = [shift(*k) for k in even]
    s1 = [shift(*k) for k in odd]
    alpha = [[zero] * len(even) for _ in odd]
    beta = [[zero] * len(odd) for _ in even]

    def put(mat, row_idx, col_idx, r, c, value):
        if value:
            mat[row_idx[r]][col_idx[c]] = mat[row_idx[r]][col_idx[c]] + value

    # d_a ⊗ 1
    for (src, tgt, mat, M) in (("00", "10", alpha, a.alpha), ("11", "01", alpha, a.beta),
                               ("01", "11", beta, a.alpha), ("10", "00", beta, a.beta)):
        rows = o_idx if mat is alpha else e_idx
        cols = e_idx if mat is alpha else o_idx
        jr = range(m0) if src[1] == "0" else range(m1)
        for i in range(len(M.cols)):
            for i2 in range(len(M.rows)):
                e = M.entries[i2][i]
                if e:
                    for j in jr:
                        put(mat, rows, cols, (tgt, i2, j), (src, i, j), e)
    # σ ⊗ d_b
    for (src, tgt, mat, M) in (("00", "01", alpha, b.alpha), ("11", "10", alpha, b.beta),
                               ("01", "00", beta, b.beta), ("10", "11", beta, b.alpha)):
        rows = o_idx if mat is alpha else e_idx
        cols = e_idx if mat is alpha else o_idx
        sign = -1 if src[0] == "1" else 1
        ir = range(n0) if src[0] == "0" else range(n1)
        for j in range(len(M.cols)):
            for j2 in range(len(M.rows)):
                e = M.entries[j2][j]
                if e:
                    for i in ir:
                        put(mat, rows, cols, (tgt, i, j2), (src, i, j), e * sign)
    return make_mf(ring, a.W + b.W, s0, s1, alpha, beta, w)


def unit_brane(ring: GradedRing, w) -> MatrixFactorization:
    """Rank (1, 0) factorization of 0: the unit for the tensor product."""
    return MatrixFactorization(ring, ring.zero(), [ring.zero_degree], [], [], [[]], w)


def reorder(mf: MatrixFactorization, perm0: Sequence[int], perm1: Sequence[int]) -> MatrixFactorization:
    """Relabel generators: new generator ``k`` of P0 is old ``perm0[k]``."""
    s0 = [mf.shifts0[p] for p in perm0]
    s1 = [mf.shifts1[p] for p in perm1]
    alpha = [[mf.alpha.entries[r][c] for c in perm0] for r in perm1]
    beta = [[mf.beta.entries[r][c] for c in perm1] for r in perm0]
    return make_mf(mf.ring, mf.W, s0, s1, alpha, beta, mf.w)


# ------------------------------------------------------------------ koszul

def _popcount(n):
    return bin(n).count("1")


def exterior_basis(r: int):
    """(even, odd) subsets of {0..r-1} as bitmasks, each in colex order."""
    masks = range(1 << r)
    return [m for m in masks if _popcount(m) % 2 == 0], [m for m in masks if _popcount(m) % 2 == 1]


def _sign_before(mask, i):
    return -1 if _popcount(mask & ((1 << i) - 1)) % 2 else 1


@dataclass(frozen=True)
class KoszulData:
    """Cosection ``s`` and section ``s_Y`` with ``sum s_i * s_Y_i == W``.

    ``slot_degrees[i]`` is the degree of ``s_Y[i]`` (the generator shift of
    the i-th exterior slot); when omitted it is read off from ``s_Y[i]`` or,
    failing that, from ``w - deg s[i]``.
    """

    ring: GradedRing
    s: tuple
    s_Y: tuple
    W: Polynomial
    w: tuple
    slot_degrees: tuple
    base_shift: tuple

    @property
    def r(self) -> int:
        return len(self.s)


def koszul_data(ring, s, s_Y, W=None, w=None, slot_degrees=None, base_shift=None) -> KoszulData:
    s = tuple(p if isinstance(p, Polynomial) else ring(p) for p in s)
    s_Y = tuple(p if isinstance(p, Polynomial) else ring(p) for p in s_Y)
    if len(s) != len(s_Y):
        raise ShapeMismatch(f"s has {len(s)} entries but s_Y has {len(s_Y)}")
    contraction = ring.zero()
    for a, b in zip(s, s_Y):
        contraction = contraction + a * b
    if W is None:
        W = contraction
    elif not isinstance(W, Polynomial):
        W = ring(W)
    if W != contraction:
        raise ContractionMismatch(f"sum s_i*s_Y_i = {contraction} but W = {W}")
    if w is None:
        d = W.homogeneous_degree()
        if d is None:
            raise HomogeneityViolation(f"{W} is not homogeneous")
        if d is ANY_DEGREE:
            raise ShapeMismatch("the zero potential needs an explicit degree w")
        w = d
    w = as_degree(w, ring.channels)
    if slot_degrees is None:
        slots = []
        for i, (a, b) in enumerate(zip(s, s_Y)):
            db, da = b.homogeneous_degree(), a.homogeneous_degree()
            if db is None or da is None:
                raise HomogeneityViolation(f"slot {i}: s or s_Y is inhomogeneous")
            if db is not ANY_DEGREE:
                slots.append(db)
            elif da is not ANY_DEGREE:
                slots.append(sub_degrees(w, da))
            else:
                raise ShapeMismatch(f"slot {i} is zero; pass slot_degrees explicitly")
        slot_degrees = slots
    slot_degrees = tuple(as_degree(c, ring.channels) for c in slot_degrees)
    for i, (a, b, c) in enumerate(zip(s, s_Y, slot_degrees)):
        if b and b.homogeneous_degree() != c:
            raise HomogeneityViolation(f"s_Y[{i}] = {b} is not homogeneous of degree {c}")
        if a and a.homogeneous_degree() != sub_degrees(w, c):
            raise HomogeneityViolation(f"s[{i}] = {a} is not homogeneous of degree {sub_degrees(w, c)}")
    base_shift = ring.zero_degree if base_shift is None else as_degree(base_shift, ring.channels)
    return KoszulData(ring, s, s_Y, W, w, slot_degrees, base_shift)


def koszul_brane(data: KoszulData) -> MatrixFactorization:
    """d = s_Y ∧ (-) + s ⌟ (-) on the exterior algebra of rank r.

    Even part: even exterior degrees; basis subsets in colex order.  The
    generator ``e_S`` has shift ``base + sum_{i in S} c_i - floor(|S|/2) w``.
    """
    ring, r, w = data.ring, data.r, data.w
    even, odd = exterior_basis(r)
    e_idx = {m: k for k, m in enumerate(even)}
    o_idx = {m: k for k, m in enumerate(odd)}

    def shift(mask):
        s = data.base_shift
        for i in range(r):
            if mask >> i & 1:
                s = add_degrees(s, data.slot_degrees[i])
        return sub_degrees(s, scale_degree(w, _popcount(mask) // 2))

    zero = ring.zero()
    alpha = [[zero] * len(even) for _ in odd]
    beta = [[zero] * len(odd) for _ in even]
    for src_list, tgt_idx, mat in ((even, o_idx, alpha), (odd, e_idx, beta)):
        for col, mask in enumerate(src_list):
            for i in range(r):
                sign = _sign_before(mask, i)
                if mask >> i & 1:
                    coeff, target = data.s[i], mask & ~(1 << i)
                else:
                    coeff, target = data.s_Y[i], mask | (1 << i)
                if coeff:
                    row = tgt_idx[target]
                    mat[row][col] = mat[row][col] + coeff * sign
    return make_mf(ring, data.W, [shift(m) for m in even], [shift(m) for m in odd], alpha, beta, w)


# ------------------------------------------------------------------ knörrer

def knorrer_lift(base_shifts: Sequence, data: KoszulData, base_ring: GradedRing | None = None) -> MatrixFactorization:
    """Pull a free module on the base back and tensor with the Koszul brane.

    ``base_shifts`` lists the generator shifts of a free graded module over
    ``base_ring``.  Every base variable must be an ambient variable of the
    same degree that does not occur in the section ``s_Y``.
    """
    ring = data.ring
    if base_ring is not None:
        for name, deg in zip(base_ring.names, base_ring.degrees):
            if name not in ring.names:
                raise VariableLeak(f"base variable {name} is not in {ring}")
            if ring.degrees[ring.index(name)][: len(deg)] != deg:
                raise VariableLeak(f"base variable {name} has a different degree in {ring}")
            for i, sy in enumerate(data.s_Y):
                if name in sy.variables():
                    raise VariableLeak(f"base variable {name} occurs in the fiber section s_Y[{i}] = {sy}")
    K = koszul_brane(data)
    result = zero_mf(ring, data.W, data.w)
    for shift in base_shifts:
        result = direct_sum(result, twist(K, as_degree(shift, ring.channels)))
    return result


# ------------------------------------------------------------------ coker

@dataclass(frozen=True)
class CokerPresentation:
    """coker(beta: P1(-w) -> P0) as a graded module over R/(W)."""

    mf: MatrixFactorization

    @property
    def matrix(self) -> GradedMatrix:
        return self.mf.beta

    @property
    def generator_shifts(self):
        return self.mf.shifts0

    @property
    def relation_shifts(self):
        return tuple(sub_degrees(s, self.mf.w) for s in self.mf.shifts1)

    def hilbert_function(self, degree) -> int:
        """dim_Q of the cokernel in the given degree (slice linear algebra)."""
        mf = self.mf
        ring = mf.ring
        if ring.slicing_channel is None:
            raise NoSlicingChannel(f"{ring} has no slicing channel")
        degree = as_degree(degree, ring.channels)
        coords = {}
        for i, s in enumerate(mf.shifts0):
            for m in monomial_basis(ring, add_degrees(degree, s)):
                coords[(i, m)] = len(coords)
        if not coords:
            return 0
        rows = []

        def add_vector(column_polys, mdeg):
            for m in monomial_basis(ring, mdeg):
                vec = {}
                for i, p in column_polys:
                    for pm, c in p.mul_monomial(m).terms.items():
                        k = coords[(i, pm)]
                        vec[k] = vec.get(k, 0) + c
                vec = {k: v for k, v in vec.items() if v}
                if vec:
                    rows.append(vec)

        for j, s in enumerate(mf.shifts1):
            col = [(i, mf.beta.entries[i][j]) for i in range(len(mf.shifts0)) if mf.beta.entries[i][j]]
            if col:
                add_vector(col, sub_degrees(add_degrees(degree, s), mf.w))
        if mf.W:
            for i, s in enumerate(mf.shifts0):
                add_vector([(i, mf.W)], sub_degrees(add_degrees(degree, s), mf.w))
        return len(coords) - rank(rows, len(coords))

    def hilbert_series(self, lo: int, hi: int) -> list:
        return [self.hilbert_function(k) for k in range(lo, hi + 1)]


def coker_presentation(mf: MatrixFactorization) -> CokerPresentation:
    return CokerPresentation(mf)
