"""Graded matrix factorizations and their basic operations.

Conventions
-----------
A factorization of ``W`` (homogeneous of degree ``w``) is a pair of free
modules ``P0 = ⊕ R(shifts0[j])`` and ``P1 = ⊕ R(shifts1[j])`` with

* ``alpha: P0 -> P1`` of weight 0,
* ``beta:  P1 -> P0`` of weight ``w``,

and ``alpha @ beta == W * id`` and ``beta @ alpha == W * id``.  A matrix
entry ``(i, j)`` of a map of weight ``k`` has degree
``rows[i] - cols[j] + k``.

Morphisms ``P -> Q`` of degree ``k``: an even one is a pair
``(P0 -> Q0, P1 -> Q1)`` of weight ``k``; an odd one is a pair
``(P0 -> Q1, P1 -> Q0)`` of weights ``k`` and ``k + w``, i.e. an even
morphism ``P -> suspension(Q)`` of weight ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CurvatureMismatch,
    HomogeneityViolation,
    NotClosed,
    ParityMismatch,
    PotentialMismatch,
    RingMismatch,
    ShapeMismatch,
)
from .ring import (
    ANY_DEGREE,
    GradedRing,
    Polynomial,
    add_degrees,
    as_degree,
    sub_degrees,
)


def _shift_list(ring, shifts) -> tuple:
    return tuple(as_degree(s, ring.channels) for s in shifts)


def _to_poly(ring, value) -> Polynomial:
    if isinstance(value, Polynomial):
        if value.ring != ring:
            raise RingMismatch(f"entry {value} lives in {value.ring}, not {ring}")
        return value
    return ring(value)


class GradedMatrix:
    """Matrix of polynomials mapping ``⊕R(cols)`` to ``⊕R(rows)`` with a weight."""

    __slots__ = ("ring", "rows", "cols", "weight", "entries")

    def __init__(self, ring: GradedRing, rows, cols, weight, entries=None):
        self.ring = ring
        self.rows = _shift_list(ring, rows)
        self.cols = _shift_list(ring, cols)
        self.weight = as_degree(weight, ring.channels)
        if entries is None:
            entries = [[ring.zero()] * len(self.cols) for _ in self.rows]
        if len(entries) != len(self.rows) or any(len(r) != len(self.cols) for r in entries):
            raise ShapeMismatch(
                f"entries of shape {len(entries)}x{len(entries[0]) if entries else 0} "
                f"do not match {len(self.rows)} rows and {len(self.cols)} columns"
            )
        self.entries = tuple(tuple(_to_poly(ring, e) for e in r) for r in entries)

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def expected_degree(self, i, j):
        return add_degrees(sub_degrees(self.rows[i], self.cols[j]), self.weight)

    def homogeneity_errors(self, name="matrix") -> list:
        problems = []
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if not e:
                    continue
                want = self.expected_degree(i, j)
                got = e.homogeneous_degree()
                if got != want:
                    got_s = "inhomogeneous" if got is None else str(got)
                    problems.append(f"{name}[{i}][{j}] = {e} has degree {got_s}, expected {want}")
        return problems

    def is_homogeneous(self) -> bool:
        return not self.homogeneity_errors()

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        if len(self.cols) != len(other.rows):
            raise ShapeMismatch(f"cannot compose {self.shape} with {other.shape}")
        n, m, k = len(self.rows), len(other.cols), len(self.cols)
        zero = self.ring.zero()
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = zero
                for t in range(k):
                    a = self.entries[i][t]
                    if a:
                        b = other.entries[t][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(self.ring, self.rows, other.cols, add_degrees(self.weight, other.weight), out)

    def _combine(self, other, sign):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        out = [[a + b if sign > 0 else a - b for a, b in zip(r1, r2)]
               for r1, r2 in zip(self.entries, other.entries)]
        return GradedMatrix(self.ring, self.rows, self.cols, self.weight, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.map_entries(lambda e: -e)

    def scale(self, p, weight_shift=None) -> "GradedMatrix":
        """Multiply every entry by the polynomial (or number) ``p``."""
        if weight_shift is None:
            weight_shift = self.ring.zero_degree
            if isinstance(p, Polynomial):
                d = p.homogeneous_degree()
                if d not in (None, ANY_DEGREE):
                    weight_shift = d
        return GradedMatrix(
            self.ring, self.rows, self.cols, add_degrees(self.weight, weight_shift),
            [[e * p for e in r] for r in self.entries],
        )

    def map_entries(self, f, rows=None, cols=None, weight=None) -> "GradedMatrix":
        return GradedMatrix(
            self.ring,
            self.rows if rows is None else rows,
            self.cols if cols is None else cols,
            self.weight if weight is None else weight,
            [[f(e) for e in r] for r in self.entries],
        )

    def transpose(self, rows, cols, weight) -> "GradedMatrix":
        n, m = self.shape
        return GradedMatrix(self.ring, rows, cols, weight,
                            [[self.entries[i][j] for i in range(n)] for j in range(m)])

    def is_zero(self) -> bool:
        return all(not e for r in self.entries for e in r)

    def same_entries(self, other) -> bool:
        return self.shape == other.shape and self.entries == other.entries

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows and self.cols == other.cols
                and self.weight == other.weight and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.weight, self.entries))

    def tolist(self) -> list:
        return [[str(e) for e in r] for r in self.entries]

    def __repr__(self):
        return f"GradedMatrix({self.tolist()}, weight={self.weight})"


def identity_matrix(ring, shifts) -> GradedMatrix:
    shifts = _shift_list(ring, shifts)
    n = len(shifts)
    return GradedMatrix(ring, shifts, shifts, ring.zero_degree,
                        [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)])


def zero_matrix(ring, rows, cols, weight) -> GradedMatrix:
    return GradedMatrix(ring, rows, cols, weight)


def assemble(ring, row_shifts: Sequence, col_shifts: Sequence, weight, blocks) -> GradedMatrix:
    """Block matrix from GradedMatrix blocks (or None); shifts are per block."""
    rows = [s for part in row_shifts for s in part]
    cols = [s for part in col_shifts for s in part]
    entries = []
    zero = ring.zero()
    for bi, part in enumerate(row_shifts):
        for r in range(len(part)):
            row = []
            for bj, cpart in enumerate(col_shifts):
                b = blocks[bi][bj]
                if b is None:
                    row.extend([zero] * len(cpart))
                else:
                    row.extend(b.entries[r])
            entries.append(row)
    return GradedMatrix(ring, rows, cols, weight, entries)


# --------------------------------------------------------- factorizations

class MatrixFactorization:
    """Verified graded matrix factorization; see the module docstring."""

    __slots__ = ("ring", "W", "w", "shifts0", "shifts1", "alpha", "beta")

    def __init__(self, ring, W, shifts0, shifts1, alpha, beta, w=None, *, verify=True):
        W = _to_poly(ring, W)
        if w is None:
            d = W.homogeneous_degree()
            if d is None:
                raise HomogeneityViolation(f"potential {W} is not homogeneous")
            if d is ANY_DEGREE:
                raise ShapeMismatch("the zero potential needs an explicit degree w")
            w = d
        w = as_degree(w, ring.channels)
        shifts0 = _shift_list(ring, shifts0)
        shifts1 = _shift_list(ring, shifts1)
        if not isinstance(alpha, GradedMatrix):
            alpha = GradedMatrix(ring, shifts1, shifts0, ring.zero_degree, _entries(alpha, len(shifts1), len(shifts0)))
        if not isinstance(beta, GradedMatrix):
            beta = GradedMatrix(ring, shifts0, shifts1, w, _entries(beta, len(shifts0), len(shifts1)))
        self.ring = ring
        self.W = W
        self.w = w
        self.shifts0 = shifts0
        self.shifts1 = shifts1
        self.alpha = alpha
        self.beta = beta
        if verify:
            self.verify()

    @classmethod
    def unchecked(cls, ring, W, shifts0, shifts1, alpha, beta, w=None):
        """Build without verification (negative controls and diagnostics only)."""
        return cls(ring, W, shifts0, shifts1, alpha, beta, w, verify=False)

    # verification

    def shape_errors(self) -> list:
        problems = []
        if self.alpha.shape != (len(self.shifts1), len(self.shifts0)):
            problems.append(f"alpha has shape {self.alpha.shape}, expected {(len(self.shifts1), len(self.shifts0))}")
        if self.beta.shape != (len(self.shifts0), len(self.shifts1)):
            problems.append(f"beta has shape {self.beta.shape}, expected {(len(self.shifts0), len(self.shifts1))}")
        if self.alpha.rows != self.shifts1 or self.alpha.cols != self.shifts0 or any(self.alpha.weight):
            problems.append("alpha metadata does not match P0 -> P1 of weight 0")
        if self.beta.rows != self.shifts0 or self.beta.cols != self.shifts1 or self.beta.weight != self.w:
            problems.append("beta metadata does not match P1 -> P0 of weight w")
        return problems

    def homogeneity_errors(self) -> list:
        problems = []
        d = self.W.homogeneous_degree()
        if d is None or (d is not ANY_DEGREE and d != self.w):
            problems.append(f"potential {self.W} is not homogeneous of degree {self.w}")
        problems += self.alpha.homogeneity_errors("alpha")
        problems += self.beta.homogeneity_errors("beta")
        return problems

    def curvature_errors(self) -> list:
        problems = []
        for left, right in (("alpha", "beta"), ("beta", "alpha")):
            prod = getattr(self, left) @ getattr(self, right)
            n = prod.shape[0]
            for i in range(n):
                for j in range(n):
                    want = self.W if i == j else self.ring.zero()
                    if prod.entries[i][j] != want:
                        problems.append(f"({left}*{right})[{i}][{j}] = {prod.entries[i][j]}, expected {want} "
                                        f"({left} row {i} times {right} column {j})")
        return problems

    def diagnose(self) -> dict:
        shape = self.shape_errors()
        if shape:
            return {"shape": shape, "homogeneity": [], "curvature": []}
        return {"shape": [], "homogeneity": self.homogeneity_errors(), "curvature": self.curvature_errors()}

    def verify(self):
        report = self.diagnose()
        if report["shape"]:
            raise ShapeMismatch("; ".join(report["shape"]))
        if report["curvature"]:
            raise CurvatureMismatch("; ".join(report["curvature"]))
        if report["homogeneity"]:
            raise HomogeneityViolation("; ".join(report["homogeneity"]))
        return self

    def is_valid(self) -> bool:
        return not any(self.diagnose().values())

    # structure

    @property
    def rank(self):
        return len(self.shifts0), len(self.shifts1)

    def differential(self) -> list:
        """Full matrix of d on P0 ⊕ P1 as nested lists of polynomials."""
        n0, n1 = self.rank
        zero = self.ring.zero()
        rows = []
        for i in range(n0):
            rows.append([zero] * n0 + list(self.beta.entries[i]))
        for i in range(n1):
            rows.append(list(self.alpha.entries[i]) + [zero] * n1)
        return rows

    def same_data(self, other) -> bool:
        return (self.ring == other.ring and self.W == other.W and self.w == other.w
                and self.shifts0 == other.shifts0 and self.shifts1 == other.shifts1
                and self.alpha.entries == other.alpha.entries and self.beta.entries == other.beta.entries)

    def __eq__(self, other):
        if not isinstance(other, MatrixFactorization):
            return NotImplemented
        return self.same_data(other)

    def __hash__(self):
        return hash((self.W, self.w, self.shifts0, self.shifts1, self.alpha.entries, self.beta.entries))

    def to_dict(self) -> dict:
        def shifts(lst):
            return [list(s) for s in lst]

        return {
            "potential": str(self.W),
            "w": list(self.w),
            "shifts0": shifts(self.shifts0),
            "shifts1": shifts(self.shifts1),
            "alpha": self.alpha.tolist(),
            "beta": self.beta.tolist(),
        }

    def __repr__(self):
        return (f"MatrixFactorization(W={self.W}, rank={self.rank}, shifts0={list(self.shifts0)}, "
                f"shifts1={list(self.shifts1)}, alpha={self.alpha.tolist()}, beta={self.beta.tolist()})")


def _entries(value, nrows, ncols):
    if nrows == 0:
        return []
    if ncols == 0:
        return [[] for _ in range(nrows)]
    return value


def make_mf(ring, W, shifts0, shifts1, alpha, beta, w=None) -> MatrixFactorization:
    """Construct and verify a factorization; raises on any defect."""
    return MatrixFactorization(ring, W, shifts0, shifts1, alpha, beta, w)


def zero_mf(ring, W, w=None) -> MatrixFactorization:
    return MatrixFactorization(ring, W, [], [], [], [], w)


def suspension(mf: MatrixFactorization) -> MatrixFactorization:
    """Shift [1]: swap P0, P1, twist the new odd part by w and negate d."""
    ring, w = mf.ring, mf.w
    s0 = mf.shifts1
    s1 = tuple(add_degrees(s, w) for s in mf.shifts0)
    alpha = GradedMatrix(ring, s1, s0, ring.zero_degree, [[-e for e in r] for r in mf.beta.entries])
    beta = GradedMatrix(ring, s0, s1, w, [[-e for e in r] for r in mf.alpha.entries])
    return MatrixFactorization(ring, mf.W, s0, s1, alpha, beta, w, verify=False)


def twist(mf: MatrixFactorization, k) -> MatrixFactorization:
    """Module twist (k): add ``k`` to every generator shift."""
    ring = mf.ring
    k = as_degree(k, ring.channels)
    s0 = tuple(add_degrees(s, k) for s in mf.shifts0)
    s1 = tuple(add_degrees(s, k) for s in mf.shifts1)
    alpha = GradedMatrix(ring, s1, s0, mf.alpha.weight, mf.alpha.entries)
    beta = GradedMatrix(ring, s0, s1, mf.beta.weight, mf.beta.entries)
    return MatrixFactorization(ring, mf.W, s0, s1, alpha, beta, mf.w, verify=False)


def _check_compatible(a, b):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if a.W != b.W or a.w != b.w:
        raise PotentialMismatch(f"{a.W} (degree {a.w}) vs {b.W} (degree {b.w})")


def direct_sum(a: MatrixFactorization, b: MatrixFactorization) -> MatrixFactorization:
    _check_compatible(a, b)
    ring = a.ring
    s0 = a.shifts0 + b.shifts0
    s1 = a.shifts1 + b.shifts1
    alpha = assemble(ring, [a.shifts1, b.shifts1], [a.shifts0, b.shifts0], ring.zero_degree,
                     [[a.alpha, None], [None, b.alpha]])
    beta = assemble(ring, [a.shifts0, b.shifts0], [a.shifts1, b.shifts1], a.w,
                    [[a.beta, None], [None, b.beta]])
    return MatrixFactorization(ring, a.W, s0, s1, alpha, beta, a.w, verify=False)


def dual(mf: MatrixFactorization) -> MatrixFactorization:
    """Factorization of -W on Hom(P, R) with P0, P1 exchanged.

    New ``P0 = P1^v`` with shifts ``-shifts1``, new ``P1 = P0^v`` with
    shifts ``-shifts0``, ``alpha' = alpha^T`` and ``beta' = -beta^T``.
    Applying it twice returns the input exactly.
    """
    ring, w = mf.ring, mf.w
    s0 = tuple(tuple(-x for x in s) for s in mf.shifts1)
    s1 = tuple(tuple(-x for x in s) for s in mf.shifts0)
    alpha = mf.alpha.transpose(s1, s0, ring.zero_degree)
    beta = mf.beta.transpose(s0, s1, w).map_entries(lambda e: -e)
    return MatrixFactorization(ring, -mf.W, s0, s1, alpha, beta, w, verify=False)


def leibniz_homotopy(mf: MatrixFactorization, var: str):
    """Differentiate d entrywise and check d·∂d + ∂d·d == (∂W)·id.

    Returns ``(d_alpha, d_beta, verified)``.
    """
    ring = mf.ring
    ring.index(var)
    da = mf.alpha.map_entries(lambda e: e.derivative(var))
    db = mf.beta.map_entries(lambda e: e.derivative(var))
    dW = mf.W.derivative(var)
    ok = True
    for lhs, n in (((db @ mf.alpha) + (mf.beta @ da), len(mf.shifts0)),
                   ((da @ mf.beta) + (mf.alpha @ db), len(mf.shifts1))):
        for i in range(n):
            for j in range(n):
                if lhs.entries[i][j] != (dW if i == j else ring.zero()):
                    ok = False
    return da, db, ok


# -------------------------------------------------------------- morphisms

def _morphism_specs(source, target, weight, parity):
    """Target shifts and weights of (block0, block1)."""
    if parity == 0:
        return target.shifts0, target.shifts1, weight, weight
    return target.shifts1, target.shifts0, weight, add_degrees(weight, source.w)


class MFMorphism:
    """Homogeneous morphism of degree ``weight`` and parity 0 (even) or 1 (odd).

    ``block0`` starts at P0, ``block1`` at P1.  For odd morphisms
    ``block1`` has weight ``weight + w``.
    """

    __slots__ = ("source", "target", "weight", "parity", "block0", "block1")

    def __init__(self, source, target, weight, parity, block0, block1, *, check=True):
        if source.ring != target.ring:
            raise RingMismatch(f"{source.ring} vs {target.ring}")
        ring = source.ring
        self.source = source
        self.target = target
        self.weight = as_degree(weight, ring.channels)
        if parity not in (0, 1):
            raise ParityMismatch(f"parity must be 0 or 1, got {parity!r}")
        self.parity = parity
        rows0, rows1, w0, w1 = self._block_specs()
        if not isinstance(block0, GradedMatrix):
            block0 = GradedMatrix(ring, rows0, source.shifts0, w0, _entries(block0, len(rows0), len(source.shifts0)))
        if not isinstance(block1, GradedMatrix):
            block1 = GradedMatrix(ring, rows1, source.shifts1, w1, _entries(block1, len(rows1), len(source.shifts1)))
        self.block0 = block0
        self.block1 = block1
        if check:
            errs = self.homogeneity_errors()
            if errs:
                raise HomogeneityViolation("; ".join(errs))

    def _block_specs(self):
        return _morphism_specs(self.source, self.target, self.weight, self.parity)

    def homogeneity_errors(self) -> list:
        rows0, rows1, w0, w1 = self._block_specs()
        problems = []
        for name, b, rows, cols, wt in (("block0", self.block0, rows0, self.source.shifts0, w0),
                                        ("block1", self.block1, rows1, self.source.shifts1, w1)):
            if b.shape != (len(rows), len(cols)):
                problems.append(f"{name} has shape {b.shape}, expected {(len(rows), len(cols))}")
                continue
            probe = GradedMatrix(b.ring, rows, cols, wt, b.entries)
            problems += probe.homogeneity_errors(name)
        return problems

    @classmethod
    def identity(cls, mf) -> "MFMorphism":
        return cls(mf, mf, mf.ring.zero_degree, 0, identity_matrix(mf.ring, mf.shifts0),
                   identity_matrix(mf.ring, mf.shifts1))

    @classmethod
    def zero(cls, source, target, weight=None, parity=0) -> "MFMorphism":
        ring = source.ring
        weight = ring.zero_degree if weight is None else as_degree(weight, ring.channels)
        rows0, rows1, w0, w1 = _morphism_specs(source, target, weight, parity)
        return cls(source, target, weight, parity,
                   GradedMatrix(ring, rows0, source.shifts0, w0),
                   GradedMatrix(ring, rows1, source.shifts1, w1))

    def is_zero(self) -> bool:
        return self.block0.is_zero() and self.block1.is_zero()

    def differential(self) -> "MFMorphism":
        """d(phi) = d_Q phi - (-1)^|phi| phi d_P."""
        P, Q = self.source, self.target
        if self.parity == 0:
            b0 = (Q.alpha @ self.block0) - (self.block1 @ P.alpha)
            b1 = (Q.beta @ self.block1) - (self.block0 @ P.beta)
            return MFMorphism(P, Q, self.weight, 1, b0.entries, b1.entries, check=False)
        b0 = (Q.beta @ self.block0) + (self.block1 @ P.alpha)
        b1 = (Q.alpha @ self.block1) + (self.block0 @ P.beta)
        return MFMorphism(P, Q, add_degrees(self.weight, P.w), 0, b0.entries, b1.entries, check=False)

    def is_closed(self) -> bool:
        return self.differential().is_zero()

    def compose(self, first: "MFMorphism") -> "MFMorphism":
        """``self ∘ first``."""
        if first.target is not self.source and not first.target.same_data(self.source):
            raise ShapeMismatch("morphisms are not composable")
        w = self.source.w
        parity = (self.parity + first.parity) % 2
        weight = add_degrees(self.weight, first.weight)
        if self.parity == 0 and first.parity == 0:
            b0, b1 = self.block0 @ first.block0, self.block1 @ first.block1
        elif self.parity == 1 and first.parity == 0:
            b0, b1 = self.block0 @ first.block0, self.block1 @ first.block1
        elif self.parity == 0 and first.parity == 1:
            b0, b1 = self.block1 @ first.block0, self.block0 @ first.block1
        else:
            b0, b1 = self.block1 @ first.block0, self.block0 @ first.block1
            weight = add_degrees(weight, w)
        return MFMorphism(first.source, self.target, weight, parity, b0.entries, b1.entries, check=False)

    def scale(self, g: Polynomial) -> "MFMorphism":
        """Multiplication by a homogeneous polynomial ``g``."""
        d = g.homogeneous_degree()
        if d is None:
            raise HomogeneityViolation(f"{g} is not homogeneous")
        if d is ANY_DEGREE:
            return MFMorphism.zero(self.source, self.target, self.weight, self.parity)
        return MFMorphism(self.source, self.target, add_degrees(self.weight, d), self.parity,
                          [[e * g for e in r] for r in self.block0.entries],
                          [[e * g for e in r] for r in self.block1.entries], check=False)

    def __add__(self, other):
        if other.parity != self.parity or other.weight != self.weight:
            raise ParityMismatch("cannot add morphisms of different parity or degree")
        return MFMorphism(self.source, self.target, self.weight, self.parity,
                          (self.block0 + other.block0).entries, (self.block1 + other.block1).entries,
                          check=False)

    def __neg__(self):
        return MFMorphism(self.source, self.target, self.weight, self.parity,
                          (-self.block0).entries, (-self.block1).entries, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, MFMorphism):
            return NotImplemented
        return (self.parity == other.parity and self.weight == other.weight
                and self.block0.entries == other.block0.entries
                and self.block1.entries == other.block1.entries)

    def __hash__(self):
        return hash((self.parity, self.weight, self.block0.entries, self.block1.entries))

    def to_dict(self) -> dict:
        return {
            "parity": "odd" if self.parity else "even",
            "weight": list(self.weight),
            "block0": self.block0.tolist(),
            "block1": self.block1.tolist(),
        }

    def __repr__(self):
        kind = "odd" if self.parity else "even"
        return f"MFMorphism({kind}, weight={self.weight}, {self.block0.tolist()}, {self.block1.tolist()})"


def multiplication(mf: MatrixFactorization, g: Polynomial) -> MFMorphism:
    """The endomorphism ``g * id``."""
    return MFMorphism.identity(mf).scale(g)


def cone(phi: MFMorphism) -> MatrixFactorization:
    """Cone of a closed even weight-0 morphism ``phi: P -> Q``.

    The underlying module is ``Q ⊕ suspension(P)``, i.e.
    ``P0' = Q0 ⊕ P1`` and ``P1' = Q1 ⊕ P0(w)``, with

        alpha' = [[alpha_Q, phi_1], [0, -beta_P]]
        beta'  = [[beta_Q,  phi_0], [0, -alpha_P]]
    """
    if phi.parity != 0:
        raise ParityMismatch("the cone needs an even morphism")
    if any(phi.weight):
        raise ParityMismatch(f"the cone needs a weight-0 morphism, got weight {phi.weight}")
    if not phi.is_closed():
        raise NotClosed("d(phi) != 0")
    P, Q = phi.source, phi.target
    ring, w = P.ring, P.w
    _check_compatible(P, Q)
    sP = suspension(P)
    s0 = Q.shifts0 + sP.shifts0
    s1 = Q.shifts1 + sP.shifts1
    alpha = assemble(ring, [Q.shifts1, sP.shifts1], [Q.shifts0, sP.shifts0], ring.zero_degree,
                     [[Q.alpha, phi.block1], [None, sP.alpha]])
    beta = assemble(ring, [Q.shifts0, sP.shifts0], [Q.shifts1, sP.shifts1], w,
                    [[Q.beta, phi.block0], [None, sP.beta]])
    return make_mf(ring, Q.W, s0, s1, alpha, beta, w)


def change_ring(mf: MatrixFactorization, ring: GradedRing) -> MatrixFactorization:
    """Extend scalars to a ring containing the variables of ``mf`` (same degrees)."""
    for name, deg in zip(mf.ring.names, mf.ring.degrees):
        if name in ring.names and ring.degrees[ring.index(name)] != deg:
            raise RingMismatch(f"variable {name} has a different degree in {ring}")
    conv = lambda e: e.change_ring(ring)
    return MatrixFactorization(
        ring, mf.W.change_ring(ring), mf.shifts0, mf.shifts1,
        [[conv(e) for e in r] for r in mf.alpha.entries],
        [[conv(e) for e in r] for r in mf.beta.entries], mf.w,
    )
