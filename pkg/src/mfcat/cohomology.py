"""Hom complexes between factorizations and their degree-sliced cohomology.

For factorizations ``P``, ``Q`` of the same ``W`` (degree ``w``) let
``E_k`` be the even morphisms of degree ``k`` and ``O_k`` the odd ones
(see :mod:`mfcat.mfcore` for the weight conventions).  The differential
maps ``E_k -> O_k`` and ``O_k -> E_{k+w}``, so

    H_even(k) = ker(E_k -> O_k) / im(O_{k-w} -> E_k)
    H_odd(k)  = ker(O_k -> E_{k+w}) / im(E_k -> O_k)

Each space is finite dimensional when the ring has a slicing channel.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    MFCatError,
    NoSlicingChannel,
    NotClosed,
    PotentialMismatch,
    RingMismatch,
    SliceInfinite,
)
from .linalg import nullspace, rank, solve, span_complement
from .mfcore import MatrixFactorization, MFMorphism, _morphism_specs
from .ring import add_degrees, as_degree, monomial_basis, sub_degrees


class HomComplex:
    """Hom(P, Q) with d(phi) = d_Q phi - (-1)^|phi| phi d_P."""

    def __init__(self, source: MatrixFactorization, target: MatrixFactorization, *, strict=True):
        if source.ring != target.ring:
            raise RingMismatch(f"{source.ring} vs {target.ring}")
        if source.W != target.W or source.w != target.w:
            raise PotentialMismatch(f"{source.W} vs {target.W}")
        self.source = source
        self.target = target
        self.ring = source.ring
        self.w = source.w
        self.d_squared_zero = self._check_d_squared()
        if strict and not self.d_squared_zero:
            raise MFCatError("d^2 != 0 on the Hom complex: an input is not a factorization")
        self._basis_cache = {}
        self._matrix_cache = {}

    def _check_d_squared(self) -> bool:
        # d^2(phi) = d_Q^2 phi - phi d_P^2, which vanishes iff both curvatures equal W
        return not self.source.curvature_errors() and not self.target.curvature_errors()

    # block layout: (name, rows, cols, weight offset)

    def blocks(self, parity: int):
        P, Q = self.source, self.target
        rows0, rows1, _, extra = _morphism_specs(P, Q, self.ring.zero_degree, parity)
        return ((rows0, P.shifts0, self.ring.zero_degree), (rows1, P.shifts1, extra))

    def rank(self, parity: int) -> int:
        """Rank of the even/odd part as a free R-module."""
        (r0, c0, _), (r1, c1, _) = self.blocks(parity)
        return len(r0) * len(c0) + len(r1) * len(c1)

    def _require_slicing(self):
        ring = self.ring
        if ring.slicing_channel is None:
            if all(not any(d) for d in ring.degrees) and ring.nvars:
                raise SliceInfinite(f"{ring} is ungraded: degree slices are infinite dimensional")
            raise NoSlicingChannel(f"{ring} has no channel with all variable degrees positive")

    def basis(self, parity: int, degree) -> list:
        """Coordinates (block, i, j, monomial) of the degree slice."""
        self._require_slicing()
        degree = as_degree(degree, self.ring.channels)
        key = (parity, degree)
        if key not in self._basis_cache:
            coords = []
            for b, (rows, cols, offset) in enumerate(self.blocks(parity)):
                for i, rs in enumerate(rows):
                    for j, cs in enumerate(cols):
                        d = add_degrees(add_degrees(sub_degrees(rs, cs), degree), offset)
                        for m in monomial_basis(self.ring, d):
                            coords.append((b, i, j, m))
            self._basis_cache[key] = coords
        return self._basis_cache[key]

    def index(self, parity, degree) -> dict:
        return {c: n for n, c in enumerate(self.basis(parity, degree))}

    def dimension(self, parity, degree) -> int:
        return len(self.basis(parity, degree))

    def _image_of_unit(self, parity, b, i, j, m):
        """d of the morphism with a single monomial ``m`` at entry (i, j) of block b.

        Returns dict (block, row, col) -> Polynomial for the opposite parity.
        """
        P, Q = self.source, self.target
        out = {}

        def add(key, p):
            if p:
                out[key] = out[key] + p if key in out else p

        def left(M, tb, sign):
            # (M @ E_ij m): column j gets M[:, i] * m
            for r in range(len(M.rows)):
                e = M.entries[r][i]
                if e:
                    add((tb, r, j), e.mul_monomial(m, sign))

        def right(M, tb, sign):
            # (E_ij m @ M): row i gets m * M[j, :]
            for c in range(len(M.cols)):
                e = M.entries[j][c]
                if e:
                    add((tb, i, c), e.mul_monomial(m, sign))

        if parity == 0:
            # out0 = alpha_Q phi0 - phi1 alpha_P ; out1 = beta_Q phi1 - phi0 beta_P
            if b == 0:
                left(Q.alpha, 0, 1)
                right(P.beta, 1, -1)
            else:
                left(Q.beta, 1, 1)
                right(P.alpha, 0, -1)
        else:
            # out0 = beta_Q psi0 + psi1 alpha_P ; out1 = alpha_Q psi1 + psi0 beta_P
            if b == 0:
                left(Q.beta, 0, 1)
                right(P.beta, 1, 1)
            else:
                left(Q.alpha, 1, 1)
                right(P.alpha, 0, 1)
        return out

    def differential_matrix(self, parity: int, degree):
        """Sparse rows of d restricted to the slice, as a list of columns.

        Returns ``(columns, target_dim)`` where ``columns[n]`` is the image
        of the n-th basis vector as a dict over the target coordinates.
        Even slices map to odd slices of the same degree; odd slices of
        degree k map to even slices of degree k + w.
        """
        degree = as_degree(degree, self.ring.channels)
        key = (parity, degree)
        if key in self._matrix_cache:
            return self._matrix_cache[key]
        tdeg = degree if parity == 0 else add_degrees(degree, self.w)
        tindex = self.index(1 - parity, tdeg)
        columns = []
        for (b, i, j, m) in self.basis(parity, degree):
            vec = {}
            for (tb, r, c), p in self._image_of_unit(parity, b, i, j, m).items():
                for pm, coeff in p.terms.items():
                    k = tindex[(tb, r, c, pm)]
                    vec[k] = vec.get(k, 0) + coeff
            columns.append({k: v for k, v in vec.items() if v})
        result = (columns, len(tindex))
        self._matrix_cache[key] = result
        return result

    def map_rank(self, parity, degree) -> int:
        columns, tdim = self.differential_matrix(parity, degree)
        return rank(columns, tdim)

    def kernel(self, parity, degree) -> list:
        columns, tdim = self.differential_matrix(parity, degree)
        rows = [dict() for _ in range(tdim)]
        for n, col in enumerate(columns):
            for k, v in col.items():
                rows[k][n] = v
        return nullspace(rows, len(columns))

    def image(self, parity, degree) -> list:
        """Spanning vectors of d(slice) inside the opposite-parity slice."""
        columns, _ = self.differential_matrix(parity, degree)
        return [c for c in columns if c]

    # conversions

    def to_morphism(self, parity, degree, vec) -> MFMorphism:
        degree = as_degree(degree, self.ring.channels)
        blocks = [[[self.ring.zero() for _ in cols] for _ in rows] for rows, cols, _ in self.blocks(parity)]
        coords = self.basis(parity, degree)
        for n, c in vec.items():
            b, i, j, m = coords[n]
            blocks[b][i][j] = blocks[b][i][j] + self.ring.monomial(m, c)
        return MFMorphism(self.source, self.target, degree, parity, blocks[0], blocks[1], check=False)

    def to_vector(self, phi: MFMorphism) -> dict:
        index = self.index(phi.parity, phi.weight)
        vec = {}
        for b, block in enumerate((phi.block0, phi.block1)):
            for i, row in enumerate(block.entries):
                for j, p in enumerate(row):
                    for m, c in p.terms.items():
                        try:
                            k = index[(b, i, j, m)]
                        except KeyError:
                            raise MFCatError(f"morphism is not homogeneous of degree {phi.weight}") from None
                        vec[k] = c
        return vec


def hom_complex(E: MatrixFactorization, F: MatrixFactorization) -> HomComplex:
    return HomComplex(E, F)


@dataclass
class SliceReport:
    degree: tuple
    dim_even_space: int
    dim_odd_space: int
    dim_H_even: int
    dim_H_odd: int
    rank_even_to_odd: int = 0
    rank_odd_to_even_in: int = 0
    rank_odd_to_even_out: int = 0
    even_representatives: list = field(default_factory=list, repr=False)
    odd_representatives: list = field(default_factory=list, repr=False)

    def euler_identity_holds(self) -> bool:
        """dim H_even - dim H_odd == dim E_k - dim O_k."""
        return self.dim_H_even - self.dim_H_odd == self.dim_even_space - self.dim_odd_space

    def rank_nullity_holds(self) -> bool:
        """The identity that always holds for the unrolled complex O_{k-w} -> E_k -> O_k -> E_{k+w}."""
        return (self.dim_H_even - self.dim_H_odd
                == self.dim_even_space - self.dim_odd_space
                - self.rank_odd_to_even_in + self.rank_odd_to_even_out)

    def is_zero(self) -> bool:
        return self.dim_H_even == 0 and self.dim_H_odd == 0

    def as_dict(self) -> dict:
        return {
            "degree": list(self.degree),
            "dim_even_space": self.dim_even_space,
            "dim_odd_space": self.dim_odd_space,
            "dim_H_even": self.dim_H_even,
            "dim_H_odd": self.dim_H_odd,
        }


def cohomology_slice(hc: HomComplex, degree, representatives=False) -> SliceReport:
    degree = as_degree(degree, hc.ring.channels)
    prev = sub_degrees(degree, hc.w)
    nxt_rank = hc.map_rank(1, degree)
    r_even = hc.map_rank(0, degree)
    r_in = hc.map_rank(1, prev)
    dim_e = hc.dimension(0, degree)
    dim_o = hc.dimension(1, degree)
    report = SliceReport(
        degree=degree,
        dim_even_space=dim_e,
        dim_odd_space=dim_o,
        dim_H_even=dim_e - r_even - r_in,
        dim_H_odd=dim_o - nxt_rank - r_even,
        rank_even_to_odd=r_even,
        rank_odd_to_even_in=r_in,
        rank_odd_to_even_out=nxt_rank,
    )
    if representatives:
        if report.dim_H_even:
            reps = span_complement(hc.image(1, prev), hc.kernel(0, degree), dim_e)
            report.even_representatives = [hc.to_morphism(0, degree, v) for v in reps]
        if report.dim_H_odd:
            reps = span_complement(hc.image(0, degree), hc.kernel(1, degree), dim_o)
            report.odd_representatives = [hc.to_morphism(1, degree, v) for v in reps]
    return report


@dataclass
class ExtTable:
    window: tuple
    slices: list
    truncated: bool = True

    def __iter__(self):
        return iter(self.slices)

    def __getitem__(self, degree):
        if isinstance(degree, int):
            degree = (degree,)
        for s in self.slices:
            if s.degree == tuple(degree):
                return s
        raise KeyError(degree)

    def nonzero(self) -> list:
        return [s for s in self.slices if not s.is_zero()]

    def totals(self):
        return sum(s.dim_H_even for s in self.slices), sum(s.dim_H_odd for s in self.slices)

    def dims(self) -> dict:
        return {s.degree: (s.dim_H_even, s.dim_H_odd) for s in self.slices}

    def as_dict(self) -> dict:
        return {
            "window": [list(d) for d in self.window] if self.window and isinstance(self.window[0], tuple) else list(self.window),
            "truncated": self.truncated,
            "slices": [s.as_dict() for s in self.slices],
            "totals": list(self.totals()),
        }


def default_window(ring) -> tuple:
    c = ring.slicing_channel
    top = max((d[c] for d in ring.degrees), default=1) if c is not None else 1
    return (-2 * top, 2 * top)


def window_degrees(ring, window) -> list:
    """Degrees covered by a window: ``(lo, hi)`` for one channel, else explicit list."""
    if window is None:
        window = default_window(ring)
    if len(window) == 2 and all(isinstance(x, int) for x in window):
        lo, hi = window
        if ring.channels != 1:
            raise ValueError("integer windows need a single-channel ring; pass explicit degrees")
        return [(k,) for k in range(lo, hi + 1)]
    return [as_degree(d, ring.channels) for d in window]


def ext_table(E, F, window=None, representatives=False) -> ExtTable:
    """Cohomology slices of Hom(E, F) over a window of degrees."""
    hc = E if isinstance(E, HomComplex) else HomComplex(E, F)
    if window is None:
        window = default_window(hc.ring)
    degrees = window_degrees(hc.ring, window)
    slices = [cohomology_slice(hc, d, representatives) for d in degrees]
    return ExtTable(tuple(window), slices, truncated=True)


def find_nullhomotopy(phi: MFMorphism, hc: HomComplex | None = None):
    """A morphism h with d(h) = phi, or None if phi is not null-homotopic."""
    hc = hc or HomComplex(phi.source, phi.target)
    if not phi.differential().is_zero():
        raise NotClosed("d(phi) != 0")
    rhs = hc.to_vector(phi)
    if phi.parity == 0:
        hparity, hdeg = 1, sub_degrees(phi.weight, hc.w)
    else:
        hparity, hdeg = 0, phi.weight
    columns, tdim = hc.differential_matrix(hparity, hdeg)
    if not rhs:
        return MFMorphism.zero(phi.source, phi.target, hdeg, hparity)
    rows = [dict() for _ in range(tdim)]
    for n, col in enumerate(columns):
        for k, v in col.items():
            rows[k][n] = v
    x = solve(rows, len(columns), rhs)
    if x is None:
        return None
    return hc.to_morphism(hparity, hdeg, x)


def is_nullhomotopic(phi: MFMorphism, hc: HomComplex | None = None) -> bool:
    return find_nullhomotopy(phi, hc) is not None


@dataclass
class AnnihilationReport:
    ok: bool
    checked: int
    failures: list
    generators: list
    d_squared_zero: bool = True

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "generators": [str(g) for g in self.generators],
            "d_squared_zero": self.d_squared_zero,
            "failures": self.failures,
        }


def _solvable(hc, parity, degree, rhs) -> bool:
    columns, tdim = hc.differential_matrix(parity, degree)
    if not rhs:
        return True
    rows = [dict() for _ in range(tdim)]
    for n, col in enumerate(columns):
        for k, v in col.items():
            rows[k][n] = v
    return solve(rows, len(columns), rhs) is not None


def tyurina_annihilation(E, F=None, window=None, generators=None) -> AnnihilationReport:
    """Check that every Tyurina generator kills every cohomology class in the window.

    For a class phi and generator g, g*phi must be d of something.  Works
    on unverified inputs too, reporting a broken d^2 as a failure.
    """
    from .singularity import tyurina_generators

    F = E if F is None else F
    hc = HomComplex(E, F, strict=False)
    gens = list(generators) if generators is not None else tyurina_generators(E.W)
    if window is None:
        window = default_window(hc.ring)
    failures = []
    if not hc.d_squared_zero:
        failures.append({"reason": "d^2 != 0 on Hom complex"})
    checked = 0
    for degree in window_degrees(hc.ring, window):
        rep = cohomology_slice(hc, degree, representatives=True)
        for parity, reps in ((0, rep.even_representatives), (1, rep.odd_representatives)):
            for phi in reps:
                for g in gens:
                    gd = g.homogeneous_degree()
                    if gd is None:
                        failures.append({"generator": str(g), "reason": "inhomogeneous generator"})
                        continue
                    checked += 1
                    prod = phi.scale(g)
                    if prod.is_zero():
                        continue
                    if parity == 0:
                        hpar, hdeg = 1, sub_degrees(prod.weight, hc.w)
                    else:
                        hpar, hdeg = 0, prod.weight
                    if not _solvable(hc, hpar, hdeg, hc.to_vector(prod)):
                        failures.append({
                            "generator": str(g),
                            "degree": list(degree),
                            "parity": "odd" if parity else "even",
                            "class": str(phi),
                        })
    return AnnihilationReport(not failures, checked, failures, gens, hc.d_squared_zero)
