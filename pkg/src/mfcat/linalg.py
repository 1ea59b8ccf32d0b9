"""Exact linear algebra over Q on sparse rows.

Matrices are lists of rows, each row a ``dict`` column -> Fraction.
Everything here is plain Gaussian elimination; pivots are chosen in
column order so results are deterministic.
"""
from __future__ import annotations

from fractions import Fraction


def dense_to_sparse(rows):
    return [{j: Fraction(v) for j, v in enumerate(r) if v} for r in rows]


def _eliminate(rows, ncols):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    rows = [dict(r) for r in rows if r]
    pivots = []
    reduced = []
    for col in range(ncols):
        pick = None
        for idx, r in enumerate(rows):
            if col in r:
                if pick is None or len(r) < len(rows[pick]):
                    pick = idx
        if pick is None:
            continue
        prow = rows.pop(pick)
        inv = 1 / prow[col]
        prow = {j: v * inv for j, v in prow.items()}
        for r in rows:
            f = r.get(col)
            if f:
                for j, v in prow.items():
                    nv = r.get(j, 0) - f * v
                    if nv:
                        r[j] = nv
                    else:
                        r.pop(j, None)
        for r in reduced:
            f = r.get(col)
            if f:
                for j, v in prow.items():
                    nv = r.get(j, 0) - f * v
                    if nv:
                        r[j] = nv
                    else:
                        r.pop(j, None)
        rows = [r for r in rows if r]
        reduced.append(prow)
        pivots.append(col)
        if not rows:
            break
    return reduced, pivots


def rref(rows, ncols):
    return _eliminate(rows, ncols)


def rank(rows, ncols) -> int:
    return len(_eliminate(rows, ncols)[1])


def transpose(rows, nrows, ncols):
    cols = [dict() for _ in range(ncols)]
    for i, r in enumerate(rows):
        for j, v in r.items():
            cols[j][i] = v
    return cols


def nullspace(rows, ncols):
    """Basis of {v : A v = 0}, one vector (dict) per free column."""
    reduced, pivots = _eliminate(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = {free: Fraction(1)}
        for r, p in zip(reduced, pivots):
            c = r.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def solve(rows, ncols, rhs):
    """A particular solution of A x = rhs as a dict, or None if inconsistent.

    ``rhs`` is a dict row-index -> value.
    """
    nrows = len(rows)
    aug = []
    for i in range(nrows):
        r = dict(rows[i])
        b = rhs.get(i)
        if b:
            r[ncols] = Fraction(b)
        aug.append(r)
    for i in rhs:
        if i >= nrows and rhs[i]:
            return None
    reduced, pivots = _eliminate(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = {}
    for r, p in zip(reduced, pivots):
        b = r.get(ncols)
        if b:
            x[p] = b
    return x


def span_complement(subspace, vectors, dim):
    """Select members of ``vectors`` that extend a basis of span(``subspace``).

    Used to pick cohomology representatives: kernel vectors independent
    modulo the image.
    """
    reduced, pivots = _eliminate(subspace, dim)
    chosen = []
    basis = list(reduced)
    piv = list(pivots)
    for v in vectors:
        w = dict(v)
        for r, p in zip(basis, piv):
            f = w.get(p)
            if f:
                for j, val in r.items():
                    nv = w.get(j, 0) - f * val
                    if nv:
                        w[j] = nv
                    else:
                        w.pop(j, None)
        if w:
            chosen.append(v)
            p = min(w)
            inv = 1 / w[p]
            w = {j: val * inv for j, val in w.items()}
            for r in basis:
                f = r.get(p)
                if f:
                    for j, val in w.items():
                        nv = r.get(j, 0) - f * val
                        if nv:
                            r[j] = nv
                        else:
                            r.pop(j, None)
            basis.append(w)
            piv.append(p)
    return chosen


def matvec(rows, v):
    out = {}
    for i, r in enumerate(rows):
        s = sum((c * v[j] for j, c in r.items() if j in v), Fraction(0))
        if s:
            out[i] = s
    return out
