"""Exact Gauss-Jordan elimination over Q(zeta_N).

Rows are kept as separate CycArray vectors so each carries its own
denominator; this keeps coefficient growth local to the row.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np
from sympy.polys.matrices import DomainMatrix
from sympy import QQ

from .cycarray import CycArray


def _nonzero_mask(row: CycArray) -> np.ndarray:
    return row.num.any(axis=-1)


def row_reduce(m: CycArray):
    """Reduced row echelon form of a 2D array; returns (rows, pivot columns)."""
    rows = [m[r] for r in range(m.shape[0])]
    rows = [r for r in rows if not r.is_zero()]
    ncols = m.shape[1]
    pivots = []
    done = 0
    for col in range(ncols):
        piv = next((k for k in range(done, len(rows)) if rows[k].num[col].any()), None)
        if piv is None:
            continue
        rows[done], rows[piv] = rows[piv], rows[done]
        p = rows[done].scalar(col)
        row = rows[done] * p.inv()
        rows[done] = row
        for k in range(len(rows)):
            if k != done and rows[k].num[col].any():
                rows[k] = rows[k] - row * rows[k].scalar(col)
        pivots.append(col)
        done += 1
        rows = rows[:done] + [r for r in rows[done:] if not r.is_zero()]
    return rows[:done], pivots


def rank(m: CycArray) -> int:
    return len(row_reduce(m)[1])


def nullity(m: CycArray) -> int:
    return m.shape[1] - rank(m)


def nullspace(m: CycArray) -> CycArray:
    """Basis of {v : m v = 0} as rows of a (k, ncols) array."""
    rows, pivots = row_reduce(m)
    n = m.shape[1]
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        v = CycArray.zeros(n, m.conductor)
        v = v.copy_with(f, CycArray.eye(1, m.conductor)[0, 0])
        for r, pc in zip(rows, pivots):
            v = v.copy_with(pc, -r[f])
        out.append(v)
    if not out:
        return CycArray.zeros((0, n), m.conductor)
    return CycArray.stack(out)


def inverse(m: CycArray) -> CycArray:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    aug = CycArray.concatenate([m, CycArray.eye(n, m.conductor)], axis=1)
    rows, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ZeroDivisionError("singular matrix")
    return CycArray.stack([r[n:] for r in rows[:n]])


def det(m: CycArray):
    """Determinant by elimination (small matrices)."""
    n = m.shape[0]
    rows = [m[r] for r in range(n)]
    acc = m.scalar(0, 0) * 0 + 1
    for col in range(n):
        piv = next((k for k in range(col, n) if rows[k].num[col].any()), None)
        if piv is None:
            return acc * 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            acc = -acc
        p = rows[col].scalar(col)
        acc = acc * p
        pinv = p.inv()
        for k in range(col + 1, n):
            if rows[k].num[col].any():
                rows[k] = rows[k] - rows[col] * (rows[k].scalar(col) * pinv)
    return acc


# rational matrices ---------------------------------------------------------


def rational_matrix(ints, den: int = 1) -> DomainMatrix:
    ints = np.asarray(ints)
    rows = [[QQ(int(v), den) for v in row] for row in ints]
    return DomainMatrix(rows, ints.shape, QQ)


def rational_rank(ints, den: int = 1) -> int:
    return rational_matrix(ints, den).convert_to(QQ).rank()


def rational_nullspace(ints) -> list:
    """Nullspace basis over Q as lists of Fractions (rows)."""
    dm = rational_matrix(ints)
    ns = dm.to_field().nullspace().to_Matrix()
    return [[Fraction(int(x.p), int(x.q)) for x in ns.row(r)] for r in range(ns.rows)]


def rational_inverse(ints, den: int = 1):
    """Exact inverse of a rational matrix as (int matrix, common denominator)."""
    dm = rational_matrix(ints, den).to_field()
    inv = dm.inv().to_Matrix()
    fr = [[Fraction(int(x.p), int(x.q)) for x in inv.row(r)] for r in range(inv.rows)]
    import math

    d = math.lcm(*(q.denominator for row in fr for q in row))
    return np.array([[q.numerator * (d // q.denominator) for q in row] for row in fr], dtype=object), d


def rank_mod_p(ints, p: int = 2147483629) -> int:
    """Rank of an integer matrix modulo a prime p < 2^31 (int64 elimination)."""
    a = np.asarray(ints, dtype=np.int64) % p
    a = a[a.any(axis=1)]
    r = 0
    nrows, ncols = a.shape
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = np.nonzero(a[r + 1:, c])[0] + r + 1
        if below.size:
            f = a[below, c][:, None]
            a[below] = (a[below] - (f * a[r][None, :]) % p) % p
        r += 1
    return r
