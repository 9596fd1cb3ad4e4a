"""Split models of J^C and the bridges used by the E6 homomorphisms.

H-model: x_i = m_i + a_i e4 with m_i, a_i quaternions, giving a quaternion
Hermitian matrix M and a row vector a.  C-model: each x_i splits as
m0 + m (C + C^3); the m0 parts fill a complex Hermitian matrix Xc and the
C^3 parts are the columns of a 3x3 matrix M.

All functions are batched: Jordan vectors carry leading axes, and the
split pieces keep them.  Quaternions are (..., 4) arrays on 1, e1, e2, e3;
elements of C = span{1, e1} are (..., 2) arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cayley import cxconj, cxmul, qconj, qmul, split_coords, unsplit_coords
from .cycarray import CycArray
from .jordan import DIM, JordanElem, off
from .scalar import DEFAULT_CONDUCTOR, imag_unit


def _pairs(a: CycArray, i, j) -> CycArray:
    return a[..., i, j, :]


def qmatmul(a: CycArray, b: CycArray) -> CycArray:
    """(..., n, k, 4) times (..., k, m, 4) over the quaternions."""
    prod = qmul(a[..., :, :, None, :], b[..., None, :, :, :])
    return prod.sum(axis=-3)


def cmatmul(a: CycArray, b: CycArray) -> CycArray:
    """(..., n, k, 2) times (..., k, m, 2) over C = span{1, e1}."""
    prod = cxmul(a[..., :, :, None, :], b[..., None, :, :, :])
    return prod.sum(axis=-3)


def qstar(a: CycArray) -> CycArray:
    """Quaternion conjugate transpose of (..., n, m, 4)."""
    return qconj(a.transpose(_swap(a.ndim, -3, -2)))


def cstar(a: CycArray) -> CycArray:
    return cxconj(a.transpose(_swap(a.ndim, -3, -2)))


def _swap(nd: int, i: int, j: int):
    axes = list(range(nd))
    axes[i], axes[j] = axes[j], axes[i]
    return axes


def _hermitian3(diag: CycArray, c1: CycArray, c2: CycArray, c3: CycArray, conj, width: int) -> CycArray:
    """[[d1, c3, conj c2], [conj c3, d2, c1], [c2, conj c1, d3]] with (..., width) entries."""
    zero = CycArray.zeros(diag.shape[:-1] + (width - 1,), diag.conductor)
    d = [CycArray.concatenate([diag[..., k:k + 1], zero], axis=-1) for k in range(3)]
    rows = [
        [d[0], c3, conj(c2)],
        [conj(c3), d[1], c1],
        [c2, conj(c1), d[2]],
    ]
    return CycArray.stack([CycArray.stack(r, axis=-2) for r in rows], axis=-3)


def _read_hermitian3(m: CycArray):
    diag = CycArray.stack([m[..., k, k, 0] for k in range(3)], axis=-1)
    return diag, m[..., 1, 2, :], m[..., 2, 0, :], m[..., 0, 1, :]


# H-model ---------------------------------------------------------------


@dataclass(frozen=True)
class HSplit:
    """M in J(3, H)^C as (..., 3, 3, 4) and a in (H^3)^C as (..., 3, 4)."""

    M: CycArray
    a: CycArray

    def __eq__(self, o):
        return isinstance(o, HSplit) and self.M == o.M and self.a == o.a


def to_hsplit_arr(v: CycArray) -> HSplit:
    xs = [v[..., off(i)] for i in (1, 2, 3)]
    m = [x[..., :4] for x in xs]
    a = CycArray.stack([x[..., 4:] for x in xs], axis=-2)
    return HSplit(_hermitian3(v[..., 0:3], m[0], m[1], m[2], qconj, 4), a)


def from_hsplit_arr(h: HSplit) -> CycArray:
    diag, m1, m2, m3 = _read_hermitian3(h.M)
    xs = [CycArray.concatenate([m, h.a[..., k, :]], axis=-1) for k, m in enumerate((m1, m2, m3))]
    return CycArray.concatenate([diag] + xs, axis=-1)


def to_hsplit(x: JordanElem) -> HSplit:
    return to_hsplit_arr(x.v)


def from_hsplit(h: HSplit) -> JordanElem:
    return JordanElem(from_hsplit_arr(h))


def is_q_hermitian(m: CycArray) -> bool:
    """(3, 3, 4) quaternion matrix with M* = M (octonion-style conjugation, coefficients untouched)."""
    if not m == qstar(m):
        return False
    return True


# C-model ---------------------------------------------------------------


@dataclass(frozen=True)
class CSplit:
    """Xc in J(3, C)^C as (..., 3, 3, 2) and M in M(3, C)^C as (..., 3, 3, 2)."""

    Xc: CycArray
    M: CycArray

    def __eq__(self, o):
        return isinstance(o, CSplit) and self.Xc == o.Xc and self.M == o.M


def to_csplit_arr(v: CycArray) -> CSplit:
    parts = [split_coords(v[..., off(i)]) for i in (1, 2, 3)]  # (..., 4, 2) each
    c = [p[..., 0, :] for p in parts]
    Xc = _hermitian3(v[..., 0:3], c[0], c[1], c[2], cxconj, 2)
    M = CycArray.stack([p[..., 1:, :] for p in parts], axis=-2)  # (..., 3 rows, 3 cols, 2)
    return CSplit(Xc, M)


def from_csplit_arr(s: CSplit) -> CycArray:
    diag, c1, c2, c3 = _read_hermitian3(s.Xc)
    xs = []
    for k, c in enumerate((c1, c2, c3)):
        rows = CycArray.concatenate([c[..., None, :], s.M[..., :, k, :]], axis=-2)
        xs.append(unsplit_coords(rows))
    return CycArray.concatenate([diag] + xs, axis=-1)


def to_csplit(x: JordanElem) -> CSplit:
    return to_csplit_arr(x.v)


def from_csplit(s: CSplit) -> JordanElem:
    return JordanElem(from_csplit_arr(s))


# k, k_J, h ---------------------------------------------------------------

# k(q) = [[q0 + i q1, q2 + i q3], [-q2 + i q3, q0 - i q1]], flattened row-major
_K_RE = np.array([[1, 0, 0, 1], [0, 0, 0, 0], [0, 1, -1, 0], [0, 0, 0, 0]], dtype=np.int64)
_K_IM = np.array([[0, 0, 0, 0], [1, 0, 0, -1], [0, 0, 0, 0], [0, 1, 1, 0]], dtype=np.int64)
# inverse: q0 = (k00 + k11)/2, q1 = -i (k00 - k11)/2, q2 = (k01 - k10)/2, q3 = -i (k01 + k10)/2
_KI_RE = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, -1, 0], [1, 0, 0, 0]], dtype=np.int64)
_KI_IM = np.array([[0, -1, 0, 0], [0, 0, 0, -1], [0, 0, 0, -1], [0, 1, 0, 0]], dtype=np.int64)

JBLOCK = np.kron(np.eye(3, dtype=np.int64), np.array([[0, 1], [-1, 0]], dtype=np.int64))


def k_quat_arr(q: CycArray) -> CycArray:
    i = imag_unit(q.conductor)
    out = q.lin(_K_RE) + q.lin(_K_IM) * i
    return out.reshape(q.shape[:-1] + (2, 2))


def k_quat_inv_arr(m: CycArray) -> CycArray:
    i = imag_unit(m.conductor)
    flat = m.reshape(m.shape[:-2] + (4,))
    return flat.lin(_KI_RE, 2) + flat.lin(_KI_IM, 2) * i


def k_arr(a: CycArray) -> CycArray:
    """(..., n, m, 4) quaternion matrix -> (..., 2n, 2m) complex matrix."""
    n, m = a.shape[-3], a.shape[-2]
    blocks = k_quat_arr(a)  # (..., n, m, 2, 2)
    lead = a.shape[:-3]
    nd = blocks.ndim
    axes = list(range(nd - 4)) + [nd - 4, nd - 2, nd - 3, nd - 1]
    return blocks.transpose(axes).reshape(lead + (2 * n, 2 * m))


def k_inv_arr(c: CycArray) -> CycArray:
    n, m = c.shape[-2] // 2, c.shape[-1] // 2
    lead = c.shape[:-2]
    nd = c.ndim + 2
    blocks = c.reshape(lead + (n, 2, m, 2))
    axes = list(range(nd - 4)) + [nd - 4, nd - 2, nd - 3, nd - 1]
    return k_quat_inv_arr(blocks.transpose(axes))


def k_J_arr(m: CycArray) -> CycArray:
    return k_arr(m).lin(JBLOCK)


def k_J_inv_arr(s: CycArray) -> CycArray:
    return k_inv_arr(s.lin(JBLOCK.T))


def k_quat(q) -> CycArray:
    return k_quat_arr(q if isinstance(q, CycArray) else CycArray.from_scalars(list(q)))


def k(a: CycArray) -> CycArray:
    return k_arr(a)


def k_inv(c: CycArray) -> CycArray:
    return k_inv_arr(c)


def k_J(m: CycArray) -> CycArray:
    """k(M) J for a quaternion Hermitian (3, 3, 4) matrix; the image is skew-symmetric."""
    if not is_q_hermitian(m):
        raise ValueError("k_J needs a Hermitian quaternion matrix")
    return k_J_arr(m)


def k_J_inv(s: CycArray) -> CycArray:
    return k_J_inv_arr(s)


def cx_e1(c: CycArray) -> CycArray:
    """(x + y e1) e1 = -y + x e1."""
    return c.lin(np.array([[0, 1], [-1, 0]], dtype=np.int64))


def h_mix(a: CycArray, b: CycArray) -> CycArray:
    """h(A, B) = (A + B)/2 + i (B - A) e1 / 2 for (..., 3, 3, 2) matrices over C."""
    i = imag_unit(a.conductor)
    return (a + b) / 2 + cx_e1(b - a) * i / 2
