"""The exceptional Jordan algebra J(3, O) and its complexification.

An element is stored as a 27-vector (xi1, xi2, xi3, x1, x2, x3) with each
x_i an octonion, standing for the Hermitian matrix

    [[xi1,     x3,      conj(x2)],
     [conj(x3), xi2,    x1      ],
     [x2,      conj(x1), xi3    ]].

Products are precomputed as integer structure tensors over the standard
basis E1, E2, E3, F_i(e_k), so every operation is a rational contraction.
"""
from __future__ import annotations

import numpy as np

from .cayley import OCT_TABLE, Octonion, _CONJ8
from .cycarray import CycArray
from .scalar import CycScalar, DEFAULT_CONDUCTOR

DIM = 27
XI = slice(0, 3)


def off(i: int) -> slice:
    """Coordinates of x_i (i = 1, 2, 3)."""
    return slice(3 + 8 * (i - 1), 11 + 8 * (i - 1))


def _int_matrix(v):
    """27 integer coordinates -> 3x3 matrix of integer octonion 8-vectors."""
    e0 = np.eye(8, dtype=np.int64)[0]
    x1, x2, x3 = v[off(1)], v[off(2)], v[off(3)]
    c = lambda x: _CONJ8 @ x
    return [[v[0] * e0, x3, c(x2)], [c(x3), v[1] * e0, x1], [x2, c(x1), v[2] * e0]]


def _int_mmul(a, b):
    out = [[np.zeros(8, dtype=np.int64) for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                out[i][j] = out[i][j] + np.einsum("p,q,pqr->r", a[i][k], b[k][j], OCT_TABLE)
    return out


def _from_int_matrix(m):
    return np.concatenate([[m[0][0][0], m[1][1][0], m[2][2][0]], m[1][2], m[2][0], m[0][1]])


def _build_tensors():
    eye = np.eye(DIM, dtype=np.int64)
    mats = [_int_matrix(eye[i]) for i in range(DIM)]
    circ2 = np.zeros((DIM, DIM, DIM), dtype=np.int64)
    for i in range(DIM):
        for j in range(i, DIM):
            p = _int_mmul(mats[i], mats[j])
            q = _int_mmul(mats[j], mats[i])
            s = _from_int_matrix([[p[r][c] + q[r][c] for c in range(3)] for r in range(3)])
            circ2[i, j] = circ2[j, i] = s
    tr = np.array([1, 1, 1] + [0] * 24, dtype=np.int64)
    gram2 = circ2 @ tr  # 2 (e_i, e_j)
    cross4 = 2 * circ2
    cross4 -= 2 * tr[:, None, None] * eye[None, :, :]
    cross4 -= 2 * tr[None, :, None] * eye[:, None, :]
    cross4 += (2 * tr[:, None] * tr[None, :] - gram2)[:, :, None] * tr[None, None, :]
    return circ2, gram2 // 2, cross4


CIRC2, GRAM, CROSS4 = _build_tensors()
"""CIRC2[i,j] = 2 (b_i o b_j), GRAM[i,j] = (b_i, b_j), CROSS4[i,j] = 4 (b_i x b_j)."""
TRACE = np.array([1, 1, 1] + [0] * 24, dtype=np.int64)


def _bilinear(x: CycArray, y: CycArray, tensor: np.ndarray, den: int) -> CycArray:
    outer = x[..., :, None] * y[..., None, :]
    flat = outer.reshape(outer.shape[:-2] + (DIM * DIM,))
    return flat.lin(tensor.reshape(DIM * DIM, DIM), den)


def circ_arr(x: CycArray, y: CycArray) -> CycArray:
    return _bilinear(x, y, CIRC2, 2)


def cross_arr(x: CycArray, y: CycArray) -> CycArray:
    return _bilinear(x, y, CROSS4, 4)


def inner_arr(x: CycArray, y: CycArray) -> CycArray:
    """Symmetric bilinear trace form (x, y) over the last axis."""
    return (x * y.lin(GRAM)).sum(axis=-1)


def trace_arr(x: CycArray) -> CycArray:
    return x.lin(TRACE.reshape(DIM, 1)).reshape(x.shape[:-1])


class JordanElem:
    """Element of J^C as a 27-coordinate vector."""

    __slots__ = ("v",)

    def __init__(self, v: CycArray):
        if v.shape != (DIM,):
            raise ValueError("Jordan element needs 27 coordinates")
        self.v = v

    @classmethod
    def make(cls, xi=(0, 0, 0), x1=None, x2=None, x3=None, conductor: int = DEFAULT_CONDUCTOR):
        parts = [CycArray.from_scalars([CycScalar(s, conductor) if not isinstance(s, CycScalar) else s for s in xi])]
        for x in (x1, x2, x3):
            parts.append(x.v if x is not None else CycArray.zeros(8, conductor))
        return cls(CycArray.concatenate(parts))

    @classmethod
    def zero(cls, conductor: int = DEFAULT_CONDUCTOR):
        return cls(CycArray.zeros(DIM, conductor))

    @classmethod
    def basis(cls, k: int, conductor: int = DEFAULT_CONDUCTOR) -> "JordanElem":
        return cls(CycArray.eye(DIM, conductor)[k])

    @property
    def xi(self):
        return tuple(self.v.scalar(k) for k in range(3))

    def x(self, i: int) -> Octonion:
        return Octonion(self.v[off(i)])

    @property
    def x1(self):
        return self.x(1)

    @property
    def x2(self):
        return self.x(2)

    @property
    def x3(self):
        return self.x(3)

    def __add__(self, o):
        return JordanElem(self.v + o.v)

    def __sub__(self, o):
        return JordanElem(self.v - o.v)

    def __neg__(self):
        return JordanElem(-self.v)

    def __mul__(self, s):
        return JordanElem(self.v * s)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, JordanElem) and self.v == o.v

    __hash__ = None

    def tau(self) -> "JordanElem":
        return JordanElem(self.v.conj())

    def is_real(self) -> bool:
        return self.v.is_real()

    def __repr__(self):
        return f"JordanElem(xi={self.xi}, ...)"


def E(i: int = 0, conductor: int = DEFAULT_CONDUCTOR) -> JordanElem:
    """E_i for i = 1, 2, 3; E(0) is the unit E = E1 + E2 + E3."""
    xi = [0, 0, 0]
    if i == 0:
        xi = [1, 1, 1]
    else:
        xi[i - 1] = 1
    return JordanElem(CycArray.from_rational(np.array(xi + [0] * 24), 1, conductor))


def F(i: int, x: Octonion) -> JordanElem:
    """F_i(x): x placed in slot x_i (conjugate in the mirrored entry)."""
    parts = [CycArray.zeros(3, x.v.conductor)]
    for k in (1, 2, 3):
        parts.append(x.v if k == i else CycArray.zeros(8, x.v.conductor))
    return JordanElem(CycArray.concatenate(parts))


def basis(conductor: int = DEFAULT_CONDUCTOR):
    """E1, E2, E3, then F_i(e_k) for i = 1..3, k = 0..7."""
    return [JordanElem.basis(k, conductor) for k in range(DIM)]


def circ(x: JordanElem, y: JordanElem) -> JordanElem:
    return JordanElem(circ_arr(x.v, y.v))


def cross(x: JordanElem, y: JordanElem) -> JordanElem:
    return JordanElem(cross_arr(x.v, y.v))


def inner(x: JordanElem, y: JordanElem) -> CycScalar:
    return inner_arr(x.v, y.v).scalar()


def trace(x: JordanElem) -> CycScalar:
    return trace_arr(x.v).scalar()


def trilinear(x: JordanElem, y: JordanElem, z: JordanElem) -> CycScalar:
    return inner(x, cross(y, z))


def det(x: JordanElem) -> CycScalar:
    return trilinear(x, x, x) / 3


def hermitian_inner(x: JordanElem, y: JordanElem) -> CycScalar:
    """<x, y> = (tau x, y)."""
    return inner(x.tau(), y)


def matrix_product_circ(x: JordanElem, y: JordanElem) -> JordanElem:
    """X o Y evaluated directly from 3x3 octonion matrix products (row times column, left to right)."""
    from .cayley import omul, oconj

    def mat(v):
        e0 = CycArray.eye(8, v.conductor)[0]
        x1, x2, x3 = v[off(1)], v[off(2)], v[off(3)]
        return [[e0 * v.scalar(0), x3, oconj(x2)], [oconj(x3), e0 * v.scalar(1), x1], [x2, oconj(x1), e0 * v.scalar(2)]]

    a, b = mat(x.v), mat(y.v)
    prod = lambda p, q: [[omul(p[i][0], q[0][j]) + omul(p[i][1], q[1][j]) + omul(p[i][2], q[2][j]) for j in range(3)] for i in range(3)]
    s, t = prod(a, b), prod(b, a)
    m = [[(s[i][j] + t[i][j]) / 2 for j in range(3)] for i in range(3)]
    xi = CycArray.stack([m[0][0][0], m[1][1][0], m[2][2][0]])
    return JordanElem(CycArray.concatenate([xi, m[1][2], m[2][0], m[0][1]]))
