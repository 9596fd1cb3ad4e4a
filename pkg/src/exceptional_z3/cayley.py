"""Octonions over Q(zeta_N), the subalgebra C = span{1, e1}, and the C + C^3 split model.

Multiplication comes from Cayley-Dickson doubling of the quaternions
(e1 e2 = e3 cyclically):

    (a + b e4)(c + d e4) = (ac - conj(d) b) + (d a + b conj(c)) e4,

with e5 = e1 e4, e6 = e2 e4, e7 = e3 e4.  The batched helpers below act on
CycArray objects whose last value axis holds the 8 (or 4, or 2) coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cycarray import CycArray
from .scalar import CycScalar, DEFAULT_CONDUCTOR, omega as _omega, sqrt3


def _qmul_int(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return [
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]


def _qconj_int(a):
    return [a[0], -a[1], -a[2], -a[3]]


def _omul_int(x, y):
    a, b, c, d = x[:4], x[4:], y[:4], y[4:]
    left = [s - t for s, t in zip(_qmul_int(a, c), _qmul_int(_qconj_int(d), b))]
    right = [s + t for s, t in zip(_qmul_int(d, a), _qmul_int(b, _qconj_int(c)))]
    return left + right


def _table(mul, n):
    eye = np.eye(n, dtype=np.int64)
    t = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            t[i, j] = mul(list(eye[i]), list(eye[j]))
    return t


QUAT_TABLE = _table(_qmul_int, 4)
OCT_TABLE = _table(_omul_int, 8)
CX_TABLE = QUAT_TABLE[:2, :2, :2]
_CONJ8 = np.diag([1, -1, -1, -1, -1, -1, -1, -1])
_CONJ4 = np.diag([1, -1, -1, -1])
_CONJ2 = np.diag([1, -1])


def _bilinear(x: CycArray, y: CycArray, table: np.ndarray) -> CycArray:
    n = table.shape[0]
    outer = x[..., :, None] * y[..., None, :]
    flat = outer.reshape(outer.shape[:-2] + (n * n,))
    return flat.lin(table.reshape(n * n, n))


def omul(x: CycArray, y: CycArray) -> CycArray:
    """Octonion product on the last axis (broadcasting)."""
    return _bilinear(x, y, OCT_TABLE)


def qmul(x: CycArray, y: CycArray) -> CycArray:
    return _bilinear(x, y, QUAT_TABLE)


def cxmul(x: CycArray, y: CycArray) -> CycArray:
    return _bilinear(x, y, CX_TABLE)


def oconj(x: CycArray) -> CycArray:
    return x.lin(_CONJ8)


def qconj(x: CycArray) -> CycArray:
    return x.lin(_CONJ4)


def cxconj(x: CycArray) -> CycArray:
    return x.lin(_CONJ2)


def dot(x: CycArray, y: CycArray) -> CycArray:
    """Symmetric bilinear inner product sum_i x_i y_i over the last axis."""
    return (x * y).sum(axis=-1)


# split C + C^3 coordinates, x = m0 + m1 e2 + m2 e4 + m3 conj(e6) with m_k = re + im e1:
# m0=(x0,x1), m1=(x2,x3), m2=(x4,x5), m3=(-x6,x7)
_SPLIT = np.zeros((8, 8), dtype=np.int64)
for _k, _sgn in enumerate([1, 1, 1, 1, 1, 1, -1, 1]):
    _SPLIT[_k, _k] = _sgn


def split_coords(x: CycArray) -> CycArray:
    """(...,8) octonion coordinates -> (...,4,2): rows m0, m1, m2, m3 as Cx pairs."""
    y = x.lin(_SPLIT)
    return y.reshape(y.shape[:-1] + (4, 2))


def unsplit_coords(m: CycArray) -> CycArray:
    y = m.reshape(m.shape[:-2] + (8,))
    return y.lin(_SPLIT)


class Octonion:
    """Element of the complexified Cayley algebra, coordinates on e0..e7."""

    __slots__ = ("v",)

    def __init__(self, coords, conductor: int | None = None):
        if isinstance(coords, CycArray):
            if coords.shape != (8,):
                raise ValueError("octonion needs 8 coordinates")
            self.v = coords
        else:
            coords = list(coords)
            if len(coords) != 8:
                raise ValueError("octonion needs 8 coordinates")
            self.v = CycArray.from_scalars(coords, conductor)

    @classmethod
    def basis(cls, k: int, conductor: int = DEFAULT_CONDUCTOR) -> "Octonion":
        c = [0] * 8
        c[k] = 1
        return cls(c, conductor)

    @classmethod
    def scalar(cls, s, conductor: int = DEFAULT_CONDUCTOR) -> "Octonion":
        if isinstance(s, CycScalar):
            conductor = s.conductor
        return cls([s] + [0] * 7, conductor)

    @property
    def coords(self):
        return [self.v.scalar(k) for k in range(8)]

    def __getattr__(self, name):
        if len(name) == 2 and name[0] == "c" and name[1].isdigit() and int(name[1]) < 8:
            return self.v.scalar(int(name[1]))
        raise AttributeError(name)

    def __add__(self, o):
        return Octonion(self.v + o.v)

    def __sub__(self, o):
        return Octonion(self.v - o.v)

    def __neg__(self):
        return Octonion(-self.v)

    def __mul__(self, o):
        if isinstance(o, Octonion):
            return Octonion(omul(self.v, o.v))
        return Octonion(self.v * o)

    def __rmul__(self, s):
        return Octonion(self.v * s)

    def __eq__(self, o):
        return isinstance(o, Octonion) and self.v == o.v

    __hash__ = None

    def conj(self) -> "Octonion":
        return Octonion(oconj(self.v))

    def tau(self) -> "Octonion":
        """Coefficient-wise complex conjugation of the complexification."""
        return Octonion(self.v.conj())

    def inner(self, o: "Octonion") -> CycScalar:
        return dot(self.v, o.v).scalar()

    def norm(self) -> CycScalar:
        return self.inner(self)

    def is_real(self) -> bool:
        return self.v.is_real()

    def __repr__(self):
        return "Octonion(" + ", ".join(repr(c) for c in self.coords) + ")"


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    return x * y


def oct_conj(x: Octonion) -> Octonion:
    return x.conj()


def oct_inner(x: Octonion, y: Octonion) -> CycScalar:
    return x.inner(y)


@dataclass(frozen=True)
class Cx:
    """re + im e1 in C = span{1, e1}; re, im are field elements."""

    re: CycScalar
    im: CycScalar

    @classmethod
    def of(cls, re, im=0, conductor: int = DEFAULT_CONDUCTOR) -> "Cx":
        if isinstance(re, CycScalar):
            conductor = re.conductor
        elif isinstance(im, CycScalar):
            conductor = im.conductor
        return cls(CycScalar(re, conductor), CycScalar(im, conductor))

    def __add__(self, o):
        return Cx(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return Cx(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return Cx(-self.re, -self.im)

    def __mul__(self, o):
        if isinstance(o, Cx):
            return Cx(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
        return Cx(self.re * o, self.im * o)

    __rmul__ = __mul__

    def conj(self) -> "Cx":
        return Cx(self.re, -self.im)

    def tau(self) -> "Cx":
        return Cx(self.re.conj(), self.im.conj())

    def norm(self) -> CycScalar:
        return self.re * self.re + self.im * self.im

    def inv(self) -> "Cx":
        n = self.norm()
        return Cx(self.re / n, -self.im / n)

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inv()
        out = Cx.of(1, 0, self.re.conductor)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_real(self) -> bool:
        return self.re.is_real() and self.im.is_real()

    def to_octonion(self) -> Octonion:
        z = CycScalar(0, self.re.conductor)
        return Octonion([self.re, self.im] + [z] * 6)

    def array(self) -> CycArray:
        return CycArray.from_scalars([self.re, self.im])

    @classmethod
    def from_array(cls, a: CycArray) -> "Cx":
        return cls(a.scalar(0), a.scalar(1))


def bold_omega(conductor: int = DEFAULT_CONDUCTOR) -> Cx:
    """-1/2 + (sqrt 3 / 2) e1."""
    return Cx(CycScalar(Fraction(-1, 2), conductor), sqrt3(conductor) * Fraction(1, 2))


def cx_root(k: int, n: int, conductor: int = DEFAULT_CONDUCTOR) -> Cx:
    """exp(2 pi e1 k / n) = cos + sin e1 with field coordinates."""
    from .scalar import cos2pi, sin2pi

    return Cx(cos2pi(k, n, conductor), sin2pi(k, n, conductor))


@dataclass(frozen=True)
class SplitCayley:
    m0: Cx
    m: tuple

    def __eq__(self, o):
        return isinstance(o, SplitCayley) and self.m0 == o.m0 and tuple(self.m) == tuple(o.m)


def to_split(x: Octonion) -> SplitCayley:
    s = split_coords(x.v)
    parts = [Cx.from_array(s[k]) for k in range(4)]
    return SplitCayley(parts[0], tuple(parts[1:]))


def from_split(s: SplitCayley) -> Octonion:
    rows = [s.m0] + list(s.m)
    arr = CycArray.from_scalars([[c.re, c.im] for c in rows])
    return Octonion(unsplit_coords(arr))


def split_product(s: SplitCayley, t: SplitCayley) -> SplitCayley:
    """Product in the C + C^3 model: (m0 + m)(n0 + n) = (m0 n0 - <m,n>) + (m0 n + conj(n0) m - conj(m x n)).

    Here <m,n> = sum m_k conj(n_k) and x is the C^3 cross product.
    """
    m, n = s.m, t.m
    herm = m[0] * n[0].conj() + m[1] * n[1].conj() + m[2] * n[2].conj()
    cross = (
        m[1] * n[2] - m[2] * n[1],
        m[2] * n[0] - m[0] * n[2],
        m[0] * n[1] - m[1] * n[0],
    )
    head = s.m0 * t.m0 - herm
    tail = tuple(s.m0 * n[k] + t.m0.conj() * m[k] - cross[k].conj() for k in range(3))
    return SplitCayley(head, tail)
