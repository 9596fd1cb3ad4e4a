"""Dense arrays over Q(zeta_N) with a single common denominator.

The numerator is an integer numpy array whose last axis holds the
power-basis coordinates.  Products run through int64 or float64 kernels
whenever an a-priori bound proves they cannot overflow, and fall back to
Python integers (object dtype) otherwise, so results are always exact.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from numbers import Rational as _RationalABC

import numpy as np

from .scalar import CycField, CycScalar, field, DEFAULT_CONDUCTOR

_I64 = 2**62
_F64 = 2**52


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return int(max(abs(int(v)) for v in a.flat))
    return int(np.abs(a).max())


def _shrink(a: np.ndarray) -> np.ndarray:
    if a.dtype == object and _maxabs(a) < _I64:
        return a.astype(np.int64)
    return a


def _as_object(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


def _gcd_all(a: np.ndarray, start: int) -> int:
    if a.size == 0:
        return start
    if a.dtype == object:
        return reduce(math.gcd, (int(v) for v in a.flat if v), start)
    return math.gcd(int(np.gcd.reduce(a.ravel())), start)


def _scale_int(a: np.ndarray, k: int) -> np.ndarray:
    if k == 1:
        return a
    if a.dtype != object and _maxabs(a) * abs(k) < _I64:
        return a * k
    return _as_object(a) * k


def _int_matmul(a: np.ndarray, b: np.ndarray, bound: int) -> np.ndarray:
    """Exact integer matrix product given a bound on |entries of the result| (sum of |terms|)."""
    if a.dtype != object and b.dtype != object:
        if bound < _F64:
            return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        if bound < _I64:
            return a @ b
    return _as_object(a) @ _as_object(b)


class CycArray:
    """Immutable-by-convention array of cyclotomic numbers."""

    __slots__ = ("field", "num", "den")
    __array_priority__ = 1000

    def __init__(self, fld: CycField, num: np.ndarray, den: int = 1, normalize: bool = True):
        if den <= 0:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num, den = -num, -den
        if num.shape[-1:] != (fld.degree,):
            raise ValueError("last axis must hold the power-basis coordinates")
        self.field = fld
        self.num = num
        self.den = int(den)
        if normalize:
            self._normalize()

    def _normalize(self):
        self.num = _shrink(self.num)
        g = _gcd_all(self.num, self.den)
        if g > 1:
            if self.num.dtype != object and g >= _I64:
                # only possible when every entry is zero
                self.num = np.zeros_like(self.num)
                self.den = 1
                return
            self.num = self.num // g
            self.den //= g

    # construction -------------------------------------------------------

    @classmethod
    def zeros(cls, shape, conductor: int = DEFAULT_CONDUCTOR) -> "CycArray":
        f = field(conductor)
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        return cls(f, np.zeros(shape + (f.degree,), dtype=np.int64), 1, normalize=False)

    @classmethod
    def eye(cls, n: int, conductor: int = DEFAULT_CONDUCTOR) -> "CycArray":
        return cls.from_rational(np.eye(n, dtype=np.int64), 1, conductor)

    @classmethod
    def from_rational(cls, ints, den: int = 1, conductor: int = DEFAULT_CONDUCTOR) -> "CycArray":
        """Array with rational entries ints/den."""
        f = field(conductor)
        ints = np.asarray(ints)
        if ints.dtype.kind == "f":
            raise TypeError("floating input is not exact")
        num = np.zeros(ints.shape + (f.degree,), dtype=ints.dtype if ints.dtype == object else np.int64)
        num[..., 0] = ints
        return cls(f, num, den)

    @classmethod
    def from_fractions(cls, values, conductor: int = DEFAULT_CONDUCTOR) -> "CycArray":
        arr = np.asarray(values, dtype=object)
        fr = [Fraction(v) for v in arr.flat]
        den = math.lcm(*(q.denominator for q in fr)) if fr else 1
        ints = np.array([q.numerator * (den // q.denominator) for q in fr], dtype=object).reshape(arr.shape)
        return cls.from_rational(ints, den, conductor)

    @classmethod
    def from_scalars(cls, values, conductor: int | None = None) -> "CycArray":
        """Build from a nested list of CycScalar / int / Fraction."""
        arr = np.empty(np.shape(values), dtype=object) if np.ndim(values) else None
        flat = list(np.asarray(values, dtype=object).flat)
        if conductor is None:
            conductor = next((v.field.n for v in flat if isinstance(v, CycScalar)), DEFAULT_CONDUCTOR)
        sc = [v if isinstance(v, CycScalar) else CycScalar(v, conductor) for v in flat]
        f = field(conductor)
        if any(s.field is not f for s in sc):
            raise ValueError("conductor mismatch")
        den = math.lcm(*(s.den for s in sc)) if sc else 1
        num = np.array([[c * (den // s.den) for c in s.num] for s in sc], dtype=object)
        shape = np.shape(values) if arr is not None else ()
        return cls(f, num.reshape(tuple(shape) + (f.degree,)), den)

    @classmethod
    def stack(cls, arrays, axis: int = 0) -> "CycArray":
        arrays = list(arrays)
        f = arrays[0].field
        den = math.lcm(*(a.den for a in arrays))
        nd = arrays[0].ndim
        ax = axis if axis >= 0 else axis + nd + 1
        nums = [_scale_int(a.num, den // a.den) for a in arrays]
        if any(n.dtype == object for n in nums):
            nums = [_as_object(n) for n in nums]
        return cls(f, np.stack(nums, axis=ax), den)

    @classmethod
    def concatenate(cls, arrays, axis: int = 0) -> "CycArray":
        arrays = list(arrays)
        f = arrays[0].field
        den = math.lcm(*(a.den for a in arrays))
        nd = arrays[0].ndim
        ax = axis if axis >= 0 else axis + nd
        nums = [_scale_int(a.num, den // a.den) for a in arrays]
        if any(n.dtype == object for n in nums):
            nums = [_as_object(n) for n in nums]
        return cls(f, np.concatenate(nums, axis=ax), den)

    # shape --------------------------------------------------------------

    @property
    def shape(self):
        return self.num.shape[:-1]

    @property
    def ndim(self):
        return self.num.ndim - 1

    @property
    def conductor(self):
        return self.field.n

    def reshape(self, *shape) -> "CycArray":
        if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
            shape = tuple(shape[0])
        return CycArray(self.field, self.num.reshape(tuple(shape) + (self.field.degree,)), self.den, False)

    def transpose(self, *axes) -> "CycArray":
        if len(axes) == 1 and isinstance(axes[0], (tuple, list)):
            axes = tuple(axes[0])
        if not axes:
            axes = tuple(reversed(range(self.ndim)))
        return CycArray(self.field, self.num.transpose(tuple(axes) + (self.ndim,)), self.den, False)

    @property
    def T(self) -> "CycArray":
        """Swap the last two value axes."""
        axes = list(range(self.ndim))
        axes[-1], axes[-2] = axes[-2], axes[-1]
        return self.transpose(axes)

    def __getitem__(self, key) -> "CycArray":
        if not isinstance(key, tuple):
            key = (key,)
        if Ellipsis not in key:
            key = key + (Ellipsis,)
        return CycArray(self.field, self.num[key + (slice(None),)], self.den, False)

    def scalar(self, *idx) -> CycScalar:
        coeffs = self.num[tuple(idx)]
        if coeffs.ndim != 1:
            raise IndexError("scalar() needs a full index")
        return CycScalar._make(self.field, [int(v) for v in coeffs], self.den)

    def tolist(self):
        if self.ndim == 0:
            return CycScalar._make(self.field, [int(v) for v in self.num], self.den)
        return [self[i].tolist() for i in range(self.shape[0])]

    def copy_with(self, key, value: "CycArray") -> "CycArray":
        """Return a copy with self[key] replaced by value."""
        self._check(value)
        den = math.lcm(self.den, value.den)
        a = _scale_int(self.num, den // self.den)
        b = _scale_int(value.num, den // value.den)
        if a.dtype == object or b.dtype == object:
            a, b = _as_object(a), _as_object(b)
        a = a.copy()
        if not isinstance(key, tuple):
            key = (key,)
        if Ellipsis not in key:
            key = key + (Ellipsis,)
        a[key + (slice(None),)] = b
        return CycArray(self.field, a, den)

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "CycArray"):
        if other.field is not self.field:
            raise ValueError("conductor mismatch")

    def _lift(self, other) -> "CycArray":
        if isinstance(other, CycArray):
            self._check(other)
            return other
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise ValueError("conductor mismatch")
            return CycArray(self.field, np.array(other.num, dtype=object), other.den)
        if isinstance(other, (int, _RationalABC)):
            q = Fraction(other)
            num = np.zeros(self.field.degree, dtype=object)
            num[0] = q.numerator
            return CycArray(self.field, num, q.denominator)
        return NotImplemented

    def _addsub(self, other, sign: int) -> "CycArray":
        o = self._lift(other)
        if o is NotImplemented:
            return o
        den = math.lcm(self.den, o.den)
        a = _scale_int(self.num, den // self.den)
        b = _scale_int(o.num, den // o.den)
        if a.dtype == object or b.dtype == object or _maxabs(a) + _maxabs(b) >= _I64:
            a, b = _as_object(a), _as_object(b)
        return CycArray(self.field, a + b if sign > 0 else a - b, den)

    def __add__(self, other):
        return self._addsub(other, 1)

    def __radd__(self, other):
        return self._addsub(other, 1)

    def __sub__(self, other):
        return self._addsub(other, -1)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o._addsub(self, -1)

    def __neg__(self):
        return CycArray(self.field, -self.num, self.den, False)

    def __mul__(self, other):
        """Elementwise (broadcasting) field product."""
        o = self._lift(other)
        if o is NotImplemented:
            return o
        f = self.field
        a, b = self.num, o.num
        d = f.degree
        bound = _maxabs(a) * _maxabs(b) * f.mul_colsum
        if bound >= _I64 or a.dtype == object or b.dtype == object:
            a, b = _as_object(a), _as_object(b)
        outer = a[..., :, None] * b[..., None, :]
        shp = outer.shape[:-2]
        flat = outer.reshape(shp + (d * d,))
        if flat.dtype == object:
            res = flat @ f.mul2.astype(object)
        else:
            res = flat @ f.mul2
        return CycArray(f, res, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CycScalar):
            return self * other.inv()
        if isinstance(other, (int, _RationalABC)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError
            return CycArray(self.field, _scale_int(self.num, q.denominator), self.den * q.numerator)
        return NotImplemented

    def __matmul__(self, other: "CycArray") -> "CycArray":
        self._check(other)
        a, b = self, other
        if a.ndim == 1:
            return (a.reshape(1, a.shape[0]) @ b).reshape(b.shape[:-2] + b.shape[-1:])
        if b.ndim == 1:
            return (a @ b.reshape(b.shape[0], 1)).reshape(a.shape[:-1])
        if b.ndim == 2:
            lead = a.shape[:-1]
            res = _matmul2(a.reshape(int(np.prod(lead)), a.shape[-1]), b)
            return res.reshape(lead + (b.shape[1],))
        if a.ndim == 2:
            batch = b.shape[:-2]
            n, p = b.shape[-2:]
            bb = b.reshape((-1, n, p)).transpose(1, 0, 2).reshape(n, -1)
            res = _matmul2(a, bb).reshape(a.shape[0], -1, p).transpose(1, 0, 2)
            return res.reshape(batch + (a.shape[0], p))
        if a.shape[:-2] == b.shape[:-2]:
            batch = a.shape[:-2]
            aa = a.reshape((-1,) + a.shape[-2:])
            bb = b.reshape((-1,) + b.shape[-2:])
            parts = [_matmul2(aa[k], bb[k]) for k in range(aa.shape[0])]
            return CycArray.stack(parts).reshape(batch + (a.shape[-2], b.shape[-1]))
        raise ValueError("unsupported matmul shapes")

    def lin(self, mat, den: int = 1) -> "CycArray":
        """Apply a rational matrix mat/den along the last value axis: out[...,q] = sum_p self[...,p] mat[p,q]."""
        mat = np.asarray(mat)
        num = np.moveaxis(self.num, -1, -2)
        lead = num.shape[:-1]
        flat = num.reshape(-1, num.shape[-1])
        bound = _maxabs(flat) * int(np.abs(mat).sum(axis=0).max()) if mat.size else 0
        res = _int_matmul(flat, mat.astype(object) if mat.dtype == object else mat.astype(np.int64), bound)
        res = np.moveaxis(res.reshape(lead + (mat.shape[1],)), -2, -1)
        return CycArray(self.field, res, self.den * den)

    def sum(self, axis=None) -> "CycArray":
        if axis is None:
            axes = tuple(range(self.ndim))
        elif isinstance(axis, int):
            axes = (axis % self.ndim,)
        else:
            axes = tuple(a % self.ndim for a in axis)
        num = self.num
        if num.dtype != object and _maxabs(num) * max(1, num.size) >= _I64:
            num = _as_object(num)
        return CycArray(self.field, num.sum(axis=axes), self.den)

    def trace(self) -> CycScalar:
        n = min(self.shape[-2:])
        idx = np.arange(n)
        return CycArray(self.field, self.num[idx, idx], self.den).sum().scalar()

    def diagonal(self) -> "CycArray":
        n = min(self.shape[-2:])
        idx = np.arange(n)
        return CycArray(self.field, self.num[..., idx, idx, :], self.den, False)

    def conj(self) -> "CycArray":
        """Entrywise complex conjugation z -> z^-1 (the field-level tau)."""
        f = self.field
        mat = f.conj_matrix
        return CycArray(f, _apply_coeff_map(self.num, mat), self.den)

    def galois(self, k: int) -> "CycArray":
        f = self.field
        return CycArray(f, _apply_coeff_map(self.num, f.galois_matrix(k)), self.den)

    def H(self) -> "CycArray":
        """Conjugate transpose of the last two axes."""
        return self.conj().T

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.any()

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if self.shape != o.shape and o.ndim != 0:
            return False
        return (self - o).is_zero()

    __hash__ = None

    def is_real(self) -> bool:
        return self.conj() == self

    def to_complex(self) -> np.ndarray:
        num = self.num
        if num.dtype == object:
            num = np.vectorize(lambda v: float(Fraction(int(v), self.den)), otypes=[float])(num)
            return num @ self.field.embedding
        return (num.astype(np.float64) @ self.field.embedding) / self.den

    def __repr__(self):
        return f"CycArray(shape={self.shape}, N={self.field.n}, den={self.den})"


def _apply_coeff_map(num: np.ndarray, mat: np.ndarray) -> np.ndarray:
    bound = _maxabs(num) * int(np.abs(mat).sum(axis=0).max())
    lead = num.shape[:-1]
    flat = num.reshape(-1, num.shape[-1])
    return _int_matmul(flat, mat, bound).reshape(lead + (mat.shape[1],))


def _matmul2(a: CycArray, b: CycArray) -> CycArray:
    """Product of value-2D arrays a (m,n) and b (n,p)."""
    f = a.field
    d = f.degree
    m, n = a.shape
    n2, p = b.shape
    if n != n2:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    A = a.num.transpose(0, 2, 1).reshape(m * d, n)
    B = b.num.reshape(n, p * d)
    bound1 = _maxabs(A) * _maxabs(B) * n
    t = _int_matmul(A, B, bound1)
    t = t.reshape(m, d, p, d).transpose(0, 2, 1, 3).reshape(m * p, d * d)
    mul2 = f.mul2.astype(object) if t.dtype == object else f.mul2
    res = _int_matmul(t, mul2, bound1 * f.mul_colsum)
    return CycArray(f, res.reshape(m, p, d), a.den * b.den)


def scalar_array(x: CycScalar) -> CycArray:
    return CycArray(x.field, np.array(x.num, dtype=object), x.den)
