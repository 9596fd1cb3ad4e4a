"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) reduced
modulo the N-th cyclotomic polynomial, as integer numerators over one
positive common denominator.  Complex conjugation is z -> z^-1.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

import numpy as np
import sympy

DEFAULT_CONDUCTOR = 36
SUPPORTED_CONDUCTORS = (36, 180)


class CycField:
    """Static data for Q(zeta_N): reduction table, product table, conjugation."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("conductor must be positive")
        self.n = n
        x = sympy.Symbol("x")
        high_to_low = sympy.cyclotomic_poly(n, x, polys=True).all_coeffs()
        poly = [int(c) for c in reversed(high_to_low)]
        d = len(poly) - 1
        self.degree = d
        self.poly = tuple(poly)
        powers = np.zeros((n, d), dtype=np.int64)
        cur = [0] * d
        cur[0] = 1
        for m in range(n):
            powers[m] = cur
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for k in range(d):
                    cur[k] -= top * poly[k]
        self.powers = powers
        self.power_rows = [tuple((k, int(c)) for k, c in enumerate(row) if c) for row in powers]
        idx = np.arange(d)
        self.mul_table = powers[(idx[:, None] + idx[None, :]) % n]
        self.mul2 = self.mul_table.reshape(d * d, d)
        self.mul_max = int(np.abs(self.mul_table).max())
        self.mul_colsum = int(np.abs(self.mul2).sum(axis=0).max())
        self.conj_matrix = powers[(-idx) % n]
        self.embedding = np.exp(2j * np.pi * idx / n)

    def galois_matrix(self, k: int) -> np.ndarray:
        """Matrix of the automorphism z -> z^k (k coprime to N), acting on rows."""
        if math.gcd(k, self.n) != 1:
            raise ValueError("exponent must be coprime to the conductor")
        idx = np.arange(self.degree)
        return self.powers[(k * idx) % self.n]

    def units(self):
        return [k for k in range(1, self.n) if math.gcd(k, self.n) == 1]

    def __repr__(self):
        return f"CycField({self.n})"


@lru_cache(maxsize=None)
def field(n: int = DEFAULT_CONDUCTOR) -> CycField:
    return CycField(n)


def _content_gcd(values, den):
    g = den
    for v in values:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                break
    return g


def solve_rational(a, b):
    """Solve a x = b over Q by Gauss-Jordan elimination (a square, nonsingular)."""
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        row = [v / p for v in m[col]]
        m[col] = row
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [u - f * w for u, w in zip(m[r], row)]
    return [m[i][n] for i in range(n)]


class CycScalar:
    """An element of Q(zeta_N), immutable and hashable."""

    __slots__ = ("field", "num", "den")

    def __init__(self, value=0, conductor: int = DEFAULT_CONDUCTOR):
        f = field(conductor)
        if isinstance(value, CycScalar):
            if value.field is not f:
                raise ValueError("conductor mismatch")
            self.field, self.num, self.den = f, value.num, value.den
            return
        if not isinstance(value, (int, _RationalABC)):
            raise TypeError(f"cannot build CycScalar from {type(value).__name__}")
        q = Fraction(value)
        num = [0] * f.degree
        num[0] = q.numerator
        self.field, self.num, self.den = f, tuple(num), q.denominator

    @classmethod
    def _make(cls, f: CycField, num, den: int) -> "CycScalar":
        if den == 0:
            raise ZeroDivisionError
        if den < 0:
            num = [-v for v in num]
            den = -den
        g = _content_gcd(num, den)
        if g != 1:
            num = [v // g for v in num]
            den //= g
        obj = object.__new__(cls)
        obj.field, obj.num, obj.den = f, tuple(int(v) for v in num), int(den)
        return obj

    @classmethod
    def from_coeffs(cls, coeffs, conductor: int = DEFAULT_CONDUCTOR) -> "CycScalar":
        """Build from rational power-basis coordinates (length phi(N))."""
        f = field(conductor)
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != f.degree:
            raise ValueError("wrong number of coefficients")
        den = math.lcm(*(c.denominator for c in fr)) if fr else 1
        return cls._make(f, [c.numerator * (den // c.denominator) for c in fr], den)

    @property
    def conductor(self) -> int:
        return self.field.n

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(v, self.den) for v in self.num)

    def _coerce(self, other) -> "CycScalar":
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise ValueError("conductor mismatch")
            return other
        if isinstance(other, (int, _RationalABC)):
            return CycScalar(other, self.field.n)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        l = math.lcm(self.den, o.den)
        a, b = l // self.den, l // o.den
        return CycScalar._make(self.field, [x * a + y * b for x, y in zip(self.num, o.num)], l)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._make(self.field, [-x for x in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        f = self.field
        out = [0] * f.degree
        rows = f.power_rows
        n = f.n
        for i, x in enumerate(self.num):
            if not x:
                continue
            for j, y in enumerate(o.num):
                if not y:
                    continue
                p = x * y
                for k, c in rows[(i + j) % n]:
                    out[k] += p * c
        return CycScalar._make(f, out, self.den * o.den)

    __rmul__ = __mul__

    def multiplication_matrix(self):
        """Rational matrix of y -> self*y in the power basis (columns = images of z^j)."""
        f = self.field
        cols = []
        for j in range(f.degree):
            basis = [0] * f.degree
            basis[j] = 1
            cols.append((self * CycScalar._make(f, basis, 1)).coeffs)
        return [[cols[j][i] for j in range(f.degree)] for i in range(f.degree)]

    def inv(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        rhs = [0] * self.field.degree
        rhs[0] = 1
        return CycScalar.from_coeffs(solve_rational(self.multiplication_matrix(), rhs), self.field.n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise ZeroDivisionError("division by zero")
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        k = abs(k)
        result = CycScalar(1, self.field.n)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "CycScalar":
        f = self.field
        out = [0] * f.degree
        for i, x in enumerate(self.num):
            if x:
                for k, c in f.power_rows[(-i) % f.n]:
                    out[k] += x * c
        return CycScalar._make(f, out, self.den)

    def galois(self, k: int) -> "CycScalar":
        f = self.field
        if math.gcd(k, f.n) != 1:
            raise ValueError("exponent must be coprime to the conductor")
        out = [0] * f.degree
        for i, x in enumerate(self.num):
            if x:
                for j, c in f.power_rows[(k * i) % f.n]:
                    out[j] += x * c
        return CycScalar._make(f, out, self.den)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_real(self) -> bool:
        return self.conj() == self

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    def to_float(self) -> complex:
        """Numerical value under z -> exp(2 pi i / N).  Diagnostic only."""
        emb = self.field.embedding
        acc = 0j
        for k, v in enumerate(self.num):
            if v:
                acc += float(Fraction(v, self.den)) * emb[k]
        return complex(acc)

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, _RationalABC)):
            return self == CycScalar(other, self.field.n)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.field.n, self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return f"CycScalar({Fraction(self.num[0], self.den)})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return f"CycScalar({' + '.join(terms)}; N={self.field.n})"


def root_of_unity(k: int, n: int, conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """exp(2 pi i k / n) inside Q(zeta_conductor); n must divide the conductor."""
    if n <= 0 or conductor % n:
        raise ValueError(f"{n} does not divide the conductor {conductor}")
    f = field(conductor)
    e = (k * (conductor // n)) % conductor
    return CycScalar._make(f, list(f.powers[e]), 1)


def zeta(k: int = 1, conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    return root_of_unity(k, conductor, conductor)


def imag_unit(conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    return root_of_unity(1, 4, conductor)


def omega(conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """-1/2 + (sqrt 3 / 2) i as a field element."""
    return root_of_unity(1, 3, conductor)


def nu(conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """exp(2 pi i / 9)."""
    return root_of_unity(1, 9, conductor)


def cos2pi(k: int, n: int, conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """cos(2 pi k / n), a real element of the field."""
    return (root_of_unity(k, n, conductor) + root_of_unity(-k, n, conductor)) * Fraction(1, 2)


def sin2pi(k: int, n: int, conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """sin(2 pi k / n); needs i in the field (4 | conductor)."""
    diff = root_of_unity(k, n, conductor) - root_of_unity(-k, n, conductor)
    return diff * imag_unit(conductor).inv() * Fraction(1, 2)


def sqrt3(conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    return root_of_unity(1, 12, conductor) + root_of_unity(-1, 12, conductor)


def check_float(x: CycScalar, value: complex, tol: float = 1e-9) -> bool:
    return cmath.isclose(x.to_float(), value, abs_tol=tol)
