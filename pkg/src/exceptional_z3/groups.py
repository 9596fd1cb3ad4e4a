"""Linear maps of the complexified Cayley algebra and of J^C, with exact
membership tests for G2, F4 and E6.

A map is stored as its matrix on the standard basis (columns are images of
basis vectors).  Membership predicates check the defining identities on
every pair of basis vectors and cache the verdict on the value.
"""
from __future__ import annotations

import numpy as np

from . import fieldla
from .cayley import OCT_TABLE, Octonion, omul
from .cycarray import CycArray
from .jordan import CIRC2, CROSS4, DIM, GRAM, JordanElem
from .scalar import CycScalar, DEFAULT_CONDUCTOR

CAYLEY8 = "Cayley8"
JORDAN27 = "Jordan27"
SPACES = {CAYLEY8: 8, JORDAN27: DIM}


def _rational_left(r: np.ndarray, x: CycArray, den: int = 1) -> CycArray:
    """(r / den) @ x for an integer matrix r and a field matrix x."""
    return x.T.lin(r.T, den).T


def _bilinear_images(a: CycArray, tensor: np.ndarray, den: int) -> CycArray:
    """out[i, j, :] = B(a e_i, a e_j) where B has structure tensor tensor/den."""
    n = a.shape[0]
    t1 = a.T.lin(tensor.reshape(n, n * n))  # (i, m*k)
    t1 = t1.reshape(n, n, n).transpose(0, 2, 1)  # (i, k, m)
    t2 = t1 @ a  # (i, k, j)
    return t2.transpose(0, 2, 1) / den


def _tensor_images(a: CycArray, tensor: np.ndarray, den: int) -> CycArray:
    """out[i, j, :] = a (B(e_i, e_j))."""
    n = a.shape[0]
    return _rational_left(tensor.reshape(n * n, n), a.T, den).reshape(n, n, n)


class AlgMap:
    """Matrix of a linear map on Cayley8 or Jordan27 with cached memberships."""

    __slots__ = ("space", "matrix", "_certs", "name")

    def __init__(self, space: str, matrix: CycArray, name: str = ""):
        n = SPACES.get(space)
        if n is None:
            raise ValueError(f"unknown space {space}")
        if matrix.shape != (n, n):
            raise ValueError(f"{space} maps need a {n}x{n} matrix")
        self.space = space
        self.matrix = matrix
        self._certs = {}
        self.name = name

    # construction --------------------------------------------------------

    @classmethod
    def identity(cls, space: str, conductor: int = DEFAULT_CONDUCTOR) -> "AlgMap":
        return cls(space, CycArray.eye(SPACES[space], conductor), "1")

    @classmethod
    def from_function(cls, space: str, f, conductor: int = DEFAULT_CONDUCTOR, name: str = "") -> "AlgMap":
        """f maps a (n, n) batch of basis coordinate rows to the batch of images."""
        n = SPACES[space]
        images = f(CycArray.eye(n, conductor))
        return cls(space, images.T, name)

    @classmethod
    def scalar(cls, space: str, c: CycScalar) -> "AlgMap":
        return cls(space, CycArray.eye(SPACES[space], c.conductor) * c, str(c))

    @property
    def conductor(self) -> int:
        return self.matrix.conductor

    @property
    def dim(self) -> int:
        return SPACES[self.space]

    # algebra -------------------------------------------------------------

    def _check(self, other: "AlgMap"):
        if other.space != self.space:
            raise ValueError("space mismatch")

    def apply(self, v):
        if isinstance(v, Octonion):
            if self.space != CAYLEY8:
                raise ValueError("space mismatch")
            return Octonion(self.matrix @ v.v)
        if isinstance(v, JordanElem):
            if self.space != JORDAN27:
                raise ValueError("space mismatch")
            return JordanElem(self.matrix @ v.v)
        raise TypeError("apply needs an Octonion or a JordanElem")

    __call__ = apply

    def compose(self, other: "AlgMap") -> "AlgMap":
        """self after other."""
        self._check(other)
        return AlgMap(self.space, self.matrix @ other.matrix)

    __matmul__ = compose

    def __mul__(self, other):
        if isinstance(other, AlgMap):
            return self.compose(other)
        return AlgMap(self.space, self.matrix * other)

    def power(self, k: int) -> "AlgMap":
        if k < 0:
            return self.inverse().power(-k)
        out = AlgMap.identity(self.space, self.conductor)
        base = self
        while k:
            if k & 1:
                out = out.compose(base)
            k >>= 1
            if k:
                base = base.compose(base)
        return out

    def power_is_identity(self, n: int) -> bool:
        return self.power(n).is_identity()

    def is_identity(self) -> bool:
        return self.matrix == CycArray.eye(self.dim, self.conductor)

    def equals_scalar(self, c) -> bool:
        return self.matrix == CycArray.eye(self.dim, self.conductor) * c

    def inverse(self) -> "AlgMap":
        g = self._gram()
        if self._certs.get("E6") or self._certs.get("F4") or self._certs.get("G2"):
            # unitary for the Hermitian form: a^-1 = G^-1 a^H G
            gd = np.diag(g)
            inv = _rational_left(np.diag(2 // gd), self.matrix.H().lin(g), 2)
            out = AlgMap(self.space, inv)
        else:
            out = AlgMap(self.space, fieldla.inverse(self.matrix))
        if not self.compose(out).is_identity():
            raise ArithmeticError("inverse check failed")
        for k, v in self._certs.items():
            if v:
                out._certs[k] = True
        return out

    def tau_conj(self) -> "AlgMap":
        """tau a tau: entrywise complex conjugation of the matrix."""
        return AlgMap(self.space, self.matrix.conj())

    def transpose(self) -> "AlgMap":
        return AlgMap(self.space, self.matrix.T)

    def __eq__(self, other):
        return isinstance(other, AlgMap) and other.space == self.space and self.matrix == other.matrix

    __hash__ = None

    def equal(self, other: "AlgMap") -> bool:
        return self == other

    def commutes(self, other: "AlgMap") -> bool:
        self._check(other)
        return self.matrix @ other.matrix == other.matrix @ self.matrix

    def conjugate_by(self, d: "AlgMap") -> "AlgMap":
        """d self d^-1."""
        return d.compose(self).compose(d.inverse())

    def stabilizes(self, targets) -> bool:
        for t in targets:
            if not self.apply(t) == t:
                return False
        return True

    def _gram(self) -> np.ndarray:
        if self.space == CAYLEY8:
            return np.eye(8, dtype=np.int64)
        return GRAM

    # membership ----------------------------------------------------------

    def certified(self, group: str) -> bool:
        return bool(self._certs.get(group))

    def is_g2(self) -> bool:
        if "G2" not in self._certs:
            self._certs["G2"] = _is_g2(self)
        return self._certs["G2"]

    def is_f4(self) -> bool:
        if "F4" not in self._certs:
            self._certs["F4"] = _is_f4(self)
        return self._certs["F4"]

    def is_e6(self) -> bool:
        if "E6" not in self._certs:
            self._certs["E6"] = _is_e6(self)
        return self._certs["E6"]

    def in_group(self, group: str) -> bool:
        return {"G2": self.is_g2, "F4": self.is_f4, "E6": self.is_e6}[group]()

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"AlgMap({self.space}{label})"


def _is_g2(f: AlgMap) -> bool:
    if f.space != CAYLEY8:
        return False
    a = f.matrix
    if not a.is_real():
        return False
    if not a.T @ a == CycArray.eye(8, a.conductor):
        return False
    rhs = omul(a.T[:, None, :], a.T[None, :, :])
    lhs = _tensor_images(a, OCT_TABLE, 1)
    return lhs == rhs


def _is_f4(f: AlgMap) -> bool:
    if f.space != JORDAN27:
        return False
    a = f.matrix
    if not a.is_real():
        return False
    if not a.T @ _rational_left(GRAM, a) == CycArray.from_rational(GRAM, 1, a.conductor):
        return False
    return _bilinear_images(a, CIRC2, 2) == _tensor_images(a, CIRC2, 2)


def _is_e6(f: AlgMap) -> bool:
    if f.space != JORDAN27:
        return False
    a = f.matrix
    if not a.H() @ _rational_left(GRAM, a) == CycArray.from_rational(GRAM, 1, a.conductor):
        return False
    return _bilinear_images(a, CROSS4, 4) == _tensor_images(a.conj(), CROSS4, 4)


def is_g2(f: AlgMap) -> bool:
    return f.is_g2()


def is_f4(f: AlgMap) -> bool:
    return f.is_f4()


def is_e6(f: AlgMap) -> bool:
    return f.is_e6()


def extend_g2(f: AlgMap) -> AlgMap:
    """The inclusion G2 -> F4: act by f on each off-diagonal octonion."""
    if f.space != CAYLEY8:
        raise ValueError("extend_g2 needs a Cayley8 map")
    n = f.conductor
    blocks = CycArray.zeros((DIM, DIM), n)
    m = blocks.copy_with((slice(0, 3), slice(0, 3)), CycArray.eye(3, n))
    for k in range(3):
        s = slice(3 + 8 * k, 11 + 8 * k)
        m = m.copy_with((s, s), f.matrix)
    out = AlgMap(JORDAN27, m, f.name)
    return out
