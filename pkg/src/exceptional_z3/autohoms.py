"""Named automorphisms, the homomorphisms phi onto fixed-point subgroups, and
the parameter-group embeddings used for the joint fixed-point groups.

Parameter conventions (all CycArray unless noted):

  quaternion       (4,)       coordinates on 1, e1, e2, e3
  Cx element       (2,)       re + im e1, real coefficients for the compact groups
  Cx matrix        (n, n, 2)
  field matrix     (n, n)     entries in Q(zeta_N), conjugation is tau
  field scalar     CycScalar

Every constructor validates its parameters exactly and raises ValueError on
a violation.  The maps are built by pushing the whole basis batch through
the defining formula, so each is a single vectorized evaluation.
"""
from __future__ import annotations

import numpy as np

from . import fieldla
from .cayley import omul, oconj, qconj, qmul, split_coords, unsplit_coords, cxmul
from .cycarray import CycArray
from .groups import CAYLEY8, JORDAN27, AlgMap, extend_g2
from .jordan import DIM, off
from .models import (
    CSplit,
    HSplit,
    cmatmul,
    cstar,
    from_csplit_arr,
    from_hsplit_arr,
    h_mix,
    k_inv_arr,
    k_J_arr,
    k_J_inv_arr,
    qmatmul,
    qstar,
    to_csplit_arr,
    to_hsplit_arr,
)
from .scalar import CycScalar, DEFAULT_CONDUCTOR, cos2pi, imag_unit, root_of_unity, sin2pi, sqrt3

# small constructors ----------------------------------------------------------


def _as_scalar(x, conductor: int) -> CycScalar:
    return x if isinstance(x, CycScalar) else CycScalar(x, conductor)


def quat(a0=0, a1=0, a2=0, a3=0, conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    return CycArray.from_scalars([_as_scalar(v, conductor) for v in (a0, a1, a2, a3)], conductor)


def cx(re=0, im=0, conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    return CycArray.from_scalars([_as_scalar(re, conductor), _as_scalar(im, conductor)], conductor)


def cx_omega(conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    """Bold omega = -1/2 + (sqrt 3 / 2) e1."""
    return cx(CycScalar(-1, conductor) / 2, sqrt3(conductor) / 2, conductor)


def cx_exp(k: int, n: int, conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    """exp(2 pi e1 k / n)."""
    return cx(cos2pi(k, n, conductor), sin2pi(k, n, conductor), conductor)


def quat_omega(conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    return cx_to_quat(cx_omega(conductor))


def cx_to_quat(c: CycArray) -> CycArray:
    z = CycArray.zeros(c.shape[:-1] + (2,), c.conductor)
    return CycArray.concatenate([c, z], axis=-1)


def cx_diag(*entries: CycArray) -> CycArray:
    n = len(entries)
    cond = entries[0].conductor
    out = CycArray.zeros((n, n, 2), cond)
    for k, e in enumerate(entries):
        out = out.copy_with((k, k), e)
    return out


def cx_scalar_matrix(c: CycArray, n: int = 3) -> CycArray:
    return cx_diag(*([c] * n))


def cx_eye(n: int = 3, conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    return cx_scalar_matrix(cx(1, 0, conductor), n)


def quat_diag(*entries: CycArray) -> CycArray:
    n = len(entries)
    out = CycArray.zeros((n, n, 4), entries[0].conductor)
    for k, e in enumerate(entries):
        out = out.copy_with((k, k), e)
    return out


def quat_eye(n: int = 3, conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    return quat_diag(*([quat(1, conductor=conductor)] * n))


def field_diag(entries, conductor: int | None = None) -> CycArray:
    vals = list(entries)
    if conductor is None:
        conductor = next((v.conductor for v in vals if isinstance(v, CycScalar)), DEFAULT_CONDUCTOR)
    n = len(vals)
    z = CycScalar(0, conductor)
    return CycArray.from_scalars([[vals[i] if i == j else z for j in range(n)] for i in range(n)], conductor)


def block_diag(blocks) -> CycArray:
    """Block-diagonal field matrix; scalars count as 1x1 blocks."""
    mats = [b if isinstance(b, CycArray) else CycArray.from_scalars([[b]]) for b in blocks]
    cond = mats[0].conductor
    n = sum(m.shape[0] for m in mats)
    out = CycArray.zeros((n, n), cond)
    pos = 0
    for m in mats:
        s = slice(pos, pos + m.shape[0])
        out = out.copy_with((s, s), m)
        pos += m.shape[0]
    return out


def field_to_cx(z: CycArray) -> CycArray:
    """Field entries z -> Cx (re, im) with z = re + i im, re and im real."""
    i = imag_unit(z.conductor)
    zc = z.conj()
    re = (z + zc) / 2
    im = (z - zc) * (i.inv() / 2)
    return CycArray.stack([re, im], axis=-1)


def cx_to_field(c: CycArray) -> CycArray:
    """Cx with real coefficients -> field element re + i im."""
    return c[..., 0] + c[..., 1] * imag_unit(c.conductor)


# validation -----------------------------------------------------------------


def _fail(msg: str):
    raise ValueError(msg)


def check_unit_quat(q: CycArray) -> CycArray:
    if q.shape != (4,) or not q.is_real() or not (q * q).sum() == 1:
        _fail("expected a unit quaternion in Sp(1)")
    return q


def check_unit_cx(a: CycArray) -> CycArray:
    if a.shape != (2,) or not a.is_real() or not (a * a).sum() == 1:
        _fail("expected a unit element of C")
    return a


def check_unit_field(t: CycScalar) -> CycScalar:
    if not t.conj() * t == 1:
        _fail("expected a unit field element")
    return t


def check_cx_unitary(a: CycArray, special: bool = True) -> CycArray:
    n = a.shape[0]
    if a.shape != (n, n, 2) or not a.is_real():
        _fail("expected a real-coefficient matrix over C")
    if not cmatmul(a, cstar(a)) == cx_eye(n, a.conductor):
        _fail("matrix is not unitary")
    if special and not fieldla.det(cx_to_field(a)) == 1:
        _fail("determinant is not 1")
    return a


def check_field_unitary(a: CycArray, special: bool = True) -> CycArray:
    n = a.shape[0]
    if a.shape != (n, n) or not a @ a.H() == CycArray.eye(n, a.conductor):
        _fail("matrix is not unitary")
    if special and not fieldla.det(a) == 1:
        _fail("determinant is not 1")
    return a


def check_sp3(a: CycArray) -> CycArray:
    if a.shape != (3, 3, 4) or not a.is_real() or not qmatmul(a, qstar(a)) == quat_eye(3, a.conductor):
        _fail("expected an element of Sp(3)")
    return a


def check_block_unitary(p: CycArray, sizes) -> CycArray:
    """Element of S(U(n1) x ... x U(nk)) inside SU(sum n)."""
    n = sum(sizes)
    if p.shape != (n, n):
        _fail("block matrix has the wrong size")
    mask = np.ones((n, n), dtype=bool)
    pos = 0
    for s in sizes:
        mask[pos:pos + s, pos:pos + s] = False
        pos += s
    if p.num[mask].any():
        _fail("matrix is not block diagonal")
    return check_field_unitary(p, special=True)


# map builders ---------------------------------------------------------------


def _cayley_map(f, conductor: int, name: str) -> AlgMap:
    return AlgMap.from_function(CAYLEY8, f, conductor, name)


def _jordan_map(f, conductor: int, name: str) -> AlgMap:
    return AlgMap.from_function(JORDAN27, f, conductor, name)


def _oct_pad(c: CycArray) -> CycArray:
    return CycArray.concatenate([c, CycArray.zeros(c.shape[:-1] + (8 - c.shape[-1],), c.conductor)], axis=-1)


def phi_g2_gamma(p: CycArray, q: CycArray, validate: bool = True) -> AlgMap:
    """m + n e4 -> q m conj(q) + (p n conj(q)) e4."""
    if validate:
        check_unit_quat(p)
        check_unit_quat(q)
    qb = qconj(q)

    def f(v):
        m, n = v[..., :4], v[..., 4:]
        return CycArray.concatenate([qmul(qmul(q, m), qb), qmul(qmul(p, n), qb)], axis=-1)

    return _cayley_map(f, p.conductor, "phi_G2_gamma")


def phi_g2_w3(a: CycArray, validate: bool = True) -> AlgMap:
    """m0 + m -> m0 + A m in the C + C^3 model."""
    if validate:
        check_cx_unitary(a)

    def f(v):
        s = split_coords(v)
        m = s[..., 1:, :]
        am = cmatmul(a, m[..., :, None, :])[..., 0, :]
        return unsplit_coords(CycArray.concatenate([s[..., 0:1, :], am], axis=-2))

    return _cayley_map(f, a.conductor, "phi_G2_w3")


def D(a: CycArray, validate: bool = True) -> AlgMap:
    """D_a: x1 -> conj(a) x1 conj(a), x2 -> a x2, x3 -> x3 a, diagonal fixed."""
    if validate:
        check_unit_cx(a)
    a8 = _oct_pad(a)
    ab = oconj(a8)

    def f(v):
        x1, x2, x3 = (v[..., off(i)] for i in (1, 2, 3))
        return CycArray.concatenate(
            [v[..., 0:3], omul(omul(ab, x1), ab), omul(a8, x2), omul(x3, a8)], axis=-1
        )

    return _jordan_map(f, a.conductor, "D")


def phi6sigma(theta: CycScalar, validate: bool = True) -> AlgMap:
    """xi1 -> theta^4 xi1; xi2, xi3, x1 -> theta^-2 (.); x2, x3 -> theta (.)."""
    if validate:
        check_unit_field(theta)
    n = theta.conductor
    t4, tm2 = theta ** 4, theta ** -2
    scale = [t4, tm2, tm2] + [tm2] * 8 + [theta] * 16
    return AlgMap(JORDAN27, field_diag(scale, n), "phi6sigma")


def phi_f4_gamma(p: CycArray, a: CycArray, validate: bool = True) -> AlgMap:
    """M + a -> A M A* + p a A* in the J(3, H) + H^3 model."""
    if validate:
        check_unit_quat(p)
        check_sp3(a)
    ast = qstar(a)

    def f(v):
        h = to_hsplit_arr(v)
        m = qmatmul(qmatmul(a, h.M), ast)
        row = qmatmul(h.a[..., None, :, :], ast)[..., 0, :, :]
        return from_hsplit_arr(HSplit(m, qmul(p, row)))

    return _jordan_map(f, p.conductor, "phi_F4_gamma")


def phi_f4_w3(b: CycArray, a: CycArray, validate: bool = True) -> AlgMap:
    """Xc + M -> A Xc A* + B M A* in the J(3, C) + M(3, C) model."""
    if validate:
        check_cx_unitary(b)
        check_cx_unitary(a)
    ast = cstar(a)

    def f(v):
        c = to_csplit_arr(v)
        return from_csplit_arr(CSplit(cmatmul(cmatmul(a, c.Xc), ast), cmatmul(cmatmul(b, c.M), ast)))

    return _jordan_map(f, a.conductor, "phi_F4_w3")


def phi_e6_gamma(p: CycArray, a: CycArray, validate: bool = True) -> AlgMap:
    """M + a -> k_J^-1(A k_J(M) A^T) + p a k^-1(tau A^T)."""
    if validate:
        check_unit_quat(p)
        check_field_unitary(a)
    at = a.T
    right = k_inv_arr(a.conj().T)

    def f(v):
        h = to_hsplit_arr(v)
        m = k_J_inv_arr(a @ k_J_arr(h.M) @ at)
        row = qmatmul(h.a[..., None, :, :], right)[..., 0, :, :]
        return from_hsplit_arr(HSplit(m, qmul(p, row)))

    return _jordan_map(f, a.conductor, "phi_E6_gamma")


def phi_e6_w3(l: CycArray, a: CycArray, b: CycArray, validate: bool = True) -> AlgMap:
    """Xc + M -> h Xc h* + L M (tau h)* with h = h(A, B)."""
    if validate:
        for m in (l, a, b):
            check_cx_unitary(m)
    h = h_mix(a, b)
    hst = cstar(h)
    right = cstar(h.conj())

    def f(v):
        c = to_csplit_arr(v)
        return from_csplit_arr(CSplit(cmatmul(cmatmul(h, c.Xc), hst), cmatmul(cmatmul(l, c.M), right)))

    return _jordan_map(f, a.conductor, "phi_E6_w3")


# named automorphisms ----------------------------------------------------------

_CAYLEY_NAMES = ("gamma", "gamma3", "w3")
_JORDAN_NAMES = ("gamma", "gamma3", "sigma", "sigma3", "w3", "nu3", "mu3",
                 "sigma3p", "mu3p", "w3p", "deltaR", "deltaQ", "deltaN")
NAMED = _JORDAN_NAMES


def _cayley_named(name: str, n: int) -> AlgMap:
    if name == "gamma":
        return AlgMap(CAYLEY8, CycArray.from_rational(np.diag([1] * 4 + [-1] * 4), 1, n), "gamma")
    if name == "gamma3":
        w = quat_omega(n)

        def f(v):
            return CycArray.concatenate([v[..., :4], qmul(w, v[..., 4:])], axis=-1)

        return _cayley_map(f, n, "gamma3")
    if name == "w3":
        w = cx_omega(n)

        def f(v):
            s = split_coords(v)
            return unsplit_coords(CycArray.concatenate([s[..., 0:1, :], cxmul(w, s[..., 1:, :])], axis=-2))

        return _cayley_map(f, n, "w3")
    raise ValueError(f"{name} is not defined on the Cayley algebra")


# 1-indexed entries of the conjugators
_R = {(1, 1): 1, (2, 2): 1, (3, 5): 1, (4, 4): 1, (5, 3): -1, (6, 6): 1}
_Q = {(1, 1): 1, (2, 2): 1, (3, 3): 1, (4, 5): 1, (5, 4): -1, (6, 6): 1}
_N = {(1, 1): 1, (2, 5): 1, (3, 3): 1, (4, 4): 1, (5, 2): -1, (6, 6): 1}


def _perm_matrix(entries, n: int) -> CycArray:
    m = np.zeros((6, 6), dtype=np.int64)
    for (r, c), v in entries.items():
        m[r - 1, c - 1] = v
    return CycArray.from_rational(m, 1, n)


def conjugator_matrix(name: str, conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    return _perm_matrix({"deltaR": _R, "deltaQ": _Q, "deltaN": _N}[name], conductor)


def a_nu(conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    v = root_of_unity(1, 9, conductor)
    return field_diag([v ** 5] + [v ** -1] * 5, conductor)


def primed_matrix(name: str, conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
    w = root_of_unity(1, 3, conductor)
    wb = w.conj()
    v = root_of_unity(1, 9, conductor)
    if name == "sigma3p":
        return field_diag([1, 1, w, w, wb, wb], conductor)
    if name == "mu3p":
        return field_diag([v ** -2, v ** 2, v ** -1, v ** -1, v, v], conductor)
    if name == "w3p":
        return field_diag([wb, wb, wb, w, w, w], conductor)
    raise ValueError(name)


def _jordan_named(name: str, n: int) -> AlgMap:
    one = quat(1, conductor=n)
    if name in _CAYLEY_NAMES:
        out = extend_g2(_cayley_named(name, n))
        out.name = name
        return out
    if name == "sigma":

        def f(v):
            return CycArray.concatenate([v[..., :11], -v[..., 11:]], axis=-1)

        return _jordan_map(f, n, "sigma")
    if name == "sigma3":
        out = D(cx_omega(n))
    elif name == "nu3":
        out = phi_e6_gamma(one, a_nu(n))
    elif name == "mu3":
        out = phi6sigma(root_of_unity(1, 9, n))
    elif name in ("sigma3p", "mu3p", "w3p"):
        out = phi_e6_gamma(one, primed_matrix(name, n))
    elif name in ("deltaR", "deltaQ", "deltaN"):
        out = phi_e6_gamma(one, conjugator_matrix(name, n))
    else:
        raise ValueError(f"unknown automorphism {name}")
    out.name = name
    return out


_CACHE: dict = {}


def named_auto(name: str, space: str = JORDAN27, conductor: int = DEFAULT_CONDUCTOR) -> AlgMap:
    key = (name, space, conductor)
    if key not in _CACHE:
        if space == CAYLEY8:
            _CACHE[key] = _cayley_named(name, conductor)
        elif space == JORDAN27:
            _CACHE[key] = _jordan_named(name, conductor)
        else:
            raise ValueError(f"unknown space {space}")
    return _CACHE[key]


# parameter-group embeddings ----------------------------------------------------


def f431(a: CycScalar, b: CycScalar) -> CycArray:
    """diag(a, b, (ab)^-1) in S(U(1)^3)."""
    return field_diag([a, b, (a * b).inv()])


def g421_f421(p: CycArray, u: CycArray) -> CycArray:
    """diag(1, 1, conj e2) diag(p, U) diag(1, 1, e2) as a quaternion 3x3 matrix (p in Sp(1), U in U(2) over C)."""
    n = p.conductor
    m = CycArray.zeros((3, 3, 4), n)
    m = m.copy_with((0, 0), p)
    m = m.copy_with((slice(1, 3), slice(1, 3)), cx_to_quat(u))
    e2 = quat(0, 0, 1, 0, conductor=n)
    left = quat_diag(quat(1, conductor=n), quat(1, conductor=n), qconj(e2))
    right = quat_diag(quat(1, conductor=n), quat(1, conductor=n), e2)
    return qmatmul(qmatmul(left, m), right)


def f452(a: CycScalar, b: CycScalar, A: CycArray, B: CycArray, C: CycArray) -> CycArray:
    """diag(aA, bB, (ab)^-2 C), literally as displayed."""
    return block_diag([A * a, B * b, C * (a * b) ** -2])


def f461(t: CycScalar, T: CycArray) -> CycArray:
    """diag(t^-5, t T)."""
    return block_diag([t ** -5, T * t])


def f472(a: CycScalar, b: CycScalar, c: CycScalar, A: CycArray, B: CycArray) -> CycArray:
    """diag(a^-2, b^-2, c^-1 A, (abc) B)."""
    return block_diag([a ** -2, b ** -2, A * c.inv(), B * (a * b * c)])


def f482(a: CycScalar, A: CycArray, B: CycArray) -> CycArray:
    """diag(aA, a^-1 B)."""
    return block_diag([A * a, B * a.inv()])


def f4133(a: CycScalar, b: CycScalar, A: CycArray, B: CycArray) -> CycArray:
    """diag(a^-2 b^-3, aA, bB)."""
    return block_diag([a ** -2 * b ** -3, A * a, B * b])


def psi_assert44(a: CycArray, u: CycArray) -> AlgMap:
    """D_a phi_{F4,gamma}(1, U) for a in U(1) and U in U(3) over C."""
    n = a.conductor
    phi = phi_f4_gamma(quat(1, conductor=n), cx_to_quat(check_cx_unitary(u, special=False)))
    return D(a) @ phi


LEMMA_EMBEDDINGS = {
    "f431": f431,
    "g421_f421": g421_f421,
    "f452": f452,
    "f461": f461,
    "f472": f472,
    "f482": f482,
    "f4133": f4133,
    "psi_assert44": psi_assert44,
}


def lemma_embed(name: str, *params):
    try:
        f = LEMMA_EMBEDDINGS[name]
    except KeyError:
        raise ValueError(f"unknown embedding {name}") from None
    return f(*params)


__all__ = [
    "D", "phi6sigma", "phi_g2_gamma", "phi_g2_w3", "phi_f4_gamma", "phi_f4_w3", "phi_e6_gamma",
    "phi_e6_w3", "named_auto", "lemma_embed", "NAMED", "DIM",
]
