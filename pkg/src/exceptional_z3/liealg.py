"""The Lie algebras g2 = Der(C), f4 = Der(J) and e6 = f4 + i L_T, and the
dimension of the subalgebra fixed by Ad of one or two automorphisms.

Bases are stored as rational matrices R_k.  For g2 and f4 they span the
compact real form directly.  For e6 the last 26 are L_T (X -> T o X for
traceless Hermitian T) and the compact form uses i L_T; fixed-space
dimensions do not depend on that scaling.

Dimensions are certified exactly:
  g2  exact nullity of the derivation system over Q;
  f4  52 independent inner derivations [L_a, L_b], each checked to be a
      derivation, plus rank of the full derivation system modulo a prime
      (nullity over Q is at most nullity mod p);
  e6  rank 78 of f4 + {L_T} over Q and the infinitesimal E6 identities.

Ad(g) in basis coordinates is read off at 78 (or 52, 14) pivot entries and
the reconstruction is checked entry by entry.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import fieldla
from .cayley import OCT_TABLE
from .cycarray import CycArray
from .groups import CAYLEY8, JORDAN27, AlgMap
from .jordan import CIRC2, CROSS4, DIM, GRAM
from .scalar import DEFAULT_CONDUCTOR, imag_unit

MOD_PRIME = 32749


class LieBasis:
    """Rational basis matrices num[k] / den of a Lie algebra of maps."""

    def __init__(self, name: str, space: str, num: np.ndarray, den: int, compact_scale=None):
        self.name = name
        self.space = space
        self.num = num
        self.den = den
        self.dim = num.shape[0]
        self.n = num.shape[1]
        # compact_scale[k] = True when the compact generator is i R_k
        self.compact_scale = np.zeros(self.dim, dtype=bool) if compact_scale is None else compact_scale
        flat = num.reshape(self.dim, -1)
        self._flat = flat
        self._pivots = _independent_columns(flat)
        inv, d = fieldla.rational_inverse(flat[:, self._pivots])
        self._pinv = inv  # coords = vals[:, pivots] @ pinv / d  (row convention below)
        self._pinv_den = d

    # coordinates -----------------------------------------------------------

    def coords(self, mats: CycArray) -> CycArray:
        """Coordinates c with mats[j] = sum_k c[j, k] R_k; raises if mats leave the span."""
        m = mats.shape[0]
        flat = mats.reshape(m, self.n * self.n)
        sel = flat[:, self._pivots]
        # sel = c @ (flat_basis[:, pivots]); c = sel @ inv(flat_basis[:, pivots])
        c = sel.lin(self._pinv, self._pinv_den) * self.den
        back = c.lin(self._flat, self.den)
        if not back == flat:
            raise ArithmeticError("matrices are not in the span of the basis")
        return c

    def matrices(self, conductor: int = DEFAULT_CONDUCTOR) -> CycArray:
        return CycArray.from_rational(self.num, self.den, conductor)

    def elements(self, conductor: int = DEFAULT_CONDUCTOR) -> list:
        mats = self.matrices(conductor)
        i = imag_unit(conductor)
        out = []
        for k in range(self.dim):
            m = mats[k] * i if self.compact_scale[k] else mats[k]
            out.append(AlgMap(self.space, m, f"{self.name}[{k}]"))
        return out

    # adjoint action ---------------------------------------------------------

    def ad(self, g: AlgMap) -> CycArray:
        """Matrix of Ad(g) on the basis: column k holds the coordinates of g R_k g^-1."""
        if g.space != self.space:
            raise ValueError("space mismatch")
        mats = self.matrices(g.conductor)
        conj = (g.matrix @ mats) @ g.inverse().matrix
        return self.coords(conj).T

    def ad_is_real_form(self, a: CycArray) -> bool:
        """Ad(g) preserves the compact real form: coordinates in the compact basis are conj-fixed."""
        scale = self.compact_scale
        if not scale.any():
            return a.is_real()
        i = imag_unit(a.conductor)
        # compact coordinates: c_k for plain generators, c_k / i for i R_k
        s = CycArray.from_rational(np.diag(np.where(scale, 1, 0)), 1, a.conductor)
        t = CycArray.from_rational(np.diag(np.where(scale, 0, 1)), 1, a.conductor)
        d = t + s * i
        dinv = t - s * i
        return (dinv @ a @ d).is_real()

    def bracket_closed(self) -> bool:
        """Every [R_a, R_b] lies in the rational span of the basis."""
        r = self.num.astype(object)
        prods = np.einsum("aij,bjk->abik", r, r)
        br = prods - prods.transpose(1, 0, 2, 3)
        flat = br.reshape(self.dim * self.dim, -1)
        return _in_rational_span(flat, self._flat)

    # fixed subalgebras -------------------------------------------------------

    def fixed_projector(self, gs, group: str | None = None) -> CycArray:
        """Projector onto the fixed subspace: the average of Ad over the generated group."""
        if not gs:
            return CycArray.eye(self.dim)
        ads = self._checked_ads(gs, group)
        if any(k == 0 for _, k in ads):
            raise ArithmeticError("projector needs automorphisms of order at most 3")
        acc = None
        for p in _products(ads, gs[0].conductor):
            acc = p if acc is None else acc + p
        return acc / _group_order(ads)

    def fixed_dim(self, gs, group: str | None = None) -> int:
        if not gs:
            return self.dim
        ads = self._checked_ads(gs, group)
        if any(k == 0 for _, k in ads):
            return self._nullity(ads)
        n = gs[0].conductor
        total = None
        for a_pows in _products(ads, n):
            t = _trace(a_pows)
            total = t if total is None else total + t
        value = total * Fraction(1, _group_order(ads))
        if not value.is_rational():
            raise ArithmeticError("fixed dimension is not rational")
        q = value.to_fraction()
        if q.denominator != 1:
            raise ArithmeticError("fixed dimension is not an integer")
        return int(q)

    def fixed_dim_nullity(self, gs, group: str | None = None) -> int:
        """Direct nullity of the stacked (Ad g - I) system; slower, used as a cross-check."""
        return self._nullity(self._checked_ads(gs, group))

    def _nullity(self, ads) -> int:
        eye = CycArray.eye(self.dim, ads[0][0].conductor)
        stacked = CycArray.concatenate([a - eye for a, _ in ads], axis=0)
        return fieldla.nullity(stacked)

    def _checked_ads(self, gs, group):
        """(Ad g, order) pairs with order 1, 2, 3 or 0 for anything else; the Ad's must commute."""
        group = group or _GROUP_OF[self.name]
        ads = []
        for g in gs:
            if not g.in_group(group):
                raise ValueError(f"{g!r} is not certified in {group}")
            a = self.ad(g)
            ads.append((a, _order(a)))
        for x in range(len(ads)):
            for y in range(x + 1, len(ads)):
                if not ads[x][0] @ ads[y][0] == ads[y][0] @ ads[x][0]:
                    raise ArithmeticError("automorphisms do not commute")
        return ads

    def __repr__(self):
        return f"LieBasis({self.name}, dim={self.dim})"


_GROUP_OF = {"g2": "G2", "f4": "F4", "e6": "E6"}


def _order(a: CycArray) -> int:
    eye = CycArray.eye(a.shape[0], a.conductor)
    p = a
    for k in (1, 2, 3):
        if p == eye:
            return k
        p = p @ a
    return 0


def _group_order(ads) -> int:
    return math.prod(k for _, k in ads)


def _products(ads, n):
    """All products A1^j1 ... Ak^jk with 0 <= j < order."""
    dim = ads[0][0].shape[0]
    out = [CycArray.eye(dim, n)]
    for a, k in ads:
        pows = [CycArray.eye(dim, n)]
        for _ in range(k - 1):
            pows.append(pows[-1] @ a)
        out = [p @ q for p in out for q in pows]
    return out


def _trace(a: CycArray):
    return a.trace()


def same_image(p: CycArray, q: CycArray) -> bool:
    """Images of two projectors coincide: pq = q and qp = p."""
    return p @ q == q and q @ p == p


# rational helpers -----------------------------------------------------------


def _independent_columns(flat: np.ndarray) -> list:
    """Column indices giving an invertible square submatrix of a full-row-rank rational matrix."""
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    dm = DomainMatrix([[QQ(int(v)) for v in row] for row in flat], flat.shape, QQ)
    _, pivots = dm.rref()
    pivots = list(pivots)
    if len(pivots) != flat.shape[0]:
        raise ArithmeticError("basis is not linearly independent")
    return pivots


def _in_rational_span(vectors: np.ndarray, basis: np.ndarray) -> bool:
    r0 = fieldla.rational_rank(basis)
    both = np.concatenate([basis, vectors], axis=0)
    both = both[np.any(both != 0, axis=1)]
    return fieldla.rational_rank(_dedupe(both)) == r0


def _dedupe(rows: np.ndarray) -> np.ndarray:
    seen = {}
    for r in rows:
        g = 0
        for v in r:
            g = math.gcd(g, int(v))
        key = tuple(int(v) // g for v in r)
        lead = next(v for v in key if v)
        if lead < 0:
            key = tuple(-v for v in key)
        seen.setdefault(key, None)
    return np.array(list(seen.keys()), dtype=object)


def _random_projection_rank(system: np.ndarray, rows: int, seed: int = 0, p: int = MOD_PRIME) -> int:
    """Rank of R @ system mod p for a random R; a lower bound for the rank over Q."""
    rng = np.random.default_rng(seed)
    r = rng.integers(0, p, size=(rows, system.shape[0]), dtype=np.int64)
    s = np.asarray(system, dtype=np.int64) % p
    prod = np.zeros((rows, system.shape[1]), dtype=np.int64)
    # float64 BLAS is exact here: each chunk sum stays below 2^53
    step = 4096
    assert (p - 1) ** 2 * step < 2 ** 53
    for k in range(0, system.shape[0], step):
        part = r[:, k:k + step].astype(np.float64) @ s[k:k + step].astype(np.float64)
        prod = (prod + part.astype(np.int64) % p) % p
    return fieldla.rank_mod_p(prod, p)


# derivation systems ----------------------------------------------------------


def derivation_system(table: np.ndarray, symmetric: bool) -> np.ndarray:
    """Rows of D(xy) - D(x) y - x D(y) = 0 on basis pairs; unknown D[k, l] at k*n + l.

    table[i, j, :] holds the integer product of basis vectors i and j.
    """
    n = table.shape[0]
    pairs = [(i, j) for i in range(n) for j in range(i if symmetric else 0, n)]
    rows = np.zeros((len(pairs), n, n * n), dtype=np.int64)
    for r, (i, j) in enumerate(pairs):
        cij = table[i, j]
        for k in range(n):
            rows[r, k, k * n:(k + 1) * n] += cij
            # (D e_i) e_j = sum_m D[m, i] table[m, j]
            rows[r, k, np.arange(n) * n + i] -= table[:, j, k]
            rows[r, k, np.arange(n) * n + j] -= table[i, :, k]
    return rows.reshape(len(pairs) * n, n * n)


def is_derivation(d: np.ndarray, table: np.ndarray) -> bool:
    """Integer check of D(xy) = D(x)y + xD(y) on all basis pairs (scaled integer D)."""
    lhs = np.einsum("ijl,kl->ijk", table, d)
    rhs = np.einsum("mi,mjk->ijk", d, table) + np.einsum("mj,imk->ijk", d, table)
    return bool(np.array_equal(lhs, rhs))


def _mult_op(table: np.ndarray, a: int) -> np.ndarray:
    """Matrix of X -> e_a * X for the product table."""
    return table[a].T.copy()


@lru_cache(maxsize=None)
def g2_basis() -> LieBasis:
    system = derivation_system(OCT_TABLE, symmetric=False)
    ns = fieldla.rational_nullspace(system)
    den = math.lcm(*(q.denominator for v in ns for q in v))
    num = np.array([[int(q * den) for q in v] for v in ns], dtype=np.int64).reshape(len(ns), 8, 8)
    return LieBasis("g2", CAYLEY8, num, den)


def _inner_derivations():
    """Greedy independent set of [L_a, L_b] over basis pairs (integer, scaled by 4)."""
    ls = [_mult_op(CIRC2, a) for a in range(DIM)]  # 2 L_a
    chosen, flats = [], []
    rank = 0
    for a in range(DIM):
        for b in range(a + 1, DIM):
            d = ls[a] @ ls[b] - ls[b] @ ls[a]
            if not d.any():
                continue
            trial = flats + [d.reshape(-1)]
            r = fieldla.rank_mod_p(np.array(trial), 2147483629)
            if r > rank:
                rank = r
                chosen.append(d)
                flats = trial
            if rank == 52:
                return chosen
    return chosen


@lru_cache(maxsize=None)
def f4_certificate() -> dict:
    """Exact evidence that dim f4 = 52."""
    derivs = _inner_derivations()
    lower = fieldla.rational_rank(np.array([d.reshape(-1) for d in derivs]))
    all_derivations = all(is_derivation(d, CIRC2) for d in derivs)
    system = derivation_system(CIRC2, symmetric=True)
    rank_p = _random_projection_rank(system, 760)
    return {
        "inner_derivations": len(derivs),
        "lower_bound": lower if all_derivations else 0,
        "upper_bound": DIM * DIM - rank_p,
    }


@lru_cache(maxsize=None)
def f4_basis() -> LieBasis:
    derivs = _inner_derivations()
    if len(derivs) != 52 or not all(is_derivation(d, CIRC2) for d in derivs):
        raise ArithmeticError("inner derivations do not give 52 independent derivations")
    num = np.array(derivs, dtype=np.int64)
    return LieBasis("f4", JORDAN27, num, 4)


def _traceless_ops():
    """L_T = X -> T o X for T in the 26 traceless basis elements, scaled by 4."""
    ops = []
    for a in range(DIM):
        if a == 2:
            continue
        if a < 2:
            t = 2 * (_mult_op(CIRC2, a) - _mult_op(CIRC2, a + 1))
        else:
            t = 2 * _mult_op(CIRC2, a)
        ops.append(t)
    return ops


@lru_cache(maxsize=None)
def e6_basis() -> LieBasis:
    f4 = f4_basis()
    extra = np.array(_traceless_ops(), dtype=np.int64)
    num = np.concatenate([f4.num, extra], axis=0)
    scale = np.array([False] * f4.dim + [True] * len(extra))
    return LieBasis("e6", JORDAN27, num, 4, compact_scale=scale)


def e6_infinitesimal_ok(basis: LieBasis | None = None) -> bool:
    """Each compact generator phi satisfies phi X x Y + X x phi Y = conj(phi)(X x Y) and
    phi^H G + G phi = 0 on the basis."""
    basis = basis or e6_basis()
    g = GRAM
    for k in range(basis.dim):
        d = basis.num[k].astype(object)
        sign = -1 if basis.compact_scale[k] else 1  # conj(i L) = -i L
        lhs = np.einsum("ml,mjk->ljk", d, CROSS4) + np.einsum("mj,lmk->ljk", d, CROSS4)
        rhs = sign * np.einsum("ljm,km->ljk", CROSS4, d)
        if not np.array_equal(lhs, rhs):
            return False
        # skew-Hermitian: plain R real skew for G, i R with R G-symmetric
        sym = d.T @ g - (g @ d if basis.compact_scale[k] else -(g @ d))
        if np.any(sym != 0):
            return False
    return True


def basis_for(name: str) -> LieBasis:
    return {"g2": g2_basis, "f4": f4_basis, "e6": e6_basis}[name]()
