"""Independent float models used as test oracles."""
import numpy as np


def qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.array([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ])


def qconj(a):
    return np.array([a[0], -a[1], -a[2], -a[3]])


def omul(x, y):
    """Doubling (a + b e4)(c + d e4) = (ac - conj(d) b) + (d a + b conj(c)) e4."""
    a, b, c, d = x[:4], x[4:], y[:4], y[4:]
    return np.concatenate([qmul(a, c) - qmul(qconj(d), b), qmul(d, a) + qmul(b, qconj(c))])


def oconj(x):
    return np.concatenate([[x[0]], -x[1:]])


def jordan_matrix(v):
    """27-vector -> 3x3 array of octonion 8-vectors."""
    e0 = np.eye(8)[0]
    x1, x2, x3 = v[3:11], v[11:19], v[19:27]
    return [[v[0] * e0, x3, oconj(x2)], [oconj(x3), v[1] * e0, x1], [x2, oconj(x1), v[2] * e0]]


def mat_mul(a, b):
    return [[sum(omul(a[i][k], b[k][j]) for k in range(3)) for j in range(3)] for i in range(3)]


def from_matrix(m):
    return np.concatenate([[m[0][0][0], m[1][1][0], m[2][2][0]], m[1][2], m[2][0], m[0][1]])


def circ(x, y):
    a, b = jordan_matrix(x), jordan_matrix(y)
    ab, ba = mat_mul(a, b), mat_mul(b, a)
    return from_matrix([[(ab[i][j] + ba[i][j]) / 2 for j in range(3)] for i in range(3)])


def trace(x):
    return x[0] + x[1] + x[2]


def inner(x, y):
    """(X, Y) = tr(X o Y)."""
    return trace(circ(x, y))


def cross(x, y):
    """Freudenthal product: 2 X x Y = 2 X o Y - tr(X) Y - tr(Y) X + (tr X tr Y - (X, Y)) E."""
    e = np.zeros(27)
    e[:3] = 1
    return (2 * circ(x, y) - trace(x) * y - trace(y) * x + (trace(x) * trace(y) - inner(x, y)) * e) / 2


def random_oct(rng):
    return rng.normal(size=8)


def random_jordan(rng):
    return rng.normal(size=27)


# float Lie algebras, built from the invariance equations directly ------------------------------


def _tensor(f, n):
    eye = np.eye(n)
    return np.array([[f(eye[i], eye[j]) for j in range(n)] for i in range(n)])


def circ_tensor():
    """t[i, j] = e_i o e_j."""
    return _tensor(circ, 27)


def cubic_tensor(ct=None):
    """Symmetric trilinear form (x, y x z) from the circ tensor."""
    ct = circ_tensor() if ct is None else ct
    tr = np.zeros(27)
    tr[:3] = 1
    e = tr.copy()
    inner_m = np.einsum("ijk,k->ij", ct, tr)
    eye = np.eye(27)
    # y x z = (2 y o z - tr(y) z - tr(z) y + (tr y tr z - (y, z)) E) / 2
    cr = (2 * ct - np.einsum("j,kl->jkl", tr, eye) - np.einsum("k,jl->jkl", tr, eye)
          + np.einsum("jk,l->jkl", np.outer(tr, tr) - inner_m, e)) / 2
    return np.einsum("il,jkl->ijk", inner_m, cr)


def _nullspace(a, tol=1e-8):
    _, s, vt = np.linalg.svd(a, full_matrices=False)
    rank = int((s > tol * s[0]).sum())
    return vt[rank:]


def derivation_basis(table):
    """Maps D (column convention) with D(e_i e_j) = D(e_i) e_j + e_i D(e_j)."""
    n = table.shape[0]
    rows = []
    for i in range(n):
        for j in range(n):
            for out in range(n):
                r = np.zeros((n, n))
                r[out, :] += table[i, j]  # D applied to e_i e_j: sum_m t[i,j,m] D[out, m]
                r[:, i] -= table[:, j, out]  # sum_m D[m, i] t[m, j, out]
                r[:, j] -= table[i, :, out]
                rows.append(r.ravel())
    return _nullspace(np.array(rows)).reshape(-1, n, n)


def form_invariance_basis(t):
    """Maps D with t(Dx, y, z) + t(x, Dy, z) + t(x, y, Dz) = 0 for a symmetric trilinear t."""
    n = t.shape[0]
    rows = []
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                r = np.zeros((n, n))
                r[:, i] += t[:, j, k]
                r[:, j] += t[i, :, k]
                r[:, k] += t[i, j, :]
                rows.append(r.ravel())
    return _nullspace(np.array(rows)).reshape(-1, n, n)


def fixed_dim(basis, gs, tol=1e-7):
    """Dimension of the common fixed space of Ad(g), g in gs, on span(basis)."""
    flat = basis.reshape(len(basis), -1).T
    eqs = []
    for g in gs:
        ginv = np.linalg.inv(g)
        imgs = np.array([(g @ b @ ginv).ravel() for b in basis]).T
        coef, *_ = np.linalg.lstsq(flat, imgs, rcond=None)
        assert np.allclose(flat @ coef, imgs, atol=1e-8)
        eqs.append(coef - np.eye(len(basis)))
    return len(_nullspace(np.vstack(eqs), tol))
