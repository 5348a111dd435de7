"""Dense linear algebra over F_p and F_{p^2}.

Matrices are numpy int64 arrays with entries in [0, p-1]; all arithmetic is
exact (entries stay far below 2^63 for the sizes used here).  Elements of
F_{p^2} are pairs (x, y) meaning x + y*w with w^2 = d, d a fixed
quadratic non-residue mod p.
"""

import numpy as np


def inv_mod(a, p):
    return pow(int(a), p - 2, p)


def mat(A, p):
    return np.asarray(A, dtype=np.int64) % p


def eye(n):
    return np.eye(n, dtype=np.int64)


def mat_mul(A, B, p):
    return (A @ B) % p


def mat_pow(A, e, p):
    e = int(e)
    if e < 0:
        raise ValueError("negative matrix powers are not needed here")
    result = eye(A.shape[0])
    base = A % p
    while e:
        if e & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        e >>= 1
    return result


def rref(A, p):
    """Row-reduced echelon form; returns (R, pivot column list)."""
    R = (np.array(A, dtype=np.int64) % p).copy()
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = (R[r] * inv_mod(R[r, c], p)) % p
        col = R[:, c].copy()
        col[r] = 0
        R = (R - np.outer(col, R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A, p):
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A, p):
    """Columns spanning ker(A) over F_p (n x k matrix, possibly k = 0)."""
    A = np.asarray(A, dtype=np.int64) % p
    rows, cols = A.shape
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for idx, fc in enumerate(free):
        basis[fc, idx] = 1
        for r, pc in enumerate(pivots):
            basis[pc, idx] = (-R[r, fc]) % p
    return basis


def column_space_intersection_dim(A, B, p):
    """dim(col A  intersect  col B) = rank A + rank B - rank [A B]."""
    if A.size == 0 or B.size == 0:
        return 0
    both = np.concatenate([A, B], axis=1)
    return rank(A, p) + rank(B, p) - rank(both, p)


def nilpotent_log(U, p):
    """log of a unipotent matrix: sum (-1)^(k+1) N^k / k, N = U - I.

    Exact because N^p = 0 over F_p; every divisor k <= p-1 is invertible.
    """
    n = U.shape[0]
    N = (U - eye(n)) % p
    term = N.copy()
    out = np.zeros_like(N)
    k = 1
    while term.any() and k <= p - 1:
        coeff = inv_mod(k, p) * (1 if k % 2 == 1 else p - 1)
        out = (out + coeff * term) % p
        term = (term @ N) % p
        k += 1
    return out


def nilpotent_exp(N, p):
    """exp of a nilpotent matrix: sum N^k / k!, truncated below degree p."""
    n = N.shape[0]
    out = eye(n)
    term = eye(n)
    fact = 1
    for k in range(1, p):
        term = (term @ N) % p
        if not term.any():
            break
        fact = (fact * k) % p
        out = (out + inv_mod(fact, p) * term) % p
    return out


def find_nonresidue(p):
    for d in range(2, p):
        if pow(d, (p - 1) // 2, p) == p - 1:
            return d
    raise ValueError(f"no quadratic non-residue mod {p}?")


def fp2_mul(a, b, p, d):
    (x1, y1), (x2, y2) = a, b
    return ((x1 * x2 + d * y1 * y2) % p, (x1 * y2 + x2 * y1) % p)


def fp2_pow(a, e, p, d):
    result = (1, 0)
    base = a
    e = int(e)
    while e:
        if e & 1:
            result = fp2_mul(result, base, p, d)
        base = fp2_mul(base, base, p, d)
        e >>= 1
    return result


def fp2_inv(a, p, d):
    x, y = a
    denom = inv_mod((x * x - d * y * y) % p, p)
    return ((x * denom) % p, ((-y) * denom) % p)


def fp2_order(a, p, d):
    k, b = 1, a
    while b != (1, 0):
        b = fp2_mul(b, a, p, d)
        k += 1
    return k


def fp2_element_of_order(p, d, order):
    """Brute-force an element of F_{p^2}^* of the exact given order."""
    for x in range(p):
        for y in range(p):
            if x == 0 and y == 0:
                continue
            a = (x, y)
            if fp2_pow(a, order, p, d) == (1, 0) and fp2_order(a, p, d) == order:
                return a
    raise ValueError(f"no element of order {order} in F_{p}^2")


def fp2_rank(X, Y, p, d):
    """Rank over F_{p^2} of the matrix X + w*Y (X, Y integer arrays)."""
    X = (np.array(X, dtype=np.int64) % p).copy()
    Y = (np.array(Y, dtype=np.int64) % p).copy()
    rows, cols = X.shape
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero((X[r:, c] != 0) | (Y[r:, c] != 0))[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            X[[r, pr]] = X[[pr, r]]
            Y[[r, pr]] = Y[[pr, r]]
        ix, iy = fp2_inv((int(X[r, c]), int(Y[r, c])), p, d)
        X[r], Y[r] = (X[r] * ix + d * Y[r] * iy) % p, (X[r] * iy + Y[r] * ix) % p
        fx, fy = X[:, c].copy(), Y[:, c].copy()
        fx[r] = fy[r] = 0
        X, Y = (
            (X - np.outer(fx, X[r]) - d * np.outer(fy, Y[r])) % p,
            (Y - np.outer(fx, Y[r]) - np.outer(fy, X[r])) % p,
        )
        r += 1
    return r


def fp2_kernel_dim(X, Y, p, d):
    return X.shape[1] - fp2_rank(X, Y, p, d)
