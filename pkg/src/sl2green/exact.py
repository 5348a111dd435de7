"""Exact rational linear algebra on small dense matrices.

Matrices are lists of lists of ``fractions.Fraction``; everything here is
exact, no floating point.
"""

from fractions import Fraction


def eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_vec(A, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in A]


def is_identity(A):
    return all(A[i][j] == (1 if i == j else 0) for i in range(len(A)) for j in range(len(A[0])))


def invert(A):
    """Gauss-Jordan inverse; raises ValueError on a singular matrix."""
    n = len(A)
    X = [[Fraction(x) for x in row] for row in A]
    Y = eye(n)
    for col in range(n):
        pivot = next((r for r in range(col, n) if X[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is not invertible")
        if pivot != col:
            X[col], X[pivot] = X[pivot], X[col]
            Y[col], Y[pivot] = Y[pivot], Y[col]
        inv = 1 / X[col][col]
        X[col] = [x * inv for x in X[col]]
        Y[col] = [y * inv for y in Y[col]]
        for r in range(n):
            if r != col and X[r][col] != 0:
                f = X[r][col]
                X[r] = [x - f * xc for x, xc in zip(X[r], X[col])]
                Y[r] = [y - f * yc for y, yc in zip(Y[r], Y[col])]
    return Y


def solve_unique(A, b):
    """Solve A x = b exactly for a (possibly overdetermined) system.

    Requires full column rank and a consistent right-hand side; raises
    ValueError otherwise.  Returns a list of Fractions.
    """
    rows, cols = len(A), len(A[0])
    M = [[Fraction(A[i][j]) for j in range(cols)] + [Fraction(b[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < cols:
        raise ValueError("system does not have a unique solution")
    for i in range(r, rows):
        if M[i][cols] != 0:
            raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * cols
    for row_idx, c in enumerate(pivots):
        x[c] = M[row_idx][cols]
    return x
