"""Dense linear algebra over the prime field Z/p.

Matrices are lists of row lists with entries reduced mod p.  Sizes here are
tiny (at most 3k x 3k for the tower degree k), so plain Gaussian elimination
is all we need.
"""

from __future__ import annotations


def mat_mul(a, b, p):
    n, m, r = len(a), len(b), len(b[0])
    assert len(a[0]) == m
    out = [[0] * r for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j, aij in enumerate(ai):
            if aij:
                bj = b[j]
                for t in range(r):
                    oi[t] = (oi[t] + aij * bj[t]) % p
    return out


def mat_vec(a, v, p):
    return [sum(aij * vj for aij, vj in zip(row, v)) % p for row in a]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def invert(a, p):
    """Inverse of a square matrix mod p, or None if singular."""
    n = len(a)
    m = [list(row) + ident for row, ident in zip(a, identity(n))]
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if m[r][col] % p), None)
        if piv is None:
            return None
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [(x * inv) % p for x in m[row]]
        for r in range(n):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[row])]
        row += 1
    return [r[n:] for r in m]


def solve(a, b, p):
    """One solution x of a @ x = b mod p, or None if inconsistent.

    `a` may be rectangular; free variables are set to zero.
    """
    n = len(a)
    cols = len(a[0])
    m = [list(row) + [bv % p] for row, bv in zip(a, b)]
    pivots = []
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, n) if m[r][col] % p), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [(x * inv) % p for x in m[row]]
        for r in range(n):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    for r in range(row, n):
        if m[r][cols] % p:
            return None
    x = [0] * cols
    for r, col in enumerate(pivots):
        x[col] = m[r][cols]
    return x


def extend_to_basis(cols, dim, p):
    """Complete the independent column vectors `cols` to a basis of (Z/p)^dim.

    Unit vectors are tried in coordinate order; returns the list of unit
    vector positions that were appended.  Deterministic.
    """
    basis = [list(c) for c in cols]
    chosen = []
    for pos in range(dim):
        if len(basis) == dim:
            break
        cand = [1 if i == pos else 0 for i in range(dim)]
        trial = basis + [cand]
        mat = [[trial[c][r] for c in range(len(trial))] for r in range(dim)]
        if _rank(mat, p) == len(trial):
            basis.append(cand)
            chosen.append(pos)
    assert len(basis) == dim
    return chosen


def _rank(a, p):
    m = [list(row) for row in a]
    n, cols = len(m), len(m[0])
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, n) if m[r][col] % p), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [(x * inv) % p for x in m[row]]
        for r in range(n):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[row])]
        row += 1
    return row
