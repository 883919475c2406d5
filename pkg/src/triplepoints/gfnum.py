"""numpy-backed arithmetic mod p for the hot linear-algebra paths.

Residues are stored as int64.  Elimination multiplies a residue by a
residue before reducing, so products must stay below 2**63; primes below
2**31 keep every intermediate within 2**62.
"""
from __future__ import annotations

import numpy as np


def NUMPY_SAFE_PRIME(p: int) -> bool:
    return p < 2**31


def to_array(m) -> np.ndarray:
    """Matrix over GF(p) -> int64 array of residues."""
    return np.array([[e.val for e in row] for row in m.rows], dtype=np.int64)


def from_array(field, arr: np.ndarray):
    from .linalg import Matrix
    return Matrix(field, [[field(int(v)) for v in row] for row in arr])


def rref_mod_p(a: np.ndarray, p: int):
    """Reduced row echelon form mod p.  Returns (array, pivot columns)."""
    a = np.mod(a, p).astype(np.int64)
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r] = a[r] * inv % p
        col_vals = a[:, c].copy()
        col_vals[r] = 0
        mask = col_vals != 0
        if mask.any():
            a[mask] = (a[mask] - col_vals[mask, None] * a[r][None, :]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank mod p by forward elimination only (no back substitution)."""
    a = np.mod(a, p).astype(np.int64)
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        below = a[r + 1:, c]
        mask = below != 0
        if mask.any():
            rows = a[r + 1:][mask]
            a[r + 1:][mask] = (rows - below[mask, None] * a[r][None, :]) % p
        r += 1
    return r


def modpow(base: np.ndarray, e: int, p: int) -> np.ndarray:
    """Vectorized pow(base, e, p) for int64 arrays."""
    result = np.ones_like(base)
    b = np.mod(base, p)
    while e:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


def eval_poly_batch(terms, coords, p: int) -> np.ndarray:
    """Evaluate a GF(p) polynomial at many points at once.

    terms: list of (exponent 4-tuple, residue); coords: (N, 4) int64 array.
    """
    n = coords.shape[0]
    total = np.zeros(n, dtype=np.int64)
    pw_cache = [{} for _ in range(4)]
    for exps, c in terms:
        v = np.full(n, c % p, dtype=np.int64)
        for i, e in enumerate(exps):
            if e == 0:
                continue
            pw = pw_cache[i].get(e)
            if pw is None:
                pw = modpow(coords[:, i], e, p)
                pw_cache[i][e] = pw
            v = v * pw % p
        total = (total + v) % p
    return total


def eval_poly_batch_ext(terms, coords_a, coords_b, p: int, n_res: int):
    """Evaluate over GF(p^2) = GF(p)[u], u^2 = n_res, at many points.

    terms: list of (exps, (a, b)); coordinates given as two int64 arrays
    of the u^0 and u^1 parts.  Returns (real part, u part).
    """
    npts = coords_a.shape[0]
    tot_a = np.zeros(npts, dtype=np.int64)
    tot_b = np.zeros(npts, dtype=np.int64)
    pw_cache = [{} for _ in range(4)]

    def ext_mul(xa, xb, ya, yb):
        return ((xa * ya + n_res * (xb * yb % p)) % p,
                (xa * yb + xb * ya) % p)

    def ext_pow(xa, xb, e):
        ra = np.ones(npts, dtype=np.int64)
        rb = np.zeros(npts, dtype=np.int64)
        while e:
            if e & 1:
                ra, rb = ext_mul(ra, rb, xa, xb)
            xa, xb = ext_mul(xa, xb, xa, xb)
            e >>= 1
        return ra, rb

    for exps, (ca, cb) in terms:
        va = np.full(npts, ca % p, dtype=np.int64)
        vb = np.full(npts, cb % p, dtype=np.int64)
        for i, e in enumerate(exps):
            if e == 0:
                continue
            pw = pw_cache[i].get(e)
            if pw is None:
                pw = ext_pow(coords_a[:, i].copy(), coords_b[:, i].copy(), e)
                pw_cache[i][e] = pw
            va, vb = ext_mul(va, vb, pw[0], pw[1])
        tot_a = (tot_a + va) % p
        tot_b = (tot_b + vb) % p
    return tot_a, tot_b
