"""Dense linear algebra over a prime field, on int64 numpy arrays.

Entries are kept in [0, p).  Products of two reduced entries must fit in
int64, which holds for every p below 2**31.
"""

from __future__ import annotations

import numpy as np

from .field import DomainError


def _as_mod(a, p: int) -> np.ndarray:
    arr = np.array(a, dtype=np.int64, copy=True)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return arr % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` mod p and its pivot columns."""
    m = _as_mod(a, p)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a, p: int) -> int:
    arr = np.asarray(a)
    if arr.size == 0:
        return 0
    return len(rref(arr, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis of {v : a v = 0} as rows of the returned array."""
    arr = np.asarray(a, dtype=np.int64)
    cols = arr.shape[1]
    if arr.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, piv = rref(arr, p)
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = (-r[i, f]) % p
    return basis


def inverse(a, p: int) -> np.ndarray:
    arr = _as_mod(a, p)
    n = arr.shape[0]
    if arr.shape != (n, n):
        raise DomainError("inverse of a non-square matrix")
    aug = np.concatenate([arr, np.eye(n, dtype=np.int64)], axis=1)
    r, piv = rref(aug, p)
    if piv[:n] != list(range(n)):
        raise DomainError("matrix is singular mod %d" % p)
    return r[:, n:]


def matmul(a, b, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    # accumulate column by column so partial sums never overflow
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = (out + np.outer(a[:, k], b[k])) % p
    return out


def det(a, p: int) -> int:
    m = _as_mod(a, p)
    n = m.shape[0]
    d = 1
    for c in range(n):
        nz = np.nonzero(m[c:, c])[0]
        if nz.size == 0:
            return 0
        k = c + int(nz[0])
        if k != c:
            m[[c, k]] = m[[k, c]]
            d = -d
        piv = int(m[c, c])
        d = (d * piv) % p
        inv = pow(piv, p - 2, p)
        below = m[c + 1:, c].copy()
        if below.size:
            m[c + 1:] = (m[c + 1:] - np.outer((below * inv) % p, m[c])) % p
    return d % p
