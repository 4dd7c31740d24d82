"""Pure-numpy versions of the weight-search kernels."""

import numpy as np

# rows of the candidate box generated per chunk
_CHUNK_DIMS = 5


def admissible_box(n, k, projective):
    """All weights in [-1, n]^n whose full profile is >= -1 with at most k entries = -1."""
    side = n + 2
    inner = min(n, _CHUNK_DIMS)
    outer = n - inner
    inner_grid = np.indices((side,) * inner, dtype=np.int64).reshape(inner, -1).T - 1
    parts = []
    for idx in range(side ** outer):
        prefix = np.empty(outer, dtype=np.int64)
        rem = idx
        for p in range(outer - 1, -1, -1):
            prefix[p] = rem % side - 1
            rem //= side
        block = np.empty((inner_grid.shape[0], n), dtype=np.int64)
        block[:, :outer] = prefix
        block[:, outer:] = inner_grid
        minus = (block == -1).sum(axis=1)
        keep = np.ones(block.shape[0], dtype=bool)
        if projective:
            m0 = -block.sum(axis=1)
            keep &= m0 >= -1
            minus = minus + (m0 == -1)
        keep &= minus <= k
        parts.append(block[keep])
    if not parts:
        return np.zeros((0, n), dtype=np.int64)
    return np.concatenate(parts, axis=0)


def cocycle_mask(W, A_re, A_im, projective):
    """Vectorized cocycle test on integer weights against an integer-scaled structure."""
    W = np.asarray(W, dtype=np.int64)
    N, n = W.shape
    if N == 0:
        return np.zeros(0, dtype=bool)
    U_re = W @ A_re
    U_im = W @ A_im
    free = W != -1
    if projective:
        zero_in_T = W.sum(axis=1) == 1
    else:
        zero_in_T = np.zeros(N, dtype=bool)
    # plain pattern: contraction must vanish off the minus-set
    vanish = np.all(((U_re == 0) & (U_im == 0)) | ~free, axis=1)
    # 0 in the minus-set: contraction must be constant off the minus-set
    big = np.iinfo(np.int64).max
    lo_re = np.where(free, U_re, big).min(axis=1)
    hi_re = np.where(free, U_re, -big).max(axis=1)
    lo_im = np.where(free, U_im, big).min(axis=1)
    hi_im = np.where(free, U_im, -big).max(axis=1)
    has_free = free.any(axis=1)
    constant = ~has_free | ((lo_re == hi_re) & (lo_im == hi_im))
    return np.where(zero_in_T, constant, vanish)
