"""numba-compiled versions of the weight-search kernels."""

import numpy as np
from numba import njit


@njit(cache=True)
def _scan(n, k, projective, out):
    """Depth-first walk of [-1, n]^n in lexicographic order with prefix pruning.

    A prefix is dropped once it has more than k entries equal to -1, or (on
    CP^n) once its sum is too large for m_0 = -sum to stay >= -1 even if
    every remaining entry is -1.
    """
    digits = np.empty(n, dtype=np.int64)
    psum = np.zeros(n + 1, dtype=np.int64)
    pminus = np.zeros(n + 1, dtype=np.int64)
    fill = out.shape[0] > 0
    count = 0
    p = 0
    digits[0] = -2
    while p >= 0:
        digits[p] += 1
        d = digits[p]
        if d > n:
            p -= 1
            continue
        s = psum[p] + d
        mn = pminus[p] + (1 if d == -1 else 0)
        if mn > k:
            continue
        rest = n - 1 - p
        if projective and s - rest > 1:
            # larger digits only make it worse
            digits[p] = n
            continue
        if rest == 0:
            if projective and s == 1:
                mn += 1
            if mn <= k:
                if fill:
                    for q in range(n):
                        out[count, q] = digits[q]
                count += 1
        else:
            psum[p + 1] = s
            pminus[p + 1] = mn
            p += 1
            digits[p] = -2
    return count


def admissible_box(n, k, projective):
    empty = np.zeros((0, n), dtype=np.int64)
    count = _scan(n, k, projective, empty)
    out = np.empty((count, n), dtype=np.int64)
    if count:
        _scan(n, k, projective, out)
    return out


@njit(cache=True)
def _cocycle_mask(W, A_re, A_im, projective, out):
    N, n = W.shape
    for r in range(N):
        zero_in_T = False
        if projective:
            s = 0
            for i in range(n):
                s += W[r, i]
            zero_in_T = s == 1
        ok = True
        have_ref = False
        ref_re = 0
        ref_im = 0
        for j in range(n):
            if W[r, j] == -1:
                continue
            u_re = 0
            u_im = 0
            for i in range(n):
                m = W[r, i]
                if m != 0:
                    u_re += m * A_re[i, j]
                    u_im += m * A_im[i, j]
            if zero_in_T:
                if not have_ref:
                    ref_re = u_re
                    ref_im = u_im
                    have_ref = True
                elif u_re != ref_re or u_im != ref_im:
                    ok = False
                    break
            elif u_re != 0 or u_im != 0:
                ok = False
                break
        out[r] = ok


def cocycle_mask(W, A_re, A_im, projective):
    W = np.ascontiguousarray(W, dtype=np.int64)
    out = np.zeros(W.shape[0], dtype=np.bool_)
    _cocycle_mask(W, np.ascontiguousarray(A_re), np.ascontiguousarray(A_im), projective, out)
    return out
