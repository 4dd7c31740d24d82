"""Hot loops of the projective weight search, with two interchangeable backends.

The numba backend is used when numba imports and the environment variable
``TORICPOISSON_DISABLE_NUMBA`` is unset (or ``0``).  Setting it to ``1``
forces the pure-numpy path everywhere.  Small problems stay on numpy in
``auto`` mode so they never pay the JIT start-up cost.
"""

from __future__ import annotations

import os
from math import lcm

import numpy as np

from . import _numpy

__all__ = [
    "NUMBA_AVAILABLE",
    "numba_enabled",
    "resolve_backend",
    "admissible_box",
    "cocycle_mask",
    "integer_parts",
]

ENV_FLAG = "TORICPOISSON_DISABLE_NUMBA"
# candidate-box size below which "auto" stays on numpy
AUTO_THRESHOLD = 50_000

try:
    from . import _numba

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is optional
    _numba = None
    NUMBA_AVAILABLE = False


def numba_enabled() -> bool:
    flag = os.environ.get(ENV_FLAG, "").strip().lower()
    return NUMBA_AVAILABLE and flag in ("", "0", "false", "no")


def resolve_backend(backend: str = "auto", work: int = 0) -> str:
    if backend not in ("auto", "numba", "numpy"):
        raise ValueError(f"unknown kernel backend {backend!r}")
    if backend == "numpy":
        return "numpy"
    if backend == "numba":
        if not NUMBA_AVAILABLE:
            raise RuntimeError("numba backend requested but numba is not importable")
        return "numba"
    if numba_enabled() and work >= AUTO_THRESHOLD:
        return "numba"
    return "numpy"


def _impl(backend: str, work: int):
    return _numba if resolve_backend(backend, work) == "numba" else _numpy


def admissible_box(n: int, k: int, projective: bool = True, backend: str = "auto") -> np.ndarray:
    """Integer weights in ``[-1, n]^n`` passing the admissibility test for degree ``k``.

    Rows come out in lexicographic order of ``(m_1, ..., m_n)``.
    """
    return _impl(backend, (n + 2) ** n).admissible_box(n, k, bool(projective))


def cocycle_mask(W, A_re, A_im, projective: bool = True, backend: str = "auto") -> np.ndarray:
    W = np.asarray(W, dtype=np.int64).reshape(-1, A_re.shape[0])
    return _impl(backend, W.shape[0]).cocycle_mask(W, A_re, A_im, bool(projective))


# keep |m_i| * sum|A_ij| far from int64 overflow
_INT_LIMIT = 2**52


def integer_parts(Pi, max_abs_weight: int):
    """Scale the structure to integer real/imaginary matrices.

    The cocycle condition is invariant under nonzero rescaling, so the common
    denominator can be cleared.  Returns None when the scaled entries are too
    large for exact int64 evaluation with weights bounded by ``max_abs_weight``.
    """
    n = Pi.n
    den = 1
    for row in Pi.A:
        for a in row:
            den = lcm(den, a.re.denominator, a.im.denominator)
    re = [[int(a.re * den) for a in row] for row in Pi.A]
    im = [[int(a.im * den) for a in row] for row in Pi.A]
    biggest = max((abs(x) for r in re + im for x in r), default=0)
    if biggest * n * max(max_abs_weight, 1) >= _INT_LIMIT:
        return None
    return np.array(re, dtype=np.int64).reshape(n, n), np.array(im, dtype=np.int64).reshape(n, n)
