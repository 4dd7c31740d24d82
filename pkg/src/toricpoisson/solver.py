"""Weight sets S_k and S_k(pi) for CP^n (finite search) and C^n (per-pattern solve).

For C^n a weight is determined by its minus-set ``T`` (coordinates equal to
-1) and its remaining coordinates, which are nonnegative integers.  Fixing
``T`` turns the cocycle condition into a rational linear system on the free
coordinates, so each pattern contributes the lattice points of a polyhedron
``{x >= 0 : M x = b}``.  Finiteness of that set is decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import floor, gcd, lcm

from . import kernels
from .linalg import ExactMatrix, RowReducer, kernel_basis, rank
from .scalar import ZERO, Scalar
from .toric import (
    PoissonStructure,
    Space,
    UnsupportedOperation,
    Weight,
    canonical_key,
    cocycle_condition,
)

__all__ = [
    "SolutionFamily",
    "enumerate_S",
    "enumerate_S_pi",
    "affine_pattern_solve",
    "enumerate_affine",
    "positive_degree",
]


def _check_projective(space: Space, k: int):
    if not space.is_projective:
        raise UnsupportedOperation("finite weight search is only defined on CP^n")
    if not 0 <= k <= space.n:
        raise ValueError(f"degree k={k} out of range 0..{space.n}")


def _sorted(space, rows):
    return sorted((Weight(tuple(int(x) for x in r)) for r in rows), key=lambda w: canonical_key(space, w))


def enumerate_S(space: Space, k: int, backend: str = "auto") -> list[Weight]:
    """All weights of CP^n with full profile >= -1 and at most k entries equal to -1."""
    _check_projective(space, k)
    return _sorted(space, kernels.admissible_box(space.n, k, True, backend=backend))


def enumerate_S_pi(space: Space, k: int, Pi: PoissonStructure, backend: str = "auto") -> list[Weight]:
    """The subset of ``enumerate_S`` satisfying the cocycle condition for ``Pi``."""
    _check_projective(space, k)
    if Pi.n != space.n:
        raise ValueError(f"structure has n={Pi.n}, space is {space}")
    W = kernels.admissible_box(space.n, k, True, backend=backend)
    parts = kernels.integer_parts(Pi, space.n)
    if parts is None:
        keep = [r for r in W if cocycle_condition(space, tuple(int(x) for x in r), Pi)]
        return _sorted(space, keep)
    mask = kernels.cocycle_mask(W, parts[0], parts[1], True, backend=backend)
    return _sorted(space, W[mask])


def positive_degree(I) -> int:
    """Total positive degree sum_j max(m_j, 0) of the monomial of a weight."""
    return sum(m for m in getattr(I, "coords", I) if m > 0)


@dataclass(frozen=True)
class SolutionFamily:
    """Lattice points of one minus-set pattern of C^n.

    ``free_directions`` are primitive integer generators of the recession
    cone (full length, zero on the pattern); they are listed only for
    infinite families.
    """

    pattern: tuple
    particular: tuple
    free_directions: tuple
    finite: bool
    truncated: bool

    def __post_init__(self):
        if self.finite and (self.free_directions or self.truncated):
            raise ValueError("finite family cannot carry free directions or truncation")


def _re(x: Scalar) -> Fraction:
    return x.re


def _primitive(vec) -> tuple:
    den = 1
    for q in vec:
        den = lcm(den, q.denominator)
    ints = [int(q * den) for q in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints) if g else tuple(ints)


def _system(n: int, T: tuple, Pi: PoissonStructure):
    """Rational system ``M x = b`` on the free coordinates of pattern ``T``.

    Each complex equation ``c_j = 0`` (j outside T) becomes its real and
    imaginary parts.
    """
    free = [j for j in range(1, n + 1) if j not in T]
    rows, rhs = [], []
    for j in free:
        for part in (lambda a: a.re, lambda a: a.im):
            row = {}
            for col, i in enumerate(free):
                a = part(Pi.A[i - 1][j - 1])
                if a:
                    row[col] = Scalar(a)
            b = sum((part(Pi.A[t - 1][j - 1]) for t in T), Fraction(0))
            rows.append(row)
            rhs.append(Scalar(b))
    return free, ExactMatrix(len(rows), len(free), rows), rhs


def _restrict(M: ExactMatrix, cols) -> ExactMatrix:
    index = {c: k for k, c in enumerate(cols)}
    data = [{index[c]: v for c, v in r.items() if c in index} for r in M.data]
    return ExactMatrix(M.rows, len(cols), data)


def _extreme_rays(M: ExactMatrix) -> list[tuple]:
    """Extreme rays of the pointed cone ``{x >= 0 : M x = 0}``.

    They are the sign-definite kernel vectors of minimal support, so every
    column subset whose restricted kernel is a line spanned by a vector with
    no zero entry and one sign is tested.
    """
    rays = set()
    m = M.cols
    for size in range(1, m + 1):
        for S in combinations(range(m), size):
            K = kernel_basis(_restrict(M, S))
            if len(K) != 1:
                continue
            g = [_re(c) for c in K[0].coords]
            if all(v > 0 for v in g) or all(v < 0 for v in g):
                full = [Fraction(0)] * m
                for c, v in zip(S, g):
                    full[c] = abs(v)
                rays.add(_primitive(full))
    return sorted(rays)


def _vertices(M: ExactMatrix, b) -> list[tuple]:
    """Basic feasible solutions of ``{x >= 0 : M x = b}``."""
    r = rank(M)
    m = M.cols
    found = set()
    for B in combinations(range(m), r):
        sub = _restrict(M, B)
        if rank(sub) != r:
            continue
        rr = RowReducer()
        for row, bi in zip(sub.data, b):
            aug = dict(row)
            if bi:
                aug[r] = bi
            if aug:
                rr.add(aug)
        if r in rr.pivots:
            continue
        x = [Fraction(0)] * m
        for p, row in rr.pivots.items():
            x[B[p]] = _re(row.get(r, ZERO))
        if all(v >= 0 for v in x):
            found.add(tuple(x))
    return sorted(found)


class _Parametrization:
    """Affine solution space of ``M x = b`` written over its non-pivot columns."""

    def __init__(self, M: ExactMatrix, b):
        aug = M.cols
        rr = RowReducer()
        for row, bi in zip(M.data, b):
            r = dict(row)
            if bi:
                r[aug] = bi
            if r:
                rr.add(r)
        self.consistent = aug not in rr.pivots
        self.m = M.cols
        self.pivots = {p: {c: _re(v) for c, v in row.items()} for p, row in rr.pivots.items()}
        self.free = [c for c in range(M.cols) if c not in rr.pivots]
        self.aug = aug

    def points(self, bound: int, first_only: bool = False):
        """Nonnegative integer solutions with coordinate sum at most ``bound``."""
        out = []
        if not self.consistent or bound < 0:
            return out
        nfree = len(self.free)
        assign = [0] * nfree

        def emit():
            x = [0] * self.m
            for f, v in zip(self.free, assign):
                x[f] = v
            for p, row in self.pivots.items():
                val = row.get(self.aug, Fraction(0))
                for f, v in zip(self.free, assign):
                    if v:
                        val -= row.get(f, 0) * v
                if val < 0 or val.denominator != 1:
                    return None
                x[p] = int(val)
            if sum(x) > bound:
                return None
            return tuple(x)

        def rec(pos, budget):
            if pos == nfree:
                x = emit()
                if x is not None:
                    out.append(x)
                    return first_only
                return False
            for v in range(budget + 1):
                assign[pos] = v
                if rec(pos + 1, budget - v):
                    return True
            assign[pos] = 0
            return False

        rec(0, bound)
        return out


def affine_pattern_solve(n: int, T, Pi: PoissonStructure, degree_bound: int | None = None) -> SolutionFamily:
    """Solve the cocycle condition on C^n for weights with minus-set exactly ``T``.

    Finite families are listed completely.  Infinite families list their
    points of positive degree at most ``degree_bound`` (or a small witness
    set when no bound is given) and are flagged truncated.
    """
    T = tuple(sorted(set(T)))
    if any(t < 1 or t > n for t in T):
        raise ValueError(f"pattern {T} not inside 1..{n}")
    if Pi.n != n:
        raise ValueError(f"structure has n={Pi.n}, expected {n}")
    free, M, b = _system(n, T, Pi)

    def lift(x) -> Weight:
        m = [-1] * n
        for j, v in zip(free, x):
            m[j - 1] = v
        return Weight(tuple(m))

    def finite(points):
        ws = sorted((lift(x) for x in points), key=lambda w: w.coords)
        return SolutionFamily(T, tuple(ws), (), True, False)

    if not free:
        return finite([()])
    par = _Parametrization(M, b)
    if not par.consistent:
        return finite([])
    verts = _vertices(M, b)
    if not verts:
        return finite([])
    vmax = max(sum(v) for v in verts)
    rays = _extreme_rays(M)
    if not rays:
        return finite(par.points(floor(vmax)))
    # an integer point exists iff one exists below this bound (reduce by whole ray steps)
    search = floor(vmax + sum(sum(r) for r in rays))
    if not par.points(search, first_only=True):
        return finite([])
    limit = search if degree_bound is None else degree_bound
    ws = sorted((lift(x) for x in par.points(limit)), key=lambda w: w.coords)
    dirs = []
    for r in rays:
        d = [0] * n
        for j, v in zip(free, r):
            d[j - 1] = v
        dirs.append(tuple(d))
    return SolutionFamily(T, tuple(ws), tuple(dirs), False, True)


def enumerate_affine(space: Space, k: int, Pi: PoissonStructure, degree_bound: int):
    """Union of all pattern families with ``|T| <= k`` on C^n.

    Returns ``(weights, families)``: the weights of positive degree at most
    ``degree_bound`` in canonical order, and a dict from pattern to its
    family.  Finite families are always complete, so a finite family with
    points beyond the bound shows up as ``len(family.particular)`` exceeding
    its share of ``weights``.
    """
    if space.is_projective:
        raise UnsupportedOperation("pattern enumeration is only defined on C^n")
    n = space.n
    if not 0 <= k <= n:
        raise ValueError(f"degree k={k} out of range 0..{n}")
    if degree_bound is None or degree_bound < 0:
        raise ValueError("a nonnegative degree bound is required")
    weights = []
    families = {}
    for size in range(k + 1):
        for T in combinations(range(1, n + 1), size):
            fam = affine_pattern_solve(n, T, Pi, degree_bound)
            families[T] = fam
            weights.extend(w for w in fam.particular if positive_degree(w) <= degree_bound)
    weights.sort(key=lambda w: canonical_key(space, w))
    return weights, families

