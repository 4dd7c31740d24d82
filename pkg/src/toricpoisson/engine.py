"""Closed-form Poisson cohomology of toric Poisson structures on CP^n and C^n.

In degree k the cohomology is the direct sum, over the weights I passing the
cocycle condition with at most k entries equal to -1, of the weight spaces
``C (chi^I V_I) ^ W^{k-|I|}``, each of dimension ``C(n-|I|, k-|I|)``.  On C^n
the sum is a direct sum for polynomial (algebraic) fields and a direct
product for formal ones; both have the same dimension when finite.
"""

from __future__ import annotations

from itertools import combinations

from .linalg import ExactMatrix, rank
from .report import INFINITE, BasisDescriptor, CohomologyReport, DegreeEntry, MissingDegreeBound
from .scalar import ONE
from .solver import affine_pattern_solve, enumerate_S_pi, positive_degree
from .toric import (
    PoissonStructure,
    Space,
    UnsupportedOperation,
    Weight,
    canonical_key,
    cyclic_shift,
    profile,
    standard_structure,
    weight_space_dim,
)

__all__ = [
    "MissingDegreeBound",
    "cohomology",
    "h0",
    "infinite_patterns",
    "recursion_check",
    "symmetry_orbits",
    "complement_indices",
    "basis_for",
]


def complement_indices(space: Space, minus_set) -> tuple:
    """Indices whose v's complete the frame vectors of ``minus_set`` to a basis of W.

    When 0 is in the minus-set, the smallest index outside it is dropped to
    make room for v_0 = -(v_1+...+v_n).
    """
    n = space.n
    T = set(minus_set)
    avail = [j for j in range(1, n + 1) if j not in T]
    if 0 in T:
        avail = avail[1:]
    rows = []
    for t in sorted(T):
        rows.append({i: -ONE for i in range(n)} if t == 0 else {t - 1: ONE})
    rows.extend({j - 1: ONE} for j in avail)
    if rank(ExactMatrix(len(rows), n, rows)) != n:
        raise AssertionError(f"complement {avail} does not complete frame {sorted(T)}")
    return tuple(avail)


def basis_for(space: Space, I: Weight, k: int) -> list[BasisDescriptor]:
    T = profile(space, I).minus_set
    if len(T) > k:
        return []
    avail = complement_indices(space, T)
    return [BasisDescriptor(space, I, T, comp) for comp in combinations(avail, k - len(T))]


def _entry(space, k, weights, with_basis, *, infinite=False, truncated=False, witnesses=()):
    weights = sorted(weights, key=lambda w: canonical_key(space, w))
    pairs = [(w, weight_space_dim(space, w, k)) for w in weights]
    pairs = [(w, m) for w, m in pairs if m]
    dim = INFINITE if infinite else sum(m for _, m in pairs)
    basis = None
    if with_basis:
        basis = [b for w, _ in pairs for b in basis_for(space, w, k)]
    return DegreeEntry(k, pairs, dim, truncated, list(witnesses), basis)


def _projective(space, Pi, k_max, with_basis, backend):
    n = space.n
    top = min(k_max, n)
    S = enumerate_S_pi(space, top, Pi, backend=backend) if top >= 0 else []
    sizes = {w: profile(space, w).size for w in S}
    entries = []
    for k in range(k_max + 1):
        if k > n:
            entries.append(DegreeEntry(k, [], 0, basis=[] if with_basis else None))
            continue
        entries.append(_entry(space, k, [w for w in S if sizes[w] <= k], with_basis))
    return entries


def _affine_families(space, Pi, top, degree_bound):
    fams = {}
    for size in range(top + 1):
        for T in combinations(range(1, space.n + 1), size):
            fams[T] = affine_pattern_solve(space.n, T, Pi, degree_bound)
    return fams


def infinite_patterns(space: Space, Pi: PoissonStructure, k_max: int | None = None) -> list[tuple]:
    """Minus-set patterns with |T| <= k_max whose weight family on C^n is infinite."""
    if space.is_projective:
        return []
    top = space.n if k_max is None else min(k_max, space.n)
    fams = _affine_families(space, Pi, top, 0)
    return [T for T, f in fams.items() if not f.finite]


def _affine(space, Pi, k_max, degree_bound, with_basis):
    n = space.n
    top = min(k_max, n)
    fams = _affine_families(space, Pi, top, degree_bound) if top >= 0 else {}
    infinite = [T for T, f in fams.items() if not f.finite]
    if infinite and degree_bound is None:
        raise MissingDegreeBound(
            f"{space} with this structure has infinite weight families "
            f"(patterns {infinite}); a degree bound is required"
        )
    entries = []
    for k in range(k_max + 1):
        if k > n:
            entries.append(DegreeEntry(k, [], 0, basis=[] if with_basis else None))
            continue
        active = {T: f for T, f in fams.items() if len(T) <= k}
        witnesses = sorted((T for T, f in active.items() if not f.finite), key=lambda t: (len(t), t))
        weights = [w for f in active.values() for w in f.particular]
        if witnesses:
            weights = [w for w in weights if positive_degree(w) <= degree_bound]
        entries.append(
            _entry(
                space,
                k,
                weights,
                with_basis,
                infinite=bool(witnesses),
                truncated=bool(witnesses),
                witnesses=witnesses,
            )
        )
    return entries


def cohomology(
    space: Space,
    Pi: PoissonStructure,
    k_max: int | None = None,
    degree_bound: int | None = None,
    with_basis: bool = False,
    backend: str = "auto",
) -> CohomologyReport:
    """Poisson cohomology in degrees ``0..k_max`` from the weight-space formula.

    For CP^n ``degree_bound`` is ignored.  For C^n it is required as soon as
    some contributing weight family is infinite: such degrees are reported
    as ``"infinite"`` with the weights of positive degree up to the bound.
    """
    if Pi.n != space.n:
        raise ValueError(f"structure has n={Pi.n}, space is {space}")
    if k_max is None:
        k_max = space.n
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    if space.is_projective:
        entries = _projective(space, Pi, k_max, with_basis, backend)
        degree_bound = None
    else:
        entries = _affine(space, Pi, k_max, degree_bound, with_basis)
    return CohomologyReport(space, Pi, entries, "closed", k_max, degree_bound)


def h0(space: Space, Pi: PoissonStructure) -> DegreeEntry:
    """Casimir functions: degree 0 of the cohomology."""
    if space.is_projective:
        return cohomology(space, Pi, 0).entries[0]
    fam = affine_pattern_solve(space.n, (), Pi)
    if fam.finite:
        return _entry(space, 0, fam.particular, False)
    return _entry(space, 0, fam.particular, False, infinite=True, truncated=True, witnesses=[()])


def recursion_check(space: Space, Pi: PoissonStructure, k: int, report: CohomologyReport | None = None) -> bool:
    """Check dim H^k = sum_{I in S_{k-1}(pi)} C(n-|I|, k-|I|) + |S(k, pi)|."""
    if not space.is_projective:
        raise UnsupportedOperation("recursion_check is stated for CP^n")
    if not 1 <= k <= space.n:
        raise ValueError(f"k={k} out of range 1..{space.n}")
    if report is None or report.k_max < k:
        report = cohomology(space, Pi, k)
    prev = [w for w, _ in report.entry(k - 1).weights]
    lifted = sum(weight_space_dim(space, w, k) for w in prev)
    new = sum(1 for w, _ in report.entry(k).weights if profile(space, w).size == k)
    return report.entry(k).dim == lifted + new


def symmetry_orbits(space: Space, Pi: PoissonStructure, k: int) -> list[list[Weight]]:
    """Orbits of the cyclic Z_{n+1} action on S_k(pi_st), each sorted canonically.

    Orbits are ordered by their smallest member.
    """
    if not space.is_projective:
        raise UnsupportedOperation("the cyclic action is defined on CP^n only")
    if Pi != standard_structure(space.n):
        raise UnsupportedOperation("orbit invariance is only asserted for the standard structure")
    weights = enumerate_S_pi(space, k, Pi)
    members = set(weights)
    seen = set()
    orbits = []
    key = lambda w: canonical_key(space, w)  # noqa: E731
    for w in weights:
        if w in seen:
            continue
        orbit = [w]
        nxt = cyclic_shift(space, w)
        while nxt != w:
            if nxt not in members:
                raise AssertionError(f"{nxt} leaves S_{k}(pi_st)")
            orbit.append(nxt)
            nxt = cyclic_shift(space, nxt)
        seen.update(orbit)
        orbits.append(sorted(orbit, key=key))
    orbits.sort(key=lambda o: key(o[0]))
    return orbits

