"""Brute-force Poisson cohomology from explicit multivector fields.

Projective space uses the homogeneous model: degree-k fields on CP^n are
the fields ``z^a d_S`` on C^{n+1} with ``|a| = |S| = k``, modulo the
Euler multiples ``e ^ F_{k-1}`` where ``e = sum z_i d_i``.  Affine space
uses polynomial fields directly.  The differential is the Schouten bracket
with the lifted structure, assembled as an exact matrix.

Everything is graded by the torus weight ``a - 1_S`` of a monomial, which
the differential preserves.  A weight ``w`` with minus-set ``T`` carries
the monomials ``z^(w + 1_S) d_S`` for ``S`` containing ``T``, so each block
is finite and per-weight ranks are exact.  Affine output is truncated only
in which weights are explored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .linalg import ExactMatrix, RowReducer
from .report import CohomologyReport, DegreeEntry, MissingDegreeBound
from .schouten import PolyMultivector, euler_field, schouten, toric_bivector, wedge_poly
from .scalar import ONE
from .toric import PoissonStructure, Space, Weight, canonical_key

__all__ = [
    "SectionBasis",
    "WeightBlock",
    "Diff",
    "section_basis",
    "d_pi_matrix",
    "block_differential",
    "cohomology_oracle",
    "compare",
]


class WeightPreservationError(AssertionError):
    """The differential produced a term outside the weight block of its input."""


@dataclass
class WeightBlock:
    """Monomials of one weight in F_k, with the Euler subspace and coset representatives."""

    weight: tuple
    monomials: list  # (exps, S) in lexicographic order
    euler: RowReducer
    reps: list  # column indices of the representatives

    def index(self, mono) -> int:
        return self._index[mono]

    def __post_init__(self):
        self._index = {m: i for i, m in enumerate(self.monomials)}
        self._rep_pos = {c: i for i, c in enumerate(self.reps)}

    def coordinates(self, vec: dict) -> dict:
        """Reduce a column vector modulo the Euler subspace; return rep coordinates."""
        red = self.euler.reduce(vec) if self.euler.pivots else vec
        return {self._rep_pos[c]: v for c, v in red.items()}

    def rep_fields(self) -> list:
        amb = len(self.weight)
        return [PolyMultivector(amb, {self.monomials[c]: ONE}) for c in self.reps]


@dataclass
class SectionBasis:
    space: Space
    k: int
    blocks: dict = field(default_factory=dict)  # weight -> WeightBlock, weights sorted
    degree_bound: int | None = None

    @property
    def representatives(self) -> list:
        return [f for b in self.blocks.values() for f in b.rep_fields()]

    def __len__(self):
        return sum(len(b.reps) for b in self.blocks.values())

    def offsets(self) -> dict:
        out, pos = {}, 0
        for w, b in self.blocks.items():
            out[w] = pos
            pos += len(b.reps)
        return out


def _block_monomials(w, k):
    T = [j for j, x in enumerate(w) if x == -1]
    if len(T) > k:
        return []
    rest = [j for j in range(len(w)) if w[j] != -1]
    out = []
    for extra in combinations(rest, k - len(T)):
        S = tuple(sorted(T + list(extra)))
        a = list(w)
        for s in S:
            a[s] += 1
        out.append((tuple(a), S))
    return sorted(out)


def _projective_weights(n: int, k: int):
    """Weights of monomials z^a d_S on n+1 variables with |a| = |S| = k."""
    amb = n + 1
    found = set()
    for S in combinations(range(amb), k):
        for a in _compositions(k, amb):
            w = list(a)
            for s in S:
                w[s] -= 1
            found.add(tuple(w))
    return found


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _affine_weights(n: int, bound: int):
    for w in product(range(-1, bound + 1), repeat=n):
        if sum(x for x in w if x > 0) <= bound:
            yield w


def _weight_order(space: Space, w: tuple):
    return canonical_key(space, _to_weight(space, w))


def _to_weight(space: Space, w: tuple) -> Weight:
    return Weight(tuple(w[1:])) if space.is_projective else Weight(tuple(w))


def _make_block(space: Space, w: tuple, k: int) -> WeightBlock:
    monos = _block_monomials(w, k)
    index = {m: i for i, m in enumerate(monos)}
    rr = RowReducer()
    if space.is_projective and k >= 1:
        e = euler_field(len(w))
        for m in _block_monomials(w, k - 1):
            img = wedge_poly(e, PolyMultivector._raw(len(w), {m: ONE}))
            vec = {}
            for term, c in img.terms.items():
                if term not in index:
                    raise WeightPreservationError(f"Euler multiple of {m} leaves weight {w}")
                vec[index[term]] = c
            rr.add(vec)
    reps = [c for c in range(len(monos)) if c not in rr.pivots]
    return WeightBlock(w, monos, rr, reps)


def section_basis(space: Space, k: int, degree_bound: int | None = None) -> SectionBasis:
    """Coset representatives of degree-k fields, organised by weight.

    Projective: monomials of F_k not hit by a pivot of the Euler subspace
    (reduced row echelon form in lexicographic monomial order).  Affine:
    every monomial field whose weight has positive degree at most
    ``degree_bound``.
    """
    n = space.n
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if space.is_projective:
        if k > n + 1:
            raise ValueError(f"degree k={k} out of range 0..{n + 1}")
        weights = _projective_weights(n, k)
        degree_bound = None
    else:
        if degree_bound is None:
            raise MissingDegreeBound("the affine oracle needs a degree bound")
        if degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        weights = [w for w in _affine_weights(n, degree_bound) if _block_monomials(w, k)]
    blocks = {}
    for w in sorted(weights, key=lambda w: _weight_order(space, w)):
        b = _make_block(space, w, k)
        if b.reps:
            blocks[w] = b
    basis = SectionBasis(space, k, blocks, degree_bound)
    _check_independent(basis)
    return basis


def _check_independent(basis: SectionBasis):
    for b in basis.blocks.values():
        rr = RowReducer()
        for row in b.euler.pivots.values():
            rr.add(row)
        for c in b.reps:
            if not rr.add({c: ONE}):
                raise AssertionError(f"representative {b.monomials[c]} depends on the Euler subspace")
        if rr.rank != len(b.monomials):
            raise AssertionError(f"representatives do not span weight block {b.weight}")


def _lift(space: Space, Pi: PoissonStructure) -> PolyMultivector:
    if Pi.n != space.n:
        raise ValueError(f"structure has n={Pi.n}, space is {space}")
    return toric_bivector(Pi, homogeneous=space.is_projective)


def _column(img, block: WeightBlock, w, source) -> dict:
    vec = {}
    for term, c in img.terms.items():
        if term not in block._index:
            raise WeightPreservationError(f"[pi, {source}] leaves weight {w}")
        vec[block.index(term)] = c
    return block.coordinates(vec)


def _image(space, pi_lift, src: WeightBlock, dst: WeightBlock | None, k: int, w):
    """Columns of d restricted to one weight block, in representative coordinates."""
    cols = []
    for field_ in src.rep_fields():
        img = schouten(pi_lift, field_)
        if dst is None:
            # the target block has no representatives, so the image must vanish there
            if img and _column(img, _make_block(space, w, k + 1), w, field_):
                raise AssertionError(f"image of weight {w} does not vanish in the quotient")
            cols.append({})
        else:
            cols.append(_column(img, dst, w, field_))
    return cols


def block_differential(space: Space, Pi: PoissonStructure, k: int, w, degree_bound=None) -> ExactMatrix:
    """Matrix of d on one weight block from degree k to k+1."""
    src = _make_block(space, tuple(w), k)
    dst = _make_block(space, tuple(w), k + 1)
    cols = _image(space, _lift(space, Pi), src, dst, k, tuple(w))
    rows = [dict() for _ in range(len(dst.reps))]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    return ExactMatrix(len(dst.reps), len(src.reps), rows)


def d_pi_matrix(space: Space, Pi: PoissonStructure, k: int, bases=None, degree_bound=None) -> ExactMatrix:
    """Matrix of ``v -> [pi, v]`` from degree k to k+1 in coset coordinates.

    ``bases`` is the pair of section bases in degrees k and k+1; it is built
    on demand (affine spaces then need ``degree_bound``).
    """
    if bases is None:
        bases = (section_basis(space, k, degree_bound), section_basis(space, k + 1, degree_bound))
    src, dst = bases
    if src.space != space or dst.space != space or src.k != k or dst.k != k + 1:
        raise ValueError("bases do not match the requested space and degrees")
    if src.degree_bound != dst.degree_bound:
        raise ValueError("bases were built with different degree bounds")
    pi_lift = _lift(space, Pi)
    src_off, dst_off = src.offsets(), dst.offsets()
    rows = [dict() for _ in range(len(dst))]
    for w, block in src.blocks.items():
        tgt = dst.blocks.get(w)
        cols = _image(space, pi_lift, block, tgt, k, w)
        for j, col in enumerate(cols):
            for i, v in col.items():
                rows[dst_off[w] + i][src_off[w] + j] = v
    return ExactMatrix(len(dst), len(src), rows)


def _rank_of(cols) -> int:
    rr = RowReducer()
    for c in cols:
        if c:
            rr.add(c)
    return rr.rank


def cohomology_oracle(
    space: Space, Pi: PoissonStructure, k_max: int | None = None, degree_bound: int | None = None
) -> CohomologyReport:
    """Dimensions of the cohomology by exact ranks on every weight block.

    Affine reports are always marked truncated: weights of positive degree
    above ``degree_bound`` are not explored.
    """
    n = space.n
    if k_max is None:
        k_max = n
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    if not space.is_projective and degree_bound is None:
        raise MissingDegreeBound("the affine oracle needs a degree bound")
    pi_lift = _lift(space, Pi)
    top = n + 1 if space.is_projective else n
    bases = {}
    for k in range(0, min(k_max + 1, top) + 1):
        bases[k] = section_basis(space, k, degree_bound)

    ranks = {}

    def rank_d(k, w):
        if (k, w) not in ranks:
            if k < 0 or k not in bases or w not in bases[k].blocks:
                ranks[(k, w)] = 0
            else:
                dst = bases[k + 1].blocks.get(w) if k + 1 in bases else None
                if dst is None:
                    ranks[(k, w)] = 0
                else:
                    ranks[(k, w)] = _rank_of(_image(space, pi_lift, bases[k].blocks[w], dst, k, w))
        return ranks[(k, w)]

    entries = []
    for k in range(k_max + 1):
        if k > n:
            entries.append(DegreeEntry(k, [], 0, truncated=not space.is_projective))
            continue
        pairs = []
        for w, block in bases[k].blocks.items():
            dim = len(block.reps) - rank_d(k, w) - rank_d(k - 1, w)
            if dim < 0:
                raise AssertionError(f"negative cohomology dimension at weight {w}")
            if dim:
                pairs.append((_to_weight(space, w), dim))
        entries.append(DegreeEntry(k, pairs, sum(m for _, m in pairs), truncated=not space.is_projective))
    return CohomologyReport(space, Pi, entries, "oracle", k_max, degree_bound if not space.is_projective else None)


class Diff(list):
    """List of human-readable disagreements; empty (falsy) means agreement."""

    @property
    def ok(self) -> bool:
        return not self


def _positive_degree(w: Weight) -> int:
    return sum(x for x in w.coords if x > 0)


def compare(engine: CohomologyReport, oracle: CohomologyReport) -> Diff:
    diff = Diff()
    if engine.space != oracle.space:
        diff.append(f"space mismatch: {engine.space} vs {oracle.space}")
        return diff
    if engine.poisson != oracle.poisson:
        diff.append("poisson structures differ")
        return diff
    ks_e = [e.k for e in engine.entries]
    ks_o = [e.k for e in oracle.entries]
    if ks_e != ks_o:
        diff.append(f"degree ranges differ: {ks_e} vs {ks_o}")
        return diff
    affine = not engine.space.is_projective
    bound = oracle.degree_bound
    for e, o in zip(engine.entries, oracle.entries):
        k = e.k
        em, om = e.multiplicities(), o.multiplicities()
        if not affine:
            if e.dim != o.dim:
                diff.append(f"H^{k}: dim {e.dim} vs {o.dim}")
            if em != om:
                diff.append(f"H^{k}: weight multiplicities differ ({_describe(em, om)})")
            continue
        if not o.truncated:
            diff.append(f"H^{k}: affine oracle output must be marked truncated")
        if bound is None:
            diff.append(f"H^{k}: affine oracle report has no degree bound")
            continue
        if e.infinite:
            if not e.truncated:
                diff.append(f"H^{k}: infinite engine result is not flagged truncated")
        else:
            if e.truncated:
                diff.append(f"H^{k}: finite engine result flagged truncated")
            outside = [w for w in em if _positive_degree(w) > bound]
            if outside:
                diff.append(f"H^{k}: engine weights beyond bound {bound}: {[w.coords for w in outside]}")
            elif e.dim != o.dim:
                diff.append(f"H^{k}: dim {e.dim} vs {o.dim}")
        inside = {w: m for w, m in em.items() if _positive_degree(w) <= bound}
        if inside != om:
            diff.append(f"H^{k}: weight multiplicities differ within bound ({_describe(inside, om)})")
    return diff


def _describe(a: dict, b: dict) -> str:
    only_a = sorted(w.coords for w in a.keys() - b.keys())
    only_b = sorted(w.coords for w in b.keys() - a.keys())
    changed = sorted(w.coords for w in a.keys() & b.keys() if a[w] != b[w])
    parts = []
    if only_a:
        parts.append(f"engine only {only_a}")
    if only_b:
        parts.append(f"oracle only {only_b}")
    if changed:
        parts.append(f"multiplicity differs at {changed}")
    return "; ".join(parts)
