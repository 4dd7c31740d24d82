"""Exact linear algebra over Q(i): rank, kernels, span membership, solving.

Matrices are stored as sparse rows (``{col: Scalar}``).  Elimination is
Gauss-Jordan with exact rational arithmetic; pivots are taken in column
order, so the reduced form is unique and reproducible.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .exterior import ExtVector
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "ExactMatrix",
    "RowReducer",
    "rank",
    "kernel_basis",
    "in_span",
    "solve",
]


class ExactMatrix:
    """A ``rows x cols`` matrix of scalars held as sparse rows."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[dict] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        if data is None:
            data = [{} for _ in range(rows)]
        if len(data) != rows:
            raise ValueError(f"expected {rows} rows, got {len(data)}")
        clean = []
        for r in data:
            row = {}
            for c, v in r.items():
                if not 0 <= c < cols:
                    raise ValueError(f"column {c} out of range for {cols} columns")
                v = as_scalar(v)
                if v:
                    row[c] = v
            clean.append(row)
        self.rows, self.cols, self.data = rows, cols, clean

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        entries = [list(r) for r in entries]
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged matrix rows")
        return cls(len(entries), cols, [{j: v for j, v in enumerate(r)} for r in entries])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i].get(j, ZERO)

    def to_dense(self):
        return [[r.get(j, ZERO) for j in range(self.cols)] for r in self.data]

    def transpose(self) -> "ExactMatrix":
        out = [{} for _ in range(self.cols)]
        for i, r in enumerate(self.data):
            for j, v in r.items():
                out[j][i] = v
        return ExactMatrix._raw(self.cols, self.rows, out)

    @classmethod
    def _raw(cls, rows, cols, data):
        obj = object.__new__(cls)
        obj.rows, obj.cols, obj.data = rows, cols, data
        return obj

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            out = []
            for r in self.data:
                acc: dict = {}
                for k, a in r.items():
                    for j, b in other.data[k].items():
                        acc[j] = acc.get(j, ZERO) + a * b
                out.append({j: v for j, v in acc.items() if v})
            return ExactMatrix._raw(self.rows, other.cols, out)
        vec = list(getattr(other, "coords", other))
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.cols} columns")
        res = []
        for r in self.data:
            acc = ZERO
            for j, a in r.items():
                if vec[j]:
                    acc = acc + a * vec[j]
            res.append(acc)
        return res

    def is_zero(self) -> bool:
        return not any(self.data)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={sum(map(len, self.data))})"


class RowReducer:
    """Incremental reduced row echelon form.

    Rows are added one at a time; each is reduced against the pivots seen so
    far, and a new pivot is taken at its smallest remaining column.  Pivot
    rows are normalized to 1 and kept mutually reduced, so reducing an
    arbitrary vector is a single pass over the pivots it touches.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Return ``vec`` minus its component along the current row space."""
        v = dict(vec)
        for p in sorted(c for c in v if c in self.pivots):
            f = v.get(p)
            if not f:
                continue
            for c, a in self.pivots[p].items():
                w = v.get(c, ZERO) - f * a
                if w:
                    v[c] = w
                else:
                    v.pop(c, None)
        return v

    def add(self, vec: dict) -> bool:
        """Add a row; return True if it increased the rank."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        if inv != ONE:
            v = {c: a * inv for c, a in v.items()}
        for row in self.pivots.values():
            f = row.get(p)
            if f:
                for c, a in v.items():
                    w = row.get(c, ZERO) - f * a
                    if w:
                        row[c] = w
                    else:
                        row.pop(c, None)
        self.pivots[p] = v
        return True


def _reduce_matrix(M: ExactMatrix) -> RowReducer:
    rr = RowReducer()
    for r in M.data:
        if r:
            rr.add(r)
    return rr


def rank(M: ExactMatrix) -> int:
    """Exact rank over Q(i)."""
    return _reduce_matrix(M).rank


def kernel_basis(M: ExactMatrix) -> list[ExtVector]:
    """A basis of ``{x : M x = 0}``, one vector per non-pivot column."""
    rr = _reduce_matrix(M)
    free = [c for c in range(M.cols) if c not in rr.pivots]
    basis = []
    for f in free:
        x = [ZERO] * M.cols
        x[f] = ONE
        for p, row in rr.pivots.items():
            a = row.get(f)
            if a:
                x[p] = -a
        basis.append(ExtVector(x))
    return basis


def in_span(v, S: Iterable) -> bool:
    """Whether ``v`` lies in the linear span of the vectors ``S``."""
    vc = list(getattr(v, "coords", v))
    rr = RowReducer()
    for s in S:
        sc = list(getattr(s, "coords", s))
        if len(sc) != len(vc):
            raise ValueError("vectors of different length")
        rr.add({i: c for i, c in enumerate(sc) if c})
    return not rr.reduce({i: as_scalar(c) for i, c in enumerate(vc) if c})


def solve(M: ExactMatrix, b: Sequence) -> list[Scalar] | None:
    """One solution of ``M x = b`` (free variables set to 0), or None."""
    if len(b) != M.rows:
        raise ValueError("right-hand side has wrong length")
    aug = M.cols
    rr = RowReducer()
    for r, bi in zip(M.data, b):
        row = dict(r)
        bi = as_scalar(bi)
        if bi:
            row[aug] = bi
        if row:
            rr.add(row)
    if aug in rr.pivots:
        return None
    x = [ZERO] * M.cols
    for p, row in rr.pivots.items():
        x[p] = row.get(aug, ZERO)
    return x
