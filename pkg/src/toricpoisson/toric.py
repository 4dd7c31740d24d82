"""The ambient toric spaces CP^n and C^n, weights, and toric Poisson structures.

A weight ``I = (m_1, ..., m_n)`` is stored without ``m_0``; for CP^n the
homogeneous coordinate ``m_0 = -sum(m_i)`` is always derived.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Mapping

from .exterior import DimensionError, ExtElement, contract, wedge
from .scalar import ONE, ZERO, Scalar, as_scalar, parse_scalar

__all__ = [
    "Kind",
    "Space",
    "Weight",
    "WeightProfile",
    "PoissonStructure",
    "UnsupportedOperation",
    "profile",
    "admissible",
    "frame",
    "cocycle_condition",
    "weight_space_dim",
    "standard_structure",
    "cyclic_shift",
    "canonical_key",
]


class UnsupportedOperation(ValueError):
    """The operation is not defined for this space or structure."""


class Kind(str, Enum):
    PROJECTIVE = "projective"
    AFFINE = "affine"


@dataclass(frozen=True)
class Space:
    kind: Kind
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"torus dimension must be a positive integer, got {self.n!r}")

    @classmethod
    def projective(cls, n: int) -> "Space":
        return cls(Kind.PROJECTIVE, n)

    @classmethod
    def affine(cls, n: int) -> "Space":
        return cls(Kind.AFFINE, n)

    @property
    def is_projective(self) -> bool:
        return self.kind is Kind.PROJECTIVE

    def __str__(self):
        return f"CP^{self.n}" if self.is_projective else f"C^{self.n}"

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "n": self.n}

    @classmethod
    def from_json(cls, data: Mapping) -> "Space":
        return cls(Kind(data["kind"]), int(data["n"]))


@dataclass(frozen=True, order=True)
class Weight:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(m) for m in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def to_json(self) -> dict:
        return {"coords": list(self.coords)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Weight":
        return cls(tuple(data["coords"]))


@dataclass(frozen=True)
class WeightProfile:
    space: Space
    full: tuple
    minus_set: tuple
    chi_exponents: tuple

    @property
    def size(self) -> int:
        return len(self.minus_set)


def _coords(space: Space, I) -> tuple:
    m = tuple(getattr(I, "coords", I))
    if len(m) != space.n:
        raise DimensionError(f"weight {m} has length {len(m)}, space {space} needs {space.n}")
    return m


def full_profile(space: Space, I) -> tuple:
    m = _coords(space, I)
    if space.is_projective:
        return (-sum(m),) + m
    return m


def canonical_key(space: Space, I) -> tuple:
    """Sort key for reports: lexicographic on the full profile."""
    return full_profile(space, I)


def profile(space: Space, I) -> WeightProfile:
    full = full_profile(space, I)
    offset = 0 if space.is_projective else 1
    minus = tuple(i + offset for i, m in enumerate(full) if m == -1)
    return WeightProfile(space, full, minus, full)


def admissible(space: Space, I, k: int) -> bool:
    full = full_profile(space, I)
    if any(m < -1 for m in full):
        return False
    return sum(1 for m in full if m == -1) <= k


def frame(space: Space, prof: WeightProfile) -> ExtElement:
    """The wedge of frame vectors over the minus-set, with e_0 = -(e_1+...+e_n)."""
    n = space.n
    out = ExtElement.scalar(n, 1)
    for idx in prof.minus_set:
        if idx == 0:
            vec = ExtElement(n, 1, {(i,): -1 for i in range(1, n + 1)})
        else:
            vec = ExtElement.basis(n, idx)
        out = wedge(out, vec)
    return out


def cocycle_condition(space: Space, I, Pi: "PoissonStructure") -> bool:
    """Whether ``(i_I Pi) ^ E_I`` vanishes."""
    prof = profile(space, I)
    if Pi.n != space.n:
        raise DimensionError(f"structure has n={Pi.n}, space {space}")
    u = contract(prof.full[1:] if space.is_projective else prof.full, Pi)
    return wedge(u, frame(space, prof)).is_zero()


def weight_space_dim(space: Space, I, k: int) -> int:
    size = profile(space, I).size
    if size > k:
        return 0
    return comb(space.n - size, k - size)


def cyclic_shift(space: Space, I) -> Weight:
    """Action of [z_0:...:z_n] -> [z_1:...:z_n:z_0] on weights of CP^n."""
    if not space.is_projective:
        raise UnsupportedOperation("cyclic_shift is only defined on CP^n")
    full = full_profile(space, I)
    shifted = full[1:] + full[:1]
    return Weight(shifted[1:])


@dataclass(frozen=True)
class PoissonStructure:
    """Toric Poisson structure ``sum_{i<j} A[i][j] v_i ^ v_j`` on an n-torus."""

    n: int
    A: tuple = field(repr=False)

    def __post_init__(self):
        A = tuple(tuple(as_scalar(a) for a in row) for row in self.A)
        if len(A) != self.n or any(len(r) != self.n for r in A):
            raise ValueError(f"matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            for j in range(self.n):
                if A[i][j] != -A[j][i]:
                    raise ValueError(f"matrix is not antisymmetric at ({i + 1},{j + 1})")
        object.__setattr__(self, "A", A)

    @classmethod
    def from_upper(cls, n: int, entries: Mapping) -> "PoissonStructure":
        """Build from ``{(i, j): a}`` with 1-based ``i < j``."""
        A = [[ZERO] * n for _ in range(n)]
        for (i, j), a in entries.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"entry ({i},{j}) out of range 1..{n}")
            if i == j:
                raise ValueError(f"diagonal entry ({i},{j}) is not allowed")
            a = as_scalar(a)
            if i > j:
                i, j, a = j, i, -a
            if A[i - 1][j - 1] and A[i - 1][j - 1] != a:
                raise ValueError(f"conflicting values for entry ({i},{j})")
            A[i - 1][j - 1] = a
            A[j - 1][i - 1] = -a
        return cls(n, tuple(map(tuple, A)))

    @classmethod
    def zero(cls, n: int) -> "PoissonStructure":
        return cls(n, tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random | None = None, bound: int = 10) -> "PoissonStructure":
        """Random Gaussian-rational structure; numerators and denominators at most ``bound``."""
        rng = rng or random.Random()

        def part():
            return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

        entries = {(i, j): Scalar(part(), part()) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        return cls.from_upper(n, entries)

    def upper_entries(self):
        return [
            (i + 1, j + 1, self.A[i][j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.A[i][j]
        ]

    def scaled(self, c) -> "PoissonStructure":
        c = as_scalar(c)
        return PoissonStructure(self.n, tuple(tuple(a * c for a in row) for row in self.A))

    def __add__(self, other: "PoissonStructure") -> "PoissonStructure":
        if self.n != other.n:
            raise DimensionError("structures of different dimension")
        return PoissonStructure(
            self.n, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.A, other.A))
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.A)

    def bivector(self) -> ExtElement:
        return ExtElement(self.n, 2, {(i, j): a for i, j, a in self.upper_entries()})

    def entries_json(self) -> list:
        return [{"i": i, "j": j, "a": str(a)} for i, j, a in self.upper_entries()]

    def to_json(self) -> dict:
        return {"n": self.n, "entries": self.entries_json()}

    @classmethod
    def from_json(cls, data, n: int | None = None) -> "PoissonStructure":
        """Accept ``{"n":..,"entries":[..]}`` or a bare entry list (needs ``n``)."""
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, Mapping):
            n_data = int(data["n"])
            if n is not None and n != n_data:
                raise DimensionError(f"structure has n={n_data}, expected {n}")
            n, entries = n_data, data.get("entries", [])
        else:
            entries = data
            if n is None:
                raise ValueError("ambient dimension needed for a bare entry list")
        table: dict = {}
        for e in entries:
            i, j = int(e["i"]), int(e["j"])
            a = e["a"]
            a = parse_scalar(a) if isinstance(a, str) else as_scalar(a)
            key = (min(i, j), max(i, j))
            val = a if i < j else -a
            if i == j:
                raise ValueError(f"diagonal entry ({i},{j}) is not allowed")
            if key in table and table[key] != val:
                raise ValueError(f"conflicting values for entry {key}")
            table[key] = val
        return cls.from_upper(n, table)


def standard_structure(n: int) -> PoissonStructure:
    """The structure with ``A[i][j] = 1`` for all ``i < j``."""
    if n < 1:
        raise ValueError("n must be positive")
    return PoissonStructure.from_upper(
        n, {(i, j): ONE for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    )

