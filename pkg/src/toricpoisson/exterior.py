"""Sparse exterior algebra over Q(i) on basis vectors e_1..e_n."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .scalar import ONE, ZERO, Scalar, as_scalar, parse_scalar

__all__ = [
    "DimensionError",
    "ExtVector",
    "ExtElement",
    "wedge",
    "contract",
    "sort_sign",
]


class DimensionError(ValueError):
    """Operands live in exterior algebras of different ambient dimension."""


def sort_sign(indices: Sequence[int]):
    """Return ``(sign, sorted_tuple)`` for a wedge of basis indices.

    ``sign`` is 0 when an index repeats (the wedge vanishes).
    """
    idx = list(indices)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and idx[j - 1] == idx[j]:
            return 0, ()
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return 0, ()
    return sign, tuple(idx)


class ExtElement:
    """Homogeneous element of the degree-``d`` exterior power of an n-space.

    Terms map strictly increasing 1-based index tuples to nonzero scalars.
    """

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms: Mapping | None = None):
        if n < 0 or degree < 0:
            raise ValueError("ambient dimension and degree must be nonnegative")
        self.n = n
        self.degree = degree
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"index tuple {key} has wrong degree for {degree}")
            if any(i < 1 or i > n for i in key):
                raise ValueError(f"index tuple {key} out of range 1..{n}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise ValueError(f"index tuple {key} is not strictly increasing")
            c = as_scalar(c)
            if c:
                clean[key] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, degree, terms):
        obj = object.__new__(cls)
        obj.n, obj.degree, obj.terms = n, degree, terms
        return obj

    @classmethod
    def basis(cls, n: int, *indices: int) -> "ExtElement":
        """The wedge ``e_{i1} ^ ... ^ e_{id}`` with sign normalization."""
        if any(i < 1 or i > n for i in indices):
            raise ValueError(f"indices {indices} out of range 1..{n}")
        sign, key = sort_sign(indices)
        if sign == 0:
            return cls._raw(n, len(indices), {})
        return cls._raw(n, len(indices), {key: Scalar(sign)})

    @classmethod
    def scalar(cls, n: int, c=1) -> "ExtElement":
        c = as_scalar(c)
        return cls._raw(n, 0, {(): c} if c else {})

    @classmethod
    def zero(cls, n: int, degree: int) -> "ExtElement":
        return cls._raw(n, degree, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        if self.n != other.n:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        if not self.terms:
            return hash((self.n, None))
        return hash((self.n, self.degree, frozenset(self.terms.items())))

    def _check(self, other):
        if self.n != other.n:
            raise DimensionError(f"ambient dimensions differ: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        self._check(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degree")
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return ExtElement._raw(self.n, self.degree, out)

    def __neg__(self):
        return ExtElement._raw(self.n, self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "ExtElement":
        c = as_scalar(c)
        if not c:
            return ExtElement._raw(self.n, self.degree, {})
        return ExtElement._raw(self.n, self.degree, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __xor__(self, other):
        return wedge(self, other)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "terms": [{"e": list(k), "c": str(c)} for k, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ExtElement":
        terms = {tuple(t["e"]): parse_scalar(t["c"]) for t in data["terms"]}
        return cls(int(data["n"]), int(data["degree"]), terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in sorted(self.terms.items()):
            mono = "^".join(f"e{i}" for i in key) or "1"
            parts.append(f"({c})*{mono}" if c != ONE else mono)
        return " + ".join(parts)

    def __repr__(self):
        return f"ExtElement(n={self.n}, degree={self.degree}, {self})"


class ExtVector:
    """A vector of N_C written in coordinates on e_1..e_n."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        self.coords = tuple(as_scalar(c) for c in coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_element(self) -> ExtElement:
        return ExtElement._raw(
            self.n, 1, {(i + 1,): c for i, c in enumerate(self.coords) if c}
        )

    def __eq__(self, other):
        if isinstance(other, ExtVector):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        if self.n != other.n:
            raise DimensionError(f"ambient dimensions differ: {self.n} vs {other.n}")
        return ExtVector(a + b for a, b in zip(self.coords, other.coords))

    def __rmul__(self, c):
        c = as_scalar(c)
        return ExtVector(c * a for a in self.coords)

    def __repr__(self):
        return "ExtVector([" + ", ".join(str(c) for c in self.coords) + "])"


def _as_element(x) -> ExtElement:
    return x.to_element() if isinstance(x, ExtVector) else x


def wedge(x, y) -> ExtElement:
    """Exterior product ``x ^ y`` in canonical (sorted, signed) form."""
    x, y = _as_element(x), _as_element(y)
    if x.n != y.n:
        raise DimensionError(f"ambient dimensions differ: {x.n} vs {y.n}")
    degree = x.degree + y.degree
    out: dict = {}
    if degree > x.n:
        return ExtElement._raw(x.n, degree, out)
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            sign, key = sort_sign(kx + ky)
            if not sign:
                continue
            c = cx * cy
            v = out.get(key, ZERO) + (c if sign > 0 else -c)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return ExtElement._raw(x.n, degree, out)


def contract(weight, poisson) -> ExtVector:
    """Contraction of a weight with the bivector of a Poisson structure.

    Uses ``i_I(e_i ^ e_j) = <I, e_i> e_j - <I, e_j> e_i`` so the result has
    coordinates ``c_j = sum_i m_i A[i][j]``.  ``weight`` may be a ``Weight``
    or a plain integer sequence; ``poisson`` a ``PoissonStructure`` or an
    antisymmetric square matrix of scalars.
    """
    m = tuple(getattr(weight, "coords", weight))
    A = getattr(poisson, "A", poisson)
    n = len(A)
    if len(m) != n:
        raise DimensionError(f"weight has length {len(m)}, structure has n={n}")
    coords = []
    for j in range(n):
        acc = ZERO
        for i in range(n):
            if m[i]:
                a = A[i][j]
                if a:
                    acc = acc + a * m[i]
        coords.append(acc)
    return ExtVector(coords)
