"""Polynomial multivector fields and the Schouten-Nijenhuis bracket.

A term ``c * z^a d_{s1} ^ ... ^ d_{sp}`` is stored as ``(a, S) -> c`` with
``a`` a tuple of nonnegative exponents and ``S`` strictly increasing.
Variables are numbered from 0 and ``ambient`` counts them.

Sign conventions: ``[X, f] = X(f)`` for a vector field ``X``, and for
decomposable fields

    [X1^...^Xp, Y1^...^Yq] = sum_{i,j} (-1)^(i+j) [Xi, Yj] ^ X1..^Xi..^Xp ^ Y1..^Yj..^Yq
    [X1^...^Xp, f]         = sum_i (-1)^(p-i) Xi(f) X1..^Xi..^Xp

which gives ``[P, Q] = -(-1)^((p-1)(q-1)) [Q, P]``.
"""

from __future__ import annotations

from typing import Mapping

from .exterior import sort_sign
from .scalar import ONE, ZERO, as_scalar

__all__ = ["PolyMultivector", "schouten", "wedge_poly", "toric_bivector", "euler_field"]


class PolyMultivector:
    """Homogeneous-degree polynomial multivector on ``ambient`` variables."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: int, terms: Mapping | None = None):
        self.ambient = ambient
        clean = {}
        for (a, S), c in (terms or {}).items():
            a, S = tuple(a), tuple(S)
            if len(a) != ambient or any(e < 0 for e in a):
                raise ValueError(f"bad exponent tuple {a} for {ambient} variables")
            sign, key = sort_sign(S)
            if any(s < 0 or s >= ambient for s in S):
                raise ValueError(f"derivative index out of range in {S}")
            if not sign:
                continue
            c = as_scalar(c)
            if sign < 0:
                c = -c
            prev = clean.get((a, key), ZERO) + c
            if prev:
                clean[(a, key)] = prev
            else:
                clean.pop((a, key), None)
        self.terms = clean

    @classmethod
    def _raw(cls, ambient, terms):
        obj = object.__new__(cls)
        obj.ambient, obj.terms = ambient, terms
        return obj

    @classmethod
    def monomial(cls, exps, indices=(), c=1) -> "PolyMultivector":
        return cls(len(exps), {(tuple(exps), tuple(indices)): c})

    @classmethod
    def zero(cls, ambient: int) -> "PolyMultivector":
        return cls._raw(ambient, {})

    def degrees(self) -> set:
        return {len(S) for (_, S) in self.terms}

    @property
    def degree(self) -> int:
        """Multivector degree; 0 for the zero field."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("multivector is not homogeneous")
        return ds.pop() if ds else 0

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PolyMultivector):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def _check(self, other):
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms.items())
        return PolyMultivector._raw(self.ambient, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyMultivector._raw(self.ambient, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "PolyMultivector":
        c = as_scalar(c)
        if not c:
            return PolyMultivector.zero(self.ambient)
        return PolyMultivector._raw(self.ambient, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def weights(self) -> set:
        """Torus weights ``a - 1_S`` of the terms (one per term)."""
        out = set()
        for a, S in self.terms:
            w = list(a)
            for s in S:
                w[s] -= 1
            out.add(tuple(w))
        return out

    def __repr__(self):
        if not self.terms:
            return "PolyMultivector(0)"
        parts = []
        for (a, S), c in sorted(self.terms.items()):
            mono = "*".join(f"z{i}^{e}" for i, e in enumerate(a) if e) or "1"
            d = "^".join(f"d{s}" for s in S)
            parts.append(f"({c})*{mono}" + (f"*{d}" if d else ""))
        return "PolyMultivector(" + " + ".join(parts) + ")"


def _accumulate(out: dict, items):
    for k, c in items:
        v = out.get(k, ZERO) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)


def _add(out, a, S, c):
    """Add ``c z^a d_S`` (S unsorted) into ``out``."""
    sign, key = sort_sign(S)
    if not sign:
        return
    _accumulate(out, [((a, key), c if sign > 0 else -c)])


def _shift(a, b, minus=None):
    if minus is None:
        return tuple(x + y for x, y in zip(a, b))
    return tuple(x + y - (1 if i == minus else 0) for i, (x, y) in enumerate(zip(a, b)))


def _bracket_field_function(a, S, c, b, d, out):
    """[c z^a d_S, d z^b] accumulated into ``out``."""
    p = len(S)
    for i, s in enumerate(S, start=1):
        e = b[s]
        if not e:
            continue
        coef = c * d * e
        if (p - i) % 2:
            coef = -coef
        rest = S[: i - 1] + S[i:]
        _accumulate(out, [((_shift(a, b, s), rest), coef)])


def _bracket_terms(a, S, c, b, R, d, out):
    p, q = len(S), len(R)
    if p == 0 and q == 0:
        return
    if q == 0:
        _bracket_field_function(a, S, c, b, d, out)
        return
    if p == 0:
        tmp: dict = {}
        _bracket_field_function(b, R, d, a, c, tmp)
        # [f, Q] = -(-1)^(q-1) [Q, f]
        flip = (q - 1) % 2 == 0
        _accumulate(out, [(k, -v if flip else v) for k, v in tmp.items()])
        return
    cd = c * d
    # X1 = c z^a d_{s1}, Xi = d_{si}; Y1 = d z^b d_{r1}, Yj = d_{rj}
    for i, s in enumerate(S, start=1):
        x_rest = S[: i - 1] + S[i:]
        for j, r in enumerate(R, start=1):
            y_rest = R[: j - 1] + R[j:]
            sign = -1 if (i + j) % 2 else 1
            # [Xi, Yj] = (Xi coeff) d_s(Yj coeff) d_r - (Yj coeff) d_r(Xi coeff) d_s
            e = b[s]
            if j == 1 and e:
                coef = cd * (e * sign)
                _add(out, _shift(a, b, s), (r,) + x_rest + y_rest, coef)
            e = a[r]
            if i == 1 and e:
                coef = cd * (-e * sign)
                _add(out, _shift(a, b, r), (s,) + x_rest + y_rest, coef)


def schouten(P: PolyMultivector, Q: PolyMultivector) -> PolyMultivector:
    """Schouten-Nijenhuis bracket ``[P, Q]``, extended bilinearly over terms."""
    P._check(Q)
    out: dict = {}
    for (a, S), c in P.terms.items():
        for (b, R), d in Q.terms.items():
            _bracket_terms(a, S, c, b, R, d, out)
    return PolyMultivector._raw(P.ambient, out)


def wedge_poly(P: PolyMultivector, Q: PolyMultivector) -> PolyMultivector:
    """Exterior product; coefficients multiply as polynomials."""
    P._check(Q)
    out: dict = {}
    for (a, S), c in P.terms.items():
        for (b, R), d in Q.terms.items():
            _add(out, _shift(a, b), S + R, c * d)
    return PolyMultivector._raw(P.ambient, out)


def toric_bivector(Pi, homogeneous: bool) -> PolyMultivector:
    """Lift ``sum_{i<j} a_ij v_i ^ v_j`` with ``v_i = z_i d_i`` to polynomial form.

    With ``homogeneous=True`` the ambient has variables z_0..z_n and the
    structure lives on z_1..z_n; otherwise variables z_1..z_n are numbered
    0..n-1.
    """
    n = Pi.n
    amb = n + 1 if homogeneous else n
    off = 1 if homogeneous else 0
    terms = {}
    for i in range(n):
        for j in range(i + 1, n):
            a = Pi.A[i][j]
            if a:
                exps = [0] * amb
                exps[i + off] += 1
                exps[j + off] += 1
                terms[(tuple(exps), (i + off, j + off))] = a
    return PolyMultivector(amb, terms)


def euler_field(ambient: int) -> PolyMultivector:
    """``sum_i z_i d_i``."""
    terms = {}
    for i in range(ambient):
        exps = [0] * ambient
        exps[i] = 1
        terms[(tuple(exps), (i,))] = ONE
    return PolyMultivector(ambient, terms)

