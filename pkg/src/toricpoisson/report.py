"""Cohomology reports shared by the closed-form engine and the oracle."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .exterior import ExtElement, wedge
from .toric import PoissonStructure, Space, Weight, canonical_key, frame, full_profile, profile

__all__ = ["INFINITE", "MissingDegreeBound", "BasisDescriptor", "DegreeEntry", "CohomologyReport", "monomial_label"]

INFINITE = "infinite"


class MissingDegreeBound(ValueError):
    """An affine computation needs a degree bound that was not given."""


def monomial_label(space: Space, exponents) -> str:
    offset = 0 if space.is_projective else 1
    parts = []
    for i, e in enumerate(exponents):
        if e == 0:
            continue
        parts.append(f"z{i + offset}" if e == 1 else f"z{i + offset}^{e}")
    return " ".join(parts) or "1"


def multivector_label(elem: ExtElement) -> str:
    """Render an element of the exterior algebra on v_1..v_n."""
    if elem.degree == 0:
        return str(elem.terms.get((), 0))
    terms = []
    for key, c in sorted(elem.terms.items()):
        mono = "^".join(f"v{i}" for i in key)
        s = str(c)
        if s == "1":
            terms.append(("+", mono))
        elif s == "-1":
            terms.append(("-", mono))
        elif c.is_real and c.re < 0:
            terms.append(("-", f"{str(-c)}*{mono}"))
        else:
            terms.append(("+", f"({s})*{mono}" if not c.is_real else f"{s}*{mono}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return f"({out})" if len(terms) > 1 else out


@dataclass(frozen=True)
class BasisDescriptor:
    """One basis element ``chi^I * V_I ^ v_complement`` of a weight space."""

    space: Space
    weight: Weight
    frame_indices: tuple
    complement: tuple

    @property
    def chi_exponents(self) -> tuple:
        return full_profile(self.space, self.weight)

    @property
    def degree(self) -> int:
        return len(self.frame_indices) + len(self.complement)

    def element(self) -> ExtElement:
        """The multivector part, expanded on v_1..v_n (v_0 = -(v_1+...+v_n)).

        Scaled so that the lexicographically first term has coefficient 1.
        """
        n = self.space.n
        out = frame(self.space, profile(self.space, self.weight))
        for j in self.complement:
            out = wedge(out, ExtElement.basis(n, j))
        lead = out.terms[min(out.terms)]
        return out.scale(lead.inverse())

    def label(self) -> str:
        mono = monomial_label(self.space, self.chi_exponents)
        if self.degree == 0:
            return mono
        vec = multivector_label(self.element())
        return vec if mono == "1" else f"{mono} · {vec}"

    def to_json(self) -> dict:
        return {
            "full": list(self.chi_exponents),
            "frame": list(self.frame_indices),
            "complement": list(self.complement),
            "label": self.label(),
        }


@dataclass
class DegreeEntry:
    k: int
    weights: list = field(default_factory=list)  # (Weight, multiplicity) in canonical order
    dim: object = 0  # int or INFINITE
    truncated: bool = False
    witnesses: list = field(default_factory=list)  # patterns T of infinite families
    basis: Optional[list] = None

    @property
    def infinite(self) -> bool:
        return self.dim == INFINITE

    def multiplicities(self) -> dict:
        return {w: m for w, m in self.weights}


@dataclass
class CohomologyReport:
    space: Space
    poisson: PoissonStructure
    entries: list
    source: str = "closed"
    k_max: int = 0
    degree_bound: Optional[int] = None

    def entry(self, k: int) -> DegreeEntry:
        for e in self.entries:
            if e.k == k:
                return e
        raise KeyError(k)

    def dims(self) -> tuple:
        return tuple(e.dim for e in self.entries)

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        data = {
            "space": self.space.to_json(),
            "poisson": self.poisson.entries_json(),
            "source": self.source,
            "k_max": self.k_max,
            "degree_bound": self.degree_bound,
            "H": [],
        }
        if not self.space.is_projective:
            data["models"] = ["algebraic (direct sum over weights)", "formal (direct product over weights)"]
        with_basis = any(e.basis is not None for e in self.entries)
        for e in self.entries:
            item = {
                "k": e.k,
                "dim": e.dim,
                "weights": [
                    {"full": list(full_profile(self.space, w)), "mult": m} for w, m in e.weights
                ],
            }
            if e.truncated:
                item["truncated"] = True
            if e.witnesses:
                item["witness_patterns"] = [list(t) for t in e.witnesses]
            data["H"].append(item)
        if with_basis:
            data["basis"] = [
                {"k": e.k, "elements": [b.to_json() for b in (e.basis or [])]} for e in self.entries
            ]
        return data

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, data) -> "CohomologyReport":
        if isinstance(data, str):
            data = json.loads(data)
        space = Space.from_json(data["space"])
        poisson = PoissonStructure.from_json(data["poisson"], n=space.n)
        entries = []
        for item in data["H"]:
            weights = []
            for w in item["weights"]:
                full = w["full"]
                coords = full[1:] if space.is_projective else full
                weights.append((Weight(tuple(coords)), int(w["mult"])))
            entries.append(
                DegreeEntry(
                    k=int(item["k"]),
                    weights=weights,
                    dim=item["dim"],
                    truncated=bool(item.get("truncated", False)),
                    witnesses=[tuple(t) for t in item.get("witness_patterns", [])],
                )
            )
        for block in data.get("basis", []) or []:
            e = next(x for x in entries if x.k == block["k"])
            e.basis = [
                BasisDescriptor(
                    space,
                    Weight(tuple(b["full"][1:] if space.is_projective else b["full"])),
                    tuple(b["frame"]),
                    tuple(b["complement"]),
                )
                for b in block["elements"]
            ]
        return cls(
            space,
            poisson,
            entries,
            source=data.get("source", "closed"),
            k_max=int(data.get("k_max", len(entries) - 1)),
            degree_bound=data.get("degree_bound"),
        )

    # -- table --------------------------------------------------------------

    def to_table(self) -> str:
        poisson = ", ".join(f"a[{i},{j}]={a}" for i, j, a in self.poisson.upper_entries()) or "0"
        lines = [f"space: {self.space}   poisson: {poisson}   source: {self.source}"]
        if self.degree_bound is not None and not self.space.is_projective:
            lines[0] += f"   degree-bound: {self.degree_bound}"
        lines.append(f"{'k':>3}  {'dim':>8}  weights (mult)")
        for e in self.entries:
            ws = " ".join(
                "(" + ",".join(str(m) for m in full_profile(self.space, w)) + ")" + (f"x{m}" if m != 1 else "")
                for w, m in e.weights
            )
            note = ""
            if e.truncated:
                note = "  [truncated at degree bound]"
            if e.witnesses:
                note += "  infinite patterns: " + " ".join(
                    "{" + ",".join(map(str, t)) + "}" for t in e.witnesses
                )
            lines.append(f"{e.k:>3}  {str(e.dim):>8}  {ws or '-'}{note}")
            if e.basis is not None:
                for b in e.basis:
                    lines.append(f"{'':>15}{b.label()}")
        return "\n".join(lines) + "\n"


def sort_weights(space: Space, weights):
    return sorted(weights, key=lambda w: canonical_key(space, w))

