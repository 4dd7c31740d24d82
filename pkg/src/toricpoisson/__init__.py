"""Poisson cohomology of holomorphic toric Poisson structures on CP^n and C^n."""

from .engine import cohomology, h0, recursion_check, symmetry_orbits
from .exterior import ExtElement, ExtVector, contract, wedge
from .oracle import cohomology_oracle, compare, d_pi_matrix, section_basis
from .report import INFINITE, CohomologyReport, MissingDegreeBound
from .scalar import Scalar, parse_scalar
from .schouten import PolyMultivector, schouten
from .solver import affine_pattern_solve, enumerate_affine, enumerate_S, enumerate_S_pi
from .toric import (
    PoissonStructure,
    Space,
    UnsupportedOperation,
    Weight,
    cocycle_condition,
    cyclic_shift,
    standard_structure,
)

__version__ = "0.1.0"

__all__ = [
    "CohomologyReport",
    "ExtElement",
    "ExtVector",
    "INFINITE",
    "MissingDegreeBound",
    "PoissonStructure",
    "PolyMultivector",
    "Scalar",
    "Space",
    "UnsupportedOperation",
    "Weight",
    "affine_pattern_solve",
    "cocycle_condition",
    "cohomology",
    "cohomology_oracle",
    "compare",
    "contract",
    "cyclic_shift",
    "d_pi_matrix",
    "enumerate_S",
    "enumerate_S_pi",
    "enumerate_affine",
    "h0",
    "parse_args",
    "parse_scalar",
    "recursion_check",
    "schouten",
    "section_basis",
    "standard_structure",
    "symmetry_orbits",
    "wedge",
]

from .cli import parse_args  # noqa: E402
