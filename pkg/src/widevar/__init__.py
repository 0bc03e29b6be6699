"""Wide varieties of monotone Lagrangian tori: critical sets of Laurent
superpotentials, discriminants, residue identities and two-torus algebra."""
from .catalog import catalog
from .critsolve import SolverConfig, morse_certify, solve_critical_points
from .fan import FanData, SuperpotentialSpec, build_superpotential, general_superpotential, validate_fan
from .invariants import discriminant_hessian, discriminant_minorsum, discriminant_vector
from .laurent import LaurentPolynomial

__all__ = [
    "FanData", "LaurentPolynomial", "SolverConfig", "SuperpotentialSpec", "build_superpotential",
    "catalog", "discriminant_hessian", "discriminant_minorsum", "discriminant_vector",
    "general_superpotential", "morse_certify", "solve_critical_points", "validate_fan",
]
