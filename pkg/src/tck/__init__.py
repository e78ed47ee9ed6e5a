"""Minimal generating sets of tangent cone ideals of 3-generated
numerical semigroup rings, with independent verification."""

from .betti_monomial import (
    BettiTable,
    betti_numbers,
    betti_numbers_taylor,
    check_theorem_bounds,
    cyclic_polytope_face_count,
    euler_check,
    initial_ideal,
    k_ab_threshold,
)
from .errors import TckError, ValidationError
from .fraction_tools import min_fraction_in_interval, phi
from .groebner_mini import GroebnerBasis, Polynomial, buchberger, ideal_member
from .oracle import OracleConfig, VerificationReport, enumerate_initial_forms, verify_prediction
from .semigroup_core import (
    CASE_TAGS,
    Binomial,
    Semigroup,
    StructureData,
    compute_structure,
    homogeneous_part,
    initial_form,
    lattice_basis,
    validate_semigroup,
)
from .tangent_cone import (
    Generator,
    GeneratorSet,
    build_A,
    build_B,
    mu_bound_check,
    solve_homogeneous_coeffs,
    tangent_cone_generators,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "Binomial",
    "CASE_TAGS",
    "Generator",
    "GeneratorSet",
    "GroebnerBasis",
    "OracleConfig",
    "Polynomial",
    "Semigroup",
    "StructureData",
    "TckError",
    "ValidationError",
    "VerificationReport",
    "betti_numbers",
    "betti_numbers_taylor",
    "buchberger",
    "build_A",
    "build_B",
    "check_theorem_bounds",
    "compute_structure",
    "cyclic_polytope_face_count",
    "enumerate_initial_forms",
    "euler_check",
    "homogeneous_part",
    "ideal_member",
    "initial_form",
    "initial_ideal",
    "k_ab_threshold",
    "lattice_basis",
    "min_fraction_in_interval",
    "mu_bound_check",
    "phi",
    "solve_homogeneous_coeffs",
    "tangent_cone_generators",
    "validate_semigroup",
    "verify_prediction",
]
