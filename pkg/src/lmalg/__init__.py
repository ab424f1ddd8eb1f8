"""Finite Lukasiewicz-Moisil algebras, their Boolean-ideal representations, and Stone-type dualities."""

from .boolalg import (
    BooleanHom,
    FiniteBooleanAlgebra,
    Ideal,
    Ultrafilter,
    check_ideal,
    hom_from_atom_map,
    ideal_from_generator,
    mk_powerset_algebra,
    ultrafilters,
    validate_hom,
)
from .errors import (
    BoundError,
    InvariantError,
    LMAlgError,
    PreconditionError,
    SignatureError,
    VerificationError,
)
from .lm import (
    LMAlgebra,
    LMHom,
    boolean_center,
    canonical,
    check_axioms,
    check_derived_props,
    j_to_phi,
    moisil_represent,
    phi_to_j,
    subalgebra_generated,
    validate_lm_hom,
)
from .construct import (
    IdealSequenceObject,
    build_J,
    build_T,
    check_adjunction,
    check_cat_equivalence,
    lambda_functor,
    sigma_functor,
)
from .mvn import MVAlgebra, check_l_proper, check_mv_axioms, check_mvn_axioms, check_somv_condition, mv_chain, mv_term
from .report import AxiomReport, LawResult
from .stone import FiniteSpaceWithOpens, check_stone_roundtrip, theta_a, theta_t

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "BooleanHom",
    "BoundError",
    "FiniteBooleanAlgebra",
    "FiniteSpaceWithOpens",
    "Ideal",
    "IdealSequenceObject",
    "InvariantError",
    "LMAlgError",
    "LMAlgebra",
    "LMHom",
    "LawResult",
    "MVAlgebra",
    "PreconditionError",
    "SignatureError",
    "Ultrafilter",
    "VerificationError",
    "boolean_center",
    "build_J",
    "build_T",
    "canonical",
    "check_adjunction",
    "check_axioms",
    "check_cat_equivalence",
    "check_derived_props",
    "check_ideal",
    "check_l_proper",
    "check_mv_axioms",
    "check_mvn_axioms",
    "check_somv_condition",
    "check_stone_roundtrip",
    "hom_from_atom_map",
    "ideal_from_generator",
    "j_to_phi",
    "lambda_functor",
    "mk_powerset_algebra",
    "moisil_represent",
    "mv_chain",
    "mv_term",
    "phi_to_j",
    "sigma_functor",
    "subalgebra_generated",
    "theta_a",
    "theta_t",
    "ultrafilters",
    "validate_hom",
    "validate_lm_hom",
]
