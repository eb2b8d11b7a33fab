"""Exact computation with augmented directed complexes and Steiner's ν construction."""
from .adc import (Adc, AdcHomotopy, AdcMorphism, compose_morphisms,
                  constant_morphism, identity_morphism, is_decent, j_dual,
                  validate_adc, validate_homotopy, validate_morphism)
from .chains import Chain, add, leq, meet, neg, pos_neg_parts
from .report import Report, Violation
from .simplicial import (Poset, SimplicialComplex, base_order_preccurlyeq,
                         chain_poset, chnorm_of_complex, count_kappa_simplices,
                         nerve_simplices, oriental, poset_oriental,
                         standard_simplex_adc, xi)
from .steiner import *  # noqa: F401,F403
from .steiner import __all__ as _steiner_all

__version__ = "0.1.0"

__all__ = [
    "Adc", "AdcHomotopy", "AdcMorphism", "Chain", "Poset", "Report",
    "SimplicialComplex", "Violation", "add", "base_order_preccurlyeq",
    "chain_poset", "chnorm_of_complex", "compose_morphisms",
    "constant_morphism", "count_kappa_simplices", "identity_morphism",
    "is_decent", "j_dual", "leq", "meet", "neg", "nerve_simplices",
    "oriental", "pos_neg_parts", "poset_oriental", "standard_simplex_adc",
    "validate_adc", "validate_homotopy", "validate_morphism", "xi",
] + list(_steiner_all)
