"""Steiner's ν construction on a complex with a basis."""
from .atoms import (atom, atom_face_formula, atom_is_cell, atom_table,
                    check_loop_free, check_strongly_loop_free, check_unitary)
from .cells import (Cell, compose, compose_chain, dual_cell, identity,
                    is_identity, iterated_source, iterated_target,
                    lambda_counit, pad, source, target, validate_cell)
from .decompose import decompose_cell, evaluate_expression
from .laws import check_category_laws
from .enumeration import CellEnumeration, default_cap, enumerate_cells, enumerate_hom
from .truncation import GlobularData, Truncation, globular_from_cells, truncate_intelligent

__all__ = [
    "Cell", "CellEnumeration", "check_category_laws", "GlobularData", "Truncation", "atom",
    "atom_face_formula", "atom_is_cell", "atom_table", "check_loop_free",
    "check_strongly_loop_free", "check_unitary", "compose", "compose_chain",
    "decompose_cell", "default_cap", "dual_cell", "enumerate_cells",
    "enumerate_hom", "evaluate_expression", "globular_from_cells", "identity",
    "is_identity", "iterated_source", "iterated_target", "lambda_counit",
    "pad", "source", "target", "truncate_intelligent", "validate_cell",
]
