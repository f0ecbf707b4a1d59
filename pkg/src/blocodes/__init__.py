"""Bivariate linear operator codes.

Encoders for permuted product, folded Reed-Solomon, and generic
operator-family codes; a list decoder built on bivariate interpolation and
an exact linear solve; executable checks for the decodability conditions;
and a brute-force oracle for desk-scale certification.
"""

from .errors import BudgetError, DecodingInvariantError, PlanError
from .field import Felt, FieldDesc, element_order, find_order_element
from .poly import AffineMap, BiPoly, PolyMatrix, eval_matrix
from .operators import (ExtendibilityWitness, HMapTable, MatrixOp, OperatorFamily,
                        SubstitutionOp, check_degree_preserving, diag, diag_distance,
                        family_from_one, ideal_closure_check, operator_matrix,
                        power_family, selection_h, verify_extendibility,
                        verify_list_composition)
from .codes import (BloInstance, Codeword, FrsParams, PpcParams, brute_force_min_distance,
                    column_distance, corrupt_codeword, encode_blo, encode_ppc_direct,
                    encoding_matrix, frs_as_blo, frs_encode_direct, ppc_to_blelo,
                    random_message, rate, rs_code, tcode_distance_ppc)
from .listdecode import (DecodeOutcome, DecodingPlan, InterpolationResult, PlanReport,
                         SolveDiagnostics, build_plan, build_solve_system,
                         decode_with_diagnostics, evaluate_plan, interpolate,
                         kernel_enumerate, leading_diagnostics, list_decode,
                         verify_interpolation)
from .oracle import CrossCheckReport, OracleBudget, TrialRecord, oracle_cross_check, oracle_list_decode

__all__ = [
    "AffineMap", "BiPoly", "BloInstance", "BudgetError", "Codeword",
    "CrossCheckReport", "DecodeOutcome", "DecodingInvariantError", "DecodingPlan",
    "ExtendibilityWitness", "Felt", "FieldDesc", "FrsParams", "HMapTable",
    "InterpolationResult", "MatrixOp", "OperatorFamily", "OracleBudget",
    "PlanError", "PlanReport", "PolyMatrix", "PpcParams", "SolveDiagnostics",
    "SubstitutionOp", "TrialRecord", "brute_force_min_distance", "build_plan",
    "build_solve_system", "check_degree_preserving", "column_distance",
    "corrupt_codeword", "decode_with_diagnostics", "diag", "diag_distance",
    "element_order", "encode_blo", "encode_ppc_direct", "encoding_matrix",
    "eval_matrix", "evaluate_plan", "family_from_one", "find_order_element",
    "frs_as_blo", "frs_encode_direct", "ideal_closure_check", "interpolate",
    "kernel_enumerate", "leading_diagnostics", "list_decode", "operator_matrix",
    "oracle_cross_check", "oracle_list_decode", "power_family", "ppc_to_blelo",
    "random_message", "rate", "rs_code", "selection_h", "tcode_distance_ppc",
    "verify_extendibility", "verify_interpolation", "verify_list_composition",
]

__version__ = "0.1.0"
