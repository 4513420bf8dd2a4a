"""Exact computations with the Lie algebras W(a,b) and Vir(a,b) and their
rank-one free modules on the polynomial space C[s, t].

Everything is computed over Q(i) with exact arithmetic: bracket tables and
their axiom sweeps, the two module families and their verification, the
constraint solver that recovers canonical parameters from candidate action
data (or returns an infeasibility certificate), isomorphism decisions, and
submodule exploration.
"""

from .algebra import (
    AlgebraParams,
    AlgElement,
    BasisSymbol,
    C,
    Case,
    L,
    W,
    bracket,
    bracket_lin,
    classify_case,
    format_element,
    verify_algebra,
)
from .classify import (
    CandidateFamily,
    CanonicalParams,
    InfeasibilityCertificate,
    check_W_commutation,
    check_constraints,
    extract_h_coeffs,
    isom_decide,
    solve_candidate,
    solve_from_generators,
)
from .grammar import parse_bipoly, parse_element, parse_symbol, parse_unipoly
from .orbit import SubspaceBasis, check_invariant_subspace, orbit_closure
from .polynomials import BiPoly, UniPoly, divided_difference, format_bipoly, format_unipoly
from .report import Failure, Report
from .repmod import (
    Family,
    GenericFamily,
    HSeq,
    ModuleSpec,
    act_C,
    act_L,
    act_W,
    act_element,
    act_sym,
    apply_enveloping,
    generic_act_L,
    generic_act_W,
    q_poly,
    verify_module,
)
from .scalars import ParseError, Scalar, format_scalar, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "AlgElement",
    "AlgebraParams",
    "BasisSymbol",
    "BiPoly",
    "C",
    "CandidateFamily",
    "CanonicalParams",
    "Case",
    "Failure",
    "Family",
    "GenericFamily",
    "HSeq",
    "InfeasibilityCertificate",
    "L",
    "ModuleSpec",
    "ParseError",
    "Report",
    "Scalar",
    "SubspaceBasis",
    "UniPoly",
    "W",
    "act_C",
    "act_L",
    "act_W",
    "act_element",
    "act_sym",
    "apply_enveloping",
    "bracket",
    "bracket_lin",
    "check_W_commutation",
    "check_constraints",
    "check_invariant_subspace",
    "classify_case",
    "divided_difference",
    "extract_h_coeffs",
    "format_bipoly",
    "format_element",
    "format_scalar",
    "format_unipoly",
    "generic_act_L",
    "generic_act_W",
    "isom_decide",
    "orbit_closure",
    "parse_bipoly",
    "parse_element",
    "parse_scalar",
    "parse_symbol",
    "parse_unipoly",
    "q_poly",
    "solve_candidate",
    "solve_from_generators",
    "verify_algebra",
    "verify_module",
    "__version__",
]
