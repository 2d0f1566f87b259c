"""Exact flag-variety cohomology combinatorics and null-cone verdicts.

Everything is computed over the rationals with exact arithmetic.  The
package covers root systems A_1..A_7 and B_2, the shifted Weyl-group
action, weight multisets of homogeneous bundle expressions, line-bundle
cohomology, potential cohomology supports of tensor powers of the Borel
subalgebra bundle, formal module decomposition, a ledger of established
cohomology modules with a spectral-page verdict engine, and an exact
membership test for the null cone of commuting-variety-style matrix
tuples.
"""

from __future__ import annotations

from . import bundles, bwb, ledger, nullcone, repthy, rootsys, weyl
from ._kernels import backend_name
from .bundles import WeightMultiset, dim, parse, unparse, weights
from .bwb import (LineCohomology, PotentialSupport, distinct_roots_check,
                  euler_characteristic, euler_from_psupp, kostant_check,
                  line_cohomology, psupp)
from .errors import (CheckFailed, Error, ExprSyntaxError, InputError,
                     InvalidWeight, LedgerGap, NonIntegralWeight, NotAGModule,
                     NotDominant, NotStrictlyUpper, NotTraceFree,
                     SingularMatrix, SizeCapExceeded, UnknownAtom,
                     UnsupportedFamilyRank, ValidationFailure)
from .ledger import (CohomologyTable, EPage, Verdict, Witness, builtin_tables,
                     certain_survivors, e_page, ensure_valid, load_table,
                     save_table, validate_table, verdict)
from .nullcone import (Flag, MatrixTuple, common_flag, in_nullcone,
                       resolution_sample, triangularize, tuple_from_json,
                       tuple_to_json)
from .repthy import (FormalGModule, decompose, decompose_multiset,
                     invariant_dim, irrep_character, mult_in, weyl_dim)
from .rootsys import (Root, RootSystem, build_root_system, format_weight,
                      invariant_form, parse_weight)
from .weyl import (act, dot, enumerate_elements, inversion_set, length,
                   reduce_word, to_dominant)

__version__ = "0.1.0"

__all__ = [
    "__version__", "backend_name",
    "rootsys", "weyl", "bundles", "bwb", "repthy", "nullcone", "ledger",
    "Root", "RootSystem", "build_root_system", "format_weight",
    "invariant_form", "parse_weight",
    "act", "dot", "enumerate_elements", "inversion_set", "length",
    "reduce_word", "to_dominant",
    "WeightMultiset", "dim", "parse", "unparse", "weights",
    "LineCohomology", "PotentialSupport", "distinct_roots_check",
    "euler_characteristic", "euler_from_psupp", "kostant_check",
    "line_cohomology", "psupp",
    "FormalGModule", "decompose", "decompose_multiset", "invariant_dim",
    "irrep_character", "mult_in", "weyl_dim",
    "Flag", "MatrixTuple", "common_flag", "in_nullcone", "resolution_sample",
    "triangularize", "tuple_from_json", "tuple_to_json",
    "CohomologyTable", "EPage", "Verdict", "Witness", "builtin_tables",
    "certain_survivors", "e_page", "ensure_valid", "load_table", "save_table",
    "validate_table", "verdict",
    "Error", "InputError", "UnsupportedFamilyRank", "NonIntegralWeight",
    "NotDominant", "ExprSyntaxError", "UnknownAtom", "InvalidWeight",
    "NotAGModule", "SizeCapExceeded", "CheckFailed", "ValidationFailure",
    "LedgerGap", "NotTraceFree", "NotStrictlyUpper", "SingularMatrix",
]
