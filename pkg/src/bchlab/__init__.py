"""Cyclic and negacyclic BCH codes of length (q^m - 1)/2 over GF(q).

Finite-field arithmetic, cyclotomic cosets, code construction, weight and
distance analysis, closed-form parameter formulas, and a harness that checks
the formulas against brute-force oracles.
"""

from bchlab.analysis import (
    WeightEnumerator,
    bch_bound,
    is_dually_bch,
    macwilliams_transform,
    min_distance,
    weight_enumerator_exhaustive,
    weights_via_dual,
)
from bchlab.claims import ParamClaim
from bchlab.codes import (
    CodeSpec,
    DefiningSet,
    LinearCodeModel,
    bch_code,
    bch_dimension,
    code_length,
    dual_code,
    parity_check_polynomial,
)
from bchlab.cyclotomic import coset, coset_leader, leader_table
from bchlab.errors import BchLabError, BudgetExceeded, OutOfRange
from bchlab.field import ExtensionField, FieldElement, build_field
from bchlab.harness import Grid, VerificationReport, run_suite
from bchlab.kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BchLabError",
    "BudgetExceeded",
    "CodeSpec",
    "DefiningSet",
    "ExtensionField",
    "FieldElement",
    "Grid",
    "LinearCodeModel",
    "OutOfRange",
    "ParamClaim",
    "VerificationReport",
    "WeightEnumerator",
    "bch_bound",
    "bch_code",
    "bch_dimension",
    "build_field",
    "code_length",
    "coset",
    "coset_leader",
    "dual_code",
    "is_dually_bch",
    "leader_table",
    "macwilliams_transform",
    "min_distance",
    "parity_check_polynomial",
    "run_suite",
    "weight_enumerator_exhaustive",
    "weights_via_dual",
]
