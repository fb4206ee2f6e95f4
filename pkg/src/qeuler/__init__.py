"""Generalized higher-order q-Euler polynomials attached to Dirichlet
characters, the multiple q-l-function interpolating them, alternating
character power sums, and machine verification of the symmetry identities
relating all three on finite parameter grids with certified truncation error.
"""

from .characters import (
    CharacterGroup,
    CharConvSeq,
    DirichletCharacter,
    bounded_composition_sums,
    build_character_group,
    conv_power,
    eval_char,
)
from .errors import (
    BudgetExceeded,
    DomainError,
    NegativeArgument,
    NotOdd,
    Overflow,
    ParityViolation,
    PlanInfeasible,
    QEulerError,
    UsageError,
)
from .identities import (
    SweepGrid,
    SymmetryInstance,
    eq12_bridge,
    eq15_sides,
    power_sum,
    run_suite,
    theorem1_sides,
    theorem2_sides,
    theorem3_sides,
)
from .lfun import LfunSpec, lfun_eval, lfun_value, power_weight_bound, verify_interpolation
from .polynomials import (
    QEulerSpec,
    qeuler_addition,
    qeuler_poly,
    qeuler_poly_naive,
    qeuler_value,
)
from .qnum import (
    DEFAULT_EPSILON,
    DEFAULT_MAX_TERMS,
    QContext,
    TruncationPlan,
    plan_truncation,
    plan_truncation_weighted,
    q_bracket_two_pow,
    q_number,
)
from .report import IDENTITY_IDS, IdentityReport, reports_to_json_lines, suite_passed

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CharacterGroup",
    "CharConvSeq",
    "DEFAULT_EPSILON",
    "DEFAULT_MAX_TERMS",
    "DirichletCharacter",
    "DomainError",
    "IDENTITY_IDS",
    "IdentityReport",
    "LfunSpec",
    "NegativeArgument",
    "NotOdd",
    "Overflow",
    "ParityViolation",
    "PlanInfeasible",
    "QContext",
    "QEulerError",
    "QEulerSpec",
    "SweepGrid",
    "SymmetryInstance",
    "TruncationPlan",
    "UsageError",
    "bounded_composition_sums",
    "build_character_group",
    "conv_power",
    "eq12_bridge",
    "eq15_sides",
    "eval_char",
    "lfun_eval",
    "lfun_value",
    "plan_truncation",
    "plan_truncation_weighted",
    "power_sum",
    "power_weight_bound",
    "q_bracket_two_pow",
    "q_number",
    "qeuler_addition",
    "qeuler_poly",
    "qeuler_poly_naive",
    "qeuler_value",
    "reports_to_json_lines",
    "run_suite",
    "suite_passed",
    "theorem1_sides",
    "theorem2_sides",
    "theorem3_sides",
    "verify_interpolation",
]
