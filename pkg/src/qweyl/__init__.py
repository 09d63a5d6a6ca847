"""qweyl: exact normal ordering in the (q-deformed) Heisenberg algebra.

The package normal-orders words in the unital algebra generated by a, b
(and optionally a grading generator N) subject to

    a*b = sigma*b*a + r        r central, or r = F(N)

with exact rational-function coefficients, verifies a catalog of operator
identities (reporting exact residuals on failure, including the variants
that only hold after rescaling the constants by the central remainder), and
cross-validates the abstract engine against concrete representations on
polynomial spaces and truncated Fock matrices.

Hot kernels have a compiled (Cython) implementation with a pure-Python twin
selected at import time; see ``qweyl.BACKEND`` and benchmarks/.
"""

from ._backend import BACKEND
from .identities import (
    AbPowerExpansion,
    CaseResult,
    IdentityCase,
    NotExpressibleError,
    Report,
    Sl2qResult,
    Sl2qTriple,
    SuiteConfig,
    UnsupportedCaseError,
    annihilation_check,
    build,
    catalog_cases,
    expand_in_ab_powers,
    nf_poly_eval,
    sl2q_solve,
    sl2q_triple,
    solve_scalar_factor,
    suite,
    verify,
)
from .parser import (
    EvalError,
    ParseError,
    Statement,
    eval_npoly,
    eval_scalar,
    evaluate,
    parse,
    parse_script,
    parse_statement,
    print_canonical,
    run_script,
)
from .reps import (
    FockMatrix,
    FockRep,
    ParameterMismatchError,
    PolyRep,
    TruncationError,
    affine_fock,
    apply,
    check_identity_on_basis,
    delta_rep,
    delta_rep_finite_difference,
    diff_ab,
    diff_ba,
    fock_matrix,
    hq_fock,
    jackson,
    morphism_check,
    realize,
    rep_relation_check,
    sequence_residual,
)
from .scalar import (
    A,
    D,
    P,
    Poly1,
    Q,
    RatFun1,
    Scalar,
    ScalarDivisionError,
    ScalarError,
    SubstitutionError,
    one,
    qnum,
    qnum_double_alpha,
    qnum_symbolic,
    scalar_arith,
    substitute,
    symbol,
    zero,
)
from .verdict import Verdict
from .weyl import (
    NormalForm,
    Relation,
    RelationMismatchError,
    WordError,
    commutator,
    extended,
    grade,
    heisenberg,
    hq,
    mul,
    nf_of_word,
    power,
    render,
    substitute_params,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # coefficients
    "Scalar",
    "ScalarError",
    "ScalarDivisionError",
    "SubstitutionError",
    "Poly1",
    "RatFun1",
    "symbol",
    "zero",
    "one",
    "P",
    "Q",
    "A",
    "D",
    "qnum",
    "qnum_symbolic",
    "qnum_double_alpha",
    "scalar_arith",
    "substitute",
    # engine
    "Relation",
    "NormalForm",
    "RelationMismatchError",
    "WordError",
    "heisenberg",
    "hq",
    "extended",
    "nf_of_word",
    "mul",
    "power",
    "commutator",
    "grade",
    "substitute_params",
    "render",
    # identities
    "Verdict",
    "IdentityCase",
    "UnsupportedCaseError",
    "NotExpressibleError",
    "AbPowerExpansion",
    "Sl2qTriple",
    "Sl2qResult",
    "SuiteConfig",
    "CaseResult",
    "Report",
    "build",
    "verify",
    "solve_scalar_factor",
    "expand_in_ab_powers",
    "sl2q_triple",
    "sl2q_solve",
    "annihilation_check",
    "nf_poly_eval",
    "suite",
    "catalog_cases",
    # representations
    "PolyRep",
    "FockRep",
    "FockMatrix",
    "ParameterMismatchError",
    "TruncationError",
    "diff_ab",
    "diff_ba",
    "jackson",
    "delta_rep",
    "delta_rep_finite_difference",
    "apply",
    "rep_relation_check",
    "realize",
    "morphism_check",
    "check_identity_on_basis",
    "hq_fock",
    "affine_fock",
    "fock_matrix",
    "sequence_residual",
    # parsing
    "ParseError",
    "EvalError",
    "Statement",
    "parse",
    "evaluate",
    "eval_scalar",
    "eval_npoly",
    "print_canonical",
    "parse_statement",
    "parse_script",
    "run_script",
]
