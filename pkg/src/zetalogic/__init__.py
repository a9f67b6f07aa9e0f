"""Three-valued propositional logics, the square of opposition, and zeta numerics."""

from .formula import (
    And,
    Assert,
    Atom,
    Formula,
    FormulaSyntaxError,
    Iff,
    Implies,
    Not,
    Or,
    atoms,
    parse,
    render,
)
from .semantics import (
    LogicSystem,
    SemanticError,
    TruthValue,
    builtin_logics,
    classify_laws,
    entails,
    evaluate,
    get_logic,
    is_tautology,
    truth_table,
)
from .square import (
    CaseVerdict,
    CategoricalProposition,
    FiniteModel,
    SquareVerdict,
    case_study_pnp,
    case_study_rh,
    eval_categorical,
    square_report,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "Assert",
    "Atom",
    "Formula",
    "FormulaSyntaxError",
    "Iff",
    "Implies",
    "Not",
    "Or",
    "atoms",
    "parse",
    "render",
    "LogicSystem",
    "SemanticError",
    "TruthValue",
    "builtin_logics",
    "classify_laws",
    "entails",
    "evaluate",
    "get_logic",
    "is_tautology",
    "truth_table",
    "CaseVerdict",
    "CategoricalProposition",
    "FiniteModel",
    "SquareVerdict",
    "case_study_pnp",
    "case_study_rh",
    "eval_categorical",
    "square_report",
]
