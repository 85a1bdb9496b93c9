"""Iterated belief revision by conditionals over connected preorders.

Four revision operators (natural, line-down, uncontingent, lexicographic),
an analysis toolkit (closeness, naivety, conditional preservation, the
CR postulates, recalcitrance), a brute-force enumeration oracle, and a
script-driven CLI.
"""

from .analysis import (
    AlphabetMismatchError,
    PostulateVerdict,
    RecalcitranceVerdict,
    Strength,
    at_least_as_close,
    at_least_as_naive,
    check_postulate,
    diff,
    preserves_conditionals,
    recalcitrance_check,
    strength,
    supernaive_order,
)
from .logic import (
    Alphabet,
    Conditional,
    Formula,
    LogicError,
    Model,
    ParseError,
    UnknownVariableError,
    eval_formula,
    formula_from_models,
    models_of,
    parse_conditional,
    parse_formula,
)
from .oracle import (
    FUBINI,
    UniverseTooLargeError,
    enumerate_orders,
    minimal_satisfying,
    mutually_satisfiable,
    uncontingent_minimal,
    unique_naive_check,
)
from .preorder import (
    CoverageError,
    EmptySetError,
    Order,
    OrderError,
    OverlapError,
    classify,
    flat,
    normalize,
    order_from_json,
    order_to_json,
    positive,
    render_order,
    render_order_json,
    satisfies,
)
from .revision import (
    DOW,
    LEX,
    NAT,
    OPERATOR_KINDS,
    UNC,
    InconsistentFormulaError,
    RevisionError,
    UnsatisfiableConditionalError,
    contingent_context,
    dow,
    lex,
    lex_prop,
    nat,
    nat_prop,
    revise,
    unc,
)
from .script import ScriptError, run_script
from .verify import SCOPES, run_suite

__version__ = "0.1.0"
