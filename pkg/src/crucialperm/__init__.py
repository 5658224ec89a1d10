"""Crucial permutations with respect to monotone patterns."""

from .crucial import (
    TYPES,
    CrucialClass,
    classify_direct,
    classify_rsk,
    counterexample_quadrocrucial,
    has_type,
    minimal_length,
    minimal_quadrocrucial,
    minimal_top_right,
)
from .enumeration import CountReport, count_brute, count_formula, count_syt, list_brute, list_syt
from .errors import BruteForceCapError, CrucialError, InvalidInputError, UnsupportedError
from .perm import (
    PatternSpec,
    Permutation,
    avoids,
    complement,
    extend_above,
    extend_below,
    extend_left,
    extend_right,
    inverse,
    parse_permutation,
    reduce,
    reverse,
)
from .tableaux import StandardTableau, Tableau, YoungShape, evacuation, rsk, rsk_inverse

__version__ = "0.1.0"

__all__ = [
    "TYPES", "CrucialClass", "classify_direct", "classify_rsk", "counterexample_quadrocrucial",
    "has_type", "minimal_length", "minimal_quadrocrucial", "minimal_top_right",
    "CountReport", "count_brute", "count_formula", "count_syt", "list_brute", "list_syt",
    "BruteForceCapError", "CrucialError", "InvalidInputError", "UnsupportedError",
    "PatternSpec", "Permutation", "avoids", "complement", "extend_above", "extend_below",
    "extend_left", "extend_right", "inverse", "parse_permutation", "reduce", "reverse",
    "StandardTableau", "Tableau", "YoungShape", "evacuation", "rsk", "rsk_inverse",
]
