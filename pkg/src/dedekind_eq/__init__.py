"""Exact Dedekind sums and the equality S(c, b) = S(d, b)."""

from .arith import (
    BoundExceeded,
    ModuliNotCoprime,
    NotCoprime,
    NotPrime,
    crt,
    factor_squarefree,
    format_rational,
    gcd,
    is_prime,
    mod_inverse,
    parse_rational,
    sqrt_mod_p,
)
from .core import (
    ArgPair,
    dedekind_S,
    dedekind_s_fast,
    dedekind_s_naive,
    is_zero_sum_argument,
    sawtooth,
)
from .equality import (
    Condition2Violated,
    CongruentArguments,
    ThreeTermInstance,
    condition2,
    least_positive_t,
    lemma1_holds,
    proposition1_residual,
    theorem1_decide,
    three_term_residual,
)
from .suitable import (
    NotSuitable,
    SequenceState,
    SuitableSet,
    derived_sets,
    generate_sequence,
    is_suitable,
    ratio_trace,
    theorem2_step,
)
from .construct import (
    Theorem3Family,
    Theorem3Input,
    build_family,
    validate_input,
    verify_family_exact_count,
)
from .census import (
    CensusReport,
    SearchHit,
    count_equal,
    full_census,
    search_suitable_pairs,
    squarefree_bound_check,
)

__version__ = "0.1.0"
