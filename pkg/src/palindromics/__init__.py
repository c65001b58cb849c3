"""Palindromic factors of finite words and lazily generated infinite words."""

from .analysis import (
    ClosureReport,
    CompleteReturns,
    PalReport,
    StabilizedPalSet,
    complete_first_returns,
    is_rich,
    longest_palindrome,
    pal_set,
    reversal_closure_check,
    stabilized_pal_set,
)
from .claims import (
    CLAIMS,
    ClaimVerdict,
    ReturnFamilyClaim,
    manifest,
    minpal_scan,
    replay_return_witness,
    run_all,
    run_claim,
    run_return_family_claim,
)
from .generators import (
    FibonacciStream,
    FixedPointStream,
    ImageStream,
    PeriodicStream,
    ReversalClosureStream,
    UnknownGeneratorError,
    fibonacci,
    fixed_point,
    image,
    paperfolding,
    parse_generator_spec,
    periodic,
    preset_names,
    resolve_generator,
    reversal_closure,
)
from .paltree import PalTree
from .search import (
    ConstraintSet,
    FamilyTemplate,
    deepest_word,
    enumerate_words,
    forbid_other_palindromes,
    scan_complete_returns,
)
from .streams import PrefixStream, ShiftedStream, shift
from .words import (
    Alphabet,
    IsoClass,
    Morphism,
    Word,
    alph,
    canonical_class,
    canonical_renaming,
    dump_words,
    factors,
    least_period,
    load_words,
    max_run,
    occurrences,
    reverse,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CLAIMS",
    "ClaimVerdict",
    "ClosureReport",
    "CompleteReturns",
    "ConstraintSet",
    "FamilyTemplate",
    "FibonacciStream",
    "FixedPointStream",
    "ImageStream",
    "IsoClass",
    "Morphism",
    "PalReport",
    "PalTree",
    "PeriodicStream",
    "PrefixStream",
    "ReturnFamilyClaim",
    "ReversalClosureStream",
    "ShiftedStream",
    "StabilizedPalSet",
    "UnknownGeneratorError",
    "Word",
    "alph",
    "canonical_class",
    "canonical_renaming",
    "complete_first_returns",
    "deepest_word",
    "dump_words",
    "enumerate_words",
    "factors",
    "fibonacci",
    "fixed_point",
    "forbid_other_palindromes",
    "image",
    "is_rich",
    "least_period",
    "load_words",
    "longest_palindrome",
    "manifest",
    "max_run",
    "minpal_scan",
    "occurrences",
    "pal_set",
    "paperfolding",
    "parse_generator_spec",
    "periodic",
    "preset_names",
    "replay_return_witness",
    "resolve_generator",
    "reversal_closure",
    "reversal_closure_check",
    "reverse",
    "run_all",
    "run_claim",
    "run_return_family_claim",
    "scan_complete_returns",
    "shift",
    "stabilized_pal_set",
]
