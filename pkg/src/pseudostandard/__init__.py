"""Generalized pseudostandard words and normalization of their directive bi-sequences."""

from .binary import normalize_binary
from .generation import (
    DirectiveBiSeq,
    PalPrefixRecord,
    build_prefixes,
    generate_word,
    iter_prefixes,
    pseudopalindromic_prefixes,
)
from .naive import OracleError, is_normalized, missed_prefix_counts, naive_normalize
from .normalizer import (
    LetterSubstitution,
    NormalizationError,
    NormalizationOutcome,
    RuleMatch,
    apply_rule,
    find_applicable_rule,
    normalize,
    preprocess_unary_prefix,
    reorder_letters,
)
from .words import (
    BINARY,
    TERNARY,
    Alphabet,
    Antimorphism,
    InvalidInputError,
    apply_antimorphism,
    is_theta_palindrome,
    longest_theta_pal_suffix,
    palindromic_closure,
    pseudopalindrome_types,
)

__all__ = [name for name in dir() if not name.startswith("_")]
