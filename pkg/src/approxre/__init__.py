"""Approximate regular expressions matched exactly with derivatives."""

from .automata import Automaton, bounded_equiv, build_dfa, build_nfa, run, to_dot, to_table
from .comparison import (
    BOT,
    EPS,
    CostFunction,
    cost_common_target,
    cost_reverse,
    cost_symmetrize,
    hamming,
    levenshtein,
    subword,
    word_compare,
)
from .derivation import DerivationSession
from .errors import AlphabetError, AreError, CostFileError, ParseError, ResourceError, UnsupportedError
from .expr import Are, canonicalize, to_str
from .syntax import CostRegistry, parse_are

__version__ = "0.1.0"
