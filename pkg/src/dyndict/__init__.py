"""Dynamic dictionary matching with a DAWG and an Aho-Corasick automaton."""
from .ac import AcAutomaton, AcState, get_fail_states, get_out_states
from .dawg import Dawg, DawgNode
from .dictionary import Dictionary, Occurrence
from .engine import DynamicDictionary
from .errors import (
    BadParams, CapExceeded, CycleCreated, DuplicatePattern, DyndictError,
    EmptyPattern, ParseError, RedundantMark, UnknownPattern,
)
from .matcher import DawgMatcher, chk, match_text
from .nma import LinkCutForest, NaiveForest, make_forest
from .stats import UpdateStats

__all__ = [
    "AcAutomaton", "AcState", "BadParams", "CapExceeded", "CycleCreated", "Dawg",
    "DawgMatcher", "DawgNode", "Dictionary", "DuplicatePattern", "DynamicDictionary",
    "DyndictError", "EmptyPattern", "LinkCutForest", "NaiveForest", "Occurrence",
    "ParseError", "RedundantMark", "UnknownPattern", "UpdateStats", "chk",
    "get_fail_states", "get_out_states", "make_forest", "match_text",
]
