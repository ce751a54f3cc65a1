"""
Transfinite plays at desk scale: ordinals below ω^ω, the rank calculus on
symbolic sequences of copy indices and winning conditions on infinite plays.
"""

from .ordinals import CnfOrdinal, ord_add, ord_cmp, ord_is_indecomposable, parse_ordinal
from .sequences import SymbolicSeq, classify_play, delta_sym, parse_seq, rank_leq
from .win import length_sup, zeta_eval, zeta_formula

__all__ = [
    "CnfOrdinal",
    "SymbolicSeq",
    "classify_play",
    "delta_sym",
    "length_sup",
    "ord_add",
    "ord_cmp",
    "ord_is_indecomposable",
    "parse_ordinal",
    "parse_seq",
    "rank_leq",
    "zeta_eval",
    "zeta_formula",
]
