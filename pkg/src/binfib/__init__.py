"""Shifted binary recurrences driven by 0-1 sequences: exact ratios, automata, dynamics."""
from .polyrat import A, B, ONE, ZERO, InternTable, PolyZab, RatFn, parse_poly, parse_ratfn, ratfn_eq
from .sequences import (
    BinarySeq,
    Periodic,
    PowersOfTwo,
    RudinShapiro,
    SpecError,
    ThueMorse,
    parse_seq,
    to_dfao,
)
from .seqcore import (
    RatioEngine,
    compute_f_general_order,
    compute_f_numeric,
    compute_f_symbolic,
    compute_f_tilde,
    compute_h,
    recover_u,
    reset_set,
    reset_set_tilde,
    symbolic_ratios,
    value_set,
)

from .dfaoguess import GuessConfig, GuessRefused, compare_dfaos, guess_dfao, verify_ratio_dfao
from .transduce import BoundedGapViolation, build_transducer, transduce_via_windows
from .dynamics import classify_periodic_u, cross_validate

__version__ = "0.1.0"
