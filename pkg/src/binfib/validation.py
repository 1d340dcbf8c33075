"""Argument checks shared by the estimators and the command line."""
from __future__ import annotations

from numbers import Integral

from .sequences import BinarySeq, parse_seq

HORIZON_CAPS = {
    "compute": 2 ** 16,
    "ratios": 2 ** 20,
    "resets": 2 ** 24,
    "values": 2 ** 20,
    "guess": 2 ** 20,
}


def check_int(value, name, minimum=None):
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_horizon(horizon, kind=None, minimum=3):
    horizon = check_int(horizon, "horizon", minimum)
    cap = HORIZON_CAPS.get(kind)
    if cap is not None and horizon > cap:
        raise ValueError(f"horizon {horizon} exceeds the {kind} cap {cap}")
    return horizon


def check_coefficients(a, b):
    return check_int(a, "a"), check_int(b, "b")


def check_word(word, alphabet=(0, 1), nonempty=False):
    """Normalize a 0-1 word given as a string or an iterable of ints."""
    bits = [int(ch) for ch in word] if isinstance(word, str) else [int(x) for x in word]
    bad = [x for x in bits if x not in alphabet]
    if bad:
        raise ValueError(f"letter {bad[0]} not in {tuple(alphabet)}")
    if nonempty and not bits:
        raise ValueError("word must be nonempty")
    return bits


def check_sequence(u):
    """Accept a :class:`BinarySeq` or a spec string."""
    if isinstance(u, BinarySeq):
        return u
    if isinstance(u, str):
        return parse_seq(u)
    raise TypeError("expected a BinarySeq or a sequence spec string")


def check_base(base):
    return check_int(base, "base", 2)
