"""Guess a DFAO from k-kernel prefixes, then prove it for ratio sequences.

The guess is only a candidate. :func:`verify_ratio_dfao` turns it into a proof
by induction on ``n``: the two base values are checked, and every realized
combination of consecutive outputs is checked against the ratio relation as an
identity of rational functions.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .automata import (
    Dfao,
    AutomatonError,
    minimize,
    product,
    realized_outputs,
    reverse_direction,
    shift_by_constant,
    ensure_lsd,
    witness,
)
from .polyrat import A, B, ONE, RatFn

__all__ = [
    "GuessConfig",
    "GuessRefused",
    "guess_dfao",
    "Certificate",
    "verify_ratio_dfao",
    "Comparison",
    "compare_dfaos",
]


class GuessRefused(Exception):
    """The values do not look k-automatic at this horizon (a finding, not a bug)."""


@dataclass(frozen=True)
class GuessConfig:
    base: int = 2
    horizon: int = 2 ** 16
    max_states: int = 512
    direction: str = "lsd"
    min_evidence: int = 8

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        if self.direction not in ("lsd", "msd"):
            raise ValueError("direction must be 'lsd' or 'msd'")
        if self.horizon < self.base * self.max_states:
            raise ValueError(
                f"horizon {self.horizon} < base * max_states = {self.base * self.max_states}; "
                "not enough evidence to guess"
            )


def guess_dfao(values, cfg=None):
    """Candidate lsd/msd DFAO for ``n -> values[n]`` from its k-kernel.

    Kernel element ``(j, i)`` is ``n -> values[k^j n + i]``; reading digit ``d``
    moves to ``(j + 1, i + d k^j)``. A new element is merged into the first
    known one whose visible prefix agrees on the common length. Refuses when
    the visible prefix gets shorter than ``cfg.min_evidence`` or the state
    count passes ``cfg.max_states``.
    """
    cfg = cfg or GuessConfig(horizon=len(values), max_states=max(1, len(values) // 2))
    values = list(values[: cfg.horizon])
    N = len(values)
    if N < cfg.base * cfg.max_states and N < cfg.horizon:
        raise GuessRefused(f"only {N} values supplied")
    k = cfg.base
    reps = [(0, 1)]  # (offset i, stride k^j)
    prefixes = [values]
    delta = []
    q = 0
    while q < len(reps):
        i, stride = reps[q]
        row = []
        for d in range(k):
            ci, cs = i + d * stride, stride * k
            seq = values[ci::cs]
            if len(seq) < cfg.min_evidence:
                raise GuessRefused(
                    f"kernel element ({ci} mod {cs}) has only {len(seq)} visible terms; "
                    "increase the horizon"
                )
            target = None
            for p, pre in enumerate(prefixes):
                L = min(len(pre), len(seq))
                if pre[:L] == seq[:L]:
                    target = p
                    break
            if target is None:
                if len(reps) >= cfg.max_states:
                    raise GuessRefused(
                        f"more than {cfg.max_states} kernel classes at horizon {N}; "
                        "not plausibly k-automatic here"
                    )
                target = len(reps)
                reps.append((ci, cs))
                prefixes.append(seq)
            row.append(target)
        delta.append(row)
        q += 1
    K = minimize(Dfao(k, delta, [values[i] for i, _ in reps]))
    if cfg.direction == "msd":
        K = reverse_direction(K)
    return K


@dataclass
class RelationCheck:
    states: tuple
    lhs: str
    rhs: str
    ok: bool


@dataclass
class Certificate:
    base_cases: list = field(default_factory=list)
    pairs: list = field(default_factory=list)
    triples: list = field(default_factory=list)
    proved: bool = False
    counterexample: dict = None

    @property
    def verdict(self):
        return "proved" if self.proved else "refuted"

    @property
    def pair_set(self):
        return {c.states for c in self.pairs}

    @property
    def triple_set(self):
        return {c.states for c in self.triples}

    def to_json(self):
        d = asdict(self)
        d["verdict"] = self.verdict
        return json.dumps(d, indent=2, sort_keys=True, default=list)


def verify_ratio_dfao(K, U, table):
    """Prove ``h(n) = table[K(n)]`` for the ratio sequence driven by ``U``.

    Checks ``h(0) = 1`` and ``h(1) = a + b``; for every realized
    ``(K(n), K(n+1))`` with ``u_{n+2} = 0`` that ``h_y = a + b/h_x``; and for
    every realized ``(K(n), K(n+1), K(n+2))`` with ``u_{n+3} = 1`` that
    ``h_z = a/h_y + b/(h_y h_x)``. Together these give the claim by induction.
    """
    K = ensure_lsd(K)
    U = ensure_lsd(U)
    if K.base != U.base:
        raise AutomatonError("K and U must share a base")
    for o in realized_outputs(K):
        if not 0 <= o < len(table):
            raise ValueError(f"output {o} has no rational function in the table")
    P = minimize(product(K, shift_by_constant(K, 1)))
    P = minimize(product(P, shift_by_constant(K, 2), lambda t, z: t + (z,)))
    P = minimize(product(P, shift_by_constant(U, 2), lambda t, u: t + (u,)))
    P = minimize(product(P, shift_by_constant(U, 3), lambda t, u: t + (u,)))
    seen = realized_outputs(P)
    cert = Certificate()

    def h(x):
        return table[x]

    def record(bucket, states, lhs, rhs):
        ok = lhs == rhs
        bucket.append(RelationCheck(states, str(lhs), str(rhs), ok))
        if not ok and cert.counterexample is None:
            cert.counterexample = {"states": list(states), "lhs": str(lhs), "rhs": str(rhs)}

    record(cert.base_cases, (K(0),), h(K(0)), RatFn(ONE))
    record(cert.base_cases, (K(1),), h(K(1)), RatFn(A + B))
    for x, y in sorted({(x, y) for x, y, _, u2, _ in seen if u2 == 0}):
        record(cert.pairs, (x, y), h(y), A + B / h(x))
    for x, y, z in sorted({(x, y, z) for x, y, z, _, u3 in seen if u3 == 1}):
        record(cert.triples, (x, y, z), h(z), A / h(y) + B / (h(y) * h(x)))
    cert.proved = all(c.ok for c in cert.base_cases + cert.pairs + cert.triples)
    return cert


@dataclass
class Comparison:
    equal: bool
    relabeling: dict
    conflict: dict = None


def compare_dfaos(A_, B_, relabel=None):
    """Decide whether ``B = relabel o A`` everywhere.

    Without ``relabel`` a bijection is inferred from the realized output pairs,
    processed in order of their shortest witnesses; the first pair that breaks
    injectivity or functionality is reported with its witness ``n``.
    """
    if A_.base != B_.base:
        raise AutomatonError("automata have different bases")
    A_ = ensure_lsd(A_)
    B_ = ensure_lsd(B_)
    P = minimize(product(A_, B_))
    pairs = sorted((witness(P, lambda o, p=p: o == p), repr(p), p) for p in realized_outputs(P))
    fwd = dict(relabel or {})
    back = {v: k for k, v in fwd.items()}
    fixed = relabel is not None
    for n, _, (x, y) in pairs:
        if x in fwd and fwd[x] != y or y in back and back[y] != x or fixed and x not in fwd:
            return Comparison(False, fwd, {"n": n, "left": x, "right": y, "expected": fwd.get(x)})
        fwd[x] = y
        back[y] = x
    return Comparison(True, fwd)
