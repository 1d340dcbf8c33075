"""Ratio transducers and the window construction of a DFAO for ``h``.

States of the transducer are pairs ``(X, Y) = (h(n), h(n+1))`` of interned
rational functions; reading ``u_{n+3}`` moves to ``(h(n+1), h(n+2))`` and
emits ``X``. Truncating at depth ``c`` and sending the deepest states back to
``(1, a + b)`` gives a finite transducer that is exact whenever the reset
block ``010`` occurs with gaps at most ``c``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .automata import (
    finite_set_dfa,
    map_outputs,
    minimize,
    prefix_patch,
    product,
    realized_outputs,
    shift_back,
    window_dfao,
    ensure_lsd,
    witness,
)
from .polyrat import A, B, ONE
from .seqcore import RatioEngine
from .walnut import serialize_transducer

__all__ = [
    "BoundedGapViolation",
    "TransducerTc",
    "build_transducer",
    "export_walnut_transducer",
    "transducer_labels_json",
    "RatioAutomaton",
    "transduce_via_windows",
    "DEFAULT_MAX_C",
]

DEFAULT_MAX_C = 16


class BoundedGapViolation(Exception):
    """A realizable window contains no reset point."""

    def __init__(self, window, n):
        self.window = window
        self.n = n
        bits = "".join(map(str, window))
        super().__init__(f"window {bits} (first realized at n={n}) contains no reset point")


@dataclass
class TransducerTc:
    c: int
    engine: RatioEngine
    states: list  # engine state ids, BFS order; index 0 is (1, a+b)
    depth: list
    transitions: dict = field(default_factory=dict)  # (q, symbol) -> (q', output id)
    symbols: int = 2

    @property
    def num_states(self):
        return len(self.states)

    def label(self, q):
        return self.engine.pairs[self.states[q]]

    def output_alphabet(self):
        return sorted({out for _, out in self.transitions.values()})

    def run(self, word, q=0):
        outs = []
        for s in word:
            q, out = self.transitions[(q, s)]
            outs.append(out)
        return q, outs


def _decode(symbol, symbols):
    # two-sequence inputs are encoded as 2u + v
    return (symbol >> 1, symbol & 1) if symbols == 4 else (symbol, symbol)


def build_transducer(c, two_sequences=False, engine=None):
    """Depth-truncated ratio transducer ``T_c`` built by BFS from ``(1, a + b)``."""
    if c < 3:
        raise ValueError("c must be at least 3")
    engine = engine or RatioEngine()
    symbols = 4 if two_sequences else 2
    start = engine.initial
    states = [start]
    depth = [0]
    index = {start: 0}
    T = TransducerTc(c, engine, states, depth, symbols=symbols)
    q = 0
    while q < len(states):
        sid = states[q]
        out = engine.pairs[sid][0]
        for s in range(symbols):
            if depth[q] >= c - 1:
                T.transitions[(q, s)] = (0, out)
                continue
            u, v = _decode(s, symbols)
            nxt = engine.step(sid, u, v)
            j = index.get(nxt)
            if j is None:
                j = index[nxt] = len(states)
                states.append(nxt)
                depth.append(depth[q] + 1)
            T.transitions[(q, s)] = (j, out)
        q += 1
    return T


def export_walnut_transducer(T):
    return serialize_transducer(T.symbols, T.num_states, T.transitions, direction="msd")


def transducer_labels_json(T):
    """State labels and output ids as canonical rational-function strings."""
    table = T.engine.table
    doc = {
        "c": T.c,
        "states": [
            {"state": q, "depth": T.depth[q], "X": x, "Y": y, "X_value": str(table[x]), "Y_value": str(table[y])}
            for q, (x, y) in ((q, T.label(q)) for q in range(T.num_states))
        ],
        "outputs": {str(o): str(table[o]) for o in T.output_alphabet()},
    }
    return json.dumps(doc, indent=2, sort_keys=True)


@dataclass
class RatioAutomaton:
    dfao: object
    table: object
    c: int

    def __call__(self, n):
        return self.dfao(n)

    def value(self, n):
        return self.table[self.dfao(n)]


def _reset_triples(two):
    """Representative ``f``-triples at a reset, keyed by the local pattern."""
    d1 = A + B
    d2 = A * A + A * B + B
    if not two:
        return {"single": (ONE, ONE, d1)}
    return {
        "01": (ONE, ONE, d1),
        "100": (d1, d2, A * d2 + B * d1),
        "101": (d1, d2, d1 * d1),
    }


def _latest_reset(window, s, two):
    """Latest offset ``r <= s`` that is a reset inside the window, with its seed triple key."""
    for r in range(s, -1, -1):
        if not two:
            if window[r] == 0 and window[r + 1] == 1 and window[r + 2] == 0:
                return r, "single"
            continue
        us = [w >> 1 for w in window[r : r + 3]]
        vs = [w & 1 for w in window[r : r + 3]]
        if vs == [0, 1, 0] and us[0] != us[1]:
            return r, "01" if us[0] == 0 else ("100" if us[2] == 0 else "101")
    return None


def transduce_via_windows(U, c, V=None, engine=None, max_c=DEFAULT_MAX_C):
    """DFAO for ``n -> intern id of h(n)`` when resets occur with gaps at most ``c``.

    For ``n >= 2`` the window ``(u_n, ..., u_{n+c+1})`` contains a reset ``r``
    with ``n <= r <= n + c - 1``; running the ratio recurrence from ``(1, a + b)``
    at ``r`` gives ``h(n + c - 1)``. The result is shifted back by ``c - 1`` and
    its first ``c + 1`` values are computed directly. With ``V`` the inputs are
    the pairs ``(u_n, v_n)`` encoded as ``2 u_n + v_n``.
    """
    if not 1 <= c <= max_c:
        raise ValueError(f"c must lie in 1..{max_c}")
    engine = engine or RatioEngine()
    U = ensure_lsd(U)
    two = V is not None
    if two:
        V = ensure_lsd(V)
        W = minimize(product(U, V, lambda x, y: 2 * x + y))
    else:
        W = U
    s = c - 1
    seeds = {k: engine.state_of(*t) for k, t in _reset_triples(two).items()}
    small = finite_set_dfa({0, 1}, base=W.base)
    G = minimize(product(window_dfao(W, c + 1), small))

    def value(window):
        hit = _latest_reset(window, s, two)
        if hit is None:
            return None
        r, key = hit
        sid = seeds[key]
        for off in range(r + 3, s + 3):
            w = window[off]
            sid = engine.step(sid, *_decode(w, 4 if two else 2))
        return engine.output(sid)

    cache = {}
    for window, is_small in realized_outputs(G):
        if is_small or window in cache:
            continue
        cache[window] = value(window)
        if cache[window] is None:
            n = witness(G, lambda o, w=window: o == (w, False))
            raise BoundedGapViolation(list(window), n)
    D = map_outputs(G, lambda o: None if o[1] else cache[o[0]])
    H = shift_back(D, s, fill=None)
    head = _direct_prefix(U, V, s + 2, engine)
    H = prefix_patch(H, head)
    return RatioAutomaton(minimize(H), engine.table, c)


def _direct_prefix(U, V, count, engine):
    ubits = [U(n) for n in range(count + 3)]
    vbits = [V(n) for n in range(count + 3)] if V is not None else None
    return engine.run(ubits, count, v=vbits)
