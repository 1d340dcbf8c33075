"""Walnut-compatible text formats for automata and transducers.

DFAO files::

    # direction: lsd
    lsd_2
    0 0
    0 -> 0
    1 -> 1

    1 1
    0 -> 1
    1 -> 0

The header is one ``lsd_k``/``msd_k`` token per track, or bare alphabets such
as ``{0,1}`` (read as msd unless a ``# direction: lsd`` comment says otherwise).
Each state block is ``<state> <output>`` followed by ``<digits> -> <state>``
lines. Lines starting with ``#`` and blank lines are ignored.

Transducer files use a bare alphabet header, state lines holding only the state
number, and transitions ``<digit> -> <state> / <output>``.
"""
from __future__ import annotations

import re

from .automata import Dfao

__all__ = [
    "WalnutFormatError",
    "parse_walnut",
    "serialize_walnut",
    "read_walnut",
    "write_walnut",
    "parse_transducer",
    "serialize_transducer",
]


class WalnutFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_NUMSYS = re.compile(r"^(lsd|msd)_(\d+)$")
_ALPHA = re.compile(r"^\{\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\}$")


def _lines(text):
    direction_hint = None
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            m = re.match(r"#\s*direction\s*:\s*(lsd|msd)\s*$", line)
            if m:
                direction_hint = m.group(1)
            continue
        if line:
            out.append((no, line))
    return out, direction_hint


def _parse_header(no, line, hint):
    tokens = re.findall(r"\{[^}]*\}|\S+", line)
    if not tokens:
        raise WalnutFormatError("missing header", no)
    bases = []
    dirs = set()
    for tok in tokens:
        m = _NUMSYS.match(tok)
        if m:
            dirs.add(m.group(1))
            bases.append(int(m.group(2)))
            continue
        m = _ALPHA.match(tok)
        if m:
            letters = sorted(int(x) for x in m.group(1).split(","))
            if letters != list(range(len(letters))):
                raise WalnutFormatError(f"unsupported alphabet {tok}", no)
            bases.append(len(letters))
            dirs.add(hint or "msd")
            continue
        raise WalnutFormatError(f"malformed header token {tok!r}", no)
    if len(set(bases)) != 1 or bases[0] < 2:
        raise WalnutFormatError("all tracks must share one base >= 2", no)
    if len(dirs) != 1:
        raise WalnutFormatError("tracks disagree on reading direction", no)
    return bases[0], len(bases), dirs.pop()


def parse_walnut(text):
    """Parse a Walnut DFAO/DFA description into a :class:`Dfao`."""
    lines, hint = _lines(text)
    if not lines:
        raise WalnutFormatError("empty automaton file")
    base, tracks, direction = _parse_header(*lines[0], hint)
    states = {}
    order = []
    trans = {}
    current = None
    for no, line in lines[1:]:
        if "->" in line:
            if current is None:
                raise WalnutFormatError("transition before any state declaration", no)
            left, right = line.split("->", 1)
            syms = left.split()
            dest = right.split()
            if len(syms) != tracks or len(dest) != 1:
                raise WalnutFormatError(f"malformed transition {line!r}", no)
            try:
                digs = tuple(int(x) for x in syms)
                target = int(dest[0])
            except ValueError:
                raise WalnutFormatError(f"malformed transition {line!r}", no) from None
            if any(not 0 <= d < base for d in digs):
                raise WalnutFormatError(f"digit out of range in {line!r}", no)
            key = (current, digs)
            if key in trans:
                raise WalnutFormatError(f"duplicate transition for state {current} on {digs}", no)
            trans[key] = (target, no)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise WalnutFormatError(f"expected '<state> <output>', got {line!r}", no)
            try:
                q, out = int(parts[0]), int(parts[1])
            except ValueError:
                raise WalnutFormatError(f"expected integers in {line!r}", no) from None
            if q in states:
                raise WalnutFormatError(f"state {q} declared twice", no)
            states[q] = (out, no)
            order.append(q)
            current = q
    if not order:
        raise WalnutFormatError("no states declared")
    index = {q: i for i, q in enumerate(order)}
    probe = Dfao(base, [[0] * base ** tracks], [0], 0, tracks, direction)
    symbols = probe.symbols()
    delta = []
    for q in order:
        row = []
        for tup in symbols:
            hit = trans.get((q, tup))
            if hit is None:
                raise WalnutFormatError(
                    f"state {q} has no transition on {' '.join(map(str, tup))}", states[q][1]
                )
            target, no = hit
            if target not in index:
                raise WalnutFormatError(f"transition to undeclared state {target}", no)
            row.append(index[target])
        delta.append(row)
    outputs = [states[q][0] for q in order]
    return Dfao(base, delta, outputs, 0, tracks, direction)


def _out_int(o):
    if o is True or o is False:
        return int(o)
    if isinstance(o, int):
        return o
    raise ValueError(f"Walnut files need integer outputs, got {o!r}")


def serialize_walnut(A):
    """Deterministic text; states in index order, state 0 must be initial."""
    if A.initial != 0:
        raise ValueError("serialize a renumbered automaton (initial state 0)")
    lines = [f"# direction: {A.direction}", " ".join([f"{A.direction}_{A.base}"] * A.tracks)]
    symbols = A.symbols()
    for q in range(A.num_states):
        if q:
            lines.append("")
        lines.append(f"{q} {_out_int(A.outputs[q])}")
        for s, tup in enumerate(symbols):
            lines.append(f"{' '.join(map(str, tup))} -> {A.delta[q][s]}")
    return "\n".join(lines) + "\n"


def read_walnut(path):
    with open(path, encoding="utf-8") as fh:
        return parse_walnut(fh.read())


def write_walnut(A, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_walnut(A))


def serialize_transducer(base, num_states, transitions, direction="msd"):
    """``transitions[(state, digit)] = (dest, output)``; state 0 is initial."""
    alpha = "{" + ",".join(str(d) for d in range(base)) + "}"
    lines = [f"# direction: {direction}", alpha]
    for q in range(num_states):
        lines.append("")
        lines.append(str(q))
        for d in range(base):
            dest, out = transitions[(q, d)]
            lines.append(f"{d} -> {dest} / {out}")
    return "\n".join(lines) + "\n"


def parse_transducer(text):
    """Inverse of :func:`serialize_transducer`; returns ``(base, num_states, transitions)``."""
    lines, _ = _lines(text)
    if not lines:
        raise WalnutFormatError("empty transducer file")
    no, header = lines[0]
    m = _ALPHA.match(header)
    if not m:
        raise WalnutFormatError("transducer header must be an alphabet like {0,1}", no)
    base = len(m.group(1).split(","))
    transitions = {}
    states = []
    current = None
    for no, line in lines[1:]:
        if "->" in line:
            mm = re.fullmatch(r"(\d+)\s*->\s*(\d+)\s*/\s*(-?\d+)", line)
            if not mm or current is None:
                raise WalnutFormatError(f"malformed transducer transition {line!r}", no)
            d, dest, out = (int(x) for x in mm.groups())
            if not 0 <= d < base:
                raise WalnutFormatError(f"digit out of range in {line!r}", no)
            transitions[(current, d)] = (dest, out)
        else:
            if not line.isdigit():
                raise WalnutFormatError(f"expected a state number, got {line!r}", no)
            current = int(line)
            states.append(current)
    if states != list(range(len(states))):
        raise WalnutFormatError("states must be numbered 0..n-1 in order")
    for q in states:
        for d in range(base):
            if (q, d) not in transitions:
                raise WalnutFormatError(f"state {q} has no transition on {d}")
            if transitions[(q, d)][0] not in range(len(states)):
                raise WalnutFormatError(f"state {q} transition on {d} goes to an undeclared state")
    return base, len(states), transitions
