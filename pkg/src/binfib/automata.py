"""Deterministic finite automata with output over base-k digits.

The canonical reading order is least-significant-digit first (``lsd``); the
representation of ``n`` is its digit string without trailing zeros, so ``0``
is the empty word. An ``lsd`` automaton is *normalized* when appending zeros
never changes the output (see :func:`zero_saturate`); every construction here
preserves that property. ``msd`` automata are supported for I/O, evaluation and
comparison and are converted with :func:`reverse_direction` where needed.
"""
from __future__ import annotations

from collections import deque
from itertools import product as iproduct

__all__ = [
    "Dfao",
    "AutomatonError",
    "ReversalError",
    "from_machine",
    "minimize",
    "product",
    "reverse_direction",
    "zero_saturate",
    "is_zero_saturated",
    "ensure_lsd",
    "shift_by_constant",
    "shift_back",
    "prefix_patch",
    "window_dfao",
    "realized_outputs",
    "map_outputs",
    "block_dfa",
    "is_infinite",
    "is_empty",
    "gap_values",
    "empty_window_witness",
    "finite_set_dfa",
    "witness",
    "to_dot",
    "digits",
]


class AutomatonError(ValueError):
    pass


class ReversalError(AutomatonError):
    """The reversed automaton is not well defined on padded inputs."""


def digits(n, base, direction="lsd"):
    out = []
    while n:
        n, d = divmod(n, base)
        out.append(d)
    if direction == "msd":
        out.reverse()
    return out


class Dfao:
    """Complete DFAO on states ``0..len(outputs)-1``.

    ``delta[q][s]`` is the successor of ``q`` on symbol ``s``. With several
    tracks a symbol is a tuple of digits, encoded as its index in
    ``itertools.product(range(base), repeat=tracks)``.
    """

    def __init__(self, base, delta, outputs, initial=0, tracks=1, direction="lsd"):
        if base < 2:
            raise AutomatonError("base must be at least 2")
        if direction not in ("lsd", "msd"):
            raise AutomatonError(f"unknown direction {direction!r}")
        nsym = base ** tracks
        if len(delta) != len(outputs):
            raise AutomatonError("delta and outputs disagree on the number of states")
        n = len(outputs)
        if not 0 <= initial < n:
            raise AutomatonError("initial state out of range")
        for q, row in enumerate(delta):
            if len(row) != nsym:
                raise AutomatonError(f"state {q} has {len(row)} transitions, expected {nsym}")
            for t in row:
                if not 0 <= t < n:
                    raise AutomatonError(f"state {q} has a dangling transition to {t}")
        self.base = base
        self.tracks = tracks
        self.delta = [tuple(row) for row in delta]
        self.outputs = list(outputs)
        self.initial = initial
        self.direction = direction

    @property
    def num_states(self):
        return len(self.outputs)

    @property
    def num_symbols(self):
        return self.base ** self.tracks

    def symbols(self):
        """Symbol tuples in encoding order."""
        return list(iproduct(range(self.base), repeat=self.tracks))

    def encode(self, tup):
        s = 0
        for d in tup:
            s = s * self.base + d
        return s

    def run(self, word, state=None):
        q = self.initial if state is None else state
        for s in word:
            q = self.delta[q][s]
        return q

    def evaluate(self, n):
        """Output on the canonical representation of ``n`` (a tuple for multi-track)."""
        if self.tracks == 1:
            word = digits(n, self.base, self.direction)
        else:
            cols = [digits(x, self.base, "lsd") for x in n]
            width = max((len(c) for c in cols), default=0)
            word = []
            for pos in range(width):
                word.append(self.encode(tuple(c[pos] if pos < len(c) else 0 for c in cols)))
            if self.direction == "msd":
                word.reverse()
        return self.outputs[self.run(word)]

    def __call__(self, n):
        return self.evaluate(n)

    def output_set(self):
        return set(self.outputs)

    def __repr__(self):
        return (
            f"Dfao(base={self.base}, tracks={self.tracks}, states={self.num_states}, "
            f"direction={self.direction!r})"
        )


def from_machine(base, initial, step, output, direction="lsd", tracks=1, limit=1_000_000):
    """Explore a machine given as Python callables into a :class:`Dfao`.

    ``step(state, symbol) -> state`` and ``output(state) -> hashable``; states
    must be hashable. Only reachable states are built.
    """
    index = {initial: 0}
    order = [initial]
    delta = []
    nsym = base ** tracks
    i = 0
    while i < len(order):
        st = order[i]
        row = []
        for s in range(nsym):
            nxt = step(st, s)
            j = index.get(nxt)
            if j is None:
                j = len(order)
                if j >= limit:
                    raise AutomatonError(f"state limit {limit} exceeded")
                index[nxt] = j
                order.append(nxt)
            row.append(j)
        delta.append(row)
        i += 1
    return Dfao(base, delta, [output(st) for st in order], 0, tracks, direction)


def _reachable(A):
    seen = {A.initial: 0}
    order = [A.initial]
    i = 0
    while i < len(order):
        for t in A.delta[order[i]]:
            if t not in seen:
                seen[t] = len(order)
                order.append(t)
        i += 1
    return order


def _renumber(A):
    """Restrict to the reachable states and number them in BFS order."""
    order = _reachable(A)
    index = {q: i for i, q in enumerate(order)}
    delta = [[index[t] for t in A.delta[q]] for q in order]
    return Dfao(A.base, delta, [A.outputs[q] for q in order], 0, A.tracks, A.direction)


def minimize(A):
    """Moore partition refinement seeded by outputs; canonical BFS numbering."""
    A = _renumber(A)
    n = A.num_states
    ids = {}
    cls = [ids.setdefault(o, len(ids)) for o in A.outputs]
    count = len(ids)
    while True:
        sig = {}
        new = []
        for q in range(n):
            key = (cls[q],) + tuple(cls[t] for t in A.delta[q])
            new.append(sig.setdefault(key, len(sig)))
        if len(sig) == count:
            break
        cls, count = new, len(sig)
    delta = [None] * count
    outputs = [None] * count
    for q in range(n):
        c = cls[q]
        if delta[c] is None:
            delta[c] = [cls[t] for t in A.delta[q]]
            outputs[c] = A.outputs[q]
    Q = Dfao(A.base, delta, outputs, cls[A.initial], A.tracks, A.direction)
    return _renumber(Q)


def _check_compatible(A, B):
    if A.base != B.base or A.tracks != B.tracks:
        raise AutomatonError("automata differ in base or track count")
    if A.direction != B.direction:
        raise AutomatonError("automata read digits in different orders")


def product(A, B, combine=lambda x, y: (x, y)):
    """Reachable product automaton with outputs ``combine(outA, outB)``."""
    _check_compatible(A, B)

    def step(st, s):
        return (A.delta[st[0]][s], B.delta[st[1]][s])

    def output(st):
        return combine(A.outputs[st[0]], B.outputs[st[1]])

    return from_machine(A.base, (A.initial, B.initial), step, output, A.direction, A.tracks)


def map_outputs(A, fn):
    return Dfao(A.base, A.delta, [fn(o) for o in A.outputs], A.initial, A.tracks, A.direction)


def _zero_cycle_outputs(A, q):
    seen = []
    pos = {}
    while q not in pos:
        pos[q] = len(seen)
        seen.append(q)
        q = A.delta[q][0]
    return [A.outputs[p] for p in seen[pos[q]:]]


def is_zero_saturated(A):
    return all(A.outputs[A.delta[q][0]] == A.outputs[q] for q in _reachable(A))


def zero_saturate(A):
    """Replace each output by the (constant) output along the eventual 0-cycle."""
    if A.direction != "lsd":
        raise AutomatonError("zero saturation applies to lsd automata")
    outputs = list(A.outputs)
    for q in _reachable(A):
        cyc = _zero_cycle_outputs(A, q)
        if any(o != cyc[0] for o in cyc):
            raise AutomatonError(
                f"state {q}: outputs along the trailing-zero cycle are not constant; "
                "the automaton does not define a sequence"
            )
        outputs[q] = cyc[0]
    return Dfao(A.base, A.delta, outputs, A.initial, A.tracks, A.direction)


def reverse_direction(A):
    """Equivalent automaton reading digits in the opposite order.

    The state after reading ``x`` is the map ``p -> out(delta(p, reversed(x)))``
    over the states of ``A``; this is a subset construction on the reversed
    automaton that keeps one state set per output value. When the result reads
    lsd-first it must be trailing-zero invariant, otherwise
    :class:`ReversalError` is raised.
    """
    A = minimize(A)
    n = A.num_states

    def step(phi, s):
        return tuple(phi[A.delta[p][s]] for p in range(n))

    def output(phi):
        return phi[A.initial]

    target = "msd" if A.direction == "lsd" else "lsd"
    R = from_machine(A.base, tuple(A.outputs), step, output, target, A.tracks)
    if target == "lsd" and not is_zero_saturated(R):
        raise ReversalError(
            "reversed automaton changes output under trailing zeros; the msd input "
            "is not leading-zero invariant"
        )
    return minimize(R)


def ensure_lsd(A):
    return A if A.direction == "lsd" else reverse_direction(A)


def _pending_output(A, q, value):
    for d in digits(value, A.base):
        q = A.delta[q][d]
    return A.outputs[q]


def shift_by_constant(A, j):
    """Automaton for ``n -> A(n + j)`` (single track, lsd, normalized)."""
    A = ensure_lsd(A)
    if A.tracks != 1:
        raise AutomatonError("shift_by_constant needs a single-track automaton")
    if j < 0:
        raise ValueError("use shift_back for negative shifts")
    k = A.base

    def step(st, d):
        q, pending = st
        s = d + pending % k
        return (A.delta[q][s % k], pending // k + s // k)

    def output(st):
        return _pending_output(A, st[0], st[1])

    return minimize(from_machine(k, (A.initial, j), step, output))


def shift_back(A, j, fill=None):
    """Automaton for ``n -> A(n - j)``, with ``fill`` for ``n < j``."""
    A = ensure_lsd(A)
    if A.tracks != 1:
        raise AutomatonError("shift_back needs a single-track automaton")
    k = A.base

    def step(st, d):
        q, pending = st
        t = d - pending % k
        borrow = 0
        if t < 0:
            t += k
            borrow = 1
        return (A.delta[q][t], pending // k + borrow)

    def output(st):
        return A.outputs[st[0]] if st[1] == 0 else fill

    return minimize(from_machine(k, (A.initial, j), step, output))


def _small_value_machine(base, bound):
    """Track the exact value of ``n`` while it stays below ``bound``."""

    def step(st, d):
        v, pw = st
        if v is None:
            return st
        v += d * pw
        if v >= bound:
            return (None, 0)
        return (v, pw * base if pw < bound else pw)

    return (0, 1), step


def prefix_patch(A, values):
    """Override the outputs for ``n < len(values)``."""
    A = ensure_lsd(A)
    bound = len(values)
    if not bound:
        return A
    start, vstep = _small_value_machine(A.base, bound)

    def step(st, d):
        return (A.delta[st[0]][d], vstep(st[1], d))

    def output(st):
        v = st[1][0]
        return values[v] if v is not None else A.outputs[st[0]]

    return minimize(from_machine(A.base, (A.initial, start), step, output))


def finite_set_dfa(values, base=2):
    """DFA (boolean outputs) accepting exactly the integers in ``values``."""
    values = set(values)
    bound = max(values, default=-1) + 1
    start, vstep = _small_value_machine(base, max(bound, 1))

    def output(st):
        return st[0] is not None and st[0] in values

    return minimize(from_machine(base, start, vstep, output))


def window_dfao(A, w):
    """Automaton for ``n -> (A(n), A(n+1), ..., A(n+w))``."""
    A = ensure_lsd(A)
    W = map_outputs(A, lambda o: (o,))
    for i in range(1, w + 1):
        W = minimize(product(W, shift_by_constant(A, i), lambda t, o: t + (o,)))
    return minimize(W)


def realized_outputs(A):
    """``{A(n) : n >= 0}`` for a normalized automaton."""
    return {A.outputs[q] for q in _reachable(A)}


def block_dfa(A, pattern):
    """DFA accepting ``n`` with ``(A(n), ..., A(n+len-1)) == pattern``."""
    pattern = tuple(pattern)
    if not pattern:
        raise ValueError("empty pattern")
    W = window_dfao(A, len(pattern) - 1)
    return minimize(map_outputs(W, lambda t: t == pattern))


def _accepts(o):
    return o is True or (type(o) is int and o == 1)


def is_empty(D):
    return not any(_accepts(o) for o in realized_outputs(ensure_lsd(D)))


def is_infinite(D):
    """Whether the DFA accepts infinitely many integers.

    True iff some reachable state lies on a cycle and can still reach an
    accepting state through a word ending in a nonzero digit, which keeps the
    accepted words canonical and pairwise distinct.
    """
    D = ensure_lsd(D)
    reach = _reachable(D)
    rset = set(reach)
    pred = {q: set() for q in reach}
    for q in reach:
        for t in D.delta[q]:
            pred[t].add(q)
    seeds = [
        q
        for q in reach
        if any(_accepts(D.outputs[D.delta[q][s]]) for s in range(1, D.num_symbols))
    ]
    good = set(seeds)
    stack = list(seeds)
    while stack:
        q = stack.pop()
        for p in pred[q]:
            if p not in good:
                good.add(p)
                stack.append(p)
    # peel states with no successor inside the set; a remainder means a cycle
    live = good & rset
    outdeg = {q: sum(1 for t in D.delta[q] if t in live) for q in live}
    rev = {q: [] for q in live}
    for q in live:
        for t in D.delta[q]:
            if t in live:
                rev[t].append(q)
    queue = deque(q for q, d in outdeg.items() if d == 0)
    removed = 0
    while queue:
        q = queue.popleft()
        removed += 1
        for p in rev[q]:
            outdeg[p] -= 1
            if outdeg[p] == 0:
                queue.append(p)
    return removed < len(live)


def witness(A, predicate):
    """Smallest-length canonical ``n`` with ``predicate(A(n))``, or ``None``."""
    A = ensure_lsd(A)
    k = A.base
    if predicate(A.outputs[A.initial]):
        return 0
    seen = {A.initial}
    frontier = [(A.initial, 0, 1)]
    while frontier:
        nxt = []
        best = None
        for q, value, pw in frontier:
            for d in range(k):
                t = A.delta[q][d]
                v = value + d * pw
                if d and predicate(A.outputs[t]):
                    best = v if best is None else min(best, v)
                if t not in seen:
                    seen.add(t)
                    nxt.append((t, v, pw * k))
        if best is not None:
            return best
        frontier = nxt
    return None


def gap_values(D, c_max):
    """Gap sizes ``c`` between consecutive accepted integers, with witnesses.

    For each ``1 <= c <= c_max`` decides whether some ``n`` has ``D(n)``,
    ``D(n + c)`` and no accepted integer strictly between, using constant
    shifts and boolean products only. Returns ``{c: smallest-length witness n}``.
    """
    D = ensure_lsd(D)
    found = {}
    P = minimize(product(D, shift_by_constant(D, 1), lambda x, y: (_accepts(x), False, _accepts(y))))
    for c in range(1, c_max + 1):
        if c > 1:
            P = minimize(
                product(P, shift_by_constant(D, c), lambda o, y: (o[0], o[1] or o[2], _accepts(y)))
            )
        if (True, False, True) in realized_outputs(P):
            found[c] = witness(P, lambda o: o == (True, False, True))
    return found


def to_dot(A, name="A"):
    """Graphviz rendering of the transition structure."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q, o in enumerate(A.outputs):
        lines.append(f'  q{q} [shape=circle, label="{q}/{o}"];')
    lines.append(f"  __start -> q{A.initial};")
    syms = A.symbols()
    for q, row in enumerate(A.delta):
        grouped = {}
        for s, t in enumerate(row):
            grouped.setdefault(t, []).append(",".join(map(str, syms[s])) if A.tracks > 1 else str(syms[s][0]))
        for t, labels in grouped.items():
            lines.append(f'  q{q} -> q{t} [label="{" ".join(labels)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def empty_window_witness(D, c):
    """Smallest-length ``n`` such that ``D`` rejects all of ``n, ..., n + c - 1``, else ``None``.

    ``None`` certifies that accepted integers occur with gaps at most ``c``
    (counting the stretch before the first one).
    """
    D = ensure_lsd(D)
    P = map_outputs(D, lambda o: not _accepts(o))
    for j in range(1, c):
        P = minimize(product(P, shift_by_constant(D, j), lambda x, y: x and not _accepts(y)))
    return witness(P, lambda o: o is True)
