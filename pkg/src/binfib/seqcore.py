"""Shifted binary recurrences driven by 0-1 sequences.

``f(0) = f(1) = 1``, ``f(2) = a + b`` and, for ``n >= 3``,
``f(n) = a f(n - u_n - 1) + b f(n - u_n - 2)``. Ratios ``h(n) = f(n+1)/f(n)``
are computed either for fixed integers ``a, b`` (exact ``Fraction`` values) or
symbolically in ``Q(a, b)`` (intern ids into an :class:`InternTable`).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .polyrat import A, B, ONE, InternTable, PolyZab, RatFn

# d_i such that the PTM-driven ratios are exactly d_i / d_{i-1}, 0 <= i <= 6
PTM_D = {
    -1: ONE,
    0: ONE,
    1: A + B,
    2: A ** 2 + (A + 1) * B,
    3: A ** 3 + B * (A ** 2 + 2 * A + B),
    4: A ** 4 + B * (A ** 3 + 3 * A ** 2 + 2 * A * B + B),
    5: A ** 5 + B * (A ** 4 + 4 * A ** 3 + 3 * A ** 2 * B + 3 * A * B + B ** 2),
    6: A ** 6 + B * (A ** 5 + 5 * A ** 4 + 4 * A ** 3 * B + 6 * A ** 2 * B + 3 * A * B ** 2 + B ** 2),
}


def ptm_ratio_classes():
    """``[d_i / d_{i-1} for i in 0..6]``."""
    return [RatFn(PTM_D[i], PTM_D[i - 1]) for i in range(7)]


class RecoveryError(ValueError):
    def __init__(self, n, message):
        self.n = n
        super().__init__(f"n={n}: {message}")


@dataclass(frozen=True)
class RatioPoint:
    n: int
    value: object  # Fraction (numeric), intern id (symbolic) or None
    defined: bool


class RatioSeries(list):
    """List of :class:`RatioPoint`; ``table`` resolves symbolic ids."""

    def __init__(self, points=(), table=None):
        super().__init__(points)
        self.table = table

    def __getitem__(self, key):
        if isinstance(key, slice):
            return RatioSeries(list.__getitem__(self, key), self.table)
        return list.__getitem__(self, key)

    @property
    def symbolic(self):
        return self.table is not None

    def values(self):
        return [p.value for p in self]


@dataclass
class ResetReport:
    positions: list
    gaps: Counter
    max_gap_seen: int
    horizon: int

    @property
    def gap_set(self):
        return set(self.gaps)


@dataclass
class ValueStats:
    count: int
    first: int
    last: int


@dataclass
class ValueSet:
    entries: dict = field(default_factory=dict)
    undefined: int = 0
    table: object = None

    def __len__(self):
        return len(self.entries)

    def __contains__(self, value):
        return value in self.entries

    def keys(self):
        return list(self.entries)


def bits_of(u, length):
    """First ``length`` terms of a sequence given as BinarySeq, list or callable."""
    if hasattr(u, "prefix"):
        return u.prefix(length)
    if callable(u):
        return [u(n) for n in range(length)]
    if len(u) < length:
        raise ValueError(f"need {length} terms of the driving sequence, got {len(u)}")
    return list(u[:length])


def _recurrence(a, b, ubits, vbits, n_max):
    f = [a * 0 + 1, a * 0 + 1, a + b]
    for n in range(3, n_max + 1):
        f.append(a * f[n - ubits[n] - 1] + b * f[n - vbits[n] - 2])
    return f[: n_max + 1]


def compute_f_numeric(a, b, u, n_max):
    """``[f(0), ..., f(n_max)]`` for integer ``a, b``."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    ub = bits_of(u, n_max + 1)
    return _recurrence(int(a), int(b), ub, ub, n_max)


def compute_f_symbolic(u, n_max):
    """Same recurrence in ``Z[a, b]``."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    ub = bits_of(u, n_max + 1)
    return _recurrence(A, B, ub, ub, n_max)


def compute_f_tilde(a, b, u, v, n_max, symbolic=False):
    """Two-sequence variant ``f(n) = a f(n-1-u_n) + b f(n-2-v_n)``."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    ub = bits_of(u, n_max + 1)
    vb = bits_of(v, n_max + 1)
    if symbolic:
        return _recurrence(A, B, ub, vb, n_max)
    return _recurrence(int(a), int(b), ub, vb, n_max)


def compute_h(f, table=None):
    """Ratios of consecutive terms; undefined where ``f(n)`` vanishes."""
    if f and isinstance(f[0], PolyZab):
        table = table if table is not None else InternTable()
        out = RatioSeries(table=table)
        for n in range(len(f) - 1):
            if f[n].is_zero():
                out.append(RatioPoint(n, None, False))
            else:
                out.append(RatioPoint(n, table.intern(RatFn(f[n + 1], f[n])), True))
        return out
    out = RatioSeries()
    for n in range(len(f) - 1):
        if f[n] == 0:
            out.append(RatioPoint(n, None, False))
        else:
            out.append(RatioPoint(n, Fraction(f[n + 1], f[n]), True))
    return out


compute_h_tilde = compute_h


class RatioEngine:
    """Memoized pair-state machine for symbolic ratios.

    A state is the pair ``(h(n), h(n+1))`` of intern ids, stored with one
    representative triple proportional to ``(f(n), f(n+1), f(n+2))``. Reading
    ``(u, v) = (u_{n+3}, v_{n+3})`` moves to ``(h(n+1), h(n+2))``. Because the
    next triple is linear in the current one, any representative gives the
    same successor pair, so transitions are cached per ``(state, u, v)``.
    """

    def __init__(self, table=None):
        self.table = table if table is not None else InternTable()
        self.pairs = []
        self.triples = []
        self._by_pair = {}
        self._next = {}
        self.initial = self.state_of(ONE, ONE, A + B)

    def state_of(self, f0, f1, f2):
        pair = (self.table.intern(RatFn(f1, f0)), self.table.intern(RatFn(f2, f1)))
        sid = self._by_pair.get(pair)
        if sid is None:
            sid = len(self.pairs)
            self._by_pair[pair] = sid
            self.pairs.append(pair)
            self.triples.append((f0, f1, f2))
        return sid

    def step(self, sid, u, v=None):
        v = u if v is None else v
        key = (sid, u, v)
        nxt = self._next.get(key)
        if nxt is None:
            f0, f1, f2 = self.triples[sid]
            trip = (f0, f1, f2)
            f3 = A * trip[2 - u] + B * trip[1 - v]
            nxt = self.state_of(f1, f2, f3)
            self._next[key] = nxt
        return nxt

    def output(self, sid):
        return self.pairs[sid][0]

    def value(self, sid):
        return self.table[self.pairs[sid][0]]

    def run(self, u, horizon, v=None):
        """Intern ids of ``h(0..horizon-1)``."""
        ub = bits_of(u, horizon + 3)
        vb = ub if v is None else bits_of(v, horizon + 3)
        ids = []
        sid = self.initial
        for n in range(horizon):
            ids.append(self.pairs[sid][0])
            sid = self.step(sid, ub[n + 3], vb[n + 3])
        return ids


def symbolic_ratios(u, horizon, engine=None, v=None):
    """Symbolic ``h(0..horizon-1)`` as a :class:`RatioSeries` of intern ids."""
    engine = engine or RatioEngine()
    ids = engine.run(u, horizon, v=v)
    return RatioSeries((RatioPoint(n, i, True) for n, i in enumerate(ids)), table=engine.table)


def numeric_ratios(a, b, u, horizon, v=None):
    if v is None:
        f = compute_f_numeric(a, b, u, horizon)
    else:
        f = compute_f_tilde(a, b, u, v, horizon)
    return compute_h(f)


def _report(positions, horizon):
    gaps = Counter(q - p for p, q in zip(positions, positions[1:]))
    return ResetReport(positions, gaps, max(gaps, default=0), horizon)


def reset_set(u, horizon):
    """Indices ``n < horizon`` with ``(u_n, u_{n+1}, u_{n+2}) = (0, 1, 0)``, plus 0."""
    if horizon < 3:
        raise ValueError("horizon must be at least 3")
    ub = bits_of(u, horizon + 2)
    pos = [0] + [n for n in range(1, horizon) if ub[n] == 0 and ub[n + 1] == 1 and ub[n + 2] == 0]
    return _report(pos, horizon)


def reset_set_tilde(u, v, horizon):
    """Two-sequence reset indices: ``(u_n, u_{n+1})`` in ``{01, 10}`` and a ``010`` block in ``v``."""
    if horizon < 3:
        raise ValueError("horizon must be at least 3")
    ub = bits_of(u, horizon + 2)
    vb = bits_of(v, horizon + 2)
    pos = [0] + [
        n
        for n in range(1, horizon)
        if ub[n] != ub[n + 1] and vb[n] == 0 and vb[n + 1] == 1 and vb[n + 2] == 0
    ]
    return _report(pos, horizon)


def reset_set_general(r, u, horizon):
    """Indices with ``(u_n, ..., u_{n+r}) = (0, 1, ..., r-1, 0)``, plus 0."""
    pattern = list(range(r)) + [0]
    ub = bits_of(u, horizon + r)
    pos = [0] + [n for n in range(1, horizon) if ub[n : n + r + 1] == pattern]
    return _report(pos, horizon)


def substitute_blocks(word, direction, start=2):
    """One left-to-right pass replacing ``000 -> 0110`` (expand) or back (contract).

    Only occurrences beginning at index ``>= start`` are touched; the
    ratio-set invariance needs ``start >= 2``.
    """
    if start < 2:
        raise ValueError("block substitution is only valid from index 2 on")
    if direction == "expand":
        old, new = [0, 0, 0], [0, 1, 1, 0]
    elif direction == "contract":
        old, new = [0, 1, 1, 0], [0, 0, 0]
    else:
        raise ValueError(f"unknown direction {direction!r}")
    word = list(word)
    out = word[:start]
    i = start
    w = len(old)
    while i < len(word):
        if word[i : i + w] == old:
            out.extend(new)
            i += w
        else:
            out.append(word[i])
            i += 1
    return out


def value_set(points):
    """Distinct defined values with counts and first/last indices."""
    vs = ValueSet(table=getattr(points, "table", None))
    for p in points:
        if not p.defined:
            vs.undefined += 1
            continue
        st = vs.entries.get(p.value)
        if st is None:
            vs.entries[p.value] = ValueStats(1, p.n, p.n)
        else:
            st.count += 1
            st.last = p.n
    return vs


def recover_u(points, table=None):
    """Recover ``[u_3, u_4, ...]`` from symbolic ratios ``h(0), h(1), ...``.

    ``u_{n+1} = 0`` iff ``h(n) = a + b/h(n-1)``; otherwise
    ``h(n) = a/h(n-1) + b/(h(n-1) h(n-2))`` must hold.
    """
    table = table if table is not None else points.table
    if table is None:
        raise ValueError("symbolic ratios required")
    vals = [table[p.value] if isinstance(p.value, int) else p.value for p in points]
    out = []
    for n in range(2, len(vals)):
        h0, h1, h2 = vals[n - 2], vals[n - 1], vals[n]
        zero_case = h2 == A + B / h1
        one_case = h2 == A / h1 + B / (h1 * h0)
        if zero_case and one_case:
            raise RecoveryError(n, "both recurrence branches match; the ratio table is inconsistent")
        if zero_case:
            out.append(0)
        elif one_case:
            out.append(1)
        else:
            raise RecoveryError(n, "no recurrence branch matches; input is not a ratio sequence")
    return out


def compute_f_general_order(r, coeffs, u, n_max):
    """Order-``r`` analogue: ``f(n) = sum_j a_j f(n - j - u_n)`` for ``n >= r + 1``.

    ``f(n) = 1`` for ``n <= r - 1`` and ``f(r) = sum_j a_j``.
    """
    if r < 2 or len(coeffs) != r:
        raise ValueError("need r >= 2 and exactly r coefficients")
    if n_max < r + 1:
        raise ValueError("n_max must be at least r + 1")
    ub = bits_of(u, n_max + 1)
    bad = [x for x in ub if not 0 <= x < r]
    if bad:
        raise ValueError(f"driving sequence values must lie in 0..{r - 1}, got {bad[0]}")
    f = [1] * r + [sum(coeffs)]
    for n in range(r + 1, n_max + 1):
        f.append(sum(c * f[n - j - ub[n]] for j, c in enumerate(coeffs, start=1)))
    return f


def bound_single(c):
    return 2 ** (c - 1)


def bound_pair(c):
    return 4 ** (c - 1) + 1


def bound_general(r, c):
    return 1 + (r ** (c - r + 1) - 1) // (r - 1)
