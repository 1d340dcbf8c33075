"""0-1 driving sequences and the command-line sequence grammar.

Grammar::

    ptm | rs | pow2 | squares | zero | one
    periodic:<pre>;<per>      e.g. periodic:;010
    scaled:<spec>/<d>         n -> s(n // d)
    dfao:<path>               Walnut-format automaton file
    literal:<bits>;<spec>     finite prefix followed by another sequence
"""
from __future__ import annotations

from math import isqrt


class SpecError(ValueError):
    """Raised for a malformed sequence spec string."""


class BinarySeq:
    """Index -> bit. Subclasses implement ``_at``; evaluation is total."""

    def __getitem__(self, n):
        if n < 0:
            raise IndexError("negative index")
        return self._at(n)

    def _at(self, n):  # pragma: no cover - abstract
        raise NotImplementedError

    def prefix(self, length):
        return [self._at(n) for n in range(length)]

    def spec(self):
        return None

    def __repr__(self):
        s = self.spec()
        return f"{type(self).__name__}({s!r})" if s else type(self).__name__ + "()"


class ThueMorse(BinarySeq):
    def _at(self, n):
        return bin(n).count("1") & 1

    def spec(self):
        return "ptm"


class RudinShapiro(BinarySeq):
    """0-1 Rudin-Shapiro: parity of the number of (overlapping) ``11`` blocks in binary."""

    def _at(self, n):
        return bin(n & (n >> 1)).count("1") & 1

    def spec(self):
        return "rs"


class PowersOfTwo(BinarySeq):
    def _at(self, n):
        return 1 if n > 0 and n & (n - 1) == 0 else 0

    def spec(self):
        return "pow2"


class Squares(BinarySeq):
    def _at(self, n):
        r = isqrt(n)
        return 1 if r * r == n else 0

    def spec(self):
        return "squares"


class Periodic(BinarySeq):
    def __init__(self, preperiod, period):
        self.preperiod = _bits(preperiod)
        self.period = _bits(period)
        if not self.period:
            raise ValueError("period must be nonempty")

    def _at(self, n):
        m = len(self.preperiod)
        if n < m:
            return self.preperiod[n]
        return self.period[(n - m) % len(self.period)]

    def spec(self):
        pre = "".join(map(str, self.preperiod))
        per = "".join(map(str, self.period))
        return f"periodic:{pre};{per}"


class Scaled(BinarySeq):
    """``n -> inner[n // divisor]``."""

    def __init__(self, inner, divisor):
        if divisor < 1:
            raise ValueError("divisor must be >= 1")
        self.inner = inner
        self.divisor = divisor

    def _at(self, n):
        return self.inner[n // self.divisor]

    def spec(self):
        inner = self.inner.spec()
        return f"scaled:{inner}/{self.divisor}" if inner else None


class Literal(BinarySeq):
    """Finite prefix, then ``suffix`` (indexed from where the prefix ends)."""

    def __init__(self, prefix, suffix):
        self.head = _bits(prefix)
        self.suffix = suffix

    def _at(self, n):
        if n < len(self.head):
            return self.head[n]
        return self.suffix[n - len(self.head)]

    def spec(self):
        inner = self.suffix.spec()
        return f"literal:{''.join(map(str, self.head))};{inner}" if inner else None


class Residues(BinarySeq):
    """Pick the term by ``n mod modulus``; each part is a bit or a sequence."""

    def __init__(self, modulus, parts):
        if len(parts) != modulus:
            raise ValueError("need one part per residue")
        self.modulus = modulus
        self.parts = list(parts)

    def _at(self, n):
        part = self.parts[n % self.modulus]
        return part if isinstance(part, int) else part[n]


class Automatic(BinarySeq):
    """Sequence read off a DFAO (outputs must be 0/1)."""

    def __init__(self, dfao, path=None):
        self.dfao = dfao
        self.path = path

    def _at(self, n):
        return int(self.dfao.evaluate(n))

    def spec(self):
        return f"dfao:{self.path}" if self.path else None


class Constant(BinarySeq):
    def __init__(self, bit):
        self.bit = int(bit)

    def _at(self, n):
        return self.bit

    def spec(self):
        return f"periodic:;{self.bit}"


class Word(BinarySeq):
    """Finite word padded with a fill value; handy for finite experiments."""

    def __init__(self, bits, fill=0):
        self.bits = list(bits)
        self.fill = fill

    def _at(self, n):
        return self.bits[n] if n < len(self.bits) else self.fill


def _bits(word):
    if isinstance(word, str):
        if any(ch not in "01" for ch in word):
            raise ValueError(f"not a 0-1 word: {word!r}")
        return [int(ch) for ch in word]
    out = [int(x) for x in word]
    if any(x not in (0, 1) for x in out):
        raise ValueError("not a 0-1 word")
    return out


def parse_seq(spec):
    """Build a :class:`BinarySeq` from a spec string; raises :class:`SpecError`."""
    s = spec.strip()
    simple = {
        "ptm": ThueMorse,
        "rs": RudinShapiro,
        "pow2": PowersOfTwo,
        "squares": Squares,
    }
    if s in simple:
        return simple[s]()
    if s in ("zero", "one"):
        return Constant(1 if s == "one" else 0)
    kind, sep, rest = s.partition(":")
    if not sep:
        raise SpecError(f"unknown sequence spec {spec!r}")
    try:
        if kind == "periodic":
            pre, semi, per = rest.partition(";")
            if not semi:
                raise SpecError("periodic needs '<pre>;<per>'")
            return Periodic(pre, per)
        if kind == "scaled":
            inner, slash, d = rest.rpartition("/")
            if not slash or not d.isdigit():
                raise SpecError("scaled needs '<spec>/<d>'")
            return Scaled(parse_seq(inner), int(d))
        if kind == "literal":
            bits, semi, inner = rest.partition(";")
            if not semi:
                raise SpecError("literal needs '<bits>;<spec>'")
            return Literal(bits, parse_seq(inner))
        if kind == "dfao":
            from .walnut import read_walnut

            try:
                dfao = read_walnut(rest)
            except OSError as exc:
                raise SpecError(f"cannot read automaton {rest!r}: {exc}") from exc
            return Automatic(dfao, path=rest)
    except SpecError:
        raise
    except ValueError as exc:
        raise SpecError(f"{spec!r}: {exc}") from exc
    raise SpecError(f"unknown sequence kind {kind!r}")


def _value_tracker(bound, base):
    """lsd step tracking ``n`` exactly while ``n < bound`` (``None`` beyond)."""

    def step(st, d):
        v, pw = st
        if v is None:
            return st
        v += d * pw
        if v >= bound:
            return (None, 0)
        return (v, pw * base if pw < bound else pw)

    return step


def _periodic_dfao(pre, per, base):
    from .automata import from_machine, minimize

    m, p = len(pre), len(per)
    track = _value_tracker(max(m, 1), base)

    def step(st, d):
        small, r, pw = st
        return (track(small, d), (r + d * pw) % p, (pw * base) % p)

    def output(st):
        v = st[0][0]
        if v is not None and v < m:
            return pre[v]
        return per[(st[1] - m) % p]

    return minimize(from_machine(base, ((0, 1), 0, 1 % p), step, output))


def to_dfao(seq, base=2):
    """lsd DFAO generating ``seq``; raises ``ValueError`` if no construction is known."""
    from .automata import Dfao, ensure_lsd, from_machine, minimize, prefix_patch, shift_back

    if isinstance(seq, ThueMorse):
        _need_base(base, 2, seq)
        return Dfao(2, [[0, 1], [1, 0]], [0, 1])
    if isinstance(seq, RudinShapiro):
        _need_base(base, 2, seq)
        # state: (parity so far, previous digit)
        return minimize(
            from_machine(2, (0, 0), lambda st, d: ((st[0] + (st[1] & d)) & 1, d), lambda st: st[0])
        )
    if isinstance(seq, PowersOfTwo):
        _need_base(base, 2, seq)
        return Dfao(2, [[0, 1], [1, 2], [2, 2]], [0, 1, 0])
    if isinstance(seq, Constant):
        return Dfao(base, [[0] * base], [seq.bit])
    if isinstance(seq, Periodic):
        return _periodic_dfao(seq.preperiod, seq.period, base)
    if isinstance(seq, Automatic):
        if seq.dfao.base != base:
            raise ValueError("automaton base does not match")
        return ensure_lsd(seq.dfao)
    if isinstance(seq, Scaled):
        e, d = 0, seq.divisor
        while d % base == 0:
            d //= base
            e += 1
        if d != 1:
            raise ValueError(f"index scaling by {seq.divisor} is not a power of {base}")
        inner = to_dfao(seq.inner, base)
        # drop the e lowest digits, then run the inner automaton
        return minimize(
            from_machine(
                base,
                (0, inner.initial),
                lambda st, dig: (st[0] + 1, st[1]) if st[0] < e else (e, inner.delta[st[1]][dig]),
                lambda st: inner.outputs[st[1]],
            )
        )
    if isinstance(seq, Literal):
        tail = shift_back(to_dfao(seq.suffix, base), len(seq.head), fill=0)
        return prefix_patch(tail, seq.head)
    raise ValueError(f"{seq!r} has no automaton construction (it may not be {base}-automatic)")


def _need_base(base, want, seq):
    if base != want:
        raise ValueError(f"{seq!r} is built in base {want} only")
