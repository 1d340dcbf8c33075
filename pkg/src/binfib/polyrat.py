"""Exact arithmetic in Z[a, b] and its fraction field.

Polynomials are sparse maps ``(i, j) -> c`` meaning ``c * a**i * b**j``.
Rational functions are never reduced by a polynomial gcd; equality is decided
by cross-multiplication and interning is sped up with modular fingerprints.
"""
from __future__ import annotations

import os
import random
import re
from fractions import Fraction
from math import gcd

__all__ = [
    "PolyZab",
    "RatFn",
    "InternTable",
    "FingerprintPoints",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "ratfn_eq",
    "parse_poly",
    "parse_ratfn",
    "set_fingerprint_seed",
    "A",
    "B",
    "ONE",
    "ZERO",
]

FINGERPRINT_PRIME = (1 << 61) - 1


def _order_key(mono):
    # degree-lexicographic with a > b
    i, j = mono
    return (i + j, i)


class PolyZab:
    """Sparse bivariate polynomial with integer coefficients.

    Instances are immutable. Terms are kept in descending degree-lex order.
    """

    __slots__ = ("_terms", "_hash", "_fp")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (i, j), c in items:
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial {(i, j)}")
                c = int(c)
                if c:
                    clean[(int(i), int(j))] = clean.get((int(i), int(j)), 0) + c
            clean = {m: c for m, c in clean.items() if c}
        self._terms = dict(sorted(clean.items(), key=lambda t: _order_key(t[0]), reverse=True))
        self._hash = None
        self._fp = {}

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: terms already nonzero; ordering applied here
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items(), key=lambda t: _order_key(t[0]), reverse=True))
        obj._hash = None
        obj._fp = {}
        return obj

    @classmethod
    def constant(cls, c):
        return cls._raw({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls._raw({(i, j): int(c)} if c else {})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def degree(self):
        return max((i + j for i, j in self._terms), default=-1)

    def leading(self):
        """Leading ``((i, j), c)`` under the degree-lex order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def content(self):
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def constant_term(self):
        return self._terms.get((0, 0), 0)

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, PolyZab):
            return other
        if isinstance(other, int):
            return PolyZab.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return PolyZab._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyZab._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return PolyZab._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative int")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        if not c:
            return ZERO
        return PolyZab._raw({m: c * v for m, v in self._terms.items()})

    def exact_div_int(self, c):
        return PolyZab._raw({m: v // c for m, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyZab.constant(other)
        if not isinstance(other, PolyZab):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation -------------------------------------------------------------

    def __call__(self, a, b):
        return poly_eval(self, a, b)

    def eval_mod(self, a0, b0, p=FINGERPRINT_PRIME):
        key = (a0, b0, p)
        hit = self._fp.get(key)
        if hit is not None:
            return hit
        total = 0
        for (i, j), c in self._terms.items():
            total += c * pow(a0, i, p) * pow(b0, j, p)
        total %= p
        self._fp[key] = total
        return total

    # text -------------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self._terms.items():
            factors = []
            if i:
                factors.append("a" if i == 1 else f"a^{i}")
            if j:
                factors.append("b" if j == 1 else f"b^{j}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"PolyZab({str(self)!r})"


ZERO = PolyZab._raw({})
ONE = PolyZab._raw({(0, 0): 1})
A = PolyZab._raw({(1, 0): 1})
B = PolyZab._raw({(0, 1): 1})


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_eval(p, a, b):
    """Exact value of ``p`` at ``(a, b)``; inputs may be ints or Fractions."""
    a = Fraction(a)
    b = Fraction(b)
    total = Fraction(0)
    apow = {}
    bpow = {}
    for (i, j), c in p.items():
        if i not in apow:
            apow[i] = a ** i
        if j not in bpow:
            bpow[j] = b ** j
        total += c * apow[i] * bpow[j]
    return total


_TERM_RE = re.compile(
    r"""^(?P<coef>\d+)?\*?
        (?:(?P<a>a)(?:\^(?P<ai>\d+))?)?\*?
        (?:(?P<b>b)(?:\^(?P<bj>\d+))?)?$""",
    re.X,
)


def parse_poly(text):
    """Parse the rendering produced by ``str(PolyZab)``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ZERO
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    terms = {}
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        body = chunk.lstrip("+-")
        m = _TERM_RE.match(body)
        if not m or not body:
            raise ValueError(f"bad term {chunk!r} in {text!r}")
        if m.group("coef") is None and not (m.group("a") or m.group("b")):
            raise ValueError(f"bad term {chunk!r} in {text!r}")
        coef = int(m.group("coef")) if m.group("coef") else 1
        i = (int(m.group("ai")) if m.group("ai") else 1) if m.group("a") else 0
        j = (int(m.group("bj")) if m.group("bj") else 1) if m.group("b") else 0
        terms[(i, j)] = terms.get((i, j), 0) + sign * coef
    return PolyZab(terms)


class FingerprintPoints:
    """Evaluation point ``(a0, b0)`` modulo the Mersenne prime 2**61 - 1."""

    def __init__(self, seed=0):
        rng = random.Random(seed)
        self.seed = seed
        self.p = FINGERPRINT_PRIME
        self.a0 = rng.randrange(2, self.p - 1)
        self.b0 = rng.randrange(2, self.p - 1)

    def poly(self, p):
        return p.eval_mod(self.a0, self.b0, self.p)

    def ratfn(self, x):
        """Fingerprint of a rational function; ``None`` when the denominator vanishes."""
        d = self.poly(x.den)
        if d == 0:
            return None
        return self.poly(x.num) * pow(d, self.p - 2, self.p) % self.p


_default_points = None


def set_fingerprint_seed(seed):
    global _default_points
    _default_points = FingerprintPoints(seed)
    return _default_points


def default_points():
    global _default_points
    if _default_points is None:
        _default_points = FingerprintPoints(int(os.environ.get("BINFIB_SEED", "0")))
    return _default_points


class RatFn:
    """Quotient ``num / den`` of two polynomials, kept in canonical form.

    Canonical means the integer content shared by numerator and denominator is
    divided out and the denominator's leading coefficient is positive. Common
    polynomial factors are *not* removed. ``==`` is cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, int):
            num = PolyZab.constant(num)
        if isinstance(den, int):
            den = PolyZab.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = gcd(num.content(), den.content())
        if den.leading()[1] < 0:
            g = -g
        if g != 1:
            num = num.exact_div_int(g)
            den = den.exact_div_int(g)
        self.num = num
        self.den = den

    @property
    def canonical(self):
        return True

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = _as_ratfn(other)
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_ratfn(other))

    def __rsub__(self, other):
        return _as_ratfn(other) - self

    def __mul__(self, other):
        other = _as_ratfn(other)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfn(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfn(other) / self

    def __eq__(self, other):
        try:
            other = _as_ratfn(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def evaluate(self, a, b):
        """Exact value at ``(a, b)``, or ``None`` where the denominator vanishes."""
        d = poly_eval(self.den, a, b)
        if d == 0:
            return None
        return poly_eval(self.num, a, b) / d

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFn({str(self)!r})"


def _as_ratfn(x):
    if isinstance(x, RatFn):
        return x
    if isinstance(x, (PolyZab, int)):
        return RatFn(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a rational function")


def ratfn_eq(x, y):
    return _as_ratfn(x) == _as_ratfn(y)


def parse_ratfn(text):
    s = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
    if m:
        return RatFn(parse_poly(m.group(1)), parse_poly(m.group(2)))
    return RatFn(parse_poly(s))


class InternTable:
    """Assigns stable small ids to rational functions up to equality.

    Fingerprints narrow the candidates; every merge is confirmed by exact
    cross-multiplication. Not thread-safe: one table per execution context.
    """

    def __init__(self, points=None):
        self.points = points or default_points()
        self.values = []
        self._buckets = {}
        self._no_fp = []

    def __len__(self):
        return len(self.values)

    def __getitem__(self, idx):
        return self.values[idx]

    def __iter__(self):
        return iter(self.values)

    def find(self, x):
        x = _as_ratfn(x)
        fp = self.points.ratfn(x)
        if fp is None:
            candidates = range(len(self.values))
        else:
            candidates = self._buckets.get(fp, []) + self._no_fp
        for idx in candidates:
            if self.values[idx] == x:
                return idx
        return None

    def intern(self, x):
        x = _as_ratfn(x)
        idx = self.find(x)
        if idx is not None:
            return idx
        idx = len(self.values)
        self.values.append(x)
        fp = self.points.ratfn(x)
        if fp is None:
            self._no_fp.append(idx)
        else:
            self._buckets.setdefault(fp, []).append(idx)
        return idx

    def render(self, idx):
        return str(self.values[idx])
