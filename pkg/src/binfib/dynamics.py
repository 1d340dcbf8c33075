"""Ratio dynamics for eventually periodic driving sequences.

Over one period the map ``h(n0 - 2) -> h(n0 - 2 + l)`` is a Moebius
transformation with an integer matrix, so the shape of the ratio set follows
from ``kappa = tr^2 / det``: a root of unity eigenvalue ratio gives a finite
orbit, distinct moduli give convergence, and an irrational rotation gives an
orbit dense in the real line. Periods made only of ones fall outside this and
are handled through the cubic ``X^3 - a X - b``.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import mpmath

from .polyrat import poly_eval
from .seqcore import PTM_D, compute_f_numeric
from .sequences import Periodic, PowersOfTwo, ThueMorse

__all__ = [
    "LinForm",
    "MobiusMatrix",
    "ClassifyResult",
    "ConditionReport",
    "g_sequence",
    "check_reset_run_identity",
    "pow2_identity_failures",
    "inclusion_conditions",
    "zero_run_conditions",
    "root_ratio_order",
    "L_forms",
    "period_mobius",
    "classify_mobius",
    "classify_all_ones",
    "classify_periodic_u",
    "empirical_orbit",
    "cross_validate",
    "d_zero_check",
    "ptm_zero_pattern",
]

KAPPA_ORDER = {Fraction(4): 1, Fraction(0): 2, Fraction(1): 3, Fraction(2): 4, Fraction(3): 6}
DIGITS = 30


@dataclass(frozen=True)
class LinForm:
    """``p x1 + q x2``."""

    p: int
    q: int

    def __call__(self, x1, x2):
        return self.p * x1 + self.q * x2

    def comb(self, a, other, b):
        return LinForm(a * self.p + b * other.p, a * self.q + b * other.q)


@dataclass(frozen=True)
class MobiusMatrix:
    """``x -> (r x + s) / (t x + u)``."""

    r: int
    s: int
    t: int
    u: int

    def __post_init__(self):
        if not (self.r or self.s or self.t or self.u):
            raise ValueError("zero matrix does not define a map")

    @property
    def det(self):
        return self.r * self.u - self.s * self.t

    @property
    def trace(self):
        return self.r + self.u

    @property
    def kappa(self):
        return Fraction(self.trace ** 2, self.det) if self.det else None

    def rows(self):
        return [[self.r, self.s], [self.t, self.u]]

    def apply_vec(self, p, q):
        """Projective action on ``x = p / q``."""
        return self.r * p + self.s * q, self.t * p + self.u * q

    def fixes(self, p, q):
        x, y = self.apply_vec(p, q)
        return x * q == y * p and (x, y) != (0, 0)


@dataclass
class ConditionReport:
    conditions: list  # (text, holds)
    applicable: bool

    def to_json(self):
        return json.dumps(asdict(self), indent=2)


@dataclass
class ClassifyResult:
    tag: str  # ConstantMap, FiniteOrbit, Accumulation, DenseInR, ZeroTail
    kappa: Fraction = None
    order: int = None
    h_period: int = None
    h_preperiod: int = None
    limits: list = field(default_factory=list)
    accumulation_count: int = None
    matrix: MobiusMatrix = None
    t: int = None
    n0: int = None
    x0: object = None
    observed_period: int = None
    observed_preperiod: int = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        d = asdict(self)
        d["kappa"] = None if self.kappa is None else _frac_str(self.kappa)
        d["x0"] = None if self.x0 is None else _proj_str(self.x0)
        d["matrix"] = self.matrix.rows() if self.matrix else None
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _proj_str(v):
    p, q = v
    return "inf" if q == 0 else _frac_str(Fraction(p, q))


def _norm(p, q):
    g = gcd(p, q) or 1
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return p, q


def g_sequence(a, b, n_max):
    """``g(0) = g(1) = 1``, ``g(n) = a g(n-1) + b g(n-2)``."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    g = [1, 1]
    for _ in range(2, n_max + 1):
        g.append(a * g[-1] + b * g[-2])
    return g[: n_max + 1]


@dataclass
class IdentityReport:
    checked: list  # (n0, d)
    skipped: list  # n0 with f(n0) = 0
    violations: list  # (n0, j)

    @property
    def ok(self):
        return not self.violations


def check_reset_run_identity(u, a, b, horizon):
    """Check ``h(n0 + j) = g(j+1)/g(j)`` after each ``0 1 0^(d-1)`` run with ``n0 >= 2``.

    Every maximal run ``u_{n0} = 0, u_{n0+1} = 1, u_{n0+2..n0+d} = 0`` with
    ``d >= 2`` inside the horizon is checked for ``0 <= j <= d - 1`` by
    cross-multiplication.
    """
    bits = u.prefix(horizon + 2) if hasattr(u, "prefix") else list(u)
    f = compute_f_numeric(a, b, bits, horizon)
    g = g_sequence(a, b, horizon + 1)
    rep = IdentityReport([], [], [])
    for n0 in range(2, horizon - 2):
        if bits[n0] != 0 or bits[n0 + 1] != 1 or bits[n0 + 2] != 0:
            continue
        d = 2
        while n0 + d + 1 < horizon and bits[n0 + d + 1] == 0:
            d += 1
        if f[n0] == 0:
            rep.skipped.append(n0)
            continue
        rep.checked.append((n0, d))
        for j in range(d):
            if f[n0 + j + 1] * g[j] != f[n0 + j] * g[j + 1]:
                rep.violations.append((n0, j))
    return rep


def pow2_identity_failures(a=1, b=1, n_lo=4, n_hi=2 ** 12):
    """Indices where ``f(n+1)/f(n) = g(m+2)/g(m+1)``, ``m = n - 2^floor(log2(n+1))``, fails.

    ``u`` is the indicator of the powers of two.
    """
    f = compute_f_numeric(a, b, PowersOfTwo(), n_hi + 1)
    g = g_sequence(a, b, n_hi + 3)
    bad = []
    for n in range(n_lo, n_hi + 1):
        m = n - (1 << ((n + 1).bit_length() - 1))
        if f[n + 1] * g[m + 1] != f[n] * g[m + 2]:
            bad.append(n)
    return bad


def _excluded_b(a):
    a2 = Fraction(a * a)
    return {-a2, -a2 / 2, -a2 / 3}


def inclusion_conditions(a, b):
    """Conditions under which ``010...0`` runs of every length make the ratio set infinite."""
    conds = [
        ("a != 0", a != 0),
        ("a + b != 1", a + b != 1),
        ("b not in {-a^2, -a^2/2, -a^2/3}", Fraction(b) not in _excluded_b(a)),
    ]
    return ConditionReport(conds, all(ok for _, ok in conds))


def zero_run_conditions(a, b):
    """Conditions under which arbitrarily long zero runs make the ratio set infinite."""
    disc = a * a + 4 * b
    square = disc >= 0 and isqrt(disc) ** 2 == disc
    conds = [
        ("a != 0", a != 0),
        ("b not in {-a^2, -a^2/2, -a^2/3}", Fraction(b) not in _excluded_b(a)),
        ("a^2 + 4b is not a square of an integer", not square),
    ]
    return ConditionReport(conds, all(ok for _, ok in conds))


def root_ratio_order(a, b):
    """Order of the root of unity ``beta/alpha`` for ``X^2 - aX - b``, or ``None``."""
    if a == 0 and b == 0:
        raise ValueError("(a, b) = (0, 0) has no roots to compare")
    if a == 0:
        return 2
    if 2 * b == -a * a:
        return 4
    if b == -a * a:
        return 3
    if 3 * b == -a * a:
        return 6
    return None


def L_forms(word, a, b):
    """``[L_{-2}, L_{-1}, L_0, ..., L_{len-1}]`` for a word starting with 0."""
    word = [int(x) for x in word]
    if not word or word[0] != 0:
        raise ValueError("the word must start with 0")
    L = [LinForm(0, 1), LinForm(1, 0), LinForm(a, b)]
    # L[k + 2] holds L_k
    for k in range(1, len(word)):
        if word[k] == 0:
            L.append(L[k + 1].comb(a, L[k], b))
        else:
            L.append(L[k].comb(a, L[k - 1], b))
    return L


def period_mobius(word, a, b):
    """Matrix of ``x -> L_{l-1}(x, 1) / L_{l-2}(x, 1)`` for a period starting at a 0."""
    word = [int(x) for x in word]
    if 0 not in word:
        raise ValueError("an all-ones period has no Moebius period map; use classify_all_ones")
    if word[0] != 0:
        raise ValueError("rotate the period so that it starts with 0")
    L = L_forms(word, a, b)
    l = len(word)
    top, bot = L[l + 1], L[l]
    return MobiusMatrix(top.p, top.q, bot.p, bot.q)


def _decimal(x):
    return mpmath.nstr(x, 20) if not isinstance(x, str) else x


def _hyperbolic_limit(M):
    """Attracting fixed point (minimal polynomial, decimal) of a hyperbolic matrix."""
    r, s, t, u = M.r, M.s, M.t, M.u
    if t == 0:
        if abs(r) > abs(u):
            return {"minpoly": "infinity", "decimal": "inf"}
        z = Fraction(s, u - r)
        return {"minpoly": f"x - ({_frac_str(z)})", "decimal": _decimal(mpmath.mpf(z.numerator) / z.denominator)}
    tr, det = M.trace, M.det
    disc = tr * tr - 4 * det
    with mpmath.workdps(DIGITS + 10):
        sq = mpmath.sqrt(disc)
        lam = (tr + sq) / 2 if tr > 0 else (tr - sq) / 2
        z = (lam - u) / t
        root = isqrt(disc) if disc >= 0 else -1
        if root * root == disc:
            lam_q = Fraction(tr + root, 2) if tr > 0 else Fraction(tr - root, 2)
            zq = (lam_q - u) / t
            return {"minpoly": f"x - ({_frac_str(zq)})", "decimal": _decimal(z)}
        return {"minpoly": f"{t}*x^2 + ({u - r})*x + ({-s})", "decimal": _decimal(z)}


def classify_mobius(M, x0=None):
    """Orbit type of ``M`` acting on ``x0`` (a Fraction, int, or projective pair)."""
    det = M.det
    if det == 0:
        return ClassifyResult("ConstantMap", matrix=M, notes=["singular matrix: the period map is constant"])
    kappa = M.kappa
    vec = _as_vec(x0) if x0 is not None else None
    if vec is not None and M.fixes(*vec):
        return ClassifyResult("FiniteOrbit", kappa=kappa, order=1, matrix=M, x0=vec,
                              limits=[{"minpoly": "fixed", "decimal": _proj_str(vec)}],
                              notes=["the starting value is a fixed point"])
    if kappa == 4:
        if M.s == 0 and M.t == 0 and M.r == M.u:
            return ClassifyResult("FiniteOrbit", kappa=kappa, order=1, matrix=M, x0=vec)
        if M.t == 0:
            lim = {"minpoly": "infinity", "decimal": "inf"}
        else:
            z = Fraction(M.r - M.u, 2 * M.t)
            lim = {"minpoly": f"x - ({_frac_str(z)})", "decimal": _decimal(mpmath.mpf(z.numerator) / z.denominator)}
        return ClassifyResult("Accumulation", kappa=kappa, matrix=M, x0=vec, limits=[lim],
                              notes=["parabolic: a single fixed point attracts every orbit"])
    if kappa in KAPPA_ORDER:
        return ClassifyResult("FiniteOrbit", kappa=kappa, order=KAPPA_ORDER[kappa], matrix=M, x0=vec)
    if kappa < 0 or kappa > 4:
        return ClassifyResult("Accumulation", kappa=kappa, matrix=M, x0=vec, limits=[_hyperbolic_limit(M)])
    return ClassifyResult("DenseInR", kappa=kappa, matrix=M, x0=vec,
                          notes=["elliptic with an eigenvalue ratio that is not a root of unity"])


def _as_vec(x):
    if isinstance(x, tuple):
        return _norm(*x)
    x = Fraction(x)
    return _norm(x.numerator, x.denominator)


def _integer_roots(a, b):
    """Integer roots of ``X^3 - a X - b`` (all rational roots are integers)."""
    if b == 0:
        cands = {0}
        if a >= 0 and isqrt(a) ** 2 == a:
            cands |= {isqrt(a), -isqrt(a)}
        return sorted(cands)
    out = []
    for d in range(1, isqrt(abs(b)) + 1):
        if b % d == 0:
            for c in (d, -d, b // d, -(b // d)):
                if c ** 3 - a * c - b == 0 and c not in out:
                    out.append(c)
    return sorted(out)


def _cubic_tail(a, b, s, count):
    s = list(s)
    while len(s) < count:
        s.append(a * s[-2] + b * s[-3])
    return s


def classify_all_ones(a, b, init=None, l=1):
    """Ratio behaviour of ``s_{k+3} = a s_{k+1} + b s_k`` from ``init = (s_0, s_1, s_2)``.

    The answer depends on the minimal polynomial of the actual sequence, a
    divisor of ``X^3 - a X - b``; ``init`` defaults to ``(1, 1, a + b)``, the
    start of the constant-one driving sequence.
    """
    if a == 0 and b == 0:
        raise ValueError("a = b = 0 gives an ultimately zero sequence")
    s = tuple(init) if init is not None else (1, 1, a + b)
    tail = _cubic_tail(a, b, s, 9)
    if all(x == 0 for x in tail[3:]):
        return ClassifyResult("ZeroTail", notes=["the sequence vanishes from some index on"])
    roots = _integer_roots(a, b)
    for rho in roots:
        if s[1] == rho * s[0] and s[2] == rho * s[1]:
            return ClassifyResult("FiniteOrbit", order=1, h_period=l, limits=[{"minpoly": f"x - ({rho})", "decimal": str(rho)}],
                                  notes=[f"geometric with ratio {rho}"])
    for rho in roots:
        q2 = rho * rho - a
        if s[2] + rho * s[1] + q2 * s[0] == 0:
            # s_{k+2} = -rho s_{k+1} - q2 s_k, a second-order recurrence
            M = MobiusMatrix(-rho, -q2, 1, 0)
            res = classify_mobius(M, (s[1], s[0]) if (s[1], s[0]) != (0, 0) else (s[2], s[1]))
            res.notes.append(f"sequence lies in the invariant plane of x^2 + ({rho})*x + ({q2})")
            if res.order:
                res.h_period = res.order * l
            return res
    disc = 4 * a ** 3 - 27 * b * b
    if disc == 0:
        alpha2 = Fraction(3 * b, a)
        return ClassifyResult("Accumulation", limits=[{"minpoly": f"x - ({_frac_str(alpha2)})", "decimal": _frac_str(alpha2)}],
                              notes=["double root; the simple root dominates"])
    cubic = f"x^3 - ({a})*x - ({b})"
    with mpmath.workdps(60):
        rts = mpmath.polyroots([1, 0, -a, -b], maxsteps=200, extraprec=200)
        if disc < 0:
            rho = next(x for x in rts if abs(mpmath.im(x)) < mpmath.mpf(10) ** -40)
            rho = mpmath.re(rho)
            if a == 0:
                return ClassifyResult("FiniteOrbit", order=3, h_period=3 * l,
                                      notes=["all roots share one modulus; ratios of roots are cube roots of unity"])
            if abs(rho) ** 3 > abs(b):
                return ClassifyResult("Accumulation", limits=[{"minpoly": cubic, "decimal": _decimal(rho)}],
                                      notes=["the real root dominates the complex pair"])
            return ClassifyResult("DenseInR", notes=["the complex pair dominates and its ratio is not a root of unity"])
        if b == 0:
            return ClassifyResult("FiniteOrbit", order=2, h_period=2 * l,
                                  notes=["roots 0 and +-sqrt(a): ratios alternate"])
        real = sorted((mpmath.re(x) for x in rts), key=lambda x: -abs(x))
        return ClassifyResult("Accumulation", limits=[{"minpoly": cubic, "decimal": _decimal(real[0])}],
                              notes=["three real roots with a unique dominant one"])


def _t_index(bits, m):
    return next(n for n in range(max(m - 2, 0), max(m - 2, 0) + len(bits)) if bits[n + 2] == 0)


def _observed_cycle(h, start, max_period):
    """Least (preperiod, period) of ``h[start:]`` visible in the list, or ``(None, None)``."""
    N = len(h)
    for p in range(1, max_period + 1):
        # earliest index from which h is p-periodic up to the end
        i = N - p - 1
        while i >= start and h[i] == h[i + p]:
            i -= 1
        pre = i + 1
        if N - pre >= 4 * p + 8:
            return pre, p
    return None, None


def _h_exact(f):
    return [None if f[n] == 0 else Fraction(f[n + 1], f[n]) for n in range(len(f) - 1)]


def classify_periodic_u(preperiod, period, a, b):
    """Classify the ratio set when ``u`` is ``preperiod`` followed by ``period`` repeated."""
    u = Periodic(preperiod, period)
    m, l = len(u.preperiod), len(u.period)
    if a == 0 and b == 0:
        return ClassifyResult("ZeroTail", t=0, n0=2, notes=["a = b = 0 gives f(n) = 0 for every n >= 2"])
    if 0 not in u.period:
        t = max(m - 3, 0)
        f = compute_f_numeric(a, b, u, t + 3)
        res = classify_all_ones(a, b, init=f[t : t + 3], l=l)
        res.t = t
        if res.tag == "FiniteOrbit" and res.h_preperiod is None:
            res.h_preperiod = t
        _attach_observed(res, a, b, u, t, l)
        return res
    bits = u.prefix(m + 2 * l + 4)
    t = _t_index(bits, m)
    n0 = t + 2
    word = u.prefix(n0 + l)[n0:]
    M = period_mobius(word, a, b)
    f = compute_f_numeric(a, b, u, max(n0 + 2, 3))
    x0 = (f[n0 - 1], f[n0 - 2])
    if x0 == (0, 0) or M.apply_vec(*x0) == (0, 0):
        res = ClassifyResult("ZeroTail", matrix=M, t=t, n0=n0,
                             notes=["f vanishes identically from some index on"])
        return res
    res = classify_mobius(M, x0)
    res.t, res.n0 = t, n0
    if res.tag == "FiniteOrbit":
        res.h_period = res.order * l
        res.h_preperiod = t
    elif res.tag == "ConstantMap":
        res.h_period = l
        res.h_preperiod = t + l
    elif res.tag == "Accumulation":
        res.accumulation_count = _limit_count(M, word, a, b, res)
    _attach_observed(res, a, b, u, t, l)
    return res


def _limit_count(M, word, a, b, res):
    """Number of distinct images of the limit under the per-residue maps (at most ``l``)."""
    lim = res.limits[0]["decimal"]
    if lim == "inf":
        z = (mpmath.mpf(1), mpmath.mpf(0))
    else:
        z = (mpmath.mpf(lim), mpmath.mpf(1))
    L = L_forms(word, a, b)
    pts = set()
    for i in range(len(word)):
        num = L[i + 2](*z)
        den = L[i + 1](*z)
        if abs(den) < mpmath.mpf(10) ** -12:
            pts.add("inf")
        else:
            pts.add(mpmath.nstr(num / den, 10))
    return len(pts)


def _attach_observed(res, a, b, u, t, l):
    if res.tag not in ("FiniteOrbit", "ConstantMap"):
        return
    bound = (res.h_period or 6 * l)
    f = compute_f_numeric(a, b, u, t + 12 * bound + 40)
    h = _h_exact(f)
    res.observed_preperiod, res.observed_period = _observed_cycle(h, 0, bound)


def empirical_orbit(M, x0, steps):
    """Exact orbit statistics of ``x0`` under ``M``."""
    vec = _as_vec(x0)
    seen = {}
    poles = 0
    orbit = []
    for i in range(steps + 1):
        orbit.append(vec)
        seen.setdefault(vec, i)
        if vec[1] == 0:
            poles += 1
        vec = _norm(*M.apply_vec(*vec))
        if vec == (0, 0):
            break
    finite = sorted(Fraction(p, q) for p, q in set(orbit) if q)
    gaps = [float(y - x) for x, y in zip(finite, finite[1:])]
    prev = orbit[-2] if len(orbit) > 1 else orbit[-1]
    return {
        "distinct": len(set(orbit)),
        "min_gap": min(gaps) if gaps else None,
        "tail_difference": _chordal(prev, orbit[-1]),
        "pole_hits": poles,
        "orbit": orbit,
    }


def _to_float(v):
    p, q = v
    if q == 0:
        return math.inf
    return float(Fraction(p, q))


def _chordal(v, w):
    """Chordal distance on the real projective line between ``p1/q1`` and ``p2/q2``."""

    def unit(p, q):
        scale = max(abs(p), abs(q))
        x, y = float(Fraction(p, scale)), float(Fraction(q, scale))
        r = math.hypot(x, y)
        return x / r, y / r

    x1, y1 = unit(*v)
    x2, y2 = unit(*w)
    return abs(x1 * y2 - x2 * y1)


def _f_float_ratios(a, b, u, steps):
    """``h(0), ..., h(steps - 1)`` in floating point, rescaling to avoid overflow."""
    bits = u.prefix(steps + 2)
    w = [1.0, 1.0, float(a + b)]  # f(n-3), f(n-2), f(n-1) with n = 3
    out = [1.0, float(a + b)]
    for n in range(3, steps + 1):
        k = bits[n]
        val = a * w[2 - k] + b * w[1 - k]
        out.append(val / w[2] if w[2] != 0 else math.inf)
        w = [w[1], w[2], val]
        s = max(abs(x) for x in w)
        if s > 1e100 or 0 < s < 1e-100:
            w = [x / s for x in w]
    return out[:steps]


def cross_validate(preperiod, period, a, b, res=None, finite_steps=None, cauchy_steps=300,
                   dense_steps=10 ** 5, tol=1e-6):
    """Compare a classification against orbit statistics.

    Returns ``(ok, detail)``. Finite tags need the tail of ``h`` to take at
    most ``h_period`` values; ``Accumulation`` needs each residue class mod the
    period to move by less than ``tol`` (chordal) after ``cauchy_steps``
    periods; ``DenseInR`` needs at least 25 distinct values in each of
    ``[-2,-1], [-1,0], [0,1], [1,2]`` within ``dense_steps`` terms.
    """
    res = res or classify_periodic_u(preperiod, period, a, b)
    u = Periodic(preperiod, period)
    m, l = len(u.preperiod), len(u.period)
    start = m + 4
    if res.tag == "ZeroTail":
        f = compute_f_numeric(a, b, u, start + 12 * l + 12)
        ok = all(x == 0 for x in f[-6 * l - 6 :])
        return ok, {"zero_tail": ok}
    if res.tag in ("FiniteOrbit", "ConstantMap"):
        bound = res.h_period or l
        steps = finite_steps or (start + 60 * bound + 60)
        f = compute_f_numeric(a, b, u, steps)
        tail = _h_exact(f)[steps // 2 :]
        distinct = len(set(tail))
        return distinct <= bound, {"distinct_tail_values": distinct, "bound": bound}
    if res.tag == "Accumulation":
        last = start + cauchy_steps * l + l
        f = compute_f_numeric(a, b, u, last + 1)
        worst = 0.0
        for i in range(l):
            n1 = start + cauchy_steps * l + i
            worst = max(worst, _chordal((f[n1 - l + 1], f[n1 - l]), (f[n1 + 1], f[n1])))
        return worst < tol, {"tail_difference": worst, "tol": tol}
    if res.tag == "DenseInR":
        h = _f_float_ratios(a, b, u, dense_steps)
        counts = []
        for lo in (-2, -1, 0, 1):
            counts.append(len({x for x in h if lo <= x <= lo + 1}))
        return min(counts) >= 25, {"distinct_per_interval": counts}
    raise ValueError(f"unknown tag {res.tag}")


_D_NOTES = {
    (-2, 4): "f(n) = 0 for n >= 3 (PTM driving sequence)",
    (1, -1): "f(n) = 0 and f(n) != 0 both hold for infinitely many n (PTM driving sequence)",
    (2, -2): "f(n) = 0 for n >= 10 (PTM driving sequence)",
}


def d_zero_check(i, a, b):
    """Whether ``d_i(a, b) = 0`` (so the next ratio class is undefined), with known consequences."""
    if i not in range(1, 7):
        raise ValueError("i must lie in 1..6")
    zero = poly_eval(PTM_D[i], a, b) == 0
    note = _D_NOTES.get((a, b), "") if zero else ""
    return zero, note


def ptm_zero_pattern(a, b, horizon=2 ** 12):
    """Indices ``n < horizon`` with ``f(n) = 0`` for the PTM driving sequence."""
    f = compute_f_numeric(a, b, ThueMorse(), horizon - 1)
    return [n for n, x in enumerate(f) if x == 0]
