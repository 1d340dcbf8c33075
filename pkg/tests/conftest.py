"""Shared brute-force oracles.

These deliberately avoid the package's engines: plain integer recursion for
``f``, sympy for symbolic ratios, and bit counting for the driving sequences.
"""
from fractions import Fraction

import sympy

a_sym, b_sym = sympy.symbols("a b")


def tm(n):
    return bin(n).count("1") % 2


def rs(n):
    # parity of the number of (possibly overlapping) 11 blocks
    return sum(1 for i in range(n.bit_length()) if (n >> i) & 3 == 3) % 2


def f_oracle(a, b, u, n_max):
    """Direct memoized recursion on the defining recurrence."""
    memo = {0: 1, 1: 1, 2: a + b}

    def f(n):
        if n not in memo:
            memo[n] = a * f(n - u(n) - 1) + b * f(n - u(n) - 2)
        return memo[n]

    for n in range(n_max + 1):
        f(n)
    return [memo[n] for n in range(n_max + 1)]


def h_oracle(a, b, u, n_max):
    f = f_oracle(a, b, u, n_max + 1)
    return [Fraction(f[n + 1], f[n]) if f[n] else None for n in range(n_max + 1)]


def sympy_f(u, n_max):
    f = [sympy.Integer(1), sympy.Integer(1), a_sym + b_sym]
    for n in range(3, n_max + 1):
        f.append(sympy.expand(a_sym * f[n - u(n) - 1] + b_sym * f[n - u(n) - 2]))
    return f


def sympy_ratio_classes(u, n_max):
    """Distinct ``f(n+1)/f(n)`` in Q(a, b) for ``n < n_max``, via sympy.cancel."""
    f = sympy_f(u, n_max)
    seen = set()
    for n in range(n_max):
        seen.add(sympy.cancel(f[n + 1] / f[n]))
    return seen




ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
