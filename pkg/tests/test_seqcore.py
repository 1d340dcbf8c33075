from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from binfib.polyrat import A, B, RatFn
from binfib.seqcore import (
    PTM_D,
    RatioEngine,
    bound_general,
    bound_pair,
    bound_single,
    compute_f_general_order,
    compute_f_numeric,
    compute_f_symbolic,
    compute_f_tilde,
    compute_h,
    numeric_ratios,
    ptm_ratio_classes,
    recover_u,
    reset_set,
    reset_set_general,
    reset_set_tilde,
    substitute_blocks,
    symbolic_ratios,
    value_set,
)
from binfib.sequences import Periodic, ThueMorse, Word

from conftest import f_oracle, h_oracle, sympy_f, sympy_ratio_classes, tm

words = st.lists(st.integers(0, 1), min_size=40, max_size=80)
small = st.integers(-4, 4)


def test_ptm_numeric_prefix():
    # frozen from the direct recursion oracle
    assert compute_f_numeric(1, 1, ThueMorse(), 8) == [1, 1, 2, 3, 3, 6, 9, 9, 15]
    h = compute_h(compute_f_numeric(1, 1, ThueMorse(), 8))
    assert [p.value for p in h] == [1, 2, Fraction(3, 2), 1, 2, Fraction(3, 2), 1, Fraction(5, 3)]


def test_symbolic_matches_sympy():
    f = compute_f_symbolic(ThueMorse(), 40)
    g = sympy_f(tm, 40)
    for n in (5, 17, 40):
        assert sympy.expand(sympy.sympify(str(f[n]).replace("^", "**")) - g[n]) == 0


def test_ptm_classes_against_sympy():
    classes = sympy_ratio_classes(tm, 48)
    assert len(classes) == 7
    ours = value_set(symbolic_ratios(ThueMorse(), 120))
    assert len(ours) == 7


def test_ptm_classes_are_dratios():
    s = symbolic_ratios(ThueMorse(), 1 << 13)
    vs = value_set(s)
    expected = ptm_ratio_classes()
    got = [s.table[k] for k in vs.keys()]
    assert all(any(g == e for e in expected) for g in got)
    assert sorted(st.count for st in vs.entries.values()) == sorted([2731, 1366, 1366, 1024, 682, 682, 341])


def test_d_polynomials():
    assert PTM_D[2] == A ** 2 + (A + 1) * B


def test_engine_matches_direct_symbolic():
    u = Periodic("", "0110100")
    eng = RatioEngine()
    ids = eng.run(u, 60)
    f = compute_f_symbolic(u, 61)
    for n in range(60):
        assert eng.table[ids[n]] == RatFn(f[n + 1], f[n])


def test_tilde_reduces_to_single():
    u = ThueMorse()
    assert compute_f_tilde(2, 3, u, u, 50) == compute_f_numeric(2, 3, u, 50)


def test_resets_ptm():
    rep = reset_set(ThueMorse(), 1 << 12)
    assert rep.positions[:6] == [0, 3, 10, 15, 18, 27]
    assert rep.gap_set == {3, 5, 7, 9}


def test_reset_tilde_definition():
    u = [0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0]
    v = [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0]
    assert reset_set_tilde(u, v, 9).positions == [0, 3, 7]


def test_reset_general():
    u = [0, 0, 0, 0, 1, 2, 0, 2, 2, 0, 1, 2, 0, 0]
    assert reset_set_general(3, u, 10).positions == [0, 3, 9]


def test_substitution_rejects_early_start():
    with pytest.raises(ValueError):
        substitute_blocks([0, 0, 0, 0], "expand", start=1)


def test_value_set_trivial():
    vs = value_set(numeric_ratios(1, 0, Periodic("", "0"), 100))
    assert vs.keys() == [1]


def test_recover_roundtrip_ptm():
    s = symbolic_ratios(ThueMorse(), 500)
    assert recover_u(s) == ThueMorse().prefix(501)[3:]


def test_general_order_reduces_to_order_two():
    u = ThueMorse()
    assert compute_f_general_order(2, [3, -2], u, 60) == compute_f_numeric(3, -2, u, 60)


def test_bounds():
    assert bound_single(4) == 8
    assert bound_pair(3) == 17
    assert bound_general(2, 5) == 16
    assert bound_general(3, 5) == 14


@settings(max_examples=60, deadline=None)
@given(words, small, small)
def test_numeric_matches_oracle(u, a, b):
    w = Word(u)
    assert compute_f_numeric(a, b, w, 60) == f_oracle(a, b, lambda n: w[n], 60)
    h = [p.value for p in compute_h(compute_f_numeric(a, b, w, 61))]
    assert h == h_oracle(a, b, lambda n: w[n], 60)


@settings(max_examples=40, deadline=None)
@given(words, st.integers(-6, 6), st.integers(-6, 6))
def test_engine_specializes_to_numeric(u, a, b):
    # evaluating the symbolic ratio at (a, b) agrees with numeric whenever defined
    w = Word(u)
    s = symbolic_ratios(w, 40)
    f = compute_f_numeric(a, b, w, 41)
    for p in s:
        if f[p.n] and f[p.n + 1] is not None:
            v = s.table[p.value].evaluate(a, b)
            if v is not None and all(f[k] for k in range(p.n + 1)):
                assert v == Fraction(f[p.n + 1], f[p.n])


@settings(max_examples=40, deadline=None)
@given(words)
def test_recover_inverts_ratios(u):
    w = Word(u)
    s = symbolic_ratios(w, 30)
    assert recover_u(s) == w.prefix(31)[3:]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=20, max_size=60), st.sampled_from(["expand", "contract"]))
def test_substitution_preserves_ratio_set(u, direction):
    # a 010 tail keeps every substitution strictly before the compared horizon
    u = u + [0, 1, 0] * 12
    e = substitute_blocks(u, direction)
    n = len(u) - 10
    eng = RatioEngine()
    left = set(symbolic_ratios(u, n, engine=eng).values())
    right = set(symbolic_ratios(e, n + len(e) - len(u), engine=eng).values())
    assert left == right


def test_substitution_on_ptm_prefix():
    u = ThueMorse().prefix(64) + [0, 1, 0] * 4
    for a, b in [(2, 3), (1, 1)]:
        c = substitute_blocks(u, "contract")
        e = substitute_blocks(c, "expand")
        vals = [set(value_set(numeric_ratios(a, b, w, len(w) - 8)).keys()) for w in (u, c, e)]
        assert vals[0] == vals[1] == vals[2]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(2, 6), min_size=5, max_size=40), st.randoms(use_true_random=False))
def test_single_bound_on_planted_blocks(gaps, rnd):
    c = max(max(gaps), 3)
    length = sum(gaps) + 10
    u = [rnd.randint(0, 1) for _ in range(length)]
    p = 0
    for g in gaps:
        p += g
        u[p : p + 3] = [0, 1, 0]
    horizon = p
    rep = reset_set(u, horizon)
    assert rep.max_gap_seen <= c
    assert len(value_set(symbolic_ratios(u, horizon))) <= bound_single(c)
