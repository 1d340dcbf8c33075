from hypothesis import given, settings, strategies as st

from binfib.automata import (
    Dfao,
    block_dfa,
    digits,
    empty_window_witness,
    finite_set_dfa,
    gap_values,
    is_empty,
    is_infinite,
    minimize,
    prefix_patch,
    product,
    realized_outputs,
    reverse_direction,
    shift_back,
    shift_by_constant,
    window_dfao,
    witness,
)
from binfib.sequences import Periodic, PowersOfTwo, to_dfao

from conftest import tm

TM = Dfao(2, [[0, 1], [1, 0]], [0, 1])
N = 300


def values(D, n=N):
    return [D(i) for i in range(n)]


def random_dfao(draw_rows, outs):
    return Dfao(2, draw_rows, outs)


dfaos = st.integers(1, 5).flatmap(
    lambda n: st.builds(
        Dfao,
        st.just(2),
        st.lists(st.lists(st.integers(0, n - 1), min_size=2, max_size=2), min_size=n, max_size=n),
        st.lists(st.integers(0, 2), min_size=n, max_size=n),
    )
)


def test_digits():
    assert digits(6, 2) == [0, 1, 1]
    assert digits(6, 2, "msd") == [1, 1, 0]
    assert digits(0, 2) == []


def test_tm_dfao():
    assert values(TM) == [tm(n) for n in range(N)]


def test_minimize_keeps_function():
    D = Dfao(2, [[1, 2], [1, 2], [1, 2]], [0, 0, 0])
    assert minimize(D).num_states == 1


def test_reverse_direction_preserves_values():
    R = reverse_direction(TM)
    assert R.direction == "msd"
    assert values(R) == values(TM)


def test_shifts():
    S = shift_by_constant(TM, 5)
    assert values(S) == [tm(n + 5) for n in range(N)]
    back = shift_back(TM, 3, fill=7)
    assert values(back) == [7, 7, 7] + [tm(n) for n in range(N - 3)]


def test_prefix_patch_and_finite_set():
    P = prefix_patch(TM, [5, 6])
    assert values(P)[:4] == [5, 6, 1, 0]
    F = finite_set_dfa({0, 3})
    assert [n for n in range(20) if F(n)] == [0, 3]


def test_window_dfao():
    W = window_dfao(TM, 2)
    assert [W(n) for n in range(50)] == [(tm(n), tm(n + 1), tm(n + 2)) for n in range(50)]


def test_block_and_gap_analysis_ptm():
    D = block_dfa(TM, [0, 1, 0])
    hits = [n for n in range(1 << 12) if tm(n) == 0 and tm(n + 1) == 1 and tm(n + 2) == 0]
    assert [n for n in range(1 << 12) if D(n)] == hits
    gaps = gap_values(D, 16)
    assert sorted(gaps) == [3, 5, 7, 9]
    for c, n in gaps.items():
        assert D(n) and D(n + c) and not any(D(n + j) for j in range(1, c))
    assert is_infinite(D)
    # gaps <= 9 mean every window of 9 consecutive integers meets the set
    assert empty_window_witness(D, 9) is None
    n = empty_window_witness(D, 8)
    assert n is not None and not any(D(n + j) for j in range(8))


def test_pow2_gaps():
    D = block_dfa(to_dfao(PowersOfTwo()), [1])
    assert sorted(gap_values(D, 16)) == [1, 2, 4, 8, 16]
    n = empty_window_witness(D, 16)
    assert n is not None and not any(D(n + j) for j in range(16))


def test_finite_and_empty():
    F = finite_set_dfa({2, 9})
    assert not is_infinite(F)
    assert not is_empty(F)
    assert is_empty(finite_set_dfa(set()))


def test_witness_smallest_length():
    assert witness(TM, lambda o: o == 1) == 1
    assert witness(TM, lambda o: o == 5) is None


@settings(max_examples=40, deadline=None)
@given(dfaos)
def test_minimize_property(D):
    M = minimize(D)
    assert M.num_states <= D.num_states
    assert values(M, 128) == values(D, 128)


@settings(max_examples=40, deadline=None)
@given(dfaos, st.integers(0, 6))
def test_shift_property(D, j):
    assert values(shift_by_constant(D, j), 100) == [D(n + j) for n in range(100)]


@settings(max_examples=40, deadline=None)
@given(dfaos, dfaos)
def test_product_property(D, E):
    P = product(D, E)
    assert values(P, 100) == list(zip(values(D, 100), values(E, 100)))
    assert realized_outputs(minimize(P)) >= {P(n) for n in range(100)}


@settings(max_examples=30, deadline=None)
@given(dfaos)
def test_reverse_property(D):
    assert values(reverse_direction(D), 128) == values(D, 128)


@settings(max_examples=30, deadline=None)
@given(st.text("01", max_size=4), st.text("01", min_size=1, max_size=4))
def test_gap_values_against_scan(pre, per):
    seq = Periodic(pre, per)
    D = block_dfa(to_dfao(seq), [1])
    ones = [n for n in range(400) if seq[n] == 1]
    scanned = {q - p for p, q in zip(ones, ones[1:]) if q - p <= 8}
    assert set(gap_values(D, 8)) == scanned
    assert is_infinite(D) == ("1" in per)
