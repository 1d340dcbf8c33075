import pytest
from hypothesis import given, settings, strategies as st

from binfib.dynamics import (
    L_forms,
    MobiusMatrix,
    check_reset_run_identity,
    classify_all_ones,
    classify_mobius,
    classify_periodic_u,
    cross_validate,
    d_zero_check,
    empirical_orbit,
    g_sequence,
    inclusion_conditions,
    period_mobius,
    pow2_identity_failures,
    ptm_zero_pattern,
    root_ratio_order,
    zero_run_conditions,
)
from binfib.seqcore import compute_f_numeric
from binfib.sequences import Periodic

from conftest import f_oracle

GOLDEN = (1 + 5 ** 0.5) / 2


def test_g_sequence():
    assert g_sequence(1, 1, 8) == [1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_pow2_identity():
    assert pow2_identity_failures() == []


def test_reset_run_identity():
    assert check_reset_run_identity(Periodic("", "0100000"), 2, 3, 400).ok


def test_conditions():
    assert inclusion_conditions(1, 1).applicable
    assert not inclusion_conditions(2, -4).applicable
    assert not zero_run_conditions(1, 2).applicable  # 1 + 8 = 9 is a square
    assert zero_run_conditions(1, 1).applicable


def test_root_ratio_order():
    assert root_ratio_order(0, 3) == 2
    assert root_ratio_order(2, -4) == 3
    assert root_ratio_order(2, -2) == 4
    assert root_ratio_order(3, -3) == 6
    assert root_ratio_order(1, 1) is None


def test_L_forms_reproduce_f():
    # L_k(f(n0-1), f(n0-2)) = f(n0 + k) along a word starting at n0
    u = Periodic("", "0110")
    a, b = 3, -2
    f = compute_f_numeric(a, b, u, 60)
    n0 = 8
    word = u.prefix(n0 + 12)[n0:]
    L = L_forms(word, a, b)
    for k in range(len(word)):
        assert L[k + 2](f[n0 - 1], f[n0 - 2]) == f[n0 + k]


def test_period_mobius_rejects_bad_words():
    with pytest.raises(ValueError):
        period_mobius("11", 1, 1)
    with pytest.raises(ValueError):
        period_mobius("10", 1, 1)


def test_classify_mobius_kappa_table():
    assert classify_mobius(MobiusMatrix(0, -1, 1, 0), (2, 1)).order == 2
    assert classify_mobius(MobiusMatrix(1, -1, 1, 0), (2, 1)).order == 3
    assert classify_mobius(MobiusMatrix(1, -1, 1, 2), (2, 1)).order == 6
    assert classify_mobius(MobiusMatrix(2, 0, 0, 2), (5, 1)).order == 1
    assert classify_mobius(MobiusMatrix(1, 2, 2, 4), (5, 1)).tag == "ConstantMap"
    assert classify_mobius(MobiusMatrix(1, 1, 0, 1), (0, 1)).tag == "Accumulation"
    assert classify_mobius(MobiusMatrix(2, 1, 1, 1), (0, 1)).tag == "Accumulation"


@pytest.mark.parametrize(
    "pre, per, a, b, tag",
    [
        ("", "0", 1, 1, "Accumulation"),
        ("", "011", 4, -8, "FiniteOrbit"),
        ("", "01111", 0, 1, "ConstantMap"),
        ("", "1", 1, 1, "Accumulation"),
        ("", "0", 0, 2, "FiniteOrbit"),
        ("", "0", 1, -3, "DenseInR"),
        ("", "1", -2, 4, "DenseInR"),
    ],
)
def test_classify_examples(pre, per, a, b, tag):
    res = classify_periodic_u(pre, per, a, b)
    assert res.tag == tag
    ok, detail = cross_validate(pre, per, a, b, res=res, dense_steps=20000)
    assert ok, detail


def test_golden_ratio_limit():
    res = classify_periodic_u("", "0", 1, 1)
    assert abs(float(res.limits[0]["decimal"]) - GOLDEN) < 1e-12


def test_period_six_identity():
    res = classify_periodic_u("", "011", 4, -8)
    assert res.order == 2 and res.h_period == 6
    f = compute_f_numeric(4, -8, Periodic("", "011"), 80)
    assert all(f[n + 6] == -64 * f[n] for n in range(6, 60))


def test_ptm_zero_patterns():
    assert ptm_zero_pattern(-2, 4, 512) == list(range(3, 512))
    z = ptm_zero_pattern(2, -2, 512)
    assert z[:2] == [2, 5] and set(range(10, 512)) <= set(z)
    z = ptm_zero_pattern(1, -1, 4096)
    assert 0 < len(z) < 4096 - 100
    assert d_zero_check(1, 1, -1)[0]


def test_empirical_orbit_finite():
    stats = empirical_orbit(MobiusMatrix(0, -1, 1, 0), (3, 1), 20)
    assert stats["distinct"] == 2


def test_to_json_roundtrip():
    import json

    d = json.loads(classify_periodic_u("", "011", 4, -8).to_json())
    assert d["tag"] == "FiniteOrbit" and d["kappa"] == "0"


@settings(max_examples=40, deadline=None)
@given(st.text("01", max_size=2), st.text("01", min_size=1, max_size=3), st.integers(-4, 4), st.integers(-4, 4))
def test_finite_tags_match_exact_orbits(pre, per, a, b):
    res = classify_periodic_u(pre, per, a, b)
    if res.tag in ("FiniteOrbit", "ConstantMap", "ZeroTail"):
        ok, detail = cross_validate(pre, per, a, b, res=res)
        assert ok, detail


@settings(max_examples=40, deadline=None)
@given(st.text("01", max_size=3), st.text("01", min_size=1, max_size=3), st.integers(-3, 3), st.integers(-3, 3))
def test_numeric_engine_agrees_with_oracle(pre, per, a, b):
    u = Periodic(pre, per)
    assert compute_f_numeric(a, b, u, 40) == f_oracle(a, b, lambda n: u[n], 40)


def test_all_ones_root_of_unity_families():
    # X^3 - 2X - 4 = (X - 2)(X^2 + 2X + 2); data in the quadratic factor cycles with period 4
    r = classify_all_ones(2, 4, init=[1, 1, -4])
    assert (r.tag, r.h_period) == ("FiniteOrbit", 4)
    # X^3 - 6X - 9 = (X - 3)(X^2 + 3X + 3); period 6
    r = classify_all_ones(6, 9, init=[1, 1, -6])
    assert (r.tag, r.h_period) == ("FiniteOrbit", 6)
    # X^3 + 2X - 4 is irreducible with a dominant complex pair
    assert classify_all_ones(-2, 4, init=[1, 1, 2]).tag == "DenseInR"
