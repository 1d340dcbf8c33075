"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary (and directly when this file is run as a script).
"""
import json
import random
import time
from collections import Counter
from fractions import Fraction
from itertools import product as iproduct

import pytest

from binfib import cli
from binfib.automata import block_dfa, gap_values, is_infinite, reverse_direction
from binfib.dfaoguess import GuessConfig, compare_dfaos, guess_dfao, verify_ratio_dfao
from binfib.dynamics import classify_periodic_u, cross_validate, d_zero_check, pow2_identity_failures, ptm_zero_pattern
from binfib.seqcore import (
    RatioEngine,
    bound_general,
    bound_pair,
    bound_single,
    compute_f_general_order,
    compute_f_numeric,
    ptm_ratio_classes,
    reset_set,
    reset_set_general,
    reset_set_tilde,
    symbolic_ratios,
    value_set,
)
from binfib.sequences import Periodic, RudinShapiro, ThueMorse, to_dfao
from binfib.transduce import transduce_via_windows

from conftest import ACCEPTANCE

PTM_PAIRS = {(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)}
PTM_TRIPLES = {(0, 1, 0), (1, 0, 2), (1, 2, 0), (2, 0, 3), (2, 3, 0), (3, 4, 0), (4, 0, 5), (4, 5, 0), (5, 6, 0)}


def record(k, ok, detail):
    ACCEPTANCE[k] = (bool(ok), detail)
    assert ok, detail


@pytest.fixture(scope="module")
def ptm_k():
    eng = RatioEngine()
    values = eng.run(ThueMorse(), 1 << 16)
    K = guess_dfao(values, GuessConfig(horizon=1 << 16, max_states=1024))
    cert = verify_ratio_dfao(K, to_dfao(ThueMorse()), eng.table)
    return K, eng, cert


def test_criterion_01_ptm_value_set(capsys):
    t0 = time.perf_counter()
    s = symbolic_ratios(ThueMorse(), 1 << 13)
    vs = value_set(s)
    elapsed = time.perf_counter() - t0
    classes = ptm_ratio_classes()
    found = [s.table[k] for k in vs.keys()]
    exact = len(found) == 7 and all(any(x == c for c in classes) for x in found) and all(
        any(x == c for x in found) for c in classes
    )
    min_count = min(st.count for st in vs.entries.values())
    cli.main(["values", "--seq", "ptm", "--horizon", "8192"])
    note = json.loads(capsys.readouterr().out).get("note", "")
    ok = exact and min_count >= 50 and elapsed < 30 and "9" in note and "7" in note
    record(1, ok, f"{len(found)} classes, min count {min_count}, {elapsed:.2f}s, cardinality note present={bool(note)}")


def test_criterion_02_dfao_pipeline(ptm_k):
    K, _, cert = ptm_k
    ok = K.num_states == 23 and cert.proved and cert.pair_set == PTM_PAIRS and cert.triple_set == PTM_TRIPLES
    record(2, ok, f"{K.num_states} states, verdict {cert.verdict}, {len(cert.pair_set)} pairs, {len(cert.triple_set)} triples")


def test_criterion_03_gap_analysis():
    D = block_dfa(to_dfao(ThueMorse()), [0, 1, 0])
    gaps = set(gap_values(D, 16))
    inf = is_infinite(D)
    rep = reset_set(ThueMorse(), 1 << 20)
    blocks = rep.positions[1:]  # position 0 is a reset by convention, not a block
    scanned = {q - p for p, q in zip(blocks, blocks[1:])}
    ok = gaps == {3, 5, 7, 9} and inf and scanned == gaps
    record(3, ok, f"automaton gaps {sorted(gaps)}, infinite={inf}, scan over n<2^20 {sorted(scanned)}")


def test_criterion_04_transduction_equivalence(ptm_k):
    K, eng, cert = ptm_k
    t0 = time.perf_counter()
    R = transduce_via_windows(to_dfao(ThueMorse()), 9, engine=eng)
    res = compare_dfaos(R.dfao, reverse_direction(K))
    elapsed = time.perf_counter() - t0
    ok = cert.proved and res.equal and elapsed < 120
    record(4, ok, f"equal={res.equal} under {res.relabeling}, {elapsed:.2f}s")


def test_criterion_05_rudin_shapiro():
    eng = RatioEngine()
    values = eng.run(RudinShapiro(), 1 << 18)
    K = guess_dfao(values, GuessConfig(horizon=1 << 18, max_states=2048))
    cert = verify_ratio_dfao(K, to_dfao(RudinShapiro()), eng.table)
    shape = (K.num_states, len(set(K.outputs)))
    note = "matches 214/38" if shape == (214, 38) else "deviation from 214/38 (finding, not failure)"
    record(5, cert.proved, f"{shape[0]} states, {shape[1]} outputs, verdict {cert.verdict}; {note}")


def test_criterion_06_pow2_identity():
    bad = pow2_identity_failures(1, 1, 4, 1 << 12)
    record(6, not bad, f"{len(bad)} failures for 4 <= n <= 2^12")


def _planted(rng, length, c, block, fill, min_gap, start=0):
    u = [rng.choice(fill) for _ in range(length)]
    p = start
    spots = []
    while True:
        p += rng.randint(min_gap, c)
        if p + len(block) > length:
            return u, spots
        u[p : p + len(block)] = block
        spots.append(p)


def test_criterion_07_bounds():
    rng = random.Random(20240607)
    H = 4096
    single_bad, pair_bad, order3_bad = [], [], []
    for i in range(200):
        c = 4 + i % 7
        u, _ = _planted(rng, H + 8, c, [0, 1, 0], [0, 1], 2)
        rep = reset_set(u, H)
        assert rep.max_gap_seen <= c and rep.positions[-1] >= H - c
        n = len(value_set(symbolic_ratios(u, H)))
        if n > bound_single(c):
            single_bad.append((i, c, n))
    for i in range(100):
        c = 4 + i % 7
        v, spots = _planted(rng, H + 8, c, [0, 1, 0], [0, 1], 3)
        u = [rng.randint(0, 1) for _ in range(H + 8)]
        for p in spots:
            x = rng.randint(0, 1)
            u[p], u[p + 1] = x, 1 - x
        rep = reset_set_tilde(u, v, H)
        assert rep.max_gap_seen <= c and rep.positions[-1] >= H - c
        n = len(value_set(symbolic_ratios(u, H, v=v)))
        if n > bound_pair(c):
            pair_bad.append((i, c, n))
    # order 3: generic integer coefficients, so numeric coincidences are not expected
    coeffs = [1009, 2003, 3001]
    H3 = 1024
    for i in range(50):
        c = 4 + i % 5
        u, _ = _planted(rng, H3 + 8, c, [0, 1, 2, 0], [0, 1, 2], 3)
        rep = reset_set_general(3, u, H3)
        assert rep.max_gap_seen <= c and rep.positions[-1] >= H3 - c
        f = compute_f_general_order(3, coeffs, u, H3)
        n = len({Fraction(f[k + 1], f[k]) for k in range(H3) if f[k]})
        if n > bound_general(3, c):
            order3_bad.append((i, c, n, bound_general(3, c)))
    ok = not (single_bad or pair_bad or order3_bad)
    detail = (
        f"single: {len(single_bad)}/200 over bound; pair: {len(pair_bad)}/100 over bound; "
        f"order 3: {len(order3_bad)}/50 over bound"
    )
    if order3_bad:
        i, c, n, bnd = order3_bad[0]
        detail += f" (first: c={c}, {n} values > {bnd})"
    record(7, ok, detail)


def test_criterion_08_trichotomy_sweep():
    periods = ["".join(p) for L in (1, 2, 3) for p in iproduct("01", repeat=L)]
    tags = Counter()
    failures = []
    for per in periods:
        for a in range(-6, 7):
            for b in range(-6, 7):
                res = classify_periodic_u("", per, a, b)
                tags[res.tag] += 1
                if res.tag == "ZeroTail":
                    continue
                ok, detail = cross_validate("", per, a, b, res=res, cauchy_steps=300, dense_steps=10 ** 5, tol=1e-6)
                if not ok:
                    failures.append((per, a, b, res.tag, str(res.kappa), detail))
    zeros = {
        (-2, 4): (d_zero_check(2, -2, 4)[0], ptm_zero_pattern(-2, 4, 1024) == list(range(3, 1024))),
        (2, -2): (d_zero_check(5, 2, -2)[0], set(range(10, 1024)) <= set(ptm_zero_pattern(2, -2, 1024))),
        (1, -1): (d_zero_check(4, 1, -1)[0], 0 < len(ptm_zero_pattern(1, -1, 4096)) < 4096 - 1000),
    }
    zero_ok = all(all(v) for v in zeros.values())
    kinds = Counter((f[3], f[4]) for f in failures)
    worst = max((f[5].get("tail_difference", 0) for f in failures), default=0)
    detail = (
        f"{sum(tags.values())} cases {dict(tags)}; {len(failures)} inconsistent "
        f"{dict(kinds)} (max tail difference {worst:.2e}); zero patterns ok={zero_ok}"
    )
    record(8, not failures and zero_ok, detail)


def test_criterion_09_period_six_identity():
    f = compute_f_numeric(4, -8, Periodic("", "011"), 70)
    identity = all(f[n + 6] == -64 * f[n] for n in range(6, 60))
    res = classify_periodic_u("", "011", 4, -8)
    record(9, identity and res.tag == "FiniteOrbit", f"identity={identity}, tag={res.tag}, order={res.order}")


def test_criterion_10_figure3(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert cli.main(["figure3", "--out", str(p)]) == 0
    data = paths[0].read_bytes()
    same = data == paths[1].read_bytes()
    rows = data.decode().splitlines()[1:]
    counts = [len({r.split(",")[1] for r in rows[: 1 << k]}) for k in (8, 10, 12)]
    increasing = counts[0] < counts[1] < counts[2]
    record(10, same and len(rows) == 4096 and increasing,
           f"{len(rows)} rows, byte-identical={same}, distinct at 2^8/2^10/2^12 = {counts}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
