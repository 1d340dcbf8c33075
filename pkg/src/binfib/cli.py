"""Command-line front end.

Exit codes: 0 success, 2 malformed spec or input file, 3 internal invariant
violation, 4 verification counterexample or failed comparison, 5 unbounded
gaps. ``BINFIB_SEED`` overrides the fingerprint seed when ``--seed`` is absent.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import automata, polyrat
from .dfaoguess import GuessConfig, GuessRefused, compare_dfaos, guess_dfao, verify_ratio_dfao
from .dynamics import classify_periodic_u, cross_validate
from .polyrat import InternTable, parse_ratfn
from .seqcore import (
    RatioEngine,
    bits_of,
    compute_f_numeric,
    compute_f_symbolic,
    compute_h,
    reset_set,
    symbolic_ratios,
    value_set,
)
from .sequences import Scaled, SpecError, ThueMorse, parse_seq, to_dfao
from .transduce import BoundedGapViolation, build_transducer, export_walnut_transducer, transduce_via_windows, transducer_labels_json
from .validation import check_horizon
from .walnut import WalnutFormatError, read_walnut, serialize_walnut

EXIT_OK, EXIT_SPEC, EXIT_INVARIANT, EXIT_COUNTEREXAMPLE, EXIT_UNBOUNDED = 0, 2, 3, 4, 5

CARDINALITY_NOTE = (
    "the ratio set of the PTM-driven sequence has 7 elements as rational functions in a, b; "
    "a count of 9 quoted in the literature for this set is not reproduced"
)


class InvariantViolation(Exception):
    pass


def fmt_exact(x):
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def fmt_decimal(x):
    if x is None:
        return ""
    return format(float(x), ".15g")


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _symbolic(args):
    return args.a is None or args.b is None


def _ratios(args, seq, horizon):
    if _symbolic(args):
        return symbolic_ratios(seq, horizon)
    return compute_h(compute_f_numeric(args.a, args.b, seq, horizon))


def _render(points, p):
    if p.value is None:
        return ""
    return str(points.table[p.value]) if points.table is not None else fmt_exact(p.value)


def cmd_compute(args):
    seq = parse_seq(args.seq)
    horizon = check_horizon(args.horizon, "compute")
    if _symbolic(args):
        f = compute_f_symbolic(seq, horizon)
        h = compute_h(f, InternTable())
    else:
        f = compute_f_numeric(args.a, args.b, seq, horizon)
        h = compute_h(f)
    rows = [(p.n, str(f[p.n]), _render(h, p), int(p.defined)) for p in h]
    _emit(_csv(rows, ["n", "f", "h", "defined"]), args.out)
    return EXIT_OK


def cmd_ratios(args):
    seq = parse_seq(args.seq)
    h = _ratios(args, seq, check_horizon(args.horizon, "ratios"))
    vs = value_set(h)
    if args.format == "json":
        doc = {"horizon": args.horizon, "distinct": len(vs), "ratios": [_render(h, p) for p in h]}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        rows = [(p.n, _render(h, p), fmt_decimal(p.value) if not h.symbolic and p.defined else "", int(p.defined)) for p in h]
        _emit(_csv(rows, ["n", "h", "decimal", "defined"]), args.out)
    print(f"distinct values: {len(vs)}", file=sys.stderr)
    return EXIT_OK


def cmd_resets(args):
    seq = parse_seq(args.seq)
    rep = reset_set(seq, check_horizon(args.horizon, "resets"))
    bits = bits_of(seq, rep.horizon + 2)
    for p in rep.positions[1:]:
        if bits[p : p + 3] != [0, 1, 0]:
            raise InvariantViolation(f"listed reset {p} is not a 010 block")
    doc = {
        "horizon": rep.horizon,
        "count": len(rep.positions),
        "first_positions": rep.positions[:32],
        "gaps": {str(g): c for g, c in sorted(rep.gaps.items())},
        "max_gap_seen": rep.max_gap_seen,
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_values(args):
    seq = parse_seq(args.seq)
    h = _ratios(args, seq, check_horizon(args.horizon, "values"))
    vs = value_set(h)
    entries = []
    for key, st in vs.entries.items():
        value = str(h.table[key]) if h.symbolic else fmt_exact(key)
        entries.append({"value": value, "count": st.count, "first": st.first, "last": st.last})
    doc = {"horizon": args.horizon, "distinct": len(vs), "undefined": vs.undefined, "values": entries}
    if args.seq.strip() == "ptm" and h.symbolic:
        doc["note"] = CARDINALITY_NOTE
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def _table_json(table, outputs):
    return json.dumps({str(o): str(table[o]) for o in sorted(outputs)}, indent=2) + "\n"


def cmd_guess_dfao(args):
    seq = parse_seq(args.seq)
    horizon = check_horizon(args.horizon, "guess")
    engine = RatioEngine()
    values = engine.run(seq, horizon)
    cfg = GuessConfig(base=2, horizon=horizon, max_states=args.max_states, direction=args.direction)
    try:
        K = guess_dfao(values, cfg)
    except GuessRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    _emit(serialize_walnut(K), args.out)
    if args.table:
        _emit(_table_json(engine.table, set(K.outputs)), args.table)
    cert = verify_ratio_dfao(K, to_dfao(seq), engine.table)
    print(f"states: {K.num_states} outputs: {len(set(K.outputs))} verdict: {cert.verdict}", file=sys.stderr)
    if args.certificate:
        _emit(cert.to_json() + "\n", args.certificate)
    return EXIT_OK if cert.proved else EXIT_COUNTEREXAMPLE


def _load_table(path):
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    ids = sorted(int(k) for k in raw)
    table = [None] * (max(ids, default=-1) + 1)
    for k in ids:
        table[k] = parse_ratfn(raw[str(k)])
    return table


def cmd_verify_dfao(args):
    K = read_walnut(args.dfao)
    table = _load_table(args.table)
    cert = verify_ratio_dfao(K, to_dfao(parse_seq(args.seq)), table)
    _emit(cert.to_json() + "\n", args.out)
    return EXIT_OK if cert.proved else EXIT_COUNTEREXAMPLE


def _parse_relabel(text):
    out = {}
    for part in text.split(","):
        k, _, v = part.partition(":")
        out[int(k)] = int(v)
    return out


def cmd_compare(args):
    left, right = read_walnut(args.left), read_walnut(args.right)
    res = compare_dfaos(left, right, _parse_relabel(args.relabel) if args.relabel else None)
    doc = {"equal": res.equal, "relabeling": {str(k): v for k, v in sorted(res.relabeling.items())}, "conflict": res.conflict}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK if res.equal else EXIT_COUNTEREXAMPLE


def cmd_transducer(args):
    T = build_transducer(args.c, two_sequences=args.two_sequences)
    _emit(export_walnut_transducer(T), args.out)
    if args.labels:
        _emit(transducer_labels_json(T) + "\n", args.labels)
    print(f"states: {T.num_states} outputs: {len(T.output_alphabet())}", file=sys.stderr)
    return EXIT_OK


def cmd_window_dfao(args):
    U = to_dfao(parse_seq(args.seq))
    V = to_dfao(parse_seq(args.vseq)) if args.vseq else None
    try:
        R = transduce_via_windows(U, args.c, V=V)
    except BoundedGapViolation as exc:
        print(json.dumps({"error": "unbounded gap", "window": exc.window, "n": exc.n}), file=sys.stderr)
        return EXIT_UNBOUNDED
    _emit(serialize_walnut(R.dfao), args.out)
    if args.table:
        _emit(_table_json(R.table, set(R.dfao.outputs)), args.table)
    print(f"states: {R.dfao.num_states} outputs: {len(set(R.dfao.outputs))}", file=sys.stderr)
    return EXIT_OK


def cmd_gaps(args):
    seq = parse_seq(args.seq)
    pattern = [int(ch) for ch in args.pattern]
    D = automata.block_dfa(to_dfao(seq), pattern)
    gaps = automata.gap_values(D, args.max_c)
    infinite = automata.is_infinite(D)
    long_gap = automata.empty_window_witness(D, args.max_c)
    doc = {
        "pattern": args.pattern,
        "max_c": args.max_c,
        "gaps": sorted(gaps),
        "witnesses": {str(c): n for c, n in sorted(gaps.items())},
        "infinite": infinite,
        "bounded_by_max_c": infinite and long_gap is None,
        "long_gap_witness": long_gap,
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    if args.require_bounded and not doc["bounded_by_max_c"]:
        return EXIT_UNBOUNDED
    return EXIT_OK


def cmd_classify(args):
    res = classify_periodic_u(args.pre, args.per, args.a, args.b)
    doc = res.to_dict()
    if args.check:
        ok, detail = cross_validate(args.pre, args.per, args.a, args.b, res=res)
        doc["empirical_check"] = {"ok": ok, **detail}
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    if args.orbit_csv:
        u = parse_seq(f"periodic:{args.pre};{args.per}")
        h = compute_h(compute_f_numeric(args.a, args.b, u, args.steps))
        rows = [(p.n, fmt_exact(p.value), fmt_decimal(p.value)) for p in h]
        _emit(_csv(rows, ["n", "h_exact", "h_decimal"]), args.orbit_csv)
    return EXIT_OK


def figure3_rows(n_max=2 ** 12):
    """``(n, h(n))`` for ``u_n = T_{floor(n/2)}``, ``a = b = 1``, ``1 <= n <= n_max``."""
    h = compute_h(compute_f_numeric(1, 1, Scaled(ThueMorse(), 2), n_max + 1))
    return [(n, h[n].value) for n in range(1, n_max + 1)]


def cmd_figure3(args):
    rows = [(n, fmt_exact(v), fmt_decimal(v)) for n, v in figure3_rows(args.n_max)]
    _emit(_csv(rows, ["n", "h_exact", "h_decimal"]), args.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="binfib", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=None, help="fingerprint seed (default: $BINFIB_SEED or 0)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--out", default="-", help="output path ('-' for stdout)")
        return sp

    def seq_args(sp, horizon, with_ab=True):
        sp.add_argument("--seq", required=True, help="sequence spec, e.g. ptm or periodic:;010")
        sp.add_argument("--horizon", type=int, default=horizon)
        if with_ab:
            sp.add_argument("--a", type=int, default=None, help="omit a and b for symbolic mode")
            sp.add_argument("--b", type=int, default=None)

    sp = add("compute", cmd_compute, "f(n) and h(n) as CSV")
    seq_args(sp, 64)
    sp = add("ratios", cmd_ratios, "h(n) as CSV or JSON")
    seq_args(sp, 2 ** 13)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp = add("resets", cmd_resets, "reset positions and gap statistics")
    seq_args(sp, 2 ** 20, with_ab=False)
    sp = add("values", cmd_values, "distinct ratios with counts")
    seq_args(sp, 2 ** 13)
    sp = add("guess-dfao", cmd_guess_dfao, "guess and verify a DFAO for the symbolic ratios")
    seq_args(sp, 2 ** 16, with_ab=False)
    sp.add_argument("--max-states", type=int, default=1024)
    sp.add_argument("--direction", choices=["lsd", "msd"], default="lsd")
    sp.add_argument("--table", help="write output id -> rational function JSON here")
    sp.add_argument("--certificate", help="write the certificate JSON here")
    sp = add("verify-dfao", cmd_verify_dfao, "verify a DFAO file against a driving sequence")
    sp.add_argument("--dfao", required=True)
    sp.add_argument("--table", required=True)
    sp.add_argument("--seq", required=True)
    sp = add("compare", cmd_compare, "compare two DFAO files up to output relabeling")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--relabel", help="explicit map like 0:0,1:1,2:3")
    sp = add("transducer", cmd_transducer, "truncated ratio transducer in Walnut format")
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--two-sequences", action="store_true")
    sp.add_argument("--labels", help="write state labels JSON here")
    sp = add("window-dfao", cmd_window_dfao, "DFAO for h(n) from bounded reset gaps")
    sp.add_argument("--seq", required=True)
    sp.add_argument("--vseq", help="second driving sequence for the two-sequence variant")
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--table")
    sp = add("gaps", cmd_gaps, "gap sizes between occurrences of a block")
    sp.add_argument("--seq", required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--max-c", type=int, default=16)
    sp.add_argument("--require-bounded", action="store_true", help="exit 5 unless gaps are <= max-c")
    sp = add("classify", cmd_classify, "ratio-set type for an eventually periodic driving sequence")
    sp.add_argument("--pre", default="")
    sp.add_argument("--per", required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--check", action="store_true", help="cross-check against orbit statistics")
    sp.add_argument("--orbit-csv")
    sp.add_argument("--steps", type=int, default=200)
    sp = add("figure3", cmd_figure3, "ratios for u_n = T(floor(n/2)), a = b = 1")
    sp.add_argument("--n-max", type=int, default=2 ** 12)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = args.seed if args.seed is not None else int(os.environ.get("BINFIB_SEED", "0"))
    polyrat.set_fingerprint_seed(seed)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK
    except (SpecError, WalnutFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except (InvariantViolation, AssertionError) as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
