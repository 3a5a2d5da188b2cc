"""Command-line interface.

Subcommands: show, weyl action-table, decompose, normtable, verify,
reproduce-all, verify-paper-claims.  Exit codes: 0 success, 1 verification
mismatch, 2 usage error.  Output is deterministic; `--jobs` only fans out
independent recomputations and aggregates them in a fixed order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import golden, refdata
from .decompose import admissible_ways, run_algorithm, trace_to_json
from .normalization import (
    HOLOMORPHIC_VERIFIED, PairDataError, check_main_theorem, factor_table,
    steinberg_datum,
)
from .reports import run_paper_claims
from .rootsystem import (
    LabelError, UnknownTypeError, get_root_system, parse_label,
)
from .vectors import format_rational
from .weyl import action_table, foreign_action_coords

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

G2_DISPLAY = {1: "alpha", 2: "beta"}


def _label_name(type_label: str, label: int) -> str:
    if type_label == "G2":
        return G2_DISPLAY[label]
    return "a%d" % label


def _load_config(path: str | None) -> dict:
    cfg = {}
    if path:
        with open(path) as f:
            cfg = json.load(f)
    if os.environ.get("WEYLNORM_OUT"):
        cfg.setdefault("out_dir", os.environ["WEYLNORM_OUT"])
    return cfg


def _emit(text: str, out_dir: str | None, fname: str) -> None:
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        with open(os.path.join(out_dir, fname), "w") as f:
            f.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _table_text(header: list[str], rows: list[list[str]], fmt: str, caption: str) -> str:
    if fmt == "csv":
        lines = [";".join(header)] + [";".join(r) for r in rows]
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2)
    if fmt == "latex":
        cols = "|" + "|".join(["c"] * len(header)) + "|"
        lines = ["\\begin{longtable}{%s}" % cols,
                 "\\caption{%s} \\\\" % caption, "\\hline",
                 " & ".join(header) + " \\\\", "\\hline"]
        lines += [" & ".join(r) + " \\\\ \\hline" for r in rows]
        lines.append("\\end{longtable}")
        return "\n".join(lines)
    raise ValueError("unknown format %r" % fmt)


def cmd_show(args) -> int:
    sys_ = get_root_system(args.type)
    if args.format == "json":
        print(json.dumps(sys_.to_json_dict(), indent=2))
        return EXIT_OK
    names = [_label_name(args.type, l) for l in sys_.labels]
    print("type %s: %d simple roots, %d positive roots, ambient dimension %d"
          % (args.type, sys_.rank, len(sys_.positive_roots), sys_.ambient_dim))
    print("delta: " + ", ".join(
        "%s=(%s)" % (n, ",".join(format_rational(q) for q in sys_.simple_by_label[l].ambient))
        for n, l in zip(names, sys_.labels)))
    print("dynkin adjacency:")
    for l in sys_.labels:
        nbrs = [m for m in sys_.labels if m != l and sys_.cartan(l, m) != 0]
        print("  %s: %s" % (_label_name(args.type, l),
                            ", ".join(_label_name(args.type, m) for m in nbrs) or "-"))
    return EXIT_OK


def cmd_action_table(args) -> int:
    sys_ = get_root_system(args.type)
    removed = parse_label(sys_, args.removed)
    row_list = refdata.ACTION_TABLE_ROWS.get(args.type, sys_.labels)
    host = get_root_system("E8") if args.type in ("E6", "E7") else sys_
    table = action_table(sys_, removed)

    def cell(sr: int) -> str:
        if sr in sys_.labels:
            coords = table[sr].coords
            frame = sys_
        else:
            coords = foreign_action_coords(sys_, removed, host, sr)
            frame = host
        padded = [0] * len(host.frame_labels)
        for l, c in zip(frame.frame_labels, coords):
            padded[host.frame_labels.index(l)] = c
        return "(%s)" % ",".join(str(c) for c in padded)

    header = ["simple_root", "w0_inverse_image"]
    rows = [[_label_name(args.type, sr), cell(sr)] for sr in row_list]
    _emit(_table_text(header, rows, args.format,
                      "%s action of the inverse, removed %s" % (args.type, args.removed)),
          args.out, "%s_action_%s.%s" % (args.type, removed, args.format))
    return EXIT_OK


def cmd_decompose(args) -> int:
    sys_ = get_root_system(args.type)
    removed = parse_label(sys_, args.removed)
    trace = run_algorithm(sys_, removed, args.way)
    if args.format == "json":
        _emit(json.dumps(trace_to_json(trace), indent=2), args.out,
              "%s_decompose_%s_way%d.json" % (args.type, removed, args.way))
        return EXIT_OK
    lines = ["pair (%s, delta-{%s}), way %d (auxiliary root %s)"
             % (args.type, _label_name(args.type, removed), args.way,
                _label_name(args.type, trace.beta) if trace.beta else "-"),
             "total length %d, word %s" % (trace.total_length, list(trace.total_word))]
    for st in trace.steps:
        lines.append("step %d: component %s, splits off pair (component, component-{%s}), "
                     "produces %s, piece size %d"
                     % (st.step_index, sorted(st.ambient_delta),
                        _label_name(args.type, st.tau_in),
                        _label_name(args.type, st.produced), len(st.s_piece)))
        lines.append("  word %s" % (list(st.word),))
        lines.append("  piece %s" % sorted(r.coords for r in st.s_piece))
    _emit("\n".join(lines), args.out,
          "%s_decompose_%s_way%d.txt" % (args.type, removed, args.way))
    return EXIT_OK


def cmd_normtable(args) -> int:
    sys_ = get_root_system(args.type)
    removed = parse_label(sys_, args.removed)
    try:
        datum = steinberg_datum(sys_, removed)
    except PairDataError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    ft = factor_table(datum)
    header = ["root", "coords", "s_term", "one_minus_s_term"]
    rows = []
    for root, t, m in ft.rows:
        rows.append(["(%s)" % ",".join(format_rational(q) for q in root.ambient),
                     "(%s)" % ",".join(str(c) for c in root.coords),
                     t.render(), m.render()])
    _emit(_table_text(header, rows, args.format,
                      "%s factors, removed %s" % (args.type, args.removed)),
          args.out, "%s_normtable_%s.%s" % (args.type, removed, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    sys_ = get_root_system(args.type)
    removed = parse_label(sys_, args.removed)
    ways = [int(w) for w in args.ways.split(",")] if args.ways else \
        list(range(1, len(admissible_ways(sys_, removed)) + 1))
    rep = check_main_theorem(sys_, removed, ways, twist_order=args.twist_order)
    print(json.dumps(rep.to_json(), indent=2))
    return EXIT_OK if rep.verdict == HOLOMORPHIC_VERIFIED else EXIT_MISMATCH


def cmd_reproduce_all(args) -> int:
    ids = [t for t in golden.ALL_TABLE_IDS if not args.only or t.startswith(args.only)]
    if not ids:
        print("error: no tables match --only %s" % args.only, file=sys.stderr)
        return EXIT_USAGE
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(golden.compare_table, ids))
        diffs = dict(zip(ids, results))
    else:
        diffs = {t: golden.compare_table(t) for t in ids}
    status = EXIT_OK
    for table_id in ids:
        cell_diffs = diffs[table_id]
        bad = [d for d in cell_diffs if not d.known_typo]
        known = [d for d in cell_diffs if d.known_typo]
        line = "%-20s %s" % (table_id, "ok" if not bad else "MISMATCH (%d cells)" % len(bad))
        if known:
            line += "  [%d known typo]" % len(known)
        print(line)
        for d in cell_diffs:
            print("    " + d.describe())
        if bad:
            status = EXIT_MISMATCH
    return status


def cmd_verify_paper_claims(args) -> int:
    reports = run_paper_claims(jobs=args.jobs)
    print(json.dumps([r.to_json() for r in reports], indent=2))
    mismatched = [r for r in reports if not r.matches_published]
    for r in mismatched:
        print("mismatch vs published: %s removed=%s ways=%s twist=%s computed=%s published=%s"
              % (r.type_label, r.removed, list(r.ways_used), r.twist,
                 r.verdict, r.published_verdict), file=sys.stderr)
    return EXIT_MISMATCH if mismatched else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylnorm",
                                description="Exact root-system decompositions and "
                                            "normalization-factor tables.")
    p.add_argument("--config", help="optional JSON config file ({out_dir, jobs})")
    sub = p.add_subparsers(dest="command", required=True)

    types = ["G2", "F4", "E6", "E7", "E8"]

    sp = sub.add_parser("show", help="print a root system summary")
    sp.add_argument("type", choices=types)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_show)

    wp = sub.add_parser("weyl", help="Weyl-element tables")
    wsub = wp.add_subparsers(dest="weyl_command", required=True)
    ap = wsub.add_parser("action-table", help="action of the inverse relative longest element")
    ap.add_argument("type", choices=types)
    ap.add_argument("--removed", required=True)
    ap.add_argument("--format", choices=["csv", "json", "latex"], default="csv")
    ap.add_argument("--out", help="write into this directory instead of stdout")
    ap.set_defaults(func=cmd_action_table)

    dp = sub.add_parser("decompose", help="run the step-by-step decomposition")
    dp.add_argument("type", choices=types)
    dp.add_argument("--removed", required=True)
    dp.add_argument("--way", "-w", type=int, default=1)
    dp.add_argument("--format", choices=["json", "table"], default="table")
    dp.add_argument("--out", help="write into this directory instead of stdout")
    dp.set_defaults(func=cmd_decompose)

    np_ = sub.add_parser("normtable", help="factor table for one pair")
    np_.add_argument("type", choices=types)
    np_.add_argument("--removed", required=True)
    np_.add_argument("--format", choices=["csv", "json", "latex"], default="csv")
    np_.add_argument("--out", help="write into this directory instead of stdout")
    np_.set_defaults(func=cmd_normtable)

    vp = sub.add_parser("verify", help="positivity check for one pair")
    vp.add_argument("type", choices=types)
    vp.add_argument("--removed", required=True)
    vp.add_argument("--ways", "-w", help="comma-separated way list (default: all)")
    vp.add_argument("--twist-order", type=int, default=None,
                    help="restrict to roots surviving a twist of this order")
    vp.set_defaults(func=cmd_verify)

    rp = sub.add_parser("reproduce-all", help="recompute every reference table")
    rp.add_argument("--only", choices=types, help="restrict to one type")
    rp.add_argument("--jobs", type=int, default=1)
    rp.set_defaults(func=cmd_reproduce_all)

    cp = sub.add_parser("verify-paper-claims", help="verdicts for every published pair")
    cp.add_argument("--jobs", type=int, default=1)
    cp.set_defaults(func=cmd_verify_paper_claims)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    cfg = _load_config(args.config)
    if getattr(args, "out", None) is None and cfg.get("out_dir"):
        if hasattr(args, "out"):
            args.out = cfg["out_dir"]
    if getattr(args, "jobs", None) == 1 and cfg.get("jobs"):
        args.jobs = int(cfg["jobs"])
    try:
        return args.func(args)
    except (LabelError, UnknownTypeError, PairDataError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
