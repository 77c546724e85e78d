"""Command-line interface.

Covering types are written ``d;a1,a2,...,aN`` (spaces allowed, N inferred).

Exit codes: 0 success, 1 table mismatch or failed BMY trials, 2 invalid input
or usage error, 3 input that satisfies no lattice condition.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .classify import invariants, partition
from .conditions import FILTERS, check_sigma_int, enumerate_types, model_label, pair_profiles
from .covering import is_arithmetic, parse_type
from .dataset import known_edges, load_rows, surface_rows
from .errors import DMError, InvalidCoveringType
from .euler import WeightSampler, bmy_check
from .records import analyze, q, render
from .table import COLUMNS, compute_row, diff_table

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_NOT_LATTICE = 0, 1, 2, 3

GLOBAL_DEFAULTS = {"format": "table", "seed": 1, "max_d": 42, "n_points": 5, "filter": "sigmaint"}
TABLE_CSV_HEADER = ("index", "type") + COLUMNS + ("match",)


def _set(xs) -> str:
    return "{" + ", ".join(q(x) for x in xs) + "}" if xs is not None else "-"


def _pairs(ps) -> str:
    return " ".join(f"L{i}{j}" for i, j in ps) or "-"


def _global_parent() -> argparse.ArgumentParser:
    # defaults are suppressed so flags may appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--format", choices=("table", "json", "csv"), default=argparse.SUPPRESS,
                   help="output format (default: table)")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default: 1)")
    g.add_argument("--max-d", type=int, default=argparse.SUPPRESS, help="largest degree d (default: 42)")
    g.add_argument("--n-points", type=int, default=argparse.SUPPRESS,
                   help="number of branch points N (default: 5)")
    g.add_argument("--filter", choices=FILTERS, default=argparse.SUPPRESS,
                   help="enumeration filter (default: sigmaint)")
    return p


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parent = _global_parent()
    parser = argparse.ArgumentParser(
        prog="dmspectrum", parents=[parent],
        description="Lyapunov spectra and invariants of ball-quotient lattices from cyclic coverings.",
        epilog="Type grammar: 'd;a1,a2,...,aN' with optional whitespace, e.g. '12;3,3,5,6,7'.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[parent], help="full analysis of one covering type")
    a.add_argument("type", help="covering type 'd;a1,...,aN'")

    t = sub.add_parser("table", parents=[parent], help="recompute the bundled table and diff it")
    t.add_argument("--data", help="alternative data file (same layout as the bundled one)")

    e = sub.add_parser("enumerate", parents=[parent], help="sweep covering types up to --max-d")
    e.add_argument("--start-d", type=int, default=2, help="resume the sweep at this degree")

    b = sub.add_parser("bmy", parents=[parent], help="log-BMY equality on random weights")
    b.add_argument("--trials", type=_positive, default=200)

    c = sub.add_parser("classify", parents=[parent], help="group lattices by commensurability invariants")
    c.add_argument("input", nargs="?", default="builtin",
                   help="'builtin' or a file with one covering type per line")
    return parser


# -- analyze ------------------------------------------------------------------

def cmd_analyze(args) -> int:
    try:
        ct = parse_type(args.type)
    except InvalidCoveringType as exc:
        print(f"error: invalid covering type ({exc.condition}): {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    rec = analyze(ct)
    if args.format == "json":
        print(render(rec))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["input", "condition", "model", "spectrum", "relative_euler", "genus", "dim_P", "dim_U"])
        w.writerow([rec.input, rec.condition["tag"] if rec.condition else "", rec.model or "",
                    " ".join(q(x) for x in rec.spectrum or ()),
                    " ".join(q(x) for x in rec.relative_euler or ()),
                    rec.genus, rec.dim_P, rec.dim_U])
    else:
        _print_analysis(rec)
    return EXIT_OK if rec.is_lattice else EXIT_NOT_LATTICE


def _print_analysis(rec):
    print(f"type            {rec.input}")
    print(f"genus           {rec.genus}   dim_R P = {rec.dim_P}   dim_R U = {rec.dim_U}")
    if rec.condition is None:
        print("condition       sigma(1) != 2: k=1 is not a ball-uniformizing eigenspace")
    else:
        c = rec.condition
        S = f" S={{{','.join(map(str, c['S']))}}}" if c["S"] else ""
        print(f"condition       {c['tag']}{S}   model {rec.model or '-'}")
        print(f"parabolic       {_pairs(c['parabolic'])}   contracted {_pairs(c['contracted'])}")
        print(f"arithmetic      {'yes' if rec.arithmetic else 'no'}")
    print(f"trace field     Q(cos 2pi/{rec.trace_field['canonical_d']}), degree {rec.trace_field['degree']}")
    print("conjugates")
    for cj in rec.conjugates:
        lam = "-" if cj.lam is None else q(cj.lam)
        mu = ", ".join(q(x) for x in cj.mu)
        print(f"  k={cj.k:<3} sig=({cj.signature[0]},{cj.signature[1]})  {cj.kind:<13} lambda={lam:<7} mu=({mu})")
    print(f"spectrum        {_set(rec.spectrum)}")
    if rec.relative_euler is not None:
        print(f"relative e_orb  {_set(rec.relative_euler)}")
    if rec.euler is not None:
        e = rec.euler
        print(f"e_orb           {q(e['e_orb'])}   (K+R)^2 = {q(e['c1_sq'])}   BMY equality: {e['bmy']}")


# -- table --------------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, tuple) and (not v or isinstance(v[0], tuple)):
        return _pairs(v)
    if isinstance(v, tuple):
        return _set(v)
    return str(v)


def cmd_table(args) -> int:
    try:
        rows = load_rows(args.data)
    except (OSError, DMError, KeyError, ValueError) as exc:
        print(f"error: cannot read data file: {exc}", file=sys.stderr)
        return EXIT_INVALID
    diffs = diff_table(rows)
    computed = {r.index: compute_row(r) for r in rows}
    if args.format == "json":
        print(json.dumps([
            {"index": r.index, "type": str(r.ct), "match": not diffs[r.index],
             **{c: _json_cell(computed[r.index][c]) for c in COLUMNS}}
            for r in rows], indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(TABLE_CSV_HEADER)
        for r in rows:
            w.writerow([r.index, str(r.ct)] + [_cell(computed[r.index][c]) for c in COLUMNS]
                       + ["yes" if not diffs[r.index] else "no"])
    else:
        print(f"{'#':>2}  {'type':<18} {'cond':<8} {'model':<7} {'par':<4} {'g':>3} {'P':>3} {'U':>3}  "
              f"{'spectrum':<24} {'relative e_orb':<18} ok")
        for r in rows:
            c = computed[r.index]
            print(f"{r.index:>2}  {str(r.ct):<18} {c['condition']:<8} {c['model'] or '-':<7} "
                  f"{_cell(c['parabolic']):<4} {c['genus']:>3} {c['dim_P']:>3} {c['dim_U']:>3}  "
                  f"{_set(c['spectrum']):<24} {_cell(c['relative_euler']):<18} "
                  f"{'yes' if not diffs[r.index] else 'NO'}")
    matched = sum(1 for d in diffs.values() if not d)
    print(f"{matched}/{len(rows)} rows match", file=sys.stderr)
    for d in diffs.values():
        for cell in d:
            print(f"mismatch: {cell}", file=sys.stderr)
    return EXIT_OK if matched == len(rows) else EXIT_FAIL


def _json_cell(v):
    if isinstance(v, tuple):
        return [_json_cell(x) for x in v]
    if isinstance(v, Fraction):
        return q(v)
    return v


# -- enumerate ----------------------------------------------------------------

def cmd_enumerate(args) -> int:
    w = csv.writer(sys.stdout, lineterminator="\n") if args.format == "csv" else None
    if w:
        w.writerow(["type", "condition", "model", "arithmetic"])
    count = 0
    # one degree at a time keeps the output streaming and lets --start-d resume
    for d in range(max(args.start_d, 2), args.max_d + 1):
        for ct in enumerate_types(d, args.n_points, args.filter, min_d=d):
            report = check_sigma_int(ct.mu)
            tag = "arithmetic" if is_arithmetic(ct) else "non-arithmetic"
            model = model_label(report) or "-"
            if args.format == "json":
                print(json.dumps({"type": str(ct), "condition": report.condition,
                                  "model": model_label(report), "arithmetic": tag == "arithmetic"}))
            elif w:
                w.writerow([str(ct), report.condition, model, tag])
            else:
                print(f"{str(ct):<22} {report.condition:<9} {model:<7} {tag}")
            count += 1
        sys.stdout.flush()
    print(f"{count} records", file=sys.stderr)
    return EXIT_OK


# -- bmy ----------------------------------------------------------------------

def cmd_bmy(args) -> int:
    passed = contracted = parabolic = 0
    failures = []
    for mu in WeightSampler(seed=args.seed).samples(args.trials):
        rep = bmy_check(mu)
        kinds = {p.kind for p in pair_profiles(mu)}
        contracted += "contracted" in kinds
        parabolic += "parabolic" in kinds
        if rep.bmy_holds:
            passed += 1
        else:
            failures.append(rep)
    if args.format == "json":
        print(json.dumps({"trials": args.trials, "seed": args.seed, "passed": passed,
                          "with_contracted": contracted, "with_parabolic": parabolic}))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["trials", "seed", "passed", "with_contracted", "with_parabolic"])
        w.writerow([args.trials, args.seed, passed, contracted, parabolic])
    else:
        print(f"{passed}/{args.trials} pass  (seed {args.seed}; {contracted} with a contracted pair, "
              f"{parabolic} with a parabolic pair)")
    for rep in failures:
        print(f"failure: mu=({', '.join(q(x) for x in rep.mu)}) 3e={q(3 * rep.e_orb)} c1^2={q(rep.c1_sq)}",
              file=sys.stderr)
    return EXIT_OK if passed == args.trials else EXIT_FAIL


# -- classify -----------------------------------------------------------------

def cmd_classify(args) -> int:
    status = EXIT_OK
    if args.input == "builtin":
        rows = surface_rows()
        labels = [str(r.index) for r in rows]
        cts = [r.ct for r in rows]
        edges = known_edges(rows)
        title = "commensurability classes"
    else:
        try:
            with open(args.input) as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
        cts, labels, edges = [], [], []
        bad = 0
        for no, line in enumerate(lines, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                ct = parse_type(text)
                if not check_sigma_int(ct.mu).is_lattice:
                    print(f"line {no}: {text} satisfies no lattice condition; skipped", file=sys.stderr)
                    status = max(status, EXIT_NOT_LATTICE)
                    continue
            except (ValueError, DMError) as exc:
                print(f"line {no}: {exc}", file=sys.stderr)
                bad += 1
                continue
            cts.append(ct)
            labels.append(str(no))
        if bad:
            print(f"{bad} line(s) could not be parsed", file=sys.stderr)
            status = EXIT_INVALID
        title = "invariant-equal classes"
    classes = partition(cts, edges)
    invs = {i: invariants(cts[i - 1]) for cls in classes for i in cls[:1]}
    if args.format == "json":
        print(json.dumps([{"members": [labels[i - 1] for i in cls],
                           "types": [str(cts[i - 1]) for i in cls],
                           **_inv_json(invs[cls[0]])} for cls in classes], indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["class", "members", "trace_field", "spectrum", "relative_euler", "cocompact"])
        for n, cls in enumerate(classes, 1):
            inv = invs[cls[0]]
            w.writerow([n, " ".join(labels[i - 1] for i in cls), inv.trace_field.canonical_d,
                        " ".join(q(x) for x in inv.spectrum),
                        " ".join(q(x) for x in inv.relative_euler or ()), inv.cocompact])
    else:
        print(f"{len(classes)} {title}")
        for n, cls in enumerate(classes, 1):
            inv = invs[cls[0]]
            members = ", ".join(labels[i - 1] for i in cls)
            print(f"  {n}. {{{members}}}  {inv.trace_field}  spectrum {_set(inv.spectrum)}  "
                  f"relative e_orb {_set(inv.relative_euler)}  {'cocompact' if inv.cocompact else 'cusped'}")
    return status


def _inv_json(inv) -> dict:
    return {"trace_field": {"canonical_d": inv.trace_field.canonical_d, "degree": inv.trace_field.degree},
            "spectrum": [q(x) for x in inv.spectrum],
            "relative_euler": None if inv.relative_euler is None else [q(x) for x in inv.relative_euler],
            "cocompact": inv.cocompact}


COMMANDS = {"analyze": cmd_analyze, "table": cmd_table, "enumerate": cmd_enumerate,
            "bmy": cmd_bmy, "classify": cmd_classify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
