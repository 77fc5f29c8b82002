"""Command-line front end.

Subcommands: generate, hilbert, bounds, count-lines, verify, family,
reduce.  Configurations and schemes travel as UTF-8 JSON per the module
wire formats; reports print as text mirroring the tabular displays used
throughout the package, as JSON, or as CSV rows for batch sweeps.  Every
subcommand is deterministic given its full parameter set including the
seed.  Exit status: 0 on success, 1 when a validation or an asserted
property fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import cht, hilbert, kconfig, verify
from .scheme import (
    FatPointScheme,
    lines_from_json,
    lines_to_json,
    reduction_vector,
    residual_chain,
    scheme_from_json,
    scheme_to_json,
)
from .geom import triple_to_json


def _coord_bound(args) -> int:
    if getattr(args, "coord_bound", None) is not None:
        return args.coord_bound
    env = os.environ.get("KCONFIG_COORD_BOUND")
    return int(env) if env else 50

def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        flat = _flatten(payload)
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(flat.keys())
        writer.writerow(flat.values())
        print(buf.getvalue(), end="")
    else:
        print(text)


def _flatten(payload: dict, prefix: str = "") -> dict:
    out = {}
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(_flatten(value, name + "."))
        elif isinstance(value, list):
            out[name] = " ".join(str(v) for v in value)
        else:
            out[name] = value
    return out


def _parse_type(text: str) -> kconfig.KType:
    return kconfig.KType(tuple(int(v) for v in text.replace(",", " ").split()))


def _load_config(args) -> kconfig.KConfiguration:
    x = kconfig.kconfig_from_json(_load_json(args.config))
    problems = kconfig.validate(x)
    if problems:
        for p in problems:
            print(f"invalid configuration: {p}", file=sys.stderr)
        raise SystemExit(1)
    return x


def _scheme_for(args) -> FatPointScheme:
    if getattr(args, "scheme", None):
        return scheme_from_json(_load_json(args.scheme))
    x = _load_config(args)
    return kconfig.fatten(x, args.m)


def _lines_for(args, z: FatPointScheme):
    if getattr(args, "lines", None):
        return lines_from_json(_load_json(args.lines))
    x = _load_config(args)
    strategy = {
        "repeat": cht.REPEAT_DESCENDING,
        "star": cht.STAR,
        "augmented": cht.AUGMENTED,
    }[args.strategy]
    return cht.peeling_sequence(x, args.m, strategy, seed=args.seed)


def cmd_generate(args) -> int:
    bound = _coord_bound(args)
    if args.r is not None:
        ktype = _parse_type(args.type)
        expected = tuple(range(1, ktype.s + 1))
        if ktype.d != expected:
            print("--r applies to types (1, 2, ..., s) only", file=sys.stderr)
            return 2
        x = kconfig.generate_with_line_count(ktype.s, args.r, args.seed, bound)
    else:
        x = kconfig.generate_generic(_parse_type(args.type), args.seed, bound)
    payload = kconfig.kconfig_to_json(x)
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        print(text)
    return 0


def cmd_hilbert(args) -> int:
    z = _scheme_for(args)
    table = hilbert.hilbert_table(z, args.t_max)
    payload = table.to_json()
    _emit(args, payload, table.arrow_display())
    return 0


def cmd_bounds(args) -> int:
    z = _scheme_for(args)
    lines = _lines_for(args, z)
    report = cht.bound_check(z, lines, args.t)
    text = (
        f"t={report.t} f={report.f_lower} F={report.F_upper} "
        f"H={report.exact}{' tight' if report.tight else ''}"
    )
    _emit(args, report.to_json(), text)
    return 0


def cmd_count_lines(args) -> int:
    x = _load_config(args)
    k = args.k if args.k is not None else x.ktype.ds
    count, lines = kconfig.count_lines(x, k)
    payload = {"k": k, "count": count, "lines": lines_to_json(lines)}
    text = f"{count} line(s) with exactly {k} points"
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    x = _load_config(args)
    ms = [args.m] if args.m_sweep is None else _parse_sweep(args.m_sweep)
    status = 0
    for m in ms:
        report = verify.verify_main(x, m, include_ri=args.ri)
        verdict = "MATCH" if report.matches else "MISMATCH"
        note = "" if report.asserted else " (informational: m below threshold)"
        text = (
            f"m={m} delta={report.delta_value} lines={report.line_count} "
            f"{verdict}{note}"
        )
        _emit(args, report.to_json(), text)
        if report.asserted and not report.matches:
            status = 1
    return status


def _parse_sweep(text: str) -> list[int]:
    lo, _, hi = text.partition(":")
    return list(range(int(lo), int(hi) + 1))


def cmd_family(args) -> int:
    report = verify.hilbert_family(args.s, args.m, args.seed, args.coord_bound or 20)
    lines = [
        f"r={mem.r} H_mX: " + " ".join(str(v) for v in mem.fat_values)
        for mem in report.members
    ]
    for r, reason in sorted(report.infeasible.items()):
        lines.append(f"r={r} infeasible: {reason}")
    lines.append(
        "supports_ok={} probe_ok={} pairwise_distinct={}".format(
            report.supports_ok, report.probe_ok, report.pairwise_distinct
        )
    )
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if report.ok else 1


def cmd_reduce(args) -> int:
    z = _scheme_for(args)
    lines = _lines_for(args, z)
    chain = residual_chain(z, lines)
    v = reduction_vector(z, lines)
    steps = []
    for step, scheme in enumerate(chain):
        entry = {
            "step": step,
            "line": triple_to_json(lines[step - 1]) if step else None,
            "removed": v.values[step - 1] if step else None,
            "points": {
                "(" + ":".join(str(c) for c in p.coords) + ")": m
                for p, m in scheme.entries
            },
        }
        steps.append(entry)
    payload = {
        "reduction_vector": list(v.values),
        "complete": v.complete,
        "chain": steps,
    }
    text_lines = [f"v = {tuple(v.values)}  complete = {v.complete}"]
    for entry in steps:
        head = (
            f"step {entry['step']}"
            if entry["line"] is None
            else f"step {entry['step']} after line ({','.join(entry['line'])}), removed {entry['removed']}"
        )
        body = "  ".join(f"{pt}:{m}" for pt, m in sorted(entry["points"].items()))
        text_lines.append(head + ("  " + body if body else "  (empty)"))
    _emit(args, payload, "\n".join(text_lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatpoints",
        description="Exact fat-point Hilbert functions on plane configurations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, scheme_input=False, needs_m=True):
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        if scheme_input:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--config", help="k-configuration JSON file")
            src.add_argument("--scheme", help="fat point scheme JSON file")
            if needs_m:
                p.add_argument("--m", type=int, default=1,
                               help="multiplicity (with --config)")
        else:
            p.add_argument("--config", required=True)

    g = sub.add_parser("generate", help="emit a seeded random configuration")
    g.add_argument("--type", required=True, help="comma-separated type, e.g. 1,2,3")
    g.add_argument("--r", type=int, default=None,
                   help="exact number of maximal lines (types (1,...,s) only)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--coord-bound", type=int, default=None)
    g.add_argument("--output", "-o", default=None)
    g.add_argument("--format", choices=["text", "json", "csv"], default="json")
    g.set_defaults(func=cmd_generate)

    h = sub.add_parser("hilbert", help="Hilbert table of a scheme")
    common(h, scheme_input=True)
    h.add_argument("--t-max", type=int, required=True)
    h.set_defaults(func=cmd_hilbert)

    b = sub.add_parser("bounds", help="reduction-vector bounds vs the exact value")
    common(b, scheme_input=True)
    b.add_argument("--lines", help="JSON file with a line sequence")
    b.add_argument("--strategy", choices=["repeat", "star", "augmented"],
                   default="repeat")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--t", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    c = sub.add_parser("count-lines", help="brute-force maximal line count")
    common(c)
    c.add_argument("--k", type=int, default=None)
    c.set_defaults(func=cmd_count_lines)

    v = sub.add_parser("verify", help="first difference vs line count")
    common(v)
    v.add_argument("--m", type=int, default=None)
    v.add_argument("--m-sweep", default=None, help="inclusive range lo:hi")
    v.add_argument("--ri", action="store_true", help="include the regularity index")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("family", help="Hilbert functions across feasible line counts")
    f.add_argument("--s", type=int, required=True)
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--coord-bound", type=int, default=None)
    f.add_argument("--format", choices=["text", "json", "csv"], default="text")
    f.set_defaults(func=cmd_family)

    r = sub.add_parser("reduce", help="print the full residual chain")
    common(r, scheme_input=True)
    r.add_argument("--lines", help="JSON file with a line sequence")
    r.add_argument("--strategy", choices=["repeat", "star", "augmented"],
                   default="repeat")
    r.add_argument("--seed", type=int, default=0)
    r.set_defaults(func=cmd_reduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.m is None and args.m_sweep is None:
        parser.error("verify needs --m or --m-sweep")
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
