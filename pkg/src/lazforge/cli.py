"""Command-line interface.

Subcommands: gen, hgen, lpnf, af, bounds, tables, verify.  Exit codes:
0 success/pass, 1 verification fail, 2 usage error, 3 precondition error.
Numeric output uses 9 significant digits so identical inputs produce
byte-identical files.  LAZ_FORGE_THREADS (or --threads) sets the worker
count; single-threaded runs produce the same bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .ambiguity import af_grid, resolve_threads
from .bounds import optimality_factor
from .construct import (
    LazParams,
    build_laz_set,
    power_map_params,
    predicted_params,
)
from .errors import PreconditionError
from .hgen import hmatrix_from_set, make_hmatrix, verify_h_constraints
from .lpnf import (
    LocalZone,
    diff_table,
    lpnf_zone_for,
    nonlinearity_witness,
    power_lpnf,
    quad_lpnf,
)
from .seqcore import (
    Zone,
    load_sequence_set,
    save_sequence_set,
    sequence_set_to_dict,
)
from .verify import certify_laz, cyclic_distinct, empirical_zone, reproduce_table

H_KINDS = ("dft", "legendre", "mseq", "bjorck")


def _round9(x: float) -> float:
    return float(f"{x:.9g}")


def _json_out(obj, path: str | None = None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _meta_path(out: str) -> Path:
    p = Path(out)
    if p.suffix == ".json":
        return p.with_suffix(".meta.json")
    return Path(str(p) + ".meta.json")


def _build_function(args):
    if args.power_map is not None:
        p, alpha = args.power_map
        return power_lpnf(p, alpha), ("power", p, alpha)
    if args.n is None or args.k is None:
        raise PreconditionError("--n and --k are required without --power-map")
    return quad_lpnf(args.n, args.a2, args.a1, args.k), ("quad", args.n, args.k)


def _cmd_gen(args) -> int:
    f, family = _build_function(args)
    h = make_hmatrix(args.h, f.domain_size)
    s = build_laz_set(f, h)
    save_sequence_set(s, args.output)
    if family[0] == "power":
        params = {k: power_map_params(family[1], k) for k in ("periodic", "aperiodic")}
    else:
        params = {
            k: predicted_params(family[1], family[2], k)
            for k in ("periodic", "aperiodic")
        }
    meta = {
        "family": family[0],
        "h_kind": args.h,
        "periodic": params["periodic"].to_dict(),
        "aperiodic": params["aperiodic"].to_dict(),
    }
    _json_out(meta, str(_meta_path(args.output)))
    print(f"wrote {args.output} ({s.size} sequences of length {s.length})")
    return 0


def _cmd_hgen(args) -> int:
    if args.mode:
        if args.mode[0] != "verify" or len(args.mode) != 2:
            print("usage: lazforge hgen [verify FILE] [--kind KIND --n N [-o FILE]]",
                  file=sys.stderr)
            return 2
        h = hmatrix_from_set(load_sequence_set(args.mode[1]))
        report = verify_h_constraints(h)
        _json_out(
            {
                "order": h.order,
                "max_offdiag_inner": _round9(report.max_offdiag_inner),
                "max_modulated": _round9(report.max_modulated),
                "pass": report.passed,
                "inner_witness": report.inner_witness,
                "modulated_witness": report.modulated_witness,
            }
        )
        return 0 if report.passed else 1
    if args.kind is None or args.n is None:
        print("error: --kind and --n are required to generate", file=sys.stderr)
        return 2
    h = make_hmatrix(args.kind, args.n)
    d = sequence_set_to_dict(h.as_sequence_set())
    if args.output:
        _json_out(d, args.output)
    else:
        _json_out(d)
    return 0


def _cmd_lpnf(args) -> int:
    f, family = _build_function(args)
    if args.zx is not None and args.zy is not None:
        zone = LocalZone(args.zx, args.zy)
    elif family[0] == "quad":
        zone = lpnf_zone_for(family[1], family[2])
    else:
        zone = LocalZone(f.domain_size, f.codomain_size)
    count, a, b = nonlinearity_witness(f, zone)
    print(f"P_f = {count} over zone ({zone.z_x},{zone.z_y}); witness a={a} b={b}")
    if args.diff_csv:
        lines = ["a,x,diff"]
        for a_step in range(1, f.domain_size):
            for x, d in enumerate(diff_table(f, a_step)):
                lines.append(f"{a_step},{x},{d}")
        Path(args.diff_csv).write_text("\n".join(lines) + "\n")
    return 0


def _cmd_af(args) -> int:
    s = load_sequence_set(args.set)
    i, j = args.pair
    if not (0 <= i < s.size and 0 <= j < s.size):
        raise PreconditionError(f"pair indices out of range for set of size {s.size}")
    grid = af_grid(s[i], s[j], Zone(args.zx, args.zy), args.kind, source=(i, j))
    lines = ["tau,v,re,im,mag"]
    for r, tau in enumerate(grid.delays):
        for c, v in enumerate(grid.dopplers):
            z = grid.values[r, c]
            lines.append(f"{tau},{v},{z.real:.9g},{z.imag:.9g},{abs(z):.9g}")
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bounds(args) -> int:
    report = optimality_factor(args.theta, args.m, args.len, args.zx, args.zy, args.kind)
    _json_out(
        {
            "bound_value": _round9(report.bound_value),
            "theta": _round9(report.theta),
            "rho": _round9(report.rho),
            "regime": report.regime,
            "gamma_limit": None
            if report.gamma_limit is None
            else _round9(report.gamma_limit),
        }
    )
    return 0


def _cmd_tables(args) -> int:
    ids = [int(x) for x in args.id.split(",")]
    all_pass = True
    for tid in ids:
        checks = reproduce_table(tid)
        print(f"table {tid}:")
        for c in checks:
            status = "pass" if c.passed else "FAIL"
            print(
                f"  M={c.row.set_size} len={c.row.length} "
                f"zone=({c.row.z_x},{c.row.z_y}) theta={c.row.theta} "
                f"computed={c.computed_rho:.6f} reference={c.reference_rho:.6f} "
                f"{status}"
            )
            all_pass &= c.passed
    return 0 if all_pass else 1


def _cmd_verify(args) -> int:
    s = load_sequence_set(args.set)
    meta_path = Path(args.meta) if args.meta else _meta_path(args.set)
    if not meta_path.exists():
        raise PreconditionError(f"no claimed parameters found at {meta_path}")
    meta = json.loads(meta_path.read_text())
    kinds = ("periodic", "aperiodic") if args.kind == "both" else (args.kind,)
    threads = resolve_threads(args.threads)
    out = {"certificates": [], "all_pass": True}
    for kind in kinds:
        params = LazParams.from_dict(meta[kind])
        cert = certify_laz(s, params, threads=threads)
        d = cert.to_dict()
        d["measured_theta"] = _round9(d["measured_theta"])
        if d["witness"]:
            d["witness"]["magnitude"] = _round9(d["witness"]["magnitude"])
        if d["bound"] is not None:
            for key in ("bound_value", "theta", "rho", "gamma_limit"):
                if d["bound"][key] is not None:
                    d["bound"][key] = _round9(d["bound"][key])
        out["certificates"].append(d)
        out["all_pass"] &= cert.passed and cert.cyclically_distinct
    distinct = cyclic_distinct(s, mode="phase")
    out["cyclically_distinct"] = distinct.distinct
    if args.empirical_budget is not None:
        out["empirical_rectangles"] = {
            kind: [list(r) for r in empirical_zone(s, args.empirical_budget, kind)]
            for kind in kinds
        }
    _json_out(out)
    return 0 if out["all_pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lazforge",
        description="Construct and certify low-ambiguity-zone sequence sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_function_flags(p):
        p.add_argument("--n", type=int, help="function domain size")
        p.add_argument("--k", type=int, help="function codomain size")
        p.add_argument("--a2", type=int, default=1, help="quadratic coefficient")
        p.add_argument("--a1", type=int, default=0, help="linear coefficient")
        p.add_argument(
            "--power-map",
            nargs=2,
            type=int,
            metavar=("P", "ALPHA"),
            help="use x -> ALPHA^x mod P instead of the quadratic family",
        )

    p = sub.add_parser("gen", help="build an interleaved sequence set")
    add_function_flags(p)
    p.add_argument("--h", choices=H_KINDS, default="dft", help="companion matrix family")
    p.add_argument("-o", "--output", required=True, help="output set JSON path")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("hgen", help="generate or verify a companion matrix")
    p.add_argument("mode", nargs="*", help="'verify FILE' to check an existing matrix")
    p.add_argument("--kind", choices=H_KINDS)
    p.add_argument("--n", type=int, help="matrix order")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_hgen)

    p = sub.add_parser("lpnf", help="measure local nonlinearity of a function")
    add_function_flags(p)
    p.add_argument("--zx", type=int, help="difference zone half-width")
    p.add_argument("--zy", type=int, help="value zone half-width")
    p.add_argument("--diff-csv", help="write all difference tables as CSV")
    p.set_defaults(func=_cmd_lpnf)

    p = sub.add_parser("af", help="evaluate an ambiguity surface as CSV")
    p.add_argument("--set", required=True)
    p.add_argument("--pair", nargs=2, type=int, default=[0, 0], metavar=("I", "J"))
    p.add_argument("--kind", choices=("periodic", "aperiodic"), required=True)
    p.add_argument("--zx", type=int, required=True)
    p.add_argument("--zy", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_af)

    p = sub.add_parser("bounds", help="lower bound and optimality factor")
    p.add_argument("--m", type=int, required=True, help="set size")
    p.add_argument("--len", type=int, required=True, help="sequence length")
    p.add_argument("--zx", type=int, required=True)
    p.add_argument("--zy", type=int, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--kind", choices=("periodic", "aperiodic"), required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("tables", help="recompute reference tables")
    p.add_argument("--id", required=True, help="comma-separated table ids (1,2,4,5)")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("verify", help="certify a set against its claimed parameters")
    p.add_argument("--set", required=True)
    p.add_argument("--meta", help="claimed parameters (default: sidecar of --set)")
    p.add_argument("--kind", choices=("periodic", "aperiodic", "both"), default="both")
    p.add_argument("--empirical-budget", type=float)
    p.add_argument("--threads", type=int)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return args.func(args)
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
