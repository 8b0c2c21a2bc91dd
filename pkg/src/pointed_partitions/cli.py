"""Command-line interface.

Exit status: 0 on success, 1 when a verification suite finds a counterexample,
2 on usage, parse or invariant errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import enumeration
from .bijections import phi, phi_trace, tau, zeta
from .partition import (
    PointedPartition,
    check_cell,
    format_cell,
    format_partition,
    parse_cell,
    parse_partition,
    stats,
)
from .qseries import gf_f

CHECKS = ("involution", "decomposition", "symmetry", "supersymmetry", "gf", "pealing", "remark", "tau", "zeta")


class UsageError(Exception):
    pass


def _pointed(args) -> PointedPartition:
    if args.partition is None or args.cell is None:
        raise UsageError(f"{args.command} needs --partition and --cell")
    lam = parse_partition(args.partition)
    v = parse_cell(args.cell)
    check_cell(lam, v)
    return PointedPartition(lam, v)


def _pp_json(pp: PointedPartition) -> dict:
    return {"partition": format_partition(pp.partition), "cell": format_cell(pp.cell)}


def _emit_pp(pp: PointedPartition, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(_pp_json(pp)), file=out)
    else:
        print("partition\tcell", file=out)
        print(f"{format_partition(pp.partition)}\t{format_cell(pp.cell)}", file=out)


def _cmd_stats(args, out) -> int:
    pp = _pointed(args)
    st = stats(*pp)
    if args.format == "json":
        print(json.dumps(st._asdict()), file=out)
    else:
        print(
            f"arm={st.arm} leg={st.leg} coarm={st.coarm} coleg={st.coleg} "
            f"hook={st.hook} part={st.part_len}",
            file=out,
        )
    return 0


def _cmd_phi(args, out) -> int:
    pp = _pointed(args)
    if args.trace:
        for name, obj in phi_trace(pp):
            payload = _pp_json(obj) if isinstance(obj, PointedPartition) else obj.to_json()
            print(json.dumps({"step": name, **payload}), file=out)
        return 0
    _emit_pp(phi(pp), args.format, out)
    return 0


def _cmd_shift(args, out) -> int:
    pp = _pointed(args)
    if args.alpha2 is None or args.beta2 is None:
        raise UsageError(f"{args.command} needs --alpha2 and --beta2")
    fn = tau if args.command == "tau" else zeta
    _emit_pp(fn(pp, args.alpha2, args.beta2), args.format, out)
    return 0


def _cmd_table(args, out) -> int:
    if args.n is None:
        raise UsageError("table needs --n")
    table = enumeration.distribution(args.n, args.kind)
    if args.format == "json":
        print(json.dumps(table.to_json()), file=out)
    else:
        out.write(table.to_tsv())
    return 0


def _cmd_gf(args, out) -> int:
    series = gf_f(args.a, args.l, args.m, args.max_degree)
    if args.format == "json":
        print(json.dumps({"a": args.a, "l": args.l, "m": args.m, "coeffs": series.to_json()}), file=out)
    else:
        print("degree\tcoeff", file=out)
        for d, c in enumerate(series):
            print(f"{d}\t{c}", file=out)
    return 0


def run_check(name: str, max_n: int, max_a: int, max_l: int, max_m: int,
              series_degree: int, max_failures: int) -> enumeration.VerifyReport:
    if name == "involution":
        return enumeration.verify_involution(max_n, max_failures)
    if name == "decomposition":
        return enumeration.verify_decomposition(max_n, max_failures)
    if name == "symmetry":
        return enumeration.verify_symmetry(max_n, max_failures)
    if name == "supersymmetry":
        return enumeration.verify_supersymmetry(max_n, max_failures)
    if name == "gf":
        return enumeration.verify_gf(max_a, max_l, max_m, max_n, max_failures)
    if name == "pealing":
        return enumeration.verify_pealing(max_n, max_a, max_m, max_failures)
    if name == "remark":
        return enumeration.verify_remark(max_a, max(max_m, 1), series_degree, max_failures)
    if name == "tau":
        return enumeration.verify_tau(max_n, max_failures)
    if name == "zeta":
        return enumeration.verify_zeta(max_n, max_a + max_l, max_failures)
    raise UsageError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")


def _cmd_verify(args, out) -> int:
    names = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else list(CHECKS)
    for name in names:
        if name not in CHECKS:
            raise UsageError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    params = (args.max_n, args.max_a, args.max_l, args.max_m, args.series_degree, args.max_failures)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(run_check, names, *[[p] * len(names) for p in params]))
    else:
        reports = [run_check(name, *params) for name in names]
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2), file=out)
    else:
        for r in reports:
            print(r.summary(), file=out)
            for f in r.failures:
                print(f"  {f}", file=out)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointed-partitions",
        description="Trace the hook/part-length involution and verify its properties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        return p

    def pointed_args(p):
        p.add_argument("--partition", help='comma-separated parts, e.g. "5,3,1"')
        p.add_argument("--cell", help='"x,y": column then part index, 1-based')
        return common(p)

    pointed_args(sub.add_parser("stats", help="print arm, leg, coarm, coleg, hook and part length"))
    p = pointed_args(sub.add_parser("phi", help="apply the involution"))
    p.add_argument("--trace", action="store_true", help="emit every intermediate object as JSON lines")
    for name in ("tau", "zeta"):
        p = pointed_args(sub.add_parser(name, help=f"apply {name} with target statistics"))
        p.add_argument("--alpha2", type=int)
        p.add_argument("--beta2", type=int)

    p = common(sub.add_parser("table", help="distribution table of cell statistics"))
    p.add_argument("--n", type=int)
    p.add_argument("--kind", choices=sorted(enumeration.KEY_KINDS), default="hp")

    p = common(sub.add_parser("gf", help="coefficients of the generating function of f_n(a,l,m)"))
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=40)

    p = common(sub.add_parser("verify", help="run exhaustive verification suites"))
    p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(CHECKS)}")
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--max-a", type=int, default=3)
    p.add_argument("--max-l", type=int, default=3)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--series-degree", type=int, default=40)
    p.add_argument("--max-failures", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    return parser


_COMMANDS = {
    "stats": _cmd_stats,
    "phi": _cmd_phi,
    "tau": _cmd_shift,
    "zeta": _cmd_shift,
    "table": _cmd_table,
    "gf": _cmd_gf,
    "verify": _cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
