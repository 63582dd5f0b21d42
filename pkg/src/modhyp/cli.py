"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 precondition violated during computation.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import charsum, hyperbola, nqr, sweep
from .modarith import Modulus


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_output(sp):
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", default=None, help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="modhyp", description="Modular hyperbola boxes, character sums and n_p.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("minbox", help="minimal two-point box for xy = c (mod p)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", default="all", help="'all', 'sample:K' or a comma list")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--oracle", action="store_true", help="use the exhaustive pair scan")
    _add_output(sp)

    sp = sub.add_parser("criterion", help="Legendre-symbol test for a box of side H")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--H", type=int, required=True)
    sp.add_argument("--even", action="store_true", help="restrict to even offsets")
    _add_output(sp)

    sp = sub.add_parser("charsum", help="S(N; H) and max_{h<=H} |S(N; h)|")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--N", type=int, default=0)
    sp.add_argument("--H", type=int, required=True)
    _add_output(sp)

    sp = sub.add_parser("shao", help="mean-value statistic over a spaced family")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--H", type=int, required=True)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--family", default=None,
                    help="comma list of shifts (default 0, H, 2H, ...)")
    _add_output(sp)

    sp = sub.add_parser("moment", help="Weil-type 2r-th moment")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", type=int, default=1)
    sp.add_argument("--H", "--U", dest="H", type=int, default=None,
                    help="window U (default ceil(p^(1/(2r))))")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--naive", action="store_true")
    _add_output(sp)

    sp = sub.add_parser("nqr", help="least quadratic nonresidue")
    sp.add_argument("--p", type=int, required=True)
    _add_output(sp)

    sp = sub.add_parser("dichotomy", help="evaluate both threshold branches for one prime")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--epsilon", type=float, default=0.1)
    sp.add_argument("--C", type=float, default=2.0)
    _add_output(sp)

    sp = sub.add_parser("sweep", help="run a mode over a prime range")
    sp.add_argument("--mode", choices=sweep.MODES, required=True)
    sp.add_argument("--p-min", type=int, required=True)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--c", default="all", help="'all', 'sample:K' or a comma list")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--H", type=int, default=None)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--epsilon", type=float, default=0.1)
    sp.add_argument("--C", type=float, default=2.0)
    sp.add_argument("--threads", type=int, default=1)
    _add_output(sp)

    sp = sub.add_parser("fit", help="log-log slope of a field against p")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--field", required=True)
    _add_output(sp)

    return parser


def _modulus(p: int) -> Modulus:
    try:
        return Modulus(p)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _family(spec: str | None, p: int, H: int):
    if spec is None:
        return charsum.tiling_family(p, H)
    try:
        pts = tuple(sorted(int(t) for t in spec.split(",") if t.strip()))
    except ValueError:
        raise UsageError(f"bad family {spec!r}") from None
    return charsum.SpacedFamily(p, pts)


def _criterion_record(p, c, H, even):
    inst = hyperbola.HyperbolaInstance(p, c)
    ok, w = (hyperbola.criterion_even if even else hyperbola.criterion_decide)(inst, H)
    return {"p": p, "c": c, "H": H, "holds": ok,
            "a": w.a if w else 0, "b_sign": w.b_sign if w else 0,
            "b": w.b_magnitude if w else 0}


def _minbox_records(args):
    p = _modulus(args.p).p
    try:
        cs = sweep.c_values(sweep.parse_c_mode(args.c), p, args.seed)
    except sweep.ConfigError as exc:
        raise UsageError(str(exc)) from None
    if not args.oracle:
        return [sweep.minbox_record(p, c) for c in cs]
    out = []
    for c in cs:
        res = hyperbola.min_box_oracle(hyperbola.HyperbolaInstance(p, c))
        P, Q = res.witness
        out.append({"p": p, "c": c, "h_star": res.h_star, "x1": P.x, "y1": P.y,
                    "x2": Q.x, "y2": Q.y, "a": res.offset.a,
                    "b_sign": res.offset.b_sign, "b": res.offset.b_magnitude})
    return out


def _dispatch(args) -> tuple[list[dict], str | None]:
    cmd = args.command
    if cmd == "minbox":
        return _minbox_records(args), "minbox"
    if cmd == "criterion":
        p = _modulus(args.p).p
        return [_criterion_record(p, args.c, args.H, args.even)], None
    if cmd == "charsum":
        table = charsum.build_table(_modulus(args.p))
        return [{"p": table.p, "N": args.N, "h": args.H,
                 "S": charsum.char_sum(table, args.N, args.H),
                 "max_partial": charsum.max_partial(table, args.N, args.H)}], None
    if cmd == "shao":
        p = _modulus(args.p).p
        return [sweep.shao_record(p, args.H, args.r, _family(args.family, p, args.H))], "shao"
    if cmd == "moment":
        p = _modulus(args.p).p
        U = args.H if args.H is not None else sweep.ceil_root(p, 2 * args.r)
        rep = charsum.weil_moment(p, args.c, U, args.r, naive=args.naive)
        return [{"p": p, "c": args.c, "U": U, "r": args.r, "value": rep.value,
                 "bound": rep.bound, "ratio": rep.ratio}], "moment"
    if cmd == "nqr":
        p = _modulus(args.p)
        return [{"p": p.p, "n_p": nqr.least_nonresidue(p).n_p}], "nqr"
    if cmd == "dichotomy":
        p = _modulus(args.p).p
        return [sweep.dichotomy_record(p, args.epsilon, args.C)], "dichotomy"
    if cmd == "sweep":
        config = sweep.SweepConfig(
            p_min=args.p_min, p_max=args.p_max, mode=args.mode, c=args.c, seed=args.seed,
            H=args.H, r=args.r, epsilon=args.epsilon, C=args.C, threads=args.threads,
            format=args.format, out=args.out,
        )
        try:
            config.validate()
        except sweep.ConfigError as exc:
            raise UsageError(str(exc)) from None
        return sweep.run_sweep(config), args.mode
    if cmd == "fit":
        try:
            records = sweep.read_records(args.infile)
        except OSError as exc:
            raise UsageError(f"cannot read {args.infile}: {exc}") from None
        if records and args.field not in records[0]:
            raise UsageError(f"no field {args.field!r} in {args.infile}")
        return [sweep.fit_summary(sweep.fit_exponent(records, args.field))], None
    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s",
                        stream=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        records, mode = _dispatch(args)
    except UsageError as exc:
        print(f"modhyp: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, AssertionError) as exc:
        print(f"modhyp: precondition violated: {exc}", file=sys.stderr)
        return 2
    try:
        sweep.emit(records, args.format, args.out, mode)
    except OSError as exc:
        print(f"modhyp: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
