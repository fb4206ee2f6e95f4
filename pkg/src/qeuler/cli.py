"""Command-line front end: evaluation, tabulation, and identity sweeps.

Commands
    char-list      print the character group modulo an odd d
    eval-qeuler    evaluate one q-Euler polynomial value
    eval-lfun      evaluate the multiple q-l-function at complex s
    eval-powersum  evaluate one alternating character power sum
    verify         sweep one identity over a parameter grid

Exit codes: 0 success or all instances passed, 1 at least one identity
instance failed, 2 invalid usage, 3 numeric infeasibility (no certified
truncation within the term budget, or an enumeration budget overrun).

Output is reproducible byte for byte for a fixed argv: JSON uses shortest
round-trip float formatting and fixed field order.  QEULER_THREADS caps the
number of worker threads used by verify sweeps (default: machine parallelism);
the report order never depends on scheduling.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .characters import build_character_group
from .errors import (
    BudgetExceeded,
    DomainError,
    NotOdd,
    Overflow,
    PlanInfeasible,
    UsageError,
)
from .identities import SweepGrid, power_sum, run_suite
from .lfun import lfun_value
from .polynomials import qeuler_value
from .qnum import DEFAULT_EPSILON, DEFAULT_MAX_TERMS, QContext
from .report import IDENTITY_IDS, suite_passed

OUTPUT_FORMATS = ("pretty", "json", "csv")


def _parse_complex(text: str) -> complex:
    """Accept 're' or 're,im'."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"--s expects 're' or 're,im', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qeuler",
        description="q-Euler polynomials, q-l-functions, and symmetry identity sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_char: bool = True) -> None:
        if with_char:
            p.add_argument("--d", type=int, required=True, help="odd character modulus")
            p.add_argument("--chi", type=int, default=None,
                           help="character label (default: principal for eval, all for verify)")
        p.add_argument("--output", choices=OUTPUT_FORMATS, default="pretty")
        p.add_argument("--out", dest="out_path", default=None,
                       help="write records to this file instead of stdout")

    p_char = sub.add_parser("char-list", help="list all characters modulo d")
    add_common(p_char)

    def add_eval_common(p: argparse.ArgumentParser) -> None:
        add_common(p)
        p.add_argument("--r", type=int, default=1, help="series order (>= 1)")
        p.add_argument("--q", type=float, required=True, help="deformation parameter in (0,1)")
        p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON,
                       help="series truncation budget")
        p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS,
                       help="hard cap on series terms")

    p_qe = sub.add_parser("eval-qeuler", help="evaluate E_n(x)")
    add_eval_common(p_qe)
    p_qe.add_argument("--n", type=int, required=True, help="degree (>= 0)")
    p_qe.add_argument("--x", type=float, default=0.0, help="argument (>= 0)")

    p_lf = sub.add_parser("eval-lfun", help="evaluate l(s, x)")
    add_eval_common(p_lf)
    p_lf.add_argument("--s", type=str, required=True, help="complex exponent 're' or 're,im'")
    p_lf.add_argument("--x", type=float, default=1.0, help="argument (> 0)")

    p_ps = sub.add_parser("eval-powersum", help="evaluate S_{n,i}(upper)")
    add_eval_common(p_ps)
    p_ps.add_argument("--upper", type=int, required=True, help="exclusive tuple bound (>= 1)")
    p_ps.add_argument("--n", type=int, required=True)
    p_ps.add_argument("--i", type=int, required=True, help="bracket power (0 <= i <= n)")

    p_v = sub.add_parser("verify", help="sweep one identity over a grid")
    add_eval_common(p_v)
    p_v.add_argument("--identity", choices=IDENTITY_IDS, required=True)
    p_v.add_argument("--a", type=int, default=1, help="odd symmetry parameter")
    p_v.add_argument("--b", type=int, default=1, help="odd symmetry parameter")
    p_v.add_argument("--n-max", type=int, default=0, help="sweep degrees n = 0..n-max")
    p_v.add_argument("--m-max", type=int, default=0, help="sweep degrees m = 0..m-max (EQ15)")
    p_v.add_argument("--s", type=str, default=None, help="exponent for T1, 're' or 're,im'")
    p_v.add_argument("--x", type=float, default=1.0)
    p_v.add_argument("--y", type=float, default=0.0)
    p_v.add_argument("--tolerance", type=float, default=None,
                     help="override the identity tolerance")
    return parser


def parse_args(argv: list[str]) -> argparse.Namespace:
    """Parse and validate; raises UsageError on any out-of-range value."""
    args = build_parser().parse_args(argv)

    if getattr(args, "d", None) is not None:
        if args.d < 1:
            raise UsageError("--d must be a positive integer")
        if args.d % 2 == 0:
            raise UsageError("--d must be odd")
    if getattr(args, "q", None) is not None and not 0.0 < args.q < 1.0:
        raise UsageError("--q must lie in (0,1)")
    if getattr(args, "r", None) is not None and args.r < 1:
        raise UsageError("--r must be a positive integer")
    if getattr(args, "epsilon", None) is not None and not args.epsilon > 0.0:
        raise UsageError("--epsilon must be positive")
    if getattr(args, "max_terms", None) is not None and args.max_terms < 0:
        raise UsageError("--max-terms must be nonnegative")

    if args.command == "eval-qeuler":
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        if args.x < 0.0:
            raise UsageError("--x must be nonnegative")
    elif args.command == "eval-lfun":
        if args.x <= 0.0:
            raise UsageError("--x must be strictly positive")
        args.s_value = _parse_complex(args.s)
    elif args.command == "eval-powersum":
        if args.upper < 1:
            raise UsageError("--upper must be a positive integer")
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        if not 0 <= args.i <= args.n:
            raise UsageError("--i must satisfy 0 <= i <= n")
    elif args.command == "verify":
        if args.a < 1 or args.a % 2 == 0:
            raise UsageError("--a must be odd")
        if args.b < 1 or args.b % 2 == 0:
            raise UsageError("--b must be odd")
        if args.n_max < 0:
            raise UsageError("--n-max must be nonnegative")
        if args.m_max < 0:
            raise UsageError("--m-max must be nonnegative")
        if args.x < 0.0:
            raise UsageError("--x must be nonnegative")
        if args.y < 0.0:
            raise UsageError("--y must be nonnegative")
        if args.identity == "T1":
            if args.s is None:
                raise UsageError("--s is required for identity T1")
            args.s_value = _parse_complex(args.s)
        else:
            args.s_value = None

    if getattr(args, "chi", None) is not None and args.chi < 0:
        raise UsageError("--chi must be nonnegative")
    return args


def _resolve_chi(args: argparse.Namespace):
    group = build_character_group(args.d)
    label = args.chi if args.chi is not None else 0
    if label >= len(group):
        raise UsageError(f"--chi must be below the group size {len(group)}")
    return group[label]


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if text and not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w") as fh:
            fh.write(text)
            if text and not text.endswith("\n"):
                fh.write("\n")


def _eval_record(args: argparse.Namespace, params: dict, value: complex) -> str:
    if args.output == "json":
        record = {"command": args.command} | params | {"value": [value.real, value.imag]}
        return json.dumps(record)
    if args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(params) + ["value_re", "value_im"])
        writer.writerow([repr(v) if isinstance(v, float) else v for v in params.values()]
                        + [repr(value.real), repr(value.imag)])
        return buf.getvalue()
    lines = [f"{k} = {v}" for k, v in params.items()]
    lines.append(f"value = {value.real!r} + {value.imag!r}i")
    return "\n".join(lines) + "\n"


def _run_char_list(args: argparse.Namespace) -> int:
    group = build_character_group(args.d)
    if args.chi is not None and args.chi >= len(group):
        raise UsageError(f"--chi must be below the group size {len(group)}")
    chars = group.characters if args.chi is None else [group[args.chi]]
    if args.output == "json":
        text = "\n".join(json.dumps(c.to_json_dict()) for c in chars)
    elif args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["d", "label", "residue", "re", "im"])
        for c in chars:
            for m, v in enumerate(c.values):
                writer.writerow([c.modulus_d, c.label, m, repr(v.real), repr(v.imag)])
        text = buf.getvalue()
    else:
        lines = [f"character group mod {args.d}: {len(group)} characters"]
        for c in chars:
            vals = "  ".join(f"{v.real:+.3f}{v.imag:+.3f}i" for v in c.values)
            lines.append(f"chi_{c.label}: {vals}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out_path)
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    group = build_character_group(args.d)
    if args.chi is not None and args.chi >= len(group):
        raise UsageError(f"--chi must be below the group size {len(group)}")
    grid = SweepGrid(
        d_values=(args.d,),
        q_values=(args.q,),
        r_values=(args.r,),
        chi_labels=None if args.chi is None else (args.chi,),
        ab_pairs=((args.a, args.b),),
        n_values=tuple(range(args.n_max + 1)),
        s_values=(args.s_value,) if args.s_value is not None else (),
        m_values=tuple(range(args.m_max + 1)),
        x_values=(args.x,),
        y_values=(args.y,),
    )
    workers = _worker_count()
    reports = run_suite(args.identity, grid, args.epsilon, args.max_terms,
                        rel_tol=args.tolerance, workers=workers)
    if args.output == "json":
        text = "\n".join(r.to_json_line() for r in reports)
    elif args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "instance", "residual", "tolerance", "pass"])
        for r in reports:
            inst = json.dumps(r.to_json_dict()["instance"])
            residual = "" if r.residual is None else repr(r.residual)
            writer.writerow([r.identity_id, inst, residual, repr(r.tolerance),
                             "true" if r.passed else "false"])
        text = buf.getvalue()
    else:
        lines = []
        for r in reports:
            tag = "PASS" if r.passed else "FAIL"
            inst = " ".join(f"{k}={v}" for k, v in r.instance.items())
            if r.error is not None:
                lines.append(f"{tag} {r.identity_id} {inst} error: {r.error}")
            else:
                lines.append(f"{tag} {r.identity_id} {inst} "
                             f"residual={r.residual:.3e} tol={r.tolerance:.3e}")
        n_pass = sum(r.passed for r in reports)
        lines.append(f"{n_pass}/{len(reports)} instances passed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out_path)
    return 0 if suite_passed(reports) else 1


def _worker_count() -> int:
    raw = os.environ.get("QEULER_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        count = int(raw)
    except ValueError:
        raise UsageError(f"QEULER_THREADS must be an integer, got {raw!r}")
    if count < 1:
        raise UsageError(f"QEULER_THREADS must be at least 1, got {count}")
    return count


def run(args: argparse.Namespace) -> int:
    if args.command == "char-list":
        return _run_char_list(args)
    if args.command == "verify":
        return _run_verify(args)

    ctx = QContext(args.q)
    chi = _resolve_chi(args)
    if args.command == "eval-qeuler":
        value = qeuler_value(chi, args.r, args.n, args.x, ctx,
                             args.epsilon, args.max_terms)
        params = {"d": args.d, "chi": chi.label, "r": args.r, "n": args.n,
                  "q": args.q, "x": args.x, "epsilon": args.epsilon}
    elif args.command == "eval-lfun":
        value = lfun_value(chi, args.r, args.s_value, args.x, ctx,
                           args.epsilon, args.max_terms)
        params = {"d": args.d, "chi": chi.label, "r": args.r,
                  "s": [args.s_value.real, args.s_value.imag],
                  "q": args.q, "x": args.x, "epsilon": args.epsilon}
    elif args.command == "eval-powersum":
        value = power_sum(chi, args.r, args.n, args.i, args.upper, ctx)
        params = {"d": args.d, "chi": chi.label, "r": args.r, "n": args.n,
                  "i": args.i, "upper": args.upper, "q": args.q}
    else:
        raise UsageError(f"unknown command {args.command!r}")
    _emit(_eval_record(args, params, value), args.out_path)
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        args = parse_args(list(sys.argv[1:]) if argv is None else list(argv))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse already reported the problem
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PlanInfeasible, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, NotOdd, Overflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
