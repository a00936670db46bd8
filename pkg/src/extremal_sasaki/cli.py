"""Command-line front end.

Exit codes: 0 success (``exists``: metric exists), 1 parse or validation
error, 2 solver error, 3 no extremal metric, 4 undetermined.
"""
import argparse
import json
import os
import sys

from . import __version__
from .admissible import data_from_json, validate, weight_from_json
from .errors import ExtremalError, ValidationError
from .exactalg import Polynomial, fmt, to_rational
from .futaki import (AffineFn, c_K, csc_type, df_indicator, double_root_defect,
                     find_csc, futaki)
from .report import emit_scan, scan, write_csv
from .solver import (existence_verdict, perturbation_pair, solution_to_json,
                     solve_extremal, solve_weighted)

EXIT_OK, EXIT_INPUT, EXIT_SOLVER, EXIT_NOT_EXISTS, EXIT_UNDETERMINED = 0, 1, 2, 3, 4
VERDICT_EXIT = {True: EXIT_OK, False: EXIT_NOT_EXISTS, None: EXIT_UNDETERMINED}


class InputError(Exception):
    pass


def load_config(path):
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(cfg, dict):
        raise InputError("config must be a JSON object")
    try:
        data = data_from_json(cfg)
        w = weight_from_json(cfg.get("weight"))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc
    extended = cfg.get("extended", False)
    if not isinstance(extended, bool):
        raise InputError("'extended' must be a boolean")
    validate(data, w, extended).raise_for_violations()
    return cfg, data, w, extended


def _rational_arg(text):
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _affine_arg(text):
    try:
        return AffineFn.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected slope,intercept: {text!r}") from exc


def _emit(obj):
    print(json.dumps(obj, indent=2))


def cmd_solve(args):
    _, data, w, extended = load_config(args.config)
    sol = solve_extremal(data, w, extended)
    _emit(solution_to_json(sol, existence_verdict(sol)))
    return EXIT_OK


def cmd_exists(args):
    _, data, w, extended = load_config(args.config)
    sol = solve_extremal(data, w, extended)
    report = existence_verdict(sol)
    out = report.to_json()
    out.update(A=fmt(sol.A), B=fmt(sol.B))
    _emit(out)
    return VERDICT_EXIT[report.exists]


def _max_prec(args):
    return args.precision or None


def cmd_futaki(args):
    cfg, data, w, extended = load_config(args.config)
    sol = solve_extremal(data, w, extended)
    ell_ext = AffineFn(sol.A, sol.B)
    ck = c_K(data, w, ell_ext, _max_prec(args))
    fut = futaki(data, w, args.ellz, ell_ext, _max_prec(args), strict=False)
    d0, d1 = double_root_defect(sol)
    out = {"A": fmt(sol.A), "B": fmt(sol.B),
           "cK": ck.to_json(), "futaki": fut.to_json(),
           "csc_type": csc_type(data, w, sol),
           "csc_rays": find_csc(data, w.b).to_json(),
           "double_root_defect": [fmt(d0), fmt(d1)]}
    if "z0" in cfg:
        out["df_indicator"] = fmt(df_indicator(data, w, to_rational(cfg["z0"]), extended))
    _emit(out)
    return EXIT_OK


def cmd_csc(args):
    _, data, w, _ = load_config(args.config)
    b = args.b if args.b is not None else w.b
    search = None
    if args.search:
        lo, hi = args.search.split(",")
        search = (to_rational(lo), to_rational(hi))
    res = find_csc(data, b, search)
    _emit({"b": fmt(b), "identically_zero": res.identically_zero,
           "csc_rays": res.to_json(), "method": res.method})
    return EXIT_OK


def cmd_scan(args):
    _, data, w, _ = load_config(args.config)
    b = args.b if args.b is not None else w.b
    if args.grid < 1:
        raise InputError("--grid must be at least 1")
    rows = scan(data, b, args.grid, args.jobs)
    emit_scan(rows, args.svg, args.csv)
    if not args.csv:
        write_csv(rows, sys.stdout)
    return EXIT_OK


def cmd_perturb(args):
    cfg, data, w, _ = load_config(args.config)
    try:
        v = Polynomial.from_strings(cfg.get("v", ["1"]))
        wt = Polynomial.from_strings(cfg.get("w", ["1"]))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad weight polynomial: {exc}") from exc
    sol = solve_weighted(data, v, wt)
    theta_t, w_t = perturbation_pair(data, v, wt, sol, args.t)
    _emit({"A": fmt(sol.A), "B": fmt(sol.B), "t": fmt(args.t),
           "G": sol.G.to_strings(), "theta_t": theta_t.to_json(), "w_t": w_t.to_json(),
           "identity": True})
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="extremal-sasaki", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--precision", type=int, default=None, metavar="BITS",
                   help="cap on certified-sign refinement (default 4096 or $SASAKI_MAX_PREC)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="extremal profile and affine function as JSON")
    s.add_argument("config")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("exists", help="existence verdict (exit 0 exists / 3 not)")
    s.add_argument("config")
    s.set_defaults(func=cmd_exists)

    s = sub.add_parser("futaki", help="c_K, Futaki invariant and CSC rays")
    s.add_argument("config")
    s.add_argument("--ellz", type=_affine_arg, default=AffineFn(1, 0), metavar="S,I")
    s.set_defaults(func=cmd_futaki)

    s = sub.add_parser("csc", help="CSC Reeb directions at fixed b")
    s.add_argument("config")
    s.add_argument("--b", type=_rational_arg, default=None)
    s.add_argument("--search", default=None, metavar="LO,HI")
    s.set_defaults(func=cmd_csc)

    s = sub.add_parser("scan", help="existence verdicts over a grid of a")
    s.add_argument("config")
    s.add_argument("--b", type=_rational_arg, default=None)
    s.add_argument("--grid", type=int, default=9)
    s.add_argument("--svg", default=None)
    s.add_argument("--csv", default=None)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("perturb", help="verify the weight perturbation identity")
    s.add_argument("config")
    s.add_argument("--t", type=_rational_arg, required=True)
    s.set_defaults(func=cmd_perturb)
    return p


def _fail(code, message):
    print(json.dumps({"error": message}), file=sys.stderr)
    return code


VALUE_FLAGS = ("--b", "--t", "--ellz", "--search")


def _glue_negative(argv):
    # argparse reads "-1/2" as a flag; bind it to the option that precedes it
    out = []
    for tok in argv:
        if out and out[-1] in VALUE_FLAGS and tok.startswith("-"):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv=None):
    parser = build_parser()
    argv = _glue_negative(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if args.precision is not None and args.precision < 53:
        return _fail(EXIT_INPUT, "--precision must be at least 53 bits")
    if args.precision is None and os.environ.get("SASAKI_MAX_PREC"):
        args.precision = int(os.environ["SASAKI_MAX_PREC"])
    try:
        return args.func(args)
    except (InputError, ValidationError) as exc:
        return _fail(EXIT_INPUT, str(exc))
    except ExtremalError as exc:
        return _fail(EXIT_SOLVER, f"{type(exc).__name__}: {exc}")


def main():
    sys.exit(run())
