"""Command-line front end.

Exit codes: 0 when every check passes, 1 when at least one fails (the
report is still written), 2 on bad input or parameters.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import __version__, bounds, gen
from ._accel import backend, thread_count
from .classify import PROPS, boundary_squared_zero, classify, betti_numbers, check_prime
from .core import dehn_sommerville_check, f_vector
from .errors import ClassError, FlagcombError, ParameterError
from .flag import Graph, complexes_isomorphic, one_skeleton
from .formats import format_g, load_complex, write_sc
from .report import Report, jsonable

FAMILIES = ("cycle", "jmn", "jstar", "gal3", "nonjoin5", "crosspoly")
CHECKS = ("codim2", "akformula", "eq1", "vertexsum", "linkineq", "gamma", "ds", "ns")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _csv_list(choices):
    def parse(text: str) -> list[str]:
        items = [t.strip() for t in text.split(",") if t.strip()]
        bad = [t for t in items if t not in choices]
        if bad:
            raise argparse.ArgumentTypeError(f"unknown item(s) {bad}; choose from {','.join(choices)}")
        return items
    return parse


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="flagcomb", description="Flag complex construction, classification and bound checks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=("json", "csv"), default="json")
    out.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")
    out.add_argument("--no-header", action="store_true", help="omit the timestamped header")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a named complex")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--out", required=True, help=".sc for facets, .g for the 1-skeleton")

    f = sub.add_parser("fvec", help="print the f-vector")
    f.add_argument("path")

    c = sub.add_parser("check", parents=[out], help="classify a complex")
    c.add_argument("path")
    c.add_argument("--props", type=_csv_list(PROPS), default=list(PROPS))
    c.add_argument("--field", type=int, default=2)

    v = sub.add_parser("verify", parents=[out], help="run identity checks")
    v.add_argument("path")
    v.add_argument("--checks", type=_csv_list(CHECKS), default=None,
                   help="default: every check that applies to the dimension")
    v.add_argument("--field", type=int, default=2)

    b = sub.add_parser("bounds", parents=[out], help="compare against the extremal construction")
    b.add_argument("path")
    b.add_argument("--m", type=int)
    b.add_argument("--b", type=_rational, default=None)
    b.add_argument("--field", type=int, default=2)

    e = sub.add_parser("extremal", parents=[out], help="join detection and isomorphism to J_m(n)")
    e.add_argument("path")

    k = sub.add_parser("corpus", parents=[out], help="build, write and check the corpus")
    k.add_argument("--max-n", type=int, default=18)
    k.add_argument("--out", required=True)
    k.add_argument("--no-verify", action="store_true", help="only write the files")
    return p


# ---------------------------------------------------------------------------

def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ParameterError(f"family {args.family} needs {' '.join(missing)}")


def generate(args):
    fam = args.family
    if fam == "cycle":
        _need(args, "n")
        return gen.cycle(args.n)
    if fam == "jmn":
        _need(args, "m", "n")
        return gen.j_m_n(args.m, args.n)
    if fam == "jstar":
        _need(args, "m", "n")
        return gen.j_star(args.m, args.n)
    if fam == "gal3":
        _need(args, "n")
        return gen.gal_gamma(args.n)
    if fam == "nonjoin5":
        _need(args, "n", "k")
        return gen.nonjoin_5manifold(args.n, args.k)
    _need(args, "m")
    return gen.cross_polytope(args.m)


def _guard(name: str, fn, *a) -> Report:
    """Run a check; a failed precondition becomes a failing report naming it."""
    try:
        return fn(*a)
    except ClassError as exc:
        return Report(name, False, notes=[f"precondition failed ({exc.check}): {exc}"])


def default_checks(c) -> list[str]:
    if c.dim == 3:
        return ["codim2", "akformula", "eq1", "vertexsum", "linkineq", "ds", "ns"]
    if c.dim == 5:
        return ["codim2", "akformula", "eq1", "vertexsum", "linkineq", "gamma", "ds"]
    if c.dim % 2 == 1:
        return ["codim2", "akformula", "eq1", "vertexsum", "ds"]
    return ["codim2", "ds"]


def verify_reports(c, checks, p: int = 2) -> list[Report]:
    runners = {
        "codim2": lambda: bounds.codim2_identity_check(c),
        "akformula": lambda: bounds.a_k_formula_check(c),
        "eq1": lambda: bounds.eq1_check(c),
        "vertexsum": lambda: bounds.vertex_link_sum_check(c),
        "linkineq": lambda: bounds.link_inequality_check(c),
        "gamma": lambda: bounds.gamma_inequality_check(c),
        "ds": lambda: dehn_sommerville_check(f_vector(c)),
        "ns": lambda: bounds.three_manifold_bound_check(c, p),
    }
    return [_guard(name, runners[name]) for name in checks]


def bounds_reports(c, m=None, b=None, p: int = 2) -> list[Report]:
    out = [_guard("ubt", bounds.ubt_check, c, m)]
    if c.dim == 3:
        out.append(_guard("three_manifold_bound", bounds.three_manifold_bound_check, c, p))
    out.append(_guard("vertex_link_sum", bounds.vertex_link_sum_check, c))
    out.append(_guard("m_sigma", bounds.m_sigma_check, c))
    if b is not None:
        out.append(_guard("near_extremal", bounds.near_extremal_check, c, b))
    return out


def extremal_reports(c) -> list[Report]:
    try:
        rep = bounds.join_report(c)
    except ClassError as exc:
        return [Report("join_detect", False, notes=[f"precondition failed ({exc.check}): {exc}"])]
    out = [rep]
    try:
        m = bounds.infer_m(c)
        ref = gen.j_m_n(m, c.n)
    except (ClassError, ParameterError) as exc:
        out.append(Report("isomorphic_to_reference", False, notes=[str(exc)]))
        return out
    iso = complexes_isomorphic(c, ref)
    out.append(Report("isomorphic_to_reference", iso, lhs=list(f_vector(c)), rhs=list(f_vector(ref)),
                      equality=iso, notes=[f"reference J_{m}({c.n})"]))
    return out


def class_reports(c, props, p: int) -> list[Report]:
    cr = classify(c, p, props)
    return [cr.reports[t] for t in PROPS if t in cr.reports]


def _corpus_job(entry):
    """Classify one corpus entry and run the checks that apply; picklable."""
    c = entry.complex
    holds = classify(c).holds()
    reps = [Report("classification", holds == set(entry.expected_class),
                   lhs=sorted(holds), rhs=sorted(entry.expected_class),
                   equality=holds == set(entry.expected_class))]
    if "flag" in holds and "pseudo" in holds and c.dim in (3, 5):
        reps += verify_reports(c, default_checks(c))
        reps += bounds_reports(c)
    reps.append(boundary_squared_zero(c))
    for p in (2, 3):
        b = betti_numbers(c, p)
        chi_b = sum((-1) ** i * x for i, x in enumerate(b))
        chi_f = sum((-1) ** i * x for i, x in enumerate(f_vector(c)[1:]))
        reps.append(Report(f"euler_poincare_gf{p}", chi_b == chi_f, lhs=chi_b, rhs=chi_f,
                           equality=chi_b == chi_f, data={"betti": list(b)}))
    return entry.name, reps


# ---------------------------------------------------------------------------

def _emit(args, command: str, groups: list[tuple[str, list[Report]]], out) -> int:
    ok = all(r.passed for _, reps in groups for r in reps)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["complex", "check", "status", "lhs", "rhs", "equality"])
        for name, reps in groups:
            for r in reps:
                d = r.to_dict()
                w.writerow([name, d["check"], d["status"], json.dumps(d["lhs"]),
                            json.dumps(d["rhs"]), d["equality"]])
        text = buf.getvalue()
    else:
        payload = {}
        if not args.no_header:
            payload["header"] = {
                "tool": "flagcomb", "version": __version__, "backend": backend(),
                "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            }
        payload["command"] = command
        payload["status"] = "pass" if ok else "fail"
        payload["results"] = [{"complex": name, "reports": [r.to_dict() for r in reps]}
                              for name, reps in groups]
        text = json.dumps(jsonable(payload), indent=2, sort_keys=False) + "\n"
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return 0 if ok else 1


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = _dispatch(args, out)
        for w in caught:
            print(f"warning: {w.message}", file=err)
        return code
    except (FlagcombError, OSError) as exc:
        print(f"flagcomb: error: {exc}", file=err)
        return 2


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "gen":
        c = generate(args)
        path = Path(args.out)
        if path.suffix == ".g":
            path.write_text(format_g(one_skeleton(c)), encoding="utf-8")
        else:
            write_sc(c, path, comment=f"{args.family} m={args.m} n={args.n} k={args.k}")
        return 0
    if cmd == "fvec":
        print(" ".join(str(x) for x in f_vector(load_complex(args.path))), file=out)
        return 0
    if cmd == "corpus":
        entries = gen.build_corpus(args.max_n)
        gen.write_corpus(entries, args.out)
        if args.no_verify:
            return 0
        workers = min(thread_count(), len(entries))
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                groups = list(pool.map(_corpus_job, entries))
        else:
            groups = [_corpus_job(e) for e in entries]
        return _emit(args, cmd, groups, out)

    c = load_complex(args.path)
    name = Path(args.path).stem
    if cmd == "check":
        reps = class_reports(c, args.props, check_prime(args.field))
    elif cmd == "verify":
        p = check_prime(args.field)
        reps = verify_reports(c, args.checks or default_checks(c), p)
    elif cmd == "bounds":
        reps = bounds_reports(c, args.m, args.b, check_prime(args.field))
    else:
        reps = extremal_reports(c)
    return _emit(args, cmd, [(name, reps)], out)


def main() -> None:
    sys.exit(run())
