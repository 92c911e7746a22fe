"""Command-line interface.

Exit codes: 0 success, 1 a verified identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .fmethod import (FamilyTag, MChar, build_operator, build_verma_hom, classify,
                      fsystem_solve, run_suite)
from .fmethod.factorization import admissible_cases, verify_factorization
from .fmethod.params import ParamError
from .fmethod.suites import SuiteCheck
from .ring import ParamPoly, RingError, format_rational, ppoly

FAMILIES = ("id", "a1", "a2", "bplus", "bminus", "c")


class UsageError(Exception):
    pass


# -- flag parsing --------------------------------------------------------------

def _poly(text: str, what: str) -> ParamPoly:
    try:
        return ppoly(text.strip())
    except (RingError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{what}: cannot parse {text!r} ({exc})") from None


def _pair(text: Optional[str], what: str):
    if text is None:
        raise UsageError(f"--{what} is required")
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--{what} needs two comma-separated values, got {text!r}")
    return tuple(_poly(p, f"--{what}") for p in parts)


def _rational_pair(text: Optional[str], what: str):
    pair = _pair(text, what)
    if not all(p.is_constant() for p in pair):
        raise UsageError(f"--{what} must be rational (p/q), got {text!r}")
    return tuple(p.constant_value() for p in pair)


def _mchar(text: Optional[str], what: str) -> MChar:
    if text is None:
        return MChar(1, 1)
    try:
        return MChar.parse(text)
    except ParamError as exc:
        raise UsageError(f"--{what}: {exc}") from None


def _tag_from_args(args) -> FamilyTag:
    fam = args.family
    if fam is None:
        raise UsageError("--family is required")
    lam = _pair(args.lam, "lambda") if args.lam else None
    try:
        if fam == "id":
            return FamilyTag.identity(lam)
        if args.k is None:
            raise UsageError(f"--k is required for family {fam}")
        if fam == "a1":
            return FamilyTag.a1(args.k, lam[1] if lam else None)
        if fam == "a2":
            return FamilyTag.a2(args.k, lam[0] if lam else None)
        if fam in ("bplus", "bminus"):
            if args.l is None:
                raise UsageError(f"--l is required for family {fam}")
            return (FamilyTag.bplus if fam == "bplus" else FamilyTag.bminus)(args.k, args.l)
        return FamilyTag.c(args.k, _poly(args.s if args.s is not None else "s", "--s"))
    except ParamError as exc:
        raise UsageError(str(exc)) from None


def _fmt_pair(pair) -> str:
    return ", ".join(str(ppoly(x)) for x in pair)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


# -- commands ------------------------------------------------------------------

def cmd_classify(args) -> int:
    eps, delta = _mchar(args.eps, "eps"), _mchar(args.delta, "delta")
    lam = _rational_pair(args.lam, "lambda")
    nu = _rational_pair(args.nu, "nu")
    tags = classify(eps, delta, lam, nu)
    dim = 1 if tags else 0
    if args.format == "json":
        _emit({"families": [t.to_json() for t in tags], "dim": dim})
    else:
        print(f"dim: {dim}")
        print("families: " + (", ".join(t.label() for t in tags) if tags else "none"))
    return 0


def cmd_solve(args) -> int:
    if args.k is None or args.l is None:
        raise UsageError("solve needs --k and --l")
    if args.k < 0 or args.l < 0:
        raise UsageError("--k and --l must be nonnegative")
    lam = _rational_pair(args.lam, "lambda")
    dim, gen = fsystem_solve(args.k, args.l, lam)
    if args.format == "json":
        _emit({"k": args.k, "l": args.l, "lambda": [format_rational(x) for x in lam],
               "dim": dim, "p": None if gen is None else gen.to_strings()})
    else:
        print(f"dim: {dim}")
        if gen is not None:
            print(f"p(t) = {gen}")
    return 0


def cmd_operator(args) -> int:
    tag = _tag_from_args(args)
    op = build_operator(tag)
    if args.format == "json":
        _emit(op.to_json())
    elif args.format == "latex":
        print(op.to_latex())
    else:
        print(op)
    return 0


def cmd_hom(args) -> int:
    tag = _tag_from_args(args)
    eps = _mchar(args.eps, "eps")
    hom = build_verma_hom(tag, eps)
    singular = hom.is_singular()
    if args.format == "json":
        _emit({"family": tag.to_json(), "eps": str(eps), "delta": str(hom.delta),
               "lambda": [str(x) for x in hom.lam], "nu": [str(x) for x in hom.nu],
               "vector": hom.body.to_json(), "singular": singular})
    elif args.format == "latex":
        print(hom.body.to_latex() + r" \otimes \mathbb{1}")
    else:
        print(f"{hom.label}: ({hom.delta}; {_fmt_pair(hom.nu)}) -> ({eps}; {_fmt_pair(hom.lam)})")
        print(f"vector: {hom.body}")
        print(f"singular: {'yes' if singular else 'no'}")
    return 0 if singular else 1


def _verify_report(name: str, checks) -> dict:
    failed = [c for c in checks if not c.ok]
    return {"suite": name, "passed": len(checks) - len(failed), "failed": len(failed),
            "checks": [c.to_json() for c in checks]}


def cmd_verify(args) -> int:
    if args.max_k is not None and args.max_k < 1 or args.max_l is not None and args.max_l < 1:
        raise UsageError("--max-k and --max-l must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    checks = run_suite(args.suite, args.max_k, args.max_l, args.jobs)
    report = _verify_report(args.suite, checks)
    if args.format == "text":
        for c in checks:
            print(f"{'PASS' if c.ok else 'FAIL'} [{c.suite}] {c.name}")
        print(f"{report['passed']} passed, {report['failed']} failed")
    else:
        _emit(report)
    for c in checks:
        if not c.ok:
            print(f"FAIL [{c.suite}] {c.name} {c.detail}".rstrip(), file=sys.stderr)
    return 1 if report["failed"] else 0


def cmd_selftest(args) -> int:
    checks = run_suite("symbols", 2, 2) + run_suite("special", 6, 6)
    for case, k, l in admissible_cases(3, 3):
        rep = verify_factorization(case, k, l)
        checks.append(SuiteCheck("factorizations", f"case {case} (k,l)=({k},{l})", rep.ok))
    failed = [c for c in checks if not c.ok]
    for c in failed:
        print(f"FAIL [{c.suite}] {c.name}")
    print(f"selftest: {len(checks) - len(failed)} passed, {len(failed)} failed")
    return 1 if failed else 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sl3fmethod",
        description="Intertwining differential operators for SL(3,R) by the F-method.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("text", "latex", "json"), default="text"):
        sp.add_argument("--format", choices=choices, default=default)

    c = sub.add_parser("classify", help="families of operators between two induced representations")
    c.add_argument("--eps", help="M-character on the lambda side, e.g. +,-")
    c.add_argument("--delta", help="M-character on the nu side")
    c.add_argument("--lambda", dest="lam", help="lambda as p/q,p/q")
    c.add_argument("--nu", help="nu as p/q,p/q")
    fmt(c, ("text", "json"))
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("solve", help="solve the F-system on Pol(k,l) at rational lambda")
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--lambda", dest="lam")
    fmt(s, ("text", "json"))
    s.set_defaults(func=cmd_solve)

    for name, func, helptext in (("operator", cmd_operator, "differential operator of a family"),
                                 ("hom", cmd_hom, "singular vector / Verma module homomorphism")):
        o = sub.add_parser(name, help=helptext)
        o.add_argument("--family", choices=FAMILIES)
        o.add_argument("--k", type=int)
        o.add_argument("--l", type=int)
        o.add_argument("--s", help="C-family parameter: 's' or a rational")
        o.add_argument("--lambda", dest="lam", help="free lambda components for id/a1/a2")
        if name == "hom":
            o.add_argument("--eps", help="character of the target, default +,+")
        fmt(o)
        o.set_defaults(func=func)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all",
                   choices=("symbols", "fsystem", "singular", "factorizations", "special", "all"))
    v.add_argument("--max-k", type=int)
    v.add_argument("--max-l", type=int)
    v.add_argument("--jobs", type=int, default=1)
    fmt(v, ("text", "json"), default="json")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("selftest", help="quick consistency run")
    t.set_defaults(func=cmd_selftest)
    return p


_VALUE_FLAGS = ("--eps", "--delta", "--lambda", "--nu", "--s")


def _glue_values(argv: Sequence[str]) -> List[str]:
    # "--delta -,-" or "--lambda -1,2": argparse would read the value as a flag
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
