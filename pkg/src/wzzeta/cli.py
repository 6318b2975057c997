"""Command-line front end: ``wzzeta compute | verify | bench``.

Exit codes: 0 ok, 1 verification failure, 2 domain error, 3 convergence failure.
The default guard digit count can be set with ``WZZETA_GUARD``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional

from .contfrac import eval_cf_backward, zeta2_cf_spec, zeta3_cf_spec
from .dirichlet import CharacterSpec, l_minus8_series, l_value_result
from .errors import ConvergenceError, DomainError, PoleError
from .hurwitz import hurwitz_reference, hurwitz_series
from .numeric import (DEFAULT_GUARD, PrecisionContext, const_pi, const_sqrt,
                      format_digits, parse_rational)
from .series import plan_terms

EXIT_OK, EXIT_VERIFY, EXIT_DOMAIN, EXIT_CONVERGENCE = 0, 1, 2, 3

# The first method listed is the default; for L, "fast" and "decomposition"
# both mean the Hurwitz decomposition with the accelerated series.
TARGET_METHODS = {
    "zeta2": ("fast", "simple", "cf", "oracle"),
    "zeta3": ("fast", "simple", "cf", "oracle"),
    "zeta2cf": ("cf",),
    "zeta3cf": ("cf",),
    "L": ("fast", "decomposition", "simple", "fast-series"),
}
CF_BASE = {2: 64, 3: 1024}


@dataclass
class ComputeRequest:
    target: str
    digits: int
    method: Optional[str] = None
    a: Optional[str] = None
    discriminant: Optional[int] = None
    s: Optional[int] = None
    guard: int = DEFAULT_GUARD

    def validate(self):
        if self.target not in TARGET_METHODS:
            raise DomainError(f"unknown target {self.target!r}")
        if self.digits < 1:
            raise DomainError("digits must be >= 1")
        if self.method is None:
            self.method = TARGET_METHODS[self.target][0]
        if self.method not in TARGET_METHODS[self.target]:
            raise DomainError(f"method {self.method!r} not available for target {self.target}; "
                              f"choose from {', '.join(TARGET_METHODS[self.target])}")
        if self.target in ("zeta2", "zeta3"):
            if self.a is None:
                raise DomainError("--a is required for zeta2/zeta3")
            if not parse_rational(self.a) > 0:
                raise DomainError(f"need a > 0, got a={self.a}")
            if self.method == "cf" and parse_rational(self.a) != 1:
                raise DomainError("method cf only exists for a = 1")
        if self.target == "L":
            if self.discriminant is None or self.s not in (2, 3):
                raise DomainError("target L needs --disc and --s in {2, 3}")
            CharacterSpec(self.discriminant)
            if self.method == "fast-series" and (self.discriminant, self.s) != (-8, 2):
                raise DomainError("fast-series exists only for --disc -8 --s 2")
        return self


@dataclass
class RunReport:
    value_digits: str
    terms_used: int
    elapsed_ms: int
    method: str
    warnings: List[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


def _compute_cf(s: int, ctx: PrecisionContext):
    spec = zeta2_cf_spec() if s == 2 else zeta3_cf_spec()
    depth = plan_terms(ctx.digits, CF_BASE[s])
    return eval_cf_backward(spec, depth, ctx), depth, []


def _compute_value(req: ComputeRequest, ctx: PrecisionContext):
    if req.target in ("zeta2cf", "zeta3cf"):
        return _compute_cf(2 if req.target == "zeta2cf" else 3, ctx)
    if req.target in ("zeta2", "zeta3"):
        s = 2 if req.target == "zeta2" else 3
        a = parse_rational(req.a)
        if req.method == "oracle":
            return hurwitz_reference(s, a, ctx), 0, []
        if req.method == "cf":
            return _compute_cf(s, ctx)
        res = hurwitz_series(s, a, ctx, req.method)
        return res.value, res.terms_used, res.warnings
    if req.method == "fast-series":
        res = l_minus8_series(ctx)
        value = const_sqrt(2, ctx) * const_pi(ctx) ** 2 / 16 + res.value
        return value, res.terms_used, res.warnings
    method = "simple" if req.method == "simple" else "fast"
    value, terms = l_value_result(CharacterSpec(req.discriminant), req.s, ctx, method)
    return value, terms, []


def cmd_compute(req: ComputeRequest) -> RunReport:
    req.validate()
    ctx = PrecisionContext(req.digits, req.guard)
    start = time.perf_counter()
    value, terms, warnings = _compute_value(req, ctx)
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return RunReport(format_digits(value, req.digits), terms, elapsed, req.method, list(warnings))


def cmd_verify(suite: str, out=None) -> int:
    from . import suites
    out = sys.stdout if out is None else out
    checks = suites.SUITES[suite]()
    failed = None
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name:<45} {detail}", file=out)
        if not ok and failed is None:
            failed = name
    if failed is not None:
        print(f"first failing invariant: {failed}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_bench(target: str, digits_list, a: str = "1/5", guard: int = DEFAULT_GUARD):
    """Rows of ``(digits, terms, elapsed_ms)`` for zeta(s, a) by the fast series."""
    s = {"zeta2": 2, "zeta3": 3}[target]
    rows = []
    for digits in digits_list:
        ctx = PrecisionContext(digits, guard)
        start = time.perf_counter()
        res = hurwitz_series(s, parse_rational(a), ctx, "fast")
        rows.append((digits, res.terms_used, int(round((time.perf_counter() - start) * 1000))))
    return rows


def _default_guard() -> int:
    raw = os.environ.get("WZZETA_GUARD")
    return int(raw) if raw else DEFAULT_GUARD


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wzzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute a constant to the requested digits")
    c.add_argument("--target", required=True, choices=sorted(TARGET_METHODS))
    c.add_argument("--a", help="Hurwitz argument a as p/q (zeta2, zeta3)")
    c.add_argument("--x-offset", dest="x_offset",
                   help="give x = a - 1 instead of a (e.g. -4/5 for a = 1/5)")
    c.add_argument("--disc", type=int, help="fundamental discriminant (target L)")
    c.add_argument("--s", type=int, help="2 or 3 (target L)")
    c.add_argument("--digits", type=int, required=True)
    c.add_argument("--method")
    c.add_argument("--json", action="store_true", help="emit the run report as one JSON object")
    c.add_argument("--guard", type=int, default=None)

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("--suite", required=True, choices=["wz", "closed-forms", "cross-method", "cf"])

    b = sub.add_parser("bench", help="time the fast series for several digit counts")
    b.add_argument("--target", required=True, choices=["zeta2", "zeta3"])
    b.add_argument("--digits", type=int, nargs="*", default=[])
    b.add_argument("--a", default="1/5")
    b.add_argument("--guard", type=int, default=None)
    return parser


_VALUE_FLAGS = ("--a", "--x-offset", "--disc")


def _join_negative_values(argv):
    # argparse treats "-4/5" as an option; rewrite "--a -4/5" as "--a=-4/5".
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_negative_values(argv))
    guard = getattr(args, "guard", None)
    guard = _default_guard() if guard is None else guard
    try:
        if args.command == "compute":
            a = args.a
            if args.x_offset is not None:
                if a is not None:
                    raise DomainError("give either --a or --x-offset, not both")
                a = str(parse_rational(args.x_offset) + 1)
            req = ComputeRequest(target=args.target, digits=args.digits, method=args.method,
                                 a=a, discriminant=args.disc, s=args.s, guard=guard)
            report = cmd_compute(req)
            if args.json:
                print(report.to_json())
            else:
                print(report.value_digits)
                for w in report.warnings:
                    print(f"warning: {w}", file=sys.stderr)
            return EXIT_OK
        if args.command == "verify":
            return cmd_verify(args.suite)
        rows = cmd_bench(args.target, args.digits, args.a, guard)
        label = f"{args.target}({args.a})"
        print(f"{'digits':>8} {'terms':>8} {'elapsed_ms':>12}   {label}")
        for digits, terms, ms in rows:
            print(f"{digits:>8} {terms:>8} {ms:>12}")
        return EXIT_OK
    except (DomainError, ValueError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ConvergenceError, PoleError) as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
