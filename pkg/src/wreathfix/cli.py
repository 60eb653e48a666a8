"""Command-line interface.

Subcommands: basis, verify, identities, reduce, mul.  Output is a
deterministic table by default; --format json emits the documented
schemas, --format csv emits degree,dim rows for series.  Exit codes:
0 success / all checks pass, 1 verification inequality, 2 usage or parse
error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
import time
from fractions import Fraction

from .betti import verify_hikita
from .coeffs import between, check_lemma2, check_lemma3, check_multinomial
from .fixedring import hilbert_series, truncate
from .oracle import OracleCapExceeded
from .partitions import RTuple, enumerate_fixed_basis, rtuple_degree
from .quotient import mul_gen_fixed, reduce_mod_J
from .symfun import SymElement, TriPartition

USAGE_ERROR = 2
CAP_ERROR = 3


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_tripartition(text: str, r: int) -> TriPartition:
    """Grammar: m[(a,b,c)(a,b,c)...]; whitespace-free."""
    if not text.startswith("m["):
        raise ParseError("expected 'm['", 0)
    if not text.endswith("]"):
        raise ParseError("expected closing ']'", len(text) - 1)
    body = text[2:-1]
    pos = 2
    triples = []
    pattern = re.compile(r"\((\d+),(\d+),(\d+)\)")
    while body:
        m = pattern.match(body)
        if not m:
            raise ParseError("expected '(a,b,c)'", pos)
        triples.append((int(m.group(1)), int(m.group(2)), int(m.group(3))))
        pos += m.end()
        body = body[m.end():]
    try:
        return TriPartition.from_triples(r, triples)
    except ValueError as exc:
        raise ParseError(str(exc), 2) from exc


def parse_rtuple(text: str, r: int) -> RTuple:
    """Grammar: [p0|p1|...|p{r-1}], components comma-separated part sizes.

    Zero parts are only legal past the first bar.
    """
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError("expected '[...]'", 0)
    comps = text[1:-1].split("|")
    if len(comps) != r:
        raise ParseError(f"expected {r} components separated by '|', got {len(comps)}", 1)
    parts: dict[int, list[int]] = {}
    pos = 1
    for i, comp in enumerate(comps):
        if comp:
            for tok in comp.split(","):
                if not tok.isdigit():
                    raise ParseError(f"bad part {tok!r}", pos)
                parts.setdefault(i, []).append(int(tok))
                pos += len(tok) + 1
        pos += 1
    try:
        return RTuple.from_parts(r, parts)
    except ValueError as exc:
        raise ParseError(str(exc), 1) from exc


def _series_json(r: int, n: int, dims: dict[int, int], source: str) -> dict:
    return {
        "r": r,
        "n": n,
        "series": [[d, dims[d]] for d in sorted(dims)],
        "source": source,
    }


def _report_json(command: str, params: dict, checks: list[tuple[str, str]], payload: dict,
                 wall_time: float) -> dict:
    return {
        "command": command,
        "params": params,
        "checks": [{"name": name, "verdict": verdict} for name, verdict in checks],
        "payload": payload,
        "meta": {"wall_time_s": round(wall_time, 6)},
    }


def _emit(obj, fmt: str, table_lines) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in table_lines:
            print(line)


def cmd_basis(args) -> int:
    basis = enumerate_fixed_basis(args.r, args.n)
    if args.max_degree is not None:
        basis = [lam for lam in basis if rtuple_degree(lam) <= args.max_degree]
    if args.format == "csv":
        print("degree,index")
        for lam in basis:
            print(f"{rtuple_degree(lam)},{lam}")
        return 0
    payload = {"basis": [[rtuple_degree(lam), str(lam)] for lam in basis],
               "count": len(basis)}
    obj = _report_json("basis", {"r": args.r, "n": args.n}, [], payload, 0.0)
    _emit(obj, args.format, [f"{rtuple_degree(lam):4d}  {lam}" for lam in basis]
          + [f"total {len(basis)}"])
    return 0


def cmd_verify(args) -> int:
    t0 = time.time()
    report = verify_hikita(args.r, args.n, args.max_degree and args.max_degree // 2,
                           with_oracle=args.with_oracle, cap=args.cap_monomials)
    wall = time.time() - t0
    if args.format == "csv":
        for source, dims in sorted(report.series.items()):
            for d in sorted(dims):
                print(f"{source},{d},{dims[d]}")
    else:
        payload = {source: _series_json(args.r, args.n, dims, source)
                   for source, dims in report.series.items()}
        obj = _report_json("verify", {"r": args.r, "n": args.n, "k_max": report.k_max},
                           report.checks, payload, wall)
        lines = []
        for source, dims in sorted(report.series.items()):
            lines.append(f"{source}: " + " ".join(f"t^{d}:{dims[d]}" for d in sorted(dims)))
        lines += [f"{name}: {verdict}" for name, verdict in report.checks]
        _emit(obj, args.format, lines)
    return 0 if report.all_equal else 1


def cmd_identities(args) -> int:
    t0 = time.time()
    counts = {"lemma2": 0, "lemma3": 0, "multinomial": 0}
    failures = 0
    for r in range(1, args.r_max + 1):
        shapes = [t for t in enumerate_fixed_basis(r, 2 * args.size_max)
                  if t.size <= args.size_max]
        for nu in shapes:
            for mu in between(RTuple.empty(r), nu):
                xmin = nu.size + max(0, nu.length - mu.length - 1)
                for x in range(xmin, args.x_max + 1):
                    counts["lemma2"] += 1
                    failures += not check_lemma2(mu, nu, x)
        for lam in shapes:
            for mu in between(RTuple.empty(r), lam):
                for k in range(lam.length - mu.length, args.x_max + 1):
                    counts["lemma3"] += 1
                    failures += not check_lemma3(lam, mu, k)
    for size in range(1, args.entries_max + 1):
        for entries in itertools.product(range(args.entry_cap + 1), repeat=size):
            if not any(entries):
                continue
            counts["multinomial"] += 1
            failures += not check_multinomial({i: e for i, e in enumerate(entries)})
    wall = time.time() - t0
    checks = [(name, "pass" if failures == 0 else "fail") for name in sorted(counts)]
    obj = _report_json("identities",
                       {"r_max": args.r_max, "size_max": args.size_max, "x_max": args.x_max},
                       checks, {"counts": counts, "failures": failures}, wall)
    _emit(obj, args.format,
          [f"{name}: {counts[name]} instances" for name in sorted(counts)]
          + [f"failures: {failures}"])
    return 0 if failures == 0 else 1


def cmd_reduce(args) -> int:
    lam = parse_tripartition(args.expression, args.r)
    result = reduce_mod_J(SymElement.monomial(lam))
    payload = {"coordinates": sorted(
        ([str(k), str(v)] for k, v in result.terms.items())),
        "zero": result.is_zero()}
    obj = _report_json("reduce", {"r": args.r, "expression": args.expression}, [], payload, 0.0)
    _emit(obj, args.format, [str(result)])
    return 0


def cmd_mul(args) -> int:
    lam = parse_rtuple(args.index, args.r)
    product = mul_gen_fixed(args.a, args.c, lam)
    if args.n is not None:
        product = truncate(product, args.n).element
    payload = {"coordinates": sorted(
        ([str(k), str(v)] for k, v in product.terms.items())),
        "zero": product.is_zero()}
    obj = _report_json("mul", {"r": args.r, "n": args.n, "a": args.a, "c": args.c,
                               "index": args.index}, [], payload, 0.0)
    _emit(obj, args.format, [str(product)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wreathfix",
                                     description="exact fixed-ring computations")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        p.add_argument("--r", type=int, required=True)
        if need_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--cap-monomials", type=int, default=None)

    p = sub.add_parser("basis", help="canonical basis with degrees")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", help="fixed-ring series against Betti series")
    common(p)
    p.add_argument("--with-oracle", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", help="exhaustive identity checks")
    p.add_argument("--r-max", type=int, default=2)
    p.add_argument("--size-max", type=int, default=3)
    p.add_argument("--x-max", type=int, default=8)
    p.add_argument("--entries-max", type=int, default=4)
    p.add_argument("--entry-cap", type=int, default=4)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("reduce", help="canonical coordinates of m[...]")
    p.add_argument("expression")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("mul", help="generator times basis vector, truncated")
    p.add_argument("index")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_mul)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OracleCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return CAP_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
