"""Command-line front end.

Exit codes: 0 ok, 1 usage or malformed input, 2 verification failure,
3 resource ceiling.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import bounds, locality, oracle, reproduce
from .codespec import CodeSpecFile, SpecError
from .cyclic_code import CodeError, bch_bound, dual_defining_set
from .lrc_rs import RsLrcCode, OptimalCyclicParams, optimal_distance, rs_lrc_encode, optimal_cyclic_code
from .search import Constraints, SearchLimit, search

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CEILING = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(doc: dict[str, Any], args, text: str | None = None, rows: list[dict[str, Any]] | None = None) -> None:
    if getattr(args, "csv", False) and rows is not None:
        buf = io.StringIO()
        keys = list(rows[0]) if rows else []
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
        sys.stdout.write(buf.getvalue())
    elif getattr(args, "json", False) or text is None:
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


# ---------------------------------------------------------------------------
# construct

def _cmd_construct(args) -> int:
    if args.kind == "theorem1":
        p = OptimalCyclicParams(args.n, args.k, args.r, args.q, args.l, args.b, args.j)
        code = optimal_cyclic_code(p)
        spec = CodeSpecFile.from_code(code)
        doc = {"input": {"kind": "theorem1", "n": args.n, "k": args.k, "r": args.r, "q": args.q,
                         "l": args.l, "b": args.b, "j": p.j if p.j is not None else args.l},
               "spec": spec.to_dict(), "k": code.k, "target_distance": optimal_distance(args.n, args.k, args.r),
               "locality_zeros": sorted(p.locality_set()), "distance_zeros": sorted(p.distance_set()),
               "bch_lower": bch_bound(code).bound}
        if args.out:
            spec.save(args.out)
        text = (f"optimal cyclic code [n={code.n}, k={code.k}] over GF({args.q}); target d = {doc['target_distance']}\n"
                f"zeros: {sorted(code.zeros)}")
        _emit(doc, args, text)
        return EXIT_OK
    rs = RsLrcCode(args.q, args.n, args.k, args.r)
    doc = {"input": {"kind": "rs-lrc", "n": args.n, "k": args.k, "r": args.r, "q": args.q},
           "points": rs.points.tolist(), "partition": rs.partition(),
           "generator_matrix": rs.generator_matrix().tolist(), "target_distance": optimal_distance(args.n, args.k, args.r)}
    if args.message:
        a = [int(x) for x in args.message.split(",")]
        doc["input"]["message"] = a
        doc["codeword"] = rs_lrc_encode(rs, a).tolist()
    text = f"RS-LRC [n={args.n}, k={args.k}] over GF({args.q}), r={args.r}; local groups {rs.partition()}"
    if "codeword" in doc:
        text += f"\ncodeword: {doc['codeword']}"
    _emit(doc, args, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# analyze

def _read_spec(args) -> CodeSpecFile:
    if args.spec == "-" or (args.spec is None and args.path == "-"):
        return CodeSpecFile.loads(sys.stdin.read())
    path = args.spec or args.path
    if path is None:
        raise UsageError("give a spec file or --spec -")
    try:
        return CodeSpecFile.load(path)
    except OSError as exc:
        raise UsageError(str(exc)) from None


def analyze(spec: CodeSpecFile, certificates_only: bool = False, max_enum: int = oracle.DEFAULT_MAX_ENUM,
            threads: int = 1) -> dict[str, Any]:
    """Full report for one code; raises CertificateError or EnumerationCeiling."""
    code = spec.code()
    low = bch_bound(code)
    certs = locality.all_locality_certificates(code)
    dist = locality.distance_upper_bound(code)
    doc: dict[str, Any] = {
        "input": {"spec": spec.to_dict(), "certificates_only": certificates_only, "max_enum": max_enum},
        "n": code.n, "q": code.q, "k": code.k,
        "zeros": sorted(code.zeros),
        "generator_polynomial": list(code.generator_poly.coeffs),
        "bch_bound": {"bound": low.bound, "start": low.start, "stride": low.stride, "length": low.length},
        "dual_zeros": sorted(dual_defining_set(code)),
        "dual_representatives": code.dual().representatives(),
        "locator_field": {"p": code.locator.p, "m": code.locator.m},
        "locality_certificates": [c.to_dict() for c in certs],
        "best_certified_r": certs[0].bound_r if certs else None,
        "distance": dist.to_dict(),
    }
    if not certificates_only:
        rep = oracle.oracle_report(code, max_enum, threads).to_dict()
        rep.pop("runtime", None)  # keep reports byte-identical across runs
        doc["oracle"] = rep
    return doc


def _cmd_analyze(args) -> int:
    spec = _read_spec(args)
    try:
        doc = analyze(spec, args.certificates_only, args.max_enum, args.threads)
    except locality.CertificateError as exc:
        print(f"certificate verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except oracle.EnumerationCeiling as exc:
        print(f"{exc}; rerun with --certificates-only or a larger --max-enum", file=sys.stderr)
        return EXIT_CEILING
    ups = doc["distance"]["upper"]
    lines = [f"[{doc['n']}, {doc['k']}] cyclic code over GF({doc['q']})",
             f"BCH bound: d >= {doc['bch_bound']['bound']}",
             f"distance upper bound: d <= {ups[0]['bound'] if ups else doc['n']}",
             f"best certified locality: r <= {doc['best_certified_r']}"]
    if "oracle" in doc:
        o = doc["oracle"]
        lines.append(f"oracle: d = {o['d_min']}, d_dual = {o['d_dual']}, r = {o['r_exact']}")
    _emit(doc, args, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# bound, verify, search

def _cmd_bound(args) -> int:
    reps = bounds.all_bounds(args.n, args.d, args.r, args.q, args.which)
    rows = [r.to_dict() for r in reps]
    doc = {"input": {"n": args.n, "d": args.d, "r": args.r, "q": args.q, "which": args.which}, "bounds": rows}
    text = "\n".join(f"{r.name}: k <= {r.k_bound}" + (f" (log2 size {r.log2_size:.4f})" if r.size is not None else "")
                     for r in reps)
    flat = [{"name": r["name"], "n": r["n"], "d": r["d"], "r": r["r"], "q": r["q"], "k_bound": r["k_bound"],
             "log2_size": r.get("log2_size")} for r in rows]
    _emit(doc, args, text, flat)
    return EXIT_OK


def _cmd_verify(args) -> int:
    groups = args.groups.split(",") if args.groups else None
    if groups:
        bad = [g for g in groups if g not in reproduce.GROUPS]
        if bad:
            raise UsageError(f"unknown groups {bad}; choose from {list(reproduce.GROUPS)}")
    checks, _timing = reproduce.run_all(args.max_enum, args.threads, groups)
    failed = [c for c in checks if c.status == reproduce.FAIL]
    rows = [c.to_dict() for c in checks]
    doc = {"input": {"groups": groups or list(reproduce.GROUPS)}, "checks": rows,
           "summary": {s: sum(1 for c in checks if c.status == s)
                       for s in (reproduce.PASS, reproduce.FAIL, reproduce.DIVERGE, reproduce.INFO)}}
    _emit(doc, args, reproduce.format_table(checks), rows)
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_search(args) -> int:
    cons = Constraints(args.k_min, args.k_max, args.r_max, args.d_min, args.disjoint_min)
    try:
        res = search(args.n, args.q, cons, args.limit, max_subsets=args.max_subsets)
    except SearchLimit as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CEILING
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [c.to_dict() for c in res]
    doc = {"input": {"n": args.n, "q": args.q, **{k: v for k, v in vars(cons).items()}, "limit": args.limit},
           "results": rows}
    text = "\n".join(f"zeros={c.representatives} k={c.k} r={c.r}{'' if c.r_exact else ' (certified)'} "
                     f"d>={c.d_lower} disjoint={c.disjoint}" for c in res) or "no codes found"
    _emit(doc, args, text, rows)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON document")
    common.add_argument("--csv", action="store_true", help="print tabular output as CSV")
    common.add_argument("--max-enum", type=int, default=oracle.DEFAULT_MAX_ENUM, help="enumeration ceiling")
    common.add_argument("--threads", type=int, default=1, help="worker threads for enumeration")

    p = _Parser(prog="cyclic-lrc", description="Cyclic locally recoverable codes: construction and analysis.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="build an optimal cyclic LRC or an RS-LRC evaluation code")
    c.add_argument("kind", choices=["theorem1", "rs-lrc"])
    for name in ("n", "k", "r", "q"):
        c.add_argument(f"--{name}", type=int, required=True)
    c.add_argument("--l", type=int, default=1, help="residue class of the locality zeros")
    c.add_argument("--b", type=int, default=1, help="stride of the distance zeros")
    c.add_argument("--j", type=int, default=None, help="first distance zero (default l)")
    c.add_argument("--message", help="comma-separated message to encode (rs-lrc)")
    c.add_argument("--out", help="write the code spec JSON here (theorem1)")
    c.set_defaults(func=_cmd_construct)

    a = sub.add_parser("analyze", parents=[common], help="analyze a code spec")
    a.add_argument("path", nargs="?", help="spec file ('-' for standard input)")
    a.add_argument("--spec", help="spec file, or '-' for standard input")
    a.add_argument("--certificates-only", action="store_true", help="skip the enumeration oracle")
    a.set_defaults(func=_cmd_analyze)

    b = sub.add_parser("bound", parents=[common], help="upper bounds on k for given n, d, r, q")
    for name in ("n", "d", "r", "q"):
        b.add_argument(f"--{name}", type=int, required=True)
    b.add_argument("--which", choices=["sh", "lp", "singleton", "all"], default="all")
    b.set_defaults(func=_cmd_bound)

    v = sub.add_parser("verify", parents=[common], help="reproduce the reference values")
    v.add_argument("target", choices=["paper"])
    v.add_argument("--groups", help=f"comma-separated subset of {','.join(reproduce.GROUPS)}")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("search", parents=[common], help="search coset unions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--k-min", type=int, default=1)
    s.add_argument("--k-max", type=int)
    s.add_argument("--r-max", type=int)
    s.add_argument("--d-min", type=int)
    s.add_argument("--disjoint-min", type=int, help="least number of disjoint certified recovery sets")
    s.add_argument("--limit", type=int, default=20)
    s.add_argument("--max-subsets", type=int, default=2**16)
    s.set_defaults(func=_cmd_search)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help exits 0, parse errors exit EXIT_USAGE
        return int(exc.code or 0)
    if getattr(args, "threads", 1) < 1:
        print("--threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, SpecError, CodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except locality.CertificateError as exc:
        print(f"certificate verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (oracle.EnumerationCeiling, SearchLimit) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CEILING


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
