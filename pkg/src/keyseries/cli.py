"""Command line surface: polynomials, set listings, verification, scans.

Exit codes: 0 success, 1 mathematical counterexample or mismatch, 2 usage
error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .bseq import enum_A, format_seq
from .config import EngineConfig, ResourceCapError, load_config
from .counts import suite_fcoeff
from .multisets import enum_B, enum_C, format_multiset
from .mults import (
    SCANS,
    check_diff1,
    check_diff2,
    check_lketa23,
    check_lowbdr2,
    check_multsiw,
)
from .permutation import Permutation, parse_permutation
from .report import (
    canonical_json,
    checks_report,
    hash_file,
    make_manifest,
    outcome_report,
)
from .series import (
    key_by_composition,
    key_polynomial,
    lascoux_polynomial,
    numerator_P,
    suite_formofkw,
    suite_pxiw1,
)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_SUITE_DEFAULT_N = {
    "formofkw": 4,
    "diff1": 5,
    "diff2": 5,
    "lketa23": 6,
    "bounds": 5,
    "multsiw": 4,
    "pxiw1": 4,
    "fcoeff": 3,
}


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse {what} {text!r}") from None


def _parse_partition(text: str) -> tuple[int, ...]:
    lam = _parse_ints(text, "partition")
    if any(a < 0 for a in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam}")
    return lam


def _emit(args, text_lines: list[str], json_obj) -> None:
    if args.format == "json":
        payload = canonical_json(json_obj)
        sys.stdout.write(payload)
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(json_obj))


def _input_hashes(args) -> dict:
    return {"config": hash_file(args.config)} if args.config else {}


def _write_manifest(args, command: str, params: dict, summary: dict, status: int) -> None:
    if not args.out:
        return
    manifest = make_manifest(
        command=command,
        params=params,
        version=__version__,
        input_hashes=_input_hashes(args),
        result_summary=summary,
        exit_status=status,
    )
    with open(args.out + ".manifest.json", "w", encoding="utf-8") as fh:
        fh.write(canonical_json(manifest.to_json_obj()))


def cmd_key(args, cfg: EngineConfig) -> int:
    if (args.nu is None) == (args.w is None):
        raise ValueError("pass exactly one of --w (with --lambda) or --nu")
    if args.w is not None:
        if args.lam is None:
            raise ValueError("--w needs --lambda")
        w = parse_permutation(args.w)
        lam = _parse_partition(args.lam)
        cfg.check_rank(max(w.n, len(lam)))
        cfg.check_tdeg(lam[0] if lam else 0)
        poly = (lascoux_polynomial if args.xi else key_polynomial)(lam, w)
        params = {"w": w.one_line(), "lambda": list(lam), "xi": args.xi}
    else:
        if args.lam is not None:
            raise ValueError("--lambda is only valid with --w")
        nu = _parse_ints(args.nu, "composition")
        if any(a < 0 for a in nu):
            raise ValueError(f"composition entries must be >= 0: {nu}")
        cfg.check_rank(len(nu))
        cfg.check_tdeg(max(nu, default=0))
        poly = key_by_composition(nu, xi_mode=args.xi)
        params = {"nu": list(nu), "xi": args.xi}
    obj = {"command": "key", "params": params, "polynomial": poly.to_json_obj(),
           "text": poly.to_text()}
    _emit(args, [poly.to_text()], obj)
    _write_manifest(args, "key", params, {"terms": len(poly.terms)}, EXIT_OK)
    return EXIT_OK


def cmd_pw(args, cfg: EngineConfig) -> int:
    w = parse_permutation(args.w)
    cfg.check_rank(w.n)
    tmax = None
    if args.grade is not None:
        if args.grade < 0:
            raise ValueError("--grade must be >= 0")
        cfg.check_tdeg(args.grade)
        tmax = args.grade
    if args.tdeg is not None:
        cfg.check_tdeg(args.tdeg)
        tmax = args.tdeg if tmax is None else min(tmax, args.tdeg)
    poly = numerator_P(w, xi_mode=args.xi, tmax=tmax)
    if args.grade is not None:
        poly = poly.t_slice(args.grade)
    params = {"w": w.one_line(), "xi": args.xi, "grade": args.grade,
              "tdeg": args.tdeg}
    obj = {"command": "pw", "params": params, "polynomial": poly.to_json_obj(),
           "text": poly.to_text()}
    _emit(args, [poly.to_text()], obj)
    _write_manifest(args, "pw", params, {"terms": len(poly.terms)}, EXIT_OK)
    return EXIT_OK


def cmd_sets(args, cfg: EngineConfig) -> int:
    w = parse_permutation(args.w)
    chosen = [opt for opt in ("A", "B", "C") if getattr(args, opt) is not None]
    if len(chosen) != 1:
        raise ValueError("pass exactly one of --A, --B, --C")
    which = chosen[0]
    levels = _parse_ints(getattr(args, which), "levels")
    expected = {"A": 1, "B": 2, "C": 3}[which]
    if len(levels) != expected:
        raise ValueError(f"--{which} takes {expected} comma-separated level(s)")
    if any(v < 1 for v in levels) or any(
        a > b for a, b in zip(levels, levels[1:])
    ):
        raise ValueError(f"levels must satisfy 1 <= p <= k <= l, got {levels}")
    cfg.check_rank(max(w.n, levels[-1]))
    if which == "A":
        elements = [format_seq(a) for a in enum_A(w, levels[0])]
    elif which == "B":
        elements = [format_multiset(e) for e in enum_B(w, *levels)]
    else:
        elements = [format_multiset(t) for t in enum_C(w, *levels)]
    params = {"w": w.one_line(), "set": which, "levels": list(levels)}
    obj = {"command": "sets", "params": params, "elements": elements,
           "size": len(elements)}
    _emit(args, elements, obj)
    _write_manifest(args, "sets", params, {"size": len(elements)}, EXIT_OK)
    return EXIT_OK


def _report_lines(report: dict) -> list[str]:
    ces = report["counterexamples"]
    stats = " ".join(f"{k}={v}" for k, v in sorted(report["stats"].items()))
    lines = [
        f"{report['scan']} n={report['n']}: "
        f"{len(ces)} counterexample(s) [{stats}] {report['elapsed_ms']}ms"
    ]
    for ce in ces[:20]:
        lines.append("  " + ", ".join(f"{k}={v}" for k, v in ce.items()))
    if len(ces) > 20:
        lines.append(f"  ... and {len(ces) - 20} more")
    return lines


def _finish_report(args, command: str, report: dict) -> int:
    status = EXIT_OK if not report["counterexamples"] else EXIT_FINDING
    _emit(args, _report_lines(report), report)
    _write_manifest(
        args, command, report["params"],
        {"counterexamples": len(report["counterexamples"]), "stats": report["stats"]},
        status,
    )
    return status


def cmd_verify(args, cfg: EngineConfig) -> int:
    n = args.n if args.n is not None else _SUITE_DEFAULT_N[args.suite]
    cfg.check_rank(n)
    tdeg = args.tdeg if args.tdeg is not None else 4
    cfg.check_tdeg(tdeg)
    params = {"suite": args.suite, "n": n, "tdeg": tdeg}
    start = time.monotonic()
    if args.suite == "formofkw":
        checks = suite_formofkw(n, tdeg, two_words=True)
        elapsed = int((time.monotonic() - start) * 1000)
        report = checks_report("verify-formofkw", n, params, checks, elapsed)
    elif args.suite == "pxiw1":
        checks = suite_pxiw1(n)
        elapsed = int((time.monotonic() - start) * 1000)
        report = checks_report("verify-pxiw1", n, params, checks, elapsed)
    else:
        runner = {
            "diff1": check_diff1,
            "diff2": check_diff2,
            "lketa23": check_lketa23,
            "bounds": check_lowbdr2,
            "multsiw": check_multsiw,
            "fcoeff": suite_fcoeff,
        }[args.suite]
        outcome = runner(n)
        outcome.name = "verify-" + args.suite
        elapsed = int((time.monotonic() - start) * 1000)
        report = outcome_report(outcome, params, elapsed)
    return _finish_report(args, "verify", report)


def cmd_scan(args, cfg: EngineConfig) -> int:
    cfg.check_rank(args.n)
    params = {"conjecture": args.conjecture, "n": args.n,
              "threads": cfg.effective_threads()}
    start = time.monotonic()
    outcome = SCANS[args.conjecture](args.n, threads=cfg.effective_threads())
    elapsed = int((time.monotonic() - start) * 1000)
    report = outcome_report(outcome, params, elapsed)
    return _finish_report(args, "scan", report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="keyseries",
        description="Exact key/Lascoux generating series: compute, verify, scan.",
    )
    parser.add_argument("--version", action="version", version=__version__)

    def common(sub):
        sub.add_argument("--config", help="key=value config file with caps")
        sub.add_argument("--format", choices=("text", "json"), default="text")
        sub.add_argument("--out", help="write the JSON result and a manifest")

    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("key", help="key or Lascoux polynomial")
    p.add_argument("--w", help="permutation, one-line (e.g. 321 or 4,2,5,3,1)")
    p.add_argument("--lambda", dest="lam", help="partition, comma-separated")
    p.add_argument("--nu", help="weak composition, comma-separated")
    p.add_argument("--xi", action="store_true", help="Lascoux variant")
    common(p)
    p.set_defaults(func=cmd_key)

    p = subs.add_parser("pw", help="numerator polynomial of the series")
    p.add_argument("--w", required=True)
    p.add_argument("--xi", action="store_true")
    p.add_argument("--grade", type=int, help="extract one total T-degree")
    p.add_argument("--tdeg", type=int, help="truncate past this total T-degree")
    common(p)
    p.set_defaults(func=cmd_pw)

    p = subs.add_parser("sets", help="list A, B, or C sets")
    p.add_argument("--w", required=True)
    p.add_argument("--A", help="level l")
    p.add_argument("--B", help="levels k,l")
    p.add_argument("--C", help="levels p,k,l")
    common(p)
    p.set_defaults(func=cmd_sets)

    p = subs.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(_SUITE_DEFAULT_N))
    p.add_argument("--n", type=int, help="symmetric group rank")
    p.add_argument("--tdeg", type=int, help="series truncation degree")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("scan", help="scan a conjecture for counterexamples")
    p.add_argument("--conjecture", required=True, choices=sorted(SCANS))
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args.config)
        return args.func(args, cfg)
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
