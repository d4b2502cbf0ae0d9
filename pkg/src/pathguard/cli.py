"""pathguard command-line front-end.

Subcommands: ``canon`` (print the canonical form), ``check`` (whitelist
decision), ``verify`` (exhaustive residue sweep / preimage search), and
``diff`` (legacy-baseline differential run). Exit codes: 0 allowed/clean,
1 denied or violations found, 2 usage or input error. All behavior is
flag-driven; there is no environment or config-file state.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import List, Optional

from .baseline import load_corpus, run_differential
from .canonical import canonicalize, canonicalize_jailed, sanitize
from .model import (
    DEFAULT_LIMITS,
    CanonicalPath,
    PathError,
    RawPathString,
    Whitelist,
    load_whitelist,
    validate_raw,
)
from .verifier import (
    DEFAULT_ALPHABET,
    DEFAULT_BUDGET,
    EnumerationSpec,
    preimages_of,
    verify_no_residue,
)

EXIT_OK = 0
EXIT_DENIED = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathguard",
        description="Lexical path canonicalization and whitelist checking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    canon = sub.add_parser("canon", help="print the canonical form of a path")
    canon.add_argument("path", nargs="?", default=None)
    canon.add_argument("--root", help="application root to prepend first")
    canon.add_argument(
        "--strict-underflow",
        action="store_true",
        help="log '..' tokens ignored at the root (probable attacks)",
    )
    canon.add_argument(
        "--stdin", action="store_true", help="read one path per line from stdin"
    )

    check = sub.add_parser("check", help="check a path against a whitelist")
    check.add_argument("path", nargs="?", default=None)
    check.add_argument("--whitelist", required=True, help="whitelist file")
    check.add_argument("--root", help="application root to prepend first")
    check.add_argument(
        "--canonicalize-entries",
        action="store_true",
        help="auto-canonicalize whitelist entries instead of rejecting them",
    )
    check.add_argument(
        "--stdin", action="store_true", help="read one path per line from stdin"
    )

    verify = sub.add_parser(
        "verify", help="exhaustive sweep: residue check or preimage search"
    )
    verify.add_argument("--max-len", type=int, default=8)
    verify.add_argument("--alphabet", default=DEFAULT_ALPHABET)
    verify.add_argument("--target", help="list preimages of this canonical path")
    verify.add_argument(
        "--format", choices=("plain", "structured"), default="plain"
    )
    verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    diff = sub.add_parser(
        "diff", help="differential run against the legacy de_dotdot baseline"
    )
    diff.add_argument("--corpus", required=True, help="corpus file")
    diff.add_argument(
        "--format", choices=("plain", "structured"), default="plain"
    )

    return parser


def _fail(message: str) -> int:
    print(f"pathguard: {message}", file=sys.stderr)
    return EXIT_USAGE


def _input_paths(args: argparse.Namespace) -> List[str]:
    if args.stdin:
        if args.path is not None:
            raise PathError("--stdin and a path argument are mutually exclusive")
        return [line.rstrip("\n").rstrip("\r") for line in sys.stdin]
    if args.path is None:
        raise PathError("a path argument is required (or use --stdin)")
    return [args.path]


def _canonical_of(args: argparse.Namespace, raw: RawPathString) -> CanonicalPath:
    if args.root is not None:
        return canonicalize_jailed(CanonicalPath(args.root), raw)
    return canonicalize(raw, strict_underflow=getattr(args, "strict_underflow", False))


def _cmd_canon(args: argparse.Namespace) -> int:
    if args.strict_underflow:
        logging.basicConfig(
            stream=sys.stderr, level=logging.WARNING, format="pathguard: %(message)s"
        )
    try:
        paths = _input_paths(args)
        lines = []
        for text in paths:
            raw = validate_raw(text, DEFAULT_LIMITS)
            lines.append(_canonical_of(args, raw).text)
    except (PathError, ValueError) as exc:
        return _fail(str(exc))
    sys.stdout.write("".join(line + "\n" for line in lines))
    return EXIT_OK


def _load_whitelist_file(args: argparse.Namespace) -> Whitelist:
    with open(args.whitelist, "r", encoding="utf-8", errors="surrogateescape") as fh:
        return load_whitelist(
            fh, DEFAULT_LIMITS, canonicalize_entries=args.canonicalize_entries
        )


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        whitelist = _load_whitelist_file(args)
        paths = _input_paths(args)
        decisions = []
        for text in paths:
            raw = validate_raw(text, DEFAULT_LIMITS)
            canonical = _canonical_of(args, raw)
            if args.root is not None:
                allowed = canonical in whitelist.entries
            else:
                allowed = sanitize(raw, whitelist)
            decisions.append((allowed, canonical.text))
    except (OSError, PathError, ValueError) as exc:
        return _fail(str(exc))
    out = []
    any_denied = False
    for allowed, text in decisions:
        out.append(("ALLOW " if allowed else "DENY ") + text)
        any_denied = any_denied or not allowed
    sys.stdout.write("".join(line + "\n" for line in out))
    return EXIT_DENIED if any_denied else EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        spec = EnumerationSpec(alphabet=args.alphabet, max_len=args.max_len)
    except ValueError as exc:
        return _fail(str(exc))
    started = time.monotonic()
    try:
        if args.target is not None:
            target = CanonicalPath(args.target)
            hits = preimages_of(spec, target, budget=args.budget)
            elapsed_ms = int((time.monotonic() - started) * 1000)
            from .verifier import total_count

            if args.format == "structured":
                doc = {
                    "mode": "preimages",
                    "target": target.text,
                    "visited": total_count(spec),
                    "preimages": hits,
                    "count": len(hits),
                    "elapsed_ms": elapsed_ms,
                }
                print(json.dumps(doc))
            else:
                for hit in hits:
                    print(hit)
                print(f"{len(hits)} preimages of {target.text}")
            return EXIT_OK
        violations = verify_no_residue(spec, budget=args.budget)
        elapsed_ms = int((time.monotonic() - started) * 1000)
        from .verifier import total_count

        if args.format == "structured":
            doc = {
                "mode": "no-residue",
                "visited": total_count(spec),
                "violations": [
                    {"input": v.input, "output": v.output, "offending": v.offending}
                    for v in violations
                ],
                "summary": {
                    "visited": total_count(spec),
                    "violations": len(violations),
                    "elapsed_ms": elapsed_ms,
                },
            }
            print(json.dumps(doc))
        else:
            for v in violations:
                print(f"{v.input} -> {v.output} [{v.offending}]")
            print(f"{len(violations)} violations / {total_count(spec)} visited")
        return EXIT_OK if not violations else EXIT_DENIED
    except (PathError, ValueError) as exc:
        return _fail(str(exc))


def _cmd_diff(args: argparse.Namespace) -> int:
    try:
        with open(args.corpus, "r", encoding="utf-8", errors="surrogateescape") as fh:
            corpus = load_corpus(fh, DEFAULT_LIMITS)
    except (OSError, PathError) as exc:
        return _fail(str(exc))
    records = run_differential(corpus)
    if args.format == "structured":
        doc = {
            "mode": "diff",
            "records": [
                {
                    "input": r.input.text,
                    "baseline_output": r.baseline_output,
                    "canonical_output": r.canonical_output.text,
                    "residue_found": list(r.residue_found),
                    "bottom_up_reach": r.bottom_up_reach,
                }
                for r in records
            ],
            "summary": {"inputs": len(corpus), "divergences": len(records)},
        }
        print(json.dumps(doc))
    else:
        for r in records:
            residue = ",".join(r.residue_found) or "-"
            reach = " bottom-up-reach" if r.bottom_up_reach else ""
            print(
                f"{r.input.text} | baseline={r.baseline_output} "
                f"| canonical={r.canonical_output.text} | residue={residue}{reach}"
            )
        print(f"{len(records)} divergences / {len(corpus)} inputs")
    flagged = any(r.residue_found for r in records)
    return EXIT_DENIED if flagged else EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "canon": _cmd_canon,
        "check": _cmd_check,
        "verify": _cmd_verify,
        "diff": _cmd_diff,
    }
    return handlers[args.command](args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
