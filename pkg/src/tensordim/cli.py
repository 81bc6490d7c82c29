"""Command line: ``tensordim eval|check|selftest``.

Exit status is 2 for a script that does not parse, 1 when some query was
refused (or a self-test criterion failed), 0 otherwise.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import profile
from .script import ScriptError, execute_script, format_report, parse_script
from .selftest import run_all


def _load(path: str):
    text = Path(path).read_text(encoding="utf-8")
    return parse_script(text)


def cmd_eval(args) -> int:
    try:
        script = _load(args.script)
    except ScriptError as exc:
        print(f"{args.script}: {exc}", file=sys.stderr)
        return 2
    records = execute_script(script)
    sys.stdout.write(format_report(records, "machine" if args.machine else "text"))
    return 1 if any(r.status == "refused" for r in records) else 0


def cmd_check(args) -> int:
    try:
        script = _load(args.script)
    except ScriptError as exc:
        print(f"{args.script}: {exc}", file=sys.stderr)
        return 2
    status = 0
    for b in script.bindings:
        if b.kind != "profile" or b.builder == "from_algebra":
            continue
        rep = profile.validate_profile(profile.build_profile(b.builder, **dict(b.params)))
        if not rep.ok:
            print(f"{args.script}:{b.line}: profile {b.name}: {rep}")
            status = 1
    print(f"{args.script}: {len(script.bindings)} bindings, {len(script.queries)} queries")
    return status


def cmd_selftest(args) -> int:
    results = run_all()
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="tensordim",
        description="Krull dimensions and prime heights of tensor products of algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="run every query in a script")
    p.add_argument("script")
    p.add_argument("--machine", action="store_true",
                   help="tab-separated output, one line per query")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="parse a script and validate its profiles")
    p.add_argument("script")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("selftest", help="run the built-in acceptance suites")
    p.set_defaults(func=cmd_selftest)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
