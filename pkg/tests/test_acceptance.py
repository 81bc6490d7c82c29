"""Acceptance criteria 1-10, one test each, zero tolerance.

Every test prints a single pass/fail line and also records it for the
terminal summary, so ``pytest -s tests/test_acceptance.py`` shows the table.
"""

import subprocess
import sys
import time
from pathlib import Path

import pytest

from tensordim import selftest
from tensordim.script import execute_script, format_report, parse_script

ROOT = Path(__file__).resolve().parent.parent
QUERY_DIR = ROOT / "scripts" / "queries"
GOLDEN_DIR = ROOT / "tests" / "golden"
BUDGET = 60.0


def _report(log, result, elapsed):
    line = f"{result.line()} ({elapsed:.2f}s)"
    print(line)
    log.append(line)


@pytest.mark.parametrize("suite", selftest.SUITES, ids=lambda f: f.__name__)
def test_criterion(suite, criterion_log):
    start = time.perf_counter()
    result = suite()
    elapsed = time.perf_counter() - start
    _report(criterion_log, result, elapsed)
    assert result.passed, result.detail
    assert elapsed < BUDGET


def golden_check():
    checks, failures = 0, []
    scripts = sorted(QUERY_DIR.glob("*.tdim"))
    for src in scripts:
        checks += 1
        report = format_report(execute_script(parse_script(src.read_text(encoding="utf-8"))),
                               "machine")
        golden = GOLDEN_DIR / f"{src.stem}.tsv"
        if not golden.exists() or report.encode("utf-8") != golden.read_bytes():
            failures.append(f"{src.name} differs from {golden.name}")
    proc = subprocess.run([sys.executable, "-m", "tensordim", "selftest"],
                          capture_output=True, text=True)
    lines = proc.stdout.splitlines()
    checks += 1
    numbers = [int(line.split()[1]) for line in lines]
    if proc.returncode != 0 or numbers != list(range(1, 10)) \
            or not all(line.startswith("[PASS]") for line in lines):
        failures.append(f"selftest exit {proc.returncode}, suites {numbers}")
    if not scripts:
        failures.append("no example scripts shipped")
    detail = "; ".join(failures) if failures else f"{checks} checks"
    return selftest.CriterionResult(10, "CLI golden files", not failures, detail)


def test_criterion_10_cli_golden(criterion_log):
    start = time.perf_counter()
    result = golden_check()
    elapsed = time.perf_counter() - start
    _report(criterion_log, result, elapsed)
    assert result.passed, result.detail
    assert elapsed < BUDGET
