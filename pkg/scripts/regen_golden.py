"""Rewrite tests/golden/*.tsv from scripts/queries/*.tdim (machine mode)."""

from pathlib import Path

from tensordim.script import execute_script, format_report, parse_script

ROOT = Path(__file__).resolve().parent.parent

for src in sorted((ROOT / "scripts" / "queries").glob("*.tdim")):
    records = execute_script(parse_script(src.read_text(encoding="utf-8")))
    out = ROOT / "tests" / "golden" / (src.stem + ".tsv")
    out.write_bytes(format_report(records, "machine").encode("utf-8"))
    print(f"{out.relative_to(ROOT)}: {len(records)} records")
