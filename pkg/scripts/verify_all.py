#!/usr/bin/env python3
"""Run every verification suite on the bundled example config and print a
one-line summary per suite."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from fqharmonic.harness.config import parse_config
from fqharmonic.harness.report import emit_report
from fqharmonic.harness.suites import run_suites


def main() -> int:
    cfg_path = Path(__file__).with_name("example.cfg")
    cfg = parse_config(cfg_path.read_text())
    t0 = time.monotonic()
    reports = run_suites(cfg)
    sys.stdout.write(emit_report(reports, "text"))
    print(f"wall time {time.monotonic() - t0:.1f}s")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
