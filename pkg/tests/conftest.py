"""
Pytest configuration: shared fixtures and per-session test metrics.

Each session writes tests/output/<timestamp>/<timestamp>_test_metrics.txt with
pass counts and durations per test module.
"""

import random
import sys
from collections import defaultdict
from datetime import datetime
from pathlib import Path

import pytest

from src.modules.engine.performance import ParallelProcessor
from src.modules.utils.constants import CUTOFF_ENV_VAR, SEED_ENV_VAR

_session_timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
_results_by_module = defaultdict(list)


@pytest.fixture
def rng():
    """Seeded generator for the specialization oracles."""
    return random.Random(0)


@pytest.fixture
def serial_processor():
    return ParallelProcessor(max_workers=1)


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """Keep GRASSFLOP_* variables from the caller's shell out of the tests."""
    monkeypatch.delenv(CUTOFF_ENV_VAR, raising=False)
    monkeypatch.delenv(SEED_ENV_VAR, raising=False)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Record the outcome and duration of every test call."""
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call" and not (rep.when == "setup" and rep.skipped):
        return
    _results_by_module[Path(str(item.fspath)).stem].append({
        "name": item.name,
        "status": rep.outcome.upper(),
        "duration": rep.duration,
        "error": str(rep.longrepr).split("\n")[0] if rep.failed else None
    })


def _metrics_lines():
    all_results = [r for results in _results_by_module.values() for r in results]
    total = len(all_results)

    def count(results, status):
        return sum(1 for r in results if r["status"] == status)

    def share(n):
        return f"{n} ({n / total * 100:.1f}%)" if total else "0"

    lines = [
        "=" * 80,
        "Test Execution Metrics",
        "=" * 80,
        f"Session Timestamp: {_session_timestamp}",
        f"Total Tests: {total}",
        f"Passed: {share(count(all_results, 'PASSED'))}",
        f"Failed: {share(count(all_results, 'FAILED'))}",
        f"Skipped: {share(count(all_results, 'SKIPPED'))}",
        f"Total Duration: {sum(r['duration'] for r in all_results):.2f}s",
        "",
        "-" * 80,
        "Per-Module Metrics",
        "-" * 80
    ]
    for module in sorted(_results_by_module):
        results = _results_by_module[module]
        lines.append(
            f"{module}: {count(results, 'PASSED')}/{len(results)} passed, "
            f"{sum(r['duration'] for r in results):.2f}s"
        )

    failed = [(module, r) for module, results in sorted(_results_by_module.items())
              for r in results if r["status"] == "FAILED"]
    if failed:
        lines += ["", "-" * 80, "Failed Tests", "-" * 80]
        for module, r in failed:
            lines.append(f"  - {module}::{r['name']}")
            if r["error"]:
                lines.append(f"    Error: {r['error'][:200]}")
    lines.append("=" * 80)
    return lines


def pytest_sessionfinish(session, exitstatus):
    """Write the metrics file once the session ends."""
    if not _results_by_module:
        return
    output_dir = Path("tests/output") / _session_timestamp
    metrics_file = output_dir / f"{_session_timestamp}_test_metrics.txt"
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
        metrics_file.write_text("\n".join(_metrics_lines()) + "\n", encoding="utf-8")
    except OSError as e:
        print(f"Warning: Could not save test metrics to {metrics_file}: {e}", file=sys.stderr)
