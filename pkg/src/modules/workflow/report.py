"""
Verification Report

Collects CheckResults, renders them as JSON or a table and saves them to the
output directory.
"""

from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List

from ..utils.check_result import CheckResult
from ..utils.json_utils import dumps_deterministic


@dataclass
class VerificationReport:
    """Ordered list of check results."""
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_count(self) -> int:
        return sum(1 for check in self.checks if not check.passed)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"checks": [check.to_dict() for check in self.checks]}

    def to_json(self) -> str:
        return dumps_deterministic(self.to_dict())

    def render_table(self) -> str:
        """One line per check: status, name and parameters, then the first failure."""
        lines = []
        name_width = max([len(check.name) for check in self.checks] + [4])
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            params = " ".join(f"{key}={value}" for key, value in check.params.items())
            lines.append(f"{status}  {check.name.ljust(name_width)}  {params}".rstrip())
            if check.first_failure:
                lines.append(f"      first failure: {check.first_failure}")
        total = len(self.checks)
        lines.append(f"{total - self.failed_count}/{total} checks passed")
        return "\n".join(lines) + "\n"

    def render(self, output_format: str) -> str:
        if output_format == "table":
            return self.render_table()
        return self.to_json()

    def save(self, output_dir: str, suite: str) -> Path:
        """
        Save the JSON report as <timestamp>_<suite>_report.json.

        Args:
            output_dir: Directory, created when missing
            suite: Suite name used in the filename

        Returns:
            Path to the saved report
        """
        directory = Path(output_dir)
        directory.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        path = directory / f"{timestamp}_{suite}_report.json"
        path.write_text(self.to_json(), encoding="utf-8")
        return path
