"""
Check Result

Defines the value every verification returns.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional


@dataclass
class CheckResult:
    """Outcome of one verification."""
    name: str
    params: Dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    first_failure: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def failure(cls, name: str, params: Dict[str, Any], first_failure: Dict[str, Any],
                details: Optional[Dict[str, Any]] = None) -> "CheckResult":
        """Build a failed result."""
        return cls(name=name, params=params, passed=False,
                   first_failure=first_failure, details=details or {})

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        data = {
            "name": self.name,
            "params": self.params,
            "pass": self.passed,
            "first_failure": self.first_failure
        }
        if self.details:
            data["details"] = self.details
        return data
