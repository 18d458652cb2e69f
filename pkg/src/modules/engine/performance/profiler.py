"""
Performance Profiler

Profiles a command run and writes a cProfile summary next to the reports.
"""

import cProfile
import io
import pstats
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

from ...utils.constants import DEFAULT_OUTPUT_DIR


class PerformanceProfiler:
    """Profiles command execution and generates performance reports."""

    def __init__(self, output_dir: Optional[str] = None, top_n: int = 20):
        """
        Initialize the Performance Profiler.

        Args:
            output_dir: Directory for performance reports (default: output/performance)
            top_n: Number of functions listed in the report
        """
        self.output_dir = Path(output_dir) if output_dir else Path(DEFAULT_OUTPUT_DIR) / "performance"
        self.top_n = top_n

    def profile_function(
        self,
        func: Callable,
        *args,
        **kwargs
    ) -> Tuple[Any, Dict[str, Any]]:
        """
        Profile a function execution.

        Args:
            func: Function to profile
            *args: Positional arguments for the function
            **kwargs: Keyword arguments for the function

        Returns:
            Tuple of (function result, performance metrics)
        """
        profiler = cProfile.Profile()
        profiler.enable()

        start_time = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        finally:
            execution_time = time.perf_counter() - start_time
            profiler.disable()

        stats_stream = io.StringIO()
        stats = pstats.Stats(profiler, stream=stats_stream)
        stats.sort_stats('cumulative')
        stats.print_stats(self.top_n)

        metrics = {
            'execution_time': execution_time,
            'stats': stats_stream.getvalue(),
            'total_calls': stats.total_calls,
            'primitive_calls': stats.prim_calls
        }

        return result, metrics

    def save_profile_report(
        self,
        command_name: str,
        metrics: Dict[str, Any],
        params: Optional[Dict[str, Any]] = None,
        filename: Optional[str] = None
    ) -> Path:
        """
        Save performance profile report to file.

        Args:
            command_name: Name of the profiled command
            metrics: Metrics returned by profile_function
            params: Run parameters recorded in the header
            filename: Optional filename (default profile_<command>_<timestamp>.txt)

        Returns:
            Path to saved report
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        report_path = self.output_dir / (filename or f"profile_{command_name}_{timestamp}.txt")

        header = [
            f"Performance Profile: {command_name}",
            "=" * 70,
            f"Parameters: {' '.join(f'{k}={v}' for k, v in (params or {}).items()) or '-'}",
            f"Execution Time: {metrics['execution_time']:.4f}s",
            f"Calls: {metrics['total_calls']} ({metrics['primitive_calls']} primitive)",
            "",
            f"Top {self.top_n} functions by cumulative time:",
            "-" * 70
        ]
        report_path.write_text("\n".join(header) + "\n" + metrics['stats'], encoding='utf-8')
        return report_path
