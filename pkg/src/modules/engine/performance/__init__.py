"""
Performance Module

Provides memoization, ordered parallel maps and profiling.
"""

from .profiler import PerformanceProfiler
from .cache import Cache, cached
from .parallel import ParallelProcessor, serial_processor

__all__ = [
    'PerformanceProfiler',
    'Cache',
    'cached',
    'ParallelProcessor',
    'serial_processor'
]
