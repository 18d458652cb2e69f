"""
Engine Module - Memoization, parallel execution and profiling support.
"""

from .performance import Cache, cached, ParallelProcessor, PerformanceProfiler

__all__ = ['Cache', 'cached', 'ParallelProcessor', 'PerformanceProfiler']
