"""
Parallel Processing Module

Provides ordered parallel maps for independent verification cells.
"""

import multiprocessing
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, List, Optional, Sequence


class ParallelProcessor:
    """Maps functions over items, returning results in input order."""

    def __init__(self, max_workers: Optional[int] = None):
        """
        Initialize the Parallel Processor.

        Args:
            max_workers: Maximum number of workers (None or 0: CPU count; 1: run inline)
        """
        self.max_workers = max_workers or multiprocessing.cpu_count()

    @property
    def is_serial(self) -> bool:
        return self.max_workers <= 1

    def map_ordered(self, func: Callable[[Any], Any], items: Sequence[Any]) -> List[Any]:
        """
        Apply func to every item.

        Results are placed by input index, so output is identical for any
        worker count. The first exception raised by func is re-raised.

        Args:
            func: Function to apply to each item
            items: Items to process

        Returns:
            List of results in the same order as items
        """
        items = list(items)
        if self.is_serial or len(items) <= 1:
            return [func(item) for item in items]

        results: List[Any] = [None] * len(items)
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_index = {
                executor.submit(func, item): i
                for i, item in enumerate(items)
            }
            for future in as_completed(future_to_index):
                results[future_to_index[future]] = future.result()

        return results


def serial_processor() -> ParallelProcessor:
    """Processor that runs everything inline."""
    return ParallelProcessor(max_workers=1)
