"""
Caching Module

Provides an in-memory memo table for repeated representation-theoretic computations.
"""

import threading
from functools import wraps
from typing import Any, Callable, Dict, Hashable, Optional, Tuple

_MISSING = object()


class Cache:
    """Thread-safe in-memory cache for pure function results."""

    def __init__(self, max_entries: Optional[int] = None):
        """
        Initialize the Cache.

        Args:
            max_entries: Optional cap on stored entries; the table is cleared when reached
        """
        self.max_entries = max_entries
        self._cache: Dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def _get_cache_key(self, func_name: str, *args, **kwargs) -> Tuple:
        """Generate cache key from function name and arguments."""
        return (func_name, args, tuple(sorted(kwargs.items())))

    def get(self, cache_key: Hashable, default: Any = None) -> Any:
        """
        Get cached value.

        Args:
            cache_key: Cache key
            default: Returned when the key is absent

        Returns:
            Cached value or default
        """
        with self._lock:
            value = self._cache.get(cache_key, _MISSING)
            if value is _MISSING:
                self.misses += 1
                return default
            self.hits += 1
            return value

    def set(self, cache_key: Hashable, value: Any) -> None:
        """
        Set cached value.

        Args:
            cache_key: Cache key
            value: Value to cache (must not be mutated afterwards)
        """
        with self._lock:
            if self.max_entries is not None and len(self._cache) >= self.max_entries:
                self._cache.clear()
            self._cache[cache_key] = value

    def clear(self) -> None:
        """Drop all entries and reset the counters."""
        with self._lock:
            self._cache.clear()
            self.hits = 0
            self.misses = 0

    def stats(self) -> Dict[str, int]:
        """Return hit/miss counters and current size."""
        with self._lock:
            return {"hits": self.hits, "misses": self.misses, "entries": len(self._cache)}

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)


# Global cache instance
_global_cache = Cache()


def cached(cache_instance: Optional[Cache] = None):
    """
    Decorator to memoize a pure function with hashable arguments.

    Two threads racing on the same key may both compute it; the stored value
    is identical either way.

    Args:
        cache_instance: Optional Cache instance (uses global if None)
    """
    cache = cache_instance or _global_cache

    def decorator(func: Callable):
        @wraps(func)
        def wrapper(*args, **kwargs):
            cache_key = cache._get_cache_key(func.__qualname__, *args, **kwargs)

            cached_value = cache.get(cache_key, _MISSING)
            if cached_value is not _MISSING:
                return cached_value

            result = func(*args, **kwargs)
            cache.set(cache_key, result)
            return result

        wrapper.cache = cache
        return wrapper
    return decorator
