"""
Tests for the memo cache.
"""

import pytest

from src.modules.engine.performance import Cache, cached


class TestCache:
    """Test cases for Cache class."""

    def test_get_missing_returns_default(self):
        """Test that a missing key gives the default and counts a miss."""
        cache = Cache()
        assert cache.get("key", default=7) == 7
        assert cache.stats() == {"hits": 0, "misses": 1, "entries": 0}

    def test_set_and_get(self):
        """Test storing and reading a value."""
        cache = Cache()
        cache.set("key", (1, 2))
        assert cache.get("key") == (1, 2)
        assert cache.stats()["hits"] == 1
        assert len(cache) == 1

    def test_none_is_a_value(self):
        """Test that a stored None is a hit, not a miss."""
        cache = Cache()
        cache.set("key", None)
        assert cache.get("key", default=5) is None
        assert cache.stats()["hits"] == 1

    def test_max_entries(self):
        """Test that the table is cleared when full."""
        cache = Cache(max_entries=2)
        cache.set("a", 1)
        cache.set("b", 2)
        cache.set("c", 3)
        assert len(cache) == 1
        assert cache.get("c") == 3

    def test_clear(self):
        """Test clearing entries and counters."""
        cache = Cache()
        cache.set("a", 1)
        cache.get("a")
        cache.clear()
        assert cache.stats() == {"hits": 0, "misses": 0, "entries": 0}


class TestCachedDecorator:
    """Test cases for the cached decorator."""

    def test_memoizes(self):
        """Test that repeated calls run the function once."""
        cache = Cache()
        calls = []

        @cached(cache)
        def square(x):
            calls.append(x)
            return x * x

        assert square(3) == 9
        assert square(3) == 9
        assert square(4) == 16
        assert calls == [3, 4]
        assert square.cache is cache

    def test_keyword_arguments_are_part_of_key(self):
        """Test that keyword arguments distinguish entries."""
        cache = Cache()

        @cached(cache)
        def shift(x, by=0):
            return x + by

        assert shift(1, by=1) == 2
        assert shift(1, by=2) == 3
        assert len(cache) == 2

    def test_exceptions_are_not_cached(self):
        """Test that a raising call stores nothing."""
        cache = Cache()

        @cached(cache)
        def fail(x):
            raise ValueError("bad")

        with pytest.raises(ValueError):
            fail(1)
        assert len(cache) == 0
