"""Persistence services."""

from hochq.services.result_cache import ResultCache, cache_key

__all__ = ["ResultCache", "cache_key"]
