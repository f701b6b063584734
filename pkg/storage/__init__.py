"""
Storage package for hopfscope - cached catalog entries and JSON reports.
"""

from .cache_manager import CacheManager
from .report_store import ReportStore, canonical_json, input_hash

__all__ = [
    "CacheManager",
    "ReportStore",
    "canonical_json",
    "input_hash",
]
