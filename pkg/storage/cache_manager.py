#!/usr/bin/env python3
"""
Cache Manager for hopfscope - keeps built catalog entries between runs.

Entries are pickled under cache/examples/<name>_<key>.cache. Each file carries
the version stamp it was built with; a different stamp reads as a miss.
"""
import hashlib
import json
import logging
import pickle
import re
from collections import Counter
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

from config import config, get_cache_settings

logger = logging.getLogger(__name__)


def entry_key(name: str, params: Dict[str, Any]) -> str:
    """md5 of the example name and its stringified parameters."""
    payload = json.dumps({"example": name, "params": {k: str(v) for k, v in params.items()}}, sort_keys=True)
    return hashlib.md5(payload.encode()).hexdigest()


class CacheManager:
    """Pickled catalog entries keyed by example name and parameters."""

    def __init__(self, cache_dir: Optional[str] = None, default_ttl: Optional[int] = None, stamp: str = ""):
        """
        Args:
            cache_dir: cache root (config cache.cache_dir when omitted)
            default_ttl: time-to-live in seconds (config cache.ttl_seconds when omitted)
            stamp: version string written into every entry
        """
        settings = get_cache_settings(config)
        self.cache_dir = Path(cache_dir or settings.get("cache_dir", "cache"))
        self.default_ttl = default_ttl or settings.get("ttl_seconds", 86400)
        self.stamp = stamp
        self.entries_dir = self.cache_dir / "examples"
        self.entries_dir.mkdir(parents=True, exist_ok=True)
        logger.info(f"Cache manager initialized with directory: {self.cache_dir}")

    def _path(self, name: str, params: Dict[str, Any]) -> Path:
        safe = re.sub(r"[^A-Za-z0-9]+", "-", name).strip("-")
        return self.entries_dir / f"{safe}_{entry_key(name, params)[:16]}.cache"

    def _is_fresh(self, path: Path, ttl: int) -> bool:
        if not path.exists():
            return False
        age = datetime.now() - datetime.fromtimestamp(path.stat().st_mtime)
        return age.total_seconds() < ttl

    def get_entry(self, name: str, params: Dict[str, Any], ttl: Optional[int] = None) -> Optional[Any]:
        """
        Load a cached entry.

        Returns:
            The entry, or None when missing, expired, built under another stamp
            or unreadable
        """
        path = self._path(name, params)
        if not self._is_fresh(path, ttl or self.default_ttl):
            logger.info(f"Cache miss for {name} {params} (expired or not found)")
            return None
        try:
            with open(path, "rb") as f:
                record = pickle.load(f)
        except Exception as e:
            logger.error(f"Error reading cache entry {path.name}: {e}")
            return None
        if record.get("stamp") != self.stamp:
            logger.info(f"Cache entry {path.name} was built by {record.get('stamp')!r}, not {self.stamp!r}")
            return None
        logger.info(f"Cache hit for {name} {params}")
        return record["entry"]

    def store_entry(self, name: str, params: Dict[str, Any], entry: Any) -> bool:
        """Pickle an entry. Returns False and logs when the write fails."""
        path = self._path(name, params)
        record = {
            "entry": entry,
            "example": name,
            "params": {k: str(v) for k, v in params.items()},
            "stamp": self.stamp,
            "cached_at": datetime.now().isoformat(),
        }
        try:
            with open(path, "wb") as f:
                pickle.dump(record, f)
        except Exception as e:
            logger.error(f"Error caching {name}: {e}")
            return False
        logger.info(f"Cached {name} as {path.name}")
        return True

    def invalidate(self, name: str, params: Dict[str, Any]) -> bool:
        path = self._path(name, params)
        if path.exists():
            path.unlink()
            logger.info(f"Invalidated cache entry {path.name}")
            return True
        return False

    def clear_cache(self) -> int:
        """Remove every entry. Returns number of files removed."""
        removed = 0
        for path in self.entries_dir.glob("*.cache"):
            path.unlink()
            removed += 1
        logger.info(f"Cleared cache ({removed} files)")
        return removed

    def get_cache_stats(self) -> Dict[str, Any]:
        """Entry count and size, with counts per example name."""
        files = sorted(self.entries_dir.glob("*.cache"))
        return {
            "count": len(files),
            "size_bytes": sum(f.stat().st_size for f in files),
            "by_example": dict(sorted(Counter(f.stem.rsplit("_", 1)[0] for f in files).items())),
        }

    def cleanup_expired_cache(self) -> int:
        """Remove expired entries. Returns number of files removed."""
        removed = 0
        for path in self.entries_dir.glob("*.cache"):
            if not self._is_fresh(path, self.default_ttl):
                try:
                    path.unlink()
                    removed += 1
                except OSError as e:
                    logger.error(f"Error removing expired cache {path}: {e}")
        logger.info(f"Cleanup removed {removed} expired cache files")
        return removed
