#!/usr/bin/env python3
"""
Report Store for hopfscope - writes verification reports as deterministic JSON.
"""
import json
import hashlib
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from config import config, get_report_settings

logger = logging.getLogger(__name__)


def canonical_json(data: Any, indent: Optional[int] = 2) -> str:
    """Sorted keys, fixed indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=indent, ensure_ascii=False) + "\n"


def input_hash(paths: List[Path]) -> str:
    """sha256 over the raw bytes of every input file, in the given order."""
    digest = hashlib.sha256()
    for path in paths:
        digest.update(Path(path).read_bytes())
    return digest.hexdigest()


class ReportStore:
    """Writes, reads and lists JSON reports under one directory."""

    def __init__(self, output_dir: Optional[str] = None, indent: Optional[int] = None):
        """
        Args:
            output_dir: Directory for report files (config report.output_dir when omitted)
            indent: JSON indent (config report.indent when omitted)
        """
        settings = get_report_settings(config)
        self.output_dir = Path(output_dir or settings.get("output_dir", "reports"))
        self.indent = indent if indent is not None else settings.get("indent", 2)
        self.output_dir.mkdir(parents=True, exist_ok=True)
        logger.info(f"Report store initialized with directory: {self.output_dir}")

    def report_path(self, command: str, digest: str) -> Path:
        return self.output_dir / f"{command}_{digest[:12]}.json"

    def store_report(self, command: str, digest: str, report: Dict[str, Any]) -> Path:
        """
        Write a report.

        Args:
            command: CLI command that produced the report
            digest: sha256 of the command's inputs
            report: JSON-ready report body

        Returns:
            Path to the written file
        """
        path = self.report_path(command, digest)
        path.write_text(canonical_json(report, self.indent), encoding="utf-8")
        logger.info(f"Stored {command} report at {path}")
        return path

    def get_report(self, command: str, digest: str) -> Optional[Dict[str, Any]]:
        path = self.report_path(command, digest)
        if not path.exists():
            logger.info(f"No stored {command} report for {digest[:12]}")
            return None
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)

    def list_reports(self, command: Optional[str] = None) -> List[Path]:
        pattern = f"{command}_*.json" if command else "*.json"
        return sorted(self.output_dir.glob(pattern))
