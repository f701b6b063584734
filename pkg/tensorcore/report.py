"""Check and report records shared by every verification routine."""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class CheckResult:
    """Outcome of one named identity check."""
    name: str
    passed: Optional[bool]
    witness: Optional[List[Any]] = None
    detail: str = ""
    witnesses: List[List[Any]] = None

    def __post_init__(self):
        if self.witnesses is None:
            self.witnesses = []
        if self.witness is None and self.witnesses:
            self.witness = self.witnesses[0]

    @property
    def status(self) -> str:
        if self.passed is None:
            return "not_applicable"
        return "passed" if self.passed else "failed"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name, "status": self.status}
        if self.witness is not None:
            data["witness"] = list(self.witness)
        if len(self.witnesses) > 1:
            data["witnesses"] = [list(w) for w in self.witnesses]
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class VerificationReport:
    """Ordered collection of checks about one subject."""
    subject: str
    checks: List[CheckResult] = None
    metadata: Dict[str, Any] = None

    def __post_init__(self):
        if self.checks is None:
            self.checks = []
        if self.metadata is None:
            self.metadata = {}

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        if check.passed is False:
            logger.error(f"{self.subject}: {check.name} failed (witness {check.witness}) {check.detail}")
        else:
            logger.info(f"{self.subject}: {check.name} {check.status}")
        return check

    def extend(self, other: "VerificationReport"):
        for check in other.checks:
            self.checks.append(check)

    def get(self, name: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    @property
    def passed(self) -> bool:
        return all(check.passed is not False for check in self.checks)

    @property
    def failed_checks(self) -> List[CheckResult]:
        return [check for check in self.checks if check.passed is False]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "metadata": self.metadata,
        }


def ordered_map(fn: Callable[[T], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """Map fn over items, optionally on a thread pool, keeping input order."""
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def collect_witnesses(
    name: str,
    probe: Callable[[Any], List[List[Any]]],
    items: Iterable[Any],
    exhaustive: bool = False,
    threads: int = 1,
    detail: str = "",
) -> CheckResult:
    """Run probe on every item and merge the witnesses it returns.

    Without exhaustive mode the scan stops at the first item reporting a
    witness (sequentially) and keeps only that one.
    """
    items = list(items)
    if exhaustive:
        found = [w for ws in ordered_map(probe, items, threads) for w in ws]
        found.sort()
        return CheckResult(name=name, passed=not found, witnesses=found, detail=detail if found else "")
    if threads > 1:
        for ws in ordered_map(probe, items, threads):
            if ws:
                return CheckResult(name=name, passed=False, witnesses=[sorted(ws)[0]], detail=detail)
        return CheckResult(name=name, passed=True)
    for item in items:
        ws = probe(item)
        if ws:
            return CheckResult(name=name, passed=False, witnesses=[sorted(ws)[0]], detail=detail)
    return CheckResult(name=name, passed=True)
