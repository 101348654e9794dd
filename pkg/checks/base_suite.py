"""Base suite class for all verification suites."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from utils.errors import ProjRankError
from utils.logging import get_logger

# A check returns (passed, detail)
CheckFn = Callable[[], Tuple[bool, str]]


@dataclass
class Check:
    check_id: str
    anchor: str
    run: CheckFn


class BaseSuite(ABC):
    """Base class for the per-module verification suites."""

    def __init__(self, name: str):
        """
        Initialize the suite.

        Args:
            name: Suite name; also the prefix of every check_id
        """
        self.name = name
        self.logger = get_logger(f"checks.{name}")

    def check(self, key: str, anchor: str, fn: CheckFn) -> Check:
        """Wrap a callable as a check with id '<suite>.<key>'."""
        return Check(check_id=f"{self.name}.{key}", anchor=anchor, run=fn)

    @abstractmethod
    def get_checks(self) -> List[Check]:
        """
        Get the checks of this suite.

        Returns:
            List of checks in a fixed order
        """
        pass

    def run(self) -> List[Dict[str, Any]]:
        """
        Execute every check; a raised toolkit error counts as a failure.

        Returns:
            One entry per check with check_id, anchor, status and detail
        """
        entries = []
        for item in self.get_checks():
            try:
                passed, detail = item.run()
            except ProjRankError as e:
                passed, detail = False, f"{type(e).__name__}: {e}"
            except (ArithmeticError, ValueError, KeyError) as e:
                passed, detail = False, f"unexpected {type(e).__name__}: {e}"
            status = "pass" if passed else "fail"
            if not passed:
                self.logger.warning("%s failed: %s", item.check_id, detail)
            entries.append({"check_id": item.check_id, "anchor": item.anchor, "status": status, "detail": detail})
        failed = sum(1 for e in entries if e["status"] == "fail")
        self.logger.info("suite %s: %d checks, %d failed", self.name, len(entries), failed)
        return entries

    def get_capabilities(self) -> List[str]:
        """Check ids this suite reports."""
        return [item.check_id for item in self.get_checks()]


def all_hold(cases, predicate) -> Tuple[bool, str]:
    """
    Apply predicate to every case; report the count or the first failing case.

    Args:
        cases: Iterable of test cases
        predicate: Returns True when a case holds
    """
    count = 0
    for case in cases:
        if not predicate(case):
            return False, f"fails at {case!r}"
        count += 1
    return True, f"{count} cases"
