"""Supervisor coordinating the verification suites."""

from typing import Any, Callable, Dict, List, Optional

from langgraph.graph import END, START, StateGraph

from checks.base_suite import BaseSuite
from checks.hss_suite import HSSSuite
from checks.matrix_lie_suite import MatrixLieSuite
from checks.pluecker_suite import PlueckerSuite
from checks.rep_theory_suite import RepTheorySuite
from checks.root_system_suite import RootSystemSuite
from checks.schubert_suite import SchubertSuite
from config.settings import VERIFY_SCOPES
from models.payloads import CheckEntry, VerifyReport, VerifySummary
from utils.errors import ParameterError, WorkflowError
from utils.logging import get_logger
from utils.state import VerifyState

logger = get_logger("supervisor")

_SUITES: Dict[str, Callable[[], BaseSuite]] = {
    "root_system": RootSystemSuite,
    "rep_theory": RepTheorySuite,
    "schubert": SchubertSuite,
    "matrix_lie": MatrixLieSuite,
    "pluecker": PlueckerSuite,
    "hss": HSSSuite,
}


class Supervisor:
    """Fans the selected suites out in parallel and assembles one ordered report."""

    def __init__(self, suites: Optional[Dict[str, Callable[[], BaseSuite]]] = None):
        """
        Initialize the supervisor.

        Args:
            suites: Optional scope -> suite factory map (defaults to every module suite)
        """
        self.suites = suites or dict(_SUITES)
        self._workflows: Dict[tuple, Any] = {}

    def resolve_scopes(self, scope: str) -> List[str]:
        if scope == "all":
            return [s for s in VERIFY_SCOPES if s in self.suites]
        if scope not in self.suites:
            choices = ", ".join(["all"] + list(self.suites))
            raise ParameterError(f"unknown scope {scope!r}; choose from {choices}")
        return [scope]

    def _build_workflow(self, scopes: List[str]):
        """Build the LangGraph workflow: START -> each suite -> assemble -> END."""
        workflow = StateGraph(VerifyState)
        for name in scopes:
            workflow.add_node(name, self._suite_node(name))
            workflow.add_edge(START, name)
            workflow.add_edge(name, "assemble")
        workflow.add_node("assemble", self._assemble_node)
        workflow.add_edge("assemble", END)
        return workflow.compile()

    def _workflow_for(self, scopes: List[str]):
        key = tuple(scopes)
        if key not in self._workflows:
            self._workflows[key] = self._build_workflow(scopes)
        return self._workflows[key]

    def _suite_node(self, name: str):
        factory = self.suites[name]

        def node(state: VerifyState) -> Dict[str, Any]:
            suite = factory()
            return {"entries": suite.run(), "completed_suites": [name]}

        return node

    def _assemble_node(self, state: VerifyState) -> Dict[str, Any]:
        """Order-stable assembly: entries sorted by check_id."""
        entries = sorted(state.get("entries", []), key=lambda e: e["check_id"])
        passed = sum(1 for e in entries if e["status"] == "pass")
        report = {
            "entries": entries,
            "summary": {"total": len(entries), "passed": passed, "failed": len(entries) - passed},
        }
        return {"report": report}

    def verify(self, scope: str = "all", context: Optional[Dict[str, Any]] = None) -> VerifyReport:
        """
        Run every check within scope.

        Args:
            scope: "all" or one module name
            context: Optional context dictionary carried in the state

        Returns:
            VerifyReport; failures are entries, not exceptions

        Raises:
            ParameterError: If the scope is unknown
            WorkflowError: If the workflow itself breaks
        """
        scopes = self.resolve_scopes(scope)
        initial_state: VerifyState = {
            "scopes": scopes,
            "entries": [],
            "completed_suites": [],
            "report": None,
            "context": context or {},
        }
        try:
            final_state = self._workflow_for(scopes).invoke(initial_state)
        except Exception as e:
            raise WorkflowError(f"Verification workflow failed: {str(e)}") from e

        missing = set(scopes) - set(final_state.get("completed_suites", []))
        if missing or final_state.get("report") is None:
            raise WorkflowError(f"Verification workflow did not complete suites: {sorted(missing)}")

        report = final_state["report"]
        summary = report["summary"]
        logger.info("verify %s: %d checks, %d failed", scope, summary["total"], summary["failed"])
        return VerifyReport(
            scope=scope,
            entries=[CheckEntry(**e) for e in report["entries"]],
            summary=VerifySummary(total=summary["total"], passed=summary["passed"], failed=summary["failed"]),
        )
