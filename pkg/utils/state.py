"""State management for the verification workflow."""

import operator
from typing import Annotated, Any, Dict, List, Optional, TypedDict


class VerifyState(TypedDict):
    """State structure for the verification workflow."""

    scopes: List[str]
    # suites run in parallel branches; their entries are concatenated
    entries: Annotated[List[Dict[str, Any]], operator.add]
    completed_suites: Annotated[List[str], operator.add]
    report: Optional[Dict[str, Any]]
    context: Dict[str, Any]
