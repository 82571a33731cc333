"""State schema for the verification graph."""

from typing import Any, Dict, List, Optional, TypedDict


class CheckOutcome(TypedDict):
    """Result of one check at one system size."""

    check: str
    n: Optional[int]  # None for size-independent checks
    passed: bool
    failures: List[str]


class VerificationState(TypedDict):
    """State schema for the verification graph."""

    # Run parameters
    n_max: int
    cap: int
    max_workers: Optional[int]

    # Routing
    checks_to_run: List[str]
    checks_completed: List[str]

    # Results
    outcomes: List[CheckOutcome]
    errors: List[str]

    # Free-form extras (seed for randomized checks, ...)
    settings: Dict[str, Any]
