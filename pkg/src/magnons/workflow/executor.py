"""Runs the verification graph with progress tracking."""

import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from magnons import registry
from magnons.config import env
from magnons.errors import InvalidSizeError, ResourceLimitError
from magnons.workflow.report import VerificationReport
from magnons.workflow.state import VerificationState
from magnons.workflow.verification_graph import create_verification_graph

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[str, str], None]


class VerificationExecutor:
    """Executes the verification graph and reports progress per check."""

    def __init__(self, graph: Optional[Any] = None):
        self.graph = graph or create_verification_graph()
        self.progress_callback: Optional[ProgressCallback] = None

    def set_progress_callback(self, callback: ProgressCallback) -> None:
        """Set a callback function that receives (stage, message) updates."""
        self.progress_callback = callback

    def _notify_progress(self, stage: str, message: str) -> None:
        if self.progress_callback:
            self.progress_callback(stage, message)
        else:
            print(f"[{stage}] {message}", file=sys.stderr)

    def execute(self, state: VerificationState) -> VerificationState:
        """Stream the graph to completion and return the final state."""
        self._notify_progress("start", f"Verifying N=2..{state['n_max']}")
        reported: set = set()
        final: Dict[str, Any] = dict(state)
        try:
            for snapshot in self.graph.stream(state, stream_mode="values"):
                final = snapshot
                for name in snapshot.get("checks_completed", []):
                    if name in reported:
                        continue
                    reported.add(name)
                    failed = [
                        o for o in snapshot["outcomes"] if o["check"] == name and not o["passed"]
                    ]
                    status = "ok" if not failed else f"{len(failed)} failing"
                    self._notify_progress(name, f"{registry.CHECK_REGISTRY[name].display_name}: {status}")
        except Exception as e:
            self._notify_progress("error", f"Verification failed: {e}")
            raise
        self._notify_progress("complete", "Verification finished")
        return final


def run_verification(
    n_max: int,
    cap: Optional[int] = None,
    checks: Optional[List[str]] = None,
    max_workers: Optional[int] = None,
    seed: int = 20240501,
    progress_callback: Optional[ProgressCallback] = None,
) -> VerificationReport:
    """Run every registered cross-check for N = 2..n_max.

    Raises:
        InvalidSizeError: If ``n_max < 2``.
        ResourceLimitError: If ``n_max`` exceeds the brute-force cap.
    """
    if n_max < 2:
        raise InvalidSizeError(f"n_max must be at least 2, got {n_max}")
    cap = cap if cap is not None else env.brute_force_cap
    if n_max > cap:
        raise ResourceLimitError(f"n_max={n_max} exceeds the brute-force cap {cap}")

    executor = VerificationExecutor()
    if progress_callback is not None:
        executor.set_progress_callback(progress_callback)
    initial = VerificationState(
        n_max=n_max,
        cap=cap,
        max_workers=max_workers,
        checks_to_run=list(checks or []),
        checks_completed=[],
        outcomes=[],
        errors=[],
        settings={"seed": seed},
    )
    final = executor.execute(initial)
    report = VerificationReport(
        n_max=n_max, cap=cap, outcomes=final["outcomes"], errors=final["errors"]
    )
    logger.info("Verification %s", "passed" if report.passed else "failed")
    return report
