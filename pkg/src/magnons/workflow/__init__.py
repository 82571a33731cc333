"""Verification workflow: cross-checks wired into a LangGraph graph."""

from magnons.workflow.executor import VerificationExecutor, run_verification
from magnons.workflow.report import VerificationReport
from magnons.workflow.state import CheckOutcome, VerificationState
from magnons.workflow.verification_graph import create_verification_graph, route_to_check

__all__ = [
    "CheckOutcome",
    "VerificationExecutor",
    "VerificationReport",
    "VerificationState",
    "create_verification_graph",
    "route_to_check",
    "run_verification",
]
