"""LangGraph nodes for the verification workflow."""

import logging
from typing import Callable

from magnons import registry
from magnons.errors import InvalidInputError, InvalidSizeError, ResourceLimitError
from magnons.workflow.state import VerificationState

logger = logging.getLogger(__name__)

PLAN_NODE = "plan"


def plan_node(state: VerificationState) -> VerificationState:
    """Validate run parameters and decide which checks to run."""
    new_state = dict(state)
    n_max, cap = state["n_max"], state["cap"]
    if n_max < 2:
        raise InvalidSizeError(f"n_max must be at least 2, got {n_max}")
    if n_max > cap:
        raise ResourceLimitError(f"n_max={n_max} exceeds the brute-force cap {cap}")

    requested = state.get("checks_to_run") or registry.CHECK_ORDER
    unknown = [name for name in requested if name not in registry.CHECK_REGISTRY]
    if unknown:
        raise InvalidInputError(f"Unknown checks: {', '.join(unknown)}")

    new_state["checks_to_run"] = [name for name in registry.CHECK_ORDER if name in requested]
    new_state.setdefault("checks_completed", [])
    new_state.setdefault("outcomes", [])
    new_state.setdefault("errors", [])
    new_state.setdefault("settings", {})
    return new_state


def make_check_node(name: str) -> Callable[[VerificationState], VerificationState]:
    """Build the graph node that runs the registered check ``name``."""
    check_class = registry.CHECK_REGISTRY[name]

    def check_node(state: VerificationState) -> VerificationState:
        new_state = dict(state)
        check = check_class(cap=state["cap"], settings=state.get("settings"))
        try:
            outcomes = check.run(state)
        except Exception as e:
            logger.exception("Check %s aborted", name)
            new_state["errors"] = state.get("errors", []) + [f"{name}: {e}"]
            outcomes = []
        new_state["outcomes"] = state.get("outcomes", []) + outcomes
        new_state["checks_completed"] = state.get("checks_completed", []) + [name]
        return new_state

    check_node.__name__ = f"{name}_node"
    return check_node
