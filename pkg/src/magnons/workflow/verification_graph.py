"""LangGraph graph that runs the cross-checks in registry order."""

from typing import Any

from langgraph.graph import END, StateGraph

from magnons import registry
from magnons.workflow.nodes import PLAN_NODE, make_check_node, plan_node
from magnons.workflow.state import VerificationState


def route_to_check(state: VerificationState) -> str:
    """Route to the next check in the sequence."""
    checks_to_run = state.get("checks_to_run", [])
    checks_completed = state.get("checks_completed", [])

    for check in registry.CHECK_ORDER:
        if check in checks_to_run and check not in checks_completed:
            return check

    # All checks completed
    return "end"


def create_verification_graph() -> Any:
    """Create the verification graph.

    A planning node validates the run, then every selected check runs once
    and hands control back to ``route_to_check``.

    Returns:
        Compiled LangGraph StateGraph
    """
    workflow = StateGraph(VerificationState)

    workflow.add_node(PLAN_NODE, plan_node)
    for name in registry.CHECK_ORDER:
        workflow.add_node(name, make_check_node(name))

    workflow.set_entry_point(PLAN_NODE)

    routes = {name: name for name in registry.CHECK_ORDER}
    routes["end"] = END
    for source in [PLAN_NODE, *registry.CHECK_ORDER]:
        workflow.add_conditional_edges(source, route_to_check, routes)

    return workflow.compile()
