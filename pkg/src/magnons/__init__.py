"""One-magnon Schur-Weyl states, Robinson-Schensted labels and entangled graphs."""

from typing import Any

__version__ = "0.1.0"

__all__ = ["create_verification_graph", "run_verification"]


def __getattr__(name: str) -> Any:
    # The workflow pulls in langgraph; load it only when asked for.
    if name in __all__:
        from magnons import workflow

        return getattr(workflow, name)
    raise AttributeError(f"module 'magnons' has no attribute {name!r}")
