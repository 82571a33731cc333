"""Graph loader module for LangGraph that sets up the Python path before importing."""

import os
import sys
from pathlib import Path

# src must be on sys.path before magnons is imported
BASE_DIR = Path(__file__).resolve().parent
SRC_DIR = BASE_DIR / "src"
SRC_DIR_STR = str(SRC_DIR)

if SRC_DIR_STR in sys.path:
    sys.path.remove(SRC_DIR_STR)
sys.path.insert(0, SRC_DIR_STR)

current_pythonpath = os.environ.get("PYTHONPATH", "")
if SRC_DIR_STR not in current_pythonpath.split(os.pathsep):
    os.environ["PYTHONPATH"] = (
        os.pathsep.join([SRC_DIR_STR, current_pythonpath])
        if current_pythonpath
        else SRC_DIR_STR
    )

try:
    from magnons.workflow import create_verification_graph
except ImportError as e:
    raise ImportError(
        f"Failed to import create_verification_graph. "
        f"SRC_DIR in sys.path: {SRC_DIR_STR in sys.path}, "
        f"Error: {e}"
    ) from e

__all__ = ["create_verification_graph"]
