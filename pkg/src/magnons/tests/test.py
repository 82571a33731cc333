"""Tests for the shared configuration loader and error hierarchy.

Run:
  python -m magnons.tests.test
"""

import os
import subprocess
import sys
from contextlib import contextmanager
from typing import Iterator, Optional

import magnons
from magnons.config import DEFAULT_BRUTE_FORCE_CAP, EnvLoader
from magnons.errors import (
    InvalidLabelError,
    InvalidPairError,
    MagnonError,
    NumericalInstabilityError,
    ResourceLimitError,
)


@contextmanager
def _env_var(name: str, value: Optional[str]) -> Iterator[None]:
    previous = os.environ.get(name)
    if value is None:
        os.environ.pop(name, None)
    else:
        os.environ[name] = value
    try:
        yield
    finally:
        if previous is None:
            os.environ.pop(name, None)
        else:
            os.environ[name] = previous


def test_env_loader() -> None:
    loader = EnvLoader()
    with _env_var("MAGNONS_BRUTE_FORCE_CAP", "9"):
        assert loader.brute_force_cap == 9
    with _env_var("MAGNONS_BRUTE_FORCE_CAP", "lots"):
        assert loader.brute_force_cap == DEFAULT_BRUTE_FORCE_CAP
    with _env_var("MAGNONS_BRUTE_FORCE_CAP", "0"):
        assert loader.brute_force_cap == DEFAULT_BRUTE_FORCE_CAP
    with _env_var("MAGNONS_MAX_WORKERS", "2"):
        assert loader.max_workers == 2
    with _env_var("MAGNONS_LOG_LEVEL", "debug"):
        assert loader.log_level == "DEBUG"
    print("✅ env loader OK")


def test_error_hierarchy() -> None:
    assert issubclass(InvalidLabelError, ValueError)
    assert issubclass(InvalidPairError, MagnonError)
    assert issubclass(ResourceLimitError, ValueError)
    assert issubclass(NumericalInstabilityError, ArithmeticError)
    assert not issubclass(NumericalInstabilityError, ValueError)
    print("✅ error hierarchy OK")


def _fresh_import(code: str) -> subprocess.CompletedProcess:
    src = os.path.dirname(os.path.dirname(os.path.abspath(magnons.__file__)))
    env = {**os.environ, "PYTHONPATH": os.pathsep.join([src, os.environ.get("PYTHONPATH", "")])}
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)


def test_import_order() -> None:
    light = _fresh_import("import sys, magnons.tableaux; assert 'langgraph' not in sys.modules")
    assert light.returncode == 0, light.stderr
    registry_first = _fresh_import("import magnons.registry, magnons.workflow; print(magnons.run_verification)")
    assert registry_first.returncode == 0, registry_first.stderr
    print("✅ import order OK")


def main() -> None:
    print("\n=== Shared Config Tests ===")
    test_env_loader()
    test_error_hierarchy()
    test_import_order()
    print("\n✅ All shared tests passed.")


if __name__ == "__main__":
    main()
