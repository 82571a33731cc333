"""Shared test utilities.

The test modules are plain functions with asserts so that each one runs both
under pytest and as ``python -m magnons.<package>.test``.
"""

from typing import Any, Callable, Type

import numpy as np

DEFAULT_SEED = 20240501


def expect_error(error: Type[BaseException], fn: Callable[..., Any], *args: Any, **kwargs: Any) -> BaseException:
    """Call ``fn`` and return the raised exception, failing if it is not ``error``."""
    try:
        fn(*args, **kwargs)
    except error as e:
        return e
    raise AssertionError(f"{getattr(fn, '__name__', fn)} did not raise {error.__name__}")


def assert_close(actual: Any, expected: Any, atol: float = 1e-12) -> None:
    np.testing.assert_allclose(np.asarray(actual), np.asarray(expected), rtol=0, atol=atol)


def seeded_rng(seed: int = DEFAULT_SEED) -> np.random.Generator:
    return np.random.default_rng(seed)
