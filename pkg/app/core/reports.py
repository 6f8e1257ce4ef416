from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    params: dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    first_failure: str | None = None
    elapsed: float = 0.0  # seconds

    def __post_init__(self):
        if self.passed != (self.first_failure is None):
            raise ValueError("passed must be true exactly when first_failure is absent")


def mismatch(location: str, expected: Any, actual: Any) -> str:
    return f"{location}: expected {expected}, got {actual}"


def run_check(
    check_name: str,
    params: dict[str, Any],
    body: Callable[[], str | None],
) -> VerificationReport:
    """
    Time `body` and wrap its outcome. `body` returns None on success or the
    first failure description.
    """
    started = time.perf_counter()
    failure = body()
    elapsed = time.perf_counter() - started

    if failure is not None:
        logger.warning("check %s %s failed: %s", check_name, params, failure)
    else:
        logger.debug("check %s %s passed in %.3fs", check_name, params, elapsed)

    return VerificationReport(
        check_name=check_name,
        params=dict(params),
        passed=failure is None,
        first_failure=failure,
        elapsed=elapsed,
    )
