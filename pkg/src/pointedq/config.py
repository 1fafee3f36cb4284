"""Runtime limits shared by the arithmetic and rewriting layers."""

import os
from dataclasses import dataclass, replace

DEFAULT_TERM_LIMIT = 100_000


class ResourceLimitError(RuntimeError):
    """Raised when a computation exceeds a configured size guard."""


class ConsistencyError(RuntimeError):
    """Raised when an internal cross-check fails (e.g. a non-reduced word)."""


@dataclass(frozen=True)
class Limits:
    term_limit: int = DEFAULT_TERM_LIMIT
    nichols_degree: int = 5
    isom_bound: int = 3
    group_window: int = 2
    allow_b2: bool = True
    allow_rank3: bool = False

    def with_(self, **kw) -> "Limits":
        return replace(self, **kw)


def _from_env() -> Limits:
    raw = os.environ.get("POINTEDQ_TERM_LIMIT")
    if raw is None:
        return Limits()
    value = int(raw)
    if value <= 0:
        raise ValueError("POINTEDQ_TERM_LIMIT must be positive")
    return Limits(term_limit=value)


LIMITS = _from_env()


def set_limits(limits: Limits) -> None:
    global LIMITS
    LIMITS = limits


def term_limit() -> int:
    return LIMITS.term_limit
