"""Global numerical tolerances.

Two tolerances are used throughout the package: ``algebra`` for pure
polynomial/linear-algebra identities and ``exp`` for anything that goes
through a matrix exponential or a finite difference.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass, replace
from typing import Iterator


@dataclass(frozen=True)
class Tolerances:
    algebra: float = 1e-9
    exp: float = 1e-6


_current = Tolerances()


def get_tolerances() -> Tolerances:
    return _current


def set_tolerances(algebra: float | None = None, exp: float | None = None) -> Tolerances:
    """Replace the global tolerances and return the previous values."""
    global _current
    previous = _current
    changes = {}
    if algebra is not None:
        changes["algebra"] = float(algebra)
    if exp is not None:
        changes["exp"] = float(exp)
    _current = replace(_current, **changes)
    return previous


@contextlib.contextmanager
def tolerances(algebra: float | None = None, exp: float | None = None) -> Iterator[Tolerances]:
    """Temporarily override the global tolerances."""
    global _current
    previous = set_tolerances(algebra, exp)
    try:
        yield _current
    finally:
        _current = previous


def tol_algebra() -> float:
    return _current.algebra


def tol_exp() -> float:
    return _current.exp
