"""Enveloping algebras of Lie algebras of order three."""

from ._lie3 import (
    Algebra,
    AlgebraFileError,
    ExprError,
    builtin_names,
    roby_basis,
    run,
)
from ._lie3 import roby_dim as _roby_dim


def roby_dim(d: int, n: int, k: int) -> int:
    """Dimension of the degree-k part of the n-exterior algebra on d letters."""
    return int(_roby_dim(d, n, k))


__all__ = [
    "Algebra",
    "AlgebraFileError",
    "ExprError",
    "builtin_names",
    "roby_basis",
    "roby_dim",
    "run",
]
