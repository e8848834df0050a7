"""Exact computation and verification for the U-turn lattice model.

Thin Python veneer over the C++ core.  Rationals cross the boundary as
decimal strings ("p/q" or "p") or as the ``Rat`` wrapper; ``fractions.Fraction``
interoperates via ``str``.
"""

from fractions import Fraction

from ._uturn import (
    DomainError,
    ParamPoint,
    PoleError,
    Rat,
    check_exchange,
    closed_form,
    pf,
    sample,
    state_count,
    total_mass,
)

__all__ = [
    "DomainError",
    "Fraction",
    "ParamPoint",
    "PoleError",
    "Rat",
    "check_exchange",
    "closed_form",
    "fraction",
    "pf",
    "sample",
    "state_count",
    "total_mass",
]


def fraction(value: Rat) -> Fraction:
    """Convert a Rat to a fractions.Fraction exactly."""
    return Fraction(int(value.num), int(value.den))
