"""Minimal-L1 representatives of firing vectors modulo the all-ones kernel.

On a connected graph two firing vectors produce the same configuration
change exactly when they differ by a constant vector, so the cheapest way
to realize a net firing is found by shifting every entry by the same k and
minimizing the L1 norm. The optimal shift is a median; this module uses the
lower median (ceil(n/2)-th smallest) and exposes the move-count bound that
follows for nonnegative vectors with a zero entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import FiringVector


class InvalidNError(ValueError):
    """Raised for vertex counts outside a bound's domain."""


@dataclass(frozen=True)
class ShiftAnalysis:
    """Result of minimizing |v - k*1|_1 over integer shifts k."""

    input: FiringVector
    shift: int
    minimal: FiringVector
    input_norm: int
    minimal_norm: int
    positives: int
    negatives: int
    zeros: int

    def to_dict(self) -> dict:
        return {
            "input": list(self.input),
            "shift": self.shift,
            "minimal": list(self.minimal),
            "input_norm": self.input_norm,
            "minimal_norm": self.minimal_norm,
            "positives": self.positives,
            "negatives": self.negatives,
            "zeros": self.zeros,
        }


def minimal_representative(v: Sequence[int]) -> ShiftAnalysis:
    """Shift v by its lower median, the L1-cheapest representative mod 1-shifts.

    At most floor(n/2) entries of the result are positive and at most
    floor(n/2) negative, so no minimal play has a majority of vertices moving
    in the same direction.
    """
    if len(v) == 0:
        raise InvalidNError("firing vector must be non-empty")
    vv = tuple(int(x) for x in v)
    n = len(vv)
    k = sorted(vv)[(n + 1) // 2 - 1]
    minimal = tuple(x - k for x in vv)
    return ShiftAnalysis(
        input=vv,
        shift=k,
        minimal=minimal,
        input_norm=sum(abs(x) for x in vv),
        minimal_norm=sum(abs(x) for x in minimal),
        positives=sum(1 for x in minimal if x > 0),
        negatives=sum(1 for x in minimal if x < 0),
        zeros=sum(1 for x in minimal if x == 0),
    )


def minimal_norm(v: Sequence[int]) -> int:
    """L1 norm of the cheapest representative of v modulo constant shifts."""
    vv = sorted(int(x) for x in v)
    n = len(vv)
    k = vv[(n + 1) // 2 - 1]
    return sum(abs(x - k) for x in vv)


def lower_bound(m0: int, n: int) -> tuple[Fraction, int]:
    """Floor on the optimal move count given the greedy count m0 on n vertices.

    Any winnable game needs at least m0/(n-1) moves; returns the exact
    rational and its ceiling. Tight on the star family, where greedy pays
    (n-1) times the optimum.
    """
    if n < 2:
        raise InvalidNError(f"bound needs at least 2 vertices, got {n}")
    if m0 < 0:
        raise ValueError(f"greedy move count must be >= 0, got {m0}")
    frac = Fraction(m0, n - 1)
    return frac, math.ceil(frac)


def is_coset_minimal(v: Sequence[int]) -> bool:
    """True when v itself is already the cheapest representative of its coset."""
    return sum(abs(int(x)) for x in v) == minimal_norm(v)
