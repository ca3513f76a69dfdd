"""Greedy play for the dollar game and its chip-firing mirror.

The borrowing binge clears debt by repeatedly borrowing on any vertex below
zero; greedy stabilization fires any vertex holding at least its degree.
Both loops are confluent: move count, per-vertex counts, and the final
configuration do not depend on which eligible vertex is picked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .graph import Divisor, FiringVector, Graph, _check_dim, total_chips

DEFAULT_MAX_STEPS = 10**6


class MoveKind(str, Enum):
    LEND = "lend"
    BORROW = "borrow"


@dataclass(frozen=True)
class Move:
    vertex: int
    kind: MoveKind

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "kind": self.kind.value}


@dataclass(frozen=True)
class TieBreakPolicy:
    """How greedy play picks among eligible vertices.

    rule "most_extreme" selects the deepest debtor when borrowing and the
    richest vertex when lending; "seeded_random" draws from a RNG seeded per
    run, so a fixed policy value always replays the same trace.
    """

    rule: str = "lowest_index"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.rule not in ("lowest_index", "highest_index", "most_extreme", "seeded_random"):
            raise ValueError(f"unknown tie-break rule: {self.rule!r}")


LOWEST_INDEX = TieBreakPolicy("lowest_index")
HIGHEST_INDEX = TieBreakPolicy("highest_index")
MOST_EXTREME = TieBreakPolicy("most_extreme")


def seeded_random(seed: int) -> TieBreakPolicy:
    return TieBreakPolicy("seeded_random", seed)


@dataclass(frozen=True)
class GameTrace:
    """Record of one greedy run.

    status is "won" (binge reached an effective divisor), "stable" (greedy
    stabilization finished), or "unwinnable" (a configuration repeated, or
    the total is negative and the step cap ran out; witness holds the
    repeated configuration when one was seen). aggregate is the net firing
    vector: -borrow counts for a binge, +lend counts for stabilization.
    """

    moves: tuple[Move, ...]
    aggregate: FiringVector
    move_count: int
    final: Divisor
    status: str
    states: Optional[tuple[Divisor, ...]] = None
    witness: Optional[Divisor] = None

    def to_dict(self, include_states: bool = False) -> dict:
        out = {
            "moves": [m.to_dict() for m in self.moves],
            "aggregate": list(self.aggregate),
            "move_count": self.move_count,
            "final": list(self.final),
            "status": self.status,
        }
        if include_states and self.states is not None:
            out["states"] = [list(s) for s in self.states]
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


class StepLimitError(RuntimeError):
    """Raised when max_steps ran out before termination or a cycle proof.

    Carries the partial trace (status "step_limit") so callers can report
    how far the run got.
    """

    def __init__(self, trace: GameTrace):
        super().__init__(f"no termination within {trace.move_count} steps")
        self.trace = trace


def detect_cycle(seen: set, state: Divisor) -> bool:
    """True when state was already visited; a revisit proves non-termination."""
    return state in seen


def single_move(g: Graph, c: Sequence[int], move: Move) -> Divisor:
    """Apply one lend or borrow without any legality check (free play)."""
    _check_dim(g, c, "divisor")
    v = move.vertex
    if not 0 <= v < g.num_vertices:
        raise IndexError(f"vertex {v} outside 0..{g.num_vertices - 1}")
    sign = 1 if move.kind is MoveKind.LEND else -1
    out = list(c)
    out[v] -= sign * g.degrees[v]
    for j in g.neighbors[v]:
        out[j] += sign
    return tuple(out)


def _pick(policy: TieBreakPolicy, eligible: list[int], c: tuple[int, ...],
          borrowing: bool, rng: Optional[random.Random]) -> int:
    # eligible is ascending, so index ties resolve low-first for free
    if policy.rule == "lowest_index":
        return eligible[0]
    if policy.rule == "highest_index":
        return eligible[-1]
    if policy.rule == "most_extreme":
        if borrowing:
            return min(eligible, key=lambda i: (c[i], i))
        return min(eligible, key=lambda i: (-c[i], i))
    assert rng is not None
    return rng.choice(eligible)


def _greedy(g: Graph, c: Sequence[int], borrowing: bool, policy: TieBreakPolicy,
            max_steps: int, keep_states: bool) -> GameTrace:
    _check_dim(g, c, "divisor")
    n = g.num_vertices
    cur = tuple(int(x) for x in c)
    counts = [0] * n
    moves: list[Move] = []
    states: list[Divisor] = [cur]
    seen = {cur}
    rng = random.Random(policy.seed) if policy.rule == "seeded_random" else None
    kind = MoveKind.BORROW if borrowing else MoveKind.LEND
    done_status = "won" if borrowing else "stable"
    witness: Optional[Divisor] = None
    status: Optional[str] = None

    for _ in range(max_steps):
        if borrowing:
            eligible = [i for i in range(n) if cur[i] < 0]
        else:
            eligible = [i for i in range(n) if cur[i] >= g.degrees[i]]
        if not eligible:
            status = done_status
            break
        v = _pick(policy, eligible, cur, borrowing, rng)
        nxt = list(cur)
        if borrowing:
            nxt[v] += g.degrees[v]
            for j in g.neighbors[v]:
                nxt[j] -= 1
        else:
            nxt[v] -= g.degrees[v]
            for j in g.neighbors[v]:
                nxt[j] += 1
        cur = tuple(nxt)
        counts[v] += 1
        moves.append(Move(v, kind))
        if keep_states:
            states.append(cur)
        if detect_cycle(seen, cur):
            status = "unwinnable"
            witness = cur
            break
        seen.add(cur)

    sign = -1 if borrowing else 1
    trace = GameTrace(
        moves=tuple(moves),
        aggregate=tuple(sign * k for k in counts),
        move_count=len(moves),
        final=cur,
        status=status if status is not None else "step_limit",
        states=tuple(states) if keep_states else None,
        witness=witness,
    )
    if status is not None:
        return trace
    # Cap ran out. A negative total still proves the binge can never reach an
    # effective divisor, so report that soundly even without a cycle witness.
    if borrowing and total_chips(c) < 0:
        return GameTrace(trace.moves, trace.aggregate, trace.move_count,
                         trace.final, "unwinnable", trace.states, None)
    raise StepLimitError(trace)


def borrowing_binge(g: Graph, c: Sequence[int], policy: TieBreakPolicy = LOWEST_INDEX,
                    max_steps: int = DEFAULT_MAX_STEPS, keep_states: bool = True) -> GameTrace:
    """Borrow on vertices in debt until none remain.

    Returns a trace with status "won" (final divisor effective, move_count is
    the greedy move count) or "unwinnable" (some configuration repeated;
    witness is that configuration). Raises StepLimitError when max_steps runs
    out undecided.
    """
    return _greedy(g, c, True, policy, max_steps, keep_states)


def greedy_stabilize(g: Graph, c: Sequence[int], policy: TieBreakPolicy = LOWEST_INDEX,
                     max_steps: int = DEFAULT_MAX_STEPS, keep_states: bool = True) -> GameTrace:
    """Fire vertices holding at least their degree until the divisor is stable.

    Mirror image of the borrowing binge under c -> K - c; statuses are
    "stable" or "unwinnable" (non-terminating, with a repeated-state witness).
    """
    return _greedy(g, c, False, policy, max_steps, keep_states)
