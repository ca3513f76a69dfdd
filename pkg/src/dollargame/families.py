"""Named game instances: the worked example, two extremal families, random draws.

The star and clique-with-pendants families realize the worst greedy-to-optimal
ratios the move-count bound allows, so they double as tightness fixtures. Both
carry a negative total and are therefore played on the chip side (stabilize);
the worked example is a winnable dollar game.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from .graph import Divisor, Graph, GraphError, build_graph


class InstanceFormatError(ValueError):
    """Malformed instance JSON; the message names the offending path."""


class UnsatisfiableError(RuntimeError):
    """Random generation failed to produce a connected graph within retries."""


@dataclass(frozen=True)
class Expected:
    """Known analytics for a generated instance, on the stated side."""

    m0: int
    m_min: int
    ratio: Fraction
    side: str

    def to_dict(self) -> dict:
        return {
            "m0": self.m0,
            "m_min": self.m_min,
            "ratio": {"num": self.ratio.numerator, "den": self.ratio.denominator},
            "side": self.side,
        }


@dataclass(frozen=True)
class Instance:
    """A graph plus starting divisor, optionally with known analytics."""

    graph: Graph
    divisor: Divisor
    name: Optional[str] = None
    expected: Optional[Expected] = None

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "name": self.name,
            "num_vertices": self.graph.num_vertices,
            "edges": [[u, v] for u, v in self.graph.edges],
            "divisor": list(self.divisor),
        }
        if self.expected is not None:
            out["expected"] = self.expected.to_dict()
        return out


def _expect_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceFormatError(f"{path}: expected an integer, got {value!r}")
    return value


def instance_from_dict(data: Any) -> Instance:
    """Parse the instance JSON contract, naming the bad path on failure."""
    if not isinstance(data, dict):
        raise InstanceFormatError(f"$: expected an object, got {type(data).__name__}")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise InstanceFormatError("name: expected a string or null")
    if "num_vertices" not in data:
        raise InstanceFormatError("num_vertices: missing")
    n = _expect_int(data["num_vertices"], "num_vertices")
    edges_raw = data.get("edges")
    if not isinstance(edges_raw, list):
        raise InstanceFormatError("edges: expected a list of vertex pairs")
    edges = []
    for idx, e in enumerate(edges_raw):
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise InstanceFormatError(f"edges[{idx}]: expected a pair [u, v]")
        edges.append((_expect_int(e[0], f"edges[{idx}][0]"),
                      _expect_int(e[1], f"edges[{idx}][1]")))
    divisor_raw = data.get("divisor")
    if not isinstance(divisor_raw, list):
        raise InstanceFormatError("divisor: expected a list of integers")
    divisor = tuple(_expect_int(x, f"divisor[{i}]") for i, x in enumerate(divisor_raw))
    try:
        g = build_graph(n, edges)
    except GraphError as exc:
        raise InstanceFormatError(f"edges: {exc}") from exc
    if len(divisor) != n:
        raise InstanceFormatError(
            f"divisor: length {len(divisor)} does not match num_vertices {n}")
    return Instance(graph=g, divisor=divisor, name=name)


def intro_example() -> Instance:
    """Six-vertex winnable dollar game used throughout the docs and tests.

    Greedy needs 4 borrows; a single lend at the degree-2 vertex wins.
    """
    g = build_graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 5),
                        (2, 3), (3, 5), (4, 5)])
    return Instance(
        graph=g,
        divisor=(-1, 0, 2, 0, 2, 3),
        name="intro",
        expected=Expected(m0=4, m_min=1, ratio=Fraction(4), side="dollar"),
    )


def star_example(n: int, k: int) -> Instance:
    """Star on n vertices: center (index 0) owes n*k, each of n-1 leaves holds k.

    Greedy stabilization fires every leaf k times ((n-1)k moves); borrowing
    k times at the center does the same job, so greedy overpays by exactly
    the factor n-1 the bound allows.
    """
    if n < 3:
        raise ValueError(f"star family needs n >= 3, got {n}")
    if k < 1:
        raise ValueError(f"star family needs k >= 1, got {k}")
    g = build_graph(n, [(0, i) for i in range(1, n)])
    divisor = (-n * k,) + (k,) * (n - 1)
    return Instance(
        graph=g,
        divisor=divisor,
        name=f"star(n={n},k={k})",
        expected=Expected(m0=(n - 1) * k, m_min=k, ratio=Fraction(n - 1), side="chip"),
    )


def hybrid_example(n: int, k: int) -> Instance:
    """Clique-with-pendants on n+1 vertices; greedy overpays by the factor n/2.

    Vertex 0 is a hub owing n*k, joined to an (n/2)-clique (vertices
    1..n/2, holding 0) and to n/2 pendant vertices (each holding k). Greedy
    stabilization fires each pendant k times; k borrows at the hub reach a
    different stable divisor in k moves.
    """
    if n < 4 or n % 2 != 0:
        raise ValueError(f"hybrid family needs even n >= 4, got {n}")
    if k < 1:
        raise ValueError(f"hybrid family needs k >= 1, got {k}")
    half = n // 2
    edges = [(i, j) for i in range(1, half + 1) for j in range(i + 1, half + 1)]
    edges += [(0, i) for i in range(1, n + 1)]
    g = build_graph(n + 1, edges)
    divisor = (-n * k,) + (0,) * half + (k,) * half
    return Instance(
        graph=g,
        divisor=divisor,
        name=f"hybrid(n={n},k={k})",
        expected=Expected(m0=half * k, m_min=k, ratio=Fraction(half), side="chip"),
    )


def random_instance(n: int, edge_probability: float, chip_range: tuple[int, int],
                    seed: int, max_retries: int = 1000) -> Instance:
    """Seeded Erdos-Renyi draw, resampled until connected, with uniform chips."""
    if n < 2:
        raise ValueError(f"random instance needs n >= 2, got {n}")
    if not 0 < edge_probability <= 1:
        raise ValueError(f"edge probability must be in (0, 1], got {edge_probability}")
    lo, hi = chip_range
    if lo > hi:
        raise ValueError(f"empty chip range [{lo}, {hi}]")
    rng = random.Random(seed)
    for _ in range(max_retries):
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < edge_probability]
        try:
            g = build_graph(n, edges)
        except GraphError:
            continue
        divisor = tuple(rng.randint(lo, hi) for _ in range(n))
        return Instance(
            graph=g,
            divisor=divisor,
            name=f"random(n={n},p={edge_probability},seed={seed})",
        )
    raise UnsatisfiableError(
        f"no connected graph on {n} vertices with p={edge_probability} "
        f"after {max_retries} draws")
