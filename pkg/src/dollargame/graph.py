"""Simple connected graphs and integer chip configurations.

A divisor assigns an integer number of chips to every vertex. Lending at a
vertex sends one chip down each incident edge; borrowing is the reverse.
Both are encoded through the graph Laplacian: firing with integer vector v
maps C to C - Lv, so lending vertex i is v = e_i and borrowing is v = -e_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Divisor = tuple[int, ...]
FiringVector = tuple[int, ...]


class GraphError(ValueError):
    """Base class for graph construction and dimension errors."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexIndexError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class DimensionMismatchError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected graph with precomputed degree data.

    Build through :func:`build_graph`; the constructor performs no checks.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]
    neighbors: tuple[tuple[int, ...], ...]

    @property
    def laplacian(self) -> tuple[tuple[int, ...], ...]:
        """Dense Laplacian: degree on the diagonal, -1 per edge."""
        n = self.num_vertices
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = self.degrees[i]
        for u, v in self.edges:
            rows[u][v] = -1
            rows[v][u] = -1
        return tuple(tuple(r) for r in rows)


def build_graph(num_vertices: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and build a simple connected graph on vertices 0..n-1.

    Rejects self-loops, duplicate edges, out-of-range endpoints, and
    disconnected inputs; every error message names the offending item.
    """
    n = num_vertices
    if n < 1:
        raise VertexIndexError(f"num_vertices must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    norm: list[tuple[int, int]] = []
    for e in edges:
        u, v = int(e[0]), int(e[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexIndexError(f"edge ({u}, {v}) endpoint {x} outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        norm.append(key)
    norm.sort()

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in norm:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()

    # connectivity: BFS from vertex 0
    reached = [False] * n
    reached[0] = True
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not reached[y]:
                reached[y] = True
                stack.append(y)
    for i, ok in enumerate(reached):
        if not ok:
            raise DisconnectedGraphError(f"vertex {i} is not reachable from vertex 0")

    return Graph(
        num_vertices=n,
        edges=tuple(norm),
        degrees=tuple(len(a) for a in adj),
        neighbors=tuple(tuple(a) for a in adj),
    )


def _check_dim(g: Graph, vec: Sequence[int], what: str) -> None:
    if len(vec) != g.num_vertices:
        raise DimensionMismatchError(
            f"{what} has length {len(vec)}, graph has {g.num_vertices} vertices"
        )


def canonical_divisor(g: Graph) -> Divisor:
    """Divisor with degree(i) - 1 chips at every vertex."""
    return tuple(d - 1 for d in g.degrees)


def apply_firing(g: Graph, c: Sequence[int], v: Sequence[int]) -> Divisor:
    """Fire integer vector v from configuration c, giving c - Lv."""
    _check_dim(g, c, "divisor")
    _check_dim(g, v, "firing vector")
    out = list(c)
    for i, vi in enumerate(v):
        if vi == 0:
            continue
        out[i] -= vi * g.degrees[i]
        for j in g.neighbors[i]:
            out[j] += vi
    return tuple(out)


def is_effective(c: Sequence[int]) -> bool:
    """True when no vertex is in debt."""
    return all(x >= 0 for x in c)


def is_stable(g: Graph, c: Sequence[int]) -> bool:
    """True when no vertex can afford to lend: c_i <= degree(i) - 1 everywhere."""
    _check_dim(g, c, "divisor")
    return all(x < d for x, d in zip(c, g.degrees))


def dualize(g: Graph, c: Sequence[int]) -> Divisor:
    """Reflect c through the canonical divisor: K - c.

    The reflection swaps effective with stable configurations and exchanges
    the borrowing and lending versions of greedy play.
    """
    _check_dim(g, c, "divisor")
    return tuple(d - 1 - x for x, d in zip(c, g.degrees))


def total_chips(c: Sequence[int]) -> int:
    """Sum of all chip counts; invariant under firing."""
    return sum(c)


def to_dot(g: Graph, c: Sequence[int] | None = None, name: str = "dollar_game") -> str:
    """Graphviz source for the graph, labelling vertices with their chip count.

    Vertices in debt are colored red so rendered snapshots show who still owes.
    """
    lines = [f'graph "{name}" {{']
    for i in range(g.num_vertices):
        if c is None:
            lines.append(f'  {i} [label="{i}"];')
        else:
            attrs = f'label="{i}\\n{c[i]}"'
            if c[i] < 0:
                attrs += ", color=red"
            lines.append(f"  {i} [{attrs}];")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
