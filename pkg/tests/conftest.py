"""Shared fixtures: hypothesis strategies for graphs, the random corpus."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from dollargame import (GameTrace, Instance, borrowing_binge, build_graph,
                        random_instance)

CORPUS_SIZE = 200


@st.composite
def connected_graphs(draw, max_n: int = 7):
    """Random connected simple graph: spanning tree plus extra edges."""
    n = draw(st.integers(2, max_n))
    perm = draw(st.permutations(range(n)))
    edges = set()
    for idx in range(1, n):
        j = draw(st.integers(0, idx - 1))
        u, v = perm[idx], perm[j]
        edges.add((min(u, v), max(u, v)))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for extra in draw(st.lists(st.sampled_from(pairs), max_size=10)):
        edges.add(extra)
    return build_graph(n, sorted(edges))


@st.composite
def graph_with_divisor(draw, max_n: int = 7, lo: int = -9, hi: int = 9):
    g = draw(connected_graphs(max_n))
    c = tuple(draw(st.integers(lo, hi)) for _ in range(g.num_vertices))
    return g, c


def build_corpus(count: int = CORPUS_SIZE):
    """Seeded random instances split into winnable and unwinnable dollar games.

    Deterministic: seeds are consumed in order until `count` winnable
    instances are found; up to 40 unwinnable rejects are kept for the
    duality checks.
    """
    winnable: list[tuple[Instance, GameTrace]] = []
    unwinnable: list[tuple[Instance, GameTrace]] = []
    seed = 0
    while len(winnable) < count:
        n = 2 + seed % 5
        p = 0.3 + 0.1 * ((seed // 5) % 6)
        inst = random_instance(n, round(p, 1), (-3, 3), seed)
        trace = borrowing_binge(inst.graph, inst.divisor, keep_states=False)
        if trace.status == "won":
            winnable.append((inst, trace))
        elif len(unwinnable) < 40:
            unwinnable.append((inst, trace))
        seed += 1
    return winnable, unwinnable


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def winnable_corpus(corpus):
    return corpus[0]


@pytest.fixture(scope="session")
def unwinnable_corpus(corpus):
    return corpus[1]
