from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations
from typing import List, Optional

from hypothesis import strategies as st

from structaug.graph import Graph, WeightFn, is_connected, minimum_vertex_cover


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_weights(rng: random.Random, n: int, hi: int = 3) -> WeightFn:
    return WeightFn(rng.randint(0, hi), {e: rng.randint(0, hi) for e in combinations(range(n), 2)})


def small_weighted_instance(rng: random.Random, *, max_g: int = 7, max_h: int = 5, max_cover: int = 2,
                            connected: bool = False):
    """Rejection-sample (G, H, omega) with H isolate-free and a vertex cover of H within ``max_cover``."""
    while True:
        ng = rng.randint(2, max_g)
        nh = rng.randint(2, min(max_h, ng))
        g = random_graph(rng, ng, rng.random() * 0.7)
        if connected and not is_connected(g):
            continue
        h = random_graph(rng, nh, 0.2 + 0.8 * rng.random())
        if h.m == 0 or h.isolated_vertices():
            continue
        if minimum_vertex_cover(h, max_cover) is None:
            continue
        return g, h, random_weights(rng, ng)


def _canonical(n: int, edges) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> List[Graph]:
    """One graph per isomorphism class on exactly ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        edges = [e for i, e in enumerate(pairs) if mask >> i & 1]
        key = _canonical(n, edges)
        if key not in seen:
            seen[key] = Graph(n, key)
    return list(seen.values())


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8, connected: Optional[bool] = None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    if connected:
        # splice a spanning path so the graph is connected
        order = draw(st.permutations(range(n))) if n else []
        edges = sorted({tuple(sorted(e)) for e in edges} | {tuple(sorted((order[i], order[i + 1])))
                                                           for i in range(n - 1)})
    return Graph(n, edges)


# acceptance verdicts, echoed at the end of the pytest run
ACCEPTANCE: List[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
