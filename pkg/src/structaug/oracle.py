"""Brute-force ground truth over all injections, plus a global min-cut routine."""

from __future__ import annotations

from itertools import permutations
from math import perm
from typing import List, Optional

from .connect import Solution
from .graph import (
    DisjointSet,
    Graph,
    GraphError,
    Mapping,
    WeightFn,
    component_labels,
    find_bridges,
)

DEFAULT_CAP = 10 ** 8


class OracleTooLarge(RuntimeError):
    """The number of injections exceeds the configured cap."""


def injection_count(n_g: int, n_h: int) -> int:
    return perm(n_g, n_h) if n_h <= n_g else 0


def _check_cap(g: Graph, h: Graph, cap: int) -> None:
    count = injection_count(g.n, h.n)
    if count > cap:
        raise OracleTooLarge(f"too large for oracle: {count} injections > cap {cap}")


def _accepts(g: Graph, h: Graph, images, k: int, label, count) -> bool:
    if k == 1:
        if count <= 1:
            return True
        ds = DisjointSet(count)
        for x, y in h.edges:
            ds.union(label[images[x]], label[images[y]])
        return ds.count == 1
    extra = [(images[x], images[y]) for x, y in h.edges]
    f = Graph(g.n, list(g.edges) + extra, strict=False)
    if f.n <= 1:
        return True
    _, c = component_labels(f)
    return c == 1 and not find_bridges(f)


def brute_force_optimum(g: Graph, h: Graph, omega: WeightFn, k: int, *,
                        cap: int = DEFAULT_CAP, visits: Optional[List[int]] = None) -> Optional[Solution]:
    """Lexicographically first minimum-weight injection reaching ``k``-edge-connectivity.

    ``visits``, if given, receives the number of injections enumerated.
    """
    if k not in (1, 2):
        raise GraphError("oracle supports k in {1, 2}")
    if h.n > g.n:
        return None
    _check_cap(g, h, cap)
    label, count = component_labels(g)
    best_w: Optional[int] = None
    best_img = None
    seen = 0
    for images in permutations(range(g.n), h.n):
        seen += 1
        w = sum(omega(images[x], images[y]) for x, y in h.edges)
        if best_w is not None and w >= best_w:
            continue
        if _accepts(g, h, images, k, label, count):
            best_w, best_img = w, images
    if visits is not None:
        visits.append(seen)
    if best_img is None:
        return None
    return Solution(Mapping.from_sequence(best_img), best_w)


def brute_force_feasible(g: Graph, h: Graph, k: int, *, cap: int = DEFAULT_CAP) -> bool:
    if k not in (1, 2):
        raise GraphError("oracle supports k in {1, 2}")
    if h.n > g.n:
        return False
    _check_cap(g, h, cap)
    label, count = component_labels(g)
    return any(_accepts(g, h, images, k, label, count)
               for images in permutations(range(g.n), h.n))


def edge_connectivity(g: Graph) -> int:
    """Global minimum edge cut by Stoer-Wagner (0 when disconnected)."""
    n = g.n
    if n <= 1:
        return 0
    _, c = component_labels(g)
    if c > 1:
        return 0
    w = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        w[u][v] = w[v][u] = 1
    active = list(range(n))
    best = None
    while len(active) > 1:
        weights = {v: 0 for v in active}
        added: List[int] = []
        remaining = set(active)
        prev = last = active[0]
        while remaining:
            nxt = max(remaining, key=lambda v: (weights[v], -v))
            remaining.discard(nxt)
            added.append(nxt)
            prev, last = last, nxt
            for v in remaining:
                weights[v] += w[nxt][v]
        cut = weights[last]
        if best is None or cut < best:
            best = cut
        # merge last into prev
        for v in active:
            w[prev][v] += w[last][v]
            w[v][prev] = w[prev][v]
        w[prev][prev] = 0
        active.remove(last)
    return best
