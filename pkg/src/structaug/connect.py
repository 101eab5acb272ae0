"""Exact minimum-weight placement of H into G making the superposition connected.

The search fixes a minimum vertex cover X of H, guesses a small extension set
Y of non-cover vertices and a placement psi of X u Y that lands in a single
component (resp. block) of the partial superposition, and completes psi with
one minimum-weight saturating matching.  Everything outside X u Y is an
independent set Z whose neighbours all lie in X, so the cost of placing a
vertex of Z depends only on where it goes.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .assignment import AuxBipartite, MatchingResult, min_weight_saturating_matching
from .graph import (
    U64_MAX,
    DisjointSet,
    Graph,
    GraphError,
    Mapping,
    WeightFn,
    add_edges,
    block_decomposition,
    component_labels,
    is_connected,
    is_k_edge_connected,
    minimum_vertex_cover,
    superpose,
)

log = logging.getLogger(__name__)


class CoverTooLarge(ValueError):
    """H has no vertex cover within the requested bound."""


@dataclass(frozen=True)
class Solution:
    phi: Mapping
    weight: int

    def key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.weight, self.phi.images()


@dataclass(frozen=True)
class AnchorContext:
    X: Tuple[int, ...]
    Y: Tuple[int, ...]
    Z: Tuple[int, ...]
    psi: Dict[int, int]
    R: int


@dataclass(frozen=True)
class ComponentSplit:
    F0: Tuple[int, ...]
    others: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Extension:
    """Outcome of completing one anchor placement by matching."""

    solution: Solution
    matching: MatchingResult
    split: ComponentSplit
    big: int


def _check_u64(x: int) -> int:
    if x > U64_MAX:
        raise OverflowError("weight exceeds 64-bit range")
    return x


# ---------------------------------------------------------------------------
# enumeration of anchors


def enumerate_anchor_sets(h: Graph, cover: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Every Y outside the cover with ``|Y| <= 2(|X|-1)``, size-then-lex."""
    xs = set(cover)
    rest = [v for v in range(h.n) if v not in xs]
    limit = min(max(0, 2 * (len(xs) - 1)), len(rest))
    for size in range(limit + 1):
        yield from combinations(rest, size)


class _BlockTree:
    """Bridge tree of a connected graph, used to merge blocks along new edges."""

    def __init__(self, g: Graph):
        bd = block_decomposition(g)
        self.block_of = bd.block_of
        nb = len(bd.blocks)
        adj: List[List[int]] = [[] for _ in range(nb)]
        for u, v in bd.bridges:
            a, b = bd.block_of[u], bd.block_of[v]
            adj[a].append(b)
            adj[b].append(a)
        self.parent = [-1] * nb
        self.depth = [0] * nb
        seen = [False] * nb
        if nb:
            seen[0] = True
            stack = [0]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        self.parent[y] = x
                        self.depth[y] = self.depth[x] + 1
                        stack.append(y)
        self.size = nb

    def merge_path(self, ds: DisjointSet, a: int, b: int) -> None:
        # union every tree node on the a..b path
        while a != b:
            if self.depth[a] < self.depth[b]:
                a, b = b, a
            p = self.parent[a]
            ds.union(p, a)
            a = p


def enumerate_anchor_embeddings(g: Graph, h: Graph, anchors: Sequence[int],
                                same: str = "component") -> Iterator[Dict[int, int]]:
    """Injective placements of ``anchors`` whose images share a component/block.

    The component or block is taken in ``g`` plus the images of the edges of
    ``h`` induced on ``anchors``.  Placements come in lexicographic order of
    the image tuple (anchors in the given order).
    """
    if same not in ("component", "block"):
        raise ValueError("same must be 'component' or 'block'")
    anchors = list(anchors)
    k = len(anchors)
    if k > g.n:
        return
    pos = {a: i for i, a in enumerate(anchors)}
    inner = [(pos[x], pos[y]) for x, y in h.edges if x in pos and y in pos]
    if same == "component":
        label, count = component_labels(g)
        for images in permutations(range(g.n), k):
            ds = DisjointSet(count)
            for i, j in inner:
                ds.union(label[images[i]], label[images[j]])
            root = ds.find(label[images[0]]) if k else 0
            if all(ds.find(label[v]) == root for v in images):
                yield dict(zip(anchors, images))
        return
    if not is_connected(g):
        raise GraphError("block anchoring needs a connected G")
    tree = _BlockTree(g)
    block_of = tree.block_of
    for images in permutations(range(g.n), k):
        ds = DisjointSet(tree.size)
        for i, j in inner:
            a, b = images[i], images[j]
            if g.has_edge(a, b):
                continue
            tree.merge_path(ds, block_of[a], block_of[b])
        root = ds.find(block_of[images[0]]) if k else 0
        if all(ds.find(block_of[v]) == root for v in images):
            yield dict(zip(anchors, images))


# ---------------------------------------------------------------------------
# shared helpers


def strip_isolated(h: Graph) -> Tuple[Graph, List[int]]:
    """Drop isolated vertices; returns the core graph and core->original labels."""
    keep = [v for v in range(h.n) if h.adj[v]]
    core, labels = h.induced(keep)
    return core, labels


def anchor_weight(h: Graph, psi: Dict[int, int], omega: WeightFn) -> int:
    return sum(omega(psi[x], psi[y]) for x, y in h.edges if x in psi and y in psi)


def partial_superposition(g: Graph, h: Graph, psi: Dict[int, int]) -> Graph:
    return add_edges(g, [(psi[x], psi[y]) for x, y in h.edges if x in psi and y in psi])


def placement_cost(h: Graph, psi: Dict[int, int], omega: WeightFn, z: int, v: int) -> int:
    """Weight added by placing the non-anchor ``z`` on ``v``.

    All neighbours of ``z`` are anchors, so this is the sum of ``omega`` over
    the images of its neighbours paired with ``v``.
    """
    return sum(omega(psi[x], v) for x in h.adj[z])


def lift_solution(core_phi: Dict[int, int], labels: Sequence[int], n_h: int, n_g: int) -> Mapping:
    """Re-attach stripped isolated vertices on the smallest unused G-vertices."""
    phi = {labels[c]: g for c, g in core_phi.items()}
    used = set(phi.values())
    free = (v for v in range(n_g) if v not in used)
    for x in range(n_h):
        if x not in phi:
            phi[x] = next(free)
    return Mapping.from_dict(phi)


def best_of(solutions: Sequence[Optional[Solution]]) -> Optional[Solution]:
    best = None
    for s in solutions:
        if s is not None and (best is None or s.key() < best.key()):
            best = s
    return best


# ---------------------------------------------------------------------------
# the k = 1 solver


def extend_by_matching(g: Graph, h: Graph, ctx: AnchorContext, omega: WeightFn) -> Optional[Extension]:
    """Cheapest completion of ``ctx.psi`` to a connecting placement, or ``None``."""
    anchor_imgs = set(ctx.psi.values())
    fprime = partial_superposition(g, h, ctx.psi)
    label, count = component_labels(fprime)
    groups: List[List[int]] = [[] for _ in range(count)]
    for v, c in enumerate(label):
        groups[c].append(v)
    c0 = label[next(iter(anchor_imgs))]
    split = ComponentSplit(
        F0=tuple(groups[c0]),
        others=tuple(tuple(grp) for c, grp in enumerate(groups) if c != c0),
    )
    r = len(split.others)
    if r > len(ctx.Z):
        return None
    free = [v for v in range(g.n) if v not in anchor_imgs]
    w = {(z, v): placement_cost(h, ctx.psi, omega, z, v) for z in ctx.Z for v in free}
    big = max(w.values(), default=0) + 1

    left = [("v", v) for v in free]
    right: List[tuple] = [("z", z) for z in ctx.Z]
    cost: Dict[tuple, int] = {(("v", v), ("z", z)): c for (z, v), c in w.items()}
    f0_free = [v for v in split.F0 if v not in anchor_imgs]
    pads = [(0, f0_free)] + [(i + 1, list(comp)) for i, comp in enumerate(split.others)]
    for idx, verts in pads:
        n_pad = len(verts) - 1 if idx else len(split.F0) - len(ctx.psi)
        for k in range(n_pad):
            s = ("s", idx, k)
            right.append(s)
            for v in verts:
                cost[(("v", v), s)] = big
    aux = AuxBipartite(left, right, cost, big)
    m = min_weight_saturating_matching(aux, "left", lexicographic=False)
    if m is None:
        return None
    phi = dict(ctx.psi)
    extra = 0
    for (_, v), (tag, *rest) in m.pairs:
        if tag == "z":
            z = rest[0]
            phi[z] = v
            extra += w[(z, v)]
    if len(phi) != h.n:
        # a padding vertex displaced some z: only possible if BIG failed to dominate
        raise AssertionError("matching left a non-anchor vertex unplaced")
    placed = {phi[z] for z in ctx.Z}
    if any(placed.isdisjoint(comp) for comp in split.others):
        raise AssertionError("matching left a component without a placed vertex")
    weight = _check_u64(ctx.R + extra)
    return Extension(Solution(Mapping.from_dict(phi), weight), m, split, big)


def _cover(h: Graph, t_max: Optional[int]) -> List[int]:
    cover = minimum_vertex_cover(h, t_max)
    if cover is None:
        raise CoverTooLarge(f"H has no vertex cover of size <= {t_max}")
    return cover


def _branches_for_y(args) -> Optional[Solution]:
    g, h, omega, cover, ys, mode, extender = args
    best: Optional[Solution] = None
    for y in ys:
        anchors = sorted(set(cover) | set(y))
        z = tuple(v for v in range(h.n) if v not in set(anchors))
        for psi in enumerate_anchor_embeddings(g, h, anchors, mode):
            r = anchor_weight(h, psi, omega)
            if best is not None and r > best.weight:
                continue
            ctx = AnchorContext(tuple(cover), tuple(y), z, psi, r)
            sol = extender(g, h, ctx, omega)
            if sol is not None and (best is None or sol.key() < best.key()):
                best = sol
    return best


def _extend_connect(g: Graph, h: Graph, ctx: AnchorContext, omega: WeightFn) -> Optional[Solution]:
    ext = extend_by_matching(g, h, ctx, omega)
    return None if ext is None else ext.solution


def search_branches(g: Graph, h: Graph, omega: WeightFn, cover: Sequence[int], mode: str,
                    extender: Callable, parallel: int = 1) -> Optional[Solution]:
    """Minimise over all (Y, psi) branches; result independent of ``parallel``."""
    ys = list(enumerate_anchor_sets(h, cover))
    if parallel <= 1 or len(ys) <= 1:
        return _branches_for_y((g, h, omega, cover, ys, mode, extender))
    chunks = [ys[i::parallel] for i in range(parallel)]
    jobs = [(g, h, omega, cover, c, mode, extender) for c in chunks if c]
    with ProcessPoolExecutor(max_workers=parallel) as ex:
        results = list(ex.map(_branches_for_y, jobs))
    return best_of(results)


def solve_connect(g: Graph, h: Graph, omega: WeightFn, *, t_max: Optional[int] = None,
                  parallel: int = 1) -> Optional[Solution]:
    """Minimum-weight injection making ``g (+) h`` connected; ``None`` if impossible."""
    if h.n > g.n:
        return None
    core, labels = strip_isolated(h)
    if core.m == 0:
        if not is_connected(g):
            return None
        return Solution(lift_solution({}, [], h.n, g.n), 0)
    cover = _cover(core, t_max)
    log.debug("cover %s of size %d", cover, len(cover))
    best = search_branches(g, core, omega, cover, "component", _extend_connect, parallel)
    if best is None:
        return None
    phi = lift_solution(best.phi.as_dict(), labels, h.n, g.n)
    sol = Solution(phi, best.weight)
    assert is_k_edge_connected(superpose(g, h, phi), 1)
    assert omega.mapping_weight(h, phi) == sol.weight
    return sol


def decide_connect(g: Graph, h: Graph, omega: WeightFn, budget: int, **kw) -> bool:
    sol = solve_connect(g, h, omega, **kw)
    return sol is not None and sol.weight <= budget


__all__ = [
    "AnchorContext",
    "ComponentSplit",
    "CoverTooLarge",
    "Extension",
    "Solution",
    "decide_connect",
    "enumerate_anchor_embeddings",
    "enumerate_anchor_sets",
    "extend_by_matching",
    "solve_connect",
]
