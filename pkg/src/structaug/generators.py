"""Seeded instance generators: random families and the three hardness reductions."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .graph import (
    Edge,
    Graph,
    GraphError,
    Mapping,
    WeightFn,
    add_edges,
    complete_graph,
    component_labels,
    is_k_edge_connected,
    matching_graph,
)


@dataclass
class Instance:
    g: Graph
    h: Graph
    omega: WeightFn
    budget: Optional[int] = None
    k: int = 1

    def __post_init__(self) -> None:
        if self.k not in (1, 2):
            raise GraphError(f"k must be 1 or 2, got {self.k}")
        if self.budget is not None and self.budget < 0:
            raise GraphError("budget must be nonnegative")


@dataclass(frozen=True)
class GenParams:
    n_g: int
    n_h: int
    edge_prob: float = 0.3
    weight_max: int = 3
    k: int = 1
    connected_g: bool = False
    h_edge_prob: Optional[float] = None  # defaults to edge_prob


# ---------------------------------------------------------------------------
# random families


def _random_graph(rng: random.Random, n: int, p: float) -> List[Edge]:
    return [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]


def _patch_connected(rng: random.Random, n: int, edges: List[Edge]) -> List[Edge]:
    """Join components by a random spanning tree over one vertex per component."""
    label, count = component_labels(Graph(n, edges))
    if count <= 1:
        return edges
    members: Dict[int, List[int]] = {}
    for v, c in enumerate(label):
        members.setdefault(c, []).append(v)
    reps = [rng.choice(members[c]) for c in range(count)]
    extra = [tuple(sorted((reps[i], reps[rng.randrange(i)]))) for i in range(1, count)]
    return sorted(set(edges) | set(extra))


def gen_random(params: GenParams, seed: int) -> Instance:
    """Random instance; H loses its isolated vertices, weights are uniform in ``0..weight_max``."""
    if params.n_h > params.n_g or params.n_g < 0 or params.n_h < 0:
        raise GraphError("need 0 <= n_h <= n_g")
    if not 0.0 <= params.edge_prob <= 1.0:
        raise GraphError("edge_prob must lie in [0, 1]")
    if params.weight_max < 0:
        raise GraphError("weight_max must be nonnegative")
    rng = random.Random(seed)
    g_edges = _random_graph(rng, params.n_g, params.edge_prob)
    if params.connected_g:
        g_edges = _patch_connected(rng, params.n_g, g_edges)
    hp = params.edge_prob if params.h_edge_prob is None else params.h_edge_prob
    h_edges = _random_graph(rng, params.n_h, hp)
    if not h_edges and params.n_h >= 2:
        h_edges = [tuple(sorted(rng.sample(range(params.n_h), 2)))]
    used = sorted({v for e in h_edges for v in e})
    relabel = {v: i for i, v in enumerate(used)}
    h = Graph(len(used), [(relabel[u], relabel[v]) for u, v in h_edges])
    overrides = {(u, v): rng.randint(0, params.weight_max)
                 for u, v in combinations(range(params.n_g), 2)}
    default = rng.randint(0, params.weight_max)
    return Instance(Graph(params.n_g, g_edges), h, WeightFn(default, overrides), None, params.k)


# ---------------------------------------------------------------------------
# reduction from subgraph isomorphism


def reduce_subgraph_isomorphism(g0: Graph, h0: Graph, k: int) -> Instance:
    """Complete host, weight 0 on edges of ``g0`` and 1 elsewhere, budget 0."""
    if g0.n <= k:
        raise GraphError(f"need more than k={k} vertices in the host")
    overrides = {e: 0 for e in g0.edges}
    return Instance(complete_graph(g0.n), h0, WeightFn(1, overrides), 0, k)


# ---------------------------------------------------------------------------
# reduction from Hamiltonian path on cubic graphs


@dataclass(frozen=True)
class HamLayout:
    """Where the gadget vertices of each original edge live."""

    n: int
    edge_index: Dict[Edge, int] = field(hash=False)

    def end(self, v: int, e: Edge) -> int:
        """The private neighbour of ``v`` created for edge ``e``."""
        i = self.edge_index[e]
        return self.n + 2 * i + (0 if v == e[0] else 1)


def _ham_layout(g0: Graph) -> HamLayout:
    return HamLayout(g0.n, {e: i for i, e in enumerate(g0.edges)})


def reduce_hamiltonian_path(g0: Graph) -> Instance:
    """Disjoint claws, one per vertex of the cubic ``g0``; H is a matching with 2n-1 edges."""
    if any(g0.degree(v) != 3 for v in range(g0.n)):
        raise GraphError("input graph must be cubic")
    lay = _ham_layout(g0)
    n = g0.n
    edges = []
    overrides = {}
    for e in g0.edges:
        u, v = e
        eu, ev = lay.end(u, e), lay.end(v, e)
        edges += [(u, eu), (v, ev)]
        overrides[(u, eu)] = 0
        overrides[(v, ev)] = 0
        overrides[(eu, ev)] = 1
    g = Graph(n + 2 * g0.m, edges)
    return Instance(g, matching_graph(2 * n - 1), WeightFn(2, overrides), n - 1, 1)


def witness_from_ham_path(g0: Graph, path: Sequence[int]) -> Mapping:
    """The injection built from a Hamiltonian path of ``g0`` (weight n-1, connected result)."""
    n = g0.n
    if sorted(path) != list(range(n)):
        raise GraphError("not a Hamiltonian path: vertices missing or repeated")
    for a, b in zip(path, path[1:]):
        if not g0.has_edge(a, b):
            raise GraphError(f"not a Hamiltonian path: {a}-{b} is not an edge")
    lay = _ham_layout(g0)
    path_edges = {tuple(sorted(p)) for p in zip(path, path[1:])}
    phi: Dict[int, int] = {}
    hedge = 0
    for a, b in zip(path, path[1:]):
        e = (min(a, b), max(a, b))
        phi[2 * hedge], phi[2 * hedge + 1] = lay.end(a, e), lay.end(b, e)
        hedge += 1
    for v in range(n):
        spare = next(e for e in g0.edges if v in e and e not in path_edges)
        phi[2 * hedge], phi[2 * hedge + 1] = v, lay.end(v, spare)
        hedge += 1
    return Mapping.from_dict(phi)


# ---------------------------------------------------------------------------
# reduction from weighted tree augmentation


@dataclass(frozen=True)
class AugLayout:
    """Vertex numbering of the gadget built from a tree."""

    t: int
    r: int
    clique: int  # vertices per tree-edge clique
    tree_edges: Tuple[Edge, ...]

    def q(self, e_index: int, j: int) -> int:
        return self.t + e_index * self.clique + j

    def _r_base(self, u: int) -> int:
        return self.t + len(self.tree_edges) * self.clique + u * 2 * self.r

    def x(self, u: int, i: int) -> int:
        return self._r_base(u) + i

    def y(self, u: int, i: int) -> int:
        return self._r_base(u) + self.r + i

    @property
    def n(self) -> int:
        return self._r_base(self.t)


def _is_tree(t: Graph) -> bool:
    if t.n == 0 or t.m != t.n - 1:
        return False
    return component_labels(t)[1] == 1


def aug_layout(tree: Graph, budget: int, k: int = 2) -> AugLayout:
    return AugLayout(tree.n, max(k, budget), k - 1, tree.edges)


def tree_nonedges(tree: Graph) -> List[Edge]:
    return [(u, v) for u, v in combinations(range(tree.n), 2) if not tree.has_edge(u, v)]


def reduce_biconnectivity_augmentation(tree: Graph, cost: Dict[Edge, int], budget: int,
                                       k: int = 2) -> Instance:
    """Gadget whose cheap matchings correspond to augmenting edge sets of ``tree``.

    Each tree edge becomes a clique of k-1 vertices joined to both ends, so
    the gadget is (k-1)-edge-connected with its minimum cuts at tree edges;
    each tree vertex gets a clique of 2r vertices x_1..x_r, y_1..y_r with
    r = max(k, budget).  Placing a matching edge on x^u y^v costs ``cost(uv)``;
    x_i^u y_i^u is free (already an edge); anything else exceeds the budget.
    """
    if k != 2:
        raise GraphError("only k = 2 is supported")
    if not _is_tree(tree):
        raise GraphError("input graph must be a tree")
    if budget < 0:
        raise GraphError("budget must be nonnegative")
    nonedges = tree_nonedges(tree)
    for e in nonedges:
        if cost.get(e) not in (1, 2):
            raise GraphError(f"cost of non-edge {e} must be 1 or 2")
    lay = aug_layout(tree, budget, k)
    edges: List[Edge] = []
    for ei, (u, v) in enumerate(tree.edges):
        qs = [lay.q(ei, j) for j in range(lay.clique)]
        edges += list(combinations(qs, 2))
        edges += [(u, z) for z in qs] + [(v, z) for z in qs]
    for u in range(tree.n):
        rs = [lay.x(u, i) for i in range(lay.r)] + [lay.y(u, i) for i in range(lay.r)]
        edges += list(combinations(rs, 2))
        edges += [(u, z) for z in rs]
    overrides: Dict[Edge, int] = {}
    for u in range(tree.n):
        for i in range(lay.r):
            overrides[(lay.x(u, i), lay.y(u, i))] = 0
    for (u, v) in nonedges:
        for a, b in ((u, v), (v, u)):
            for i in range(lay.r):
                for j in range(lay.r):
                    x, y = lay.x(a, i), lay.y(b, j)
                    overrides[(min(x, y), max(x, y))] = cost[(u, v)]
    g = Graph(lay.n, edges)
    return Instance(g, matching_graph(budget), WeightFn(budget + 1, overrides), budget, k)


def witness_from_augmentation(tree: Graph, budget: int, chosen: Sequence[Edge], k: int = 2) -> Mapping:
    """Injection realising an augmenting edge set: used edges first, the rest parked at zero cost."""
    lay = aug_layout(tree, budget, k)
    if len(chosen) > budget:
        raise GraphError("more augmenting edges than matching edges")
    phi: Dict[int, int] = {}
    for i, (u, v) in enumerate(chosen):
        phi[2 * i], phi[2 * i + 1] = lay.x(u, i), lay.y(v, i)
    for i in range(len(chosen), budget):
        phi[2 * i], phi[2 * i + 1] = lay.x(0, i), lay.y(0, i)
    return Mapping.from_dict(phi)


def brute_force_tree_augmentation(tree: Graph, cost: Dict[Edge, int], budget: int) -> bool:
    """Is there a set of non-edges of total cost <= budget making ``tree`` 2-edge-connected?"""
    nonedges = tree_nonedges(tree)
    for size in range(len(nonedges) + 1):
        for subset in combinations(nonedges, size):
            if sum(cost[e] for e in subset) <= budget and is_k_edge_connected(add_edges(tree, subset), 2):
                return True
    return False


def decide_augmentation_instance(tree: Graph, inst: Instance) -> bool:
    """Exact yes/no for an instance produced by ``reduce_biconnectivity_augmentation``.

    Indices inside one vertex clique can be permuted together without changing
    the graph or the weights, so it suffices to place the costly matching edges
    on the lowest free x and y indices and park the rest on free x_i y_i pairs.
    Placements of positive weight only ever join x^u to y^v for distinct tree
    vertices, so the search ranges over multisets of ordered non-adjacent pairs.
    """
    budget = inst.budget or 0
    lay = aug_layout(tree, budget, inst.k)
    ordered = [(u, v) for u, v in combinations(range(tree.n), 2) if not tree.has_edge(u, v)]
    ordered += [(v, u) for u, v in ordered]
    for j in range(budget + 1):
        for pick in combinations_with_replacement(ordered, j):
            weight = sum(inst.omega(lay.x(u, 0), lay.y(v, 0)) for u, v in pick)
            if weight > budget:
                continue
            nx_ = [0] * tree.n
            ny_ = [0] * tree.n
            extra = []
            ok = True
            for u, v in pick:
                if nx_[u] >= lay.r or ny_[v] >= lay.r:
                    ok = False
                    break
                extra.append((lay.x(u, nx_[u]), lay.y(v, ny_[v])))
                nx_[u] += 1
                ny_[v] += 1
            if not ok:
                continue
            parking = sum(lay.r - max(nx_[u], ny_[u]) for u in range(tree.n))
            if parking < budget - j:
                continue
            if is_k_edge_connected(add_edges(inst.g, extra), 2):
                return True
    return False


def all_trees(max_n: int) -> List[Graph]:
    """One representative of every unlabeled tree with 1..max_n vertices (max_n <= 4)."""
    if max_n > 4:
        raise GraphError("tree catalogue only goes up to 4 vertices")
    out = [Graph(1), Graph(2, [(0, 1)]), Graph(3, [(0, 1), (1, 2)]),
           Graph(4, [(0, 1), (1, 2), (2, 3)]), Graph(4, [(0, 1), (0, 2), (0, 3)])]
    return [t for t in out if t.n <= max_n]


__all__ = [
    "AugLayout",
    "GenParams",
    "HamLayout",
    "Instance",
    "all_trees",
    "aug_layout",
    "brute_force_tree_augmentation",
    "decide_augmentation_instance",
    "gen_random",
    "reduce_biconnectivity_augmentation",
    "reduce_hamiltonian_path",
    "reduce_subgraph_isomorphism",
    "tree_nonedges",
    "witness_from_augmentation",
    "witness_from_ham_path",
]
