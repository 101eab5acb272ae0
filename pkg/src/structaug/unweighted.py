"""Linear-time feasibility tests and explicit constructions for the unweighted problems.

Connectivity (k=1) is decided from component counts.  For k=2 the bound is the
number of pendant blocks, with a single exceptional family: odd stars paired
with matching graphs.  Every construction is checked on the resulting
superposition before it is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .connect import lift_solution, strip_isolated
from .graph import (
    Graph,
    GraphError,
    Mapping,
    BlockDecomposition,
    add_edges,
    block_decomposition,
    component_labels,
    components,
    dfs_preorder,
    is_k_edge_connected,
    superpose,
)


@dataclass(frozen=True)
class PendantRepresentatives:
    reps: Tuple[int, ...]
    blocks: Tuple[int, ...]  # block index of each rep, same order


# ---------------------------------------------------------------------------
# k = 1


def _h_shape(h: Graph) -> Tuple[Graph, List[int], int]:
    core, labels = strip_isolated(h)
    _, r = component_labels(core)
    return core, labels, (r if core.n else 0)


def feasible_connect(g: Graph, h: Graph) -> bool:
    if h.n > g.n:
        return False
    _, c = component_labels(g)
    if c <= 1:
        return True
    core, _, r = _h_shape(h)
    if core.n == 0:
        return False
    i = sum(1 for v in range(g.n) if not g.adj[v])
    if c > core.n - r + 1:
        return False
    return r == 1 or i <= core.n - r


def _bipartite_tree(deg_a: List[int], deg_b: List[int]) -> List[Tuple[int, int]]:
    """A tree between sides A and B realising the given degrees.

    Requires all degrees >= 1 and both sums equal to ``|A| + |B| - 1``.
    """
    da, db = list(deg_a), list(deg_b)
    leaves_a = [x for x in reversed(range(len(da))) if da[x] == 1]
    leaves_b = [y for y in reversed(range(len(db))) if db[y] == 1]
    big_a = [x for x in reversed(range(len(da))) if da[x] >= 2]
    big_b = [y for y in reversed(range(len(db))) if db[y] >= 2]
    out: List[Tuple[int, int]] = []
    while True:
        if leaves_a and big_b:
            x, y = leaves_a.pop(), big_b[-1]
            out.append((x, y))
            db[y] -= 1
            if db[y] == 1:
                leaves_b.append(big_b.pop())
        elif leaves_b and big_a:
            y, x = leaves_b.pop(), big_a[-1]
            out.append((x, y))
            da[x] -= 1
            if da[x] == 1:
                leaves_a.append(big_a.pop())
        else:
            if len(leaves_a) == 1 and len(leaves_b) == 1 and not big_a and not big_b:
                out.append((leaves_a.pop(), leaves_b.pop()))
            break
    if len(out) != len(deg_a) + len(deg_b) - 1:
        raise AssertionError("degree sequences are not realisable as a tree")
    return out


def construct_connect(g: Graph, h: Graph) -> Optional[Mapping]:
    """A mapping whose superposition is connected, or ``None`` when none exists.

    H-components and G-components are joined through a bipartite spanning tree
    whose degrees respect how many vertices each side can offer; isolated
    G-vertices are leaves of that tree.
    """
    if not feasible_connect(g, h):
        return None
    gcomps = components(g)
    core, labels, r = _h_shape(h)
    if len(gcomps) <= 1:
        phi = lift_solution({}, [], h.n, g.n)
    else:
        hcomps = components(core)
        c = len(gcomps)
        # G-side degrees: isolated vertices are leaves; the rest share r-1 extra slots
        deg_g = [1] * c
        extra = r - 1
        for x, comp in enumerate(gcomps):
            if len(comp) > 1 and extra:
                take = min(extra, len(comp) - 1)
                deg_g[x] += take
                extra -= take
        deg_h = [1] * r
        extra = c - 1
        for j, comp in enumerate(hcomps):
            if extra:
                take = min(extra, len(comp) - 1)
                deg_h[j] += take
                extra -= take
        tree = _bipartite_tree(deg_h, deg_g)
        next_h = [0] * r
        next_g = [0] * c
        core_phi: Dict[int, int] = {}
        for j, x in sorted(tree):
            hv = hcomps[j][next_h[j]]
            gv = gcomps[x][next_g[x]]
            next_h[j] += 1
            next_g[x] += 1
            core_phi[hv] = gv
        used = set(core_phi.values())
        free = iter(v for v in range(g.n) if v not in used)
        for hv in range(core.n):
            if hv not in core_phi:
                core_phi[hv] = next(free)
        phi = lift_solution(core_phi, labels, h.n, g.n)
    if not is_k_edge_connected(superpose(g, h, phi), 1):
        raise AssertionError("constructed superposition is not connected")
    return phi


# ---------------------------------------------------------------------------
# k = 2


def pendant_representatives(g: Graph, bd: Optional[BlockDecomposition] = None) -> PendantRepresentatives:
    """One vertex per pendant block, pairwise nonadjacent.

    A nontrivial pendant contributes its smallest vertex off the attaching
    bridge; a trivial one contributes its only vertex.
    """
    if g.n == 2 and g.m == 1:
        raise GraphError("K_2 has no pairwise nonadjacent pendant representatives")
    bd = bd or block_decomposition(g)
    if not bd.bridges:
        raise GraphError("graph is already 2-edge-connected")
    reps, blocks = [], []
    for b in bd.pendant_blocks:
        inside = bd.attach_bridge[b][0]
        members = bd.blocks[b]
        rep = members[0] if len(members) == 1 else next(v for v in members if v != inside)
        reps.append(rep)
        blocks.append(b)
    return PendantRepresentatives(tuple(reps), tuple(blocks))


def is_star(g: Graph) -> bool:
    """True for K_{1,n}, n >= 1."""
    n = g.n - 1
    if n < 1 or g.m != n:
        return False
    # m = n plus a vertex of degree n forces every other vertex to be a leaf
    return max(map(len, g.adj)) == n


def is_matching(h: Graph) -> bool:
    return h.n > 0 and all(h.degree(v) == 1 for v in range(h.n))


def _decompose(g: Graph) -> BlockDecomposition:
    try:
        return block_decomposition(g)
    except GraphError:
        raise GraphError("the 2-connectivity problem needs a connected G") from None


def _feasible_2(g: Graph, core: Graph, n_h: int, bd: BlockDecomposition) -> bool:
    if n_h > g.n:
        return False
    if not bd.bridges:
        return True
    if sum(bd.pendant) > core.n:
        return False
    return not (is_star(g) and g.n % 2 == 0 and is_matching(core))


def feasible_2connect(g: Graph, h: Graph) -> bool:
    core, _, _ = _h_shape(h)
    return _feasible_2(g, core, h.n, _decompose(g))


def leaf_order(g: Graph, bd: Optional[BlockDecomposition] = None) -> List[int]:
    """Pendant blocks in a depth-first order of the bridge tree.

    Bridges are tree edges of any DFS tree of G, so listing blocks by first
    appearance in G's DFS preorder walks the bridge tree depth-first.
    """
    bd = bd or block_decomposition(g)
    seen = [False] * len(bd.blocks)
    order = []
    block_of, pendant = bd.block_of, bd.pendant
    for v in dfs_preorder(g):
        b = block_of[v]
        if not seen[b]:
            seen[b] = True
            if pendant[b]:
                order.append(b)
    return order


def interleaved_positions(length: int) -> List[int]:
    """Leaf positions 0, m, 1, m+1, ... with m = ceil(length / 2).

    Cutting this sequence into consecutive runs of size >= 2 gives a leaf
    partition in which no proper contiguous range of positions is a union of
    runs, so every bridge of the bridge tree is covered.
    """
    m = (length + 1) // 2
    return sorted(range(length), key=lambda i: (i % m, i))


def _ordered_reps(g: Graph, bd: Optional[BlockDecomposition] = None) -> List[int]:
    bd = bd or block_decomposition(g)
    pr = pendant_representatives(g, bd)
    rep_of = dict(zip(pr.blocks, pr.reps))
    return [rep_of[b] for b in leaf_order(g, bd)]


def _bfs_prefix(h: Graph, start: int, size: int) -> List[int]:
    seen = {start}
    order = [start]
    dq = deque([start])
    while dq and len(order) < size:
        u = dq.popleft()
        for w in h.adj[u]:
            if w not in seen and len(order) < size:
                seen.add(w)
                order.append(w)
                dq.append(w)
    return order


def select_subgraph(core: Graph, ell: int) -> List[List[int]]:
    """Vertex groups of ``core`` totalling ``ell`` vertices, each inducing a connected graph of size >= 2.

    Requires ``ell <= core.n`` and either a component with >= 3 vertices or
    ``ell`` even.
    """
    comps = sorted(components(core), key=lambda c: (len(c), c[0]))
    if all(len(c) == 2 for c in comps):
        if ell % 2:
            raise GraphError("a matching cannot cover an odd number of pendants exactly")
        return [list(c) for c in comps[: ell // 2]]
    total, s = 0, 0
    while total + len(comps[s]) < ell:
        total += len(comps[s])
        s += 1
    q = total
    if ell - q >= 2:
        return [list(c) for c in comps[:s]] + [_bfs_prefix(core, comps[s][0], ell - q)]
    if ell == q:
        return [list(c) for c in comps[:s]]
    # ell - q == 1
    prev = comps[s - 1]
    if len(prev) == 2:
        big = next(j for j in range(len(comps) - 1, s - 1, -1) if len(comps[j]) >= 3)
        return [list(c) for c in comps[: s - 1]] + [_bfs_prefix(core, comps[big][0], 3)]
    t = len(prev)
    return [list(c) for c in comps[: s - 1]] + [_bfs_prefix(core, prev[0], t - 1),
                                                 _bfs_prefix(core, comps[s][0], 2)]


def _deal(groups: Sequence[Sequence[int]], reps: Sequence[int]) -> Dict[int, int]:
    pos = interleaved_positions(len(reps))
    out: Dict[int, int] = {}
    p = 0
    for grp in groups:
        for x in grp:
            out[x] = reps[pos[p]]
            p += 1
    if p != len(reps):
        raise AssertionError("groups do not cover every pendant exactly once")
    return out


def map_component(g: Graph, group: Sequence[int]) -> Tuple[Dict[int, int], List[int]]:
    """Place one connected group of H-vertices on pendant representatives.

    Returns the placement and the block indices consumed.  When the number of
    pendants left over is not 1, the pendants of the augmented graph are
    exactly the untouched ones.
    """
    pr = pendant_representatives(g)
    rep_of = dict(zip(pr.blocks, pr.reps))
    order = leaf_order(g)
    pos = interleaved_positions(len(order))
    chosen = [order[pos[i]] for i in range(len(group))]
    return {x: rep_of[b] for x, b in zip(group, chosen)}, chosen


def _odd_matching_step(g: Graph) -> Tuple[int, int]:
    """A pendant representative and a vertex in a block of bridge-degree >= 3, nonadjacent."""
    bd = block_decomposition(g)
    deg = bd.block_degree()
    pr = pendant_representatives(g)
    for b in range(len(bd.blocks)):
        if deg[b] < 3:
            continue
        for rep in pr.reps:
            for u in bd.blocks[b]:
                if u != rep and not g.has_edge(rep, u):
                    return rep, u
    raise AssertionError("no pendant can be joined to a branching block")


def construct_2connect(g: Graph, h: Graph) -> Optional[Mapping]:
    """A mapping whose superposition is 2-edge-connected, or ``None`` when none exists."""
    core, labels, _ = _h_shape(h)
    bd = _decompose(g)
    if not _feasible_2(g, core, h.n, bd):
        return None
    core_phi: Dict[int, int] = {}
    if bd.bridges:
        reps = _ordered_reps(g, bd)
        ell = len(reps)
        if is_matching(core) and ell % 2:
            x, y = core.edges[0]
            rep, u = _odd_matching_step(g)
            core_phi[x], core_phi[y] = rep, u
            g1 = add_edges(g, [(rep, u)])
            reps = _ordered_reps(g1)
            groups = [list(e) for e in core.edges[1: 1 + len(reps) // 2]]
        else:
            groups = select_subgraph(core, ell)
        core_phi.update(_deal(groups, reps))
    used = set(core_phi.values())
    free = iter(v for v in range(g.n) if v not in used)
    for hv in range(core.n):
        if hv not in core_phi:
            core_phi[hv] = next(free)
    phi = lift_solution(core_phi, labels, h.n, g.n)
    if not is_k_edge_connected(superpose(g, h, phi), 2):
        raise AssertionError("constructed superposition is not 2-edge-connected")
    return phi
