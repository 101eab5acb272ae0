"""Core graph machinery: simple graphs, superposition, bridges and blocks.

Throughout the package a "block" is a 2-edge-connected component, i.e. a
connected component of ``G - bridges``.  Vertices are ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, depth_first_order

Edge = Tuple[int, int]

U64_MAX = (1 << 64) - 1


class GraphError(ValueError):
    """Raised when a graph, mapping or weight function violates its invariants."""


_BULK = 512  # edge lists longer than this are validated with numpy


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj", "_earr")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), *, strict: bool = True):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if not isinstance(edges, (list, tuple, np.ndarray)):
            edges = list(edges)
        if len(edges) > _BULK or (isinstance(edges, np.ndarray) and len(edges)):
            self._init_bulk(n, edges, strict)
            return
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            key = _norm(u, v)
            if key in seen and strict:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        adj: List[List[int]] = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        self.n = n
        self._earr = None
        self.edges: Tuple[Edge, ...] = tuple(sorted(seen))
        self.adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(a) for a in adj)

    def _init_bulk(self, n: int, edges: Sequence[Sequence[int]], strict: bool) -> None:
        arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        lo = arr.min(axis=1)
        hi = arr.max(axis=1)
        loops = np.nonzero(lo == hi)[0]
        if loops.size:
            raise GraphError(f"self-loop at vertex {int(lo[loops[0]])}")
        bad = np.nonzero((lo < 0) | (hi >= n))[0]
        if bad.size:
            u, v = arr[bad[0]]
            raise GraphError(f"edge ({int(u)}, {int(v)}) out of range for n={n}")
        keys = lo * n + hi
        uniq = np.unique(keys)
        if strict and uniq.size != keys.size:
            srt = np.sort(keys)
            d = int(srt[np.nonzero(srt[1:] == srt[:-1])[0][0]])
            raise GraphError(f"duplicate edge {(d // n, d % n)}")
        lo, hi = uniq // n, uniq % n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        dst_l = dst[order].tolist()
        counts = np.bincount(src, minlength=n).tolist()
        adj = []
        pos = 0
        for c in counts:
            adj.append(tuple(dst_l[pos:pos + c]))
            pos += c
        self.n = n
        self._earr = np.stack([lo, hi], axis=1)
        self.edges = tuple(zip(lo.tolist(), hi.tolist()))
        self.adj = tuple(adj)

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` int64 array (cached)."""
        if self._earr is None:
            self._earr = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        return self._earr

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        # adjacency lists are sorted; a linear scan is fine for the small degrees we meet
        if len(a) > 16:
            from bisect import bisect_left

            i = bisect_left(a, v)
            return i < len(a) and a[i] == v
        return v in a

    def induced(self, vertices: Sequence[int]) -> Tuple["Graph", List[int]]:
        """Induced subgraph, relabelled ``0..len(vertices)-1`` in the given order.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        index = {v: i for i, v in enumerate(vertices)}
        sub = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(vertices), sub), list(vertices)

    def isolated_vertices(self) -> List[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# small constructors used by tests, generators and the CLI


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def matching_graph(edges: int) -> Graph:
    return Graph(2 * edges, [(2 * i, 2 * i + 1) for i in range(edges)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges: List[Edge] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


# ---------------------------------------------------------------------------
# mappings and weights


@dataclass(frozen=True)
class Mapping:
    """Injective partial map from H-vertices to G-vertices.

    ``assignments`` is kept sorted by H-vertex.
    """

    assignments: Tuple[Tuple[int, int], ...]

    def __init__(self, assignments: Iterable[Tuple[int, int]] = ()):
        pairs = tuple(sorted((int(h), int(g)) for h, g in assignments))
        object.__setattr__(self, "assignments", pairs)

    @classmethod
    def from_dict(cls, d: Dict[int, int]) -> "Mapping":
        return cls(d.items())

    @classmethod
    def from_sequence(cls, images: Sequence[int]) -> "Mapping":
        return cls(enumerate(images))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.assignments)

    def images(self) -> Tuple[int, ...]:
        """Images in H-vertex order (meaningful for total mappings)."""
        return tuple(g for _, g in self.assignments)

    def __len__(self) -> int:
        return len(self.assignments)

    def validate(self, n_h: int, n_g: int, *, total: bool = True) -> None:
        hs = [h for h, _ in self.assignments]
        gs = [g for _, g in self.assignments]
        if len(set(hs)) != len(hs):
            raise GraphError("mapping assigns an H-vertex twice")
        if len(set(gs)) != len(gs):
            raise GraphError("mapping is not injective")
        for h, g in self.assignments:
            if not 0 <= h < n_h:
                raise GraphError(f"H-vertex {h} out of range")
            if not 0 <= g < n_g:
                raise GraphError(f"G-vertex {g} out of range")
        if total and len(hs) != n_h:
            raise GraphError(f"mapping covers {len(hs)} of {n_h} H-vertices")


@dataclass(frozen=True)
class WeightFn:
    """Symmetric nonnegative weight on unordered G-vertex pairs."""

    default: int = 0
    overrides: Dict[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.default < 0:
            raise GraphError("negative default weight")
        clean: Dict[Edge, int] = {}
        for (u, v), w in self.overrides.items():
            if u == v:
                raise GraphError(f"weight on degenerate pair ({u}, {v})")
            if w < 0:
                raise GraphError(f"negative weight on ({u}, {v})")
            clean[_norm(u, v)] = int(w)
        object.__setattr__(self, "overrides", clean)

    def __call__(self, u: int, v: int) -> int:
        return self.overrides.get(_norm(u, v), self.default)

    def max_value(self) -> int:
        return max([self.default, *self.overrides.values()])

    def mapping_weight(self, h: Graph, phi: Mapping) -> int:
        img = phi.as_dict()
        total = sum(self(img[x], img[y]) for x, y in h.edges)
        if total > U64_MAX:
            raise OverflowError("mapping weight exceeds 64-bit range")
        return total


# ---------------------------------------------------------------------------
# superposition


def superpose(g: Graph, h: Graph, phi: Mapping) -> Graph:
    """The superposition of ``g`` and ``h`` along the injection ``phi``."""
    phi.validate(h.n, g.n, total=True)
    img = phi.as_dict()
    extra = [(img[x], img[y]) for x, y in h.edges]
    if g.m + len(extra) > _BULK:
        both = np.concatenate([g.edge_array(), np.asarray(extra, dtype=np.int64).reshape(-1, 2)])
        return Graph(g.n, both, strict=False)
    return Graph(g.n, list(g.edges) + extra, strict=False)


def add_edges(g: Graph, extra: Iterable[Edge]) -> Graph:
    return Graph(g.n, list(g.edges) + list(extra), strict=False)


# ---------------------------------------------------------------------------
# connectivity


def component_labels(g: Graph) -> Tuple[List[int], int]:
    """Per-vertex component index (numbered by smallest vertex) and the count."""
    if g.n + g.m > _BULK:
        e = g.edge_array()
        mat = csr_matrix((np.ones(len(e), dtype=np.int8), (e[:, 0], e[:, 1])), shape=(g.n, g.n))
        count, raw = connected_components(mat, directed=False)
        low = np.full(count, g.n, dtype=np.int64)
        np.minimum.at(low, raw, np.arange(g.n, dtype=np.int64))
        rank = np.empty(count, dtype=np.int64)
        rank[np.argsort(low)] = np.arange(count, dtype=np.int64)
        return rank[raw].tolist(), int(count)
    label = [-1] * g.n
    count = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if label[w] < 0:
                    label[w] = count
                    stack.append(w)
        count += 1
    return label, count


def components(g: Graph) -> List[List[int]]:
    label, count = component_labels(g)
    out: List[List[int]] = [[] for _ in range(count)]
    for v, c in enumerate(label):
        out[c].append(v)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or component_labels(g)[1] == 1


def _dfs_forest(g: Graph) -> Tuple[List[int], List[int], List[int], List[int]]:
    """Preorder index, DFS parent, the preorder itself and subtree end (exclusive) per vertex."""
    n = g.n
    adj = g.adj
    pre = [-1] * n
    parent = [-1] * n
    end = [0] * n
    order: List[int] = []
    ptr = [0] * n
    for root in range(n):
        if pre[root] >= 0:
            continue
        pre[root] = len(order)
        order.append(root)
        stack = [root]
        while stack:
            v = stack[-1]
            nbrs = adj[v]
            i = ptr[v]
            k = len(nbrs)
            while i < k and pre[nbrs[i]] >= 0:
                i += 1
            if i < k:
                w = nbrs[i]
                ptr[v] = i + 1
                pre[w] = len(order)
                order.append(w)
                parent[w] = v
                stack.append(w)
            else:
                ptr[v] = i
                end[v] = len(order)
                stack.pop()
    return pre, parent, order, end


def _dfs_tree_bulk(g: Graph):
    """Compiled DFS from vertex 0; ``None`` when the graph is disconnected."""
    n = g.n
    e = g.edge_array()
    rows = np.concatenate([e[:, 0], e[:, 1]])
    cols = np.concatenate([e[:, 1], e[:, 0]])
    mat = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    order, pred = depth_first_order(mat, 0, directed=False, return_predecessors=True)
    if len(order) < n:
        return None
    parent = np.where(pred < 0, -1, pred).astype(np.int64)
    pre = np.empty(n, dtype=np.int64)
    pre[order] = np.arange(n, dtype=np.int64)
    size = [1] * n
    pl = parent.tolist()
    for v in reversed(order.tolist()):
        p = pl[v]
        if p >= 0:
            size[p] += size[v]
    end = pre + np.asarray(size, dtype=np.int64)
    return pre, parent, order.astype(np.int64), end


def dfs_preorder(g: Graph) -> List[int]:
    """Vertices in depth-first preorder (roots taken in increasing order)."""
    if g.n + g.m > _BULK:
        bulk = _dfs_tree_bulk(g)
        if bulk is not None:
            return bulk[2].tolist()
    return _dfs_forest(g)[2]


def _range_extreme(values: np.ndarray, lo: np.ndarray, hi: np.ndarray, op) -> np.ndarray:
    """``op``-reduction of ``values[lo:hi]`` for every query, via a sparse table."""
    table = [values]
    span = 1
    while 2 * span <= len(values):
        prev = table[-1]
        table.append(op(prev[:-span], prev[span:]))
        span *= 2
    length = hi - lo
    level = np.zeros_like(length)
    nz = length > 1
    level[nz] = np.floor(np.log2(length[nz])).astype(np.int64)
    out = np.empty_like(lo)
    for k in np.unique(level):
        sel = level == k
        t = table[int(k)]
        out[sel] = op(t[lo[sel]], t[hi[sel] - (1 << int(k))])
    return out


def _bridge_children(g: Graph):
    """DFS parent, preorder and, per vertex, whether its parent edge is a bridge.

    Small graphs get plain lists from a reverse-preorder low-link pass.  Large
    graphs get numpy arrays: the tree edge into ``v`` is a bridge exactly when
    every non-tree edge at a vertex of ``v``'s subtree stays inside the
    subtree's preorder range.
    """
    n = g.n
    bulk = _dfs_tree_bulk(g) if n + g.m > _BULK else None
    if bulk is None:
        pre, parent, order, end = _dfs_forest(g)
    if bulk is None and n + g.m <= _BULK:
        adj = g.adj
        low = pre[:]
        cut = [False] * n
        for v in reversed(order):
            p = parent[v]
            lv = low[v]
            for w in adj[v]:
                if w == p:
                    continue
                x = low[w] if parent[w] == v else pre[w]
                if x < lv:
                    lv = x
            low[v] = lv
            if p >= 0 and lv == pre[v]:
                cut[v] = True
        return parent, order, cut
    if bulk is not None:
        pre_a, par_a, order_a, end_a = bulk
    else:
        pre_a = np.asarray(pre, dtype=np.int64)
        par_a = np.asarray(parent, dtype=np.int64)
        order_a = np.asarray(order, dtype=np.int64)
        end_a = np.asarray(end, dtype=np.int64)
    lo_at = np.arange(n, dtype=np.int64)
    hi_at = np.arange(n, dtype=np.int64)
    if g.m:
        e = g.edge_array()
        u, v = e[:, 0], e[:, 1]
        keep = ~((par_a[u] == v) | (par_a[v] == u))
        pu, pv = pre_a[u[keep]], pre_a[v[keep]]
        np.minimum.at(lo_at, pu, pv)
        np.minimum.at(lo_at, pv, pu)
        np.maximum.at(hi_at, pu, pv)
        np.maximum.at(hi_at, pv, pu)
    stop_pre = end_a[order_a]
    start_pre = np.arange(n, dtype=np.int64)
    mn = _range_extreme(lo_at, start_pre, stop_pre, np.minimum)
    mx = _range_extreme(hi_at, start_pre, stop_pre, np.maximum)
    cut = np.zeros(n, dtype=bool)
    cut[order_a] = (mn >= start_pre) & (mx < stop_pre)
    cut &= par_a >= 0
    return par_a, order_a, cut


def _bridge_list(parent, cut) -> List[Edge]:
    if isinstance(cut, np.ndarray):
        kids = np.nonzero(cut)[0]
        par = parent[kids]
        lo, hi = np.minimum(par, kids), np.maximum(par, kids)
        idx = np.lexsort((hi, lo))
        return list(zip(lo[idx].tolist(), hi[idx].tolist()))
    return sorted(_norm(parent[v], v) for v in range(len(cut)) if cut[v])


def find_bridges(g: Graph) -> List[Edge]:
    """All bridges as sorted ``(u, v)`` with ``u < v``."""
    parent, _, cut = _bridge_children(g)
    return _bridge_list(parent, cut)


@dataclass(frozen=True)
class BlockDecomposition:
    """Bridges and 2-edge-connected components of a connected graph.

    ``attach_bridge[b]`` is ``(inside, outside)`` for a pendant block ``b`` and
    ``None`` otherwise.  Blocks are numbered by their smallest vertex.
    """

    bridges: Tuple[Edge, ...]
    block_of: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]
    pendant: Tuple[bool, ...]
    attach_bridge: Tuple[Optional[Edge], ...]

    @property
    def pendant_blocks(self) -> List[int]:
        return [b for b, p in enumerate(self.pendant) if p]

    def is_trivial(self, b: int) -> bool:
        return len(self.blocks[b]) == 1

    def block_degree(self) -> List[int]:
        deg = [0] * len(self.blocks)
        for u, v in self.bridges:
            deg[self.block_of[u]] += 1
            deg[self.block_of[v]] += 1
        return deg


def blocks_of(g: Graph, bridges: Sequence[Edge]) -> Tuple[List[int], int]:
    """Components of ``g`` minus ``bridges``, numbered by smallest vertex."""
    cut = set(bridges)
    label = [-1] * g.n
    count = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if label[w] < 0 and _norm(u, w) not in cut:
                    label[w] = count
                    stack.append(w)
        count += 1
    return label, count


def _raw_block_labels(parent, order, cut) -> List[int]:
    """Cutting the bridge tree-edges splits the DFS forest into the blocks."""
    if isinstance(cut, np.ndarray):
        n = len(cut)
        head = np.where((parent < 0) | cut, np.arange(n), parent)
        while True:
            nxt = head[head]
            if np.array_equal(nxt, head):
                return head
            head = nxt
    raw = [0] * len(cut)
    for v in order:
        raw[v] = v if parent[v] < 0 or cut[v] else raw[parent[v]]
    return raw


def block_decomposition(g: Graph) -> BlockDecomposition:
    parent, order, cut = _bridge_children(g)
    roots = int(np.count_nonzero(parent < 0)) if isinstance(parent, np.ndarray) else parent.count(-1)
    if roots > 1:
        raise GraphError("block decomposition needs a connected graph")
    raw = _raw_block_labels(parent, order, cut)
    bridges = _bridge_list(parent, cut)
    if isinstance(raw, np.ndarray):
        n = g.n
        low = np.full(n, n, dtype=np.int64)
        np.minimum.at(low, raw, np.arange(n, dtype=np.int64))
        # blocks numbered by smallest vertex
        _, label_a = np.unique(low[raw], return_inverse=True)
        count = int(label_a.max()) + 1 if n else 0
        srt = np.argsort(label_a, kind="stable").tolist()
        sizes = np.bincount(label_a, minlength=count).tolist()
        blocks = []
        pos = 0
        for c in sizes:
            blocks.append(tuple(srt[pos:pos + c]))
            pos += c
        label = label_a.tolist()
    else:
        relabel: Dict[int, int] = {}
        label = []
        for v in range(g.n):
            label.append(relabel.setdefault(raw[v], len(relabel)))
        count = len(relabel)
        members: List[List[int]] = [[] for _ in range(count)]
        for v, b in enumerate(label):
            members[b].append(v)
        blocks = [tuple(m) for m in members]
    deg = [0] * count
    attach: List[Optional[Edge]] = [None] * count
    if isinstance(raw, np.ndarray) and bridges:
        bu, bv = np.asarray(bridges, dtype=np.int64).T
        lu, lv = label_a[bu], label_a[bv]
        deg_a = np.bincount(np.concatenate([lu, lv]), minlength=count)
        deg = deg_a.tolist()
        for i in np.nonzero(deg_a[lu] == 1)[0].tolist():
            attach[label[bridges[i][0]]] = bridges[i]
        for i in np.nonzero(deg_a[lv] == 1)[0].tolist():
            u, v = bridges[i]
            attach[label[v]] = (v, u)
    else:
        for u, v in bridges:
            deg[label[u]] += 1
            deg[label[v]] += 1
        for u, v in bridges:
            if deg[label[u]] == 1:
                attach[label[u]] = (u, v)
            if deg[label[v]] == 1:
                attach[label[v]] = (v, u)
    return BlockDecomposition(
        bridges=tuple(bridges),
        block_of=tuple(label),
        blocks=tuple(blocks),
        pendant=tuple(d == 1 for d in deg),
        attach_bridge=tuple(attach),
    )


@dataclass(frozen=True)
class GraphStats:
    c: int
    i: int
    p: Optional[int]


def stats(g: Graph) -> GraphStats:
    _, c = component_labels(g)
    i = sum(1 for v in range(g.n) if not g.adj[v])
    p = None
    if c == 1 or g.n == 0:
        p = sum(block_decomposition(g).pendant) if g.n > 0 else 0
    return GraphStats(c=c, i=i, p=p)


def is_k_edge_connected(g: Graph, k: int) -> bool:
    if k not in (1, 2):
        raise GraphError(f"k must be 1 or 2, got {k}")
    if g.n <= 1:
        return True
    if k == 1:
        return is_connected(g)
    parent, _, cut = _bridge_children(g)
    if isinstance(cut, np.ndarray):
        return int(np.count_nonzero(parent < 0)) == 1 and not cut.any()
    return parent.count(-1) == 1 and not any(cut)


# ---------------------------------------------------------------------------
# vertex covers and twins


def is_vertex_cover(h: Graph, cover: Iterable[int]) -> bool:
    s = set(cover)
    return all(u in s or v in s for u, v in h.edges)


def minimum_vertex_cover(h: Graph, t_max: Optional[int] = None) -> Optional[List[int]]:
    """Lexicographically smallest minimum vertex cover of size at most ``t_max``.

    Brute force in size-then-lex order; only non-isolated vertices are
    candidates since a minimum cover never contains an isolated vertex.
    Returns ``None`` if every cover is larger than ``t_max``.
    """
    if t_max is None:
        t_max = h.n
    if t_max < 0:
        raise GraphError("t_max must be nonnegative")
    if not h.edges:
        return []
    cand = [v for v in range(h.n) if h.adj[v]]
    edges = h.edges
    for size in range(1, min(t_max, len(cand)) + 1):
        for combo in _covers_of_size(edges, cand, size):
            return list(combo)
    return None


def _covers_of_size(edges: Sequence[Edge], cand: List[int], size: int) -> Iterator[Tuple[int, ...]]:
    # lex-ordered enumeration of `size`-subsets of cand; a prefix is abandoned
    # once some edge with both ends below the next pick is uncovered
    pos = {v: i for i, v in enumerate(cand)}
    # for each candidate index j: edges whose larger endpoint index is j
    closing: List[List[Edge]] = [[] for _ in cand]
    for u, v in edges:
        closing[max(pos[u], pos[v])].append((u, v))
    chosen: List[int] = []
    chosen_set = set()

    def ok_through(last: int, nxt: int) -> bool:
        # every edge whose both ends have index < nxt must be covered
        for j in range(last, nxt):
            for u, v in closing[j]:
                if u not in chosen_set and v not in chosen_set:
                    return False
        return True

    def rec(start: int, checked: int) -> Iterator[Tuple[int, ...]]:
        if len(chosen) == size:
            if ok_through(checked, len(cand)):
                yield tuple(chosen)
            return
        for j in range(start, len(cand) - (size - len(chosen)) + 1):
            if not ok_through(checked, j):
                return
            v = cand[j]
            chosen.append(v)
            chosen_set.add(v)
            yield from rec(j + 1, j)
            chosen.pop()
            chosen_set.discard(v)

    yield from rec(0, 0)


def false_twin_classes(h: Graph, zs: Iterable[int]) -> List[List[int]]:
    """Partition ``zs`` by open neighbourhood; classes ordered by smallest member."""
    zs = sorted(set(zs))
    zset = set(zs)
    for z in zs:
        if any(w in zset for w in h.adj[z]):
            raise GraphError("twin classes need an independent vertex set")
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for z in zs:
        groups.setdefault(h.adj[z], []).append(z)
    return sorted(groups.values(), key=lambda c: c[0])


class DisjointSet:
    __slots__ = ("parent", "count")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        self.count -= 1
        return True
