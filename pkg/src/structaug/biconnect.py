"""Exact minimum-weight placement of H into G making the superposition 2-edge-connected.

Anchoring is as for the connected case, except the anchors must share a block
of the partial superposition F'.  Every pendant block F_1..F_r of F' other than
the anchor block F0 then needs an image of a non-anchor vertex, and when a
pendant receives exactly one such image on its bridge endpoint, that vertex
needs an H-neighbour placed away from the bridge's far endpoint.  Non-anchor
vertices fall into false-twin classes, so a placement is summarised by how
many members of each class go where, and a dynamic program over the pendants
combines per-pendant matching costs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .assignment import hungarian
from .connect import (
    AnchorContext,
    Solution,
    _check_u64,
    _cover,
    lift_solution,
    partial_superposition,
    placement_cost,
    search_branches,
    strip_isolated,
)
from .graph import (
    Graph,
    GraphError,
    Mapping,
    WeightFn,
    block_decomposition,
    false_twin_classes,
    is_connected,
    is_k_edge_connected,
    superpose,
)

INF = float("inf")

Tuple_ = Tuple[int, ...]


@dataclass(frozen=True)
class Pendant:
    vertices: Tuple[int, ...]
    inside: int  # endpoint of the attaching bridge within the pendant
    outside: int


@dataclass(frozen=True)
class PendantSplit:
    F0: Tuple[int, ...]
    pendants: Tuple[Pendant, ...]
    # vertices outside the anchors' images and outside every pendant F_1..F_r
    pool: Tuple[int, ...]


@dataclass
class DpTable:
    sizes: Tuple[int, ...]
    values: Dict[Tuple_, float] = field(default_factory=dict)
    backptr: Dict[Tuple_, Tuple_] = field(default_factory=dict)

    def __getitem__(self, q: Tuple_) -> float:
        return self.values[q]


def tuples(sizes: Sequence[int]) -> List[Tuple_]:
    """All tuples in the box ``0..sizes[i]``, mixed-radix ascending."""
    return list(product(*(range(p + 1) for p in sizes)))


def pendant_split(g: Graph, h: Graph, psi: Dict[int, int]) -> PendantSplit:
    fprime = partial_superposition(g, h, psi)
    bd = block_decomposition(fprime)
    anchor_imgs = set(psi.values())
    b0 = bd.block_of[next(iter(anchor_imgs))]
    if any(bd.block_of[v] != b0 for v in anchor_imgs):
        raise GraphError("anchors do not share a block")
    pendants = []
    in_pendant = set()
    for b in bd.pendant_blocks:
        if b == b0:
            continue
        inside, outside = bd.attach_bridge[b]
        pendants.append(Pendant(bd.blocks[b], inside, outside))
        in_pendant.update(bd.blocks[b])
    pool = tuple(v for v in range(g.n) if v not in anchor_imgs and v not in in_pendant)
    return PendantSplit(bd.blocks[b0], tuple(pendants), pool)


class Branch:
    """Twin classes, placement costs and DP tables for one anchor placement."""

    def __init__(self, g: Graph, h: Graph, ctx: AnchorContext, omega: WeightFn,
                 split: Optional[PendantSplit] = None):
        self.g, self.h, self.ctx, self.omega = g, h, ctx, omega
        self.split = split or pendant_split(g, h, ctx.psi)
        self.classes = false_twin_classes(h, ctx.Z)
        self.sizes = tuple(len(c) for c in self.classes)
        # one representative per class suffices: twins share neighbourhoods
        self.cost: List[Dict[int, int]] = []
        free = [v for v in range(g.n) if v not in set(ctx.psi.values())]
        for cls in self.classes:
            z = cls[0]
            self.cost.append({v: placement_cost(h, ctx.psi, omega, z, v) for v in free})
        self.alpha0: Optional[DpTable] = None
        self.alpha_prime: List[DpTable] = []
        self.alpha: List[DpTable] = []

    # -- matching on class multiplicities -----------------------------------

    def _expand(self, q: Tuple_) -> List[int]:
        rows = []
        for i, k in enumerate(q):
            rows.extend([i] * k)
        return rows

    def _match(self, q: Tuple_, slots: Sequence[int]) -> Optional[Tuple[List[Tuple[int, int]], int]]:
        rows = self._expand(q)
        if len(rows) > len(slots):
            return None
        if not rows:
            return [], 0
        matrix = [[self.cost[i][v] for v in slots] for i in rows]
        res = hungarian(matrix)
        if res is None:
            return None
        cols, weight = res
        return [(rows[r], slots[c]) for r, c in enumerate(cols)], weight

    def _lone_blocked(self, q: Tuple_, pendant: Pendant) -> bool:
        """True when the single vertex described by ``q`` has its only neighbour on the bridge's far end."""
        if sum(q) != 1:
            return False
        i = next(j for j, k in enumerate(q) if k)
        nbrs = self.h.adj[self.classes[i][0]]
        return len(nbrs) == 1 and self.ctx.psi[nbrs[0]] == pendant.outside

    def alpha0_value(self, q: Tuple_) -> float:
        res = self._match(q, self.split.pool)
        return INF if res is None else res[1]

    def alpha_prime_value(self, hidx: int, q: Tuple_) -> float:
        pendant = self.split.pendants[hidx - 1]
        total = sum(q)
        if total == 0 or total > len(pendant.vertices):
            return INF
        if self._lone_blocked(q, pendant):
            others = [v for v in pendant.vertices if v != pendant.inside]
            if not others:
                return INF
            i = next(j for j, k in enumerate(q) if k)
            return min(self.cost[i][v] for v in others)
        res = self._match(q, pendant.vertices)
        return INF if res is None else res[1]

    # -- dynamic program ---------------------------------------------------

    def run(self) -> float:
        box = tuples(self.sizes)
        self.alpha0 = DpTable(self.sizes, {q: self.alpha0_value(q) for q in box})
        self.alpha_prime = []
        self.alpha = [self.alpha0]
        for hidx in range(1, len(self.split.pendants) + 1):
            cur = DpTable(self.sizes, {q: self.alpha_prime_value(hidx, q) for q in box})
            self.alpha_prime.append(cur)
            self.alpha.append(dp_combine(self.alpha[-1], cur))
        return self.alpha[-1][self.sizes]

    def reconstruct(self) -> Dict[int, int]:
        """Concrete placement of every non-anchor vertex achieving the DP optimum."""
        r = len(self.split.pendants)
        q = self.sizes
        if self.alpha[r][q] == INF:
            raise ValueError("no placement: DP value is infinite")
        splits: List[Tuple_] = [()] * (r + 1)
        for hidx in range(r, 0, -1):
            qpp = self.alpha[hidx].backptr[q]
            splits[hidx] = qpp
            q = tuple(a - b for a, b in zip(q, qpp))
        splits[0] = q
        pools = [list(c) for c in self.classes]
        xi: Dict[int, int] = {}
        total = 0
        for hidx in range(1, r + 1):
            qpp = splits[hidx]
            members = []
            for i, k in enumerate(qpp):
                members.extend(pools[i][:k])
                del pools[i][:k]
            pendant = self.split.pendants[hidx - 1]
            if self._lone_blocked(qpp, pendant):
                i = next(j for j, k in enumerate(qpp) if k)
                v = min((v for v in pendant.vertices if v != pendant.inside),
                        key=lambda v: (self.cost[i][v], v))
                xi[members[0]] = v
                total += self.cost[i][v]
            else:
                total += self._place(members, qpp, pendant.vertices, xi)
        rest = [z for p in pools for z in p]
        total += self._place(rest, splits[0], self.split.pool, xi)
        if total != self.alpha[r][self.sizes]:
            raise AssertionError("reconstruction does not reproduce the DP value")
        return xi

    def _place(self, members: List[int], q: Tuple_, slots: Sequence[int], xi: Dict[int, int]) -> int:
        res = self._match(q, slots)
        if res is None:
            raise AssertionError("finite DP entry without a matching")
        pairs, weight = res
        queues = [list() for _ in self.classes]
        it = iter(members)
        for i, k in enumerate(q):
            for _ in range(k):
                queues[i].append(next(it))
        for cls, v in pairs:
            xi[queues[cls].pop(0)] = v
        return weight


def dp_combine(prev: DpTable, cur: DpTable) -> DpTable:
    """Min-plus convolution over componentwise splits ``q = q' + q''``.

    Ties go to the lexicographically smallest ``q''``.
    """
    out = DpTable(prev.sizes)
    for q in tuples(prev.sizes):
        best = INF
        arg: Optional[Tuple_] = None
        for qpp in product(*(range(k + 1) for k in q)):
            b = cur.values[qpp]
            if b == INF:
                continue
            a = prev.values[tuple(x - y for x, y in zip(q, qpp))]
            if a + b < best:
                best, arg = a + b, qpp
        out.values[q] = best
        if arg is not None:
            out.backptr[q] = arg
    return out


def feasibility_conditions(ctx: AnchorContext, split: PendantSplit, h: Graph,
                           phi: Dict[int, int]) -> bool:
    """Check that every pendant gets a non-anchor image, and that a lone image on
    the bridge endpoint has a neighbour placed away from the far endpoint."""
    z_imgs = {phi[z]: z for z in ctx.Z}
    for p in split.pendants:
        hits = [v for v in p.vertices if v in z_imgs]
        if not hits:
            return False
        if len(hits) == 1 and hits[0] == p.inside:
            z = z_imgs[hits[0]]
            if not any(x in ctx.psi and ctx.psi[x] != p.outside for x in h.adj[z]):
                return False
    return True


def _extend_biconnect(g: Graph, h: Graph, ctx: AnchorContext, omega: WeightFn) -> Optional[Solution]:
    split = pendant_split(g, h, ctx.psi)
    if len(split.pendants) > len(ctx.Z):
        return None
    br = Branch(g, h, ctx, omega, split)
    value = br.run()
    if value == INF:
        return None
    phi = dict(ctx.psi)
    phi.update(br.reconstruct())
    return Solution(Mapping.from_dict(phi), _check_u64(ctx.R + int(value)))


def solve_2connect(g: Graph, h: Graph, omega: WeightFn, *, t_max: Optional[int] = None,
                   parallel: int = 1) -> Optional[Solution]:
    """Minimum-weight injection making ``g (+) h`` 2-edge-connected; ``None`` if impossible."""
    if not is_connected(g):
        raise GraphError("the 2-connectivity problem needs a connected G")
    if h.n > g.n:
        return None
    core, labels = strip_isolated(h)
    if core.m == 0:
        if not is_k_edge_connected(g, 2):
            return None
        return Solution(lift_solution({}, [], h.n, g.n), 0)
    cover = _cover(core, t_max)
    best = search_branches(g, core, omega, cover, "block", _extend_biconnect, parallel)
    if best is None:
        return None
    phi = lift_solution(best.phi.as_dict(), labels, h.n, g.n)
    sol = Solution(phi, best.weight)
    assert is_k_edge_connected(superpose(g, h, phi), 2)
    assert omega.mapping_weight(h, phi) == sol.weight
    return sol


def decide_2connect(g: Graph, h: Graph, omega: WeightFn, budget: int, **kw) -> bool:
    sol = solve_2connect(g, h, omega, **kw)
    return sol is not None and sol.weight <= budget
