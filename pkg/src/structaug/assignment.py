"""Minimum-weight saturating matchings in sparse weighted bipartite graphs.

The engine is the shortest-augmenting-path form of the Hungarian method on a
rectangular matrix whose rows are the side that must be saturated.  Missing
edges are priced at a sentinel that no saturating matching over real edges can
reach, so a sentinel in the optimum means no saturating matching exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

_I64_SAFE = 1 << 62


@dataclass
class AuxBipartite:
    """Bipartite graph with a partial cost table.

    ``cost`` maps ``(left_label, right_label)`` to a nonnegative integer; absent
    pairs are non-edges.  ``big`` is the padding cost used by the solvers and
    must exceed every "real" cost; it is carried here only as metadata.
    """

    left: List[Hashable]
    right: List[Hashable]
    cost: Dict[Tuple[Hashable, Hashable], int] = field(default_factory=dict)
    big: Optional[int] = None

    def __post_init__(self) -> None:
        for key, c in self.cost.items():
            if c < 0:
                raise ValueError(f"negative cost on {key}")


@dataclass(frozen=True)
class MatchingResult:
    pairs: Tuple[Tuple[Hashable, Hashable], ...]
    weight: int


def hungarian(cost: Sequence[Sequence[int]], allowed: Optional[np.ndarray] = None,
              *, lexicographic: bool = False) -> Optional[Tuple[List[int], int]]:
    """Saturate every row of a rows <= cols matrix at minimum total cost.

    Returns ``(col_of_row, weight)`` or ``None`` when no matching over allowed
    cells saturates the rows.  With ``lexicographic`` the optimum with the
    smallest column sequence (in row order) is returned.
    """
    a = len(cost)
    if a == 0:
        return [], 0
    b = len(cost[0])
    if a > b:
        return None
    if allowed is None:
        allowed = np.ones((a, b), dtype=bool)
    real_max = 0
    for i in range(a):
        for j in range(b):
            if allowed[i, j] and cost[i][j] > real_max:
                real_max = cost[i][j]
    sentinel = a * real_max + 1
    scale = b ** a if lexicographic else 1
    top = (a + 1) * sentinel * scale
    dtype = np.int64 if top < _I64_SAFE else object
    c = np.empty((a, b), dtype=dtype)
    for i in range(a):
        for j in range(b):
            c[i, j] = int(cost[i][j]) if allowed[i, j] else sentinel
    if lexicographic:
        c = c * scale
        for i in range(a):
            c[i, :] += np.arange(b, dtype=np.int64).astype(dtype) * (b ** (a - 1 - i))
    col_of_row = _solve(c, dtype)
    weight = 0
    for i, j in enumerate(col_of_row):
        if not allowed[i, j]:
            return None
        weight += int(cost[i][j])
    return col_of_row, weight


def _solve(c: np.ndarray, dtype) -> List[int]:
    a, b = c.shape
    u = np.zeros(a + 1, dtype=dtype)
    v = np.zeros(b + 1, dtype=dtype)
    match = np.zeros(b + 1, dtype=np.int64)  # column -> 1-based row, 0 = free
    way = np.zeros(b + 1, dtype=np.int64)
    huge = c.max() * (a + 2) + 1 if a else 1
    for i in range(1, a + 1):
        match[0] = i
        j0 = 0
        minv = np.full(b + 1, huge, dtype=dtype)
        used = np.zeros(b + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = match[j0]
            cur = c[i0 - 1] - u[i0] - v[1:]
            free = ~used[1:]
            better = free & (cur < minv[1:])
            idx = np.nonzero(better)[0] + 1
            minv[idx] = cur[idx - 1]
            way[idx] = j0
            cand = np.where(free, minv[1:], huge)
            j1 = int(np.argmin(cand)) + 1
            delta = cand[j1 - 1]
            used_cols = np.nonzero(used)[0]
            u[match[used_cols]] += delta
            v[used_cols] -= delta
            free_cols = np.nonzero(~used)[0]
            minv[free_cols] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    col_of_row = [0] * a
    for j in range(1, b + 1):
        if match[j]:
            col_of_row[match[j] - 1] = j - 1
    return col_of_row


def min_weight_saturating_matching(g: AuxBipartite, side: str = "left", *,
                                   lexicographic: bool = True) -> Optional[MatchingResult]:
    """Minimum-weight matching saturating ``side``; ``None`` if none exists.

    Pairs are reported as ``(left, right)`` ordered by position of the
    saturated-side vertex.  With ``lexicographic`` (the default) ties are
    broken toward the lexicographically smallest pair list in that order.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    rows, cols = (g.left, g.right) if side == "left" else (g.right, g.left)
    if len(rows) > len(cols):
        return None
    if not rows:
        return MatchingResult((), 0)
    allowed = np.zeros((len(rows), len(cols)), dtype=bool)
    cost = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for j, s in enumerate(cols):
            key = (r, s) if side == "left" else (s, r)
            c = g.cost.get(key)
            if c is not None:
                allowed[i, j] = True
                cost[i][j] = c
    res = hungarian(cost, allowed, lexicographic=lexicographic)
    if res is None:
        return None
    col_of_row, weight = res
    if side == "left":
        pairs = tuple((rows[i], cols[j]) for i, j in enumerate(col_of_row))
    else:
        pairs = tuple((cols[j], rows[i]) for i, j in enumerate(col_of_row))
    return MatchingResult(pairs, weight)
