"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line; the lines are also repeated
in the pytest terminal summary.  Run ``python3 tests/test_acceptance.py`` to
get just the verdict lines.
"""

from __future__ import annotations

import io
import random
import sys
import time
from itertools import permutations
from pathlib import Path
from typing import Callable, Tuple

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE, nonisomorphic_graphs, small_weighted_instance  # noqa: E402
from structaug.assignment import hungarian  # noqa: E402
from structaug.biconnect import INF, Branch, solve_2connect, tuples  # noqa: E402
from structaug.cli import run  # noqa: E402
from structaug.connect import (  # noqa: E402
    AnchorContext,
    anchor_weight,
    enumerate_anchor_embeddings,
    enumerate_anchor_sets,
    solve_connect,
)
from structaug.formats import serialize_instance  # noqa: E402
from structaug.generators import (  # noqa: E402
    GenParams,
    all_trees,
    brute_force_tree_augmentation,
    decide_augmentation_instance,
    gen_random,
    reduce_biconnectivity_augmentation,
    reduce_hamiltonian_path,
    tree_nonedges,
    witness_from_ham_path,
)
from structaug.graph import (  # noqa: E402
    Graph,
    WeightFn,
    complete_graph,
    is_connected,
    is_k_edge_connected,
    matching_graph,
    minimum_vertex_cover,
    star_graph,
    superpose,
)
from structaug.oracle import brute_force_feasible, brute_force_optimum  # noqa: E402
from structaug.unweighted import (  # noqa: E402
    construct_2connect,
    construct_connect,
    feasible_2connect,
    feasible_connect,
)


def verdict(number: int, title: str, check: Callable[[], Tuple[bool, str]]) -> None:
    t0 = time.perf_counter()
    ok, detail = check()
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail}; {time.perf_counter() - t0:.2f}s)"
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line


# ---------------------------------------------------------------------------
# 1, 2: weighted solvers against the oracle


def _oracle_sweep(k: int, seed: int, count: int, limit: float) -> Tuple[bool, str]:
    rng = random.Random(seed)
    solve = solve_connect if k == 1 else solve_2connect
    check = is_connected if k == 1 else (lambda f: is_k_edge_connected(f, 2))
    bad = feasible = 0
    t0 = time.perf_counter()
    for _ in range(count):
        g, h, om = small_weighted_instance(rng, max_g=7, max_h=5, max_cover=2, connected=k == 2)
        a = solve(g, h, om)
        b = brute_force_optimum(g, h, om, k)
        if (a is None) != (b is None):
            bad += 1
            continue
        if a is not None:
            feasible += 1
            if a.weight != b.weight or not check(superpose(g, h, a.phi)) \
                    or om.mapping_weight(h, a.phi) != a.weight:
                bad += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < limit
    return ok, f"{count} instances, {feasible} feasible, {bad} mismatches, limit {limit:.0f}s"


def test_criterion_1_oracle_equivalence_k1():
    verdict(1, "k=1 weighted solver equals brute force", lambda: _oracle_sweep(1, 1001, 300, 120))


def test_criterion_2_oracle_equivalence_k2():
    verdict(2, "k=2 weighted solver equals brute force", lambda: _oracle_sweep(2, 2002, 300, 300))


# ---------------------------------------------------------------------------
# 3: exhaustive unweighted sweep


def _characterization_sweep() -> Tuple[bool, str]:
    hosts = [g for n in range(1, 6) for g in nonisomorphic_graphs(n)]
    patterns = [h for n in range(2, 6) for h in nonisomorphic_graphs(n) if not h.isolated_vertices()]
    pairs = mismatches = certified = 0
    for g in hosts:
        connected = is_connected(g)
        for h in patterns:
            pairs += 1
            want = brute_force_feasible(g, h, 1)
            if feasible_connect(g, h) != want:
                mismatches += 1
            phi = construct_connect(g, h)
            if (phi is not None) != want or (phi is not None and not is_connected(superpose(g, h, phi))):
                mismatches += 1
            certified += phi is not None
            if not connected:
                continue
            want = brute_force_feasible(g, h, 2)
            if feasible_2connect(g, h) != want:
                mismatches += 1
            phi = construct_2connect(g, h)
            if (phi is not None) != want or (phi is not None and not is_k_edge_connected(superpose(g, h, phi), 2)):
                mismatches += 1
            certified += phi is not None
    detail = (f"{len(hosts)} hosts x {len(patterns)} patterns up to isomorphism, {pairs} pairs, "
              f"{certified} certificates, {mismatches} mismatches")
    return mismatches == 0, detail


def test_criterion_3_unweighted_characterization():
    verdict(3, "unweighted feasibility and constructions on all graphs up to 5 vertices", _characterization_sweep)


# ---------------------------------------------------------------------------
# 4: star exception


def _star_exception() -> Tuple[bool, str]:
    notes = []
    ok = True
    for n in (3, 5, 7):
        g, h = star_graph(n), matching_graph((n + 1) // 2)
        got = feasible_2connect(g, h)
        ok &= not got and construct_2connect(g, h) is None
        if n <= 5:
            ok &= not brute_force_feasible(g, h, 2)
        notes.append(f"K1,{n}:{'yes' if got else 'no'}")
    for n in (2, 4, 6):
        # n + 1 is odd, so the perfect matching covers the n leaves' worth of vertices
        g, h = star_graph(n), matching_graph(n // 2)
        got = feasible_2connect(g, h)
        phi = construct_2connect(g, h)
        ok &= got and phi is not None and is_k_edge_connected(superpose(g, h, phi), 2)
        ok &= brute_force_feasible(g, h, 2)
        notes.append(f"K1,{n}:{'yes' if got else 'no'}")
    return bool(ok), " ".join(notes)


def test_criterion_4_star_exception():
    verdict(4, "odd stars with a matching are the only exception", _star_exception)


# ---------------------------------------------------------------------------
# 5: DP tables against enumeration


def _table_by_enumeration(br: Branch, hidx: int) -> dict:
    """Minimum over injections of the first q_i class members into pool + F_1..F_h,
    each F_j hit, and a lone hit on the bridge end needing a neighbour away from the far end."""
    psi, h, om = br.ctx.psi, br.h, br.omega
    pendants = br.split.pendants[:hidx]
    slots = list(br.split.pool) + [v for p in pendants for v in p.vertices]
    where = {v: j for j, p in enumerate(pendants) for v in p.vertices}
    out = {}
    for q in tuples(br.sizes):
        members = [z for cls, k in zip(br.classes, q) for z in cls[:k]]
        cost = {(z, v): sum(om(psi[x], v) for x in h.adj[z]) for z in members for v in slots}
        best = INF
        for images in permutations(slots, len(members)):
            hits = [[] for _ in pendants]
            for z, v in zip(members, images):
                if v in where:
                    hits[where[v]].append((z, v))
            if any(not hs for hs in hits):
                continue
            blocked = False
            for p, hs in zip(pendants, hits):
                if len(hs) == 1 and hs[0][1] == p.inside:
                    z = hs[0][0]
                    blocked |= not any(psi[x] != p.outside for x in h.adj[z])
            if blocked:
                continue
            best = min(best, sum(cost[(z, v)] for z, v in zip(members, images)))
        out[q] = best
    return out


def _sample_branches(rng: random.Random, want: int):
    branches = []
    while len(branches) < want:
        g, h, om = small_weighted_instance(rng, max_g=7, max_h=5, max_cover=2, connected=True)
        xs = minimum_vertex_cover(h)
        taken = 0
        for y in enumerate_anchor_sets(h, xs):
            anchors = sorted(set(xs) | set(y))
            for psi in enumerate_anchor_embeddings(g, h, anchors, "block"):
                zs = tuple(v for v in range(h.n) if v not in psi)
                ctx = AnchorContext(tuple(xs), tuple(y), zs, psi, anchor_weight(h, psi, om))
                br = Branch(g, h, ctx, om)
                r = len(br.split.pendants)
                if r > len(zs) or (r == 0 and rng.random() < 0.8):
                    continue
                branches.append(br)
                taken += 1
                break
            if taken >= 2:
                break
    return branches[:want]


def _dp_sandwich() -> Tuple[bool, str]:
    branches = _sample_branches(random.Random(5005), 60)
    entries = mismatches = finite = 0
    with_pendants = sum(1 for br in branches if br.split.pendants)
    for br in branches:
        br.run()
        for hidx in range(len(br.split.pendants) + 1):
            want = _table_by_enumeration(br, hidx)
            for q, v in want.items():
                entries += 1
                finite += v < INF
                if br.alpha[hidx][q] != v:
                    mismatches += 1
    detail = (f"{len(branches)} branches ({with_pendants} with pendants), {entries} table entries, "
              f"{finite} finite, {mismatches} mismatches")
    return mismatches == 0 and len(branches) >= 50, detail


def test_criterion_5_dp_tables_match_enumeration():
    verdict(5, "every DP table entry equals the enumerated minimum", _dp_sandwich)


# ---------------------------------------------------------------------------
# 6: assignment engine


def _assignment() -> Tuple[bool, str]:
    rng = np.random.default_rng(606)
    perms = {}
    mismatches = 0
    spent = 0.0
    for _ in range(1000):
        rows = int(rng.integers(1, 8))
        cols = int(rng.integers(rows, 8))
        m = rng.integers(0, 101, size=(rows, cols))
        key = (rows, cols)
        if key not in perms:
            perms[key] = np.array(list(permutations(range(cols), rows)))
        brute = int(m[np.arange(rows), perms[key]].sum(axis=1).min())
        t0 = time.perf_counter()
        _, weight = hungarian(m.tolist())
        spent += time.perf_counter() - t0
        mismatches += weight != brute
    return mismatches == 0 and spent < 5.0, f"1000 matrices up to 7x7, {mismatches} mismatches, solver time {spent:.2f}s"


def test_criterion_6_assignment_engine():
    verdict(6, "Hungarian method equals permutation brute force", _assignment)


# ---------------------------------------------------------------------------
# 7: reductions


def _reductions() -> Tuple[bool, str]:
    k4 = complete_graph(4)
    inst = reduce_hamiltonian_path(k4)
    phi = witness_from_ham_path(k4, [0, 1, 2, 3])
    ham_ok = (inst.g.n, inst.h.m, inst.budget) == (16, 7, 3) \
        and inst.omega.mapping_weight(inst.h, phi) == 3 and is_connected(superpose(inst.g, inst.h, phi))
    cases = agree = 0
    for tree in all_trees(4):
        ne = tree_nonedges(tree)
        for mask in range(1 << len(ne)):
            cost = {e: 1 + (mask >> i & 1) for i, e in enumerate(ne)}
            for budget in (1, 2, 3):
                red = reduce_biconnectivity_augmentation(tree, cost, budget)
                want = brute_force_tree_augmentation(tree, cost, budget)
                got = [decide_augmentation_instance(tree, red)]
                if budget == 1:
                    for sol in (solve_2connect(red.g, red.h, red.omega),
                                brute_force_optimum(red.g, red.h, red.omega, 2)):
                        got.append(sol is not None and sol.weight <= budget)
                cases += 1
                agree += all(x == want for x in got)
    detail = f"K4 gadget 16/7/3 {'ok' if ham_ok else 'wrong'}; augmentation {agree}/{cases} agree"
    return ham_ok and agree == cases, detail


def test_criterion_7_reductions():
    verdict(7, "reduction sizes, witnesses and equivalence on small trees", _reductions)


# ---------------------------------------------------------------------------
# 8: scaling


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _scaling() -> Tuple[bool, str]:
    rng = random.Random(808)
    n = 10 ** 5
    tree = Graph(n, [(rng.randrange(v), v) for v in range(1, n)])
    star = star_graph(999)
    (ok1, phi1), t1 = _timed(lambda: (feasible_connect(tree, star), construct_connect(tree, star)))
    (ok2, phi2), t2 = _timed(lambda: (feasible_2connect(tree, star), construct_2connect(tree, star)))
    # a caterpillar with 900 leaves is feasible for k = 2 with a 1000-vertex star
    spine = n - 900
    cat = Graph(n, [(v - 1, v) for v in range(1, spine)] + [(rng.randrange(spine), v) for v in range(spine, n)])
    (ok3, phi3), t3 = _timed(lambda: (feasible_2connect(cat, star), construct_2connect(cat, star)))
    sound = ok1 and phi1 is not None and is_connected(superpose(tree, star, phi1)) \
        and ok2 == (phi2 is not None) and ok3 and is_k_edge_connected(superpose(cat, star, phi3), 2)
    g60 = Graph(60, [(rng.randrange(v), v) for v in range(1, 60)])
    om = WeightFn(5, {(u, v): rng.randint(0, 9) for u in range(60) for v in range(u + 1, 60) if rng.random() < 0.5})
    sol, t4 = _timed(lambda: solve_connect(g60, star_graph(30), om))
    fast = max(t1, t2, t3) < 1.0 and t4 < 10.0
    detail = (f"tree k=1 {t1:.2f}s, tree k=2 ({'feasible' if ok2 else 'infeasible'}) {t2:.2f}s, "
              f"caterpillar k=2 {t3:.2f}s, weighted star-30 on 60 vertices {t4:.2f}s weight {sol.weight}")
    return bool(sound and fast and sol is not None), detail


def test_criterion_8_scaling():
    verdict(8, "linear-time unweighted path and weighted t=1 timing", _scaling)


# ---------------------------------------------------------------------------
# 9: determinism across worker counts


def _cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue().encode(), err.getvalue().encode()


def _determinism(tmp: Path) -> Tuple[bool, str]:
    runs = same = 0
    seed = 0
    files = []
    while len(files) < 8:
        seed += 1
        k = 1 + len(files) % 2
        inst = gen_random(GenParams(7, 5, 0.35, 3, k, connected_g=k == 2), seed)
        cover = minimum_vertex_cover(inst.h)
        if len(cover) != 2 or inst.h.n > 5:
            continue
        path = tmp / f"inst{len(files)}.txt"
        path.write_text(serialize_instance(inst))
        files.append(str(path))
    for f in files:
        for cmd in (["solve"], ["oracle"], ["feasible", "--construct"]):
            outs = {_cli([cmd[0], f, *cmd[1:], "--parallel", str(p)]) for p in (1, 4)}
            repeat = _cli([cmd[0], f, *cmd[1:], "--parallel", "4"])
            runs += 1
            same += len(outs) == 1 and repeat in outs
    return same == runs, f"{runs} command/instance pairs, {same} byte-identical across --parallel 1 and 4"


def test_criterion_9_determinism(tmp_path):
    verdict(9, "output is identical for every worker count", lambda: _determinism(tmp_path))


if __name__ == "__main__":
    import tempfile

    failures = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                if "tmp_path" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
                    with tempfile.TemporaryDirectory() as d:
                        fn(Path(d))
                else:
                    fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
