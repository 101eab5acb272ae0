"""Command-line front end.

Exit codes: 0 yes/solved, 1 no/infeasible, 2 usage or parse error, 3 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence

from .biconnect import solve_2connect
from .connect import CoverTooLarge, Solution, solve_connect
from .formats import FormatError, parse_instance, parse_mapping, serialize_instance, serialize_mapping
from .generators import (
    GenParams,
    Instance,
    all_trees,
    gen_random,
    reduce_biconnectivity_augmentation,
    reduce_hamiltonian_path,
    reduce_subgraph_isomorphism,
    tree_nonedges,
)
from .graph import Graph, GraphError, complete_graph, is_k_edge_connected, superpose
from .oracle import DEFAULT_CAP, OracleTooLarge, brute_force_optimum
from .unweighted import construct_2connect, construct_connect, feasible_2connect, feasible_connect

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> Instance:
    return parse_instance(_read(path))


def _report(inst: Instance, sol: Optional[Solution], out) -> int:
    if sol is None:
        out.write("INFEASIBLE\n")
        return EXIT_NO
    if inst.budget is not None and sol.weight > inst.budget:
        out.write(f"NO optimum {sol.weight} exceeds budget {inst.budget}\n")
        return EXIT_NO
    out.write(serialize_mapping(sol.phi, sol.weight))
    return EXIT_YES


def _solve(inst: Instance, tmax: Optional[int], parallel: int) -> Optional[Solution]:
    if inst.k == 1:
        return solve_connect(inst.g, inst.h, inst.omega, t_max=tmax, parallel=parallel)
    return solve_2connect(inst.g, inst.h, inst.omega, t_max=tmax, parallel=parallel)


def cmd_solve(args, out) -> int:
    inst = _load(args.instance)
    return _report(inst, _solve(inst, args.tmax, args.parallel), out)


def cmd_oracle(args, out) -> int:
    inst = _load(args.instance)
    return _report(inst, brute_force_optimum(inst.g, inst.h, inst.omega, inst.k, cap=args.cap), out)


def cmd_feasible(args, out) -> int:
    inst = _load(args.instance)
    if inst.k == 1:
        ok, build = feasible_connect(inst.g, inst.h), construct_connect
    else:
        ok, build = feasible_2connect(inst.g, inst.h), construct_2connect
    if not ok:
        out.write("INFEASIBLE\n")
        return EXIT_NO
    if args.construct:
        phi = build(inst.g, inst.h)
        out.write(serialize_mapping(phi, inst.omega.mapping_weight(inst.h, phi)))
    else:
        out.write("FEASIBLE\n")
    return EXIT_YES


def cmd_check(args, out) -> int:
    inst = _load(args.instance)
    cert = parse_mapping(_read(args.certificate))
    try:
        cert.phi.validate(inst.h.n, inst.g.n, total=True)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    weight = inst.omega.mapping_weight(inst.h, cert.phi)
    problems = []
    if cert.weight is not None and cert.weight != weight:
        problems.append(f"claimed weight {cert.weight} but mapping weighs {weight}")
    if inst.budget is not None and weight > inst.budget:
        problems.append(f"weight {weight} exceeds budget {inst.budget}")
    if not is_k_edge_connected(superpose(inst.g, inst.h, cert.phi), inst.k):
        problems.append(f"superposition is not {inst.k}-edge-connected")
    if problems:
        out.write("INVALID " + "; ".join(problems) + "\n")
        return EXIT_NO
    out.write(f"VALID weight {weight}\n")
    return EXIT_YES


# ---------------------------------------------------------------------------
# generators


_CUBIC = {
    "k4": complete_graph(4),
    "prism": Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
    "k33": Graph(6, [(a, b) for a in range(3) for b in range(3, 6)]),
    "petersen": Graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                      + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]),
}

_TREES = {"k1": 0, "k2": 1, "p3": 2, "p4": 3, "star3": 4}


def _parse_costs(specs: Sequence[str], tree: Graph) -> Dict[tuple, int]:
    cost = {e: 1 for e in tree_nonedges(tree)}
    for spec in specs:
        try:
            u, v, c = (int(x) for x in spec.split(","))
        except ValueError:
            raise UsageError(f"cost must look like u,v,c, got {spec!r}") from None
        key = (min(u, v), max(u, v))
        if key not in cost:
            raise UsageError(f"{key} is not a non-edge of the tree")
        cost[key] = c
    return cost


def cmd_gen(args, out) -> int:
    if args.family == "random":
        inst = gen_random(GenParams(args.ng, args.nh, args.p, args.wmax, args.k, args.connected), args.seed)
    elif args.family == "hampath":
        inst = reduce_hamiltonian_path(_CUBIC[args.graph])
    elif args.family == "augment":
        tree = all_trees(4)[_TREES[args.tree]]
        inst = reduce_biconnectivity_augmentation(tree, _parse_costs(args.cost, tree), args.budget)
    else:  # subiso
        src = _load(args.source)
        inst = reduce_subgraph_isomorphism(src.g, src.h, src.k)
    out.write(serialize_instance(inst))
    return EXIT_YES


# ---------------------------------------------------------------------------
# benchmark


BENCH_FIELDS = ["solver", "k", "n_g", "n_h", "seed", "status", "weight", "seconds"]


def _bench_rows(args) -> List[Dict[str, object]]:
    solvers: Dict[str, Callable[[Instance], Optional[Solution]]] = {
        "exact": lambda inst: _solve(inst, None, args.parallel),
    }
    if args.with_oracle:
        solvers["oracle"] = lambda inst: brute_force_optimum(inst.g, inst.h, inst.omega, inst.k, cap=args.cap)
    rows = []
    for n_g in args.sizes:
        for rep in range(args.repeats):
            seed = args.seed + rep
            inst = gen_random(GenParams(n_g, min(args.nh, n_g), args.p, args.wmax, args.k,
                                        connected_g=args.k == 2), seed)
            for name, run in solvers.items():
                t0 = time.perf_counter()
                try:
                    sol = run(inst)
                    status = "ok" if sol is not None else "infeasible"
                except OracleTooLarge:
                    sol, status = None, "cap"
                except CoverTooLarge:
                    sol, status = None, "cover"
                rows.append({
                    "solver": name, "k": args.k, "n_g": n_g, "n_h": inst.h.n, "seed": seed,
                    "status": status, "weight": "" if sol is None else sol.weight,
                    "seconds": f"{time.perf_counter() - t0:.6f}",
                })
    return rows


def cmd_bench(args, out) -> int:
    rows = _bench_rows(args)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    out.write(buf.getvalue())
    if args.figure:
        from .report import runtime_figure

        runtime_figure(rows, args.figure, title=f"random instances, k={args.k}")
    return EXIT_YES


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (u64)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="oracle injection cap")
    common.add_argument("--tmax", type=int, default=None, help="largest vertex cover to accept")
    common.add_argument("--parallel", type=int, default=1, help="worker processes for branch search")

    p = argparse.ArgumentParser(prog="structaug", description="Structured edge-connectivity augmentation.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="exact minimum-weight placement")
    s.add_argument("instance")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("feasible", parents=[common], help="unweighted feasibility test")
    s.add_argument("instance")
    s.add_argument("--construct", action="store_true", help="also print a certificate mapping")
    s.set_defaults(func=cmd_feasible)

    s = sub.add_parser("oracle", parents=[common], help="brute force over all injections")
    s.add_argument("instance")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("check", parents=[common], help="verify a mapping certificate")
    s.add_argument("instance")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", parents=[common], help="emit an instance")
    s.add_argument("family", choices=["random", "hampath", "augment", "subiso"])
    s.add_argument("--ng", type=int, default=7)
    s.add_argument("--nh", type=int, default=4)
    s.add_argument("--p", type=float, default=0.3, help="edge probability")
    s.add_argument("--wmax", type=int, default=3)
    s.add_argument("--k", type=int, choices=[1, 2], default=1)
    s.add_argument("--connected", action="store_true", help="force G connected")
    s.add_argument("--graph", choices=sorted(_CUBIC), default="k4", help="cubic graph for hampath")
    s.add_argument("--tree", choices=sorted(_TREES), default="p3", help="tree for augment")
    s.add_argument("--cost", action="append", default=[], help="u,v,c cost of a tree non-edge (default 1)")
    s.add_argument("--budget", type=int, default=1, help="budget for augment")
    s.add_argument("--source", help="instance file whose g, h and k feed subiso")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", parents=[common], help="timing CSV on random instances")
    s.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10, 12])
    s.add_argument("--nh", type=int, default=4)
    s.add_argument("--p", type=float, default=0.3)
    s.add_argument("--wmax", type=int, default=3)
    s.add_argument("--k", type=int, choices=[1, 2], default=1)
    s.add_argument("--repeats", type=int, default=3)
    s.add_argument("--with-oracle", action="store_true")
    s.add_argument("--figure", help="write a runtime plot to this path")
    s.set_defaults(func=cmd_bench)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    if args.parallel < 1:
        err.write("error: --parallel must be at least 1\n")
        return EXIT_USAGE
    if args.command == "gen" and args.family == "subiso" and not args.source:
        err.write("error: gen subiso needs --source\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except OracleTooLarge as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except (FormatError, GraphError, UsageError, CoverTooLarge) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
