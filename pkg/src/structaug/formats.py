"""Line-oriented text formats for instances and mapping certificates.

Instance::

    k 1
    g 3 1
    0 1
    h 2 1
    0 1
    wdefault 5
    w 0 2 1
    budget 4

Mapping certificate::

    map 0 2
    map 1 0
    weight 1

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .generators import Instance
from .graph import Graph, GraphError, Mapping, WeightFn


class FormatError(ValueError):
    """Malformed input; the message carries the offending line number."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def _tokens(text: str) -> Iterator[Tuple[int, List[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield no, body


def _int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(line, f"expected integer {what}, got {tok!r}") from None


def _nonneg(tok: str, line: int, what: str) -> int:
    v = _int(tok, line, what)
    if v < 0:
        raise FormatError(line, f"negative {what} {v}")
    return v


def _read_graph(lines, header: List[str], line: int, name: str) -> Graph:
    if len(header) != 3:
        raise FormatError(line, f"expected '{name} <n> <m>'")
    n = _nonneg(header[1], line, "vertex count")
    m = _nonneg(header[2], line, "edge count")
    edges = []
    seen = set()
    for _ in range(m):
        try:
            no, toks = next(lines)
        except StopIteration:
            raise FormatError(line, f"graph {name} declares {m} edges but input ended") from None
        if len(toks) != 2:
            raise FormatError(no, "expected an edge '<u> <v>'")
        u, v = _int(toks[0], no, "vertex"), _int(toks[1], no, "vertex")
        try:
            Graph(n, [(u, v)])
        except GraphError as exc:
            raise FormatError(no, str(exc)) from None
        e = (min(u, v), max(u, v))
        if e in seen:
            raise FormatError(no, f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def parse_instance(text: str) -> Instance:
    lines = _tokens(text)
    k: Optional[int] = None
    g: Optional[Graph] = None
    h: Optional[Graph] = None
    default = 0
    overrides: Dict[Tuple[int, int], int] = {}
    budget: Optional[int] = None
    for no, toks in lines:
        key = toks[0]
        if key == "k":
            if len(toks) != 2:
                raise FormatError(no, "expected 'k <1|2>'")
            k = _int(toks[1], no, "k")
            if k not in (1, 2):
                raise FormatError(no, f"k must be 1 or 2, got {k}")
        elif key == "g":
            g = _read_graph(lines, toks, no, "g")
        elif key == "h":
            h = _read_graph(lines, toks, no, "h")
        elif key == "wdefault":
            if len(toks) != 2:
                raise FormatError(no, "expected 'wdefault <d>'")
            default = _nonneg(toks[1], no, "weight")
        elif key == "w":
            if len(toks) != 4:
                raise FormatError(no, "expected 'w <u> <v> <value>'")
            u, v = _int(toks[1], no, "vertex"), _int(toks[2], no, "vertex")
            if not u < v:
                raise FormatError(no, f"weight pair must satisfy u < v, got {u} {v}")
            if (u, v) in overrides:
                raise FormatError(no, f"duplicate weight for pair ({u}, {v})")
            overrides[(u, v)] = _nonneg(toks[3], no, "weight")
        elif key == "budget":
            if len(toks) != 2:
                raise FormatError(no, "expected 'budget <W>'")
            budget = _nonneg(toks[1], no, "budget")
        else:
            raise FormatError(no, f"unknown directive {key!r}")
    if k is None or g is None or h is None:
        missing = [name for name, val in (("k", k), ("g", g), ("h", h)) if val is None]
        raise FormatError(0, f"missing directive(s): {', '.join(missing)}")
    for (u, v) in overrides:
        if v >= g.n:
            raise FormatError(0, f"weight pair ({u}, {v}) out of range for n={g.n}")
    return Instance(g, h, WeightFn(default, overrides), budget, k)


def serialize_instance(inst: Instance) -> str:
    out = [f"k {inst.k}", f"g {inst.g.n} {inst.g.m}"]
    out += [f"{u} {v}" for u, v in inst.g.edges]
    out.append(f"h {inst.h.n} {inst.h.m}")
    out += [f"{u} {v}" for u, v in inst.h.edges]
    out.append(f"wdefault {inst.omega.default}")
    out += [f"w {u} {v} {c}" for (u, v), c in sorted(inst.omega.overrides.items())]
    if inst.budget is not None:
        out.append(f"budget {inst.budget}")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class Certificate:
    phi: Mapping
    weight: Optional[int]


def parse_mapping(text: str) -> Certificate:
    """Read ``map``/``weight`` lines.  Injectivity is checked by the caller."""
    pairs: List[Tuple[int, int]] = []
    weight: Optional[int] = None
    for no, toks in _tokens(text):
        if toks[0] == "map" and len(toks) == 3:
            if weight is not None:
                raise FormatError(no, "map line after the weight line")
            pairs.append((_nonneg(toks[1], no, "vertex"), _nonneg(toks[2], no, "vertex")))
        elif toks[0] == "weight" and len(toks) == 2:
            if weight is not None:
                raise FormatError(no, "second weight line")
            weight = _nonneg(toks[1], no, "weight")
        else:
            raise FormatError(no, f"expected 'map <h> <g>' or 'weight <w>', got {' '.join(toks)!r}")
    return Certificate(Mapping(pairs), weight)


def serialize_mapping(phi: Mapping, weight: int) -> str:
    out = [f"map {x} {y}" for x, y in phi.assignments]
    out.append(f"weight {weight}")
    return "\n".join(out) + "\n"
