"""Finite simplicial graphs, colorings, file formats and the brute-force coloring oracle."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import ParseError, PreconditionError

_INT = re.compile(r"^\d+$")


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset = frozenset()
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise PreconditionError("vertex_count must be non-negative")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={self.vertex_count}")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canon))
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise PreconditionError("label table length differs from vertex_count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, labels=None) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges), labels)

    @property
    def n(self) -> int:
        return self.vertex_count

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def neighbors(self) -> list:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def relabel(self, perm) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.vertex_count, ((perm[u], perm[v]) for u, v in self.edges))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


@dataclass(frozen=True)
class Coloring:
    """Entry ``assignment[v]`` is the color of vertex v, drawn from 1..color_count."""

    assignment: tuple
    color_count: int

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        for c in self.assignment:
            if not 1 <= c <= self.color_count:
                raise PreconditionError(f"color {c} outside [1, {self.color_count}]")

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))

    def compressed(self) -> "Coloring":
        """Renumber the colors actually used to 1..k' preserving their order."""
        used = sorted(set(self.assignment))
        remap = {c: i + 1 for i, c in enumerate(used)}
        return Coloring(tuple(remap[c] for c in self.assignment), len(used))


def validate_coloring(g: Graph, c: Coloring) -> bool:
    if len(c.assignment) != g.vertex_count:
        raise PreconditionError(
            f"coloring has {len(c.assignment)} entries, graph has {g.vertex_count} vertices")
    for col in c.assignment:
        if not 1 <= col <= c.color_count:
            raise PreconditionError(f"color {col} outside [1, {c.color_count}]")
    return all(c.assignment[u] != c.assignment[v] for u, v in g.edges)


def _backtrack(adj, n, k):
    """First coloring in (vertex order, ascending color) backtracking order.

    Forward checking drops a branch as soon as some later vertex has no color
    left. Such branches contain no solution, so the answer is the same one
    plain backtracking would reach.
    """
    later = [[w for w in adj[v] if w > v] for v in range(n)]
    avail = [(1 << k) - 1] * n
    avail[0] = 1
    colors = [0] * n

    def place(v):
        if v == n:
            return True
        options = avail[v]
        for col in range(k):
            bit = 1 << col
            if not options & bit:
                continue
            touched = []
            wiped = False
            for w in later[v]:
                if avail[w] & bit:
                    avail[w] ^= bit
                    touched.append(w)
                    if not avail[w]:
                        wiped = True
                        break
            if not wiped:
                colors[v] = col + 1
                if place(v + 1):
                    return True
            for w in touched:
                avail[w] |= bit
        colors[v] = 0
        return False

    return tuple(colors) if place(0) else None


def min_coloring_oracle(g: Graph, k_max: int) -> Optional[Coloring]:
    """Minimum coloring by plain backtracking, trying k = 1, 2, ... up to k_max.

    Vertices are colored in index order with colors tried ascending; vertex 0
    is pinned to color 1. Returns None when the chromatic number exceeds k_max.
    """
    if k_max < 1:
        raise PreconditionError("k_max must be >= 1")
    if g.vertex_count == 0:
        return Coloring((), 0)
    adj = g.neighbors()
    for k in range(1, min(k_max, g.vertex_count) + 1):
        found = _backtrack(adj, g.vertex_count, k)
        if found is not None:
            return Coloring(found, k)
    return None


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p); pairs are visited in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError("p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------- file formats

def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_edge_list(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'n m' header", 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(_INT.match(p) for p in parts):
        raise ParseError(f"expected 'n m' header, got {header!r}", lineno)
    n, m = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}", lineno)
    pairs = []
    for lineno, line in body:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        pairs.append((lineno, toks))

    labels = None
    if all(_INT.match(t) for _, toks in pairs for t in toks):
        index = lambda tok: int(tok)
    else:
        table = {}
        for lineno, toks in pairs:
            for t in toks:
                if t not in table:
                    if len(table) == n:
                        raise ParseError(f"more than {n} distinct vertex names", lineno)
                    table[t] = len(table)
        names = list(table) + [f"_{i}" for i in range(len(table), n)]
        labels = tuple(names)
        index = table.__getitem__

    edges = set()
    for lineno, toks in pairs:
        u, v = index(toks[0]), index(toks[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {toks[0]}", lineno)
        if u >= n or v >= n:
            raise ParseError(f"endpoint out of range for n={n}", lineno)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges), labels)


def _parse_dimacs(text):
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] not in ("edge", "col") or not (
                    _INT.match(toks[2]) and _INT.match(toks[3])):
                raise ParseError(f"bad problem line {raw.strip()!r}", lineno)
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            n = int(toks[2])
        elif toks[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(toks) != 3 or not (_INT.match(toks[1]) and _INT.match(toks[2])):
                raise ParseError(f"bad edge line {raw.strip()!r}", lineno)
            u, v = int(toks[1]) - 1, int(toks[2]) - 1
            if u == v:
                raise ParseError(f"self-loop at vertex {toks[1]}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"endpoint out of range for n={n}", lineno)
            edges.add((min(u, v), max(u, v)))
        else:
            raise ParseError(f"unknown line type {toks[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    return Graph(n, frozenset(edges))


def parse_graph(text: str, format: str = "edge-list") -> Graph:
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edge-list") -> str:
    edges = g.sorted_edges()
    if format == "edge-list":
        out = [f"{g.vertex_count} {len(edges)}"]
        out += [f"{g.label(u)} {g.label(v)}" for u, v in edges]
    elif format == "dimacs":
        out = [f"p edge {g.vertex_count} {len(edges)}"]
        out += [f"e {u + 1} {v + 1}" for u, v in edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "\n".join(out) + "\n"


def guess_format(text: str) -> str:
    for _, line in _content_lines(text):
        return "dimacs" if line.split()[0] in ("p", "c", "e") else "edge-list"
    return "edge-list"


def parse_coloring(text: str, g: Graph) -> Coloring:
    """Read 'vertex color' lines; vertices may be given by index or by label."""
    lookup = {}
    if g.labels is not None:
        lookup = {name: i for i, name in enumerate(g.labels)}
    colors = [None] * g.vertex_count
    for lineno, line in _content_lines(text):
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected 'vertex color', got {line!r}", lineno)
        vtok, ctok = toks
        if vtok in lookup:
            v = lookup[vtok]
        elif _INT.match(vtok):
            v = int(vtok)
        else:
            raise ParseError(f"unknown vertex {vtok!r}", lineno)
        if not 0 <= v < g.vertex_count:
            raise ParseError(f"vertex {vtok} out of range", lineno)
        if not re.match(r"^[+-]?\d+$", ctok):
            raise ParseError(f"bad color {ctok!r}", lineno)
        if colors[v] is not None:
            raise ParseError(f"vertex {vtok} colored twice", lineno)
        colors[v] = int(ctok)
    missing = [i for i, c in enumerate(colors) if c is None]
    if missing:
        raise ParseError(f"no color given for vertex {g.label(missing[0])}")
    if any(c < 1 for c in colors):
        raise PreconditionError("colors are 1-indexed")
    return Coloring(tuple(colors), max(colors, default=0))


def serialize_coloring(c: Coloring, g: Optional[Graph] = None) -> str:
    name = g.label if g is not None else str
    return "".join(f"{name(v)} {col}\n" for v, col in enumerate(c.assignment))
