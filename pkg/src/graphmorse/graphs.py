"""Finite simple graphs, digraphs and the graph operations used throughout.

Vertices are nonnegative integer labels kept in increasing order. That order
is the global orientation convention: every simplex is written as a sorted
vertex tuple. Internally a vertex is also addressed by its *position* in the
vertex tuple, and vertex sets by bitmasks over positions, which is what the
search routines in :mod:`graphmorse.homotopy` and :mod:`graphmorse.morse`
operate on.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import GraphInputError


def iter_bits(mask: int):
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: frozenset

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        for a, b in zip(vs, vs[1:]):
            if not a < b:
                raise GraphInputError("vertex labels must be strictly increasing")
        if vs and (not isinstance(vs[0], int) or vs[0] < 0):
            raise GraphInputError("vertex labels must be nonnegative integers")
        known = set(vs)
        normal = set()
        for e in self.edges:
            a, b = e
            if a == b:
                raise GraphInputError(f"self-loop at vertex {a}")
            if a not in known or b not in known:
                raise GraphInputError(f"edge {e} uses a vertex not in the vertex list")
            normal.add((a, b) if a < b else (b, a))
        object.__setattr__(self, "edges", frozenset(normal))

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable | None = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        vs = set(vertices) if vertices is not None else set()
        for a, b in edges:
            vs.update((a, b))
        return cls(tuple(sorted(vs)), frozenset(edges))

    @classmethod
    def empty(cls) -> "Graph":
        return cls((), frozenset())

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"Graph(n={len(self.vertices)}, m={len(self.edges)})"

    # -- position / bitmask view -------------------------------------------

    @cached_property
    def position(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adj(self) -> tuple:
        """Neighbour bitmask of every vertex position."""
        pos = self.position
        masks = [0] * len(self.vertices)
        for a, b in self.edges:
            i, j = pos[a], pos[b]
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return tuple(masks)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @cached_property
    def memo(self) -> dict:
        # Per-graph scratch space for search caches, keyed by routine name.
        return {}

    def mask_of(self, labels: Iterable) -> int:
        pos = self.position
        mask = 0
        for v in labels:
            if v not in pos:
                raise GraphInputError(f"unknown vertex label {v!r}")
            mask |= 1 << pos[v]
        return mask

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.vertices[i] for i in iter_bits(mask))

    def subgraph_mask(self, mask: int) -> "Graph":
        vs = self.labels_of(mask)
        keep = set(vs)
        return Graph(vs, frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    # -- plain queries -------------------------------------------------------

    def check_vertex(self, v):
        if v not in self.position:
            raise GraphInputError(f"unknown vertex label {v!r}")

    def neighbors(self, v) -> tuple:
        self.check_vertex(v)
        return self.labels_of(self.adj[self.position[v]])

    def degree(self, v) -> int:
        self.check_vertex(v)
        return popcount(self.adj[self.position[v]])

    def has_edge(self, a, b) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def relabeled(self) -> "Graph":
        """Copy with labels 0..n-1, preserving vertex order."""
        pos = self.position
        return Graph(tuple(range(len(self.vertices))),
                     frozenset((pos[a], pos[b]) for a, b in self.edges))

    def components(self) -> list:
        """Vertex-label tuples of the connected components."""
        seen = 0
        comps = []
        for start in range(len(self.vertices)):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                nxt = 0
                for i in iter_bits(frontier):
                    nxt |= self.adj[i]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(self.labels_of(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        try:
            vertices = sorted(int(v) for v in data["vertices"])
            edges = [(int(a), int(b)) for a, b in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphInputError(f"malformed graph description: {exc}") from exc
        if len(set(vertices)) != len(vertices):
            raise GraphInputError("duplicate vertex labels")
        return cls(tuple(vertices), frozenset(edges))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphInputError(
                f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
        return cls.from_dict(data)


@dataclass(frozen=True)
class Digraph:
    vertices: tuple
    arcs: frozenset

    def __post_init__(self):
        vs = tuple(sorted(self.vertices))
        object.__setattr__(self, "vertices", vs)
        known = set(vs)
        for a, b in self.arcs:
            if a == b:
                raise GraphInputError(f"self-arc at vertex {a}")
            if a not in known or b not in known:
                raise GraphInputError(f"arc {(a, b)} uses a vertex not in the vertex list")
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in self.arcs))

    @classmethod
    def from_arcs(cls, arcs: Iterable, vertices: Iterable | None = None) -> "Digraph":
        arcs = [tuple(a) for a in arcs]
        vs = set(vertices) if vertices is not None else set()
        for a, b in arcs:
            vs.update((a, b))
        return cls(tuple(sorted(vs)), frozenset(arcs))

    def underlying(self) -> Graph:
        return Graph(self.vertices, frozenset(self.arcs))

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "arcs": [list(a) for a in sorted(self.arcs)]}

    @classmethod
    def from_dict(cls, data: dict) -> "Digraph":
        try:
            return cls(tuple(int(v) for v in data["vertices"]),
                       frozenset((int(a), int(b)) for a, b in data["arcs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphInputError(f"malformed digraph description: {exc}") from exc


# -- operations ---------------------------------------------------------------

def induced_subgraph(g: Graph, labels: Iterable) -> Graph:
    """Subgraph generated by ``labels``; labels are kept, not renumbered."""
    return g.subgraph_mask(g.mask_of(labels))


def unit_sphere(g: Graph, v) -> Graph:
    g.check_vertex(v)
    return g.subgraph_mask(g.adj[g.position[v]])


def unit_ball(g: Graph, v) -> Graph:
    g.check_vertex(v)
    i = g.position[v]
    return g.subgraph_mask(g.adj[i] | 1 << i)


def remove_vertex(g: Graph, v) -> Graph:
    g.check_vertex(v)
    return g.subgraph_mask(g.full_mask & ~(1 << g.position[v]))


def complement(g: Graph) -> Graph:
    edges = frozenset(e for e in itertools.combinations(g.vertices, 2) if e not in g.edges)
    return Graph(g.vertices, edges)


def _shifted(g: Graph, offset: int) -> tuple:
    pos = g.position
    return [(pos[a] + offset, pos[b] + offset) for a, b in g.edges]


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n, m = len(g), len(h)
    return Graph(tuple(range(n + m)), frozenset(_shifted(g, 0) + _shifted(h, n)))


def zykov_join(g: Graph, h: Graph) -> Graph:
    n, m = len(g), len(h)
    cross = [(i, n + j) for i in range(n) for j in range(m)]
    return Graph(tuple(range(n + m)), frozenset(_shifted(g, 0) + _shifted(h, n) + cross))


def shannon_product(g: Graph, h: Graph) -> Graph:
    """Strong product: vertex (i, j) becomes i * len(h) + j."""
    m = len(h)

    def closed(graph, i):
        return [i] + list(iter_bits(graph.adj[i]))

    edges = set()
    for i in range(len(g)):
        for j in range(m):
            a = i * m + j
            for k in closed(g, i):
                for l in closed(h, j):
                    b = k * m + l
                    if a < b:
                        edges.add((a, b))
    return Graph(tuple(range(len(g) * m)), frozenset(edges))


def mertens_graph(n: int) -> Graph:
    """Divisibility graph on 2..n."""
    if n < 2:
        raise GraphInputError("mertens_graph needs n >= 2")
    edges = [(a, b) for a in range(2, n + 1) for b in range(2 * a, n + 1, a)]
    return Graph(tuple(range(2, n + 1)), frozenset(edges))
