"""Whitney complexes of graphs and the combinatorics built on them."""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import cached_property

from .errors import CapExceeded, GraphInputError
from .graphs import Graph, iter_bits

DEFAULT_SIMPLEX_BUDGET = 100_000


class SimplicialComplex:
    """Finite abstract simplicial complex with sorted-tuple simplices.

    Simplices are grouped by dimension and sorted lexicographically inside
    each group; ``simplices()`` lists them dimension-major, which is also the
    row/column order of every matrix built from the complex.
    """

    def __init__(self, simplices, check=True):
        groups = {}
        for s in simplices:
            s = tuple(s)
            if not s:
                raise GraphInputError("empty simplex")
            if any(a >= b for a, b in zip(s, s[1:])):
                raise GraphInputError(f"simplex {s} is not strictly increasing")
            groups.setdefault(len(s) - 1, set()).add(s)
        top = max(groups, default=-1)
        self.by_dim = tuple(tuple(sorted(groups.get(k, ()))) for k in range(top + 1))
        self.index = {}
        for k, group in enumerate(self.by_dim):
            for i, s in enumerate(group):
                self.index[s] = i
        if check:
            for group in self.by_dim:
                for s in group:
                    for face in itertools.combinations(s, len(s) - 1):
                        if face and face not in self.index:
                            raise GraphInputError(
                                f"not closed under subsets: {s} lacks face {face}")

    @classmethod
    def from_facets(cls, facets) -> "SimplicialComplex":
        faces = set()
        for f in facets:
            f = tuple(sorted(f))
            for r in range(1, len(f) + 1):
                faces.update(itertools.combinations(f, r))
        return cls(faces, check=False)

    @property
    def dim(self) -> int:
        return len(self.by_dim) - 1

    def __len__(self):
        return sum(len(g) for g in self.by_dim)

    def __contains__(self, s):
        return tuple(s) in self.index

    def __repr__(self):
        return f"SimplicialComplex(f={self.f_vector})"

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.by_dim == other.by_dim

    def __hash__(self):
        return hash(self.by_dim)

    @property
    def f_vector(self) -> tuple:
        return tuple(len(g) for g in self.by_dim)

    @cached_property
    def offsets(self) -> tuple:
        """Position of the first k-simplex in the dimension-major listing."""
        out, total = [], 0
        for g in self.by_dim:
            out.append(total)
            total += len(g)
        return tuple(out)

    def simplices(self) -> list:
        return [s for g in self.by_dim for s in g]

    def flat_index(self, s) -> int:
        s = tuple(s)
        return self.offsets[len(s) - 1] + self.index[s]

    @cached_property
    def vertices(self) -> tuple:
        return tuple(s[0] for s in self.by_dim[0]) if self.by_dim else ()

    def facets(self) -> list:
        """Maximal simplices, in dimension-major order."""
        covered = set()
        for group in self.by_dim[1:]:
            for s in group:
                covered.update(itertools.combinations(s, len(s) - 1))
        return [s for s in self.simplices() if s not in covered]

    def one_skeleton_graph(self) -> Graph:
        edges = self.by_dim[1] if len(self.by_dim) > 1 else ()
        return Graph(self.vertices, frozenset(edges))

    def to_json(self) -> str:
        return json.dumps([[list(s) for s in g] for g in self.by_dim])

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        data = json.loads(text)
        return cls([tuple(s) for g in data for s in g])


def _clique_positions(g: Graph, budget: int):
    adj = g.adj
    out = []

    def extend(clique, cand):
        for i in iter_bits(cand):
            c = clique + (i,)
            out.append(c)
            if len(out) > budget:
                raise CapExceeded(f"complex exceeds the simplex budget of {budget}")
            extend(c, cand & adj[i] & ~((2 << i) - 1))

    extend((), g.full_mask)
    return out


def whitney_complex(g: Graph, budget: int = DEFAULT_SIMPLEX_BUDGET) -> SimplicialComplex:
    """All cliques of ``g`` as a simplicial complex (cached on the graph)."""
    cached = g.memo.get("whitney")
    if cached is not None:
        return cached
    vs = g.vertices
    cliques = [tuple(vs[i] for i in c) for c in _clique_positions(g, budget)]
    k = SimplicialComplex(cliques, check=False)
    g.memo["whitney"] = k
    return k


def euler_characteristic(k: SimplicialComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(k.f_vector))


def euler(g: Graph) -> int:
    return euler_characteristic(whitney_complex(g))


def f_polynomial(k: SimplicialComplex) -> tuple:
    """Coefficients (low degree first) of 1 + f_0 t + f_1 t^2 + ..."""
    return (1,) + k.f_vector


def poly_eval(coeffs, t) -> Fraction:
    return sum(Fraction(c) * Fraction(t) ** i for i, c in enumerate(coeffs))


def poly_add(p, q) -> tuple:
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_mul(p, q) -> tuple:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def proper_faces(s: tuple):
    for r in range(1, len(s)):
        yield from itertools.combinations(s, r)


def barycentric_refinement(k: SimplicialComplex) -> Graph:
    """Graph on the simplices of ``k`` (flat order), joined by strict inclusion."""
    edges = set()
    for s in k.simplices():
        i = k.flat_index(s)
        for face in proper_faces(s):
            edges.add((k.flat_index(face), i))
    return Graph(tuple(range(len(k))), frozenset(edges))


def dimension_function(k: SimplicialComplex) -> dict:
    """The dimension functional on the vertices of ``barycentric_refinement(k)``."""
    return {k.flat_index(s): len(s) - 1 for s in k.simplices()}


def skeleton(k: SimplicialComplex, m: int) -> SimplicialComplex:
    if m < 0:
        raise GraphInputError("skeleton dimension must be nonnegative")
    return SimplicialComplex([s for g in k.by_dim[: m + 1] for s in g], check=False)


def incidence_sign(x, y) -> int:
    """Sign of the face ``y`` in the boundary of ``x`` under sorted orientation."""
    x, y = tuple(x), tuple(y)
    if len(y) != len(x) - 1:
        return 0
    for j in range(len(x)):
        if x[:j] + x[j + 1:] == y:
            return -1 if j % 2 else 1
    return 0


def stanley_reisner_product(g: Graph, h: Graph) -> Graph:
    """Refinement of the Cartesian product; vertex (x, y) is ix * |h-complex| + iy."""
    kg, kh = whitney_complex(g), whitney_complex(h)
    m = len(kh)
    edges = set()
    for a in kg.simplices():
        ia = kg.flat_index(a)
        fa = [kg.flat_index(f) for f in proper_faces(a)] + [ia]
        for b in kh.simplices():
            ib = kh.flat_index(b)
            top = ia * m + ib
            fb = [kh.flat_index(f) for f in proper_faces(b)] + [ib]
            for i in fa:
                for j in fb:
                    low = i * m + j
                    if low != top:
                        edges.add((low, top))
    return Graph(tuple(range(len(kg) * m)), frozenset(edges))
