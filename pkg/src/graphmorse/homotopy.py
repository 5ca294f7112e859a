"""Contractibility, homotopy reduction, spheres, balls, manifolds, dimension.

Every subproblem met while deciding contractibility of ``g`` is an induced
subgraph of ``g``: unit spheres of subgraphs and vertex deletions never
leave the host vertex set. Search results are therefore memoised per host
graph on vertex bitmasks (``g.memo``), which is exact and needs no
isomorphism testing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .complex import _clique_positions, whitney_complex
from .errors import BudgetExceeded, CapExceeded
from .graphs import Graph, iter_bits, popcount

DEFAULT_BUDGET = 10**6
BALL_CAP = 12
_PRUNE_CLIQUE_LIMIT = 20_000

CONTRACTIBLE = "contractible"
NOT_CONTRACTIBLE = "not-contractible"
UNKNOWN = "unknown-budget-exhausted"


@dataclass(frozen=True)
class HomotopyVerdict:
    status: str
    witness: tuple | None = None
    nodes: int = 0

    @property
    def contractible(self) -> bool | None:
        if self.status == UNKNOWN:
            return None
        return self.status == CONTRACTIBLE


class _Search:
    """Memoised exhaustive search on induced subgraphs of one host graph."""

    def __init__(self, g: Graph, budget: int = DEFAULT_BUDGET):
        self.g = g
        self.adj = g.adj
        self.budget = budget
        self.nodes = 0
        self.memo = g.memo.setdefault("contractible", {})
        self.sphere_memo = g.memo.setdefault("sphere", {})
        self._cliques = g.memo.get("clique_masks")
        if self._cliques is None and "clique_masks_failed" not in g.memo:
            try:
                cl = _clique_positions(g, _PRUNE_CLIQUE_LIMIT)
                self._cliques = [(sum(1 << i for i in c), len(c)) for c in cl]
                g.memo["clique_masks"] = self._cliques
            except CapExceeded:
                g.memo["clique_masks_failed"] = True

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes", self.budget)

    def euler(self, mask: int) -> int | None:
        if self._cliques is None:
            return None
        return sum(1 if n % 2 else -1 for c, n in self._cliques if c & mask == c)

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[i] | (1 << i)) & mask == mask for i in iter_bits(mask))

    def connected(self, mask: int) -> bool:
        start = mask & -mask
        comp = frontier = start
        while frontier:
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= self.adj[i]
            frontier = nxt & mask & ~comp
            comp |= frontier
        return comp == mask

    def contractible(self, mask: int) -> bool:
        r = self.memo.get(mask)
        if r is not None:
            return r
        self._tick()
        n = popcount(mask)
        if n == 0:
            r = False
        elif n == 1 or self.is_clique(mask):
            r = True
        elif not self.connected(mask) or self.euler(mask) not in (1, None):
            r = False
        else:
            r = False
            order = sorted(iter_bits(mask), key=lambda i: popcount(self.adj[i] & mask))
            for i in order:
                if self.contractible(self.adj[i] & mask) and \
                        self.contractible(mask & ~(1 << i)):
                    r = True
                    break
        self.memo[mask] = r
        return r

    def witness(self, mask: int) -> tuple:
        """Removal sequence down to one vertex, read back from the memo."""
        seq = []
        while popcount(mask) > 1:
            for i in sorted(iter_bits(mask), key=lambda i: popcount(self.adj[i] & mask)):
                if self.contractible(self.adj[i] & mask) and \
                        self.contractible(mask & ~(1 << i)):
                    seq.append(self.g.vertices[i])
                    mask &= ~(1 << i)
                    break
            else:  # pragma: no cover - memo says contractible, so a step exists
                raise AssertionError("inconsistent contractibility memo")
        return tuple(seq)

    def sphere(self, mask: int) -> int | None:
        if mask in self.sphere_memo:
            return self.sphere_memo[mask]
        self._tick()
        r = None
        if mask == 0:
            r = -1
        else:
            dims = set()
            for i in iter_bits(mask):
                d = self.sphere(self.adj[i] & mask)
                if d is None:
                    break
                dims.add(d)
                if len(dims) > 1:
                    break
            else:
                d = dims.pop() + 1
                chi = self.euler(mask)
                if chi is None or chi == 1 + (-1) ** d:
                    if any(self.contractible(mask & ~(1 << i)) for i in iter_bits(mask)):
                        r = d
        self.sphere_memo[mask] = r
        return r


def contractible_mask(g: Graph, mask: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Contractibility of the subgraph of ``g`` induced by ``mask``.

    Raises BudgetExceeded when the search needs more than ``budget`` nodes.
    """
    return _Search(g, budget).contractible(mask)


def sphere_mask(g: Graph, mask: int, budget: int = DEFAULT_BUDGET) -> int | None:
    return _Search(g, budget).sphere(mask)


def is_contractible(g: Graph, budget: int = DEFAULT_BUDGET) -> HomotopyVerdict:
    s = _Search(g, budget)
    try:
        ok = s.contractible(g.full_mask)
    except BudgetExceeded:
        return HomotopyVerdict(UNKNOWN, None, s.nodes)
    if not ok:
        return HomotopyVerdict(NOT_CONTRACTIBLE, None, s.nodes)
    return HomotopyVerdict(CONTRACTIBLE, s.witness(g.full_mask), s.nodes)


def contractible(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """Boolean form of :func:`is_contractible`; raises BudgetExceeded."""
    return contractible_mask(g, g.full_mask, budget)


def replay_witness(g: Graph, witness) -> bool:
    """Check a removal sequence from scratch, without the memo of ``g``."""
    fresh = Graph(g.vertices, g.edges)
    mask = fresh.full_mask
    for v in witness:
        if v not in fresh.position or not mask >> fresh.position[v] & 1:
            return False
        i = fresh.position[v]
        sphere = fresh.subgraph_mask(fresh.adj[i] & mask)
        if not contractible(Graph(sphere.vertices, sphere.edges)):
            return False
        mask &= ~(1 << i)
    return popcount(mask) == 1


def homotopy_reduce(g: Graph, budget: int = DEFAULT_BUDGET) -> Graph:
    """Greedily delete vertices with contractible unit spheres until stuck."""
    s = _Search(g, budget)
    mask = g.full_mask
    progress = True
    while progress:
        progress = False
        for i in iter_bits(mask):
            if s.contractible(g.adj[i] & mask):
                mask &= ~(1 << i)
                progress = True
                break
    return g.subgraph_mask(mask)


def sphere_dimension(g: Graph, budget: int = DEFAULT_BUDGET) -> int | None:
    """d if ``g`` is a d-sphere (the empty graph is the (-1)-sphere), else None."""
    return sphere_mask(g, g.full_mask, budget)


def is_manifold(g: Graph, budget: int = DEFAULT_BUDGET) -> int | None:
    """d if every unit sphere is a (d-1)-sphere, else None."""
    if not len(g):
        return None
    s = _Search(g, budget)
    dims = {s.sphere(g.adj[i]) for i in range(len(g))}
    if len(dims) != 1 or None in dims:
        return None
    return dims.pop() + 1


def boundary(g: Graph, budget: int = DEFAULT_BUDGET) -> Graph:
    """Subgraph generated by the vertices whose unit sphere is contractible."""
    s = _Search(g, budget)
    mask = 0
    for i in range(len(g)):
        if s.contractible(g.adj[i]):
            mask |= 1 << i
    return g.subgraph_mask(mask)


def _cone(g: Graph, mask: int) -> Graph:
    w = (g.vertices[-1] + 1) if len(g) else 0
    return Graph(g.vertices + (w,), g.edges | {(v, w) for v in g.labels_of(mask)})


def is_ball(g: Graph, cap: int = BALL_CAP, budget: int = DEFAULT_BUDGET) -> int | None:
    """d if ``g`` is G \\ v for some d-sphere G, found by trying every attaching set.

    Only graphs with at most ``cap`` vertices are decided; larger inputs
    raise CapExceeded.
    """
    if len(g) > cap:
        raise CapExceeded(f"ball recognition is limited to {cap} vertices")
    s = _Search(g, budget)
    first = g.mask_of(boundary(g, budget).vertices)
    for mask in itertools.chain([first], (m for m in range(1 << len(g)) if m != first)):
        d = s.sphere(mask)
        if d is None:
            continue
        cone = _cone(g, mask)
        if sphere_dimension(cone, budget) == d + 1:
            return d + 1
    return None


def homotopic_to_point(g: Graph, max_expansions: int = 2, budget: int = DEFAULT_BUDGET,
                       candidate_cap: int = 5000) -> bool | None:
    """Best-effort certificate that ``g`` is homotopic to K1.

    Tries up to ``max_expansions`` homotopy extensions (a new vertex attached
    to a contractible induced subgraph) followed by a contractibility test.
    Returns True on success and None when nothing was found within the caps;
    it never claims the converse.
    """
    seen = 0

    def search(h: Graph, depth: int) -> bool:
        nonlocal seen
        if contractible(h, budget):
            return True
        if depth == 0:
            return False
        s = _Search(h, budget)
        for mask in range(1, 1 << len(h)):
            if not s.contractible(mask):
                continue
            seen += 1
            if seen > candidate_cap:
                return False
            if search(_cone(h, mask), depth - 1):
                return True
        return False

    try:
        return True if search(g, max_expansions) else None
    except BudgetExceeded:
        return None


def inductive_dimension(g: Graph) -> Fraction:
    """Average of 1 + dim S(v) over vertices, recursively; -1 for the empty graph."""
    memo = g.memo.setdefault("inductive_dimension", {})
    adj = g.adj

    def dim(mask: int) -> Fraction:
        r = memo.get(mask)
        if r is not None:
            return r
        if mask == 0:
            r = Fraction(-1)
        else:
            total = Fraction(0)
            n = 0
            for i in iter_bits(mask):
                total += 1 + dim(adj[i] & mask)
                n += 1
            r = total / n
        memo[mask] = r
        return r

    return dim(g.full_mask)


def maximal_dimension(g: Graph) -> int:
    """Clique number minus one; -1 for the empty graph."""
    return whitney_complex(g).dim
