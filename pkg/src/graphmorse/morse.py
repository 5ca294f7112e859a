"""Poincare-Hopf indices, Morse functions, critical-point minimisation, curvature.

A vertex function is a plain ``dict`` from vertex label to a number (ints or
Fractions). Only comparisons between adjacent vertices matter, so an
injective function is the same thing as a vertex ordering.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .complex import euler_characteristic, f_polynomial, poly_add, whitney_complex
from .errors import CapExceeded, GraphInputError, NotLocallyInjective
from .graphs import Digraph, Graph, iter_bits, popcount
from .homotopy import DEFAULT_BUDGET, _Search

DEFAULT_ORDER_CAP = 16
EXACT_DEGREE_CAP = 16


# -- vertex functions ---------------------------------------------------------

def ordering_function(order) -> dict:
    """The injective function sending the i-th vertex of ``order`` to i."""
    return {v: i for i, v in enumerate(order)}


def check_function(g: Graph, f: dict):
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise GraphInputError(f"function has no value at vertex {missing[0]}")
    extra = [v for v in f if v not in g.position]
    if extra:
        raise GraphInputError(f"function is defined at unknown vertex {extra[0]}")


def is_locally_injective(g: Graph, f: dict) -> bool:
    check_function(g, f)
    return all(f[a] != f[b] for a, b in g.edges)


def require_locally_injective(g: Graph, f: dict):
    check_function(g, f)
    for a, b in sorted(g.edges):
        if f[a] == f[b]:
            raise NotLocallyInjective(a, b)


def _below_mask(g: Graph, f: dict, i: int) -> int:
    v = g.vertices[i]
    fv = f[v]
    return sum(1 << j for j in iter_bits(g.adj[i]) if f[g.vertices[j]] < fv)


def stable_sphere(g: Graph, f: dict, v) -> Graph:
    """S^-(v): neighbours of ``v`` with strictly smaller value."""
    require_locally_injective(g, f)
    g.check_vertex(v)
    return g.subgraph_mask(_below_mask(g, f, g.position[v]))


def _euler_of_mask(g: Graph, mask: int) -> int:
    return euler_characteristic(whitney_complex(g.subgraph_mask(mask)))


def ph_index(g: Graph, f: dict, v) -> int:
    return 1 - euler_characteristic(whitney_complex(stable_sphere(g, f, v)))


def ph_divisor(g: Graph, f: dict) -> dict:
    require_locally_injective(g, f)
    return {v: 1 - _euler_of_mask(g, _below_mask(g, f, i)) for i, v in enumerate(g.vertices)}


@dataclass
class PHReport:
    divisor: dict
    total: int
    chi: int

    @property
    def passed(self) -> bool:
        return self.total == self.chi

    def to_dict(self) -> dict:
        return {"divisor": {str(v): i for v, i in self.divisor.items()},
                "sum": self.total, "chi": self.chi, "pass": self.passed}


def ph_theorem_check(g: Graph, f: dict) -> PHReport:
    div = ph_divisor(g, f)
    return PHReport(div, sum(div.values()), euler_characteristic(whitney_complex(g)))


@dataclass
class PolynomialReport:
    lhs: tuple
    rhs: tuple

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def ph_polynomial_check(g: Graph, f: dict) -> PolynomialReport:
    """f_G(t) against 1 + t * sum_v f_{S^-(v)}(t), coefficientwise."""
    require_locally_injective(g, f)
    total = (0,)
    for i in range(len(g)):
        below = whitney_complex(g.subgraph_mask(_below_mask(g, f, i)))
        total = poly_add(total, f_polynomial(below))
    rhs = poly_add((1,), (0,) + total)
    return PolynomialReport(f_polynomial(whitney_complex(g)), rhs)


@dataclass
class EnergyReport:
    divisor: dict
    total: int
    energy: int

    @property
    def passed(self) -> bool:
        return self.total == self.energy


def energized_ph(g: Graph, f: dict, h: dict) -> EnergyReport:
    """Push the energy h(x) of each simplex to its f-maximal vertex."""
    require_locally_injective(g, f)
    k = whitney_complex(g)
    div = {v: 0 for v in g.vertices}
    energy = 0
    for x in k.simplices():
        if x not in h:
            raise GraphInputError(f"energy undefined on simplex {list(x)}")
        top = max(x, key=lambda v: f[v])
        div[top] += h[x]
        energy += h[x]
    return EnergyReport(div, sum(div.values()), energy)


def digraph_ph(d: Digraph) -> PHReport:
    """Indices from clique maxima of a locally non-circular digraph.

    An arc (a, b) reads "a below b". Every clique must carry an acyclic
    orientation, which for tournaments means no 2-cycles and no directed
    triangles; the index of v sums (-1)^dim over cliques whose top is v.
    """
    g = d.underlying()
    arcs = d.arcs
    for a, b in sorted(arcs):
        if (b, a) in arcs:
            raise GraphInputError(f"locally circular digraph: clique {sorted((a, b))}")
    for a, b in sorted(arcs):
        for c in g.neighbors(a):
            if c != b and g.has_edge(b, c) and (b, c) in arcs and (c, a) in arcs:
                raise GraphInputError(
                    f"locally circular digraph: clique {sorted((a, b, c))}")
    div = {v: 0 for v in g.vertices}
    for x in whitney_complex(g).simplices():
        top = [v for v in x if not any((v, w) in arcs for w in x if w != v)]
        div[top[0]] += (-1) ** (len(x) - 1)
    return PHReport(div, sum(div.values()), euler_characteristic(whitney_complex(g)))


# -- Morse functions -------------------------------------------------------------

@dataclass
class MorseProfile:
    critical: dict          # vertex -> Morse index
    regular: tuple
    c: tuple                # c_0 .. c_d

    @property
    def count(self) -> int:
        return len(self.critical)

    @property
    def euler(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.c))


@dataclass
class NotMorse:
    vertex: int
    reason: str


def morse_profile(g: Graph, f: dict, budget: int = DEFAULT_BUDGET):
    """Classify every vertex; returns MorseProfile or NotMorse.

    A contractible stable sphere makes a regular point; a (k-1)-sphere makes
    a critical point of Morse index k; anything else disqualifies ``f``.
    BudgetExceeded propagates when a classification cannot be decided.
    """
    require_locally_injective(g, f)
    s = _Search(g, budget)
    critical, regular = {}, []
    for i, v in enumerate(g.vertices):
        mask = _below_mask(g, f, i)
        if s.contractible(mask):
            regular.append(v)
            continue
        d = s.sphere(mask)
        if d is None:
            return NotMorse(v, "stable sphere is neither contractible nor a sphere")
        critical[v] = d + 1
    top = max(critical.values(), default=-1)
    c = [0] * (top + 1)
    for m in critical.values():
        c[m] += 1
    return MorseProfile(critical, tuple(regular), tuple(c))


@dataclass
class MorseInequalityReport:
    betti: tuple
    c: tuple
    strong: list            # (lhs, rhs) alternating partial sums per k
    weak: list              # (b_k, c_k) per k

    @property
    def strong_ok(self) -> bool:
        return all(l <= r for l, r in self.strong)

    @property
    def weak_ok(self) -> bool:
        return all(b <= c for b, c in self.weak)

    @property
    def euler_ok(self) -> bool:
        return self.strong[-1][0] == self.strong[-1][1] if self.strong else True

    @property
    def passed(self) -> bool:
        return self.strong_ok and self.weak_ok and self.euler_ok


def morse_inequalities_check(b, c) -> MorseInequalityReport:
    n = max(len(b), len(c))
    b = list(b) + [0] * (n - len(b))
    c = list(c) + [0] * (n - len(c))
    strong = []
    for k in range(n):
        lhs = sum((-1) ** (k - j) * b[j] for j in range(k + 1))
        rhs = sum((-1) ** (k - j) * c[j] for j in range(k + 1))
        strong.append((lhs, rhs))
    return MorseInequalityReport(tuple(b), tuple(c), strong, list(zip(b, c)))


# -- critical point minimisation ------------------------------------------------

def _order_dp(g: Graph, cost):
    """Minimum over vertex orderings of the summed per-vertex cost.

    ``cost(i, below_mask)`` returns 0/1 or None (forbidden). The stable
    sphere of a vertex only depends on which neighbours come earlier, so a
    shortest path over the lattice of placed-vertex sets is exact.
    """
    n = len(g)
    adj = g.adj
    inf = n + 1
    best = [inf] * (1 << n)
    parent = [-1] * (1 << n)
    best[0] = 0
    memo = {}
    for mask in range(1 << n):
        here = best[mask]
        if here == inf:
            continue
        free = ~mask & ((1 << n) - 1)
        for i in iter_bits(free):
            below = adj[i] & mask
            key = (i, below)
            c = memo.get(key, -1)
            if c == -1:
                c = cost(i, below)
                memo[key] = c
            if c is None:
                continue
            nxt = mask | 1 << i
            if here + c < best[nxt]:
                best[nxt] = here + c
                parent[nxt] = i
    full = (1 << n) - 1
    if best[full] == inf:
        return None, None
    order = []
    mask = full
    while mask:
        i = parent[mask]
        order.append(g.vertices[i])
        mask &= ~(1 << i)
    return best[full], tuple(reversed(order))


def cri_exact(g: Graph, cap: int = DEFAULT_ORDER_CAP, budget: int = DEFAULT_BUDGET,
              with_witness: bool = False):
    """Fewest critical points of any injective function on ``g``."""
    if len(g) > cap:
        raise CapExceeded(f"{len(g)} vertices exceeds cri_exact cap {cap}; "
                          "use cri_heuristic")
    if not len(g):
        return (0, ()) if with_witness else 0
    s = _Search(g, budget)
    value, order = _order_dp(g, lambda i, below: 0 if s.contractible(below) else 1)
    return (value, order) if with_witness else value


def morse_min_exact(g: Graph, cap: int = DEFAULT_ORDER_CAP, budget: int = DEFAULT_BUDGET,
                    with_witness: bool = False):
    """Fewest critical points of a Morse function, or None if none exists."""
    if len(g) > cap:
        raise CapExceeded(f"{len(g)} vertices exceeds morse_min_exact cap {cap}")
    s = _Search(g, budget)

    def cost(i, below):
        if s.contractible(below):
            return 0
        return 1 if s.sphere(below) is not None else None

    value, order = _order_dp(g, cost)
    return (value, order) if with_witness else value


def critical_count(g: Graph, order, s: _Search | None = None) -> int:
    s = s or _Search(g)
    rank = {v: r for r, v in enumerate(order)}
    total = 0
    for i, v in enumerate(g.vertices):
        if not s.contractible(_below_mask(g, rank, i)):
            total += 1
    return total


def cri_heuristic(g: Graph, restarts: int = 20, seed: int = 0,
                  budget: int = DEFAULT_BUDGET, with_witness: bool = False):
    """Upper bound on cri from randomised restarts of swap local search."""
    rng = random.Random(seed)
    s = _Search(g, budget)
    verts = list(g.vertices)
    best, best_order = len(verts) + 1, tuple(verts)
    for _ in range(max(restarts, 1)):
        order = verts[:]
        rng.shuffle(order)
        value = critical_count(g, order, s)
        improved = True
        while improved and value > 1:
            improved = False
            for a in range(len(order)):
                for b in range(a + 1, len(order)):
                    order[a], order[b] = order[b], order[a]
                    trial = critical_count(g, order, s)
                    if trial < value:
                        value = trial
                        improved = True
                        break
                    order[a], order[b] = order[b], order[a]
                if improved:
                    break
        if value < best:
            best, best_order = value, tuple(order)
        if best <= 1:
            break
    if not verts:
        best = 0
    return (best, best_order) if with_witness else best


# -- curvature ---------------------------------------------------------------

@dataclass
class CurvatureField:
    values: dict
    measure: str
    stderr: dict = field(default_factory=dict)

    @property
    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    def to_dict(self) -> dict:
        out = {"measure": self.measure,
               "values": {str(v): str(x) for v, x in self.values.items()},
               "sum": str(self.total)}
        if self.stderr:
            out["stderr"] = {str(v): e for v, e in self.stderr.items()}
        return out


def curvature_levitt(g: Graph) -> CurvatureField:
    """K(v) = 1 - f_0(S(v))/2 + f_1(S(v))/3 - ..."""
    values = {}
    for i, v in enumerate(g.vertices):
        fv = whitney_complex(g.subgraph_mask(g.adj[i])).f_vector
        values[v] = 1 + sum(Fraction((-1) ** (k + 1) * n, k + 2) for k, n in enumerate(fv))
    return CurvatureField(values, "levitt-uniform")


def _local_euler_table(g: Graph, i: int) -> tuple:
    """(positions of S(v), chi of every induced subgraph of S(v) by local bitmask)."""
    nbrs = list(iter_bits(g.adj[i]))
    local = {p: b for b, p in enumerate(nbrs)}
    ladj = [sum(1 << local[q] for q in iter_bits(g.adj[p] & g.adj[i])) for p in nbrs]
    m = len(nbrs)
    chi = [0] * (1 << m)
    for a in range(1, 1 << m):
        low = (a & -a).bit_length() - 1
        rest = a & ~(1 << low)
        chi[a] = chi[rest] + 1 - chi[ladj[low] & rest]
    return nbrs, chi


def curvature_expectation_exact(g: Graph, v, max_degree: int = EXACT_DEGREE_CAP) -> Fraction:
    """E[i_g(v)] for a uniformly random vertex ordering, by enumeration.

    The rank of v inside its unit ball is uniform, and given the rank r the
    set of smaller neighbours is a uniform (r-1)-subset of S(v).
    """
    g.check_vertex(v)
    i = g.position[v]
    m = popcount(g.adj[i])
    if m > max_degree:
        raise CapExceeded(f"degree {m} exceeds {max_degree}; use curvature_mc")
    _, chi = _local_euler_table(g, i)
    total = Fraction(0)
    for a in range(1 << m):
        total += Fraction(1 - chi[a], math.comb(m, popcount(a)))
    return total / (m + 1)


def curvature_mc(g: Graph, samples: int, seed: int = 0) -> CurvatureField:
    """Empirical mean of Poincare-Hopf divisors over random orderings.

    Uses a counter-based Philox stream, so results depend only on ``seed``.
    The mean of divisors that each sum to chi sums to chi exactly.
    """
    if samples < 1:
        raise GraphInputError("samples must be >= 1")
    n = len(g)
    rng = np.random.Generator(np.random.Philox(seed))
    tables = []
    for i in range(n):
        if popcount(g.adj[i]) <= 20:
            nbrs, chi = _local_euler_table(g, i)
            tables.append((nbrs, chi))
        else:
            tables.append(None)
    sums = [0] * n
    squares = [0] * n
    for _ in range(samples):
        rank = rng.permutation(n).tolist()
        for i in range(n):
            entry = tables[i]
            if entry is None:
                mask = sum(1 << j for j in iter_bits(g.adj[i]) if rank[j] < rank[i])
                idx = 1 - _euler_of_mask(g, mask)
            else:
                nbrs, chi = entry
                local = 0
                for b, j in enumerate(nbrs):
                    if rank[j] < rank[i]:
                        local |= 1 << b
                idx = 1 - chi[local]
            sums[i] += idx
            squares[i] += idx * idx
    values, errs = {}, {}
    for i, v in enumerate(g.vertices):
        mean = Fraction(sums[i], samples)
        values[v] = mean
        if samples > 1:
            var = (squares[i] - samples * float(mean) ** 2) / (samples - 1)
            errs[v] = math.sqrt(max(var, 0.0) / samples)
        else:
            errs[v] = float("inf")
    return CurvatureField(values, f"mc(seed={seed}, samples={samples})", errs)
