"""Slow, independent reference implementations used to cross-check the package.

Nothing here imports graphmorse internals beyond the plain Graph data
(vertices and edges), so agreement is evidence rather than tautology.
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache


def adjacency(vertices, edges):
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def cliques(vertices, edges):
    """Every non-empty clique, by testing all vertex subsets."""
    adj = adjacency(vertices, edges)
    out = []
    for r in range(1, len(vertices) + 1):
        found = False
        for c in itertools.combinations(sorted(vertices), r):
            if all(b in adj[a] for a, b in itertools.combinations(c, 2)):
                out.append(c)
                found = True
        if not found:
            break
    return out


def f_vector(vertices, edges):
    counts = {}
    for c in cliques(vertices, edges):
        counts[len(c) - 1] = counts.get(len(c) - 1, 0) + 1
    return tuple(counts[k] for k in sorted(counts))


def euler(vertices, edges):
    return sum((-1) ** k * n for k, n in enumerate(f_vector(vertices, edges)))


def dense_rank(rows):
    """Rank by textbook Gaussian elimination on Fractions."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                factor = m[i][col] / m[rank][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def boundary_matrices(simplices):
    """Dense d_k with entries (-1)^j for the face missing the j-th vertex (0-based)."""
    by_dim = {}
    for s in simplices:
        by_dim.setdefault(len(s) - 1, []).append(tuple(s))
    for k in by_dim:
        by_dim[k].sort()
    top = max(by_dim, default=-1)
    mats = []
    for k in range(top):
        low = {s: i for i, s in enumerate(by_dim[k])}
        mat = []
        for x in by_dim[k + 1]:
            row = [0] * len(low)
            for j in range(len(x)):
                row[low[x[:j] + x[j + 1:]]] = (-1) ** j
            mat.append(row)
        mats.append(mat)
    return [len(by_dim[k]) for k in range(top + 1)], mats


def betti_of_simplices(simplices):
    f, mats = boundary_matrices(simplices)
    ranks = [dense_rank(m) for m in mats]
    return tuple(f[k] - (ranks[k] if k < len(ranks) else 0) - (ranks[k - 1] if k else 0)
                 for k in range(len(f)))


def betti(vertices, edges):
    return betti_of_simplices(cliques(vertices, edges))


def components(vertices, edges):
    """Number of connected components by union-find."""
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in vertices})


def contractible(vertices, edges):
    """The recursive definition verbatim, memoised on vertex frozensets."""
    adj = adjacency(vertices, edges)

    @lru_cache(maxsize=None)
    def rec(vs):
        if len(vs) == 0:
            return False
        if len(vs) == 1:
            return True
        return any(rec(frozenset(adj[v] & vs)) and rec(vs - {v}) for v in sorted(vs))

    return rec(frozenset(vertices))


def index_sum_over_orderings(vertices, edges, v):
    """Average of 1 - chi(S^-(v)) over all orderings of the closed ball of v."""
    adj = adjacency(vertices, edges)
    ball = sorted(adj[v] | {v})
    total, count = Fraction(0), 0
    for perm in itertools.permutations(ball):
        rank = {w: i for i, w in enumerate(perm)}
        below = [w for w in adj[v] if rank[w] < rank[v]]
        sub = [e for e in edges if e[0] in below and e[1] in below]
        total += 1 - euler(below, sub)
        count += 1
    return total / count


def critical_points(vertices, edges, order):
    adj = adjacency(vertices, edges)
    rank = {w: i for i, w in enumerate(order)}
    n = 0
    for v in vertices:
        below = frozenset(w for w in adj[v] if rank[w] < rank[v])
        sub = [e for e in edges if e[0] in below and e[1] in below]
        if not contractible(below, sub):
            n += 1
    return n


def cri(vertices, edges):
    """Exhaustive minimum over all orderings."""
    return min(critical_points(vertices, edges, p) for p in itertools.permutations(vertices))


def stirling2(n, k):
    """Partitions of an n-set into k blocks, by the explicit sum formula."""
    return sum((-1) ** j * math.comb(k, j) * (k - j) ** n for j in range(k + 1)) // math.factorial(k)


def refinement_f_vector(f):
    """f_j of the Barycentric refinement from f by Stirling numbers."""
    top = len(f)
    return tuple(sum(math.factorial(j + 1) * stirling2(k + 1, j + 1) * f[k] for k in range(top))
                 for j in range(top))


def moebius(n):
    """mu(n) by trial division."""
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def mertens(n):
    return sum(moebius(k) for k in range(1, n + 1))
