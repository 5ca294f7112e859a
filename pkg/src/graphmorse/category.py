"""Cup products, cup length and Lusternik-Schnirelmann category bounds."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .complex import SimplicialComplex, barycentric_refinement, stanley_reisner_product, \
    whitney_complex
from .errors import BudgetExceeded, GraphInputError
from .graphs import Graph, disjoint_union, shannon_product, zykov_join
from .hodge import cochain_image, cohomology_basis, derivative_cache
from .homotopy import DEFAULT_BUDGET, contractible, is_contractible

DEFAULT_FACET_CAP = 10
DEFAULT_PRODUCT_CAP = 10**4


class Cochain:
    """A degree-``degree`` cochain: one rational per simplex of that degree."""

    def __init__(self, complex_: SimplicialComplex, degree: int, values):
        if not 0 <= degree <= complex_.dim:
            raise GraphInputError(f"degree {degree} outside 0..{complex_.dim}")
        values = list(values)
        if len(values) != complex_.f_vector[degree]:
            raise GraphInputError("cochain length does not match the simplex count")
        self.complex = complex_
        self.degree = degree
        self.values = values

    @classmethod
    def from_dict(cls, complex_, degree, mapping) -> "Cochain":
        vals = [0] * complex_.f_vector[degree]
        for s, x in mapping.items():
            s = tuple(sorted(s))
            if len(s) != degree + 1 or s not in complex_.index:
                raise GraphInputError(f"{list(s)} is not a {degree}-simplex")
            vals[complex_.index[s]] = Fraction(x)
        return cls(complex_, degree, vals)

    @classmethod
    def constant(cls, complex_, value=1) -> "Cochain":
        return cls(complex_, 0, [value] * complex_.f_vector[0])

    def __repr__(self):
        return f"Cochain(degree={self.degree}, nnz={sum(1 for x in self.values if x)})"

    def __getitem__(self, simplex):
        return self.values[self.complex.index[tuple(simplex)]]

    def _same(self, other):
        if self.complex is not other.complex and self.complex != other.complex:
            raise GraphInputError("cochains live on different complexes")
        if self.degree != other.degree:
            raise GraphInputError("cochain degrees differ")

    def __add__(self, other):
        self._same(other)
        return Cochain(self.complex, self.degree, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same(other)
        return Cochain(self.complex, self.degree, [a - b for a, b in zip(self.values, other.values)])

    def __rmul__(self, scalar):
        return Cochain(self.complex, self.degree, [scalar * a for a in self.values])

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.degree == other.degree
                and self.complex == other.complex and self.values == other.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def d(self) -> "Cochain":
        k = self.complex
        if self.degree == k.dim:
            raise GraphInputError("no cochains above the top dimension")
        return Cochain(k, self.degree + 1, derivative_cache(k)[self.degree].apply(self.values))

    def is_closed(self) -> bool:
        return self.degree == self.complex.dim or self.d().is_zero()

    def to_dict(self) -> dict:
        return {",".join(map(str, s)): str(x)
                for s, x in zip(self.complex.by_dim[self.degree], self.values) if x}


def coboundary(c: Cochain) -> Cochain:
    return c.d()


def cup_product(a: Cochain, b: Cochain) -> Cochain:
    """Front face times back face: (a u b)(v_0..v_{p+q}) = a(v_0..v_p) b(v_p..v_{p+q})."""
    if a.complex is not b.complex and a.complex != b.complex:
        raise GraphInputError("cochains live on different complexes")
    k = a.complex
    p, q = a.degree, b.degree
    if p + q > k.dim:
        return None
    idx = k.index
    vals = []
    for x in k.by_dim[p + q]:
        fa = a.values[idx[x[:p + 1]]]
        vals.append(fa * b.values[idx[x[p:]]] if fa else 0)
    return Cochain(k, p + q, vals)


def is_exact(c: Cochain) -> bool:
    """Whether the closed cochain ``c`` is a coboundary."""
    if not c.is_closed():
        raise GraphInputError("is_exact expects a closed cochain")
    if c.degree == 0:
        return c.is_zero()
    image = _image(c.complex, c.degree)
    return image.contains({i: x for i, x in enumerate(c.values) if x})


def _image(k, deg):
    cache = k.__dict__.setdefault("_images", {})
    if deg not in cache:
        cache[deg] = cochain_image(k, deg)
    return cache[deg]


def cohomology_generators(k: SimplicialComplex) -> dict:
    """Positive-degree cohomology basis cochains, by degree."""
    return {deg: [Cochain(k, deg, v) for v in cohomology_basis(k, deg)]
            for deg in range(1, k.dim + 1)}


@dataclass
class CupLengthResult:
    length: int
    witness: tuple          # (degree, basis index) factors of a non-exact product
    products_tested: int
    truncated: bool


def cup_length_search(k: SimplicialComplex, cap: int = DEFAULT_PRODUCT_CAP) -> CupLengthResult:
    """Longest non-exact product of positive-degree basis classes.

    Products are multilinear and graded commutative on classes, so it is
    enough to try multisets of basis elements; an exact partial product
    stays exact under further multiplication, which prunes the search.
    """
    if k.dim < 1:
        return CupLengthResult(0, (), 0, False)
    gens = cohomology_generators(k)
    flat = [(deg, i, c) for deg in sorted(gens) for i, c in enumerate(gens[deg])]
    best = [0, ()]
    tested = 0
    truncated = False

    def extend(start, product, total, chosen):
        nonlocal tested, truncated
        for j in range(start, len(flat)):
            deg, i, c = flat[j]
            if total + deg > k.dim:
                continue
            if tested >= cap:
                truncated = True
                return
            nxt = c if product is None else cup_product(product, c)
            tested += 1
            if nxt.is_zero() or is_exact(nxt):
                continue
            here = chosen + ((deg, i),)
            if len(here) > best[0]:
                best[0], best[1] = len(here), here
            extend(j, nxt, total + deg, here)

    extend(0, None, 0, ())
    return CupLengthResult(best[0], best[1], tested, truncated)


def cup_length(k: SimplicialComplex, cap: int = DEFAULT_PRODUCT_CAP) -> int:
    return cup_length_search(k, cap).length


# -- category bounds ----------------------------------------------------------

@dataclass
class CategoryBounds:
    lower: int
    upper: int
    lower_witness: str
    cover: list = field(default_factory=list)   # lists of facet indices
    upper_witness: str = "facet-cover"
    facets: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact,
                "lower_witness": self.lower_witness, "upper_witness": self.upper_witness,
                "cover": [sorted(p) for p in self.cover],
                "facets": [list(f) for f in self.facets]}


def part_graph(facets, part) -> Graph:
    """Union of the closed facets ``part`` as a graph."""
    edges, verts = set(), set()
    for j in part:
        f = facets[j]
        verts.update(f)
        edges.update(itertools.combinations(f, 2))
    return Graph(tuple(sorted(verts)), frozenset(edges))


class _CoverSearch:
    def __init__(self, g: Graph, budget: int):
        self.facets = whitney_complex(g).facets()
        self.budget = budget
        self.cache = {}
        self.vertex_facets = {}
        for j, f in enumerate(self.facets):
            for v in f:
                self.vertex_facets.setdefault(v, []).append(j)

    def good(self, part) -> bool:
        key = frozenset(part)
        r = self.cache.get(key)
        if r is None:
            r = contractible(part_graph(self.facets, key), self.budget)
            self.cache[key] = r
        return r

    def greedy(self, rng: random.Random) -> list:
        m = len(self.facets)
        uncovered = set(range(m))
        parts = []
        while uncovered:
            start = rng.choice(sorted(uncovered))
            part = {start}
            grown = True
            while grown:
                grown = False
                touching = set()
                for j in part:
                    for v in self.facets[j]:
                        touching.update(self.vertex_facets[v])
                touching -= part
                cands = sorted(touching)
                rng.shuffle(cands)
                cands.sort(key=lambda j: j not in uncovered)
                for j in cands:
                    if self.good(part | {j}):
                        part.add(j)
                        grown = True
                        break
            parts.append(part)
            uncovered -= part
        return parts

    def exact(self, k: int):
        """A cover by k contractible facet unions, or None."""
        m = len(self.facets)
        colors = [0] * m

        def assign(j, used):
            if j == m:
                parts = [{i for i in range(m) if colors[i] == c} for c in range(k)]
                if all(p and self.good(p) for p in parts):
                    return parts
                return None
            for c in range(min(used + 1, k)):
                colors[j] = c
                r = assign(j + 1, max(used, c + 1))
                if r:
                    return r
            return None

        return assign(0, 0)


def cat_bounds(g: Graph, exact_cap: int = DEFAULT_FACET_CAP, budget: int = DEFAULT_BUDGET,
               restarts: int = 30, seed: int = 0) -> CategoryBounds:
    """Lower bound from components, cup length and contractibility; upper from covers."""
    if not len(g):
        return CategoryBounds(0, 0, "empty")
    comps = g.components()
    if len(comps) > 1:
        # contractible parts are connected, so category adds over components
        parts = [cat_bounds(g.subgraph_mask(g.mask_of(c)), exact_cap, budget, restarts, seed)
                 for c in comps]
        facets = [f for b in parts for f in b.facets]
        cover, offset = [], 0
        for b in parts:
            cover.extend({j + offset for j in p} for p in b.cover)
            offset += len(b.facets)
        return CategoryBounds(sum(b.lower for b in parts), sum(b.upper for b in parts),
                              "components", cover if all(b.cover for b in parts) else [],
                              "+".join(sorted({b.upper_witness for b in parts})), facets)
    verdict = is_contractible(g, budget)
    search = _CoverSearch(g, budget)
    if verdict.contractible:
        return CategoryBounds(1, 1, "contractible", [set(range(len(search.facets)))],
                              "whole-graph", search.facets)
    cup = cup_length(whitney_complex(g))
    candidates = [(1, "components"), (cup + 1, "cup-length")]
    if verdict.contractible is False:
        candidates.append((2, "non-contractible"))
    lower, why = max(candidates, key=lambda t: t[0])

    rng = random.Random(seed)
    cover = None
    try:
        for _ in range(restarts):
            parts = search.greedy(rng)
            if cover is None or len(parts) < len(cover):
                cover = parts
            if len(cover) <= lower:
                break
        how = "greedy-cover"
        if len(cover) > lower and len(search.facets) <= exact_cap:
            for k in range(lower, len(cover)):
                parts = search.exact(k)
                if parts:
                    cover = parts
                    how = "exact-facet-coloring"
                    break
            else:
                how = "exact-facet-coloring"
    except BudgetExceeded:
        if cover is None:
            return CategoryBounds(lower, len(search.facets), why, [], "facet-count",
                                  search.facets)
    return CategoryBounds(lower, len(cover), why, cover, how, search.facets)


def replay_cover(g: Graph, bounds: CategoryBounds) -> bool:
    """Every part contractible and every simplex inside some part."""
    facets = bounds.facets
    if not bounds.cover:
        return False
    covered = set()
    for part in bounds.cover:
        if not contractible(part_graph(facets, part)):
            return False
        covered |= set(part)
    return covered == set(range(len(facets)))


# -- theorem checks -----------------------------------------------------------------

@dataclass
class LSChainReport:
    cup: int
    bounds: CategoryBounds
    cri: int

    @property
    def passed(self) -> bool:
        return self.cup + 1 <= self.bounds.upper and self.bounds.lower <= self.cri

    @property
    def exact_chain(self) -> bool:
        return self.bounds.exact and self.cup + 1 <= self.bounds.lower <= self.cri

    def to_dict(self) -> dict:
        return {"cup": self.cup, "cat": self.bounds.to_dict(), "cri": self.cri,
                "pass": self.passed}


def verify_ls_chain(g: Graph, cri_cap: int = 16, exact_cap: int = DEFAULT_FACET_CAP,
                    budget: int = DEFAULT_BUDGET) -> LSChainReport:
    from .morse import cri_exact

    cup = cup_length(whitney_complex(g))
    bounds = cat_bounds(g, exact_cap, budget)
    return LSChainReport(cup, bounds, cri_exact(g, cri_cap, budget))


@dataclass
class OperationCheck:
    name: str
    lhs: CategoryBounds
    claim: tuple            # (low, high) interval the rule predicts
    kind: str               # "equal" or "at-most"

    @property
    def passed(self) -> bool:
        lo, hi = self.claim
        if self.kind == "equal":
            return self.lhs.lower <= hi and lo <= self.lhs.upper
        return self.lhs.lower <= hi

    @property
    def exact(self) -> bool:
        return self.lhs.exact and self.claim[0] == self.claim[1]

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": [self.lhs.lower, self.lhs.upper],
                "claim": list(self.claim), "kind": self.kind, "pass": self.passed}


def verify_cat_operations(g: Graph, h: Graph, exact_cap: int = DEFAULT_FACET_CAP,
                          budget: int = DEFAULT_BUDGET, products: bool = True) -> list:
    """Refinement, union, join and product rules, checked as bound consistency.

    Each check holds the computed interval for the left-hand side against
    the interval the rule predicts from the bounds of g and h; the check
    fails only when the two are provably incompatible.
    """
    bg = cat_bounds(g, exact_cap, budget)
    bh = cat_bounds(h, exact_cap, budget)
    checks = [
        OperationCheck("refinement", cat_bounds(barycentric_refinement(whitney_complex(g)),
                                                exact_cap, budget),
                       (bg.lower, bg.upper), "equal"),
        OperationCheck("disjoint-union", cat_bounds(disjoint_union(g, h), exact_cap, budget),
                       (bg.lower + bh.lower, bg.upper + bh.upper), "equal"),
        OperationCheck("join", cat_bounds(zykov_join(g, h), exact_cap, budget),
                       (min(bg.lower, bh.lower), min(bg.upper, bh.upper)), "equal"),
    ]
    if products:
        checks.append(OperationCheck(
            "shannon-product", cat_bounds(shannon_product(g, h), exact_cap, budget),
            (1, bg.upper * bh.upper), "at-most"))
        checks.append(OperationCheck(
            "stanley-reisner-product",
            cat_bounds(stanley_reisner_product(g, h), exact_cap, budget),
            (1, bg.upper * bh.upper), "at-most"))
    return checks
