"""Alexandrov topology on simplices, delta sets and their cohomology."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .complex import SimplicialComplex, euler_characteristic, proper_faces
from .errors import CapExceeded, GraphInputError
from .hodge import BettiVector, betti, derivative_cache
from .linalg import SparseSignMatrix, rank

PARTITION_CAP = 20


class SimplexSet:
    """A set of simplices of ``host``, stored as flat (dimension-major) indices."""

    def __init__(self, host: SimplicialComplex, members):
        n = len(host)
        members = frozenset(members)
        bad = [m for m in members if not 0 <= m < n]
        if bad:
            raise GraphInputError(f"simplex index {bad[0]} outside the host complex")
        self.host = host
        self.members = members

    @classmethod
    def from_simplices(cls, host, simplices) -> "SimplexSet":
        out = []
        for s in simplices:
            s = tuple(sorted(s))
            if s not in host:
                raise GraphInputError(f"{list(s)} is not a simplex of the host complex")
            out.append(host.flat_index(s))
        return cls(host, out)

    @classmethod
    def from_dict(cls, host, data) -> "SimplexSet":
        try:
            return cls.from_simplices(host, data["members"])
        except (KeyError, TypeError):
            raise GraphInputError('simplex set JSON needs {"members": [[...], ...]}') from None

    def to_dict(self) -> dict:
        return {"members": [list(s) for s in self.simplices()]}

    def simplices(self) -> list:
        flat = self.host.simplices()
        return [flat[i] for i in sorted(self.members)]

    def __len__(self):
        return len(self.members)

    def __contains__(self, s):
        return tuple(s) in self.host and self.host.flat_index(s) in self.members

    def __eq__(self, other):
        return isinstance(other, SimplexSet) and self.members == other.members \
            and self.host == other.host

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"SimplexSet({self.simplices()})"

    def __or__(self, other):
        return SimplexSet(self.host, self.members | other.members)

    def __and__(self, other):
        return SimplexSet(self.host, self.members & other.members)

    def complement(self) -> "SimplexSet":
        return SimplexSet(self.host, set(range(len(self.host))) - self.members)


def _check(k, x):
    x = tuple(sorted(x))
    if x not in k:
        raise GraphInputError(f"{list(x)} is not a simplex of the complex")
    return x


def star(k: SimplicialComplex, x) -> SimplexSet:
    """All simplices containing x, x included."""
    x = set(_check(k, x))
    return SimplexSet(k, [k.flat_index(y) for y in k.simplices() if x <= set(y)])


def core(k: SimplicialComplex, x) -> SimplexSet:
    """All non-empty faces of x, x included."""
    x = _check(k, x)
    return SimplexSet(k, [k.flat_index(y) for y in itertools.chain(proper_faces(x), [x])])


def is_closed(s: SimplexSet) -> bool:
    k = s.host
    return all(k.flat_index(f) in s.members for x in s.simplices() for f in proper_faces(x))


def is_open(s: SimplexSet) -> bool:
    return is_closed(s.complement())


@dataclass
class DeltaSet:
    """Elements with a dimension each and a Dirac matrix D = d + d^T."""
    elements: tuple
    dirac: SparseSignMatrix
    dims: tuple
    top: int = None

    def __post_init__(self):
        n = len(self.elements)
        if len(self.dims) != n or self.dirac.shape != (n, n):
            raise GraphInputError("delta set sizes disagree")
        if any(r < 0 for r in self.dims):
            raise GraphInputError("dimensions must be nonnegative")
        if self.top is None:
            self.top = max(self.dims, default=-1)
        if not self.dirac.is_symmetric():
            raise GraphInputError("Dirac matrix must be symmetric")
        for (i, j) in self.dirac.entries:
            if abs(self.dims[i] - self.dims[j]) != 1:
                raise GraphInputError("Dirac entries must join consecutive dimensions")
        d = self.derivative()
        if not (d @ d).is_zero():
            raise GraphInputError("exterior derivative does not square to zero")

    def derivative(self) -> SparseSignMatrix:
        """The lower part d: row i, column j with dims[i] = dims[j] + 1."""
        n = len(self.elements)
        return SparseSignMatrix(n, n, {(i, j): x for (i, j), x in self.dirac.entries.items()
                                       if self.dims[i] == self.dims[j] + 1})

    def blocks(self) -> list:
        """d_k from dimension k to dimension k+1, for k = 0..top-1."""
        where = [[i for i, r in enumerate(self.dims) if r == k] for k in range(self.top + 1)]
        pos = {i: p for group in where for p, i in enumerate(group)}
        out = []
        for k in range(self.top):
            entries = {(pos[i], pos[j]): x for (i, j), x in self.dirac.entries.items()
                       if self.dims[j] == k and self.dims[i] == k + 1}
            out.append(SparseSignMatrix(len(where[k + 1]), len(where[k]), entries))
        return out

    def dump(self) -> str:
        lines = [f"{len(self.elements)} {self.top}"]
        lines += [f"{e} {r}" for e, r in zip(self.elements, self.dims)]
        return "\n".join(lines) + "\n" + self.dirac.dump()


def delta_from_simplex_set(k: SimplicialComplex, s: SimplexSet) -> DeltaSet:
    """Restrict the exterior derivative of ``k`` to an open or closed set."""
    if s.host != k:
        raise GraphInputError("simplex set belongs to another complex")
    if not (is_open(s) or is_closed(s)):
        raise GraphInputError("only open or closed simplex sets define delta sets")
    members = sorted(s.members)
    pos = {m: p for p, m in enumerate(members)}
    entries = {}
    for j, d in enumerate(derivative_cache(k)):
        r0, c0 = k.offsets[j + 1], k.offsets[j]
        for (r, c), x in d.entries.items():
            a, b = pos.get(r0 + r), pos.get(c0 + c)
            if a is not None and b is not None:
                entries[a, b] = entries[b, a] = x
    flat = k.simplices()
    elements = tuple(flat[m] for m in members)
    return DeltaSet(elements, SparseSignMatrix(len(members), len(members), entries),
                    tuple(len(e) - 1 for e in elements), k.dim)


def betti_delta(ds: DeltaSet) -> BettiVector:
    counts = [sum(1 for r in ds.dims if r == k) for k in range(ds.top + 1)]
    ranks = [rank(b.rows()) for b in ds.blocks()]
    out = []
    for k, n in enumerate(counts):
        out.append(n - (ranks[k] if k < len(ranks) else 0) - (ranks[k - 1] if k else 0))
    return BettiVector(out)


def delta_euler(ds: DeltaSet) -> int:
    return sum((-1) ** r for r in ds.dims)


@dataclass
class FusionReport:
    open_betti: BettiVector
    closed_betti: BettiVector
    total_betti: BettiVector
    euler: tuple            # chi(U), chi(K), chi(G)

    @property
    def inequality(self) -> bool:
        return all(u + c >= g for u, c, g in
                   zip(self.open_betti, self.closed_betti, self.total_betti))

    @property
    def additive(self) -> bool:
        u, c, g = self.euler
        return u + c == g

    @property
    def passed(self) -> bool:
        return self.inequality and self.additive

    def to_dict(self) -> dict:
        return {"b_open": list(self.open_betti), "b_closed": list(self.closed_betti),
                "b": list(self.total_betti), "chi": list(self.euler),
                "inequality": self.inequality, "chi_additive": self.additive,
                "pass": self.passed}


def fusion_check(k: SimplicialComplex, closed: SimplexSet) -> FusionReport:
    if closed.host != k or not is_closed(closed):
        raise GraphInputError("fusion needs a closed set of the given complex")
    u = delta_from_simplex_set(k, closed.complement())
    c = delta_from_simplex_set(k, closed)
    return FusionReport(betti_delta(u), betti_delta(c), betti(k),
                        (delta_euler(u), delta_euler(c), euler_characteristic(k)))


def closed_sets(k: SimplicialComplex, cap: int = PARTITION_CAP):
    """Every closed set (subcomplex, possibly empty) of ``k``, by exhaustive search."""
    n = len(k)
    if n > cap:
        raise CapExceeded(f"exhaustive enumeration is limited to {cap} simplices")
    flat = k.simplices()
    faces = [[k.flat_index(f) for f in proper_faces(s) if len(f) == len(s) - 1] for s in flat]

    # add simplices in dimension-major order; a simplex may join only if its facets did
    def grow(i, chosen):
        if i == n:
            yield SimplexSet(k, chosen)
            return
        yield from grow(i + 1, chosen)
        if all(f in chosen for f in faces[i]):
            chosen.add(i)
            yield from grow(i + 1, chosen)
            chosen.discard(i)

    yield from grow(0, set())


def sample_closed_sets(k: SimplicialComplex, samples: int, seed: int = 0):
    """Random unions of cores."""
    rng = random.Random(seed)
    flat = k.simplices()
    for _ in range(samples):
        picks = rng.sample(flat, rng.randint(0, min(len(flat), 6)))
        out = set()
        for x in picks:
            out |= core(k, x).members
        yield SimplexSet(k, out)


def topological_dimension(k: SimplicialComplex, verify_cap: int = 12) -> int:
    """The maximal dimension; small complexes are also checked by brute force.

    An open cover refining the vertex-star cover needs, for every vertex v,
    a set inside some star that contains v; only U(v) itself qualifies. The
    check enumerates every open subset of every star to confirm that, then
    compares the order of the star cover with dim + 1.
    """
    if len(k) and len(k) <= verify_cap:
        stars = {v: star(k, (v,)) for v in k.vertices}
        for v, st in stars.items():
            members = sorted(st.members)
            for r in range(1, len(members) + 1):
                for sub in itertools.combinations(members, r):
                    s = SimplexSet(k, sub)
                    if not is_open(s):
                        continue
                    for w in k.vertices:
                        if k.flat_index((w,)) in s.members and s != stars[w]:
                            raise AssertionError(f"open set {s} inside a star contains {w}")
        order = max(sum(1 for st in stars.values() if i in st.members) for i in range(len(k)))
        if order != k.dim + 1:
            raise AssertionError("vertex-star cover order differs from dim + 1")
    return k.dim
