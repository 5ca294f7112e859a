"""Acceptance suites, shared by ``graphmorse check`` and the test-suite.

Each suite returns a list of :class:`Check` records naming the identity,
the witnesses and the outcome. Suites take a corpus, a mapping name ->
Graph; :func:`default_corpus` builds the shipped one from the catalog.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import EXPECTED_BETTI, generator
from .category import replay_cover, verify_cat_operations, verify_ls_chain
from .complex import SimplicialComplex, barycentric_refinement, dimension_function, \
    euler_characteristic, incidence_sign, poly_mul, whitney_complex
from .delta import SimplexSet, betti_delta, closed_sets, delta_from_simplex_set, fusion_check, \
    sample_closed_sets
from .errors import CapExceeded
from .graphs import Graph, mertens_graph, remove_vertex, shannon_product, \
    unit_ball, zykov_join
from .hodge import betti, derivative_cache, verify_hodge_decomposition
from .homotopy import inductive_dimension, is_contractible, sphere_dimension
from .morse import cri_exact, curvature_expectation_exact, curvature_levitt, curvature_mc, \
    morse_inequalities_check, morse_min_exact, morse_profile, ordering_function, \
    ph_polynomial_check, ph_theorem_check


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.suite}: {self.name}"

    def to_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "pass": self.passed,
                "detail": self.detail}


DEFAULT_CORPUS = [
    ("K1", "complete", [1]), ("K2", "complete", [2]), ("K3", "complete", [3]),
    ("K4", "complete", [4]), ("P4", "path", [4]), ("star3", "star", [3]),
    ("C4", "cycle", [4]), ("C5", "cycle", [5]), ("C6", "cycle", [6]), ("C7", "cycle", [7]),
    ("kite", "kite", []), ("wheel5", "wheel", [5]), ("figure_eight", "figure_eight", []),
    ("cube", "cube", []), ("moebius7", "moebius7", []), ("octahedron", "octahedron", []),
    ("K2222", "cross_polytope", [3]), ("torus_9", "torus_9", []),
    ("klein_8", "klein_8", []), ("rp2_6", "rp2_6", []), ("dunce_hat_8", "dunce_hat_8", []),
]

# corpus graphs that are spheres, with their dimension
SPHERES = {"C4": 1, "C5": 1, "C6": 1, "C7": 1, "octahedron": 2, "K2222": 3}

# Betti vectors of the named table
BETTI_TABLE = {"octahedron": (1, 0, 1), "K2222": (1, 0, 0, 1), "torus_9": (1, 2, 1),
               "klein_8": (1, 1, 0), "rp2_6": (1, 0, 0), "dunce_hat_8": (1, 0, 0),
               "C4": (1, 1), "C5": (1, 1), "C6": (1, 1), "C7": (1, 1)}


def default_corpus() -> dict:
    return {name: generator(gen, params) for name, gen, params in DEFAULT_CORPUS}


def load_corpus(path) -> dict:
    """Graph JSON files in a directory (or a single file), keyed by file stem."""
    path = Path(path)
    files = sorted(path.glob("*.json")) if path.is_dir() else [path]
    out = {}
    for f in files:
        if f.name == "expected.json":
            continue
        out[f.stem] = Graph.from_json(f.read_text())
    return out


def random_orderings(g: Graph, count: int, seed: int):
    rng = random.Random(seed)
    verts = list(g.vertices)
    for _ in range(count):
        rng.shuffle(verts)
        yield ordering_function(verts)


def moebius_sieve(n: int) -> list:
    """mu(0..n) by a linear sieve."""
    mu = [0, 1] + [0] * max(n - 1, 0)
    primes, composite = [], [False] * (n + 1)
    for i in range(2, n + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > n:
                break
            composite[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu[: n + 1]


def mertens(n: int) -> int:
    return sum(moebius_sieve(n)[1:])


# -- suites ---------------------------------------------------------------------

def suite_betti(corpus: dict) -> list:
    out = []
    for name, expected in BETTI_TABLE.items():
        if name not in corpus:
            continue
        b = tuple(betti(whitney_complex(corpus[name])))
        out.append(Check("betti", f"{name} Betti vector {expected}", b == expected,
                         {"betti": list(b)}))
    g = corpus.get("dunce_hat_8")
    if g is not None:
        verdict = is_contractible(g)
        out.append(Check("betti", "dunce_hat_8 not contractible",
                         verdict.contractible is False, {"status": verdict.status}))
    return out


def suite_poincare_hopf(corpus: dict, orderings: int = 50, seed: int = 0) -> list:
    out = []
    for name, g in corpus.items():
        sums = poly = True
        for f in random_orderings(g, orderings, seed):
            sums &= ph_theorem_check(g, f).passed
            poly &= ph_polynomial_check(g, f).passed
        out.append(Check("poincare-hopf", f"{name}: index sum = chi over {orderings} orderings",
                         sums))
        out.append(Check("poincare-hopf", f"{name}: f-polynomial transfer identity", poly))
    return out


def suite_gauss_bonnet(corpus: dict, samples=(1, 7, 100), seeds=(0, 1),
                       degree_cap: int = 16) -> list:
    out = []
    for name, g in corpus.items():
        chi = euler_characteristic(whitney_complex(g))
        lev = curvature_levitt(g)
        out.append(Check("gauss-bonnet", f"{name}: Levitt curvature sums to chi",
                         lev.total == chi, {"sum": str(lev.total), "chi": chi}))
        mismatch = [v for v in g.vertices if g.degree(v) <= degree_cap
                    and curvature_expectation_exact(g, v, degree_cap) != lev.values[v]]
        out.append(Check("gauss-bonnet", f"{name}: Levitt = index expectation vertexwise",
                         not mismatch, {"mismatch": mismatch}))
        mc_ok = all(curvature_mc(g, n, s).total == chi for n in samples for s in seeds)
        out.append(Check("gauss-bonnet", f"{name}: Monte Carlo field sums to chi", mc_ok))
    return out


def suite_spheres(corpus: dict, spheres=None) -> list:
    spheres = SPHERES if spheres is None else spheres
    out = []
    for name, d in spheres.items():
        if name not in corpus:
            continue
        g = corpus[name]
        k = whitney_complex(g)
        b = tuple(betti(k))
        chi = euler_characteristic(k)
        ok = (sphere_dimension(g) == d and chi == 1 + (-1) ** d
              and b == (1,) + (0,) * (d - 1) + (1,))
        out.append(Check("spheres", f"{name}: {d}-sphere, Euler gem and Betti", ok,
                         {"chi": chi, "betti": list(b)}))
    bad = []
    for name, g in corpus.items():
        pieces = [g] + [remove_vertex(g, v) for v in g.vertices] + \
                 [unit_ball(g, v) for v in g.vertices]
        for h in pieces:
            if is_contractible(h).contractible and euler_characteristic(whitney_complex(h)) != 1:
                bad.append(name)
    out.append(Check("spheres", "every contractible verdict has chi = 1", not bad,
                     {"violations": bad}))
    return out


def suite_morse(corpus: dict, refine_cap: int = 30) -> list:
    out = []
    for name, g in corpus.items():
        k = whitney_complex(g)
        if len(k) > refine_cap:
            continue
        r = barycentric_refinement(k)
        prof = morse_profile(r, dimension_function(k))
        ok = hasattr(prof, "c") and prof.c == k.f_vector
        out.append(Check("morse", f"{name}: dimension function on refinement is Morse, c = f",
                         ok, {"c": list(getattr(prof, "c", ())), "f": list(k.f_vector)}))
        if ok:
            rep = morse_inequalities_check(betti(k), prof.c)
            out.append(Check("morse", f"{name}: strong Morse inequalities (refinement)",
                             rep.passed))
    for name, g in corpus.items():
        if len(g) > 16:
            continue
        value, order = morse_min_exact(g, with_witness=True)
        if value is None:
            continue
        prof = morse_profile(g, ordering_function(order))
        rep = morse_inequalities_check(betti(whitney_complex(g)), prof.c)
        out.append(Check("morse", f"{name}: strong Morse inequalities (minimal Morse function)",
                         rep.passed and prof.count == value, {"c": list(prof.c)}))
    targets = [("torus_9", cri_exact, 3, "cri"), ("torus_9", morse_min_exact, 4, "c"),
               ("rp2_6", morse_min_exact, 3, "c"), ("octahedron", morse_min_exact, 2, "c"),
               ("cube", morse_min_exact, None, "c")]
    for name, fn, expected, label in targets:
        if name in corpus:
            got = fn(corpus[name])
            out.append(Check("morse", f"{name}: {label} = {expected}", got == expected,
                             {label: got}))
    return out


def suite_ls_chain(corpus: dict) -> list:
    cases = {"C4": (1, 2, 2), "C5": (1, 2, 2), "C6": (1, 2, 2), "C7": (1, 2, 2),
             "K1": (0, 1, 1), "K2": (0, 1, 1), "K3": (0, 1, 1), "K4": (0, 1, 1),
             "octahedron": (1, 2, 2), "K2222": (1, 2, 2), "torus_9": (2, 3, 3)}
    out = []
    for name, (cup, cat, cri) in cases.items():
        if name not in corpus:
            continue
        rep = verify_ls_chain(corpus[name])
        b = rep.bounds
        ok = (rep.passed and rep.cup == cup and (b.lower, b.upper) == (cat, cat)
              and rep.cri == cri and replay_cover(corpus[name], b))
        out.append(Check("ls-chain", f"{name}: {cup}+1 <= {cat} <= {cri}", ok,
                         {"cup": rep.cup, "cat": [b.lower, b.upper], "cri": rep.cri}))
    return out


def suite_cat_operations(corpus: dict) -> list:
    pairs = [("C4", "C4"), ("C4", "K3"), ("C5", "K2"), ("K3", "C4")]
    out = []
    for a, b in pairs:
        if a not in corpus or b not in corpus:
            continue
        for chk in verify_cat_operations(corpus[a], corpus[b]):
            out.append(Check("cat-operations", f"{a}, {b}: {chk.name}", chk.passed,
                             chk.to_dict()))
    return out


def suite_fusion(corpus: dict, cap: int = 30, exhaustive: int = 2**15,
                 samples: int = 400) -> list:
    k2 = SimplicialComplex.from_facets([(1, 2)])
    k3 = SimplicialComplex.from_facets([(1, 2, 3)])

    def b(k, members):
        return tuple(betti_delta(delta_from_simplex_set(k, SimplexSet.from_simplices(k, members))))

    out = [
        Check("fusion", "U={{1,2,3}} has b=(0,0,1)", b(k3, [(1, 2, 3)]) == (0, 0, 1)),
        Check("fusion", "K3 has b=(1,0,0)", b(k3, k3.simplices()) == (1, 0, 0)),
        Check("fusion", "C3 skeleton has b=(1,1,0)",
              b(k3, [s for s in k3.simplices() if len(s) < 3]) == (1, 1, 0)),
        Check("fusion", "U={{1},{1,2}} has b=(0,0)", b(k2, [(1,), (1, 2)]) == (0, 0)),
        Check("fusion", "K2 split: (2,0)+(0,1)", b(k2, [(1,), (2,)]) == (2, 0)
              and b(k2, [(1, 2)]) == (0, 1)),
    ]
    for name, g in corpus.items():
        k = whitney_complex(g)
        if len(k) > cap:
            continue
        parts = list(itertools.islice(closed_sets(k, cap), exhaustive + 1))
        how = "all"
        if len(parts) > exhaustive:
            parts, how = list(sample_closed_sets(k, samples, seed=len(k))), "sampled"
        bad = sum(1 for closed in parts if not fusion_check(k, closed).passed)
        out.append(Check("fusion", f"{name}: fusion and chi additivity on {how} {len(parts)} "
                                   "open-closed partitions", bad == 0, {"failures": bad}))
    return out


def suite_mertens(high: int = 40) -> list:
    bad = []
    for n in range(2, high + 1):
        chi = euler_characteristic(whitney_complex(mertens_graph(n)))
        if chi != 1 - mertens(n):
            bad.append(n)
    return [Check("mertens", f"chi(mertens_graph(n)) = 1 - M(n) for 2 <= n <= {high}",
                  not bad, {"failures": bad})]


def _sign_identity(k: SimplicialComplex) -> bool:
    for x in (s for group in k.by_dim[2:] for s in group):
        for z in itertools.combinations(x, len(x) - 2):
            total = 0
            for y in itertools.combinations(x, len(x) - 1):
                total += incidence_sign(x, y) * incidence_sign(y, z)
            if total:
                return False
    return True


def suite_structural(corpus: dict, product_cap: int = 40, simplex_cap: int = 5000) -> list:
    out = []
    for name, g in corpus.items():
        k = whitney_complex(g)
        ds = derivative_cache(k)
        d2 = all((ds[j + 1] @ ds[j]).is_zero() for j in range(len(ds) - 1))
        rep = verify_hodge_decomposition(k)
        b = betti(k)
        out.append(Check("structural", f"{name}: d^2 = 0", d2))
        out.append(Check("structural", f"{name}: boundary sign identity", _sign_identity(k)))
        out.append(Check("structural", f"{name}: Hodge rank accounting and harmonic forms",
                         rep.passed))
        out.append(Check("structural", f"{name}: Euler-Poincare",
                         b.euler == euler_characteristic(k)))
    names = sorted(corpus, key=lambda n: (len(corpus[n]), n))
    pairs = [(a, c) for a, c in itertools.combinations_with_replacement(names, 2)
             if len(corpus[a]) * len(corpus[c]) <= product_cap
             and len(corpus[a]) > 1 and len(corpus[c]) > 1]
    skipped = []
    for a, c in pairs:
        ga, gc = corpus[a], corpus[c]
        try:
            kp = whitney_complex(shannon_product(ga, gc), simplex_cap)
        except CapExceeded:
            skipped.append(f"{a} * {c}")
            continue
        lhs = betti(kp).poincare_polynomial()
        rhs = poly_mul(betti(whitney_complex(ga)).poincare_polynomial(),
                       betti(whitney_complex(gc)).poincare_polynomial())
        out.append(Check("structural", f"Kunneth for {a} * {c}", tuple(lhs) == tuple(rhs),
                         {"lhs": list(lhs), "rhs": list(rhs)}))
    out.append(Check("structural", f"Kunneth pairs beyond {simplex_cap} simplices skipped",
                     True, {"skipped": skipped}))
    small = [n for n in names if len(corpus[n]) <= 10]
    for a, c in itertools.combinations_with_replacement(small[:8], 2):
        ga, gc = corpus[a], corpus[c]
        lhs = inductive_dimension(zykov_join(ga, gc)) + 1
        rhs = inductive_dimension(ga) + 1 + inductive_dimension(gc) + 1
        out.append(Check("structural", f"join dimension additivity for {a} + {c}", lhs == rhs,
                         {"lhs": str(lhs), "rhs": str(rhs)}))
    return out


SUITES = {
    "betti": suite_betti,
    "poincare-hopf": suite_poincare_hopf,
    "gauss-bonnet": suite_gauss_bonnet,
    "spheres": suite_spheres,
    "morse": suite_morse,
    "ls-chain": suite_ls_chain,
    "cat-operations": suite_cat_operations,
    "fusion": suite_fusion,
    "mertens": lambda corpus: suite_mertens(),
    "structural": suite_structural,
}


def run_suite(name: str, corpus: dict | None = None) -> list:
    corpus = default_corpus() if corpus is None else corpus
    return SUITES[name](corpus)


def catalog_betti_checks() -> list:
    out = []
    for name, expected in EXPECTED_BETTI.items():
        b = tuple(betti(whitney_complex(generator(name))))
        out.append(Check("catalog", f"{name} Betti vector", b == expected, {"betti": list(b)}))
    return out
