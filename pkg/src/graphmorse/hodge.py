"""Exterior derivative, Dirac and Hodge matrices, Betti numbers, cohomology."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialComplex, euler_characteristic, incidence_sign
from .errors import GraphInputError
from .linalg import EchelonBasis, SparseSignMatrix, nullspace


class BettiVector(tuple):
    """Tuple of Betti numbers b_0, b_1, ... with the alternating sum handy."""

    @property
    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self))

    def poincare_polynomial(self) -> tuple:
        out = list(self)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)


def exterior_derivative(k: SimplicialComplex) -> list:
    """[d_0, ..., d_{dim-1}]; d_j maps j-cochains to (j+1)-cochains."""
    out = []
    for j in range(k.dim):
        low, high = k.by_dim[j], k.by_dim[j + 1]
        entries = {}
        for r, x in enumerate(high):
            for pos in range(len(x)):
                y = x[:pos] + x[pos + 1:]
                entries[r, k.index[y]] = incidence_sign(x, y)
        out.append(SparseSignMatrix(len(high), len(low), entries))
    return out


def derivative_cache(k: SimplicialComplex) -> list:
    ds = getattr(k, "_derivatives", None)
    if ds is None:
        ds = exterior_derivative(k)
        k._derivatives = ds
    return ds


def dirac_operator(k: SimplicialComplex) -> SparseSignMatrix:
    """D = d + d^T on the dimension-major listing of all simplices."""
    n = len(k)
    entries = {}
    for j, d in enumerate(derivative_cache(k)):
        r0, c0 = k.offsets[j + 1], k.offsets[j]
        for (r, c), x in d.entries.items():
            entries[r0 + r, c0 + c] = x
            entries[c0 + c, r0 + r] = x
    return SparseSignMatrix(n, n, entries)


def hodge_blocks(k: SimplicialComplex) -> list:
    """[L_0, ..., L_dim] with L_j = d_j^T d_j + d_{j-1} d_{j-1}^T."""
    ds = derivative_cache(k)
    blocks = []
    for j, f in enumerate(k.f_vector):
        L = SparseSignMatrix(f, f)
        if j < len(ds):
            L = L + ds[j].transpose() @ ds[j]
        if j > 0:
            L = L + ds[j - 1] @ ds[j - 1].transpose()
        blocks.append(L)
    return blocks


def derivative_ranks(k: SimplicialComplex) -> list:
    ranks = getattr(k, "_ranks", None)
    if ranks is None:
        ranks = [d.rank() for d in derivative_cache(k)]
        k._ranks = ranks
    return ranks


def betti(k: SimplicialComplex) -> BettiVector:
    ranks = derivative_ranks(k)
    out = []
    for j, f in enumerate(k.f_vector):
        r_out = ranks[j] if j < len(ranks) else 0
        r_in = ranks[j - 1] if j > 0 else 0
        out.append(f - r_out - r_in)
    b = BettiVector(out)
    if b.euler != euler_characteristic(k):
        raise AssertionError("Euler-Poincare violated; rank computation is broken")
    return b


def cochain_image(k: SimplicialComplex, deg: int) -> EchelonBasis:
    """Echelon basis of im(d_{deg-1}) inside the deg-cochains."""
    basis = EchelonBasis()
    if deg > 0:
        for col in derivative_cache(k)[deg - 1].cols():
            basis.add(col)
    return basis


def cocycles(k: SimplicialComplex, deg: int) -> list:
    ds = derivative_cache(k)
    if deg < len(ds):
        return nullspace(ds[deg].rows(), k.f_vector[deg])
    return [{i: 1} for i in range(k.f_vector[deg])]


def harmonic_forms(k: SimplicialComplex, deg: int) -> list:
    """Basis of ker L_deg as dense lists."""
    L = hodge_blocks(k)[deg]
    return [[h.get(i, 0) for i in range(L.ncols)] for h in nullspace(L.rows(), L.ncols)]


def cohomology_basis(k: SimplicialComplex, deg: int) -> list:
    """Closed cochains (as dense lists) whose classes form a basis of H^deg."""
    if not 0 <= deg <= k.dim:
        raise GraphInputError(f"degree {deg} outside 0..{k.dim}")
    image = cochain_image(k, deg)
    n = k.f_vector[deg]
    gens = []
    for z in cocycles(k, deg):
        if image.add(z):
            gens.append([z.get(i, 0) for i in range(n)])
    return gens


@dataclass
class HodgeReport:
    f_vector: tuple
    ranks: list
    betti: BettiVector
    rank_accounting: bool
    harmonic_annihilated: bool
    kernel_matches: bool

    @property
    def passed(self) -> bool:
        return self.rank_accounting and self.harmonic_annihilated and self.kernel_matches


def verify_hodge_decomposition(k: SimplicialComplex, check_kernels: bool = True) -> HodgeReport:
    """Rank accounting f_k = rank d_{k-1} + rank d_k + b_k, plus harmonic checks.

    With ``check_kernels`` the kernel of every L_k is computed on its own:
    its dimension must equal b_k, and each harmonic form must be closed and
    independent modulo exact forms, i.e. represent a distinct class.
    """
    ranks = derivative_ranks(k)
    b = betti(k)
    f = k.f_vector
    accounting = all(
        (ranks[j - 1] if j > 0 else 0) + (ranks[j] if j < len(ranks) else 0) + b[j] == f[j]
        for j in range(len(f)))
    kernels_ok = annihilated = True
    if check_kernels:
        blocks = hodge_blocks(k)
        for j, L in enumerate(blocks):
            harmonic = nullspace(L.rows(), L.ncols)
            if len(harmonic) != b[j]:
                kernels_ok = False
            for h in harmonic:
                dense = [h.get(i, 0) for i in range(L.ncols)]
                if any(L.apply(dense)):
                    annihilated = False
                # harmonic forms are closed and represent nonzero classes
                ds = derivative_cache(k)
                if j < len(ds) and any(ds[j].apply(dense)):
                    annihilated = False
            image = cochain_image(k, j)
            for h in harmonic:
                if not image.add(h):
                    kernels_ok = False
    return HodgeReport(f, list(ranks), b, accounting, annihilated, kernels_ok)
