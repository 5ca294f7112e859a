"""Exact sparse linear algebra over the rationals.

Vectors are ``dict[int, Fraction | int]`` with no stored zeros. Boundary
matrices have entries in {-1, 0, 1}, so pivots are mostly units and the
arithmetic stays in Python integers until a non-unit pivot shows up.
"""

from __future__ import annotations

from fractions import Fraction


def _inverse(p):
    if p == 1 or p == -1:
        return p
    return Fraction(1) / p


def axpy(v: dict, a, w: dict) -> dict:
    """Return v + a*w without mutating either argument."""
    out = dict(v)
    for k, x in w.items():
        y = out.get(k, 0) + a * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


class EchelonBasis:
    """Incrementally maintained row-echelon basis of a subspace of Q^n.

    Each stored vector is normalised to 1 at its pivot, the smallest index
    in its support; pivots are distinct.
    """

    def __init__(self):
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: dict) -> dict:
        v = {k: x for k, x in v.items() if x}
        while v:
            k = min(v)
            row = self.pivots.get(k)
            if row is None:
                return v
            v = axpy(v, -v[k], row)
        return v

    def add(self, v: dict) -> bool:
        """Insert ``v``; return True if it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        k = min(r)
        inv = _inverse(r[k])
        self.pivots[k] = {i: x * inv for i, x in r.items()}
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def rank(rows) -> int:
    basis = EchelonBasis()
    for r in rows:
        basis.add(r)
    return basis.rank


def nullspace(rows, ncols: int) -> list:
    """Basis of {x : r . x = 0 for every row r}, as sparse vectors."""
    basis = EchelonBasis()
    for r in rows:
        basis.add(r)
    # back-substitute to reduced row echelon form
    piv = sorted(basis.pivots, reverse=True)
    reduced = {}
    for k in piv:
        row = basis.pivots[k]
        for j in [j for j in row if j != k and j in reduced]:
            row = axpy(row, -row[j], reduced[j])
        reduced[k] = row
    free = [j for j in range(ncols) if j not in reduced]
    out = []
    for f in free:
        vec = {f: 1}
        for k, row in reduced.items():
            c = row.get(f)
            if c:
                vec[k] = -c
        out.append(vec)
    return out


class SparseSignMatrix:
    """Sparse exact matrix; ``entries`` maps (row, col) to a nonzero rational."""

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        for (i, j), x in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry {(i, j)} outside a {nrows}x{ncols} matrix")
            if x:
                self.entries[i, j] = x

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __repr__(self):
        return f"SparseSignMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)})"

    def __eq__(self, other):
        return (isinstance(other, SparseSignMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def rows(self) -> list:
        out = [dict() for _ in range(self.nrows)]
        for (i, j), x in self.entries.items():
            out[i][j] = x
        return out

    def cols(self) -> list:
        out = [dict() for _ in range(self.ncols)]
        for (i, j), x in self.entries.items():
            out[j][i] = x
        return out

    def transpose(self) -> "SparseSignMatrix":
        return SparseSignMatrix(self.ncols, self.nrows,
                                {(j, i): x for (i, j), x in self.entries.items()})

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for ij, x in other.entries.items():
            out[ij] = out.get(ij, 0) + x
        return SparseSignMatrix(self.nrows, self.ncols, out)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        right = other.rows()
        out = {}
        for (i, k), x in self.entries.items():
            for j, y in right[k].items():
                out[i, j] = out.get((i, j), 0) + x * y
        return SparseSignMatrix(self.nrows, other.ncols, out)

    def apply(self, v) -> list:
        """Matrix times a dense vector (sequence indexed by column)."""
        out = [0] * self.nrows
        for (i, j), x in self.entries.items():
            if v[j]:
                out[i] += x * v[j]
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.entries.get((j, i), 0) == x for (i, j), x in self.entries.items())

    def trace(self):
        return sum(x for (i, j), x in self.entries.items() if i == j)

    def rank(self) -> int:
        if self.nrows <= self.ncols:
            return rank(self.rows())
        return rank(self.cols())

    def block(self, r0, r1, c0, c1) -> "SparseSignMatrix":
        return SparseSignMatrix(r1 - r0, c1 - c0, {
            (i - r0, j - c0): x for (i, j), x in self.entries.items()
            if r0 <= i < r1 and c0 <= j < c1})

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), x in self.entries.items():
            out[i][j] = x
        return out

    def dump(self) -> str:
        """Coordinate triplets ``row col num/den``, one per line."""
        lines = [f"{self.nrows} {self.ncols}"]
        for (i, j), x in sorted(self.entries.items()):
            x = Fraction(x)
            lines.append(f"{i} {j} {x.numerator}/{x.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "SparseSignMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        nrows, ncols = map(int, lines[0].split())
        entries = {}
        for ln in lines[1:]:
            i, j, x = ln.split()
            entries[int(i), int(j)] = Fraction(x)
        return cls(nrows, ncols, entries)
