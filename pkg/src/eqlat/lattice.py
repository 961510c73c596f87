"""Lattices presented by their Gram matrices.

A lattice here is a free Z-module with a chosen basis and the positive
definite Gram matrix of that basis; vectors are integer coordinate tuples
with respect to the basis.  Nothing ever refers to an ambient R^n, so all
constructions (duals, sublattices, orthogonal sections, projections) are
exact Gram-matrix algebra.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    NotInLattice,
    NotIntegral,
    NotOdd,
    NotPrimitive,
    VerificationError,
    ZeroVector,
)
from .exact import IntMatrix, RatMatrix, hnf, kernel_basis, ldl, rank_det, solve_left

Vec = tuple[int, ...]

__all__ = ["GramLattice", "EmbeddedSublattice", "Projection", "dot"]


def dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


class GramLattice:
    """Positive definite lattice given by a rational Gram matrix.

    Hashes and compares by the Gram matrix alone; the optional name is a
    label for reports and is ignored by equality.
    """

    __slots__ = ("gram", "det", "name")

    def __init__(self, gram, name: str | None = None):
        if isinstance(gram, IntMatrix):
            gram = RatMatrix(gram)
        elif not isinstance(gram, RatMatrix):
            gram = RatMatrix(gram)
        if not gram.is_symmetric():
            raise DimensionMismatch("Gram matrix must be symmetric")
        if gram.nrows:
            ldl(gram)  # raises NotPositiveDefinite unless gram > 0
        _, dnum = rank_det(gram.num)
        det = Fraction(dnum, gram.den**gram.nrows)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "det", det)
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("GramLattice is immutable")

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def __eq__(self, other):
        return isinstance(other, GramLattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        label = self.name or f"dim {self.dim}"
        return f"GramLattice({label}, det={self.det})"

    def with_name(self, name: str) -> "GramLattice":
        return GramLattice(self.gram, name)

    # -- bilinear form -----------------------------------------------------

    def _check(self, x: Sequence[int]) -> Vec:
        if len(x) != self.dim:
            raise DimensionMismatch(f"vector length {len(x)} != {self.dim}")
        return tuple(int(v) for v in x)

    def inner(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        x, y = self._check(x), self._check(y)
        g = self.gram.num.rows
        total = sum(xi * dot(g[i], y) for i, xi in enumerate(x) if xi)
        return Fraction(total, self.gram.den)

    def norm(self, x: Sequence[int]) -> Fraction:
        return self.inner(x, x)

    # -- classification ----------------------------------------------------

    def is_integral(self) -> bool:
        return self.gram.den == 1

    def integrality(self) -> str:
        """One of "even", "odd", "non-integral".

        For integral lattices parity of norms is decided by the Gram
        diagonal: N(x) = sum g_ii x_i^2 mod 2.
        """
        if not self.is_integral():
            return "non-integral"
        diag = [self.gram.num[i, i] for i in range(self.dim)]
        return "even" if all(d % 2 == 0 for d in diag) else "odd"

    # -- derived lattices ----------------------------------------------------

    def dual(self) -> "GramLattice":
        return GramLattice(self.gram.inverse())

    def rescale(self, c) -> "GramLattice":
        """Same module, form multiplied by c > 0."""
        c = Fraction(c)
        if c <= 0:
            raise ValueError("scale must be positive")
        return GramLattice(self.gram.scaled(c))

    def sublattice(self, generators: Iterable[Sequence[int]]) -> "EmbeddedSublattice":
        """Sublattice generated by the given coordinate vectors."""
        gens = [self._check(g) for g in generators]
        h, _ = hnf(IntMatrix(gens))
        rows = [r for r in h.rows if any(r)]
        return EmbeddedSublattice(self, IntMatrix(rows))

    def orthogonal_section(self, w: Sequence[int]) -> "EmbeddedSublattice":
        """The saturated sublattice of all vectors orthogonal to w."""
        w = self._check(w)
        if not any(w):
            raise ZeroVector("section along the zero vector")
        col = IntMatrix([[dot(row, w)] for row in self.gram.num.rows])
        ker = kernel_basis(col)
        return EmbeddedSublattice(self, ker)

    def even_part(self) -> "EmbeddedSublattice":
        """Index-2 sublattice of even-norm vectors of an odd lattice."""
        if not self.is_integral():
            raise NotIntegral("even part needs an integral lattice")
        odd = [i for i in range(self.dim) if self.gram.num[i, i] % 2]
        if not odd:
            raise NotOdd("lattice is already even")
        i0 = odd[0]
        rows = []
        for i in range(self.dim):
            e = [0] * self.dim
            if i == i0:
                e[i0] = 2
            elif i in odd:
                e[i] = 1
                e[i0] = 1
            else:
                e[i] = 1
            rows.append(e)
        sub = self.sublattice(rows)
        if sub.induced.integrality() != "even":
            raise VerificationError("even part came out non-even")
        if sub.induced.det != 4 * self.det:
            raise VerificationError("even part does not have index 2")
        return sub

    def project_along(self, v: Sequence[int]) -> "Projection":
        """Orthogonal projection onto the hyperplane v^perp.

        v must be primitive.  The image of the lattice is again a lattice,
        of dimension one less and determinant det / N(v), and is returned
        with the exact coordinate map.
        """
        v = self._check(v)
        if not any(v):
            raise ZeroVector("projection along the zero vector")
        if math.gcd(*v) != 1:
            raise NotPrimitive(f"gcd of coordinates is {math.gcd(*v)}")
        _, u = hnf(IntMatrix([[c] for c in v]))
        t = RatMatrix(u).inverse().num.transpose()  # unimodular, row 0 == v
        if t.rows[0] != v:
            raise VerificationError("basis completion failed")
        gt = (RatMatrix(t) @ self.gram @ RatMatrix(t.transpose())).to_fractions()
        n = self.dim
        nv = gt[0][0]
        proj_gram = [
            [gt[i][j] - gt[0][i] * gt[0][j] / nv for j in range(1, n)]
            for i in range(1, n)
        ]
        lat = GramLattice(RatMatrix.from_fractions(proj_gram)) if n > 1 else GramLattice([])
        if lat.det * nv != self.det:
            raise VerificationError("projected determinant mismatch")
        tinv = RatMatrix(t).inverse().num
        return Projection(self, v, lat, tinv)


class EmbeddedSublattice:
    """A sublattice with its basis written in the ambient coordinates.

    basis_rows is k x n of full row rank; induced is the Gram lattice of
    those basis vectors.  Coordinates convert both ways exactly.
    """

    __slots__ = ("ambient", "basis_rows", "induced")

    def __init__(self, ambient: GramLattice, basis_rows: IntMatrix,
                 name: str | None = None):
        if basis_rows.nrows and basis_rows.ncols != ambient.dim:
            raise DimensionMismatch("basis width != ambient dimension")
        g = ambient.gram
        if basis_rows.nrows:
            num = basis_rows @ g.num @ basis_rows.transpose()
            induced = GramLattice(RatMatrix(num, g.den), name)
        else:
            induced = GramLattice([], name)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis_rows", basis_rows)
        object.__setattr__(self, "induced", induced)

    def __setattr__(self, name, value):
        raise AttributeError("EmbeddedSublattice is immutable")

    @property
    def dim(self) -> int:
        return self.basis_rows.nrows

    def __repr__(self):
        return f"EmbeddedSublattice(dim {self.dim} in {self.ambient!r})"

    def embed(self, c: Sequence[int]) -> Vec:
        """Ambient coordinates of the sublattice vector c."""
        if len(c) != self.dim:
            raise DimensionMismatch(f"vector length {len(c)} != {self.dim}")
        rows = self.basis_rows.rows
        return tuple(
            sum(ci * rows[i][j] for i, ci in enumerate(c))
            for j in range(self.ambient.dim)
        )

    def coords_of(self, x: Sequence[int]) -> Vec:
        """Sublattice coordinates of an ambient vector; NotInLattice if out."""
        sol = solve_left(self.basis_rows, list(x))
        if sol is None:
            raise NotInLattice("vector outside the rational span")
        if any(s.denominator != 1 for s in sol):
            raise NotInLattice("vector in the span but not in the sublattice")
        back = self.embed([int(s) for s in sol])
        if back != tuple(int(v) for v in x):
            raise NotInLattice("vector outside the rational span")
        return tuple(int(s) for s in sol)

    def contains(self, x: Sequence[int]) -> bool:
        try:
            self.coords_of(x)
            return True
        except NotInLattice:
            return False

    def restrict(self, inner: "EmbeddedSublattice") -> "EmbeddedSublattice":
        """Compose: a sublattice of this sublattice, in ambient coordinates."""
        rows = [self.embed(r) for r in inner.basis_rows.rows]
        return EmbeddedSublattice(self.ambient, IntMatrix(rows))


class Projection:
    """Result of GramLattice.project_along: image lattice plus the map."""

    __slots__ = ("source", "vector", "lattice", "_tinv")

    def __init__(self, source: GramLattice, vector: Vec, lattice: GramLattice,
                 tinv: IntMatrix):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "vector", vector)
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "_tinv", tinv)

    def __setattr__(self, name, value):
        raise AttributeError("Projection is immutable")

    def coords(self, x: Sequence[int]) -> Vec:
        """Coordinates of the projected vector in the image lattice."""
        if len(x) != self.source.dim:
            raise DimensionMismatch("wrong length")
        cols = self._tinv.rows  # x @ tinv, tinv integer since t is unimodular
        c = [
            sum(int(xi) * cols[i][j] for i, xi in enumerate(x))
            for j in range(self.source.dim)
        ]
        return tuple(c[1:])
