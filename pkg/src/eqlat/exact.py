"""Exact linear algebra over the integers and rationals.

Everything in this module computes with Python ints and fractions.Fraction;
no floating point is used anywhere.  Matrices are immutable: IntMatrix wraps
a tuple of integer row tuples, RatMatrix stores an integer numerator matrix
together with a single positive denominator in lowest terms, so both hash
and compare by value.

The routines are the ones the rest of the library leans on: Hermite normal
form with a unimodular transform, fraction-free rank/determinant (Bareiss),
rational LDL^T, saturated integer kernels, linear solving, the Berkowitz
characteristic polynomial, and Sturm-chain real root isolation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotPositiveDefinite

__all__ = [
    "IntMatrix",
    "RatMatrix",
    "hnf",
    "rank_det",
    "kernel_basis",
    "ldl",
    "solve_left",
    "berkowitz",
    "poly_eval",
    "poly_deriv",
    "poly_monic_scale",
    "squarefree_part",
    "sturm_chain",
    "count_roots_halfopen",
    "root_multiplicity",
    "smallest_real_root",
]


def _as_int_rows(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    out = tuple(tuple(int(v) for v in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionMismatch("ragged rows")
    return out


class IntMatrix:
    """Immutable integer matrix (tuple of row tuples)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        object.__setattr__(self, "rows", _as_int_rows(rows))

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            return self.rows[ij[0]][ij[1]]
        return self.rows[ij]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows)) if self.rows else IntMatrix([])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.ncols} != {other.nrows}")
        bt = list(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.rows]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-v for v in row] for row in self.rows])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def stack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows and other.rows and self.ncols != other.ncols:
            raise DimensionMismatch("column count mismatch")
        return IntMatrix(self.rows + other.rows)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i)
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)


class RatMatrix:
    """Immutable rational matrix: integer numerators over one denominator.

    Normalised so den >= 1 and gcd(den, all numerators) == 1, which makes
    equality and hashing structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntMatrix | Iterable[Iterable[int]], den: int = 1):
        if not isinstance(num, IntMatrix):
            num = IntMatrix(num)
        if den == 0:
            raise ZeroDivisionError("denominator 0")
        if den < 0:
            num, den = -num, -den
        g = den
        for row in num.rows:
            for v in row:
                g = math.gcd(g, v)
                if g == 1:
                    break
            if g == 1:
                break
        if g > 1:
            num = IntMatrix([[v // g for v in row] for row in num.rows])
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_fractions(cls, rows: Iterable[Iterable[Fraction]]) -> "RatMatrix":
        rows = [[Fraction(v) for v in row] for row in rows]
        den = 1
        for row in rows:
            for v in row:
                den = den * v.denominator // math.gcd(den, v.denominator)
        return cls([[int(v * den) for v in row] for row in rows], den)

    @property
    def nrows(self) -> int:
        return self.num.nrows

    @property
    def ncols(self) -> int:
        return self.num.ncols

    def __getitem__(self, ij) -> Fraction:
        if isinstance(ij, tuple):
            return Fraction(self.num[ij], self.den)
        return tuple(Fraction(v, self.den) for v in self.num[ij])

    def __eq__(self, other):
        return (
            isinstance(other, RatMatrix)
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatMatrix({self.num.to_lists()}, den={self.den})"

    def to_fractions(self) -> list[list[Fraction]]:
        return [[Fraction(v, self.den) for v in row] for row in self.num.rows]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.num.transpose(), self.den)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(self.num @ other.num, self.den * other.den)

    def is_symmetric(self) -> bool:
        return self.num.is_symmetric()

    def is_integral(self) -> bool:
        return self.den == 1

    def scaled(self, c: Fraction | int) -> "RatMatrix":
        c = Fraction(c)
        num = IntMatrix([[v * c.numerator for v in row] for row in self.num.rows])
        return RatMatrix(num, self.den * c.denominator)

    def inverse(self) -> "RatMatrix":
        """Inverse by Gauss-Jordan elimination over Q.

        Raises ZeroDivisionError when singular.
        """
        n = self.nrows
        if n != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        a = [
            [Fraction(v, self.den) for v in row]
            + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self.num.rows)
        ]
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[c], a[piv] = a[piv], a[c]
            inv = 1 / a[c][c]
            a[c] = [v * inv for v in a[c]]
            for i in range(n):
                if i != c and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [v - f * w for v, w in zip(a[i], a[c])]
        return RatMatrix.from_fractions([row[n:] for row in a])


# ---------------------------------------------------------------------------
# Hermite normal form and friends


def hnf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form: returns (H, U) with H = U @ m, det U = +-1.

    H is upper echelon with positive pivots, entries above each pivot reduced
    into [0, pivot), and zero rows collected at the bottom.  The pivot choice
    (smallest absolute value, then lowest row index) makes the reduction
    deterministic; H itself is the canonical form of the row lattice.
    """
    h = [list(row) for row in m.rows]
    nr = len(h)
    nc = len(h[0]) if h else 0
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    r = 0
    for c in range(nc):
        while True:
            live = [(abs(h[i][c]), i) for i in range(r, nr) if h[i][c] != 0]
            if not live:
                break
            _, p = min(live)
            if len(live) == 1:
                if p != r:
                    h[r], h[p] = h[p], h[r]
                    u[r], u[p] = u[p], u[r]
                break
            for _, i in live:
                if i == p:
                    continue
                q = h[i][c] // h[p][c]
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[p])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[p])]
        if r < nr and h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-v for v in h[r]]
                u[r] = [-v for v in u[r]]
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[r])]
            r += 1
            if r == nr:
                break
    return IntMatrix(h), IntMatrix(u)


def rank_det(m: IntMatrix) -> tuple[int, int | None]:
    """Rank, and determinant when square, by fraction-free elimination.

    Bareiss one-step elimination keeps every intermediate entry an exact
    minor of m, so there is no coefficient blow-up beyond Hadamard's bound
    and no division error.  det is None for non-square input.
    """
    a = [list(row) for row in m.rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    sign = 1
    prev = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            sign = -sign
        for i in range(r + 1, nr):
            row_i, row_r = a[i], a[r]
            f = row_i[c]
            a[i] = [
                (row_r[c] * row_i[j] - f * row_r[j]) // prev for j in range(nc)
            ]
        prev = a[r][c]
        r += 1
    if nr != nc:
        return r, None
    return r, sign * prev if r == nr else 0


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Canonical basis of the saturated left kernel {x in Z^r : x @ m = 0}.

    The rows of U matching zero rows of H span the kernel; because U is
    unimodular they span it saturated (every integer kernel vector is an
    integer combination).  A final HNF pass canonicalises the basis.
    """
    h, u = hnf(m)
    ker = [u.rows[i] for i in range(m.nrows) if all(v == 0 for v in h.rows[i])]
    if not ker:
        return IntMatrix.zeros(0, m.nrows)
    kh, _ = hnf(IntMatrix(ker))
    return IntMatrix(kh.rows[: len(ker)])


def ldl(g: RatMatrix) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Rational Cholesky-style factorisation G = L D L^T.

    L is unit lower triangular, D the diagonal pivot list.  Any pivot <= 0
    raises NotPositiveDefinite, so success certifies G > 0 exactly.
    """
    if not g.is_symmetric():
        raise DimensionMismatch("ldl needs a symmetric matrix")
    n = g.nrows
    a = g.to_fractions()
    lw = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d: list[Fraction] = []
    for k in range(n):
        piv = a[k][k]
        if piv <= 0:
            raise NotPositiveDefinite(f"pivot {piv} at index {k}")
        d.append(piv)
        for i in range(k + 1, n):
            f = a[i][k] / piv
            lw[i][k] = f
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return lw, d


def solve_left(b: IntMatrix | RatMatrix, x: Sequence) -> tuple[Fraction, ...] | None:
    """Solve c @ b = x over Q for a row vector c; None if inconsistent.

    b may have fewer rows than columns; when the rows are dependent any one
    solution is returned.
    """
    if isinstance(b, IntMatrix):
        rows = [[Fraction(v) for v in row] for row in b.rows]
    else:
        rows = b.to_fractions()
    k = len(rows)
    n = len(rows[0]) if rows else 0
    if len(x) != n:
        raise DimensionMismatch(f"vector length {len(x)} != {n}")
    # Work on the transposed system b^T c^T = x^T with an augmented column.
    a = [[rows[i][j] for i in range(k)] + [Fraction(x[j])] for j in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if a[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = a[i][k]
    return tuple(sol)


# ---------------------------------------------------------------------------
# Characteristic polynomial

def berkowitz(m: IntMatrix | RatMatrix) -> list:
    """Coefficients of det(x*I - m), ascending, by Berkowitz's algorithm.

    Division-free, so integer input gives integer coefficients and rational
    input stays exact.  Returns [c0, c1, ..., 1] of length n + 1.
    """
    if isinstance(m, RatMatrix):
        rows = m.to_fractions()
        one = Fraction(1)
    else:
        rows = m.to_lists()
        one = 1
    n = len(rows)
    if n == 0:
        return [one]
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("berkowitz needs a square matrix")
    # polys[k] holds det(x*I - leading k x k block), descending coefficients.
    poly = [one, -rows[0][0]]
    for k in range(1, n):
        akk = rows[k][k]
        row = rows[k][:k]
        col = [rows[i][k] for i in range(k)]
        block = [r[:k] for r in rows[:k]]
        # Toeplitz column: -a_kk, -(row @ col), -(row @ M col), ...
        toep = [one, -akk]
        vec = col
        for _ in range(k):
            toep.append(-sum(a * b for a, b in zip(row, vec)))
            vec = [sum(block[i][j] * vec[j] for j in range(k)) for i in range(k)]
        # First k + 2 entries of the convolution (lower-triangular Toeplitz
        # times the previous coefficient vector).
        new = [one * 0] * (k + 2)
        for i, t in enumerate(toep):
            if t == 0:
                continue
            for j, c in enumerate(poly):
                if i + j > k + 1:
                    break
                new[i + j] += t * c
        poly = new
    return list(reversed(poly))


# ---------------------------------------------------------------------------
# Polynomials (ascending integer coefficient lists) and Sturm chains


def _trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p: Sequence, x):
    """Horner evaluation; exact for int or Fraction arguments."""
    acc = 0
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def poly_deriv(p: Sequence) -> list:
    return [i * c for i, c in enumerate(p)][1:]


def poly_monic_scale(p: Sequence) -> list[Fraction]:
    """Divide by the leading coefficient; [] stays []."""
    q = _trim(p)
    if not q:
        return []
    lead = Fraction(q[-1])
    return [Fraction(c) / lead for c in q]


def _to_primitive_int(p: Sequence) -> list[int]:
    """Clear denominators and divide by the content, keeping the sign."""
    q = [Fraction(c) for c in _trim(p)]
    if not q:
        return []
    den = 1
    for c in q:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in q]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints]


def _rem_primitive(a: list[int], b: list[int]) -> list[int]:
    """Primitive integer remainder of a by b (sign of the true remainder)."""
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    lead = Fraction(b[-1])
    while len(r) - 1 >= db and _trim(r):
        r = _trim(r)
        if len(r) - 1 < db:
            break
        f = r[-1] / lead
        shift = len(r) - 1 - db
        for i, c in enumerate(b):
            r[i + shift] -= f * c
        r[-1] = Fraction(0)
    return _to_primitive_int(r)


def poly_gcd(a: Sequence, b: Sequence) -> list[int]:
    """Primitive gcd over Z with positive leading coefficient."""
    a, b = _to_primitive_int(a), _to_primitive_int(b)
    while b:
        a, b = b, _rem_primitive(a, b)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def squarefree_part(p: Sequence) -> list[int]:
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    q = _to_primitive_int(p)
    if len(q) <= 1:
        return q
    g = poly_gcd(q, poly_deriv(q))
    if len(g) == 1:
        return q if q[-1] > 0 else [-c for c in q]
    # Exact division q / g over Q, then renormalise.
    num = [Fraction(c) for c in q]
    out = [Fraction(0)] * (len(q) - len(g) + 1)
    dg = len(g) - 1
    lead = Fraction(g[-1])
    for k in range(len(out) - 1, -1, -1):
        f = num[k + dg] / lead
        out[k] = f
        if f:
            for i, c in enumerate(g):
                num[k + i] -= f * c
    res = _to_primitive_int(out)
    return res if res[-1] > 0 else [-c for c in res]


def root_multiplicity(p: Sequence, r: Fraction | int) -> int:
    """Multiplicity of r as a root of p (0 when p(r) != 0)."""
    r = Fraction(r)
    q = [Fraction(c) for c in _trim(p)]
    mult = 0
    while len(q) > 1 and poly_eval(q, r) == 0:
        # Synthetic division by (x - r); the remainder is known to vanish.
        d = len(q) - 1
        s = [Fraction(0)] * d
        s[d - 1] = q[d]
        for i in range(d - 1, 0, -1):
            s[i - 1] = q[i] + r * s[i]
        q = s
        mult += 1
    return mult


def sturm_chain(p: Sequence) -> list[list[int]]:
    """Sturm chain of the squarefree part of p, primitive at every step."""
    s0 = squarefree_part(p)
    chain = [s0]
    if len(s0) > 1:
        chain.append(_to_primitive_int(poly_deriv(s0)))
        while len(chain[-1]) > 1:
            nxt = [-c for c in _rem_primitive(chain[-2], chain[-1])]
            if not nxt:
                break
            chain.append(nxt)
    return chain


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_halfopen(chain: list[list[int]], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b].  Requires chain[0](a) != 0.

    Zero-skipping sign variation handles an exact root at b correctly, so
    the bisection below may land on roots without special casing.
    """
    if poly_eval(chain[0], a) == 0:
        raise ValueError("left endpoint is a root")
    return _variations(chain, a) - _variations(chain, b)


def cauchy_bound(p: Sequence) -> Fraction:
    """B with every real root of p inside (-B, B)."""
    q = _trim(p)
    if len(q) <= 1:
        return Fraction(1)
    lead = abs(q[-1])
    return 1 + max(abs(Fraction(c)) for c in q[:-1]) / lead


DEFAULT_ROOT_WIDTH = Fraction(1, 2**50)


def smallest_real_root(
    p: Sequence, width: Fraction = DEFAULT_ROOT_WIDTH
) -> tuple[Fraction, Fraction]:
    """Isolating interval (lo, hi] for the least real root of p.

    Returns lo == hi when the root is found exactly (always the case for
    integer roots).  Otherwise hi - lo <= width, the interval contains the
    least root of p and no other, and the squarefree part of p changes sign
    across it.  Raises ValueError when p has no real root.
    """
    chain = sturm_chain(p)
    q = chain[0]
    if len(q) <= 1:
        raise ValueError("constant polynomial has no roots")
    bound = cauchy_bound(q)
    lo = Fraction(-(bound.numerator // bound.denominator) - 1)
    hi = -lo
    if poly_eval(q, lo) == 0 or count_roots_halfopen(chain, lo, hi) == 0:
        raise ValueError("no real roots")

    def is_least(x: Fraction) -> bool:
        return count_roots_halfopen(chain, lo, x) == 1

    while hi - lo > width or count_roots_halfopen(chain, lo, hi) > 1:
        if hi - lo <= 1:
            # At most one integer can sit inside; try it for an exact hit.
            k = Fraction(math.floor(lo) + 1)
            if lo < k <= hi and poly_eval(q, k) == 0 and is_least(k):
                return k, k
        mid = (lo + hi) / 2
        if poly_eval(q, mid) == 0 and is_least(mid):
            return mid, mid
        if count_roots_halfopen(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    if poly_eval(q, hi) == 0:
        return hi, hi
    return lo, hi
