"""Equiangular line families and exact Seidel-matrix certificates.

A family of t lines through the origin, spanned by lattice vectors of one
common norm N, is equiangular when every two spanning vectors have the same
absolute inner product c with 0 < c < N.  The common angle is kept as the
exact rational alpha = c/N; nothing in this module touches floating point.

The Seidel matrix of a family records the signs of the pairwise inner
products of the chosen representatives.  Writing G for the Gram matrix of
the unit representatives, S = (G - I)/alpha entrywise, so G = I + alpha*S
is positive semidefinite of rank r and -1/alpha is the least eigenvalue of
S whenever t > r.  Switching (negating some representatives) conjugates S
by a sign diagonal and reordering permutes it, so the characteristic
polynomial is an invariant of the family itself.  It is computed exactly,
and root locations are certified by Sturm counts, never by numerics.

Bound checks: a family of rank r has t <= r(r+1)/2 unconditionally,
t <= r(1-alpha^2)/(1-r*alpha^2) when r*alpha^2 < 1, and 1/alpha must be an
odd integer as soon as t > 2r.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Iterable, Sequence

from .errors import (
    BadParameter,
    DegeneratePair,
    NotApplicable,
    NotEquiangular,
    VerificationError,
)
from .exact import (
    DEFAULT_ROOT_WIDTH,
    IntMatrix,
    berkowitz,
    cauchy_bound,
    count_roots_halfopen,
    poly_gcd,
    rank_det,
    root_multiplicity,
    smallest_real_root,
    solve_left,
    sturm_chain,
)
from .fastops import imatmul
from .lattice import GramLattice
from .shortvec import PairSet

__all__ = [
    "LineFamily",
    "SeidelMatrix",
    "line_family",
    "seidel",
    "seidel_charpoly",
    "family_charpoly",
    "least_eigenvalue",
    "absolute_bound",
    "relative_bound",
    "neumann_check",
    "asymptotic_count",
    "certify",
    "KNOWN_MAX_LINES",
    "LATTICE_LINES_KNOWN",
]

# Largest known numbers of equiangular lines by dimension, from published
# tables: exact values up to dimension 17, (low, high) where the maximum is
# open.  Annotation data only; nothing in this package asserts against it.
KNOWN_MAX_LINES = {
    2: 3, 3: 6, 4: 6, 5: 10, 6: 16,
    7: 28, 8: 28, 9: 28, 10: 28, 11: 28, 12: 28, 13: 28, 14: 28,
    15: 36, 16: 40, 17: 48,
    18: (57, 59), 19: (72, 74), 20: (90, 94),
    21: 126, 22: 176, 23: 276,
}

# Best published counts attained by minimal vectors of a lattice (lower
# bounds for the lattice-restricted maximum), dimensions 14..23.
LATTICE_LINES_KNOWN = {
    14: 28, 15: 36, 16: 38, 17: 48, 18: 56,
    19: 72, 20: 90, 21: 126, 22: 176, 23: 276,
}


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _tr(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*rows)]


class LineFamily:
    """A verified equiangular set: +-pair representatives plus angle data.

    Fields: lattice, pairs (a PairSet of the representatives, one per line,
    all of one norm), t = number of lines, rank of their span, the common
    absolute inner product c, and alpha = c/norm.  Families with fewer than
    two lines are allowed but carry no angle (c and alpha are None).
    """

    __slots__ = ("lattice", "pairs", "t", "rank", "c", "alpha")

    def __init__(self, lattice, pairs, t, rank, c, alpha):
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "alpha", alpha)

    def __setattr__(self, name, value):
        raise AttributeError("LineFamily is immutable")

    def __len__(self) -> int:
        return self.t

    def __repr__(self):
        angle = "no angle" if self.alpha is None else f"alpha={self.alpha}"
        return f"LineFamily(t={self.t}, rank={self.rank}, {angle})"


def line_family(lat: GramLattice, vectors) -> LineFamily:
    """Validate vectors as an equiangular family on lat and package them.

    vectors may be a PairSet on lat or any iterable of coordinate vectors;
    one representative per +-pair is kept and they must share one norm.
    Every two distinct lines must realize the same absolute inner product
    c > 0; the first offending pair is reported otherwise.
    """
    if isinstance(vectors, PairSet):
        if vectors.lattice != lat:
            raise BadParameter("pair set lives on a different lattice")
        pairs = vectors
    else:
        pairs = PairSet(lat, vectors)
    reps = [list(v) for v in pairs.reps]
    t = len(reps)
    if t == 0:
        return LineFamily(lat, pairs, 0, 0, None, None)
    rank = rank_det(IntMatrix(reps))[0]
    if t == 1:
        return LineFamily(lat, pairs, 1, rank, None, None)
    den = lat.gram.den
    rg = imatmul(reps, lat.gram.num.rows)
    c_num = None

    def mismatch(i, j, got):
        return NotEquiangular(
            f"pairs {pairs.reps[i]} and {pairs.reps[j]}: "
            f"|inner| {Fraction(got, den)} != {Fraction(c_num, den)}"
        )

    if t <= 1024:
        prods = imatmul(rg, _tr(reps))
        c_num = abs(prods[0][1])
        for i in range(t):
            for j in range(i + 1, t):
                if abs(prods[i][j]) != c_num:
                    raise mismatch(i, j, abs(prods[i][j]))
    else:
        # the t x t product would dwarf memory; scan pairwise, stopping at
        # the first mismatch (which Gerzon guarantees for t this large)
        for i in range(t):
            gi = rg[i]
            for j in range(i + 1, t):
                v = abs(sum(x * y for x, y in zip(gi, reps[j])))
                if c_num is None:
                    c_num = v
                elif v != c_num:
                    raise mismatch(i, j, v)
    c = Fraction(c_num, den)
    if c == 0:
        raise NotEquiangular("orthogonal lines: the common inner product is 0")
    if not c < pairs.norm:
        raise NotEquiangular(f"|inner| {c} not below the norm {pairs.norm}")
    return LineFamily(lat, pairs, t, rank, c, c / pairs.norm)


class SeidelMatrix:
    """Symmetric matrix with zero diagonal and entries +-1 off it."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        t = len(rows)
        for i, row in enumerate(rows):
            if len(row) != t:
                raise BadParameter("matrix is not square")
            if row[i] != 0:
                raise BadParameter(f"nonzero diagonal entry at {i}")
            for j in range(i + 1, t):
                if row[j] not in (-1, 1):
                    raise BadParameter(f"entry ({i},{j}) = {row[j]} is not +-1")
                if rows[j][i] != row[j]:
                    raise BadParameter(f"asymmetry at ({i},{j})")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SeidelMatrix is immutable")

    def __len__(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, SeidelMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SeidelMatrix(t={len(self.rows)})"


def seidel(fam: LineFamily) -> SeidelMatrix:
    """Sign matrix of the family's pairwise inner products.

    Entry (i, j) is the sign of x_i . x_j for the canonical representatives,
    so S = (G - I)/alpha holds entrywise for the unit Gram matrix G.
    Another choice of representatives conjugates the result by a sign
    diagonal and leaves all spectral data unchanged.
    """
    if fam.alpha is None:
        raise DegeneratePair(f"{fam.t} line(s) carry no angle")
    reps = [list(v) for v in fam.pairs.reps]
    prods = imatmul(imatmul(reps, fam.lattice.gram.num.rows), _tr(reps))
    return SeidelMatrix(
        [
            [0 if i == j else _sign(e) for j, e in enumerate(row)]
            for i, row in enumerate(prods)
        ]
    )


# Above this size Berkowitz on the t x t matrix is no longer cheap and the
# minimal-polynomial route is tried first.
_BERKOWITZ_CAP = 64
_MINPOLY_CAP = 24


def seidel_charpoly(s: SeidelMatrix) -> list[int]:
    """Coefficients of det(xI - S), ascending, exactly.

    Small matrices go straight to the fraction-free Berkowitz algorithm.
    Larger ones first try a verified minimal-polynomial route which handles
    the highly structured matrices produced by lattice families (an exact
    annihilation identity plus trace equations pin the multiplicities); when
    the structure is absent it falls back to Berkowitz, which is always
    correct, merely slow.
    """
    if len(s.rows) <= _BERKOWITZ_CAP:
        return berkowitz(IntMatrix(s.rows))
    p = _charpoly_via_minpoly([list(r) for r in s.rows])
    if p is not None:
        return p
    return berkowitz(IntMatrix(s.rows))


def _krylov_annihilator(rows, start) -> list[Fraction]:
    """Monic least-degree p with p(rows) @ start = 0, by Krylov iteration.

    Maintains a row-reduced basis of the Krylov space; the first vector that
    reduces to zero yields the dependency and hence the annihilator of the
    start vector.
    """
    t = len(rows)
    basis = []  # (pivot index, reduced vector, combination over Krylov steps)
    v = [Fraction(e) for e in start]
    combo = [Fraction(1)]
    while True:
        red = list(v)
        coeffs = list(combo)
        for piv, bvec, bcombo in basis:
            if red[piv]:
                f = red[piv] / bvec[piv]
                for k in range(t):
                    red[k] -= f * bvec[k]
                for k in range(len(bcombo)):
                    coeffs[k] -= f * bcombo[k]
        piv = next((k for k in range(t) if red[k]), None)
        if piv is None:
            lead = coeffs[-1]
            return [c / lead for c in coeffs]
        basis.append((piv, red, coeffs))
        if len(basis) > _MINPOLY_CAP:
            return []
        v = [sum(row[k] * v[k] for k in range(t)) for row in rows]
        combo = [Fraction(0)] + combo


def _poly_lcm(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a:
        return b
    if not b:
        return a
    g = poly_gcd(a, b)
    q = _poly_divexact(a, [Fraction(c) for c in g])
    out = _poly_mul(q, b)
    lead = out[-1]
    return [c / lead for c in out]


def _poly_mul(a, b) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _poly_divexact(a, b) -> list[Fraction]:
    """Quotient a/b for polynomials where the division is exact."""
    a = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = a[i + len(b) - 1] / b[-1]
        out[i] = q
        if q:
            for j, cb in enumerate(b):
                a[i + j] -= q * cb
    return out


def _deflate(p, root, k) -> list[Fraction]:
    """Divide p by (x - root)^k; the division must be exact."""
    p = [Fraction(c) for c in p]
    for _ in range(k):
        out = [Fraction(0)] * (len(p) - 1)
        acc = Fraction(0)
        for i in range(len(p) - 1, 0, -1):
            acc = p[i] + root * acc
            out[i - 1] = acc
        p = out
    return p


def _charpoly_via_minpoly(rows) -> list[int] | None:
    """Charpoly of an integer symmetric matrix through its minimal polynomial.

    Returns None whenever the matrix is not split with small integer
    spectrum; the caller then falls back to a direct method.  When it does
    return, the answer is proved: the candidate annihilates the matrix as an
    exact identity, its roots are integers, and the multiplicities are the
    unique solution of the trace equations.
    """
    t = len(rows)
    starts = [[1 + (k % 7) for k in range(t)]]
    starts += [[int(i == k) for i in range(t)] for k in range(min(4, t))]
    minpoly: list[Fraction] = []
    for start in starts:
        ann = _krylov_annihilator(rows, start)
        if not ann:
            return None
        minpoly = _poly_lcm(minpoly, ann)
        if len(minpoly) > _MINPOLY_CAP + 1:
            return None
        if any(c.denominator != 1 for c in minpoly):
            return None  # cannot divide an integer charpoly; abandon the route
        if _annihilates(rows, [int(c) for c in minpoly]):
            break
    else:
        return None
    roots = _integer_roots([int(c) for c in minpoly])
    if roots is None:
        return None
    d = len(roots)
    # traces of the first d powers pin the eigenvalue multiplicities
    traces = [t]
    power = [[1 if i == j else 0 for j in range(t)] for i in range(t)]
    for _ in range(d - 1):
        power = imatmul(power, rows)
        traces.append(sum(power[i][i] for i in range(t)))
    vand = IntMatrix([[r**k for k in range(d)] for r in roots])
    mults = solve_left(vand, traces)
    if mults is None:
        return None
    out = [Fraction(1)]
    total = 0
    for root, mult in zip(roots, mults):
        if mult.denominator != 1 or mult <= 0:
            return None
        total += int(mult)
        for _ in range(int(mult)):
            out = [Fraction(0)] + out
            for i in range(len(out) - 1):
                out[i] -= root * out[i + 1]
    if total != t:
        return None
    return [int(c) for c in out]


def _annihilates(rows, p: list[int]) -> bool:
    t = len(rows)
    acc = [[p[-1] if i == j else 0 for j in range(t)] for i in range(t)]
    for c in reversed(p[:-1]):
        acc = imatmul(acc, rows)
        for i in range(t):
            acc[i][i] += c
    return all(not e for row in acc for e in row)


def _integer_roots(p: list[int]) -> list[int] | None:
    """Distinct integer roots of a monic squarefree integer polynomial, or
    None if it does not split over the integers."""
    work = [Fraction(c) for c in p]
    roots = []
    const = p[0]
    if const == 0:
        roots.append(0)
        work = _deflate(work, 0, 1)
        const = int(work[0]) if len(work) > 1 else 1
    candidates = set()
    a = abs(const)
    d = 1
    while d * d <= a:
        if a % d == 0:
            candidates.update((d, -d, a // d, -(a // d)))
        d += 1
    for cand in sorted(candidates, key=abs):
        while len(work) > 1 and sum(c * cand**k for k, c in enumerate(work)) == 0:
            roots.append(cand)
            work = _deflate(work, cand, 1)
    if len(work) != 1:
        return None
    if len(set(roots)) != len(roots):
        return None  # repeated root: not squarefree, cannot trust the route
    return sorted(roots)


def least_eigenvalue(
    s: SeidelMatrix, width: Fraction = DEFAULT_ROOT_WIDTH
) -> tuple[Fraction, Fraction]:
    """Isolating interval (lo, hi) for the least eigenvalue of S.

    lo == hi when the eigenvalue is rational (always the case for integer
    spectra); otherwise hi - lo <= width and Sturm counts certify that the
    interval contains the least root and nothing lies below it.
    """
    return smallest_real_root(seidel_charpoly(s), width)


def _poly_linear_sub(p, a, b) -> list[Fraction]:
    """Coefficients of p(a*x + b) by Horner composition."""
    res = [Fraction(0)]
    for coeff in reversed([Fraction(c) for c in p]):
        nxt = [Fraction(0)] * (len(res) + 1)
        for i, c in enumerate(res):
            nxt[i + 1] += a * c
            nxt[i] += b * c
        nxt[0] += coeff
        while len(nxt) > 1 and nxt[-1] == 0:
            nxt.pop()
        res = nxt
    return res


def family_charpoly(fam: LineFamily) -> list[Fraction]:
    """Characteristic polynomial of the family's Seidel matrix, monic
    ascending, computed without ever forming a t x t matrix.

    The nonzero eigenvalues of the t x t Gram matrix of the representatives
    agree with those of the n x n product (Gram)(B^T B), where B stacks the
    representatives.  Mapping each Gram eigenvalue mu to (mu/N - 1)/alpha
    and restoring the t - r zero eigenvalues as -1/alpha yields det(xI - S)
    for t in the hundreds at n x n cost.
    """
    if fam.alpha is None:
        raise DegeneratePair(f"{fam.t} line(s) carry no angle")
    reps = [list(v) for v in fam.pairs.reps]
    t, r, n = fam.t, fam.rank, fam.lattice.dim
    btb = imatmul(_tr(reps), reps)
    p = berkowitz(IntMatrix(imatmul(fam.lattice.gram.num.rows, btb)))
    if any(p[k] for k in range(n - r)) or not p[n - r]:
        raise VerificationError("spectral factor disagrees with the rank")
    # roots of g are den*N*(alpha*lambda + 1) over Seidel eigenvalues lambda
    scale = fam.lattice.gram.den * fam.pairs.norm
    h = _poly_linear_sub(p[n - r:], scale * fam.alpha, scale)
    if len(h) != r + 1:
        raise VerificationError("degree loss in the spectral substitution")
    h = [c / h[-1] for c in h]
    root = -1 / fam.alpha
    for _ in range(t - r):
        h = [Fraction(0)] + h
        for i in range(len(h) - 1):
            h[i] -= root * h[i + 1]
    if len(h) != t + 1 or h[t - 1] != 0:  # trace of a Seidel matrix is 0
        raise VerificationError("assembled spectrum fails the trace identity")
    return h


def absolute_bound(n: int) -> int:
    """n(n+1)/2: the most equiangular lines any rank-n set can have."""
    if n < 1:
        raise BadParameter("rank must be positive")
    return n * (n + 1) // 2


def relative_bound(n: int, alpha) -> int:
    """floor of n(1 - alpha^2)/(1 - n*alpha^2); requires n*alpha^2 < 1."""
    alpha = Fraction(alpha)
    if n < 1 or not 0 < alpha < 1:
        raise BadParameter("need n >= 1 and 0 < alpha < 1")
    if n * alpha**2 >= 1:
        raise NotApplicable(f"n*alpha^2 = {n * alpha**2} >= 1")
    return floor(n * (1 - alpha**2) / (1 - n * alpha**2))


def neumann_check(t: int, n: int, alpha) -> bool:
    """Parity test: t > 2n forces 1/alpha to be an odd integer.

    True when the constraint holds or does not apply (t <= 2n), False when
    t > 2n and 1/alpha is not an odd integer.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise BadParameter("need 0 < alpha < 1")
    if t <= 2 * n:
        return True
    inv = 1 / alpha
    return inv.denominator == 1 and inv.numerator % 2 == 1


def asymptotic_count(n: int, k: int) -> int:
    """floor(k(n-1)/(k-1)): the eventual maximum at alpha = 1/(2k-1).

    For every k >= 2 there is a dimension beyond which no equiangular
    family at angle arccos(1/(2k-1)) beats this count.
    """
    if k < 2 or n < 1:
        raise BadParameter("need k >= 2 and n >= 1")
    return k * (n - 1) // (k - 1)


def certify(fam: LineFamily, width: Fraction = DEFAULT_ROOT_WIDTH) -> dict:
    """Run every certificate on the family and report, never raise.

    Checks: rank consistency, the absolute bound, the rational bound at the
    family's angle (when its hypothesis applies), the parity test, and the
    certified location of the least Seidel eigenvalue: equal to -1/alpha
    with multiplicity exactly t - rank when t > rank, strictly above
    -1/alpha when t = rank.  Failures become entries with passed=False.
    Reference counts from published tables are attached as annotations and
    are never asserted.
    """
    t, r, alpha = fam.t, fam.rank, fam.alpha
    report = {
        "t": t,
        "rank": r,
        "alpha": alpha,
        "norm": fam.pairs.norm,
        "checks": [],
        "annotations": {
            "known_max_at_rank": KNOWN_MAX_LINES.get(r),
            "lattice_known_at_rank": LATTICE_LINES_KNOWN.get(r),
        },
    }
    checks = report["checks"]
    if alpha is None:
        checks.append(
            {
                "check": "degenerate",
                "passed": True,
                "note": "fewer than two lines; nothing to certify",
            }
        )
        report["ok"] = True
        return report

    recount = rank_det(IntMatrix([list(v) for v in fam.pairs.reps]))[0]
    checks.append(
        {
            "check": "rank",
            "passed": recount == r and r <= min(t, fam.lattice.dim),
            "rank": r,
        }
    )

    ab = absolute_bound(r)
    checks.append(
        {
            "check": "absolute_bound",
            "passed": t <= ab,
            "bound": ab,
            "equality": t == ab,
        }
    )

    entry = {"check": "relative_bound", "applicable": True}
    try:
        rb = relative_bound(r, alpha)
        entry.update(passed=t <= rb, bound=rb, equality=t == rb)
    except NotApplicable as exc:
        entry.update(applicable=False, passed=True, note=str(exc))
        if t <= 1 / alpha**2:
            entry["note"] += (
                "; hypothesis conflict: t <= alpha^-2 holds yet"
                " rank*alpha^2 >= 1, so no bound value is reported"
            )
    checks.append(entry)

    checks.append(
        {
            "check": "neumann",
            "passed": neumann_check(t, r, alpha),
            "applicable": t > 2 * r,
            "inverse_alpha": 1 / alpha,
        }
    )

    p = family_charpoly(fam)
    target = -1 / alpha
    mult = root_multiplicity(p, target)
    entry = {"check": "least_eigenvalue", "value": target, "multiplicity": mult}
    if t > r:
        q = _deflate(p, target, mult) if mult else [Fraction(c) for c in p]
        chain = sturm_chain(q)
        below = count_roots_halfopen(chain, -cauchy_bound(q) - 1, target)
        entry["passed"] = mult == t - r and below == 0
        entry["interval"] = (target, target)
    else:
        chain = sturm_chain(p)
        at_or_below = count_roots_halfopen(chain, -cauchy_bound(p) - 1, target)
        entry["passed"] = mult == 0 and at_or_below == 0
        entry["interval"] = smallest_real_root(p, width)
        entry["note"] = "t = rank: the bound eigenvalue is not attained"
    checks.append(entry)

    report["ok"] = all(c["passed"] for c in checks)
    return report
