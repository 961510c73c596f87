"""Independent reference implementations used only to check the library.

Everything here is deliberately written with different algorithms than the
package (cofactor expansion instead of Bareiss, rational Gauss instead of
HNF, a numpy grid scan instead of tree enumeration) so that agreement is
meaningful.
"""

from fractions import Fraction
from itertools import combinations, permutations

import numpy as np


def ref_det(rows):
    """Determinant by Leibniz expansion; fine up to about 7 x 7."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # Count inversions for the sign.
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j]
        )
        sign = -1 if inv % 2 else 1
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += sign * prod
    return total


def ref_rank(rows):
    """Rank by plain Gaussian elimination over Fraction."""
    a = [[Fraction(v) for v in row] for row in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        r += 1
    return r


def minors_gcd(rows, k):
    """gcd of all k x k minors; equals 1 iff the row lattice is saturated."""
    import math

    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    g = 0
    for ris in combinations(range(nr), k):
        for cis in combinations(range(nc), k):
            sub = [[rows[i][j] for j in cis] for i in ris]
            g = math.gcd(g, ref_det(sub))
            if g == 1:
                return 1
    return g


def poly_from_roots(roots):
    """Ascending integer coefficients of prod (x - r) for rational roots.

    Returned cleared of denominators (primitive up to sign of the lead).
    """
    coeffs = [Fraction(1)]
    for r in roots:
        r = Fraction(r)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    import math

    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in coeffs]


def grid_short_vectors(gram_rows, bound):
    """All x != 0 with x G x^T <= bound by scanning a box, via numpy.

    The box radius per coordinate comes from the dual Gram diagonal:
    x_i^2 <= bound * (G^-1)_ii for any x in the ellipsoid.  Intended for
    small well-conditioned lattices in tests; returns a sorted list of
    (norm, vector) with one representative per +-pair (the one whose first
    nonzero coordinate is positive).
    """
    g = np.array(gram_rows, dtype=np.int64)
    n = g.shape[0]
    ginv = np.linalg.inv(g.astype(float))
    radii = [int(np.floor(np.sqrt(bound * ginv[i, i] + 1e-9))) for i in range(n)]
    grids = np.meshgrid(*[np.arange(-r, r + 1) for r in radii], indexing="ij")
    pts = np.stack([a.ravel() for a in grids], axis=1).astype(np.int64)
    norms = np.einsum("ij,jk,ik->i", pts, g, pts)
    keep = (norms <= bound) & (norms > 0)
    out = []
    for vec, nm in zip(pts[keep], norms[keep]):
        v = tuple(int(c) for c in vec)
        lead = next(c for c in v if c != 0)
        if lead > 0:
            out.append((int(nm), v))
    out.sort()
    return out
