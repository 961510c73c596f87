"""Congruence classes mod 2L and the equiangular line families they carry.

For congruent vectors y = x mod 2L with y != +-x, the halves
e = (y-x)/2 and f = (y+x)/2 are nonzero lattice vectors, which forces
N(x) + N(y) = 2N(e) + 2N(f) >= 4m with m the lattice minimum, and on an
integral lattice N(y) = N(x) mod 4.  Equality N(x) + N(y) = 4m makes
both halves minimal and x.y = 0.

Taking x0 of norm 2m - 2, the class vectors of norm 2m + 2 are therefore
all orthogonal to x0, and any two of them have product +-2, so they span
lines at the single angle arccos 1/(m+1).  This module builds that
family, either by enumerating the class shell or through the slice
S0 = {x minimal : x0.x = m - 1}, which x -> x0 - 2x maps bijectively
onto the family.  It also realizes the family as the full minimal-vector
set of a lattice of dimension n - 1, the intersection of <x0, 2L> with
the hyperplane orthogonal to x0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import (
    BadParameter,
    DegeneratePair,
    DimensionMismatch,
    EmptyClass,
    MixedNorms,
    NotCongruent,
    NotEven,
    NotGenerated,
    NotIntegral,
    VerificationError,
    WrongNormX0,
    ZeroVector,
)
from .exact import IntMatrix, hnf, rank_det
from .fastops import imatmul
from .lattice import EmbeddedSublattice, GramLattice, Vec
from .shortvec import (
    PairSet,
    cached_shell,
    coset_minimum,
    coset_shell,
    minimum,
    shell,
)

__all__ = [
    "split_congruent_pair",
    "check_congruent_pair",
    "check_scalar_bound",
    "Mod2Class",
    "mod2_class",
    "default_x0",
    "EquiangularSet",
    "equiangular",
    "equiangular_direct",
    "equiangular_via_s0",
    "relative_lattice",
    "sqrt2_even_check",
    "check_scalar_products_after_projection",
]


def _vec(x: Sequence[int]) -> Vec:
    return tuple(int(c) for c in x)


def _neg(x: Vec) -> Vec:
    return tuple(-c for c in x)


def split_congruent_pair(x: Sequence[int], y: Sequence[int]) -> tuple[Vec, Vec]:
    """The halves e = (y-x)/2 and f = (y+x)/2 of a congruent pair.

    Both are lattice vectors exactly when y = x mod 2L, and both are
    nonzero when y != +-x; then x = f - e and y = e + f.
    """
    x, y = _vec(x), _vec(y)
    if len(x) != len(y):
        raise DimensionMismatch(f"lengths {len(x)} and {len(y)}")
    if not any(x) or not any(y):
        raise ZeroVector("both vectors must be nonzero")
    if y == x or y == _neg(x):
        raise DegeneratePair("y = +-x leaves a zero half")
    if any((b - a) % 2 for a, b in zip(x, y)):
        raise NotCongruent("y - x has an odd coordinate")
    e = tuple((b - a) // 2 for a, b in zip(x, y))
    f = tuple((b + a) // 2 for a, b in zip(x, y))
    return e, f


def check_congruent_pair(lat: GramLattice, x: Sequence[int], y: Sequence[int]) -> dict:
    """Norm constraints on a congruent pair of an integral lattice.

    Enforces N(x) + N(y) >= 4m and N(y) = N(x) mod 4, and reports whether
    the sum is exactly 4m; in that case both halves must be minimal and
    x.y must vanish.  Returns {sum_ok, mod4_ok, equality_case, x_dot_y,
    e, f}.
    """
    if not lat.is_integral():
        raise NotIntegral("the mod-4 constraint needs an integral lattice")
    e, f = split_congruent_pair(x, y)
    m = minimum(lat)
    nx, ny = lat.norm(x), lat.norm(y)
    if nx + ny < 4 * m:
        raise VerificationError(f"norm sum {nx + ny} below 4m = {4 * m}")
    if (int(ny) - int(nx)) % 4:
        raise VerificationError(f"norms {nx}, {ny} differ by {ny - nx} mod 4")
    equality = nx + ny == 4 * m
    d = lat.inner(x, y)
    if equality:
        if lat.norm(e) != m or lat.norm(f) != m:
            raise VerificationError("equality case with a non-minimal half")
        if d != 0:
            raise VerificationError(f"equality case with x.y = {d}")
    return {
        "sum_ok": True,
        "mod4_ok": True,
        "equality_case": equality,
        "x_dot_y": d,
        "e": e,
        "f": f,
    }


def check_scalar_bound(
    lat: GramLattice,
    x: Sequence[int],
    y: Sequence[int],
    yp: Sequence[int],
) -> bool:
    """|y.y'| <= N(y) - 2m for same-norm vectors of one class.

    y and y' must both be congruent to x mod 2L, have equal norms, and
    not form a +-pair.  The bound is enforced; True is returned.
    """
    if not lat.is_integral():
        raise NotIntegral("class norm constraints need an integral lattice")
    x, y, yp = _vec(x), _vec(y), _vec(yp)
    if yp == y or yp == _neg(y):
        raise DegeneratePair("y' = +-y")
    for v in (y, yp):
        if any((b - a) % 2 for a, b in zip(x, v)):
            raise NotCongruent("vector not congruent to x mod 2L")
    msec = lat.norm(y)
    if lat.norm(yp) != msec:
        raise MixedNorms(f"norms {msec} and {lat.norm(yp)}")
    bound = msec - 2 * minimum(lat)
    d = lat.inner(y, yp)
    if abs(d) > bound:
        raise VerificationError(f"|y.y'| = {abs(d)} exceeds {bound}")
    return True


class Mod2Class:
    """A congruence class x0 + 2L with its first minima.

    first is the least norm on the class, attained on the pairs in
    minimizers; when first < 2m that pair is unique.  second, when
    computed, is the next norm that occurs, with its shell.
    """

    __slots__ = ("lattice", "rep", "first", "minimizers", "second", "second_shell")

    def __init__(self, lattice, rep, first, minimizers, second, second_shell):
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "minimizers", minimizers)
        object.__setattr__(self, "second", second)
        object.__setattr__(self, "second_shell", second_shell)

    def __setattr__(self, name, value):
        raise AttributeError("Mod2Class is immutable")

    def __repr__(self):
        tail = f", second {self.second}" if self.second is not None else ""
        return (
            f"Mod2Class(first {self.first} on {len(self.minimizers)} pair(s){tail})"
        )


def mod2_class(
    lat: GramLattice,
    x0: Sequence[int],
    with_second: bool = False,
    search_upto=None,
) -> Mod2Class:
    """Minima of the class x0 + 2L.

    The second minimum is searched only on integral lattices, where all
    norms of one class agree mod 4, stepping candidate norms by 4 from
    the lower bound 4m - first up to search_upto (default first + 4m,
    which is always attained).
    """
    x0 = _vec(x0)
    first = coset_minimum(lat, x0)
    minimizers = PairSet(lat, coset_shell(lat, x0, first))
    m = minimum(lat)
    if first < 2 * m and len(minimizers) != 1:
        raise VerificationError(
            f"first minimum {first} < 2m attained on {len(minimizers)} pairs"
        )
    second = second_shell = None
    if with_second:
        if not lat.is_integral():
            raise NotIntegral("second minimum search assumes the mod-4 stride")
        cap = Fraction(search_upto) if search_upto is not None else first + 4 * m
        c = max(4 * m - first, first + 4)
        c += (int(first) - int(c)) % 4
        while c <= cap:
            sh = coset_shell(lat, x0, c)
            if sh:
                second = c
                second_shell = PairSet(lat, sh)
                break
            c += 4
    return Mod2Class(lat, x0, first, minimizers, second, second_shell)


def default_x0(lat: GramLattice) -> Vec:
    """Deterministic base point: the least vector of norm 2m - 2."""
    m = minimum(lat)
    r = 2 * m - 2
    if r <= 0:
        raise BadParameter("minimum 1 leaves no nonzero norm 2m - 2")
    sh = shell(lat, r)
    if not sh:
        raise EmptyClass(f"no vectors of norm {r}")
    return sh[0]


class EquiangularSet:
    """Pairs of class vectors at norm 2m + 2, all orthogonal to x0.

    pairs holds one representative per +-pair; alpha = 1/(m+1) is the
    common cosine; degenerate flags families of fewer than three lines.
    reason is set when a hypothesis failed (odd minimum) and the family
    is therefore expected to be empty.
    """

    __slots__ = ("lattice", "x0", "m", "pairs", "rank", "alpha", "degenerate", "reason")

    def __init__(self, lattice, x0, m, pairs, rank, alpha, degenerate, reason):
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "degenerate", degenerate)
        object.__setattr__(self, "reason", reason)

    def __setattr__(self, name, value):
        raise AttributeError("EquiangularSet is immutable")

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return (
            f"EquiangularSet({len(self.pairs)} pairs, rank {self.rank}, "
            f"alpha {self.alpha})"
        )


def _gate(lat: GramLattice, x0) -> tuple[Fraction, Vec, bool]:
    if not lat.is_integral():
        raise NotIntegral("congruence machinery needs an integral lattice")
    m = minimum(lat)
    if x0 is None:
        x0 = default_x0(lat)
    x0 = _vec(x0)
    if len(x0) != lat.dim:
        raise DimensionMismatch(f"x0 has length {len(x0)}, lattice dim {lat.dim}")
    if not any(x0):
        raise ZeroVector("x0 must be nonzero")
    if lat.norm(x0) != 2 * m - 2:
        raise WrongNormX0(f"N(x0) = {lat.norm(x0)}, need 2m - 2 = {2 * m - 2}")
    odd_min = int(m) % 2 == 1
    if not odd_min and lat.integrality() == "odd":
        raise NotEven("odd lattice of even minimum: pass its even part instead")
    return m, x0, odd_min


def _assemble(lat, x0, m, vectors, odd_min) -> EquiangularSet:
    pairs = PairSet(lat, vectors)
    reps = pairs.reps
    n = lat.dim
    if reps:
        if pairs.norm != 2 * m + 2:
            raise VerificationError(f"family norm {pairs.norm} != {2 * m + 2}")
        for v in reps:
            if any((a - b) % 2 for a, b in zip(v, x0)):
                raise VerificationError("family member outside the class of x0")
        g = lat.gram.num.to_lists()
        rows = [list(v) for v in reps]
        prod = imatmul(imatmul(rows, g), [list(c) for c in zip(*rows)])
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                if prod[i][j] not in (2, -2):
                    raise VerificationError(
                        f"pair product {prod[i][j]} not +-2 at ({i}, {j})"
                    )
        against = imatmul(rows, [[c] for c in imatmul([list(x0)], g)[0]])
        if any(row[0] for row in against):
            raise VerificationError("family member not orthogonal to x0")
        rank = rank_det(IntMatrix(rows))[0]
    else:
        rank = 0
    if rank > n - 1:
        raise VerificationError(f"rank {rank} exceeds n - 1 = {n - 1}")
    reason = None
    if odd_min:
        reason = f"odd minimum {m}: the even-minimum hypothesis fails"
    return EquiangularSet(
        lat, x0, m, pairs, rank, Fraction(1, int(m) + 1), len(pairs) < 3, reason
    )


def equiangular_direct(lat: GramLattice, x0: Sequence[int] | None = None) -> EquiangularSet:
    """The family by direct enumeration of the class shell at 2m + 2."""
    m, x0, odd_min = _gate(lat, x0)
    reps = coset_shell(lat, x0, 2 * m + 2)
    return _assemble(lat, x0, m, reps, odd_min)


def equiangular_via_s0(
    lat: GramLattice,
    x0: Sequence[int] | None = None,
    cross_validate: bool = False,
) -> EquiangularSet:
    """The family from the minimal-vector slice x0.x = m - 1.

    x -> x0 - 2x maps the slice bijectively onto the signed family, so
    only minimal vectors are enumerated; rank(family) = rank(slice) - 1
    is enforced.  cross_validate additionally compares against the
    direct enumeration.
    """
    m, x0, odd_min = _gate(lat, x0)
    want = m - 1
    s0 = []
    for r in shell(lat, m):
        d = lat.inner(x0, r)
        if d == want:
            s0.append(r)
        elif -d == want:
            s0.append(_neg(r))
    ys = [tuple(a - 2 * b for a, b in zip(x0, s)) for s in s0]
    out = _assemble(lat, x0, m, ys, odd_min)
    if s0 and out.rank != rank_det(IntMatrix(s0))[0] - 1:
        raise VerificationError("family rank != slice rank - 1")
    if len(s0) != 2 * len(out.pairs):
        raise VerificationError("slice does not pair up with the family")
    if cross_validate and out.pairs != equiangular_direct(lat, x0).pairs:
        raise VerificationError("slice route disagrees with class enumeration")
    return out


def equiangular(lat: GramLattice, x0: Sequence[int] | None = None) -> EquiangularSet:
    """Cheapest-route dispatch: the slice when minimal vectors are cached."""
    if cached_shell(lat, minimum(lat)) is not None:
        return equiangular_via_s0(lat, x0)
    return equiangular_direct(lat, x0)


def relative_lattice(lat: GramLattice, x0: Sequence[int]) -> EmbeddedSublattice:
    """The (n-1)-dimensional lattice whose minimal vectors are the family.

    For N(x0) = m' < 2m, the sublattice <x0, 2L> meets the hyperplane
    orthogonal to x0 in a lattice of dimension n - 1 and minimum
    m'' = 4m - m', with minimal vectors exactly the class shell at m''.
    All three facts are verified; the embedding into L is returned.
    """
    x0 = _vec(x0)
    if not any(x0):
        raise ZeroVector("x0 must be nonzero")
    m = minimum(lat)
    mp = lat.norm(x0)
    if mp >= 2 * m:
        raise BadParameter(f"N(x0) = {mp} must be below 2m = {2 * m}")
    msec = 4 * m - mp
    targets = coset_shell(lat, x0, msec)
    if not targets:
        raise EmptyClass(f"class of x0 has no vectors of norm {msec}")
    n = lat.dim
    gens = [[2 * (i == j) for j in range(n)] for i in range(n)]
    gens.append(list(x0))
    l0 = lat.sublattice(gens)
    sec = l0.induced.orthogonal_section(l0.coords_of(x0))
    rel = l0.restrict(sec)
    if rel.dim != n - 1:
        raise VerificationError(f"section has dimension {rel.dim}, not {n - 1}")
    for t in targets:
        rel.coords_of(t)  # the family must embed; NotInLattice is a real failure
    if minimum(rel.induced, upper_bound=msec) != msec:
        raise VerificationError("relative lattice minimum is not 4m - m'")
    back = PairSet(lat, [rel.embed(c) for c in shell(rel.induced, msec)])
    if back.reps != targets:
        raise VerificationError("minimal vectors differ from the class shell")
    return rel


def sqrt2_even_check(lat: GramLattice) -> GramLattice:
    """Half-rescale the even part of a minimal-vector-generated lattice.

    When the lattice is spanned by its minimal vectors, every inner
    product on the even part is even, so dividing the form by two keeps
    it integral; the result is certified even and returned.
    """
    if not lat.is_integral():
        raise NotIntegral("needs an integral lattice")
    reps = shell(lat, minimum(lat))
    h, _ = hnf(IntMatrix(list(reps)))
    rows = [r for r in h.rows if any(r)]
    if len(rows) < lat.dim:
        raise NotGenerated("minimal vectors do not span")
    index = rank_det(IntMatrix(rows))[1]
    if abs(index) != 1:
        raise NotGenerated(f"minimal vectors span a sublattice of index {abs(index)}")
    half = lat.even_part().induced.rescale(Fraction(1, 2))
    if half.integrality() != "even":
        raise VerificationError("half-rescaled even part is not even integral")
    return half


def check_scalar_products_after_projection(lat: GramLattice, v: Sequence[int]) -> dict:
    """Products within the top slice around a norm 2m - 2 projection axis.

    Vectors of the slice v.x = m - 1 project onto minimal vectors of the
    image lattice, and for any two of them with p(x) != +-p(y) the
    product satisfies (m-3)/4 <= x.y <= (3m-1)/4; on an integral lattice
    with m = 2 that means x.y in {0, 1}, with m = 4 x.y in {1, 2}.  The
    check applies only when every minimal vector of the image lifts to a
    minimal vector; the report records applicability, the products seen,
    and the slice size.
    """
    v = _vec(v)
    m = minimum(lat)
    if lat.norm(v) != 2 * m - 2:
        raise WrongNormX0(f"N(v) = {lat.norm(v)}, need 2m - 2 = {2 * m - 2}")
    proj = lat.project_along(v)
    s = shell(lat, m)
    images = set()
    for x in s:
        px = proj.coords(x)
        if any(px):
            images.add(px)
            images.add(_neg(px))
    covered = all(u in images for u in shell(proj.lattice, minimum(proj.lattice)))
    lo, hi = Fraction(m - 3, 4), Fraction(3 * m - 1, 4)
    report: dict = {"applicable": covered, "m": m, "bounds": (lo, hi)}
    if not covered:
        report["reason"] = "image minimum not attained on projected minimal vectors"
        return report
    want = m - 1
    slice_ = []
    for r in s:
        d = lat.inner(v, r)
        if d == want:
            slice_.append(r)
        elif -d == want:
            slice_.append(_neg(r))
    rows = [list(x) for x in slice_]
    g = lat.gram.num.to_lists()
    den = lat.gram.den
    prod = imatmul(imatmul(rows, g), [list(c) for c in zip(*rows)])
    values = set()
    checked = 0
    for i in range(len(slice_)):
        for j in range(i + 1, len(slice_)):
            if tuple(a + b for a, b in zip(slice_[i], slice_[j])) == v:
                continue  # p(x) = -p(y): the excluded antipodal partner
            d = Fraction(prod[i][j], den)
            checked += 1
            values.add(d)
            if not lo <= d <= hi:
                raise VerificationError(f"slice product {d} outside [{lo}, {hi}]")
    report.update(ok=True, pairs_checked=checked, slice_size=len(slice_),
                  products=sorted(values))
    return report
