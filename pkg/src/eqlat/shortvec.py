"""Shortest vectors, norm shells and congruence-class shells, exactly.

The pipeline is LLL reduction (exact rational arithmetic on the Gram
matrix) followed by a depth-first enumeration of the quadratic form.  The
enumeration bookkeeping is entirely in Python integers: fraction-free
Cholesky data from Bareiss elimination gives the form as

    E * N(x) = sum_k g_k * (delta_{k+1} x_k + s_k)^2

with all quantities integral, so pruning needs only integer comparisons
and isqrt, and every reported norm is exact by construction.

Congruence classes mod 2L are enumerated directly by stepping coordinates
in twos; because -x lies in the class of x, the usual sign-halving trick
applies to classes as well, and everything downstream works with one
representative per +-pair.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    MixedNorms,
    NotPositiveDefinite,
    ZeroVector,
)
from .exact import IntMatrix, RatMatrix
from .lattice import GramLattice, Vec, dot

__all__ = [
    "set_threads",
    "get_threads",
    "lll_reduce",
    "is_lll_reduced",
    "minimum",
    "shell",
    "cached_shell",
    "shell_count",
    "vectors_upto",
    "coset_shell",
    "coset_minimum",
    "PairSet",
]

_THREADS = 1


def set_threads(n: int) -> None:
    """Worker processes for top-level enumeration splitting; 1 = serial."""
    global _THREADS
    if n < 1:
        raise ValueError("thread count must be >= 1")
    _THREADS = int(n)


def get_threads() -> int:
    return _THREADS


# ---------------------------------------------------------------------------
# LLL on the Gram matrix


def _round_half_up(q: Fraction) -> int:
    return math.floor(q + Fraction(1, 2))


def lll_reduce(
    lat: GramLattice, delta: Fraction = Fraction(99, 100)
) -> tuple[GramLattice, IntMatrix]:
    """LLL-reduce a lattice given only by its Gram matrix.

    Returns (reduced, U) with reduced.gram == U G U^T and det U = +-1.
    Exact rational arithmetic throughout; delta defaults to 99/100.
    """
    n = lat.dim
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    if n <= 1:
        return lat, IntMatrix(u)
    g = [[Fraction(v) for v in row] for row in lat.gram.num.rows]

    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for k in range(n):
        for j in range(k):
            mu[k][j] = (
                g[k][j] - sum(mu[k][i] * mu[j][i] * bstar[i] for i in range(j))
            ) / bstar[j]
        bstar[k] = g[k][k] - sum(mu[k][j] ** 2 * bstar[j] for j in range(k))

    def red(k: int, l: int) -> None:
        q = _round_half_up(mu[k][l])
        if q == 0:
            return
        u[k] = [a - q * b for a, b in zip(u[k], u[l])]
        # Gram update for b_k -> b_k - q b_l.
        gkl = g[k][l]
        g[k][k] += q * q * g[l][l] - 2 * q * gkl
        for i in range(n):
            if i != k:
                g[k][i] -= q * g[l][i]
                g[i][k] = g[k][i]
        for j in range(l):
            mu[k][j] -= q * mu[l][j]
        mu[k][l] -= q

    def swap(k: int) -> None:
        u[k - 1], u[k] = u[k], u[k - 1]
        g[k - 1], g[k] = g[k], g[k - 1]
        for row in g:
            row[k - 1], row[k] = row[k], row[k - 1]
        m = mu[k][k - 1]
        big = bstar[k] + m * m * bstar[k - 1]
        mu[k][k - 1] = m * bstar[k - 1] / big
        bstar[k] = bstar[k - 1] * bstar[k] / big
        bstar[k - 1] = big
        for j in range(k - 1):
            mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
        for i in range(k + 1, n):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    k = 1
    while k < n:
        red(k, k - 1)
        if bstar[k] < (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            swap(k)
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1

    num = IntMatrix([[int(v) for v in row] for row in g])
    return GramLattice(RatMatrix(num, lat.gram.den)), IntMatrix(u)


def is_lll_reduced(lat: GramLattice, delta: Fraction = Fraction(99, 100)) -> bool:
    """Check the size and Lovasz conditions from a fresh GSO (test helper)."""
    n = lat.dim
    if n <= 1:
        return True
    g = lat.gram.to_fractions()
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for k in range(n):
        for j in range(k):
            mu[k][j] = (
                g[k][j] - sum(mu[k][i] * mu[j][i] * bstar[i] for i in range(j))
            ) / bstar[j]
        bstar[k] = g[k][k] - sum(mu[k][j] ** 2 * bstar[j] for j in range(k))
    for k in range(n):
        for j in range(k):
            if abs(mu[k][j]) > Fraction(1, 2):
                return False
    for k in range(1, n):
        if bstar[k] < (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# Fraction-free enumeration data


class _Prep:
    __slots__ = ("lat", "red", "u", "uinv", "n", "den", "delta", "sub", "g", "escale")

    def __init__(self, lat: GramLattice):
        red, u = lll_reduce(lat)
        n = lat.dim
        a = [list(row) for row in red.gram.num.rows]
        delta = [1] * (n + 1)
        sub = []
        for k in range(n):
            piv = a[k][k]
            if piv <= 0:
                raise NotPositiveDefinite("enumeration needs a definite form")
            delta[k + 1] = piv
            sub.append([a[i][k] for i in range(k + 1, n)])
            prev = delta[k]
            for i in range(k + 1, n):
                aik = a[i][k]
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] = (piv * row_i[j] - aik * row_k[j]) // prev
        e = [delta[k] * delta[k + 1] for k in range(n)]
        escale = math.lcm(*e) if e else 1
        self.lat = lat
        self.red = red
        self.u = u
        self.uinv = RatMatrix(u).inverse().num
        self.n = n
        self.den = red.gram.den
        self.delta = delta
        self.sub = sub
        self.g = [escale // ek for ek in e]
        self.escale = escale


_PREP_CACHE: dict[GramLattice, _Prep] = {}


def _prep(lat: GramLattice) -> _Prep:
    p = _PREP_CACHE.get(lat)
    if p is None:
        p = _PREP_CACHE[lat] = _Prep(lat)
    return p


def _search_chunk(payload: dict) -> object:
    """Enumerate the subtrees under the given top-level coordinate values.

    Top-level function so process pools can pick it up by reference.
    mode: "le" and "shell" collect (scaled_norm, coords) leaves, "count"
    counts exact-norm leaves closed-form at the bottom level, "min" returns
    the best nonzero scaled norm found.
    """
    n = payload["n"]
    delta = payload["delta"]
    sub = payload["sub"]
    g = payload["g"]
    parity = payload["parity"]
    mode = payload["mode"]
    target = payload["target"]
    limit = payload["limit"]
    step = 2 if parity is not None else 1
    x = [0] * n
    out: list = []
    count = 0
    best = None

    def bounds(k: int, s: int, room: int, zero_above: bool) -> tuple[int, int]:
        kmax = math.isqrt(room // g[k])
        d = delta[k + 1]
        lo = -((kmax + s) // d)
        hi = (kmax - s) // d
        if zero_above and lo < 0:
            lo = 0
        if parity is not None and (lo - parity[k]) % 2:
            lo += 1
        return lo, hi

    def rec(k: int, acc: int, zero_above: bool) -> None:
        nonlocal count, best, limit
        row = sub[k]
        s = 0
        for j in range(k + 1, n):
            xj = x[j]
            if xj:
                s += row[j - k - 1] * xj
        room = limit - acc
        if room < 0:
            return
        d = delta[k + 1]
        gk = g[k]
        if k == 0:
            if mode == "count":
                rem = target - acc
                if rem < 0 or rem % gk:
                    return
                q, r = divmod(rem, gk)
                kk = math.isqrt(q)
                if kk * kk != q:
                    return
                lo, hi = bounds(0, s, room, zero_above)
                for kroot in {kk, -kk}:
                    xv, r2 = divmod(kroot - s, d)
                    if r2 == 0 and lo <= xv <= hi and (
                        parity is None or (xv - parity[0]) % 2 == 0
                    ):
                        if acc or s or xv:
                            count += 1
                return
            lo, hi = bounds(0, s, room, zero_above)
            for xv in range(lo, hi + 1, step):
                kv = d * xv + s
                a2 = acc + gk * kv * kv
                if a2 > limit or a2 == 0:
                    continue
                if mode == "min":
                    best = a2
                    limit = a2 - 1
                elif mode == "shell":
                    if a2 == target:
                        x[0] = xv
                        out.append(tuple(x))
                else:
                    x[0] = xv
                    out.append((a2, tuple(x)))
            return
        lo, hi = bounds(k, s, room, zero_above)
        for xv in range(lo, hi + 1, step):
            kv = d * xv + s
            a2 = acc + gk * kv * kv
            if a2 > limit:
                continue
            x[k] = xv
            rec(k - 1, a2, zero_above and xv == 0)
        x[k] = 0

    dtop = delta[n]
    gtop = g[n - 1]
    for xv in payload["tops"]:
        kv = dtop * xv
        a2 = gtop * kv * kv
        if a2 > limit:
            continue
        if n == 1:
            if a2 == 0:
                continue
            if mode == "count":
                if a2 == target:
                    count += 1
            elif mode == "min":
                best = a2
                limit = a2 - 1
            elif mode == "shell":
                if a2 == target:
                    out.append((xv,))
            else:
                out.append((a2, (xv,)))
            continue
        x[n - 1] = xv
        rec(n - 2, a2, xv == 0)
    if mode == "count":
        return count
    if mode == "min":
        return best
    return out


def _top_values(prep: _Prep, limit: int, parity) -> list[int]:
    n = prep.n
    if limit < 0:
        return []
    kmax = math.isqrt(limit // prep.g[n - 1])
    d = prep.delta[n]
    lo, hi = 0, kmax // d  # top level always has everything above it zero
    if parity is not None and (lo - parity[n - 1]) % 2:
        lo += 1
    step = 2 if parity is not None else 1
    return list(range(lo, hi + 1, step))


def _run(prep: _Prep, mode: str, limit: int, target: int | None, parity) -> object:
    if prep.n == 0:
        return 0 if mode == "count" else None if mode == "min" else []
    tops = _top_values(prep, limit, parity)
    if not tops:
        return 0 if mode == "count" else None if mode == "min" else []
    payload = {
        "n": prep.n,
        "delta": prep.delta,
        "sub": prep.sub,
        "g": prep.g,
        "parity": parity,
        "mode": mode,
        "target": target,
        "limit": limit,
    }
    threads = _THREADS
    if threads <= 1 or len(tops) < 2:
        payload["tops"] = tops
        return _search_chunk(payload)
    chunks = [tops[i::threads] for i in range(threads)]
    chunks = [c for c in chunks if c]
    jobs = []
    for c in chunks:
        job = dict(payload)
        job["tops"] = c
        jobs.append(job)
    with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
        results = list(pool.map(_search_chunk, jobs))
    if mode == "count":
        return sum(results)
    if mode == "min":
        found = [r for r in results if r is not None]
        return min(found) if found else None
    merged: list = []
    for r in results:
        merged.extend(r)
    return merged


# ---------------------------------------------------------------------------
# Coordinate plumbing


def _canonical(v: Vec) -> Vec:
    for c in v:
        if c > 0:
            return v
        if c < 0:
            return tuple(-w for w in v)
    return v


def _map_back(prep: _Prep, coords_red: Iterable[Vec]) -> list[Vec]:
    urows = prep.u.rows
    n = prep.n
    out = []
    for y in coords_red:
        v = tuple(
            sum(yi * urows[i][j] for i, yi in enumerate(y) if yi) for j in range(n)
        )
        out.append(_canonical(v))
    return out


def _parity_reduced(prep: _Prep, parity: Sequence[int]) -> tuple[int, ...]:
    # x = y U: x has class p mod 2 iff y has class p U^-1 mod 2.
    uinv = prep.uinv.rows
    n = prep.n
    return tuple(
        sum(parity[i] * uinv[i][j] for i in range(n)) % 2 for j in range(n)
    )


def _scaled_target(prep: _Prep, r) -> int | None:
    """target for E * (x num x) == E * r * den, or None if r is unreachable."""
    t = Fraction(r) * prep.den
    if t.denominator != 1:
        return None
    return prep.escale * int(t)


def _scaled_limit(prep: _Prep, r) -> int:
    t = Fraction(r) * prep.den
    return prep.escale * math.floor(t)


# ---------------------------------------------------------------------------
# Public interface

_MIN_CACHE: dict[GramLattice, Fraction] = {}
_SHELL_CACHE: dict[tuple, tuple] = {}


def minimum(lat: GramLattice, upper_bound=None) -> Fraction:
    """Exact minimum norm of the nonzero vectors.

    upper_bound, when given, must be a norm actually attained in the
    lattice; it seeds the pruning bound and never changes the result.
    """
    got = _MIN_CACHE.get(lat)
    if got is not None:
        return got
    if lat.dim == 0:
        raise DimensionMismatch("empty lattice has no minimum")
    prep = _prep(lat)
    seed = min(prep.red.gram.num[i, i] for i in range(prep.n))  # attained
    if upper_bound is not None:
        t = Fraction(upper_bound) * prep.den
        if t.denominator != 1:
            raise ValueError("upper_bound is not a norm of this lattice")
        seed = min(seed, int(t))
    limit = prep.escale * seed - 1
    best = _run(prep, "min", limit, None, None)
    scaled = seed * prep.escale if best is None else best
    result = Fraction(scaled // prep.escale, prep.den)
    _MIN_CACHE[lat] = result
    return result


def shell(lat: GramLattice, r) -> tuple[Vec, ...]:
    """All +-pairs of vectors of norm exactly r, one representative each.

    Representatives have positive leading coordinate and come sorted, so
    the result is canonical.
    """
    key = (lat, Fraction(r))
    got = _SHELL_CACHE.get(key)
    if got is not None:
        return got
    prep = _prep(lat)
    target = _scaled_target(prep, r)
    if target is None or target <= 0:
        result: tuple[Vec, ...] = ()
    else:
        found = _run(prep, "shell", target, target, None)
        result = tuple(sorted(_map_back(prep, found)))
    _SHELL_CACHE[key] = result
    return result


def cached_shell(lat: GramLattice, r) -> tuple[Vec, ...] | None:
    """The shell if a previous call already computed it, else None."""
    return _SHELL_CACHE.get((lat, Fraction(r)))


def shell_count(lat: GramLattice, r) -> int:
    """Number of +-pairs of norm exactly r, without storing vectors."""
    prep = _prep(lat)
    target = _scaled_target(prep, r)
    if target is None or target <= 0:
        return 0
    return _run(prep, "count", target, target, None)


def vectors_upto(lat: GramLattice, r) -> list[tuple[Fraction, Vec]]:
    """Sorted (norm, representative) for all +-pairs with 0 < norm <= r."""
    prep = _prep(lat)
    limit = _scaled_limit(prep, r)
    found = _run(prep, "le", limit, None, None)
    es = prep.escale
    vecs = _map_back(prep, [v for _, v in found])
    return sorted(
        (Fraction(a // es, prep.den), v)
        for (a, _), v in zip(found, vecs)
    )


def _check_parity(lat: GramLattice, parity: Sequence[int]) -> tuple[int, ...]:
    if len(parity) != lat.dim:
        raise DimensionMismatch("parity vector has wrong length")
    p = tuple(int(v) % 2 for v in parity)
    if not any(p):
        raise ZeroVector("class of 0 mod 2L is the lattice itself")
    return p


def coset_shell(lat: GramLattice, parity: Sequence[int], r) -> tuple[Vec, ...]:
    """Vectors congruent to parity mod 2L with norm exactly r, as +-pairs.

    parity is read mod 2 coordinatewise.  Since -x = x mod 2L, the class is
    a union of +-pairs and one representative per pair is returned.
    """
    p = _check_parity(lat, parity)
    key = (lat, p, Fraction(r))
    got = _SHELL_CACHE.get(key)
    if got is not None:
        return got
    prep = _prep(lat)
    target = _scaled_target(prep, r)
    if target is None or target <= 0:
        result: tuple[Vec, ...] = ()
    else:
        pr = _parity_reduced(prep, p)
        found = _run(prep, "shell", target, target, pr)
        result = tuple(sorted(_map_back(prep, found)))
    _SHELL_CACHE[key] = result
    return result


def coset_minimum(lat: GramLattice, parity: Sequence[int]) -> Fraction:
    """Least norm in the congruence class of parity mod 2L."""
    p = _check_parity(lat, parity)
    prep = _prep(lat)
    seed = lat.norm(p)  # the 0/1 lift itself lies in the class
    limit = _scaled_limit(prep, seed) - 1
    pr = _parity_reduced(prep, p)
    best = _run(prep, "min", limit, None, pr)
    if best is None:
        return seed
    return Fraction(best // prep.escale, prep.den)


class PairSet:
    """A finite set of +-pairs of lattice vectors of one common norm."""

    __slots__ = ("lattice", "reps", "norm")

    def __init__(self, lattice: GramLattice, vectors: Iterable[Sequence[int]]):
        seen = set()
        for v in vectors:
            v = _canonical(tuple(int(c) for c in v))
            if not any(v):
                raise ZeroVector("pair sets cannot contain 0")
            seen.add(v)
        reps = tuple(sorted(seen))
        norms = {lattice.norm(v) for v in reps}
        if len(norms) > 1:
            raise MixedNorms(f"norms {sorted(norms)}")
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "reps", reps)
        object.__setattr__(self, "norm", norms.pop() if norms else None)

    def __setattr__(self, name, value):
        raise AttributeError("PairSet is immutable")

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def __eq__(self, other):
        return (
            isinstance(other, PairSet)
            and self.lattice == other.lattice
            and self.reps == other.reps
        )

    def __hash__(self):
        return hash((self.lattice, self.reps))

    def __repr__(self):
        return f"PairSet({len(self.reps)} pairs of norm {self.norm})"

    def signed(self) -> list[Vec]:
        out = []
        for v in self.reps:
            out.append(v)
            out.append(tuple(-c for c in v))
        return out

    def contains(self, v: Sequence[int]) -> bool:
        return _canonical(tuple(int(c) for c in v)) in self.reps
