"""Tests for Gram-matrix lattices and their derived objects."""

import random
from fractions import Fraction as QQ
from itertools import product

import pytest

from eqlat.errors import (
    NotInLattice,
    NotOdd,
    NotPositiveDefinite,
    NotPrimitive,
    ZeroVector,
)
from eqlat.exact import IntMatrix
from eqlat.lattice import GramLattice

A2 = GramLattice([[2, 1], [1, 2]], name="A2")
Z2 = GramLattice([[1, 0], [0, 1]], name="Z2")
Z3 = GramLattice(IntMatrix.identity(3), name="Z3")


def rand_pd_lattice(rng, n, spread=4):
    b = [[rng.randint(-spread, spread) for _ in range(n)] for _ in range(n)]
    g = [[sum(a * c for a, c in zip(r1, r2)) + (1 + spread) * (i == j)
          for j, r2 in enumerate(b)] for i, r1 in enumerate(b)]
    return GramLattice(g)


def test_basic_invariants():
    assert A2.dim == 2
    assert A2.det == 3
    assert A2.norm((1, 0)) == 2
    assert A2.inner((1, 0), (0, 1)) == 1
    assert A2.norm((1, -1)) == 2
    assert A2.norm((1, 1)) == 6
    assert A2.integrality() == "even"
    assert Z2.integrality() == "odd"


def test_rejects_indefinite_gram():
    with pytest.raises(NotPositiveDefinite):
        GramLattice([[1, 2], [2, 1]])


def test_equality_ignores_name():
    assert A2 == GramLattice([[2, 1], [1, 2]], name="other")
    assert hash(A2) == hash(GramLattice([[2, 1], [1, 2]]))
    assert A2 != Z2


def test_dual():
    d = A2.dual()
    assert d.det == QQ(1, 3)
    assert d.integrality() == "non-integral"
    assert d.gram.to_fractions() == [[QQ(2, 3), QQ(-1, 3)], [QQ(-1, 3), QQ(2, 3)]]
    assert d.dual() == A2


def test_rescale():
    doubled = A2.rescale(2)
    assert doubled.gram.to_fractions()[0][0] == 4
    assert doubled.det == 4 * A2.det
    assert doubled.rescale(QQ(1, 2)) == A2


def test_sublattice_index_two():
    sub = Z2.sublattice([(2, 0), (0, 2), (1, 1)])
    assert sub.dim == 2
    assert sub.basis_rows.to_lists() == [[1, 1], [0, 2]]
    assert sub.induced.det == 4
    assert sub.contains((1, 1))
    assert sub.contains((2, 0))
    assert not sub.contains((1, 0))


def test_coords_roundtrip():
    sub = Z2.sublattice([(2, 0), (0, 2), (1, 1)])
    for x in [(1, 1), (2, 0), (3, 1), (-1, 3)]:
        c = sub.coords_of(x)
        assert sub.embed(c) == x
    with pytest.raises(NotInLattice):
        sub.coords_of((1, 0))


def test_orthogonal_section_gives_hexagonal():
    sec = Z3.orthogonal_section((1, 1, 1))
    assert sec.dim == 2
    assert sec.induced == A2


def test_even_part_of_z2():
    sub = Z2.even_part()
    assert sub.induced.integrality() == "even"
    assert sub.induced.det == 4
    # All vectors in the even part have even norm; index is exactly 2.
    inside = [v for v in product(range(-2, 3), repeat=2) if sub.contains(v)]
    assert all(Z2.norm(v) % 2 == 0 for v in inside)
    assert len(inside) == 13  # half of the 25 box points, plus 0 rounding


def test_even_part_rejects_even_lattice():
    with pytest.raises(NotOdd):
        A2.even_part()


def test_projection_hexagonal():
    proj = A2.project_along((1, 0))
    assert proj.lattice.dim == 1
    assert proj.lattice.gram.to_fractions() == [[QQ(3, 2)]]
    assert proj.lattice.det * A2.norm((1, 0)) == A2.det
    assert proj.coords((0, 1)) == (1,)
    assert proj.coords((1, 0)) == (0,)


def test_projection_rejects_bad_vectors():
    with pytest.raises(ZeroVector):
        A2.project_along((0, 0))
    with pytest.raises(NotPrimitive):
        A2.project_along((2, 0))


def test_projection_norm_identity():
    # N(p(x)) == N(x) - (x.v)^2 / N(v) for every x, exactly.
    rng = random.Random(71)
    for _ in range(40):
        n = rng.randint(2, 5)
        lat = rand_pd_lattice(rng, n)
        v = [0] * n
        v[rng.randrange(n)] = 1  # unit coordinate vectors are primitive
        v[rng.randrange(n)] = 1
        import math

        if math.gcd(*v) != 1:
            continue
        proj = lat.project_along(v)
        assert proj.lattice.det * lat.norm(v) == lat.det
        for _ in range(10):
            x = [rng.randint(-4, 4) for _ in range(n)]
            expect = lat.norm(x) - lat.inner(x, v) ** 2 / lat.norm(v)
            assert proj.lattice.norm(proj.coords(x)) == expect


def test_section_inside_projection():
    # Vectors already orthogonal to v project isometrically.
    rng = random.Random(73)
    for _ in range(25):
        n = rng.randint(2, 4)
        lat = rand_pd_lattice(rng, n)
        v = tuple(int(i == 0) for i in range(n))
        sec = lat.orthogonal_section(v)
        proj = lat.project_along(v)
        for row in sec.basis_rows.rows:
            assert proj.lattice.norm(proj.coords(row)) == lat.norm(row)


def test_restrict_composition():
    sub = Z2.sublattice([(2, 0), (0, 2), (1, 1)])
    inner = sub.induced.sublattice([(2, 0), (0, 2)])
    flat = sub.restrict(inner)
    assert flat.ambient is Z2
    assert flat.induced.det == inner.induced.det
    for c in [(1, 0), (0, 1), (1, 1)]:
        assert flat.embed(c) == sub.embed(inner.embed(c))
