"""Congruence-class machinery: pair decomposition, families, relative lattices."""

from fractions import Fraction

import pytest

from eqlat.errors import (
    DegeneratePair,
    EmptyClass,
    MixedNorms,
    NotCongruent,
    NotEven,
    NotGenerated,
    NotOdd,
    WrongNormX0,
    ZeroVector,
)
from eqlat.lattice import GramLattice
from eqlat.mod2 import (
    check_congruent_pair,
    check_scalar_products_after_projection,
    check_scalar_bound,
    default_x0,
    split_congruent_pair,
    equiangular,
    equiangular_direct,
    equiangular_via_s0,
    mod2_class,
    relative_lattice,
    sqrt2_even_check,
)
from eqlat.shortvec import minimum, shell, vectors_upto

A2 = GramLattice([[2, 1], [1, 2]], name="A2")
Z2 = GramLattice([[1, 0], [0, 1]], name="Z2")

A4 = GramLattice(
    [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]], name="A4"
)
D4 = GramLattice(
    [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]], name="D4"
)
D5 = GramLattice(
    [
        [2, -1, 0, 0, 0],
        [-1, 2, -1, -1, 0],
        [0, -1, 2, 0, 0],
        [0, -1, 0, 2, -1],
        [0, 0, 0, -1, 2],
    ],
    name="D5",
)
E8 = GramLattice(
    [
        [2, 0, -1, 0, 0, 0, 0, 0],
        [0, 2, 0, -1, 0, 0, 0, 0],
        [-1, 0, 2, -1, 0, 0, 0, 0],
        [0, -1, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, 0],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, 0, 0, -1, 2],
    ],
    name="E8",
)


def test_split_congruent_pair_examples():
    assert split_congruent_pair((1, 1), (3, 1)) == ((1, 0), (2, 1))
    assert split_congruent_pair((1, 0), (1, 2)) == ((0, 1), (1, 1))


def test_split_congruent_pair_rejects():
    with pytest.raises(DegeneratePair):
        split_congruent_pair((1, 0), (-1, 0))
    with pytest.raises(DegeneratePair):
        split_congruent_pair((1, 2), (1, 2))
    with pytest.raises(NotCongruent):
        split_congruent_pair((1, 0), (0, 1))
    with pytest.raises(ZeroVector):
        split_congruent_pair((0, 0), (2, 0))


def test_congruent_pair_z2():
    r = check_congruent_pair(Z2, (1, 0), (1, 2))
    assert r["sum_ok"] and r["mod4_ok"]
    assert not r["equality_case"]
    assert (r["e"], r["f"]) == ((0, 1), (1, 1))


def test_congruent_pair_exhaustive_a2():
    # every congruent pair with norms <= 10, by brute force over the ball
    signed = []
    for _, v in vectors_upto(A2, 10):
        signed.append(v)
        signed.append(tuple(-c for c in v))
    equalities = 0
    for x in signed:
        for y in signed:
            if y == x or y == tuple(-c for c in x):
                continue
            if any((a - b) % 2 for a, b in zip(x, y)):
                continue
            r = check_congruent_pair(A2, x, y)
            assert A2.norm(x) + A2.norm(y) >= 8
            if r["equality_case"]:
                equalities += 1
                assert r["x_dot_y"] == 0
    assert equalities > 0


def test_congruent_pair_e8_equality():
    x0 = (1, 0, 0, 0, 0, 0, 0, 0)
    fam = equiangular_direct(E8, x0)
    y = fam.pairs.reps[0]
    r = check_congruent_pair(E8, x0, y)
    assert r["equality_case"]
    assert r["x_dot_y"] == 0
    assert E8.norm(r["e"]) == E8.norm(r["f"]) == 2


def test_scalar_bound_e8():
    x0 = default_x0(E8)
    reps = equiangular_direct(E8, x0).pairs.reps
    for yp in reps[1:]:
        assert check_scalar_bound(E8, x0, reps[0], yp)
    with pytest.raises(DegeneratePair):
        check_scalar_bound(E8, x0, reps[0], reps[0])
    with pytest.raises(MixedNorms):
        check_scalar_bound(E8, x0, reps[0], x0)
    bad = tuple(a + b for a, b in zip(reps[1], (1, 0, 0, 0, 0, 0, 0, 0)))
    with pytest.raises(NotCongruent):
        check_scalar_bound(E8, x0, reps[0], bad)


def test_mod2_class_z2():
    c = mod2_class(Z2, (1, 0), with_second=True)
    assert c.first == 1
    assert c.minimizers.reps == ((1, 0),)
    # norms on the class are 1 mod 4, so the next one is 5
    assert c.second == 5
    assert c.second_shell.reps == ((1, -2), (1, 2))


def test_mod2_class_a2():
    c = mod2_class(A2, (1, 0), with_second=True)
    assert c.first == 2
    assert len(c.minimizers) == 1
    assert c.second == 6
    assert c.second_shell.reps == ((1, -2),)
    for v in c.minimizers.reps + c.second_shell.reps:
        assert all((a - b) % 2 == 0 for a, b in zip(v, (1, 0)))


def test_default_x0_is_least():
    assert default_x0(A2) == shell(A2, 2)[0]
    assert default_x0(E8) == shell(E8, 2)[0]


def test_equiangular_a_series():
    # one pair per extra dimension, all pairwise products +-2
    fam = equiangular_direct(A4)
    assert len(fam) == 3
    assert fam.rank == 3
    assert fam.alpha == Fraction(1, 3)
    assert fam.pairs.norm == 6
    assert not fam.degenerate
    assert fam.reason is None


def test_equiangular_d_series():
    for lat, k in ((D4, 4), (D5, 6)):
        fam = equiangular_direct(lat)
        assert len(fam) == k
        via = equiangular_via_s0(lat, fam.x0, cross_validate=True)
        assert via.pairs == fam.pairs
        assert via.rank == fam.rank


def test_equiangular_e8():
    fam = equiangular_direct(E8)
    assert len(fam) == 28
    assert fam.rank == 7
    assert fam.alpha == Fraction(1, 3)
    via = equiangular_via_s0(E8, fam.x0)
    assert via.pairs == fam.pairs


def test_equiangular_wrapper_dispatch():
    shell(A4, 2)  # warm the minimal vectors so the slice route is taken
    fam = equiangular(A4)
    assert fam.pairs == equiangular_direct(A4).pairs


def test_equiangular_odd_minimum_nonempty():
    # odd minimum does not always empty the class: a norm-8 pair survives here
    q = GramLattice([[3, 1], [1, 3]])
    fam = equiangular_direct(q, (-1, 1))
    assert fam.pairs.reps == ((1, 1),)
    assert fam.degenerate
    assert "odd minimum" in fam.reason


def test_equiangular_odd_minimum_empty():
    q = GramLattice([[3, 1], [1, 4]])
    fam = equiangular_direct(q, (0, 1))
    assert len(fam) == 0
    assert fam.rank == 0
    assert fam.degenerate
    assert fam.reason is not None


def test_equiangular_gates():
    with pytest.raises(NotEven):
        equiangular_direct(GramLattice([[2, 1], [1, 3]]))
    with pytest.raises(WrongNormX0):
        equiangular_direct(A2, (1, 1))
    with pytest.raises(ZeroVector):
        equiangular_direct(A2, (0, 0))


def test_relative_lattice_e8():
    rel = relative_lattice(E8, default_x0(E8))
    assert rel.dim == 7
    assert minimum(rel.induced) == 6
    assert len(shell(rel.induced, 6)) == 28


def test_relative_lattice_a4():
    rel = relative_lattice(A4, default_x0(A4))
    assert rel.dim == 3
    assert minimum(rel.induced) == 6
    assert len(shell(rel.induced, 6)) == 3


def test_relative_lattice_empty_class():
    with pytest.raises(EmptyClass):
        relative_lattice(GramLattice([[3, 1], [1, 4]]), (0, 1))


def test_sqrt2_even_check_unit():
    out = sqrt2_even_check(GramLattice([[1]]))
    assert out.gram.num.rows == ((2,),)


def test_sqrt2_even_check_from_e8_section():
    # the half-rescaled relative lattice has odd minimum 3 and passes
    rel = relative_lattice(E8, default_x0(E8))
    half = rel.induced.rescale(Fraction(1, 2))
    assert minimum(half) == 3
    out = sqrt2_even_check(half)
    assert out.integrality() == "even"
    assert out.det == 2


def test_sqrt2_even_check_gates():
    with pytest.raises(NotGenerated):
        sqrt2_even_check(GramLattice([[1, 0], [0, 4]]))
    with pytest.raises(NotOdd):
        sqrt2_even_check(A2)


def test_projected_products_d5():
    rep = check_scalar_products_after_projection(D5, default_x0(D5))
    assert rep["applicable"] and rep["ok"]
    assert rep["products"] == [0, 1]
    assert rep["slice_size"] == 12


def test_projected_products_e8():
    rep = check_scalar_products_after_projection(E8, default_x0(E8))
    assert rep["applicable"] and rep["ok"]
    assert rep["products"] == [0, 1]
    assert rep["pairs_checked"] == 1512


def test_projected_products_not_applicable():
    # the short projection comes from a norm-6 vector, not a minimal one
    q = GramLattice([[2, 0], [0, 6]])
    rep = check_scalar_products_after_projection(q, (1, 0))
    assert not rep["applicable"]
    assert "reason" in rep
