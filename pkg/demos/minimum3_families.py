#!/usr/bin/env python3
"""Minimum-3 lattices carry equiangular lines at alpha = 1/3: the minimal
vectors themselves pairwise meet at one angle.  The projected D_{n+1} family
realizes s = 2(n-1) in every dimension; the classification scan shows where
larger counts hide; halving the even part certifies the construction."""

from eqlat.constructions import (
    dn_projection_gram,
    integral_dual,
    min3_classification_scan,
    reconstruct_odd,
    root_lattice,
)
from eqlat.lines import certify, line_family
from eqlat.mod2 import sqrt2_even_check
from eqlat.shortvec import minimum, shell

print("the projected family P_n = p(D_{n+1}), minimum 3")
print(f"{'n':>3} {'det':>6} {'s':>3}  {'2(n-1)':>6}")
for n in range(3, 13):
    lat = dn_projection_gram(n).lattice
    s = len(shell(lat, 3))
    print(f"{n:>3} {str(lat.det):>6} {s:>3}  {2 * (n - 1):>6}")

print()
print("half-rescaled even parts (all even integral, determinant 8)")
for n in (3, 7, 12):
    half = sqrt2_even_check(dn_projection_gram(n).lattice)
    print(f"  n = {n:>2}: {half.integrality()}, minimum {minimum(half)}, "
          f"det {half.det}")

print()
print("classification scan at n = 7 (classes mod 2L with no short member)")
for row in min3_classification_scan(7)["rows"]:
    tag = f"{row['label']} ({row['case']})"
    print(f"  {tag:<12} s = {row['s']:>2}, rank {row['rank']}, v = {row['v']}")

print()
print("the deep E7 class rebuilt as a lattice")
e7 = root_lattice("E", 7).lattice
row = next(r for r in min3_classification_scan(7)["rows"] if r["label"] == "E7")
rebuilt = reconstruct_odd(e7, row["v"])
dual = integral_dual(root_lattice("E", 7))
for name, lat in (("reconstructed", rebuilt), ("rescaled dual", dual)):
    s = len(shell(lat, minimum(lat)))
    print(f"  {name:<14} det {lat.det}, minimum {minimum(lat)}, s = {s}")

print()
print("certifying the largest minimum-3 family above (28 lines in rank 7)")
fam = line_family(rebuilt, shell(rebuilt, 3))
cert = certify(fam)
print(f"  t = {fam.t}, rank {fam.rank}, alpha = {fam.alpha}, "
      f"all checks pass: {cert['ok']}")
