"""Orbit invariants and explicit witnesses, rational and irrational.

Irrational coordinates are written over declared symbols that are taken to
be linearly independent over Q together with 1.
"""
from fractions import Fraction as F

from affine_orbits import SymBasis, SymPoint, invariant_of, minimal_space, witness


def show(label, x):
    inv = invariant_of(x)
    print(f"{label:24s} rank {inv.rank}  d {inv.d}  c {inv.c}  F_x {minimal_space(x)}")


show("2/5", (F(2, 5),))
show("(1/5, 0)", (F(1, 5), 0))

r2 = SymBasis(("r2",), (2 ** 0.5,))
x = SymPoint(r2, ((F(0), F(1)), (F(1), F(1))))  # (r2, 1 + r2)
y = SymPoint(r2, ((F(0), F(1)), (F(0), F(0))))  # (r2, 0)
show(str(x), x)
show(str(y), y)

g = witness(x, y)
print("\nwitness", g, "maps", x, "to", g(x))

a, b = SymPoint.rational([F(2, 7), F(3, 7), F(1, 7)]), SymPoint.rational([F(1, 7), 0, 0])
g = witness(a, b)
print("witness", g, "maps", a, "to", g(a))
print("2/5 vs 1/5:", witness((F(2, 5),), (F(1, 5),)))
