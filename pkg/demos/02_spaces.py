"""Rational affine spaces and their triple (dimension, d, c).

Two spaces are carried onto each other by an integral affine map exactly
when their triples agree; this script checks that on a few hyperplanes and
shows the canonical representative of each class.
"""
from fractions import Fraction as F

from affine_orbits.spaces import (
    canonical_space,
    classify_space,
    space_equiv,
    space_from_equations,
    space_from_points,
)

for p in range(1, 5):
    f = space_from_equations([((0, 1), F(p, 5))])
    print(f"{str(f):14s} triple {tuple(classify_space(f))}")

f = space_from_equations([((0, 1), F(1, 5))])
g = space_from_equations([((1, 1), F(4, 5))])
gamma = space_equiv(f, g)
print("\n{y2 = 1/5} -> {y1 + y2 = 4/5} via", gamma)
print("image check:", f.image(gamma) == g)
print("{y2 = 1/5} vs {y2 = 2/5}:", space_equiv(f, space_from_equations([((0, 1), F(2, 5))])))

line = space_from_points([(F(1, 2), F(1, 2), 0), (F(1, 2), F(1, 2), 1)])
print("\nline through (1/2,1/2,0) and (1/2,1/2,1):", line, tuple(classify_space(line)))

for triple in [(1, 5, 2), (0, 7, 3), (2, 12, 5)]:
    space, p = canonical_space(triple, 3 if triple[0] == 2 else 2 if triple[0] == 1 else 1)
    print(f"canonical space for {triple}: {space}  (p = {p})")
