"""Cross-checking the classifier against brute force.

The orbit search only ever under-approximates, so it can confirm an
equivalence but never refute one.
"""
import time
from fractions import Fraction as F

from affine_orbits import invariant_of, orbit_equiv
from affine_orbits.oracle import SearchBudget, bfs_orbit, c_by_definition, n1_classify
from affine_orbits.spaces import c_of, space_from_equations

t = time.perf_counter()
window = bfs_orbit((F(1, 5), 0), SearchBudget(max_word_length=8, coordinate_bound=3))
print(f"orbit window of (1/5, 0): {len(window)} points in {time.perf_counter() - t:.2f}s, complete={window.complete}")
for target in [(F(2, 5), 0), (F(4, 5), F(3, 5)), (F(1, 3), 0)]:
    print(f"  ({', '.join(map(str, target))}): found={target in window}  classifier={orbit_equiv((F(1, 5), 0), target)}")

print("\nline closed form vs classifier:")
for p in range(7):
    x = F(p, 7)
    print(f"  {str(x):4s} closed form (d, c) = {n1_classify(x)}  classifier c = {invariant_of((x,)).c}")

print("\nc by literal search vs lattice method, hyperplanes y2 = p/11:")
for p in range(1, 11):
    f = space_from_equations([((0, 1), F(p, 11))])
    print(f"  p={p:2d}: {c_by_definition(f, 11)} {c_of(f)}")
