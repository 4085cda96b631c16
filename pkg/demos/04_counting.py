"""How many orbits share a given group, with one representative each."""
from fractions import Fraction

from affine_orbits import SymBasis
from affine_orbits.lattice import lattice_canon
from affine_orbits.orbits import GroupInvariant, count_orbits, euler_phi, invariant_of

for d in (1, 2, 3, 4, 5, 6, 7, 12, 30):
    g = GroupInvariant(SymBasis(), lattice_canon([[Fraction(1, d)]], 1))
    k, reps = count_orbits(g, 1)
    cs = [invariant_of(r).c for r in reps]
    print(f"d={d:2d}  phi={euler_phi(d):2d}  orbits={k}  c values {cs}  reps {[str(r) for r in reps]}")

# Rank 2 in the plane: group Z/5 + Z*a.
basis = SymBasis(("a",))
g = GroupInvariant(basis, lattice_canon([[Fraction(1, 5), 0], [0, 1]], 2))
k, reps = count_orbits(g, 2)
print("\nZ/5 + Za in R^2:", k, "orbits:", ", ".join(str(r) for r in reps))
