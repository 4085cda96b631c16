"""Integer lattices: Hermite normal form, canonical bases, completion, cosets.

Run: python3 demos/01_lattices.py
"""
from fractions import Fraction

from affine_orbits.lattice import (
    complete_to_basis,
    det,
    hnf,
    integer_kernel,
    is_primitive,
    lattice_canon,
    min_positive_last_in_coset,
)

# A generating set with a redundant vector collapses to one row.
basis, u = hnf([[2, 4], [3, 6]])
print("HNF of {(2,4),(3,6)}:", basis)
print("transform:", u)

# Lattices with rational generators get a canonical basis, so equality is row equality.
a = lattice_canon([[Fraction(1, 2), 0], [0, 1], [Fraction(1, 3), 1]])
b = lattice_canon([[Fraction(1, 6), 0], [0, 1]])
print("Z(1/2,0)+Z(0,1)+Z(1/3,1) == Z(1/6,0)+Z(0,1):", a == b)

# Primitive vectors extend to a unimodular basis.
print("(2,3) primitive:", is_primitive([2, 3]), " (2,4) primitive:", is_primitive([2, 4]))
full = complete_to_basis([[2, 3]])
print("completion of (2,3):", full, "det", det(full))

# Integer kernel of a relation matrix.
print("kernel of [1 2 3]:", integer_kernel([[1, 2, 3]]))

# Least positive last coordinate in a coset w0 + L (or -w0 + L).
c, vec = min_positive_last_in_coset([0, 0, 1], [[1, 0, 5], [0, 1, 0]])
print("least positive last coordinate of ±(0,0,1) + L:", c, "attained at", vec)
