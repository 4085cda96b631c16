"""Exact classification of points of R^n under the affine group GL(n,Z) ⋉ Z^n.

The complete invariant of a point ``x`` is the pair ``(G_x, c)`` where
``G_x = Z + x_1 Z + ... + x_n Z`` and ``c`` is an integer read off the
smallest rational affine space containing ``x``.  Two points lie in the same
orbit iff their invariants agree, and :func:`witness` builds the map.
"""
from .farey import (
    AffineWitness,
    apply,
    compose,
    controlled_full_simplex,
    den,
    from_homogeneous,
    homogeneous,
    homogeneous_denominator_simplex,
    invert,
    is_regular,
    regular_simplex_in_space,
    simplex_transport,
)
from .lattice import LatticeBasis, complete_to_basis, hnf, lattice_canon
from .orbits import (
    BasisMismatch,
    GroupInvariant,
    OrbitInvariant,
    SymBasis,
    SymPoint,
    count_orbits,
    euler_phi,
    group_of,
    invariant_of,
    minimal_space,
    orbit_equiv,
    rank_of,
    rational_denominator,
    witness,
)
from .spaces import (
    RatAffineSpace,
    SpaceInvariants,
    c_of,
    canonical_space,
    classify_space,
    d_of,
    space_equiv,
    space_from_equations,
    space_from_points,
)

__version__ = "0.1.0"
