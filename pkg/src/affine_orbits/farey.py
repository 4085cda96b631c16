"""Denominators, homogeneous correspondents and regular simplexes.

A rational point is a tuple of :class:`~fractions.Fraction`.  A simplex is a
sequence of such points (its vertices).  Elements of the affine group
GL(n,Z) ⋉ Z^n are :class:`AffineWitness` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import TYPE_CHECKING, Optional, Sequence

from .lattice import (
    complete_to_basis,
    det,
    gcd_combination,
    hnf,
    inverse_unimodular,
    is_primitive_system,
    solve_integer_linear,
)

if TYPE_CHECKING:
    from .spaces import RatAffineSpace

__all__ = [
    "AffineWitness",
    "NotPrimitive",
    "NonPositiveLast",
    "NotRegular",
    "PointNotInSpace",
    "rat_point",
    "den",
    "homogeneous",
    "from_homogeneous",
    "is_regular",
    "apply",
    "compose",
    "invert",
    "simplex_transport",
    "regular_simplex_in_space",
    "homogeneous_denominator_simplex",
    "controlled_full_simplex",
]

RatPoint = tuple  # tuple[Fraction, ...]


class NotPrimitive(ValueError):
    pass


class NonPositiveLast(ValueError):
    pass


class NotRegular(ValueError):
    pass


class PointNotInSpace(ValueError):
    pass


def rat_point(coords) -> RatPoint:
    return tuple(Fraction(c) for c in coords)


def den(p: Sequence) -> int:
    """Least common denominator of the coordinates of a rational point."""
    return lcm(1, *(Fraction(c).denominator for c in p))


def homogeneous(p: Sequence) -> tuple[int, ...]:
    """Homogeneous correspondent ``(den(p) * p, den(p))``."""
    d = den(p)
    return tuple(int(Fraction(c) * d) for c in p) + (d,)


def from_homogeneous(h: Sequence[int]) -> RatPoint:
    """The rational point whose homogeneous correspondent is ``h``."""
    h = [int(x) for x in h]
    if h[-1] <= 0:
        raise NonPositiveLast(f"last entry of {h} must be positive")
    if gcd(*h) != 1:
        raise NotPrimitive(f"{h} is not primitive")
    return tuple(Fraction(x, h[-1]) for x in h[:-1])


def is_regular(vertices: Sequence[Sequence]) -> bool:
    """Farey regularity: homogeneous correspondents extend to a basis of Z^{n+1}."""
    rows = [list(homogeneous(v)) for v in vertices]
    if len(rows) == len(rows[0]):
        return abs(det(rows)) == 1
    return is_primitive_system(rows)


@dataclass(frozen=True)
class AffineWitness:
    """The map ``z -> U z + t`` with ``U`` integer, ``det(U) = ±1``, ``t`` integer."""

    U: tuple[tuple[int, ...], ...]
    t: tuple[int, ...]

    def __post_init__(self):
        u = tuple(tuple(int(x) for x in row) for row in self.U)
        t = tuple(int(x) for x in self.t)
        n = len(t)
        if len(u) != n or any(len(row) != n for row in u):
            raise ValueError("U must be n x n and t of length n")
        if n and abs(det(u)) != 1:
            raise ValueError("U is not unimodular")
        object.__setattr__(self, "U", u)
        object.__setattr__(self, "t", t)

    @property
    def n(self) -> int:
        return len(self.t)

    @classmethod
    def identity(cls, n: int) -> "AffineWitness":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (0,) * n)

    @classmethod
    def from_block(cls, m: Sequence[Sequence[int]]) -> "AffineWitness":
        """Read ``(U, t)`` off an ``(n+1) x (n+1)`` matrix ``[[U, t], [0, 1]]``."""
        n = len(m) - 1
        if list(m[n]) != [0] * n + [1]:
            raise ValueError("matrix is not of affine block form")
        return cls(tuple(tuple(row[:n]) for row in m[:n]), tuple(row[n] for row in m[:n]))

    def block(self) -> list[list[int]]:
        return [list(row) + [b] for row, b in zip(self.U, self.t)] + [[0] * self.n + [1]]

    def __call__(self, p):
        return apply(self, p)

    def __matmul__(self, other: "AffineWitness") -> "AffineWitness":
        return compose(self, other)

    def to_json(self) -> dict:
        return {"U": [[str(x) for x in row] for row in self.U], "t": [str(x) for x in self.t]}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineWitness":
        return cls(tuple(tuple(int(x) for x in row) for row in obj["U"]), tuple(int(x) for x in obj["t"]))


def apply(g: AffineWitness, p):
    """Image of a rational point, a :class:`SymPoint`, or anything with ``_apply_affine``."""
    hook = getattr(p, "_apply_affine", None)
    if hook is not None:
        return hook(g)
    p = rat_point(p)
    if len(p) != g.n:
        raise ValueError(f"dimension mismatch: witness acts on R^{g.n}, point in R^{len(p)}")
    return tuple(sum((u * x for u, x in zip(row, p)), Fraction(0)) + b for row, b in zip(g.U, g.t))


def compose(g: AffineWitness, h: AffineWitness) -> AffineWitness:
    """``g ∘ h``: first ``h``, then ``g``."""
    if g.n != h.n:
        raise ValueError("dimension mismatch")
    n = g.n
    u = tuple(tuple(sum(g.U[i][k] * h.U[k][j] for k in range(n)) for j in range(n)) for i in range(n))
    t = tuple(sum(g.U[i][k] * h.t[k] for k in range(n)) + g.t[i] for i in range(n))
    return AffineWitness(u, t)


def invert(g: AffineWitness) -> AffineWitness:
    if g.n == 0:
        return g
    uinv = inverse_unimodular(g.U)
    t = tuple(-sum(row[k] * g.t[k] for k in range(g.n)) for row in uinv)
    return AffineWitness(tuple(map(tuple, uinv)), t)


def simplex_transport(s: Sequence[Sequence], t: Sequence[Sequence]) -> Optional[AffineWitness]:
    """The unique affine map sending vertex ``i`` of ``s`` to vertex ``i`` of ``t``.

    Both must be regular full-dimensional simplexes.  Returns ``None`` when
    the vertexwise denominators differ, in which case no such map exists.
    """
    s = [rat_point(v) for v in s]
    t = [rat_point(v) for v in t]
    n = len(s[0])
    if len(s) != n + 1 or len(t) != n + 1 or any(len(v) != n for v in s + t):
        raise ValueError("both simplexes must have n+1 vertices in R^n")
    if not is_regular(s) or not is_regular(t):
        raise NotRegular("simplex_transport needs regular n-simplexes")
    if [den(v) for v in s] != [den(v) for v in t]:
        return None
    sv = [homogeneous(v) for v in s]
    tw = [homogeneous(v) for v in t]
    # M sv_i = tw_i for all i  <=>  SV m_r = (tw_0[r], ..., tw_n[r]) for each row m_r of M
    a = [list(v) for v in sv]
    m = []
    for r in range(n + 1):
        row = solve_integer_linear(a, [tw[i][r] for i in range(n + 1)])
        assert row is not None, "regular simplexes always give an integer transport"
        m.append(row)
    return AffineWitness.from_block(m)


def _lift_positive(b: Sequence[int], base: Sequence[int], unit: int) -> list[int]:
    # b - m*base with last coordinate in (0, unit]; base has last coordinate ``unit``
    m = -((-b[-1]) // unit) - 1  # ceil(last/unit) - 1
    return [x - m * y for x, y in zip(b, base)]


def regular_simplex_in_space(space: "RatAffineSpace", v0: Sequence) -> list[RatPoint]:
    """A regular ``dim(F)``-simplex inside ``space`` whose first vertex is ``v0``."""
    v0 = rat_point(v0)
    if not space.contains(v0):
        raise PointNotInSpace(f"{v0} is not in the space")
    h0 = list(homogeneous(v0))
    basis = space.homogenization_lattice.integer_rows()
    # coordinates of h0 in the lattice basis; primitive because L_F is saturated
    coords = solve_integer_linear([[row[j] for row in basis] for j in range(len(h0))], h0)
    assert coords is not None
    full = complete_to_basis([coords])
    vecs = [[sum(c * row[j] for c, row in zip(cs, basis)) for j in range(len(h0))] for cs in full]
    assert vecs[0] == h0
    # make the last coordinate positive by adding multiples of h0
    verts = [v0]
    for b in vecs[1:]:
        if b[-1] <= 0:
            b = _lift_positive(b, h0, h0[-1])
        verts.append(from_homogeneous(b))
    return verts


def _min_den_vector(space: "RatAffineSpace") -> list[int]:
    basis = space.homogenization_lattice.integer_rows()
    g, coeffs = gcd_combination([row[-1] for row in basis])
    return [sum(c * row[j] for c, row in zip(coeffs, basis)) for j in range(len(basis[0]))]


def homogeneous_denominator_simplex(space: "RatAffineSpace") -> list[RatPoint]:
    """A regular ``dim(F)``-simplex in ``space`` with every vertex of denominator ``d_F``."""
    h0 = _min_den_vector(space)
    d = h0[-1]
    v0 = from_homogeneous(h0)
    verts = regular_simplex_in_space(space, v0)
    out = [v0]
    for w in verts[1:]:
        hw = homogeneous(w)
        if hw[-1] > d:
            hw = _lift_positive(hw, h0, d)
        out.append(from_homogeneous(hw))
    return out


def controlled_full_simplex(space: "RatAffineSpace") -> list[RatPoint]:
    """A regular n-simplex whose first ``e+1`` vertices span ``space`` with
    denominator ``d_F`` and whose remaining vertices have denominator ``c_F``.
    """
    inner = homogeneous_denominator_simplex(space)
    n, e = space.n, space.dim
    if e == n:
        return inner
    lrows = [list(homogeneous(v)) for v in inner]
    extra = complete_to_basis(lrows)[e + 1:]
    c = space.c
    d = space.d
    if e == n - 1:
        # the coset ±w0 + L_F holds every completion; take the least positive last coordinate
        first = space.c_witness
    else:
        # c_F = 1 here.  Rewrite the quotient basis so the last coordinates read
        # (a, 0, ..., 0), then pick the primitive combination (a^{-1} mod d, 1, 0, ...).
        k = len(extra)
        a_vals = [row[-1] for row in extra]
        _, tq = hnf([[v] for v in a_vals])
        quot = [[sum(tq[i][j] * extra[j][col] for j in range(k)) for col in range(n + 1)] for i in range(k)]
        a = quot[0][-1]
        x1 = pow(a, -1, d) if d > 1 else 1
        u = [x1 * p + q for p, q in zip(quot[0], quot[1])]
        # now u[-1] ≡ 1 (mod d); shift by a lattice vector of last coordinate d
        h0 = lrows[0]
        first = _lift_positive(u, h0, d)
        assert first[-1] == 1
    rest = complete_to_basis(lrows + [list(first)])[e + 2:]
    out = list(inner) + [from_homogeneous(first)]
    for b in rest:
        out.append(from_homogeneous(_lift_positive(b, first, c)))
    return out

