"""Rational affine subspaces of R^n and their invariant triple ``(dim, d, c)``.

A space ``F`` is stored through its homogenization: the saturated integer
lattice ``L_F`` of vectors in the linear span of ``{(v, 1) : v in F}``, and
the canonical (HNF) integer basis of the relations ``(h, -r)`` that cut ``F``
out as ``<h, z> = r``.  ``d_F`` is the gcd of the last coordinates of
``L_F``; ``c_F`` is the least positive last coordinate of a vector
completing a basis of ``L_F`` to a basis of Z^{n+1}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import NamedTuple, Optional, Sequence

from . import farey
from .farey import AffineWitness, homogeneous, rat_point
from .lattice import (
    LatticeBasis,
    complete_to_basis,
    integer_kernel,
    inverse_unimodular,
    min_positive_last_in_coset,
)

__all__ = [
    "RatAffineSpace",
    "SpaceInvariants",
    "InconsistentSystem",
    "BadTriple",
    "space_from_points",
    "space_from_equations",
    "contains",
    "dim",
    "d_of",
    "c_of",
    "classify_space",
    "space_equiv",
    "canonical_space",
    "canonical_simplex",
]


class InconsistentSystem(ValueError):
    """The equations have no common real solution."""


class BadTriple(ValueError):
    """``(e, d, c)`` is not the invariant of any rational affine space."""


class SpaceInvariants(NamedTuple):
    e: int
    d: int
    c: int


@dataclass(frozen=True)
class RatAffineSpace:
    """A nonempty rational affine subspace of R^n.

    ``equations`` holds integer rows ``(h_1, ..., h_n, a)`` meaning
    ``h . z + a = 0``, in Hermite normal form of the saturated relation
    lattice, so equal spaces compare equal.
    """

    n: int
    equations: tuple[tuple[int, ...], ...]
    _lattice: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def _from_relations(cls, rows: Sequence[Sequence], n: int) -> "RatAffineSpace":
        lat = integer_kernel(rows, n + 1)
        if not any(row[-1] != 0 for row in lat):
            raise InconsistentSystem("the system has no solution")
        eqs = integer_kernel(lat, n + 1) if len(lat) < n + 1 else []
        return cls(n, tuple(map(tuple, eqs)), tuple(map(tuple, lat)))

    @property
    def dim(self) -> int:
        return len(self._lattice) - 1

    @cached_property
    def homogenization_lattice(self) -> LatticeBasis:
        return LatticeBasis(self.n + 1, tuple(tuple(Fraction(x) for x in row) for row in self._lattice))

    @cached_property
    def d(self) -> int:
        return gcd(*(row[-1] for row in self._lattice))

    @cached_property
    def _c_pair(self) -> tuple[int, Optional[list[int]]]:
        if self.dim != self.n - 1:
            return 1, None
        rows = [list(r) for r in self._lattice]
        w0 = complete_to_basis(rows)[-1]
        return min_positive_last_in_coset(w0, rows)

    @property
    def c(self) -> int:
        return self._c_pair[0]

    @property
    def c_witness(self) -> Optional[list[int]]:
        """Homogeneous vector of a point outside ``F`` of denominator ``c_F``
        completing ``L_F`` to a basis (only when ``dim == n - 1``)."""
        return self._c_pair[1]

    @property
    def invariants(self) -> SpaceInvariants:
        return SpaceInvariants(self.dim, self.d, self.c)

    def contains(self, p: Sequence) -> bool:
        p = rat_point(p)
        if len(p) != self.n:
            raise ValueError("dimension mismatch")
        return all(sum((h * x for h, x in zip(row, p)), Fraction(0)) + row[-1] == 0 for row in self.equations)

    def point(self) -> tuple[Fraction, ...]:
        """A rational point of minimal denominator ``d_F``."""
        return farey.homogeneous_denominator_simplex(self)[0]

    def image(self, g: AffineWitness) -> "RatAffineSpace":
        """``g(F)``: pull the relations back through ``g^{-1}``."""
        if g.n != self.n:
            raise ValueError("dimension mismatch")
        if not self.equations:
            return self
        ginv = farey.invert(g).block()
        rows = [[sum(r[k] * ginv[k][j] for k in range(self.n + 1)) for j in range(self.n + 1)] for r in self.equations]
        return RatAffineSpace._from_relations(rows, self.n)

    def equation_strings(self) -> list[str]:
        """Relations rendered as ``"h1*y1 + ... = r"`` with integer coefficients."""
        out = []
        for row in self.equations:
            terms = []
            for i, h in enumerate(row[:-1], start=1):
                if h == 0:
                    continue
                mag = "" if abs(h) == 1 else f"{abs(h)}*"
                sign = "-" if h < 0 else "+"
                terms.append((sign, f"{mag}y{i}"))
            lhs = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            for sign, t in terms[1:]:
                lhs += f" {sign} {t}"
            out.append(f"{lhs} = {-row[-1]}")
        return out

    def __str__(self) -> str:
        if not self.equations:
            return f"R^{self.n}"
        return "{" + ", ".join(self.equation_strings()) + "}"


def space_from_points(points: Sequence[Sequence]) -> RatAffineSpace:
    """Affine hull of rational points."""
    pts = [rat_point(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    n = len(pts[0])
    hom = [list(homogeneous(p)) for p in pts]
    ann = integer_kernel(hom, n + 1)
    return RatAffineSpace._from_relations(ann, n) if ann else RatAffineSpace._from_relations([], n)


def space_from_equations(system: Sequence[tuple[Sequence, object]], n: Optional[int] = None) -> RatAffineSpace:
    """Space of solutions of ``<h, z> = r`` for each ``(h, r)`` in ``system``."""
    rows = [[Fraction(x) for x in h] + [-Fraction(r)] for h, r in system]
    if n is None:
        if not rows:
            raise ValueError("ambient dimension needed for an empty system")
        n = len(rows[0]) - 1
    if any(len(r) != n + 1 for r in rows):
        raise ValueError("every normal vector must have length n")
    return RatAffineSpace._from_relations(rows, n)


def whole_space(n: int) -> RatAffineSpace:
    return RatAffineSpace._from_relations([], n)


def contains(space: RatAffineSpace, p: Sequence) -> bool:
    return space.contains(p)


def dim(space: RatAffineSpace) -> int:
    return space.dim


def d_of(space: RatAffineSpace) -> int:
    return space.d


def c_of(space: RatAffineSpace) -> int:
    return space.c


def classify_space(space: RatAffineSpace) -> SpaceInvariants:
    return space.invariants


def space_equiv(f: RatAffineSpace, g: RatAffineSpace) -> Optional[AffineWitness]:
    """An affine-group element mapping ``f`` onto ``g``, or ``None`` if none exists."""
    if f.n != g.n:
        raise ValueError("spaces live in different ambient dimensions")
    if f.invariants != g.invariants:
        return None
    gamma = farey.simplex_transport(farey.controlled_full_simplex(f), farey.controlled_full_simplex(g))
    assert gamma is not None and f.image(gamma) == g
    return gamma


def check_triple(inv: SpaceInvariants, n: int) -> None:
    e, d, c = inv
    if not 0 <= e <= n or d < 1 or c < 1:
        raise BadTriple(f"{tuple(inv)} out of range for n={n}")
    if e == n and (d, c) != (1, 1):
        raise BadTriple("the whole space has d = c = 1")
    if e != n - 1 and c != 1:
        raise BadTriple("c must be 1 unless e = n-1")
    if gcd(c, d) != 1 or 2 * c > max(2, d):
        raise BadTriple("need gcd(c, d) = 1 and c <= max(1, d/2)")


def canonical_space(inv, n: int) -> tuple[RatAffineSpace, int]:
    """The space ``{y_{e+1} = ... = y_n = p/d}`` with invariants ``inv``.

    ``p`` is the least element of ``{1, ..., d}`` with ``p*c ≡ 1 (mod d)``.
    For ``e == n`` the whole space is returned with ``p = 1``.
    """
    inv = SpaceInvariants(*inv)
    check_triple(inv, n)
    e, d, c = inv
    p = pow(c, -1, d) if d > 1 else 1
    system = [([int(j == i) for j in range(n)], Fraction(p, d)) for i in range(e, n)]
    return space_from_equations(system, n), p


def canonical_simplex(inv, n: int) -> list[tuple[Fraction, ...]]:
    """Vertices ``v_0, ..., v_n`` of the regular n-simplex built on the canonical space.

    ``v_0..v_e`` span the canonical space with denominator ``d``.  When
    ``c == 1`` the remaining vertices are ``0, xi_{e+2}, ..., xi_n``;
    otherwise (then ``e = n-1``) the last vertex is ``(0, ..., 0, q/c)``
    with ``p*c - q*d = 1``.
    """
    inv = SpaceInvariants(*inv)
    e, d, c = inv
    _, p = canonical_space(inv, n)
    pd = Fraction(p, d)
    verts = []
    for i in range(e + 1):
        v = [Fraction(0)] * e + [pd] * (n - e)
        if i > 0:
            v[i - 1] = Fraction(1, d)
        verts.append(tuple(v))
    if e == n:
        return verts
    if c == 1:
        verts.append((Fraction(0),) * n)
        for i in range(e + 2, n + 1):
            verts.append(tuple(Fraction(int(j == i - 1)) for j in range(n)))
    else:
        q = (p * c - 1) // d
        verts.append((Fraction(0),) * (n - 1) + (Fraction(q, c),))
    return verts
