"""Orbit classification of points of R^n under GL(n,Z) ⋉ Z^n.

Real coordinates are modelled exactly: a :class:`SymBasis` declares reals
``1, a_1, ..., a_k`` that are trusted to be linearly independent over Q, and
a :class:`SymPoint` stores each coordinate as a rational vector over that
basis.  With that encoding the group ``G_x = Z + x_1 Z + ... + x_n Z`` is a
lattice in Q^{k+1} and the minimal rational affine space ``F_x`` is a
kernel computation, so everything below is exact.

The complete invariant of ``x`` is ``(G_x, c_{F_x})``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .farey import AffineWitness, compose, invert, simplex_transport
from .lattice import (
    LatticeBasis,
    complete_to_basis,
    integer_kernel,
    lattice_canon,
    solve_integer_linear,
)
from .spaces import (
    RatAffineSpace,
    SpaceInvariants,
    canonical_simplex,
    canonical_space,
    space_equiv,
)

__all__ = [
    "SymBasis",
    "SymPoint",
    "GroupInvariant",
    "OrbitInvariant",
    "BasisMismatch",
    "InternalVerificationFailure",
    "RankTooLarge",
    "group_of",
    "rank_of",
    "rational_denominator",
    "minimal_space",
    "invariant_of",
    "orbit_equiv",
    "witness",
    "count_orbits",
    "admissible_c",
    "euler_phi",
]


class BasisMismatch(ValueError):
    """The two points are written over different symbol bases."""


class InternalVerificationFailure(AssertionError):
    """A constructed witness failed its final exact check (a bug, never expected)."""


class RankTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SymBasis:
    """The reals ``1, symbols[0], symbols[1], ...``.

    ``values`` (optional floats) are used only for a numeric sanity check:
    an integer relation with residual below 1e-9 triggers a warning.
    """

    symbols: tuple[str, ...] = ()
    values: Optional[tuple[float, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("symbol names must be unique")
        if "1" in self.symbols:
            raise ValueError("'1' is reserved for the constant")
        if self.values is not None:
            object.__setattr__(self, "values", tuple(float(v) for v in self.values))
            if len(self.values) != len(self.symbols):
                raise ValueError("one value per symbol")
            self._check_independence()

    @property
    def k(self) -> int:
        return len(self.symbols)

    def _check_independence(self) -> None:
        if not self.values:
            return
        import mpmath

        rel = mpmath.pslq([1.0, *self.values], tol=1e-9, maxcoeff=10**4, maxsteps=10**4)
        if rel is not None:
            terms = " + ".join(f"{c}*{s}" for c, s in zip(rel, ("1",) + self.symbols) if c)
            warnings.warn(f"declared symbols look Q-linearly dependent: {terms} ≈ 0", stacklevel=3)


RATIONAL = SymBasis()


@dataclass(frozen=True)
class SymPoint:
    """A point of R^n; ``coords[i][j]`` is the coefficient of basis element ``j``
    (``j = 0`` is the constant 1) in coordinate ``i``."""

    basis: SymBasis
    coords: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        coords = tuple(tuple(Fraction(c) for c in row) for row in self.coords)
        if any(len(row) != self.basis.k + 1 for row in coords):
            raise ValueError("each coordinate needs one coefficient per basis element")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def rational(cls, coords: Sequence) -> "SymPoint":
        return cls(RATIONAL, tuple((Fraction(c),) for c in coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def is_rational(self) -> bool:
        return all(not any(row[1:]) for row in self.coords)

    def as_rational(self) -> tuple[Fraction, ...]:
        if not self.is_rational:
            raise ValueError("point has irrational coordinates")
        return tuple(row[0] for row in self.coords)

    def numeric(self) -> tuple[float, ...]:
        if self.basis.k and self.basis.values is None:
            raise ValueError("no numeric values declared for the symbols")
        vals = (1.0,) + (self.basis.values or ())
        return tuple(sum(float(c) * v for c, v in zip(row, vals)) for row in self.coords)

    def _apply_affine(self, g: AffineWitness) -> "SymPoint":
        if g.n != self.n:
            raise ValueError("dimension mismatch")
        m = self.basis.k + 1
        out = []
        for row, b in zip(g.U, g.t):
            v = [sum((u * self.coords[j][s] for j, u in enumerate(row)), Fraction(0)) for s in range(m)]
            v[0] += b
            out.append(tuple(v))
        return SymPoint(self.basis, tuple(out))

    def __str__(self) -> str:
        names = ("",) + self.basis.symbols
        parts = []
        for row in self.coords:
            terms = []
            for c, s in zip(row, names):
                if c == 0:
                    continue
                if s == "":
                    terms.append(str(c))
                elif c == 1:
                    terms.append(s)
                else:
                    terms.append(f"{c}*{s}")
            parts.append(" + ".join(terms).replace("+ -", "- ") if terms else "0")
        return "(" + ", ".join(parts) + ")"


def _as_sympoint(x) -> SymPoint:
    return x if isinstance(x, SymPoint) else SymPoint.rational(x)


@dataclass(frozen=True)
class GroupInvariant:
    """``G_x`` as a canonical lattice in Q^{k+1} (coordinate 0 is the constant)."""

    basis: SymBasis
    lattice: LatticeBasis

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def d(self) -> int:
        return rational_denominator(self)

    def rational_generator(self) -> list[int]:
        """Integer coefficients (over the lattice rows) of the element ``1/d``."""
        rows = self.lattice.rows
        k = self.basis.k
        if k == 0:
            return [1]
        ker = integer_kernel([[row[j] for row in rows] for j in range(1, k + 1)], len(rows))
        if len(ker) != 1:
            raise ValueError("group does not meet Q in a rank-one subgroup")
        lam = ker[0]
        if sum(c * row[0] for c, row in zip(lam, rows)) < 0:
            lam = [-c for c in lam]
        return lam


def group_of(x) -> GroupInvariant:
    """``G_x``: the subgroup of R generated by 1 and the coordinates of ``x``."""
    x = _as_sympoint(x)
    m = x.basis.k + 1
    e0 = tuple(Fraction(int(j == 0)) for j in range(m))
    return GroupInvariant(x.basis, lattice_canon([e0, *x.coords], m))


def rank_of(g: GroupInvariant) -> int:
    return g.rank


def rational_denominator(g: GroupInvariant) -> int:
    """The largest ``d`` with ``1/d`` in the group."""
    lam = g.rational_generator()
    value = sum((c * row[0] for c, row in zip(lam, g.lattice.rows)), Fraction(0))
    if value <= 0 or value.numerator != 1:
        raise ValueError("group does not contain 1")
    return value.denominator


def minimal_space(x) -> RatAffineSpace:
    """``F_x``: the smallest rational affine space containing ``x``.

    Its relations are the integer ``(k_1, ..., k_n, k_0)`` with
    ``k_0 + k_1 x_1 + ... + k_n x_n = 0``.
    """
    x = _as_sympoint(x)
    n, m = x.n, x.basis.k + 1
    mat = [[x.coords[i][j] for i in range(n)] + [Fraction(int(j == 0))] for j in range(m)]
    rel = integer_kernel(mat, n + 1)
    return RatAffineSpace._from_relations(rel, n)


@dataclass(frozen=True)
class OrbitInvariant:
    group: GroupInvariant
    c: int

    @property
    def rank(self) -> int:
        return self.group.rank

    @property
    def e(self) -> int:
        return self.group.rank - 1

    @property
    def d(self) -> int:
        return self.group.d


def invariant_of(x) -> OrbitInvariant:
    """The complete invariant ``(G_x, c_{F_x})``."""
    return _invariant(_as_sympoint(x))


@lru_cache(maxsize=4096)
def _invariant(x: SymPoint) -> OrbitInvariant:
    g = group_of(x)
    f = minimal_space(x)
    if g.rank != f.dim + 1:
        raise InternalVerificationFailure(f"rank {g.rank} != dim {f.dim} + 1")
    return OrbitInvariant(g, f.c)


def _check_pair(x: SymPoint, y: SymPoint) -> None:
    if x.basis != y.basis:
        raise BasisMismatch("points use different symbol bases")
    if x.n != y.n:
        raise ValueError("points live in different dimensions")


def orbit_equiv(x, y) -> bool:
    x, y = _as_sympoint(x), _as_sympoint(y)
    _check_pair(x, y)
    return invariant_of(x) == invariant_of(y)


def _full_rank_witness(x: SymPoint, y: SymPoint) -> AffineWitness:
    # x_1..x_n, 1 is a Z-basis of G_x = G_y; solve M (x, 1) = (y, 1) row by row
    m = x.basis.k + 1
    e0 = tuple(Fraction(int(j == 0)) for j in range(m))
    xs = list(x.coords) + [e0]
    ys = list(y.coords) + [e0]
    a = [[v[j] for v in xs] for j in range(m)]
    block = []
    for target in ys:
        row = solve_integer_linear(a, target)
        if row is None:
            raise InternalVerificationFailure("no integer change of basis between equal groups")
        block.append(row)
    return AffineWitness.from_block(block)


def _flat_witness(x: SymPoint, y: SymPoint, inv: OrbitInvariant) -> AffineWitness:
    n = x.n
    triple = SpaceInvariants(inv.e, inv.d, inv.c)
    e, d, _ = triple
    target, p = canonical_space(triple, n)
    g1 = space_equiv(minimal_space(x), target)
    g2 = space_equiv(minimal_space(y), target)
    x1, y1 = g1(x), g2(y)
    pd = Fraction(p, d)
    for pt in (x1, y1):
        assert all(row[0] == pd and not any(row[1:]) for row in pt.coords[e:])
    if e == 0:
        g4 = AffineWitness.identity(n)
    else:
        # flatten the canonical space onto R^e: z -> d*(z_1, ..., z_e)
        def eta(z: SymPoint) -> SymPoint:
            return SymPoint(z.basis, tuple(tuple(d * c for c in row) for row in z.coords[:e]))

        g3 = _full_rank_witness(eta(x1), eta(y1))
        tail = (pd,) * (n - e)
        ws = [tuple(Fraction(t, d) for t in g3.t) + tail]
        for i in range(e):
            ws.append(tuple(Fraction(g3.U[r][i] + g3.t[r], d) for r in range(e)) + tail)
        vs = canonical_simplex(triple, n)
        g4 = simplex_transport(vs, ws + vs[e + 1:])
        if g4 is None:
            raise InternalVerificationFailure("canonical simplexes have mismatched denominators")
    return compose(invert(g2), compose(g4, g1))


def witness(x, y) -> Optional[AffineWitness]:
    """An element ``g`` of GL(n,Z) ⋉ Z^n with ``g(x) = y``, or ``None``."""
    x, y = _as_sympoint(x), _as_sympoint(y)
    _check_pair(x, y)
    inv = invariant_of(x)
    if inv != invariant_of(y):
        return None
    if x == y:
        return AffineWitness.identity(x.n)
    if inv.rank == x.n + 1:
        g = _full_rank_witness(x, y)
    else:
        g = _flat_witness(x, y, inv)
    if g(x) != y:
        raise InternalVerificationFailure(f"constructed map sends {x} to {g(x)}, not {y}")
    return g


def euler_phi(d: int) -> int:
    if d < 1:
        raise ValueError("phi is defined for positive integers")
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def admissible_c(d: int) -> list[int]:
    """Values ``c`` in ``[1, max(1, d/2)]`` coprime to ``d``."""
    from math import gcd

    return [c for c in range(1, max(1, d // 2) + 1) if gcd(c, d) == 1]


def count_orbits(g: GroupInvariant, n: int) -> tuple[int, list[SymPoint]]:
    """Number of orbits in R^n whose group is ``g``, with one representative each.

    Representatives are ``(z_1, ..., z_e, p/d, ..., p/d)`` where the ``z_i``
    complete ``1/d`` to a basis of ``g`` and ``p`` is the least inverse of
    ``c`` modulo ``d``.
    """
    r = g.rank
    if r > n + 1:
        raise RankTooLarge(f"rank {r} exceeds n + 1 = {n + 1}")
    e, d = r - 1, g.d
    cs = admissible_c(d) if r == n else [1]
    if r == n:
        assert len(cs) == max(1, euler_phi(d) // 2)
    rows = g.lattice.rows
    full = complete_to_basis([g.rational_generator()])
    zs = [tuple(sum((c * row[j] for c, row in zip(cs_, rows)), Fraction(0)) for j in range(g.basis.k + 1)) for cs_ in full[1:]]
    reps = []
    for c in cs:
        if e == n:
            coords = zs
        else:
            _, p = canonical_space((e, d, c), n)
            tail = tuple(Fraction(int(j == 0) * p, d) for j in range(g.basis.k + 1))
            coords = zs + [tail] * (n - e)
        reps.append(SymPoint(g.basis, tuple(coords)))
    return len(reps), reps
