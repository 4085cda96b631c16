"""Independent desk-scale ground truth.

None of this goes through the lattice machinery used by the classifier:
orbits are explored by breadth-first search over a fixed generating set,
``c_F`` is found by literal search over candidate points, and the
one-dimensional case has a closed form.  Search results are finite
under-approximations, so a hit proves equivalence and a miss proves nothing.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterator, Optional, Sequence

from .farey import AffineWitness, apply, den, homogeneous, rat_point
from .lattice import det

__all__ = [
    "SearchBudget",
    "OrbitWindow",
    "BudgetExceeded",
    "generators",
    "bfs_orbit",
    "c_by_definition",
    "n1_classify",
    "n1_equivalent",
    "verify_witness",
]


class BudgetExceeded(RuntimeError):
    def __init__(self, window: "OrbitWindow"):
        super().__init__(f"node cap hit after {len(window.points)} points")
        self.window = window


@dataclass(frozen=True)
class SearchBudget:
    max_word_length: int = 8
    coordinate_bound: Fraction = Fraction(3)
    node_cap: int = 1_000_000

    def __post_init__(self):
        object.__setattr__(self, "coordinate_bound", Fraction(self.coordinate_bound))
        if self.max_word_length <= 0 or self.coordinate_bound <= 0 or self.node_cap <= 0:
            raise ValueError("budget fields must be positive")


@dataclass(frozen=True)
class OrbitWindow:
    points: frozenset
    complete: bool

    def __contains__(self, p) -> bool:
        return rat_point(p) in self.points

    def __len__(self) -> int:
        return len(self.points)


def generators(n: int) -> list[AffineWitness]:
    """Coordinate swaps, sign flip of the first coordinate, the transvection
    ``z_1 += z_2`` and its inverse, and the unit translations ``±e_i``."""
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    zero = (0,) * n
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            u = [row[:] for row in ident]
            u[i], u[j] = u[j], u[i]
            gens.append(AffineWitness(tuple(map(tuple, u)), zero))
    u = [row[:] for row in ident]
    u[0][0] = -1
    gens.append(AffineWitness(tuple(map(tuple, u)), zero))
    if n >= 2:
        for s in (1, -1):
            u = [row[:] for row in ident]
            u[0][1] = s
            gens.append(AffineWitness(tuple(map(tuple, u)), zero))
    for i in range(n):
        for s in (1, -1):
            t = [0] * n
            t[i] = s
            gens.append(AffineWitness(tuple(map(tuple, ident)), tuple(t)))
    return gens


def bfs_orbit(x: Sequence, budget: SearchBudget = SearchBudget(), *, strict: bool = False) -> OrbitWindow:
    """Points reachable from ``x`` by words of length at most
    ``budget.max_word_length`` whose every intermediate point stays inside
    the box ``|z_i| <= coordinate_bound``.

    When ``node_cap`` is hit the partial window is returned with
    ``complete=False`` (or :class:`BudgetExceeded` is raised if ``strict``).
    """
    x = rat_point(x)
    n = len(x)
    # the group preserves den(x), so walk integer numerators over a fixed denominator
    q = den(x)
    bound = budget.coordinate_bound * q
    moves = [(g.U, tuple(q * b for b in g.t)) for g in generators(n)]
    start = tuple(int(c * q) for c in x)
    seen = {start}
    frontier = deque([(start, 0)])
    complete = True
    while frontier:
        p, depth = frontier.popleft()
        if depth == budget.max_word_length:
            continue
        for u, t in moves:
            nxt = tuple(sum(a * b for a, b in zip(row, p)) + s for row, s in zip(u, t))
            if nxt in seen or any(abs(c) > bound for c in nxt):
                continue
            if len(seen) >= budget.node_cap:
                complete = False
                frontier.clear()
                break
            seen.add(nxt)
            frontier.append((nxt, depth + 1))
    seen = {tuple(Fraction(c, q) for c in p) for p in seen}
    window = OrbitWindow(frozenset(seen), complete)
    if strict and not complete:
        raise BudgetExceeded(window)
    return window


def _cofactors(rows: Sequence[Sequence[int]]) -> list[int]:
    # det([rows; v]) == sum(cof[j] * v[j]) by Laplace expansion along the last row
    m = len(rows) + 1
    out = []
    for j in range(m):
        minor = [[r[c] for c in range(m) if c != j] for r in rows]
        out.append((-1) ** (m - 1 + j) * det(minor))
    return out


def _candidates(n: int, q: int, window: int) -> Iterator[tuple[int, ...]]:
    # homogeneous vectors (a, q) with gcd 1 and |a_i| <= window * q
    lim = window * q
    for a in product(range(-lim, lim + 1), repeat=n):
        if gcd(q, *a) == 1:
            yield a + (q,)


def c_by_definition(space, den_cap: int, window: int = 1) -> Optional[int]:
    """Literal minimum of ``den(v)`` over rational ``v`` outside ``space``
    that complete some regular simplex spanning ``space``.

    Candidates range over ``den(v) <= den_cap`` with coordinates in
    ``[-window, window]``; returns ``None`` if none qualifies.
    The regular simplexes inside ``space`` are exactly the bases of the
    homogenization lattice made of homogeneous correspondents, so ``v``
    qualifies iff that basis plus ``homogeneous(v)`` is unimodular.
    """
    n, e = space.n, space.dim
    if e == n:
        return 1
    from .farey import homogeneous_denominator_simplex

    rows = [list(homogeneous(v)) for v in homogeneous_denominator_simplex(space)]
    if e == n - 1:
        cof = _cofactors(rows)
        ok = lambda h: abs(sum(c * x for c, x in zip(cof, h))) == 1  # noqa: E731
    else:
        from .lattice import is_primitive_system

        ok = lambda h: is_primitive_system(rows + [list(h)])  # noqa: E731
    for q in range(1, den_cap + 1):
        for h in _candidates(n, q, window):
            if ok(h):
                return q
    return None


def n1_classify(x) -> tuple[int, int]:
    """Closed-form ``(d, c)`` for a rational point of the line."""
    x = Fraction(x)
    q = x.denominator
    r = x.numerator % q
    if q <= 2:
        return q, 1
    return q, min(r, q - r)


def n1_equivalent(x, y) -> bool:
    """Whether ``y = ±x + m`` for an integer ``m``: the whole group in dimension one."""
    x, y = Fraction(x), Fraction(y)
    return (y - x).denominator == 1 or (y + x).denominator == 1


def verify_witness(g: AffineWitness, x, y) -> bool:
    """Exact check that ``g`` is in the group and sends ``x`` to ``y``."""
    try:
        if g.n and abs(det(g.U)) != 1:
            return False
        return apply(g, x) == (y if hasattr(y, "_apply_affine") else rat_point(y))
    except ValueError:
        return False
