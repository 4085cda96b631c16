"""Exact integer and rational lattice kernels.

Everything here works on plain Python ints and :class:`fractions.Fraction`,
so no entry ever overflows.  Matrices are lists (or tuples) of rows.

The canonical form for a lattice is the row-style Hermite normal form:
pivots are positive and every entry above a pivot lies in ``[0, pivot)``.
Two generator lists span the same subgroup iff their canonical forms are
identical, which is what makes lattice equality a plain ``==``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

__all__ = [
    "LatticeBasis",
    "NotExtendable",
    "BadCoset",
    "hnf",
    "lattice_canon",
    "is_primitive",
    "is_primitive_system",
    "complete_to_basis",
    "min_positive_last_in_coset",
    "solve_integer_linear",
    "integer_kernel",
    "saturation",
    "gcd_combination",
    "det",
    "inverse_unimodular",
    "matmul",
    "transpose",
]


class NotExtendable(ValueError):
    """Rows cannot be completed to a basis of Z^m."""


class BadCoset(ValueError):
    """``w0`` together with the lattice rows is not a basis of Z^m."""


IntRows = list[list[int]]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free Bareiss elimination."""
    m = [list(map(int, row)) for row in a]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def hnf(
    generators: Sequence[Sequence[int]],
    *,
    with_inverse: bool = False,
):
    """Row-style Hermite normal form of the integer span of ``generators``.

    Returns ``(basis, transform)`` where ``transform`` is a unimodular
    ``k x k`` matrix (``k = len(generators)``) with
    ``transform @ generators == basis + zero rows``.  With
    ``with_inverse=True`` a third item, the exact inverse of ``transform``,
    is returned as well.

    >>> hnf([[2, 4], [3, 6]])[0]
    [[1, 2]]
    """
    a = [list(map(int, row)) for row in generators]
    k = len(a)
    if k == 0:
        raise ValueError("hnf needs at least one generator")
    m = len(a[0])
    if m < 1 or any(len(row) != m for row in a):
        raise ValueError("generators must share a positive length")
    u = [[int(i == j) for j in range(k)] for i in range(k)]
    # uinv tracks transform^{-1}: a row op on u is the inverse column op on uinv.
    uinv = [[int(i == j) for j in range(k)] for i in range(k)] if with_inverse else None

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        if uinv is not None:
            for row in uinv:
                row[i], row[j] = row[j], row[i]

    def addmul(i: int, j: int, q: int) -> None:
        # row_i -= q * row_j
        if q == 0:
            return
        ai, aj = a[i], a[j]
        for c in range(m):
            ai[c] -= q * aj[c]
        ui, uj = u[i], u[j]
        for c in range(k):
            ui[c] -= q * uj[c]
        if uinv is not None:
            for row in uinv:
                row[j] += q * row[i]

    def negate(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        if uinv is not None:
            for row in uinv:
                row[i] = -row[i]

    r = 0
    for col in range(m):
        if r == k:
            break
        while True:
            nz = [i for i in range(r, k) if a[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(a[i][col]), i))
            if piv != r:
                swap(piv, r)
            done = True
            for i in range(r + 1, k):
                if a[i][col] != 0:
                    addmul(i, r, a[i][col] // a[r][col])
                    if a[i][col] != 0:
                        done = False
            if done:
                break
        if a[r][col] == 0:
            continue
        if a[r][col] < 0:
            negate(r)
        p = a[r][col]
        for i in range(r):
            addmul(i, r, a[i][col] // p)
        r += 1
    basis = [row[:] for row in a[:r]]
    if with_inverse:
        return basis, u, uinv
    return basis, u


@dataclass(frozen=True)
class LatticeBasis:
    """Canonical basis of a finitely generated subgroup of Q^m.

    ``rows`` are in Hermite normal form; equal subgroups give equal objects.
    """

    ambient_dim: int
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def integer_rows(self) -> list[list[int]]:
        """Rows as ints; raises if the lattice is not integral."""
        out = []
        for row in self.rows:
            if any(x.denominator != 1 for x in row):
                raise ValueError("lattice is not contained in Z^m")
            out.append([int(x) for x in row])
        return out

    def contains(self, v: Sequence) -> bool:
        """Membership of ``v`` in the integer span of the rows."""
        v = [Fraction(x) for x in v]
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        # rows are echelon: peel off pivots left to right
        rest = list(v)
        for row in self.rows:
            col = next(j for j, x in enumerate(row) if x != 0)
            q = rest[col] / row[col]
            if q.denominator != 1:
                return False
            rest = [a - q * b for a, b in zip(rest, row)]
        return all(x == 0 for x in rest)

    def __str__(self) -> str:
        return "[" + ", ".join(
            "(" + ", ".join(str(x) for x in row) + ")" for row in self.rows
        ) + "]"


def lattice_canon(generators: Sequence[Sequence], m: Optional[int] = None) -> LatticeBasis:
    """Canonical basis of the subgroup of Q^m spanned by rational ``generators``.

    Denominators are cleared by their lcm ``D``, the integer HNF is taken and
    the result divided back by ``D``.
    """
    gens = [[Fraction(x) for x in g] for g in generators]
    if m is None:
        if not gens:
            raise ValueError("ambient dimension needed for an empty generator list")
        m = len(gens[0])
    if any(len(g) != m for g in gens):
        raise ValueError("generators must have length m")
    gens = [g for g in gens if any(g)]
    if not gens:
        return LatticeBasis(m, ())
    big_d = lcm(*(x.denominator for g in gens for x in g))
    ints = [[int(x * big_d) for x in g] for g in gens]
    basis, _ = hnf(ints)
    return LatticeBasis(m, tuple(tuple(Fraction(x, big_d) for x in row) for row in basis))


def is_primitive(v: Sequence[int]) -> bool:
    """True iff the integer vector ``v`` has coprime entries."""
    if not any(v):
        raise ValueError("the zero vector is not primitive")
    return gcd(*map(int, v)) == 1


def _column_hnf(rows: Sequence[Sequence[int]]):
    # HNF of the columns of ``rows``: T @ rows^T = [H; 0]
    return hnf(transpose(rows), with_inverse=True)


def is_primitive_system(rows: Sequence[Sequence[int]]) -> bool:
    """True iff ``rows`` extend to a basis of Z^m (gcd of maximal minors is 1)."""
    if not rows:
        return True
    r = len(rows)
    if r > len(rows[0]):
        return False
    h, _, _ = _column_hnf(rows)
    return len(h) == r and all(h[i][i] == 1 for i in range(r))


def complete_to_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Extend ``rows`` to an ``m x m`` unimodular matrix whose first rows are ``rows``.

    The extra rows come from the inverse of the column-HNF transform, so the
    output is deterministic.
    """
    rows = [list(map(int, row)) for row in rows]
    if not rows:
        raise ValueError("need at least one row")
    r, m = len(rows), len(rows[0])
    if r > m:
        raise NotExtendable("more rows than the ambient dimension")
    h, _, tinv = _column_hnf(rows)
    if len(h) != r or any(h[i][i] != 1 for i in range(r)):
        raise NotExtendable("rows do not span a primitive sublattice")
    # T A^T = [I; 0]  =>  A = first r rows of (T^{-1})^T
    full = transpose(tinv)
    assert full[:r] == rows
    return rows + full[r:]


def gcd_combination(values: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``(g, coeffs)`` with ``g = gcd(values) >= 0`` and ``sum(c*v) == g``."""
    vals = [int(v) for v in values]
    if not any(vals):
        return 0, [0] * len(vals)
    basis, u = hnf([[v] for v in vals])
    return basis[0][0], list(u[0])


def min_positive_last_in_coset(w0: Sequence[int], lattice) -> tuple[int, list[int]]:
    """Smallest positive last coordinate over ``(w0 + L) ∪ (-w0 + L)``.

    ``lattice`` is a :class:`LatticeBasis` (or integer rows) of rank ``m-1``
    such that its rows and ``w0`` form a basis of Z^m.  Returns the minimum
    and one vector attaining it.
    """
    rows = lattice.integer_rows() if isinstance(lattice, LatticeBasis) else [list(map(int, r)) for r in lattice]
    w0 = list(map(int, w0))
    m = len(w0)
    if len(rows) != m - 1 or any(len(r) != m for r in rows):
        raise BadCoset("lattice must have rank m-1 in Z^m")
    if abs(det(rows + [w0])) != 1:
        raise BadCoset("w0 does not complete the lattice to a basis of Z^m")
    g, coeffs = gcd_combination([r[-1] for r in rows])
    ell = [sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(m)]
    a = w0[-1]
    best = None
    for sign in (1, -1):
        s = sign * a
        if g == 0:
            if s <= 0:
                continue
            k, c = 0, s
        else:
            c = s % g or g
            k = (c - s) // g
        if best is None or c < best[0]:
            best = (c, [sign * x + k * y for x, y in zip(w0, ell)])
    if best is None:
        raise BadCoset("no vector with positive last coordinate in the coset")
    return best


def integer_kernel(a: Sequence[Sequence], q: Optional[int] = None) -> list[list[int]]:
    """Basis (in HNF) of ``{x in Z^q : A x = 0}`` for a rational matrix ``A``.

    ``q`` is the number of columns, needed when ``A`` has no rows.
    """
    rows = [[Fraction(x) for x in row] for row in a]
    rows = [r for r in rows if any(r)]
    if q is None:
        if not a:
            raise ValueError("column count needed for an empty matrix")
        q = len(a[0])
    if not rows:
        return [[int(i == j) for j in range(q)] for i in range(q)]
    big_d = lcm(*(x.denominator for r in rows for x in r))
    ints = [[int(x * big_d) for x in r] for r in rows]
    h, u = hnf(transpose(ints))
    ker = u[len(h):]
    if not ker:
        return []
    return hnf(ker)[0]


def saturation(rows: Sequence[Sequence[int]], m: Optional[int] = None) -> list[list[int]]:
    """HNF basis of ``span_Q(rows) ∩ Z^m``."""
    if m is None:
        m = len(rows[0])
    ann = integer_kernel(rows, m)
    return integer_kernel(ann, m) if ann else [[int(i == j) for j in range(m)] for i in range(m)]


def solve_integer_linear(a: Sequence[Sequence], b: Sequence) -> Optional[list[int]]:
    """An integer ``x`` with ``A x = b``, or ``None`` if there is none.

    ``A`` may have rational entries.  Works through the HNF of the column
    module: ``T A^T = [H; 0]`` turns the system into a triangular one.
    """
    rows = [[Fraction(x) for x in row] for row in a]
    rhs = [Fraction(x) for x in b]
    if len(rows) != len(rhs):
        raise ValueError("dimension mismatch")
    p = len(rows)
    q = len(rows[0]) if rows else 0
    if q == 0:
        return [] if all(x == 0 for x in rhs) else None
    big_d = lcm(*(x.denominator for r in rows for x in r), *(x.denominator for x in rhs))
    ai = [[int(x * big_d) for x in r] for r in rows]
    bi = [int(x * big_d) for x in rhs]
    h, t = hnf(transpose(ai))  # t @ A^T = [h; 0], i.e. A @ t^T = [h^T | 0]
    # solve y @ h = b for integer y (h rows echelon in the p coordinates)
    y = []
    rest = list(bi)
    for row in h:
        col = next(j for j, x in enumerate(row) if x != 0)
        if rest[col] % row[col]:
            return None
        coef = rest[col] // row[col]
        y.append(coef)
        rest = [r - coef * x for r, x in zip(rest, row)]
    if any(rest):
        return None
    y += [0] * (q - len(h))
    # x = t^T y
    return [sum(t[i][j] * y[i] for i in range(q)) for j in range(q)]


def inverse_unimodular(u: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact integer inverse of a unimodular matrix."""
    n = len(u)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(u)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]
