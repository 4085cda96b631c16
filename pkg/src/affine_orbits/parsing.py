"""Text grammar for points and linear equations.

Points: ``coord ("," coord)*`` where each coordinate is a sum of terms
``rat``, ``sym``, or ``rat*sym`` joined by ``+``/``-``.  Equations:
``expr = expr`` with terms ``rat``, ``yi`` or ``rat*yi``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .orbits import SymBasis, SymPoint

__all__ = ["ParseError", "parse_rational", "parse_point", "parse_equation", "parse_sym_decls"]


class ParseError(ValueError):
    pass


_TERM = re.compile(
    r"\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*(?:\*\s*([A-Za-z_]\w*))?|([A-Za-z_]\w*))\s*"
)


def parse_rational(text: str) -> Fraction:
    m = re.fullmatch(r"\s*([+-]?\d+)(?:/(\d+))?\s*", text)
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise ParseError(f"not a rational: {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def _linear(text: str) -> list[tuple[Fraction, str | None]]:
    pos, out = 0, []
    text = text.strip()
    if not text:
        raise ParseError("empty expression")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {text[pos:]!r}")
        sign, num, sym1, sym2 = m.groups()
        if out and not sign:
            raise ParseError(f"missing operator before {text[m.start():]!r}")
        coef = parse_rational(num) if num else Fraction(1)
        if sign == "-":
            coef = -coef
        out.append((coef, sym1 or sym2))
        pos = m.end()
    return out


def parse_sym_decls(decls: Sequence[str]) -> SymBasis:
    """``["r2=1.41421356", ...]`` -> basis with numeric values (names only allowed too)."""
    names, values = [], []
    for decl in decls:
        name, _, val = decl.partition("=")
        name = name.strip()
        if not re.fullmatch(r"[A-Za-z_]\w*", name) or re.fullmatch(r"y\d+", name):
            raise ParseError(f"bad symbol name {name!r}")
        names.append(name)
        if val:
            try:
                values.append(float(val))
            except ValueError as exc:
                raise ParseError(f"bad value for {name}: {val!r}") from exc
    if values and len(values) != len(names):
        raise ParseError("give a value for every symbol or for none")
    try:
        return SymBasis(tuple(names), tuple(values) if values else None)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_point(text: str, basis: SymBasis, n: int | None = None) -> SymPoint:
    index = {name: j + 1 for j, name in enumerate(basis.symbols)}
    coords = []
    for part in text.split(","):
        vec = [Fraction(0)] * (basis.k + 1)
        for coef, sym in _linear(part):
            if sym is None:
                vec[0] += coef
            elif sym in index:
                vec[index[sym]] += coef
            else:
                raise ParseError(f"unknown symbol {sym!r}")
        coords.append(tuple(vec))
    if n is not None and len(coords) != n:
        raise ParseError(f"expected {n} coordinates, got {len(coords)}")
    return SymPoint(basis, tuple(coords))


def parse_equation(text: str, n: int) -> tuple[list[Fraction], Fraction]:
    """``"y1 - 2*y3 = 1/2"`` -> ``(h, r)`` with ``<h, y> = r``."""
    if text.count("=") != 1:
        raise ParseError(f"equation needs exactly one '=': {text!r}")
    lhs, rhs = text.split("=")
    h = [Fraction(0)] * n
    r = Fraction(0)
    for side, sgn in ((lhs, 1), (rhs, -1)):
        for coef, sym in _linear(side):
            if sym is None:
                r -= sgn * coef
                continue
            m = re.fullmatch(r"y(\d+)", sym)
            if not m or not 1 <= int(m.group(1)) <= n:
                raise ParseError(f"unknown variable {sym!r} (use y1..y{n})")
            h[int(m.group(1)) - 1] += sgn * coef
    if not any(h):
        raise ParseError(f"equation has no variables: {text!r}")
    return h, r
