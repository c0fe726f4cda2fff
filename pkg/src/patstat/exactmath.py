"""Exact combinatorial primitives shared by every other module.

Counts are plain Python ints (arbitrary precision) and exact ratios are
``fractions.Fraction`` (always lowest terms, positive denominator).  Nothing
in this module ever touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k); 0 whenever n < 0, k < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    """(sum of parts)! / product of part!, or 0 if any part is negative.

    The zero convention lets summations run over rectangular index ranges;
    infeasible splits vanish on their own instead of needing explicit
    range clipping at every call site.
    """
    if any(p < 0 for p in parts):
        return 0
    out = 1
    rem = sum(parts)
    for p in parts:
        out *= math.comb(rem, p)
        rem -= p
    return out


def factorial(a: int) -> int:
    """a! for a >= 0."""
    return math.factorial(a)


def superfactorial(a: int) -> int:
    """0! * 1! * ... * a!."""
    if a < 0:
        raise ValueError("superfactorial requires a >= 0")
    out = 1
    fact = 1
    for i in range(1, a + 1):
        fact *= i
        out *= fact
    return out


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks.

    Computed by the recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1).
    """
    if n < 0 or k < 0:
        raise ValueError("stirling2 requires n, k >= 0")
    if k > n:
        return 0
    row = [1] + [0] * k
    for _ in range(n):
        new = [0] * (k + 1)
        for j in range(1, k + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def _check_cell(i: int, j: int, m: int) -> None:
    if m < 0 or not (0 <= i <= m) or not (0 <= j <= m):
        raise ValueError(f"cell ({i},{j}) out of range for grid size m={m}")


def bracket(i: int, j: int, m: int) -> int:
    """Monotone northeast lattice paths (0,0) -> (m,m) passing through (i,j).

    Equals C(i+j, i) * C(2m-i-j, m-i): choose the path to the cell, then the
    path from the cell.
    """
    _check_cell(i, j, m)
    return binomial(i + j, i) * binomial(2 * m - i - j, m - i)


def brace(i: int, j: int, m: int) -> Fraction:
    """Normalized cell count C(m,i)*C(m,j)/C(2m,i+j).

    Satisfies bracket(i,j,m) == C(2m,m) * brace(i,j,m) exactly.
    """
    _check_cell(i, j, m)
    return Fraction(binomial(m, i) * binomial(m, j), binomial(2 * m, i + j))


@dataclass(frozen=True)
class BracketTable:
    """Immutable (m+1) x (m+1) grid of path counts through each cell."""

    m: int
    values: tuple[tuple[int, ...], ...]

    def value(self, i: int, j: int) -> int:
        _check_cell(i, j, self.m)
        return self.values[i][j]

    def flat(self) -> Iterator[int]:
        for row in self.values:
            yield from row

    def total(self) -> int:
        return sum(self.flat())


@lru_cache(maxsize=None)
def bracket_table(m: int) -> BracketTable:
    """Full grid for a given m, built once and shared (immutable)."""
    if m < 0:
        raise ValueError("bracket_table requires m >= 0")
    values = tuple(
        tuple(bracket(i, j, m) for j in range(m + 1)) for i in range(m + 1)
    )
    return BracketTable(m=m, values=values)


def _bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact by the Bareiss identity: prev always divides evenly.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def bracket_determinant(m: int) -> int:
    """Determinant of the full grid, by exact fraction-free elimination."""
    return _bareiss_determinant(bracket_table(m).values)


def bracket_determinant_closed_form(m: int) -> int:
    """(2m+1)!^(m+1) / (0! * 1! * ... * (2m+1)!), evaluated exactly.

    Companion value for cross-checking bracket_determinant; computed from
    factorials only, sharing nothing with the elimination path.
    """
    if m < 0:
        raise ValueError("requires m >= 0")
    q, r = divmod(factorial(2 * m + 1) ** (m + 1), superfactorial(2 * m + 1))
    if r:
        raise ArithmeticError(f"closed form is not an integer for m={m}")
    return q
