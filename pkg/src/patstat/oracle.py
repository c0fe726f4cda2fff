"""Independent brute-force verifiers for the closed forms.

Everything here is deliberately naive: full enumeration, no pruning, and no
code shared with the formula-driven modules it checks.  A bug in a closed
form cannot validate itself through these paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import BudgetError, FitMismatchError
from .patterns import Pattern, PermPattern, WordPattern

DEFAULT_MAX_PERM_DECOMP = 4
DEFAULT_MAX_WORD_DECOMP = 3


@dataclass(frozen=True)
class LatticePath:
    """A monotone northeast path: 2m unit steps, m East and m North."""

    steps: tuple[str, ...]

    def points(self) -> list[tuple[int, int]]:
        """The 2m+1 lattice points visited, starting at (0,0)."""
        x = y = 0
        visited = [(0, 0)]
        for step in self.steps:
            if step == "E":
                x += 1
            else:
                y += 1
            visited.append((x, y))
        return visited


@lru_cache(maxsize=None)
def enumerate_paths(m: int) -> tuple[LatticePath, ...]:
    """All C(2m, m) paths from (0,0) to (m,m), by explicit construction."""
    if m < 0:
        raise ValueError("m must be >= 0")
    paths = []
    for east in itertools.combinations(range(2 * m), m):
        steps = ["N"] * (2 * m)
        for pos in east:
            steps[pos] = "E"
        paths.append(LatticePath(tuple(steps)))
    return tuple(paths)


def paths_through(m: int, point: tuple[int, int]) -> int:
    """How many enumerated paths pass through the given point."""
    i, j = point
    if not (0 <= i <= m and 0 <= j <= m):
        raise ValueError(f"point {point} outside the (m+1) x (m+1) grid")
    return sum(1 for path in enumerate_paths(m) if (i, j) in path.points())


def path_pair_lhs(m: int, tau: Sequence[int]) -> int:
    """Pairs of paths (P through (i,j), Q through (tau(i),tau(j))), summed
    over all cells, counted entirely from the path enumeration."""
    if sorted(tau) != list(range(m + 1)):
        raise ValueError(f"tau must be a bijection on 0..{m}")
    total = 0
    for i in range(m + 1):
        for j in range(m + 1):
            total += paths_through(m, (i, j)) * paths_through(m, (tau[i], tau[j]))
    return total


def _ranks_distinct(values: Sequence[int]) -> tuple[int, ...]:
    return tuple(1 + sum(w < v for w in values) for v in values)


def _ranks_dense(values: Sequence[int]) -> tuple[int, ...]:
    order = {v: r for r, v in enumerate(sorted(set(values)), start=1)}
    return tuple(order[v] for v in values)


def _split_pairs(size: int, m: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ordered (S1, S2) position pairs: |S1| = |S2| = m, union = all of
    0..size-1 (hence exactly one shared position)."""
    positions = range(size)
    out = []
    for s1 in itertools.combinations(positions, m):
        rest = tuple(p for p in positions if p not in s1)
        for shared in s1:
            s2 = tuple(sorted(rest + (shared,)))
            out.append((s1, s2))
    return out


@lru_cache(maxsize=None)
def _perm_decomposition_table(m: int) -> dict[tuple, int]:
    """counter[(pat1, pat2)] = number of triples (rho, S1, S2) with rho in
    S_{2m-1} and rho restricted to S1, S2 realizing pat1, pat2."""
    size = 2 * m - 1
    splits = _split_pairs(size, m)
    counter: dict[tuple, int] = {}
    for rho in itertools.permutations(range(1, size + 1)):
        for s1, s2 in splits:
            key = (
                _ranks_distinct([rho[p] for p in s1]),
                _ranks_distinct([rho[p] for p in s2]),
            )
            counter[key] = counter.get(key, 0) + 1
    return counter


@lru_cache(maxsize=None)
def _word_decomposition_table(m: int, k: int) -> dict[tuple, int]:
    """Same as the permutation table, with rho ranging over [k]^(2m-1) and
    restrictions standardized with ties kept."""
    size = 2 * m - 1
    splits = _split_pairs(size, m)
    counter: dict[tuple, int] = {}
    for rho in itertools.product(range(1, k + 1), repeat=size):
        for s1, s2 in splits:
            key = (
                _ranks_dense([rho[p] for p in s1]),
                _ranks_dense([rho[p] for p in s2]),
            )
            counter[key] = counter.get(key, 0) + 1
    return counter


def decomposition_cross_count(
    p1: Pattern,
    p2: Pattern,
    k: int | None = None,
    *,
    max_perm_size: int = DEFAULT_MAX_PERM_DECOMP,
    max_word_size: int = DEFAULT_MAX_WORD_DECOMP,
) -> int:
    """Triples (rho, S1, S2) covering all of 0..2M-2 with rho(S1) matching p1
    and rho(S2) matching p2, counted by exhaustive scan."""
    if type(p1) is not type(p2) or p1.size != p2.size:
        raise ValueError("patterns must share kind and length")
    m = p1.size
    if isinstance(p1, PermPattern):
        if m > max_perm_size:
            raise BudgetError(
                f"decomposition scan refused: pattern size {m} exceeds the "
                f"permutation bound {max_perm_size}"
            )
        table = _perm_decomposition_table(m)
        return table.get((p1.letters, p2.letters), 0)
    if k is None or k < 1:
        raise ValueError("word decomposition requires an alphabet size k >= 1")
    if m > max_word_size:
        raise BudgetError(
            f"decomposition scan refused: pattern size {m} exceeds the "
            f"word bound {max_word_size}"
        )
    table = _word_decomposition_table(m, k)
    return table.get((p1.letters, p2.letters), 0)


def decomposition_count(
    pattern: Pattern,
    k: int | None = None,
    *,
    max_perm_size: int = DEFAULT_MAX_PERM_DECOMP,
    max_word_size: int = DEFAULT_MAX_WORD_DECOMP,
) -> int:
    """Decomposition triples (rho, S1, S2) with both restrictions matching
    the same pattern; the diagonal of decomposition_cross_count."""
    return decomposition_cross_count(
        pattern,
        pattern,
        k,
        max_perm_size=max_perm_size,
        max_word_size=max_word_size,
    )


Number = Union[int, Fraction]


@dataclass(frozen=True)
class ExactPolynomial:
    """Polynomial with exact rational coefficients; index = degree.

    Trailing zero coefficients are trimmed, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, d: int) -> Fraction:
        if 0 <= d < len(self.coefficients):
            return self.coefficients[d]
        return Fraction(0)

    def evaluate(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def fit_exact_polynomial(
    points: Iterable[tuple[Number, Number]], degree: int
) -> ExactPolynomial:
    """Interpolate exactly through the points by Newton divided differences.

    Uses the first degree+1 points to build the polynomial, then re-checks
    EVERY supplied point; over-determined data that disagrees raises
    FitMismatchError (a wrong-degree hypothesis or bad input data).
    """
    pts = [(x, Fraction(y)) for x, y in points]
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if len(pts) < degree + 1:
        raise ValueError(f"need at least {degree + 1} points for degree {degree}")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must have distinct x values")

    use = degree + 1
    dd = [y for _, y in pts[:use]]
    for level in range(1, use):
        for i in range(use - 1, level - 1, -1):
            dd[i] = Fraction(dd[i] - dd[i - 1], xs[i] - xs[i - level])

    coeffs = [dd[use - 1]]
    for i in range(use - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for d, c in enumerate(coeffs):
            shifted[d] -= xs[i] * c
        shifted[0] += dd[i]
        coeffs = shifted

    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    poly = ExactPolynomial(tuple(coeffs))

    for x, y in pts:
        got = poly.evaluate(x)
        if got != y:
            raise FitMismatchError(
                f"point (x={x}, y={y}) disagrees with the degree-{degree} "
                f"fit (predicted {got}); the data is not a single polynomial "
                f"of that degree"
            )
    return poly
