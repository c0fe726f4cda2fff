"""Pattern-sum inequality machinery for permutations.

For a bijection tau on {0..m}, the left side pairs every grid cell (i,j)
with the image cell (tau(i), tau(j)):

    lhs(tau) = sum over i,j of bracket(i,j,m) * bracket(tau(i),tau(j),m)

and the bound is rhs(m) = C(2m+1, m)^2, with margin = lhs - rhs >= 0.

The same cross sums, shifted down one grid size, give the leading
coefficients of the variance and covariance of occurrence counts: for
patterns of size M the coefficient of n^(2M-1) in Var(X) is

    cross_sum / ((2M-1)!)^2  -  1 / (M! (M-1)!)^2.

Margins are plain ints, coefficients and ratios are exact Fractions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Optional, Sequence

from .errors import BudgetError
from .exactmath import (
    binomial,
    brace,
    bracket_table,
    factorial,
)
from .patterns import PairKey, PermPattern, symmetry_classes_of_pairs

Tau = tuple[int, ...]

DEFAULT_MAX_ENUMERATION = 40320  # 8!, allows grids up to m = 7


def _check_tau(tau: Sequence[int]) -> Tau:
    t = tuple(tau)
    m = len(t) - 1
    if m < 0 or sorted(t) != list(range(m + 1)):
        raise ValueError(f"tau must be a bijection on 0..m, got {t!r}")
    return t


def lhs_perm(tau: Sequence[int]) -> int:
    """Left side of the pattern-sum inequality for one bijection."""
    t = _check_tau(tau)
    m = len(t) - 1
    grid = bracket_table(m).values
    total = 0
    for i in range(m + 1):
        gi = grid[i]
        gti = grid[t[i]]
        for j in range(m + 1):
            total += gi[j] * gti[t[j]]
    return total


def rhs_perm(m: int) -> int:
    """Lower bound C(2m+1, m)^2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return binomial(2 * m + 1, m) ** 2


def margin_perm(tau: Sequence[int]) -> int:
    t = _check_tau(tau)
    return lhs_perm(t) - rhs_perm(len(t) - 1)


@dataclass(frozen=True)
class InequalityReport:
    m: int
    tau: Tau
    lhs: int
    rhs: int
    margin: int


def inequality_report(tau: Sequence[int]) -> InequalityReport:
    t = _check_tau(tau)
    m = len(t) - 1
    lhs = lhs_perm(t)
    rhs = rhs_perm(m)
    return InequalityReport(m=m, tau=t, lhs=lhs, rhs=rhs, margin=lhs - rhs)


def lhs_pair(tau1: Sequence[int], tau2: Sequence[int]) -> int:
    """Pair form: both cell indices pushed through their own bijection."""
    t1, t2 = _check_tau(tau1), _check_tau(tau2)
    if len(t1) != len(t2):
        raise ValueError("tau1 and tau2 must have the same size")
    m = len(t1) - 1
    grid = bracket_table(m).values
    total = 0
    for i in range(m + 1):
        g1 = grid[t1[i]]
        g2 = grid[t2[i]]
        for j in range(m + 1):
            total += g1[t1[j]] * g2[t2[j]]
    return total


def normalized_lhs(tau: Sequence[int]) -> Fraction:
    """Left side built from the normalized cell values {i,j}_m.

    Computed directly from the brace numbers, independently of lhs_perm;
    the two are tied by lhs_perm == C(2m,m)^2 * normalized_lhs.
    """
    t = _check_tau(tau)
    m = len(t) - 1
    cells = [[brace(i, j, m) for j in range(m + 1)] for i in range(m + 1)]
    total = Fraction(0)
    for i in range(m + 1):
        for j in range(m + 1):
            total += cells[i][j] * cells[t[i]][t[j]]
    return total


def normalized_rhs(m: int) -> Fraction:
    """((2m+1)/(m+1))^2, the normalized lower bound."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return Fraction(2 * m + 1, m + 1) ** 2


def cross_sum_perm(p1: PermPattern, p2: PermPattern) -> int:
    """sum over i,j of bracket(i-1,j-1,M-1) * bracket(p1(i)-1,p2(j)-1,M-1),
    the shared numerator of the variance/covariance leading coefficients."""
    if p1.size != p2.size:
        raise ValueError("patterns must have equal length")
    m = p1.size
    grid = bracket_table(m - 1).values
    a = p1.theorem_form()
    b = p2.theorem_form()
    total = 0
    for i in range(m):
        gi = grid[i]
        ga = grid[a[i]]
        for j in range(m):
            total += gi[j] * ga[b[j]]
    return total


def _coefficient_bound(m: int) -> Fraction:
    return Fraction(1, (factorial(m) * factorial(m - 1)) ** 2)


def variance_leading_coeff(p: PermPattern) -> Fraction:
    """Coefficient of n^(2M-1) in Var(X_p) over uniform length-n permutations.

    Nonnegative for every pattern; zero only in the degenerate M=1 case,
    where the count is constant.
    """
    m = p.size
    cross = cross_sum_perm(p, p)
    return Fraction(cross, factorial(2 * m - 1) ** 2) - _coefficient_bound(m)


@dataclass(frozen=True)
class CovarianceReport:
    p1: PermPattern
    p2: PermPattern
    cross_sum: int
    leading_coefficient: Fraction
    sign: str


def _sign_of(x: Fraction) -> str:
    if x > 0:
        return "positive"
    if x < 0:
        return "negative"
    return "zero"


def covariance_leading_coeff(p1: PermPattern, p2: PermPattern) -> CovarianceReport:
    """Coefficient of n^(2M-1) in Cov(X_p1, X_p2); symmetric in (p1, p2)."""
    if p1.size != p2.size:
        raise ValueError("patterns must have equal length")
    m = p1.size
    cross = cross_sum_perm(p1, p2)
    coeff = Fraction(cross, factorial(2 * m - 1) ** 2) - _coefficient_bound(m)
    return CovarianceReport(
        p1=p1, p2=p2, cross_sum=cross, leading_coefficient=coeff, sign=_sign_of(coeff)
    )


def rearrangement_lower_bound(m: int) -> int:
    """Weakest possible cell pairing: the grid values sorted ascending dotted
    with themselves sorted descending (the rearrangement-inequality minimum).

    Valid for every tau but strictly weaker than rhs_perm for m > 0; no
    bijection actually achieves it (see is_order_reversing).
    """
    values = sorted(bracket_table(m).flat())
    return sum(a * b for a, b in zip(values, reversed(values)))


def is_order_reversing(tau: Sequence[int], m: int) -> bool:
    """True when the induced map on grid values reverses their order:
    every strict increase among cells maps to a non-increase."""
    t = _check_tau(tau)
    if len(t) - 1 != m:
        raise ValueError("tau size does not match m")
    grid = bracket_table(m).values
    cells = [(i, j) for i in range(m + 1) for j in range(m + 1)]
    for (i, j), (i2, j2) in itertools.combinations(cells, 2):
        a, b = grid[i][j], grid[i2][j2]
        if a == b:
            continue
        if a < b:
            if grid[t[i]][t[j]] < grid[t[i2]][t[j2]]:
                return False
        else:
            if grid[t[i]][t[j]] > grid[t[i2]][t[j2]]:
                return False
    return True


@dataclass(frozen=True)
class OrderReversalScan:
    m_max: int
    checked: int
    reversing: tuple[tuple[int, Tau], ...]

    @property
    def none_found(self) -> bool:
        return not self.reversing


def verify_no_order_reversal(m_max: int) -> OrderReversalScan:
    """Exhaustively confirm that no bijection reverses the grid order for
    any 1 <= m <= m_max (the trivial m=0 case is excluded by design)."""
    found = []
    checked = 0
    for m in range(1, m_max + 1):
        for tau in itertools.permutations(range(m + 1)):
            checked += 1
            if is_order_reversing(tau, m):
                found.append((m, tau))
    return OrderReversalScan(m_max=m_max, checked=checked, reversing=tuple(found))


def reverse_tau(tau: Tau) -> Tau:
    return tau[::-1]


def complement_tau(tau: Tau) -> Tau:
    m = len(tau) - 1
    return tuple(m - v for v in tau)


def symmetry_orbit(tau: Tau) -> tuple[Tau, ...]:
    """Orbit of tau under reverse/complement; margins are constant on it."""
    rev = reverse_tau(tau)
    comp = complement_tau(tau)
    return tuple(sorted({tau, rev, comp, reverse_tau(comp)}))


def canonical_tau(tau: Tau) -> Tau:
    return min(symmetry_orbit(tau))


@dataclass(frozen=True)
class ExtremalReport:
    m: int
    m_star: int
    m_lower: int
    maximizers: tuple[Tau, ...]
    minimizers: tuple[Tau, ...]
    ratio: Optional[Fraction]  # m_lower / m_star; None when m_star == 0


_EMPTY_STATE = (None, None, (), ())


def _scan_chunk(taus: Iterable[Tau]) -> tuple:
    lo = hi = None
    argmin: list[Tau] = []
    argmax: list[Tau] = []
    for t in taus:
        margin = lhs_perm(t) - rhs_perm(len(t) - 1)
        if lo is None or margin < lo:
            lo, argmin = margin, [t]
        elif margin == lo:
            argmin.append(t)
        if hi is None or margin > hi:
            hi, argmax = margin, [t]
        elif margin == hi:
            argmax.append(t)
    return (lo, hi, tuple(argmin), tuple(argmax))


def _merge_states(a: tuple, b: tuple) -> tuple:
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    if a[0] < b[0]:
        lo, argmin = a[0], a[2]
    elif b[0] < a[0]:
        lo, argmin = b[0], b[2]
    else:
        lo, argmin = a[0], a[2] + b[2]
    if a[1] > b[1]:
        hi, argmax = a[1], a[3]
    elif b[1] > a[1]:
        hi, argmax = b[1], b[3]
    else:
        hi, argmax = a[1], a[3] + b[3]
    return (lo, hi, argmin, argmax)


def _chunked(stream: Iterator[Tau], size: int) -> Iterator[list[Tau]]:
    while True:
        block = list(itertools.islice(stream, size))
        if not block:
            return
        yield block


def extremal_search(
    m: int,
    *,
    prune: bool = True,
    workers: int = 1,
    max_enumeration: int = DEFAULT_MAX_ENUMERATION,
) -> ExtremalReport:
    """Exact extreme margins over all bijections on {0..m}.

    With prune=True only one representative per reverse/complement orbit is
    evaluated (margins are orbit-invariant) and the extremal lists are
    re-expanded afterwards; prune=False scans everything.  Both paths must
    return identical reports.  The scan is split into chunks and reduced
    associatively, so the result does not depend on the chunk count.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    total = factorial(m + 1)
    if total > max_enumeration:
        raise BudgetError(
            f"extremal scan refused: (m+1)! = {total} exceeds the "
            f"enumeration budget {max_enumeration}"
        )
    if workers < 1:
        raise ValueError("workers must be >= 1")
    stream: Iterator[Tau] = itertools.permutations(range(m + 1))
    if prune:
        stream = (t for t in stream if canonical_tau(t) == t)
    chunk_size = max(1, -(-total // workers))
    state = reduce(
        _merge_states,
        (_scan_chunk(block) for block in _chunked(stream, chunk_size)),
        _EMPTY_STATE,
    )
    lo, hi, argmin, argmax = state
    assert lo is not None and hi is not None
    if prune:
        argmin = tuple(t for rep in argmin for t in symmetry_orbit(rep))
        argmax = tuple(t for rep in argmax for t in symmetry_orbit(rep))
    return ExtremalReport(
        m=m,
        m_star=hi,
        m_lower=lo,
        maximizers=tuple(sorted(set(argmax))),
        minimizers=tuple(sorted(set(argmin))),
        ratio=Fraction(lo, hi) if hi != 0 else None,
    )


@dataclass(frozen=True)
class MarginRatioRow:
    m: int
    min_margin: int
    m_lower: int
    m_star: int
    ratio: Optional[Fraction]
    violation: bool  # a nonpositive margin would contradict the bound


def decimal_string(x: Fraction, places: int = 6) -> str:
    """Exact fixed-point rendering of a nonnegative rational (truncated)."""
    if x < 0:
        return "-" + decimal_string(-x, places)
    scaled = x.numerator * 10**places // x.denominator
    digits = str(scaled).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


def margin_ratio_table(
    m_max: int,
    *,
    workers: int = 1,
    max_enumeration: int = DEFAULT_MAX_ENUMERATION,
) -> list[MarginRatioRow]:
    """Per-m extremal margins and their exact ratio, m = 1..m_max.

    Strict positivity of every margin and a shrinking ratio are the expected
    (conjectured, unproven) behavior; the table only records evidence and
    flags any would-be violation of the proven bound.
    """
    rows = []
    for m in range(1, m_max + 1):
        rep = extremal_search(m, workers=workers, max_enumeration=max_enumeration)
        rows.append(
            MarginRatioRow(
                m=m,
                min_margin=rep.m_lower,
                m_lower=rep.m_lower,
                m_star=rep.m_star,
                ratio=rep.ratio,
                violation=rep.m_lower < 0,
            )
        )
    return rows


@dataclass(frozen=True)
class CovarianceClassRow:
    representative: PairKey
    members: tuple[PairKey, ...]
    cross_sum: int
    coefficient: Fraction
    sign: str


def covariance_class_table(m: int) -> tuple[list[CovarianceClassRow], list[list[PairKey]]]:
    """All symmetry classes of size-m pattern pairs with their covariance
    leading coefficients, sorted by decreasing coefficient (ties broken by
    representative).

    Returns (rows, ties) where ties lists the representatives of any classes
    sharing one coefficient value; tied classes have no canonical order and
    must be surfaced rather than silently arranged.
    """
    rows = []
    for cls in symmetry_classes_of_pairs(m):
        a, b = cls.representative
        rep = covariance_leading_coeff(PermPattern(a), PermPattern(b))
        rows.append(
            CovarianceClassRow(
                representative=cls.representative,
                members=cls.members,
                cross_sum=rep.cross_sum,
                coefficient=rep.leading_coefficient,
                sign=rep.sign,
            )
        )
    rows.sort(key=lambda r: (-r.coefficient, r.representative))
    by_value: dict[Fraction, list[PairKey]] = {}
    for row in rows:
        by_value.setdefault(row.coefficient, []).append(row.representative)
    ties = [reps for reps in by_value.values() if len(reps) > 1]
    return rows, ties
