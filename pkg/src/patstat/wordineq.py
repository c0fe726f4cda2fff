"""Pattern-sum inequality machinery for words (repeated letters allowed).

The word form pairs the size-m grid with the smaller size-l grid through a
surjection tau of {0..m} onto {0..l}:

    lhs(tau) = sum over i,j of bracket(i,j,m) * bracket(tau(i),tau(j),l)
    rhs(m,l) = (2m+1)! (2l+1)! / ((m!)^2 ((l+1)!)^2)

with margin = lhs - rhs >= 0, and equality exactly when l = 0 (constant
patterns).  For l = m the surjection is a bijection and everything reduces
to the permutation machinery.

The counting side: f_function(tau, k) counts decomposition triples
(rho, S1, S2) where rho in [k]^(2M-1) is covered by two position sets whose
restrictions both realize tau.  Its leading coefficient in k ties back to
the cross sums that control variance and covariance signs for words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import BudgetError
from .exactmath import binomial, bracket_table, factorial, multinomial
from .patterns import WordPattern, count_word_patterns, enumerate_word_patterns

Tau = tuple[int, ...]

DEFAULT_MAX_ENUMERATION = 50000


def _check_word_tau(tau: Sequence[int], l: Optional[int]) -> tuple[Tau, int]:
    t = tuple(tau)
    if not t:
        raise ValueError("tau must be nonempty")
    inferred = max(t)
    l = inferred if l is None else l
    if min(t) < 0 or set(t) != set(range(l + 1)):
        raise ValueError(f"tau must map 0..{len(t) - 1} onto 0..{l}, got {t!r}")
    return t, l


def lhs_word(tau: Sequence[int], l: Optional[int] = None) -> int:
    """Left side for a surjection of {0..m} onto {0..l} (l inferred from tau
    unless given)."""
    t, l = _check_word_tau(tau, l)
    m = len(t) - 1
    big = bracket_table(m).values
    small = bracket_table(l).values
    total = 0
    for i in range(m + 1):
        gi = big[i]
        si = small[t[i]]
        for j in range(m + 1):
            total += gi[j] * si[t[j]]
    return total


def rhs_word(m: int, l: int) -> Fraction:
    """(2m+1)! (2l+1)! / ((m!)^2 ((l+1)!)^2), exact.

    Reduces to C(2m+1, m)^2 when l = m.  Not an integer in general, e.g.
    (m,l) = (3,2) gives 1400/3.
    """
    if not (0 <= l <= m):
        raise ValueError("need 0 <= l <= m")
    return Fraction(
        factorial(2 * m + 1) * factorial(2 * l + 1),
        factorial(m) ** 2 * factorial(l + 1) ** 2,
    )


def margin_word(tau: Sequence[int], l: Optional[int] = None) -> Fraction:
    t, l = _check_word_tau(tau, l)
    return Fraction(lhs_word(t, l)) - rhs_word(len(t) - 1, l)


@dataclass(frozen=True)
class WordInequalityReport:
    m: int
    l: int
    tau: Tau
    lhs: int
    rhs: Fraction
    margin: Fraction


def word_inequality_report(tau: Sequence[int], l: Optional[int] = None) -> WordInequalityReport:
    t, l = _check_word_tau(tau, l)
    m = len(t) - 1
    lhs = lhs_word(t, l)
    rhs = rhs_word(m, l)
    return WordInequalityReport(m=m, l=l, tau=t, lhs=lhs, rhs=rhs, margin=lhs - rhs)


def h_function(tau: WordPattern, big_l: int, r: int, i: int, j: int) -> int:
    """Ways to distribute the letters below and above a shared value.

    Product of two trinomial coefficients; vanishes whenever any part is
    negative, so callers may sum over rectangular (big_l, r) ranges.  i, j
    are 1-based positions in the pattern.
    """
    if not (1 <= i <= tau.size and 1 <= j <= tau.size):
        raise ValueError("positions i, j must be in 1..M")
    l = tau.alphabet_size
    ti = tau.letters[i - 1]
    tj = tau.letters[j - 1]
    below = multinomial((r - ti, r - tj, ti + tj - 1 - r))
    above = multinomial((big_l - r + ti, big_l - r + tj, l - big_l + r - ti - tj))
    return below * above


@dataclass(frozen=True)
class DecompositionCount:
    pattern: WordPattern
    k: int
    value: int


def f_function(tau: WordPattern, k: int) -> DecompositionCount:
    """Number of decomposition triples (rho, S1, S2) over rho in [k]^(2M-1).

    Counts ordered pairs of position sets, not distinct sequences rho: one
    rho contributes once per valid (S1, S2) split.  Verified against the
    exhaustive scan in the oracle module.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    m = tau.size
    l = tau.alphabet_size
    grid = bracket_table(m - 1).values
    total = 0
    for big_l in range(l):
        outer = binomial(k, l + big_l)
        if outer == 0:
            continue
        inner = 0
        for r in range(l + big_l + 1):
            for i in range(1, m + 1):
                gi = grid[i - 1]
                for j in range(1, m + 1):
                    h = h_function(tau, big_l, r, i, j)
                    if h:
                        inner += gi[j - 1] * h
        total += outer * inner
    return DecompositionCount(pattern=tau, k=k, value=total)


def cross_sum_word(p1: WordPattern, p2: WordPattern) -> int:
    """sum over i,j of bracket(i-1,j-1,M-1) * bracket(p1(i)-1,p2(j)-1,L-1)."""
    if p1.size != p2.size or p1.alphabet_size != p2.alphabet_size:
        raise ValueError("patterns must share length and alphabet")
    m = p1.size
    l = p1.alphabet_size
    big = bracket_table(m - 1).values
    small = bracket_table(l - 1).values
    a = p1.theorem_form()
    b = p2.theorem_form()
    total = 0
    for i in range(m):
        gi = big[i]
        sa = small[a[i]]
        for j in range(m):
            total += gi[j] * sa[b[j]]
    return total


@dataclass(frozen=True)
class WordDiscriminantReport:
    p1: WordPattern
    p2: WordPattern
    cross_sum: int
    discriminant: Fraction
    sign: str


def word_discriminant(p1: WordPattern, p2: WordPattern) -> WordDiscriminantReport:
    """Sign of the covariance (variance when p1 == p2) of word occurrence
    counts, via cross_sum - (2M-1)!(2L-1)! / (((M-1)!)^2 (L!)^2).

    Equals the margin of the 0-based image of the pattern pair one grid size
    down: cross_sum is lhs_word of the theorem form, the subtrahend is
    rhs_word(M-1, L-1).
    """
    cross = cross_sum_word(p1, p2)
    m = p1.size
    l = p1.alphabet_size
    bound = rhs_word(m - 1, l - 1)
    disc = Fraction(cross) - bound
    if disc > 0:
        sign = "positive"
    elif disc < 0:
        sign = "negative"
    else:
        sign = "zero"
    return WordDiscriminantReport(
        p1=p1, p2=p2, cross_sum=cross, discriminant=disc, sign=sign
    )


@dataclass(frozen=True)
class WordExtremalReport:
    m: int
    l: int
    pattern_count: int
    min_margin: Fraction
    max_margin: Fraction
    minimizers: tuple[Tau, ...]
    maximizers: tuple[Tau, ...]
    strict: bool  # every margin strictly positive


def word_extremal_search(
    m: int,
    l: int,
    *,
    workers: int = 1,
    max_enumeration: int = DEFAULT_MAX_ENUMERATION,
) -> WordExtremalReport:
    """Exact extreme margins over all surjections of {0..m} onto {0..l}.

    The scan is chunked and merged associatively, so the report is identical
    for any workers value.  Minimizer and maximizer lists are complete and
    lexicographic.
    """
    if not (0 <= l <= m):
        raise ValueError("need 0 <= l <= m")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    total = count_word_patterns(m + 1, l + 1)
    if total > max_enumeration:
        raise BudgetError(
            f"word extremal scan refused: {total} surjective patterns exceed "
            f"the enumeration budget {max_enumeration}"
        )
    rhs = rhs_word(m, l)
    lo = hi = None
    argmin: list[Tau] = []
    argmax: list[Tau] = []
    chunk_size = max(1, -(-total // workers))
    stream = (p.theorem_form() for p in enumerate_word_patterns(m + 1, l + 1))
    while True:
        block = list(itertools.islice(stream, chunk_size))
        if not block:
            break
        c_lo = c_hi = None
        c_argmin: list[Tau] = []
        c_argmax: list[Tau] = []
        for t in block:
            margin = lhs_word(t, l) - rhs
            if c_lo is None or margin < c_lo:
                c_lo, c_argmin = margin, [t]
            elif margin == c_lo:
                c_argmin.append(t)
            if c_hi is None or margin > c_hi:
                c_hi, c_argmax = margin, [t]
            elif margin == c_hi:
                c_argmax.append(t)
        if lo is None or c_lo < lo:
            lo, argmin = c_lo, c_argmin
        elif c_lo == lo:
            argmin.extend(c_argmin)
        if hi is None or c_hi > hi:
            hi, argmax = c_hi, c_argmax
        elif c_hi == hi:
            argmax.extend(c_argmax)
    assert lo is not None and hi is not None
    return WordExtremalReport(
        m=m,
        l=l,
        pattern_count=total,
        min_margin=lo,
        max_margin=hi,
        minimizers=tuple(sorted(argmin)),
        maximizers=tuple(sorted(argmax)),
        strict=lo > 0,
    )
