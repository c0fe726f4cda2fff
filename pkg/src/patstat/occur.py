"""Occurrence counting and exact/sampled moments of occurrence counts.

An occurrence of a pattern in an ambient sequence is a strictly increasing
choice of positions whose subsequence is order-isomorphic to the pattern.
For word patterns, order-isomorphism preserves equalities in both directions:
ambient[a] == ambient[b] exactly when pattern[a] == pattern[b].

Exhaustive moments enumerate the whole sample space (all n! permutations or
all k^n words); they are the desk-scale ground truth against which the closed
formulas elsewhere in the package are verified.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .errors import BudgetError
from .exactmath import binomial, factorial
from .patterns import Pattern, PermPattern, WordPattern

DEFAULT_MAX_AMBIENT = 9
DEFAULT_MAX_WORD_SPACE = 10**7


@dataclass(frozen=True)
class MomentReport:
    """First two moments of the occurrence count, exact or sampled.

    For exhaustive reports sample_count is None and
    variance == second_moment - mean**2 holds exactly.  For sampled reports
    variance is the unbiased sample variance (None when samples == 1).
    """

    pattern: str
    n: int
    k: Optional[int]
    mean: Fraction
    second_moment: Fraction
    variance: Optional[Fraction]
    sample_count: Optional[int] = None


def _pattern_signs(letters: Sequence[int]) -> list[list[int]]:
    m = len(letters)
    signs = [[0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            signs[a][b] = (letters[a] > letters[b]) - (letters[a] < letters[b])
    return signs


def count_occurrences(pattern: Pattern, ambient: Sequence[int]) -> int:
    """Number of position subsets whose subsequence matches the pattern.

    Enumerates index subsets with early pruning: a prefix is extended only
    while it stays order-isomorphic to the pattern prefix.  A pattern longer
    than the ambient sequence has 0 occurrences (not an error).
    """
    if any(x < 1 for x in ambient):
        raise ValueError("ambient letters must be positive integers")
    if isinstance(pattern, PermPattern) and len(set(ambient)) != len(ambient):
        raise ValueError("ambient must be a permutation (distinct letters)")
    pat = pattern.letters
    m, n = len(pat), len(ambient)
    if m > n:
        return 0
    signs = _pattern_signs(pat)
    chosen: list[int] = []
    count = 0

    def extend(slot: int, start: int) -> None:
        nonlocal count
        if slot == m:
            count += 1
            return
        row = signs[slot]
        # Leave room for the remaining m - slot - 1 positions.
        for pos in range(start, n - (m - slot) + 1):
            v = ambient[pos]
            ok = True
            for s in range(slot):
                w = chosen[s]
                if ((v > w) - (v < w)) != row[s]:
                    ok = False
                    break
            if ok:
                chosen.append(v)
                extend(slot + 1, pos + 1)
                chosen.pop()

    extend(0, 0)
    return count


def expectation_formula_perm(m: int, n: int) -> Fraction:
    """Mean occurrence count of any size-m pattern over uniform length-n
    permutations: C(n, m) / m!."""
    if m < 1:
        raise ValueError("pattern size must be >= 1")
    return Fraction(binomial(n, m), factorial(m))


def expectation_formula_word(m: int, l: int, n: int, k: int) -> Fraction:
    """Mean occurrence count of a surjective size-m pattern over alphabet
    {1..l} in uniform words of [k]^n: C(k, l) * C(n, m) / k^m."""
    if not (1 <= l <= m):
        raise ValueError("need 1 <= l <= m")
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return Fraction(binomial(k, l) * binomial(n, m), k**m)


def _all_perm_patterns(m: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(1, m + 1)))


def _comparison_mask(values: Sequence[int], pairs: Sequence[tuple[int, int]]) -> int:
    mask = 0
    for bit, (a, b) in enumerate(pairs):
        if values[a] < values[b]:
            mask |= 1 << bit
    return mask


@lru_cache(maxsize=None)
def _perm_count_sweep(m: int, n: int) -> dict[tuple[int, ...], tuple[int, int]]:
    """Occurrence-count sum and sum of squares for EVERY size-m pattern,
    over all n! permutations, in one shared pass.

    One sweep classifies each size-m position subset of each permutation by
    the pattern it realizes, so per-pattern exhaustive moments cost a single
    enumeration of S_n regardless of how many patterns are queried.
    """
    pats = _all_perm_patterns(m)
    npat = len(pats)
    pairs = list(itertools.combinations(range(m), 2))
    table: list[int] = [-1] * (1 << len(pairs))
    for idx, p in enumerate(pats):
        table[_comparison_mask(p, pairs)] = idx
    subs = list(itertools.combinations(range(n), m))
    totals = [0] * npat
    totals_sq = [0] * npat
    if m == 3:
        # Hot path: the n=9 sweep visits ~30M subsets.
        tab = table
        for sigma in itertools.permutations(range(n)):
            counts = [0] * npat
            for a, b, c in subs:
                x = sigma[a]
                y = sigma[b]
                z = sigma[c]
                counts[tab[(x < y) + ((x < z) << 1) + ((y < z) << 2)]] += 1
            for idx in range(npat):
                ci = counts[idx]
                totals[idx] += ci
                totals_sq[idx] += ci * ci
    else:
        for sigma in itertools.permutations(range(n)):
            counts = [0] * npat
            for sub in subs:
                values = [sigma[p] for p in sub]
                counts[table[_comparison_mask(values, pairs)]] += 1
            for idx in range(npat):
                ci = counts[idx]
                totals[idx] += ci
                totals_sq[idx] += ci * ci
    return {p: (totals[i], totals_sq[i]) for i, p in enumerate(pats)}


def exhaustive_moments_perm(
    pattern: PermPattern, n: int, *, max_n: int = DEFAULT_MAX_AMBIENT
) -> MomentReport:
    """Exact moments over all n! permutations of {1..n}."""
    if n > max_n:
        raise BudgetError(
            f"exhaustive enumeration of S_{n} refused: n exceeds the "
            f"ambient bound {max_n}"
        )
    if n < 0:
        raise ValueError("n must be >= 0")
    m = pattern.size
    space = factorial(n)
    if m > n:
        total, total_sq = 0, 0
    else:
        total, total_sq = _perm_count_sweep(m, n)[pattern.letters]
    mean = Fraction(total, space)
    second = Fraction(total_sq, space)
    return MomentReport(
        pattern=pattern.text(),
        n=n,
        k=None,
        mean=mean,
        second_moment=second,
        variance=second - mean * mean,
    )


def exhaustive_moments_word(
    pattern: WordPattern,
    n: int,
    k: int,
    *,
    max_space: int = DEFAULT_MAX_WORD_SPACE,
) -> MomentReport:
    """Exact moments over all k^n words with letters in {1..k}."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    space = k**n
    if space > max_space:
        raise BudgetError(
            f"exhaustive enumeration of [{k}]^{n} refused: k^n = {space} "
            f"exceeds the word-space bound {max_space}"
        )
    total = 0
    total_sq = 0
    for word in itertools.product(range(1, k + 1), repeat=n):
        c = count_occurrences(pattern, word)
        total += c
        total_sq += c * c
    mean = Fraction(total, space)
    second = Fraction(total_sq, space)
    return MomentReport(
        pattern=pattern.text(),
        n=n,
        k=k,
        mean=mean,
        second_moment=second,
        variance=second - mean * mean,
    )


def sample_moments(
    pattern: Pattern,
    n: int,
    k: Optional[int] = None,
    *,
    samples: int,
    seed: int,
) -> MomentReport:
    """Monte Carlo moments from uniform random ambients, reproducible by seed.

    Uses one Mersenne-Twister generator (random.Random(seed)); permutations
    come from the unbiased Fisher-Yates shuffle, words from independent
    uniform letters.  Variance is the unbiased sample variance, or None when
    samples == 1 (a single draw carries no spread information).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if isinstance(pattern, WordPattern) and k is None:
        raise ValueError("word sampling requires the alphabet size k")
    rng = random.Random(seed)
    total = 0
    total_sq = 0
    if isinstance(pattern, PermPattern):
        base = list(range(1, n + 1))
        for _ in range(samples):
            rng.shuffle(base)
            c = count_occurrences(pattern, base)
            total += c
            total_sq += c * c
    else:
        assert k is not None
        for _ in range(samples):
            word = [rng.randint(1, k) for _ in range(n)]
            c = count_occurrences(pattern, word)
            total += c
            total_sq += c * c
    mean = Fraction(total, samples)
    second = Fraction(total_sq, samples)
    if samples == 1:
        variance = None
    else:
        variance = Fraction(samples * total_sq - total * total, samples * (samples - 1))
    return MomentReport(
        pattern=pattern.text(),
        n=n,
        k=k,
        mean=mean,
        second_moment=second,
        variance=variance,
        sample_count=samples,
    )
