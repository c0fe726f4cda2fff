"""Pattern value types, parsing, symmetries and exhaustive enumeration.

Two pattern kinds exist.  A :class:`PermPattern` of size M holds each letter
1..M exactly once.  A :class:`WordPattern` of size M over alphabet {1..L}
may repeat letters but must use every letter of the alphabet at least once.

Both kinds carry a 0-based "function view" (``theorem_form``): position i in
{0..M-1} maps to ``letters[i] - 1``.  The 1-based letter tuple is the
canonical external representation; the 0-based view is derived, never stored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import PatternError
from .exactmath import stirling2


@dataclass(frozen=True, order=True)
class PermPattern:
    """A permutation pattern: letters 1..M in some order."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.letters)
        if m < 1 or sorted(self.letters) != list(range(1, m + 1)):
            raise PatternError(
                f"not a permutation of 1..{m}: {self.letters!r}"
            )

    @property
    def size(self) -> int:
        return len(self.letters)

    def theorem_form(self) -> tuple[int, ...]:
        """0-based bijection on {0..M-1}: position i maps to letters[i]-1."""
        return tuple(v - 1 for v in self.letters)

    def reverse(self) -> "PermPattern":
        return PermPattern(self.letters[::-1])

    def complement(self) -> "PermPattern":
        m = len(self.letters)
        return PermPattern(tuple(m + 1 - v for v in self.letters))

    def text(self) -> str:
        return format_letters(self.letters)

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True, order=True)
class WordPattern:
    """A word pattern: length-M sequence using every letter of {1..L}."""

    letters: tuple[int, ...]
    alphabet_size: int = 0  # 0 means "infer from letters"

    def __post_init__(self) -> None:
        if not self.letters:
            raise PatternError("empty word pattern")
        low, high = min(self.letters), max(self.letters)
        if low < 1:
            raise PatternError(f"letters must be >= 1: {self.letters!r}")
        size = self.alphabet_size or high
        object.__setattr__(self, "alphabet_size", size)
        missing = set(range(1, size + 1)) - set(self.letters)
        if high > size or missing:
            raise PatternError(
                f"{format_letters(self.letters)} is not onto 1..{size}"
                + (f" (missing {sorted(missing)})" if missing else "")
            )

    @property
    def size(self) -> int:
        return len(self.letters)

    def theorem_form(self) -> tuple[int, ...]:
        """0-based surjection {0..M-1} onto {0..L-1}."""
        return tuple(v - 1 for v in self.letters)

    def reverse(self) -> "WordPattern":
        return WordPattern(self.letters[::-1], self.alphabet_size)

    def complement(self) -> "WordPattern":
        l = self.alphabet_size
        return WordPattern(tuple(l + 1 - v for v in self.letters), l)

    def text(self) -> str:
        return format_letters(self.letters)

    def __str__(self) -> str:
        return self.text()


Pattern = Union[PermPattern, WordPattern]


def format_letters(letters: tuple[int, ...]) -> str:
    """Digit string when all letters fit one digit, comma-separated otherwise."""
    if max(letters) <= 9:
        return "".join(str(v) for v in letters)
    return ",".join(str(v) for v in letters)


def parse_pattern(text: str, kind: str = "perm") -> Pattern:
    """Parse "132" / "1121" digit form or "10,2,3" comma form.

    kind is "perm" or "word"; perm patterns must use each of 1..M once,
    word patterns must use every letter of their alphabet.
    """
    if not text:
        raise PatternError("empty pattern text")
    try:
        if "," in text:
            letters = tuple(int(tok) for tok in text.split(","))
        else:
            letters = tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise PatternError(f"malformed pattern text {text!r}") from exc
    if kind == "perm":
        return PermPattern(letters)
    if kind == "word":
        return WordPattern(letters)
    raise PatternError(f"unknown pattern kind {kind!r}")


def enumerate_perm_patterns(m: int) -> Iterator[PermPattern]:
    """All M! permutation patterns of size m, lexicographic."""
    if m < 1:
        raise PatternError("pattern size must be >= 1")
    for letters in itertools.permutations(range(1, m + 1)):
        yield PermPattern(letters)


def enumerate_word_patterns(m: int, l: int) -> Iterator[WordPattern]:
    """All surjective word patterns of length m over {1..l}, lexicographic.

    Yields exactly l! * stirling2(m, l) patterns.
    """
    if l < 1 or l > m:
        raise PatternError(f"alphabet size must satisfy 1 <= l <= m, got l={l}, m={m}")
    full = frozenset(range(1, l + 1))
    for letters in itertools.product(range(1, l + 1), repeat=m):
        if frozenset(letters) == full:
            yield WordPattern(letters, l)


def count_word_patterns(m: int, l: int) -> int:
    """l! * stirling2(m, l), the number of surjective patterns."""
    out = stirling2(m, l)
    for i in range(2, l + 1):
        out *= i
    return out


PairKey = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class SymmetryClass:
    """Orbit of an unordered pattern pair under simultaneous reverse/complement.

    representative is the lexicographically least member pair; members are all
    distinct pairs of the orbit, sorted.
    """

    representative: PairKey
    members: tuple[PairKey, ...]


def _pair_key(p: Pattern, q: Pattern) -> PairKey:
    a, b = sorted((p.letters, q.letters))
    return (a, b)


def _pair_orbit(p: Pattern, q: Pattern) -> set[PairKey]:
    images = set()
    for g in (
        lambda x: x,
        lambda x: x.reverse(),
        lambda x: x.complement(),
        lambda x: x.reverse().complement(),
    ):
        images.add(_pair_key(g(p), g(q)))
    return images


def symmetry_classes_of_pairs(m: int) -> list[SymmetryClass]:
    """Unordered pattern pairs of size m grouped under simultaneous symmetry.

    Both members of a pair are transformed together (covariance is preserved
    by exactly these simultaneous maps), so the orbit of {p, q} is
    { {g(p), g(q)} : g in the reverse/complement group }.
    """
    patterns = list(enumerate_perm_patterns(m))
    seen: set[PairKey] = set()
    classes: list[SymmetryClass] = []
    for p, q in itertools.combinations_with_replacement(patterns, 2):
        key = _pair_key(p, q)
        if key in seen:
            continue
        orbit = _pair_orbit(p, q)
        seen |= orbit
        members = tuple(sorted(orbit))
        classes.append(SymmetryClass(representative=members[0], members=members))
    classes.sort(key=lambda c: c.representative)
    return classes
