"""Named verification suites: every closed form against its brute-force oracle.

Each suite returns granular Check records; the CLI renders them one per line
and exits nonzero if any fails.  The acceptance test module drives exactly
these functions, so `patstat verify` and `pytest tests/test_acceptance.py`
agree by construction.

All comparisons are exact (integers and rationals); there are no tolerances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import occur, oracle, permineq, wordineq
from .exactmath import (
    binomial,
    brace,
    bracket,
    bracket_determinant,
    bracket_determinant_closed_form,
    bracket_table,
)
from .patterns import (
    PermPattern,
    enumerate_perm_patterns,
    enumerate_word_patterns,
)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str


def _check(suite: str, name: str, ok: bool, detail: str = "") -> Check:
    return Check(suite=suite, name=name, ok=bool(ok), detail=detail)


# -- 1. smallest nontrivial grid ---------------------------------------------

def small_inequality() -> list[Check]:
    s = "small-inequality"
    lhs_id = permineq.lhs_perm((0, 1))
    lhs_sw = permineq.lhs_perm((1, 0))
    rhs = permineq.rhs_perm(1)
    return [
        _check(s, "lhs-identity-m1", lhs_id == 10, f"lhs(01) = {lhs_id}"),
        _check(s, "lhs-swap-m1", lhs_sw == 10, f"lhs(10) = {lhs_sw}"),
        _check(s, "rhs-m1", rhs == 9, f"rhs(1) = {rhs}"),
    ]


# -- 2. bound tables ----------------------------------------------------------

_RHS_TABLE = {2: 100, 3: 1225, 4: 15876, 5: 213444}
_REARRANGEMENT_TABLE = {1: 8, 2: 75, 3: 792, 4: 8660, 5: 98876}


def bound_tables() -> list[Check]:
    s = "bound-tables"
    out = []
    for m, want in _RHS_TABLE.items():
        got = permineq.rhs_perm(m)
        out.append(_check(s, f"rhs-m{m}", got == want, f"rhs({m}) = {got}"))
    for m, want in _REARRANGEMENT_TABLE.items():
        got = permineq.rearrangement_lower_bound(m)
        out.append(
            _check(s, f"rearrangement-m{m}", got == want, f"bound({m}) = {got}")
        )
    pairs = [
        (permineq.rearrangement_lower_bound(m), permineq.rhs_perm(m))
        for m in range(1, 6)
    ]
    out.append(
        _check(
            s,
            "rearrangement-weaker",
            all(a < b for a, b in pairs),
            "(rearrangement, rhs) pairs: " + ", ".join(str(p) for p in pairs),
        )
    )
    return out


# -- 3. exhaustive margins, permutations --------------------------------------

def perm_margins(m_max: int = 6) -> list[Check]:
    s = "perm-margins"
    out = []
    for m in range(m_max + 1):
        rep = permineq.extremal_search(m)
        out.append(
            _check(
                s,
                f"nonnegative-m{m}",
                rep.m_lower >= 0,
                f"min margin over {m + 1}! patterns = {rep.m_lower}",
            )
        )
        if m >= 1:
            out.append(
                _check(
                    s,
                    f"strict-m{m}",
                    rep.m_lower > 0,
                    f"min margin = {rep.m_lower} (strictness evidence)",
                )
            )
    return out


# -- 4. determinant identity ---------------------------------------------------

def determinant(m_max: int = 5) -> list[Check]:
    s = "determinant"
    out = []
    for m in range(m_max + 1):
        elim = bracket_determinant(m)
        closed = bracket_determinant_closed_form(m)
        out.append(
            _check(
                s,
                f"m{m}",
                elim == closed,
                f"elimination {elim} vs closed form {closed}",
            )
        )
    return out


# -- 5. no order-reversing map; grid lemmas ------------------------------------

def grid_order(m_scan: int = 5, m_lemmas: int = 8) -> list[Check]:
    s = "grid-order"
    out = []
    scan = permineq.verify_no_order_reversal(m_scan)
    out.append(
        _check(
            s,
            "no-order-reversal",
            scan.none_found,
            f"checked {scan.checked} maps for m = 1..{m_scan}; "
            f"reversing found: {list(scan.reversing)}",
        )
    )
    sym_ok = mono_ok = bounds_ok = total_ok = brace_ok = True
    for m in range(m_lemmas + 1):
        top = binomial(2 * m, m)
        grid = bracket_table(m)
        for i in range(m + 1):
            for j in range(m + 1):
                v = grid.values[i][j]
                if v != grid.values[j][i] or v != grid.values[m - i][m - j]:
                    sym_ok = False
                if not (1 <= v <= top):
                    bounds_ok = False
                extreme = v == 1 or v == top
                if extreme != (i in (0, m) and j in (0, m)):
                    bounds_ok = False
                if i <= j:
                    if i > 0 and not v > grid.values[i - 1][j]:
                        mono_ok = False
                    if j < m and not v > grid.values[i][j + 1]:
                        mono_ok = False
                if bracket(i, j, m) != top * brace(i, j, m):
                    brace_ok = False
        if grid.total() != (2 * m + 1) * top:
            total_ok = False
    out.append(_check(s, "symmetry", sym_ok, f"grid symmetric for m <= {m_lemmas}"))
    out.append(
        _check(s, "monotone", mono_ok, f"strict row/column growth for m <= {m_lemmas}")
    )
    out.append(
        _check(
            s,
            "bounds",
            bounds_ok,
            f"1 <= cell <= C(2m,m), equality only at the corners, m <= {m_lemmas}",
        )
    )
    out.append(
        _check(s, "total", total_ok, f"grid total = (2m+1) C(2m,m) for m <= {m_lemmas}")
    )
    out.append(
        _check(
            s,
            "normalized-identity",
            brace_ok,
            f"cell = C(2m,m) * normalized cell for m <= {m_lemmas}",
        )
    )
    return out


# -- 6. oracle equivalences -----------------------------------------------------

def oracle_equivalence() -> list[Check]:
    s = "oracles"
    out = []

    paths_ok = True
    for m in range(5):
        for i in range(m + 1):
            for j in range(m + 1):
                if oracle.paths_through(m, (i, j)) != bracket(i, j, m):
                    paths_ok = False
    out.append(
        _check(s, "path-counts", paths_ok, "path enumeration matches grid, m <= 4")
    )

    pair_ok = True
    for m in range(4):
        for tau in itertools.permutations(range(m + 1)):
            if oracle.path_pair_lhs(m, tau) != permineq.lhs_perm(tau):
                pair_ok = False
    out.append(
        _check(s, "path-pairs", pair_ok, "path-pair sums match lhs, m <= 3")
    )

    perm_ok = True
    for size in range(1, 5):
        for p in enumerate_perm_patterns(size):
            if oracle.decomposition_count(p) != permineq.cross_sum_perm(p, p):
                perm_ok = False
    out.append(
        _check(
            s,
            "perm-decomposition",
            perm_ok,
            "exhaustive decomposition count matches cross sum, sizes 1..4",
        )
    )

    word_ok = True
    for size in range(1, 4):
        for l in range(1, size + 1):
            for w in enumerate_word_patterns(size, l):
                for k in range(1, 5):
                    if oracle.decomposition_count(w, k) != wordineq.f_function(w, k).value:
                        word_ok = False
    out.append(
        _check(
            s,
            "word-decomposition",
            word_ok,
            "exhaustive decomposition count matches the triple sum, "
            "sizes 1..3, k <= 4",
        )
    )
    return out


# -- 7. mean formulas by brute force --------------------------------------------

def moment_formulas(perm_n_max: int = 7, word_n_max: int = 6, k_max: int = 3) -> list[Check]:
    s = "moments"
    out = []
    perm_ok = True
    for size in range(1, 4):
        for p in enumerate_perm_patterns(size):
            for n in range(1, perm_n_max + 1):
                rep = occur.exhaustive_moments_perm(p, n)
                if rep.mean != occur.expectation_formula_perm(size, n):
                    perm_ok = False
    out.append(
        _check(
            s,
            "perm-mean",
            perm_ok,
            f"exhaustive mean = C(n,M)/M! for M <= 3, n <= {perm_n_max}",
        )
    )
    word_ok = True
    for size in range(1, 4):
        for l in range(1, size + 1):
            for w in enumerate_word_patterns(size, l):
                for k in range(1, k_max + 1):
                    for n in range(1, word_n_max + 1):
                        rep = occur.exhaustive_moments_word(w, n, k)
                        if rep.mean != occur.expectation_formula_word(size, l, n, k):
                            word_ok = False
    out.append(
        _check(
            s,
            "word-mean",
            word_ok,
            f"exhaustive mean = C(k,L)C(n,M)/k^M for M <= 3, "
            f"n <= {word_n_max}, k <= {k_max}",
        )
    )
    return out


# -- 8. variance leading coefficient ---------------------------------------------

def variance_leading() -> list[Check]:
    s = "variance-leading"
    out = []
    fit_ok = True
    details = []
    for size in range(1, 4):
        for p in enumerate_perm_patterns(size):
            points = [
                (n, occur.exhaustive_moments_perm(p, n).variance)
                for n in range(size, 3 * size + 1)
            ]
            poly = oracle.fit_exact_polynomial(points, 2 * size)
            want = permineq.variance_leading_coeff(p)
            got = poly.coefficient(2 * size - 1)
            if poly.degree > 2 * size - 1 or got != want or poly.coefficient(2 * size) != 0:
                fit_ok = False
                details.append(f"{p.text()}: degree {poly.degree}, top {got} vs {want}")
    out.append(
        _check(
            s,
            "fit-matches-formula",
            fit_ok,
            "; ".join(details) or "interpolated variance matches for all M <= 3",
        )
    )
    p12 = PermPattern((1, 2))
    coeff = permineq.variance_leading_coeff(p12)
    out.append(
        _check(s, "pattern-12-coefficient", coeff == Fraction(1, 36), f"coeff = {coeff}")
    )
    closed_ok = all(
        occur.exhaustive_moments_perm(p12, n).variance
        == Fraction(n * (n - 1) * (2 * n + 5), 72)
        for n in range(2, 7)
    )
    out.append(
        _check(
            s,
            "pattern-12-closed-form",
            closed_ok,
            "exhaustive variance equals n(n-1)(2n+5)/72 at n = 2..6",
        )
    )
    return out


# -- 9. covariance classes ---------------------------------------------------------

_EXPECTED_CLASS_ORDER = [
    ((1, 2, 3), (1, 2, 3)),
    ((1, 3, 2), (1, 3, 2)),
    ((1, 2, 3), (1, 3, 2)),
    ((1, 3, 2), (2, 1, 3)),
    ((1, 3, 2), (2, 3, 1)),
    ((1, 3, 2), (3, 1, 2)),
    ((1, 2, 3), (3, 1, 2)),
    ((1, 2, 3), (3, 2, 1)),
]


def covariance_classes() -> list[Check]:
    s = "covariance-classes"
    rows, ties = permineq.covariance_class_table(3)
    out = [_check(s, "eight-classes", len(rows) == 8, f"{len(rows)} classes")]

    def _has(row, pair) -> bool:
        return tuple(sorted(pair)) in row.members

    order_ok = len(rows) == len(_EXPECTED_CLASS_ORDER) and all(
        _has(row, pair) for row, pair in zip(rows, _EXPECTED_CLASS_ORDER)
    )
    out.append(
        _check(
            s,
            "decreasing-order",
            order_ok,
            "classes sorted by decreasing coefficient match the expected "
            f"sequence; ties (no canonical order): {ties}",
        )
    )
    positive = [row for row in rows if row.sign == "positive"]
    pos_ok = len(positive) == 3 and all(
        _has(row, pair) for row, pair in zip(rows[:3], _EXPECTED_CLASS_ORDER[:3])
    )
    out.append(
        _check(
            s,
            "positive-signs",
            pos_ok,
            "positive sign exactly for the first three classes",
        )
    )
    below = [row.cross_sum for row in rows if row.cross_sum < 100]
    out.append(
        _check(
            s,
            "cross-sum-below-bound",
            bool(below),
            f"cross sums below C(5,2)^2 = 100: {below}",
        )
    )
    return out


# -- 10. word margins ---------------------------------------------------------------

def word_margins(m_max: int = 5) -> list[Check]:
    s = "word-margins"
    out = []
    all_ok = True
    equality_ok = True
    for m in range(m_max + 1):
        for l in range(m + 1):
            rep = wordineq.word_extremal_search(m, l)
            if rep.min_margin < 0:
                all_ok = False
            if l == 0 and not (rep.min_margin == 0 == rep.max_margin):
                equality_ok = False
            if l > 0 and not rep.min_margin > 0:
                equality_ok = False
    out.append(
        _check(s, "nonnegative", all_ok, f"all margins >= 0 for m <= {m_max}, l <= m")
    )
    out.append(
        _check(
            s,
            "equality-iff-constant",
            equality_ok,
            f"margin = 0 exactly when l = 0, for m <= {m_max}",
        )
    )
    reduction_ok = True
    for m in range(m_max + 1):
        word_rep = wordineq.word_extremal_search(m, m)
        perm_rep = permineq.extremal_search(m)
        if (
            word_rep.min_margin != perm_rep.m_lower
            or word_rep.max_margin != perm_rep.m_star
            or word_rep.minimizers != perm_rep.minimizers
            or wordineq.rhs_word(m, m) != permineq.rhs_perm(m)
        ):
            reduction_ok = False
    out.append(
        _check(
            s,
            "bijection-reduction",
            reduction_ok,
            f"l = m case identical to the permutation machinery, m <= {m_max}",
        )
    )
    rhs20 = wordineq.rhs_word(2, 0)
    lhs_const = wordineq.lhs_word((0, 0, 0), 0)
    out.append(
        _check(
            s,
            "constant-equality-m2",
            rhs20 == 30 == lhs_const,
            f"rhs(2,0) = {rhs20}, lhs(constant) = {lhs_const}",
        )
    )
    return out


# -- 11. normalized witness -----------------------------------------------------------

def normalized_witness() -> list[Check]:
    s = "normalized"
    out = []
    value = permineq.normalized_lhs((0, 1))
    rhs = permineq.normalized_rhs(1)
    out.append(
        _check(
            s,
            "m1-value",
            value == Fraction(5, 2) and value >= rhs == Fraction(9, 4),
            f"normalized lhs = {value}, bound = {rhs}",
        )
    )
    worst = min(
        permineq.normalized_lhs(t) for t in [(0, 1), (1, 0)]
    )
    out.append(
        _check(
            s,
            "four-fails",
            worst < 4,
            f"min normalized lhs at m=1 is {worst} < 4, so 4 is not a valid bound",
        )
    )
    return out


# -- 12. extremal data ------------------------------------------------------------------

def extremal_data(table_m_max: int = 6, agree_m_max: int = 5) -> list[Check]:
    s = "extremal"
    out = []
    rep = permineq.extremal_search(2)
    baseline = permineq.extremal_search(2, prune=False)
    out.append(
        _check(
            s,
            "m2-values",
            rep.m_star == 26
            and rep.m_lower == 14
            and (0, 1, 2) in rep.maximizers
            and rep.minimizers == ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1))
            and rep == baseline,
            f"M* = {rep.m_star}, M_lower = {rep.m_lower}, "
            f"minimizers = {list(rep.minimizers)}",
        )
    )
    agree = all(
        permineq.extremal_search(m) == permineq.extremal_search(m, prune=False)
        for m in range(agree_m_max + 1)
    )
    out.append(
        _check(
            s,
            "pruning-agrees",
            agree,
            f"pruned and unpruned scans identical for m <= {agree_m_max}",
        )
    )
    rows = permineq.margin_ratio_table(table_m_max)
    ratios = {row.m: row.ratio for row in rows}
    table_ok = (
        len(rows) == table_m_max
        and not any(row.violation for row in rows)
        and ratios[1] == 1
        and ratios[2] == Fraction(7, 13)
        and all(isinstance(r, Fraction) for r in ratios.values())
    )
    out.append(
        _check(
            s,
            "ratio-table",
            table_ok,
            "ratios m=1..{}: {}".format(
                table_m_max, ", ".join(str(ratios[m]) for m in sorted(ratios))
            ),
        )
    )
    identity_ok = all(
        tuple(range(m + 1)) in permineq.extremal_search(m).maximizers
        for m in range(1, table_m_max + 1)
    )
    out.append(
        _check(
            s,
            "identity-maximizes",
            identity_ok,
            f"identity map found among maximizers for every m <= {table_m_max}",
        )
    )
    return out


# -- registry ------------------------------------------------------------------------

SuiteFn = Callable[[], list[Check]]

_SUITES: dict[str, tuple[SuiteFn, SuiteFn]] = {
    # name: (desk level, extended level)
    "small-inequality": (small_inequality, small_inequality),
    "bound-tables": (bound_tables, bound_tables),
    "perm-margins": (lambda: perm_margins(6), lambda: perm_margins(7)),
    "determinant": (determinant, determinant),
    "grid-order": (grid_order, grid_order),
    "oracles": (oracle_equivalence, oracle_equivalence),
    "moments": (moment_formulas, moment_formulas),
    "variance-leading": (variance_leading, variance_leading),
    "covariance-classes": (covariance_classes, covariance_classes),
    "word-margins": (word_margins, word_margins),
    "normalized": (normalized_witness, normalized_witness),
    "extremal": (extremal_data, extremal_data),
}

# Criterion number -> (suite, subset of check names; None = all of the suite).
CRITERIA: dict[int, tuple[str, Optional[tuple[str, ...]]]] = {
    1: ("small-inequality", None),
    2: ("bound-tables", None),
    3: ("perm-margins", None),
    4: ("determinant", None),
    5: ("grid-order", None),
    6: ("oracles", None),
    7: ("moments", None),
    8: ("variance-leading", None),
    9: ("covariance-classes", None),
    10: ("word-margins", None),
    11: ("normalized", None),
    12: ("extremal", None),
}


def suite_names() -> list[str]:
    return list(_SUITES)


def run_suite(name: str, level: str = "desk") -> list[Check]:
    if name not in _SUITES:
        raise ValueError(
            f"unknown suite {name!r}; available: {', '.join(_SUITES)}"
        )
    desk, extended = _SUITES[name]
    return desk() if level == "desk" else extended()


def run_suites(names: Optional[Iterable[str]] = None, level: str = "desk") -> list[Check]:
    if level not in ("desk", "extended"):
        raise ValueError("level must be 'desk' or 'extended'")
    selected = list(names) if names else suite_names()
    out: list[Check] = []
    for name in selected:
        out.extend(run_suite(name, level))
    return out


def run_criterion(number: int) -> list[Check]:
    suite, subset = CRITERIA[number]
    checks = run_suite(suite, "desk")
    if subset is None:
        return checks
    return [c for c in checks if c.name in subset]
