"""Exhaustive enumeration and cross-validation sweeps.

Every valid spec at a given order can be enumerated deterministically; the
crosscheck runs the three independent transfer deciders against each other
over whole families and reports any disagreement.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import chain, combinations, product
from typing import Iterator

from .circulant import GraphSpec, build_connection_set, spec_to_json, validate_spec
from .numthy import divisors
from .spectrum import eigenvalues_oracle
from .transfer import (
    classify_mst,
    classify_pst,
    mst_by_valuation,
    antipodal_pst_by_valuation,
    pst_feasible_pair,
    verify_numeric,
)

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """The requested sweep would enumerate more specs than the cap allows."""


@dataclass
class SweepReport:
    """Outcome of one crosscheck sweep."""

    mode: str
    n_range: list[int]
    specs_checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    pst_positive: int = 0
    mst_positive: int = 0
    wall_time: float = 0.0


def _subsets_lex(items: list[int]) -> list[tuple[int, ...]]:
    # all subsets as ascending tuples, in lexicographic tuple order
    subs = chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))
    return sorted(subs)


def enumerate_specs(n: int) -> Iterator[GraphSpec]:
    """Yield every valid spec of order n, ordered by (B, D, sigma).

    B runs over subsets of the proper divisors of n; when 4 | n, D runs over
    subsets of the divisors of n/4 disjoint from B, each with every sign
    assignment (+1 before -1 per divisor).  The order is frozen: golden
    outputs depend on it.
    """
    if n < 2:
        raise ValueError(f"enumeration needs n >= 2, got {n}")
    proper = [d for d in divisors(n) if d < n]
    d_pool = divisors(n // 4) if n % 4 == 0 else []
    for b_tuple in _subsets_lex(proper):
        b_set = set(b_tuple)
        avail = [d for d in d_pool if d not in b_set]
        for d_tuple in _subsets_lex(avail):
            for signs in product((1, -1), repeat=len(d_tuple)):
                yield validate_spec(n, b_tuple, d_tuple, dict(zip(d_tuple, signs)))


def count_specs(n: int) -> int:
    """Closed-form spec count: 4 per divisor of n/4, 2 per other proper divisor."""
    proper = [d for d in divisors(n) if d < n]
    if n % 4 == 0:
        d_pool = set(divisors(n // 4))
    else:
        d_pool = set()
    directed_choices = sum(1 for d in proper if d in d_pool)
    return 2 ** (len(proper) - directed_choices) * 4**directed_choices


def _moduli(n_max: int, mode: str) -> list[int]:
    if mode == "pst":
        return [n for n in range(4, n_max + 1, 4)]
    if mode == "mst":
        return [n for n in range(8, n_max + 1, 8)]
    raise ValueError(f"mode must be 'pst' or 'mst', got {mode!r}")


def crosscheck(
    n_max: int,
    mode: str = "pst",
    budget: int = DEFAULT_BUDGET,
    tol: float = 1e-9,
) -> SweepReport:
    """Run all three deciders over every valid spec with order up to n_max.

    Legs per spec: the divisor-set classifier on the spec, the gap-valuation
    test on the floating-point DFT spectrum, and exact witness feasibility
    verified numerically at tolerance tol.  Any disagreement is recorded.
    """
    moduli = _moduli(n_max, mode)
    total = sum(count_specs(n) for n in moduli)
    if total > budget:
        raise BudgetExceeded(f"{total} specs exceed budget {budget}")
    report = SweepReport(mode=mode, n_range=moduli)
    start = time.perf_counter()
    for n in moduli:
        for spec in enumerate_specs(n):
            report.specs_checked += 1
            spectrum = eigenvalues_oracle(build_connection_set(spec), n)
            if mode == "pst":
                by_class = classify_pst(spec) is not None
                by_vals = antipodal_pst_by_valuation(spectrum) is not None
                by_num = _numeric_pst(spectrum, n, tol)
            else:
                by_class = classify_mst(spec)
                by_vals = mst_by_valuation(spectrum)
                by_num = _numeric_mst(spectrum, n, tol)
            if by_class:
                if mode == "pst":
                    report.pst_positive += 1
                else:
                    report.mst_positive += 1
            if not (by_class == by_vals == by_num):
                report.mismatches.append(
                    {
                        "spec": spec_to_json(spec),
                        "classifier": by_class,
                        "valuation": by_vals,
                        "numeric": by_num,
                    }
                )
    report.wall_time = time.perf_counter() - start
    return report


def _numeric_pst(spectrum, n: int, tol: float) -> bool:
    t = pst_feasible_pair(spectrum, 0, n // 2)
    if t is None:
        return False
    return verify_numeric(spectrum, 0, n // 2, t, tol)[0]


def _numeric_mst(spectrum, n: int, tol: float) -> bool:
    for b in (n // 4, n // 2, 3 * n // 4):
        t = pst_feasible_pair(spectrum, 0, b)
        if t is None or not verify_numeric(spectrum, 0, b, t, tol)[0]:
            return False
    return True


def search_specs(n: int, mode: str = "pst") -> list[GraphSpec]:
    """All specs of order n the classifier marks positive, enumeration order."""
    if mode == "pst":
        return [s for s in enumerate_specs(n) if classify_pst(s) is not None]
    if mode == "mst":
        return [s for s in enumerate_specs(n) if classify_mst(s)]
    raise ValueError(f"mode must be 'pst' or 'mst', got {mode!r}")
