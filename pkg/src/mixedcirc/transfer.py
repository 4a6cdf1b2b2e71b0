"""Perfect and multiple state transfer detection.

Times are measured in turns: t_prime = t / (2*pi).  Because the spectra are
integral, the evolution is 1-periodic in turns, and transfer questions reduce
to congruences on the cyclic eigenvalue gaps.  Three independent deciders
exist: the divisor-set classifier, the gap-valuation test, and exact
feasibility plus numeric verification of the witness time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .circulant import GraphSpec, partition_divisors
from .numthy import divisors as all_divisors
from .numthy import two_adic_valuation
from .spectrum import Spectrum, eigenvalues_closed_form

NUMERIC_TOL = 1e-9
PHASE_TOL = 1e-12


class SamePair(ValueError):
    """a = b asks about periodicity, not transfer; reported separately."""


class NotFeasible(ValueError):
    """No rational time achieves transfer for the requested pair."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class DifferenceProfile:
    """Cyclic first and second differences of a spectrum, with 2-adic data."""

    deltas: tuple[int, ...]
    step2: tuple[int, ...]
    valuations: tuple[Optional[int], ...]  # None marks a zero gap


@dataclass(frozen=True)
class TransferVerdict:
    """Decision record for one transfer question."""

    kind: str  # "none" | "antipodal_pst" | "quarter_pst" | "mst"
    pair: tuple[int, ...]
    m: Optional[int] = None
    t_prime: Optional[Fraction] = None
    phase: Optional[complex] = None
    residual: Optional[float] = None


def transition_amplitude(spectrum: Spectrum, a: int, b: int, t_prime) -> complex:
    """U(t)_{ab} = (1/n) * sum_r exp(2*pi*i*(gamma_r * t' + r*(a-b)/n))."""
    n = spectrum.n
    gamma = np.array(spectrum.gamma, dtype=float)
    r = np.arange(n, dtype=float)
    phases = gamma * float(t_prime) + r * ((a - b) % n) / n
    return complex(np.exp(2j * np.pi * phases).sum() / n)


def difference_profile(spectrum: Spectrum) -> DifferenceProfile:
    """Cyclic gaps gamma[j+1]-gamma[j], double gaps, and their valuations."""
    n = spectrum.n
    g = spectrum.gamma
    deltas = tuple(g[(j + 1) % n] - g[j] for j in range(n))
    step2 = tuple(g[(j + 2) % n] - g[j] for j in range(n))
    vals = tuple(None if d == 0 else two_adic_valuation(d) for d in deltas)
    return DifferenceProfile(deltas=deltas, step2=step2, valuations=vals)


def antipodal_pst_by_valuation(spectrum: Spectrum) -> Optional[int]:
    """Common 2-adic valuation m of all cyclic gaps, or None.

    A constant valuation certifies transfer between antipodal vertices at
    t' = 1/2**(m+1); any zero gap or disagreement returns None.
    """
    if spectrum.n % 2:
        raise ValueError(f"antipodal pair needs even n, got {spectrum.n}")
    prof = difference_profile(spectrum)
    vals = set(prof.valuations)
    if None in vals or len(vals) != 1:
        return None
    return vals.pop()


def mst_by_valuation(spectrum: Spectrum) -> bool:
    """Gap valuations all 1 and double-gap valuations all 2 (cyclically)."""
    if spectrum.n % 4:
        raise ValueError(f"quarter orbit needs 4 | n, got {spectrum.n}")
    prof = difference_profile(spectrum)
    if set(prof.valuations) != {1}:
        return False
    return all(d != 0 and two_adic_valuation(d) == 2 for d in prof.step2)


def _scaled(s: frozenset[int], k: int) -> frozenset[int]:
    return frozenset(k * d for d in s)


def classify_pst(spec: GraphSpec) -> Optional[str]:
    """Divisor-set test for antipodal transfer; returns the case tag or None.

    Cases share the chain B0 = 2*B1star = 4*B2star and split on which of the
    distinguished divisors n/4, n/2 appear:
      i:   directed layer 2 is exactly {n/4} and n/2 not in B,
      ii:  directed layer 2 empty and exactly one of n/4, n/2 in B,
      iii: directed layer 2 empty, both n/4 and n/2 in B, 8 | n, directed
           layer 3 exactly {n/8}, and B2star = 2*B3star.
    """
    n = spec.n
    if n % 4:
        return None
    dp = partition_divisors(spec)
    if not (dp.b_layer(0) == _scaled(dp.b_star(1), 2) == _scaled(dp.b_star(2), 4)):
        return None
    half, quarter = n // 2, n // 4
    d2 = dp.d_layer(2)
    if d2 == frozenset({quarter}):
        return "i" if half not in spec.B else None
    if d2:
        return None
    has_half = half in spec.B
    has_quarter = quarter in spec.B
    if has_half and has_quarter:
        if (
            n % 8 == 0
            and dp.d_layer(3) == frozenset({n // 8})
            and dp.b_star(2) == _scaled(dp.b_star(3), 2)
        ):
            return "iii"
        return None
    if has_half or has_quarter:
        return "ii"
    return None


def classify_mst(spec: GraphSpec) -> bool:
    """Divisor-set test for transfer around the whole quarter orbit."""
    n = spec.n
    if n % 8:
        return False
    dp = partition_divisors(spec)
    b0 = dp.b_layer(0)
    if not (
        b0
        == _scaled(dp.b_star(1), 2)
        == _scaled(dp.b_star(2), 4)
        == _scaled(dp.b_star(3), 8)
    ):
        return False
    return (
        dp.d_layer(2) == frozenset({n // 4})
        and dp.d_layer(3) == frozenset({n // 8})
        and n // 2 not in spec.B
    )


def undirected_pst_criterion(spec: GraphSpec) -> bool:
    """Transfer test specialized to purely undirected graphs (D empty).

    Equivalent to classify_pst on such specs: the scaled-set chain plus
    exactly one of n/4, n/2 in B.  (With both present the full classifier
    demands a directed layer-3 class, impossible here.)
    """
    if spec.D:
        raise ValueError("undirected criterion is defined for D empty only")
    n = spec.n
    if n % 4:
        return False
    dp = partition_divisors(spec)
    if not (
        dp.b_star(1) == _scaled(dp.b_star(2), 2)
        and dp.b_layer(0) == _scaled(dp.b_star(2), 4)
    ):
        return False
    return (n // 4 in spec.B) != (n // 2 in spec.B)


def oriented_pst_criterion(spec: GraphSpec) -> bool:
    """Transfer test specialized to purely directed graphs (B empty)."""
    if spec.B:
        raise ValueError("oriented criterion is defined for B empty only")
    n = spec.n
    if n % 4:
        return False
    dp = partition_divisors(spec)
    return dp.d_layer(2) == frozenset({n // 4})


def pst_feasible_pair(spectrum: Spectrum, a: int, b: int) -> Optional[Fraction]:
    """Minimal t' in (0, 1] with gamma_j * t' + (a-b)/n integral across gaps.

    Transfer a -> b happens at some time iff a single rational t' clears
    every cyclic gap congruence delta_j * t' + (a-b)/n in Z.  Any reduced
    witness s/q must have q dividing g = gcd of pairwise gap differences,
    and since all gaps agree mod q one congruence decides all of them.
    Returns the minimal witness, or None.
    """
    n = spectrum.n
    if a % n == b % n:
        raise SamePair(f"a = b = {a % n} asks about periodicity, not transfer")
    w = (a - b) % n
    prof = difference_profile(spectrum)
    d0 = prof.deltas[0]
    g = 0
    for d in prof.deltas[1:]:
        g = math.gcd(g, d - d0)
    if g == 0:
        # All gaps equal; cyclic gaps telescope to zero, so they are all
        # zero and the condition collapses to (a-b)/n in Z: never for a != b.
        return None
    best: Optional[Fraction] = None
    for q in all_divisors(g):
        if q == 1:
            continue  # integer times give the identity evolution
        # solvability of n*s*d0 = -w*q (mod n*q) in s
        if (w * q) % (n * math.gcd(d0, q)):
            continue
        for s in range(1, q + 1):
            if math.gcd(s, q) != 1:
                continue
            if (n * s * d0 + w * q) % (n * q) == 0:
                cand = Fraction(s, q)
                if best is None or cand < best:
                    best = cand
                break  # s ascending: first hit is minimal for this q
    return best


def minimal_pst_time(spectrum: Spectrum, a: int, b: int) -> Fraction:
    """Witness time from pst_feasible_pair; raises NotFeasible when absent."""
    t = pst_feasible_pair(spectrum, a, b)
    if t is None:
        raise NotFeasible(f"no transfer time exists for pair ({a}, {b})")
    return t


def verify_numeric(
    spectrum: Spectrum, a: int, b: int, t_prime, tol: float = NUMERIC_TOL
) -> tuple[bool, complex, float]:
    """Evaluate |U_ab| at t_prime: (ok, unit phase, |1 - |U||)."""
    amp = transition_amplitude(spectrum, a, b, t_prime)
    mod = abs(amp)
    residual = abs(1.0 - mod)
    phase = amp / mod if mod > 0 else complex(0)
    return residual < tol, phase, residual


def pair_restriction_check(spectrum: Spectrum) -> frozenset[int]:
    """Differences w with transfer 0 -> w feasible; theory confines these
    to {n/4, n/2, 3n/4}."""
    n = spectrum.n
    if n % 4:
        raise ValueError(f"quarter-point differences need 4 | n, got {n}")
    out = set()
    for w in range(1, n):
        if pst_feasible_pair(spectrum, 0, w) is not None:
            out.add(w)
    return frozenset(out)


def _decide_pair(
    spectrum: Spectrum, a: int, b: int, tol: float = NUMERIC_TOL
) -> TransferVerdict:
    n = spectrum.n
    t = pst_feasible_pair(spectrum, a, b)
    if t is None:
        return TransferVerdict(kind="none", pair=(a % n, b % n))
    ok, phase, residual = verify_numeric(spectrum, a, b, t, tol)
    if not ok:
        raise ConsistencyError(
            f"witness t'={t} for ({a},{b}) failed numeric check: residual {residual}"
        )
    w = (b - a) % n
    if 2 * w % n == 0:
        kind = "antipodal_pst"
    elif n % 4 == 0 and w in (n // 4, 3 * n // 4):
        kind = "quarter_pst"
    else:
        raise ConsistencyError(f"feasible difference {w} outside quarter points")
    m = None
    if n % 2 == 0:
        m = antipodal_pst_by_valuation(spectrum)
    return TransferVerdict(
        kind=kind, pair=(a % n, b % n), m=m, t_prime=t, phase=phase, residual=residual
    )


def antipodal_verdict(spec: GraphSpec, tol: float = NUMERIC_TOL) -> TransferVerdict:
    """Decide transfer between 0 and n/2 from the exact spectrum."""
    n = spec.n
    if n % 2 or n < 2:
        return TransferVerdict(kind="none", pair=())
    return _decide_pair(eigenvalues_closed_form(spec), 0, n // 2, tol)


def pair_verdict(
    spec: GraphSpec, a: int, b: int, tol: float = NUMERIC_TOL
) -> TransferVerdict:
    """Decide transfer between an arbitrary distinct pair."""
    n = spec.n
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"vertices must lie in 0..{n - 1}, got {a}, {b}")
    return _decide_pair(eigenvalues_closed_form(spec), a, b, tol)


def mst_verdict(spec: GraphSpec, tol: float = NUMERIC_TOL) -> TransferVerdict:
    """Decide transfer around the orbit (0, n/4, n/2, 3n/4)."""
    n = spec.n
    if n % 4:
        return TransferVerdict(kind="none", pair=())
    spectrum = eigenvalues_closed_form(spec)
    orbit = (0, n // 4, n // 2, 3 * n // 4)
    if not mst_by_valuation(spectrum):
        return TransferVerdict(kind="none", pair=orbit)
    times = []
    worst = 0.0
    for b in orbit[1:]:
        t = pst_feasible_pair(spectrum, 0, b)
        if t is None:
            return TransferVerdict(kind="none", pair=orbit)
        ok, phase, residual = verify_numeric(spectrum, 0, b, t, tol)
        if not ok:
            raise ConsistencyError(f"orbit witness ({0},{b}) residual {residual}")
        times.append((t, phase))
        worst = max(worst, residual)
    m = antipodal_pst_by_valuation(spectrum)
    return TransferVerdict(
        kind="mst",
        pair=orbit,
        m=m,
        t_prime=times[0][0],
        phase=times[0][1],
        residual=worst,
    )
