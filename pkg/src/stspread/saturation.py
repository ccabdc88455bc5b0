"""Saturating sets in PG(n,2) and the associated counting bounds.

A subset S of a triple system saturates when S u N(S) is the whole point
set.  For the binary projective spaces this is the classical notion of a
saturating set: every point lies in S or on a secant of S.  The module
provides the hyperplane machinery behind two lower bounds:

* the Lunelli-Sce counting bound (q-1) C(s,2) + s >= (q^(n+1)-1)/(q-1),
  valid in PG(n,q) because s points and their secants must reach everything;

* a refinement for q = 2 built on an exact variance identity: summing
  (u(H) - m/2)^2 over all hyperplanes H, where u(H) = |S n H| and m = |S|,
  gives exactly m 2^(n-1) - m^2/4.  The average forces some hyperplane to
  deviate from m/2 by more than sqrt(m/4 - m^2 / 2^(n+3)), while counting
  the points off a hyperplane shows a saturating set must satisfy
  m - m1 + m1 (m - m1) >= 2^n - 1 with m1 = |S n H|.  A candidate size m
  survives only if some intersection count m1 inside the deviation window
  meets that necessary condition (and m passes the counting bound).

All hyperplane arithmetic is exact: counts are integers and the identity is
compared through fractions, never floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from . import config
from .errors import (
    BudgetExhaustedError,
    NotPrimePowerError,
    OutOfRangeError,
    TooLargeError,
    TrivialOrderError,
)
from .parallel import run_jobs
from .spreading import colex_subsets
from .system import TripleSystem

PRIME_POWERS = frozenset(
    [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
     37, 41, 43, 47, 49, 53, 59, 61, 64]
)

DEFAULT_EXTREMES_BUDGET = 10 ** 7


class HyperplaneFamily:
    """The hyperplanes of PG(n,2), one per nonzero functional.

    Point i of PG(n,2) is the vector with integer label i+1; the hyperplane
    of functional c consists of the points whose label has even overlap with
    c.  masks holds one point bitmask per hyperplane; the frozenset view is
    materialized lazily.
    """

    __slots__ = ("n", "functionals", "masks", "_sets")

    def __init__(self, n, functionals, masks):
        self.n = n
        self.functionals = functionals
        self.masks = masks
        self._sets = None

    @property
    def hyperplanes(self):
        if self._sets is None:
            self._sets = tuple(
                frozenset(i for i in range(len(self.masks)) if (m >> i) & 1)
                for m in self.masks
            )
        return self._sets

    def __len__(self):
        return len(self.masks)


def _check_pg_dim(n: int) -> int:
    if n < 1:
        raise TrivialOrderError("PG(n,2) needs n >= 1")
    points = (1 << (n + 1)) - 1
    cap = config.order_cap((1 << (config.MAX_HYPERPLANE_DIM + 1)) - 1)
    if points > cap:
        raise TooLargeError("PG(%d,2) hyperplane family above the cap" % n)
    return points


@lru_cache(maxsize=16)
def hyperplanes_pg2(n: int) -> HyperplaneFamily:
    """Enumerate all 2^(n+1) - 1 hyperplanes of PG(n,2)."""
    count = _check_pg_dim(n)
    labels = np.arange(1, count + 1, dtype=np.uint32)
    masks = []
    for c in range(1, count + 1):
        on_h = (np.bitwise_count(labels & np.uint32(c)) & 1) == 0
        masks.append(
            int.from_bytes(np.packbits(on_h, bitorder="little").tobytes(), "little")
        )
    return HyperplaneFamily(n, tuple(range(1, count + 1)), tuple(masks))


def _points_mask(n_points: int, points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        if not isinstance(p, int) or p < 0 or p >= n_points:
            raise OutOfRangeError("point %r outside [0, %d)" % (p, n_points))
        mask |= 1 << p
    return mask


def variance_identity(n: int, points: Iterable[int]):
    """Exact two sides of the hyperplane variance identity.

    Returns (lhs, rhs) as fractions: lhs is the brute-force sum of
    (u(H) - m/2)^2 over all hyperplanes, rhs the closed form
    m 2^(n-1) - m^2/4.  They are equal for every point subset.
    """
    fam = hyperplanes_pg2(n)
    count = (1 << (n + 1)) - 1
    mask = _points_mask(count, points)
    m = mask.bit_count()
    lhs_times_4 = 0
    for h in fam.masks:
        u = (mask & h).bit_count()
        lhs_times_4 += (2 * u - m) ** 2
    rhs = Fraction(-m * m, 4) + m * (1 << (n - 1))
    return Fraction(lhs_times_4, 4), rhs


@dataclass(frozen=True)
class DeviationReport:
    """Most-deviating hyperplane for a point subset of PG(n,2).

    deviation = |u(H) - m/2| for the winning hyperplane (least functional on
    ties).  strict tells whether deviation exceeds the variance-derived
    lower bound sqrt(m/4 - m^2/2^(n+3)); the comparison is carried out on
    squares so it stays exact.  degenerate marks m = 0, where the bound
    assertion is vacuous; radicand_negative marks m > 2^(n+1), which cannot
    happen for genuine point subsets and is only reported defensively.
    """

    functional: int
    hyperplane: frozenset
    deviation: Fraction
    bound_squared: Fraction
    strict: bool
    degenerate: bool
    radicand_negative: bool


def deviating_hyperplane(n: int, points: Iterable[int]) -> DeviationReport:
    """Hyperplane whose intersection count strays farthest from m/2."""
    fam = hyperplanes_pg2(n)
    count = (1 << (n + 1)) - 1
    mask = _points_mask(count, points)
    m = mask.bit_count()
    best_abs = -1
    best_idx = 0
    for idx, h in enumerate(fam.masks):
        a = abs(2 * (mask & h).bit_count() - m)
        if a > best_abs:
            best_abs = a
            best_idx = idx
    deviation = Fraction(best_abs, 2)
    bound_sq = Fraction(m, 4) - Fraction(m * m, 1 << (n + 3))
    degenerate = m == 0
    radicand_negative = bound_sq < 0
    strict = (not degenerate) and (not radicand_negative) and deviation ** 2 > bound_sq
    return DeviationReport(
        functional=fam.functionals[best_idx],
        hyperplane=fam.hyperplanes[best_idx],
        deviation=deviation,
        bound_squared=bound_sq,
        strict=strict,
        degenerate=degenerate,
        radicand_negative=radicand_negative,
    )


def lunelli_sce_min(n: int, q: int) -> int:
    """Least s with (q-1) C(s,2) + s >= (q^(n+1)-1)/(q-1).

    Any saturating set of PG(n,q) has at least this many points: s points
    lie on C(s,2) secants, each covering q-1 further points.
    """
    if q not in PRIME_POWERS:
        raise NotPrimePowerError("q = %r is not a prime power (table up to 64)" % (q,))
    if n < 1:
        raise TrivialOrderError("lunelli_sce_min needs n >= 1")
    threshold = (q ** (n + 1) - 1) // (q - 1)
    s = 1
    while (q - 1) * (s * (s - 1) // 2) + s < threshold:
        s += 1
    return s


def refined_saturating_bound(n: int) -> int:
    """Least m not ruled out for a saturating set of PG(n,2).

    A size m survives when it passes the Lunelli-Sce count and some integer
    intersection count m1 inside the deviation window
    |m1 - m/2| <= sqrt(m/4 - m^2/2^(n+3)) satisfies the off-hyperplane
    covering condition m - m1 + m1(m - m1) >= 2^n - 1.  All comparisons are
    exact (squared and scaled to integers).
    """
    if n < 1:
        raise TrivialOrderError("refined_saturating_bound needs n >= 1")
    if n > config.MAX_HYPERPLANE_DIM:
        raise TooLargeError(
            "refined_saturating_bound capped at n = %d" % config.MAX_HYPERPLANE_DIM
        )
    points = (1 << (n + 1)) - 1
    need = (1 << n) - 1
    scale = 1 << (n + 1)  # band test: 2^(n+1) (2 m1 - m)^2 <= m (2^(n+1) - m)
    for m in range(1, points + 1):
        if m * (m - 1) // 2 + m < points:
            continue
        lo = max(0, m - (1 << n))
        hi = min(m, (1 << n) - 1)
        for m1 in range(lo, hi + 1):
            if scale * (2 * m1 - m) ** 2 > m * (scale - m):
                continue
            if m - m1 + m1 * (m - m1) >= need:
                return m
    raise TooLargeError("no surviving size up to the point count")  # unreachable


@dataclass(frozen=True)
class SaturationBound:
    """Bundle of lower bounds (and optionally the exact value) for the
    smallest saturating set of PG(n,q)."""

    n: int
    q: int
    lunelli: int
    refined: Optional[int] = None
    exact: Optional[int] = None


def compute_saturation_bound(n: int, q: int = 2, exact: bool = False) -> SaturationBound:
    """Assemble lunelli/refined(/exact) bounds for PG(n,q)."""
    lun = lunelli_sce_min(n, q)
    refined = refined_saturating_bound(n) if q == 2 else None
    exact_val = None
    if exact:
        if q != 2:
            raise NotPrimePowerError("exact search implemented for q = 2 only")
        from .constructions import pg2

        exact_val, _ = min_saturating_size(pg2(n))
    return SaturationBound(n, q, lun, refined, exact_val)


def _saturating_level(args):
    ts, k, tops = args
    third = ts._third
    full = (1 << ts.order) - 1
    for top in tops:
        for rest in colex_subsets(top, k - 1):
            subset = rest + (top,)
            cover = 0
            for p in subset:
                cover |= 1 << p
            for i in range(1, k):
                row = third[subset[i]]
                for j in range(i):
                    z = row[subset[j]]
                    if z >= 0:
                        cover |= 1 << z
            if cover == full:
                return subset
    return None


def min_saturating_size(ts: TripleSystem, jobs: int = 1):
    """Least size of a saturating set, with the colex-first witness.

    Exhaustive scan over subset sizes 1, 2, ...; the whole point set always
    saturates, so the scan terminates.  For ts = pg2(n) this computes the
    exact smallest saturating set size of PG(n,2).
    """
    n = ts.order
    cap = config.order_cap(config.MAX_ENUMERATION_ORDER)
    if n > cap:
        raise TooLargeError("min_saturating_size capped at order %d" % cap)
    from .spreading import _split_tops

    for k in range(1, n + 1):
        tops = list(range(k - 1, n))
        chunks = _split_tops(tops, k, jobs)
        for hit in run_jobs(_saturating_level, [(ts, k, c) for c in chunks], jobs):
            if hit is not None:
                return k, frozenset(hit)
    raise TooLargeError("unreachable: the full point set saturates")


@dataclass(frozen=True)
class ExtremesReport:
    """Extremal hyperplane intersection counts over all m-subsets of
    PG(n,2): the largest attainable minimum and smallest attainable maximum,
    with colex-first witnesses."""

    n: int
    m: int
    max_min: int
    max_min_witness: frozenset
    min_max: int
    min_max_witness: frozenset


def _extremes_level(args):
    hmasks, m, tops = args
    best_maxmin = -1
    best_minmax = None
    wit_maxmin = wit_minmax = None
    for top in tops:
        for rest in colex_subsets(top, m - 1):
            subset = rest + (top,)
            mask = 0
            for p in subset:
                mask |= 1 << p
            lo = min((mask & h).bit_count() for h in hmasks)
            hi = max((mask & h).bit_count() for h in hmasks)
            if lo > best_maxmin:
                best_maxmin = lo
                wit_maxmin = subset
            if best_minmax is None or hi < best_minmax:
                best_minmax = hi
                wit_minmax = subset
    return best_maxmin, wit_maxmin, best_minmax, wit_minmax


def intersection_extremes(
    n: int, m: int, budget: int = DEFAULT_EXTREMES_BUDGET, jobs: int = 1
) -> ExtremesReport:
    """Extremes of |U n H| over m-subsets U and hyperplanes H of PG(n,2).

    max_min answers "how evenly can m points meet every hyperplane", min_max
    "how flat can the maximum be".  The scan is exhaustive; if the subset
    count times the hyperplane count would exceed budget the call refuses
    up front with BudgetExhaustedError.
    """
    if n > 3:
        raise TooLargeError("intersection_extremes capped at n = 3")
    if m > 8:
        raise TooLargeError("intersection_extremes capped at m = 8")
    fam = hyperplanes_pg2(n)
    count = (1 << (n + 1)) - 1
    if m > count:
        raise OutOfRangeError("m = %d exceeds the %d points" % (m, count))
    work = math.comb(count, m) * len(fam)
    if work > budget:
        raise BudgetExhaustedError(
            "scan of %d subset-hyperplane pairs exceeds budget %d" % (work, budget)
        )
    if m == 0:
        return ExtremesReport(n, m, 0, frozenset(), 0, frozenset())
    from .spreading import _split_tops

    tops = list(range(m - 1, count))
    chunks = _split_tops(tops, m, jobs)
    parts = run_jobs(_extremes_level, [(fam.masks, m, c) for c in chunks], jobs)
    best_maxmin = -1
    best_minmax = None
    wit_maxmin = wit_minmax = None
    for lo, wlo, hi, whi in parts:
        if wlo is not None and lo > best_maxmin:
            best_maxmin = lo
            wit_maxmin = wlo
        if whi is not None and (best_minmax is None or hi < best_minmax):
            best_minmax = hi
            wit_minmax = whi
    return ExtremesReport(
        n, m, best_maxmin, frozenset(wit_maxmin), best_minmax, frozenset(wit_minmax)
    )


def is_saturating_in_pg(n: int, points: Iterable[int]) -> bool:
    """Secant-based saturation test in PG(n,2) without building the system:
    S saturates iff S plus the pairwise xor completions covers everything."""
    count = (1 << (n + 1)) - 1
    mask = _points_mask(count, points)
    pts = [p for p in range(count) if (mask >> p) & 1]
    cover = mask
    for i, x in enumerate(pts):
        for y in pts[:i]:
            z = ((x + 1) ^ (y + 1)) - 1
            cover |= 1 << z
    return cover == (1 << count) - 1
