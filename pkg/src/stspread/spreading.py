"""Search and verification for spreading sets.

A spreading set generates the whole system under closure.  Greedy growth
(always adjoin a point outside the current closure) shows every Steiner
system of order n has a spreading set of at most floor(log2(n+1)) points:
adjoining an outside point at least doubles the closure plus one, because a
proper subsystem of an STS(v) has order at most (v-1)/2.  Equality at every
step forces the closure sizes 3, 7, 15, ... of the binary projective spaces,
which is what check_projective tests for.

min_spreading_size walks the closure lattice breadth-first instead of
scanning raw subsets: for a spreading set of minimum size every generator
lies outside the closure of the others (otherwise dropping it keeps the set
spreading), so minimum witnesses correspond exactly to chains
cl(p1,p2) < cl(.. p3) < ... that end at the full point set, and distinct
chains through the same closed set can be merged.  This is the subset scan
with closed-set pruning taken to its limit and returns the same value.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from . import config
from .closure import (
    _closure_extend,
    _closure_mask,
    _mask_of,
    _to_set,
    closure_points,
)
from .errors import (
    NotProjectiveTagError,
    NotSpreadingError,
    NotSteinerError,
    SamePointError,
    TooLargeError,
    TrivialOrderError,
)
from .parallel import run_jobs
from .system import TripleSystem


@dataclass(frozen=True)
class SpreadingSearchResult:
    """A spreading set plus how it was found.

    closure_sizes records |cl(U_i)| as the witness grew (greedy method) or
    is left empty for exhaustive searches.
    """

    witness: frozenset
    size: int
    method: str
    closure_sizes: tuple = ()


def colex_subsets(n: int, k: int):
    """All k-subsets of range(n) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in colex_subsets(top, k - 1):
            yield rest + (top,)


def greedy_spreading_set(
    ts: TripleSystem, seed_pair: Optional[tuple] = None
) -> SpreadingSearchResult:
    """Grow a spreading set greedily from a starting pair.

    The default start is {0, 1}; each step adjoins the least-index point
    outside the current closure.  The doubling bound guarantees the result
    has at most floor(log2(order+1)) points.
    """
    if not ts.is_steiner():
        raise NotSteinerError("greedy spreading search needs a Steiner system")
    if ts.order < 3:
        raise TrivialOrderError("greedy spreading search needs order >= 3")
    if seed_pair is None:
        seed_pair = (0, 1)
    x, y = seed_pair
    ts.check_point(x)
    ts.check_point(y)
    if x == y:
        raise SamePointError("seed pair needs two distinct points")
    third = ts._third
    full = (1 << ts.order) - 1
    witness = [x, y]
    mask, members = _closure_mask(third, (x, y))
    sizes = [len(members)]
    while mask != full:
        outside = (~mask) & full
        p = (outside & -outside).bit_length() - 1
        witness.append(p)
        mask, members = _closure_extend(third, mask, members, p)
        sizes.append(len(members))
    return SpreadingSearchResult(
        frozenset(witness), len(witness), "greedy", tuple(sizes)
    )


def reduce_to_minimal(ts: TripleSystem, points: Iterable[int]) -> frozenset:
    """Shrink a spreading set to a minimal one by dropping redundant points.

    Repeatedly removes the least-index point whose removal keeps the set
    spreading; raises NotSpreadingError when the input does not spread.
    """
    third = ts._third
    full = (1 << ts.order) - 1
    current = sorted(_to_set(_mask_of(ts, points)))
    if _closure_mask(third, current)[0] != full:
        raise NotSpreadingError("input set does not spread")
    changed = True
    while changed:
        changed = False
        for p in list(current):
            trial = [q for q in current if q != p]
            if len(trial) >= 1 and _closure_mask(third, trial)[0] == full:
                current = trial
                changed = True
                break
    return frozenset(current)


def min_spreading_size(ts: TripleSystem):
    """Least size of a spreading set, with a witness.

    Breadth-first search over distinct closures of generator chains; see the
    module docstring for why this matches the exhaustive subset scan.
    """
    if not ts.is_steiner():
        raise NotSteinerError("min_spreading_size needs a Steiner system")
    n = ts.order
    if n > config.order_cap(config.MAX_MIN_SPREAD_ORDER):
        raise TooLargeError("min_spreading_size capped at order %d"
                            % config.order_cap(config.MAX_MIN_SPREAD_ORDER))
    if n == 1:
        return 1, frozenset({0})
    third = ts._third
    full = (1 << n) - 1
    seen = set()
    frontier = []
    for x, y in colex_subsets(n, 2):
        mask, members = _closure_mask(third, (x, y))
        if mask == full:
            return 2, frozenset({x, y})
        if mask not in seen:
            seen.add(mask)
            frontier.append((mask, members, (x, y)))
    size = 2
    while frontier:
        size += 1
        nxt = []
        for mask, members, gens in frontier:
            for p in range(n):
                if (mask >> p) & 1:
                    continue
                m2, mem2 = _closure_extend(third, mask, members, p)
                if m2 == full:
                    return size, frozenset(gens + (p,))
                if m2 not in seen:
                    seen.add(m2)
                    nxt.append((m2, mem2, gens + (p,)))
        frontier = nxt
    raise NotSteinerError("no spreading set found; system is not connected")


@dataclass(frozen=True)
class SpreadingEnumeration:
    """All minimal spreading sets up to max_size, canonically sorted; when
    the level budget stopped the scan early, truncated is True."""

    sets: tuple
    max_size: int
    truncated: bool


def _spreads_cached(third, full, subset, memo):
    key = frozenset(subset)
    hit = memo.get(key)
    if hit is None:
        hit = _closure_mask(third, subset)[0] == full
        memo[key] = hit
    return hit


def _scan_level(args):
    ts, k, tops = args
    third = ts._third
    n = ts.order
    full = (1 << n) - 1
    closed = []
    out = []
    for top in tops:
        for rest in colex_subsets(top, k - 1):
            subset = rest + (top,)
            mask = 0
            for p in subset:
                mask |= 1 << p
            if any(mask & ~c == 0 for c in closed):
                continue
            cmask, _ = _closure_mask(third, subset)
            if cmask != full:
                if cmask not in closed:
                    closed.append(cmask)
                continue
            out.append(subset)
    return out


def enumerate_minimal_spreading_sets(
    ts: TripleSystem,
    max_size: Optional[int] = None,
    budget: int = 2_000_000,
    jobs: int = 1,
) -> SpreadingEnumeration:
    """Every minimal spreading set of size at most max_size.

    Scans subsets in colexicographic order, pruning any subset inside an
    already-seen proper closed set, then verifies minimality of each hit
    against all its subsets of size >= 2.  budget caps the total number of
    subsets considered; a size level that would push past it is skipped
    entirely and flagged, which keeps results independent of jobs.
    """
    if not ts.is_steiner():
        raise NotSteinerError("spreading-set enumeration needs a Steiner system")
    n = ts.order
    if n > config.order_cap(config.MAX_ENUMERATION_ORDER):
        raise TooLargeError("enumeration capped at order %d"
                            % config.order_cap(config.MAX_ENUMERATION_ORDER))
    if max_size is None:
        max_size = (n + 1).bit_length() - 1
    third = ts._third
    full = (1 << n) - 1
    memo = {}
    results = []
    truncated = False
    spent = 0
    for k in range(2, max_size + 1):
        level = math.comb(n, k)
        if spent + level > budget:
            truncated = True
            break
        spent += level
        tops = list(range(k - 1, n))
        chunks = _split_tops(tops, k, jobs)
        hits = []
        for part in run_jobs(_scan_level, [(ts, k, c) for c in chunks], jobs):
            hits.extend(part)
        for subset in hits:
            minimal = True
            for drop in range(len(subset)):
                sub = subset[:drop] + subset[drop + 1 :]
                if len(sub) >= 2 and _spreads_cached(third, full, sub, memo):
                    minimal = False
                    break
            if minimal:
                results.append(frozenset(subset))
    results.sort(key=lambda s: (len(s), sorted(s)))
    return SpreadingEnumeration(tuple(results), max_size, truncated)


def _split_tops(tops, k, jobs):
    """Partition the top-element ranges of a colex scan into job chunks.

    Subsets with the same maximum are contiguous in colex order, so chunking
    by maximum keeps each worker's slice contiguous and the merge ordered.
    """
    if jobs <= 1:
        return [tops]
    weights = [math.comb(t, k - 1) for t in tops]
    total = sum(weights) or 1
    target = total / min(jobs, len(tops))
    chunks = []
    cur = []
    acc = 0
    for t, w in zip(tops, weights):
        cur.append(t)
        acc += w
        if acc >= target and len(chunks) < jobs - 1:
            chunks.append(cur)
            cur = []
            acc = 0
    if cur:
        chunks.append(cur)
    return chunks


def check_projective(ts: TripleSystem) -> bool:
    """Is the system a binary projective space?

    True exactly when order+1 is a power of two and every non-block 3-subset
    closes to a 7-point Fano plane.
    """
    if not ts.is_steiner():
        raise NotSteinerError("projectivity test needs a Steiner system")
    n = ts.order
    if (n + 1) & n:
        return False
    third = ts._third
    for a, b, c in combinations(range(n), 3):
        if third[a][b] == c:
            continue
        mask, members = _closure_mask(third, (a, b, c))
        if len(members) != 7:
            return False
    return True


@dataclass(frozen=True)
class DimensionCheckReport:
    """Outcome of randomized dimension-theorem checks on PG(d,2).

    For closed sets the dimension is log2(size+1) - 1 (the empty set having
    dimension -1); each trial checks that dimensions are integral, that the
    intersection of two closed sets is closed, and that
    dim cl(Y u Z) + dim (Y n Z) = dim Y + dim Z.
    """

    trials: int
    counterexamples: tuple

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _dim(size: int):
    if (size + 1) & size:
        return None
    return (size + 1).bit_length() - 2


def verify_dimension_theorem(
    ts: TripleSystem, trials: int = 500, seed: int = 0
) -> DimensionCheckReport:
    """Randomized check of the dimension identity on a pg2-tagged system."""
    if ts.tag.variant != "pg2":
        raise NotProjectiveTagError("dimension checks need a pg2-constructed system")
    d = ts.tag.param
    if d is None or d > config.MAX_DIMENSION_CHECK_DIM:
        raise TooLargeError(
            "dimension checks capped at d = %d" % config.MAX_DIMENSION_CHECK_DIM
        )
    rng = random.Random(seed)
    n = ts.order
    bad = []
    for t in range(trials):
        y = closure_points(ts, rng.sample(range(n), rng.randint(0, d + 1)))
        z = closure_points(ts, rng.sample(range(n), rng.randint(0, d + 1)))
        inter = y & z
        join = closure_points(ts, y | z)
        dims = [_dim(len(s)) for s in (y, z, inter, join)]
        closed_ok = closure_points(ts, inter) == inter
        ident_ok = (
            None not in dims and dims[3] + dims[2] == dims[0] + dims[1]
        )
        if not (closed_ok and ident_ok):
            bad.append((t, tuple(sorted(y)), tuple(sorted(z))))
    return DimensionCheckReport(trials, tuple(bad))
