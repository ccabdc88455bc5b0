"""Completion of partial systems by seeded hill climbing.

complete_partial embeds a partial triple system into a Steiner system of a
chosen admissible order.  The source blocks are frozen; the climber then
repeatedly picks a random uncovered pair {x,y} and a random admissible third
point z, removing at most one non-frozen block that conflicts with {x,z} or
{y,z}.  Each such switch never decreases the number of covered pairs, which
is the classical hill-climbing scheme for triple systems, restricted so the
frozen blocks survive.  Any target order v >= 2u+1 (u = source order) is
safe territory: embeddings exist there, and u <= (v-1)/2 also guarantees
that an uncovered pair always has conflict-free third points available.

two_minimal_sizes_sts drives the whole pipeline of the two-sizes
construction: build the partial system whose spreading structure is rigged,
embed it into the first admissible order at least 2u+1 (falling back to the
next two admissible orders), and verify on the finished Steiner system that
{b1,b2,b3} and the affine base are both minimal spreading sets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .closure import is_spreading_set
from .constructions import section4_partial
from .errors import (
    BudgetExhaustedError,
    FrozenConflictError,
    InadmissibleOrderError,
    TrivialOrderError,
)
from .system import (
    GeometryTag,
    SystemKind,
    TripleSystem,
    steiner_admissible,
)

DEFAULT_RESTARTS = 50
DEFAULT_MOVES = 10 ** 6


@dataclass(frozen=True)
class CompletionReport:
    """Outcome of a completion run.

    iterations counts hill-climbing moves summed over restarts; checks are
    (name, passed) pairs for the post-hoc verifications.  Identical inputs
    and seed always reproduce the identical report.
    """

    source_order: int
    target_order: int
    seed: int
    restarts_used: int
    iterations: int
    success: bool
    system: Optional[TripleSystem]
    checks: tuple

    def to_kv(self) -> str:
        lines = [
            "source_order=%d" % self.source_order,
            "target_order=%d" % self.target_order,
            "seed=%d" % self.seed,
            "restarts_used=%d" % self.restarts_used,
            "iterations=%d" % self.iterations,
            "success=%s" % ("true" if self.success else "false"),
        ]
        for name, okay in self.checks:
            lines.append("check.%s=%s" % (name, "pass" if okay else "fail"))
        return "\n".join(lines) + "\n"


def _climb(order, frozen_blocks, rng, max_moves):
    """One hill-climbing attempt; returns (blocks or None, moves used)."""
    n = order
    cover = [[-1] * n for _ in range(n)]
    blocks = {}
    nfrozen = len(frozen_blocks)
    for bid, (x, y, z) in enumerate(frozen_blocks):
        blocks[bid] = (x, y, z)
        for u, v in ((x, y), (x, z), (y, z)):
            if cover[u][v] != -1:
                raise FrozenConflictError("frozen blocks share the pair (%d,%d)" % (u, v))
            cover[u][v] = bid
            cover[v][u] = bid
    next_id = nfrozen

    uncov = []
    pos = {}
    for x in range(n):
        for y in range(x + 1, n):
            if cover[x][y] == -1:
                pos[x * n + y] = len(uncov)
                uncov.append(x * n + y)

    def cover_pair(x, y, bid):
        if x > y:
            x, y = y, x
        cover[x][y] = bid
        cover[y][x] = bid
        code = x * n + y
        i = pos.pop(code)
        last = uncov.pop()
        if last != code:
            uncov[i] = last
            pos[last] = i

    def uncover_pair(x, y):
        if x > y:
            x, y = y, x
        cover[x][y] = -1
        cover[y][x] = -1
        code = x * n + y
        pos[code] = len(uncov)
        uncov.append(code)

    moves = 0
    while uncov and moves < max_moves:
        moves += 1
        code = uncov[rng.randrange(len(uncov))]
        x, y = divmod(code, n)
        covx = cover[x]
        covy = cover[y]
        cands = []
        for z in range(n):
            if z == x or z == y:
                continue
            c1 = covx[z]
            c2 = covy[z]
            if 0 <= c1 < nfrozen or 0 <= c2 < nfrozen:
                continue
            if c1 >= 0 and c2 >= 0:
                continue  # switching may resolve one conflict, not two
            cands.append(z)
        if not cands:
            continue
        z = cands[rng.randrange(len(cands))]
        conflict = covx[z] if covx[z] >= 0 else covy[z]
        if conflict >= 0:
            a, b, c = blocks.pop(conflict)
            uncover_pair(a, b)
            uncover_pair(a, c)
            uncover_pair(b, c)
        bid = next_id
        next_id += 1
        blocks[bid] = tuple(sorted((x, y, z)))
        cover_pair(x, y, bid)
        cover_pair(x, z, bid)
        cover_pair(y, z, bid)

    if uncov:
        return None, moves
    return list(blocks.values()), moves


def complete_partial(
    ts: TripleSystem,
    target_order: int,
    seed: int = 0,
    restarts: int = DEFAULT_RESTARTS,
    moves_per_restart: int = DEFAULT_MOVES,
) -> CompletionReport:
    """Embed ts into a Steiner system of the given order.

    The source keeps its point indices; new points are appended.  Raises
    BudgetExhaustedError, carrying the failed report as .partial, when no
    restart converges.  Targets below 2*order+1 are accepted (the caller may
    know better) but are not guaranteed to admit any completion.
    """
    if not steiner_admissible(target_order):
        raise InadmissibleOrderError(
            "target order %d is not 1 or 3 mod 6" % target_order
        )
    if target_order < ts.order:
        raise InadmissibleOrderError(
            "target order %d below source order %d" % (target_order, ts.order)
        )
    rng = random.Random(seed)
    total_moves = 0
    for attempt in range(1, restarts + 1):
        result, moves = _climb(target_order, ts.triples, rng, moves_per_restart)
        total_moves += moves
        if result is None:
            continue
        variant = "random" if not ts.triples else "completed"
        tag = GeometryTag(variant, None, seed)
        system = TripleSystem(target_order, result, SystemKind.STEINER, tag)
        checks = (
            ("steiner", system.is_steiner()),
            ("contains_source", set(ts.triples) <= set(system.triples)),
        )
        return CompletionReport(
            ts.order, target_order, seed, attempt, total_moves,
            True, system, checks,
        )
    report = CompletionReport(
        ts.order, target_order, seed, restarts, total_moves, False, None, ()
    )
    raise BudgetExhaustedError(
        "no completion of order %d in %d restarts" % (target_order, restarts),
        partial=report,
    )


def random_sts(order: int, seed: int = 0) -> TripleSystem:
    """A pseudorandom Steiner triple system built by hill climbing."""
    if not steiner_admissible(order):
        raise InadmissibleOrderError("no Steiner system of order %d" % order)
    if order < 7:
        raise TrivialOrderError("random_sts is for orders >= 7")
    empty = TripleSystem(order, (), SystemKind.PARTIAL)
    report = complete_partial(empty, order, seed)
    return report.system


def next_admissible(v: int) -> int:
    """Smallest Steiner-admissible order >= v."""
    while not steiner_admissible(v):
        v += 1
    return v


def two_minimal_sizes_sts(
    n: int = 4,
    seed: int = 0,
    restarts_per_target: int = DEFAULT_RESTARTS,
    moves_per_restart: int = DEFAULT_MOVES,
):
    """A Steiner system with minimal spreading sets of sizes 3 and n.

    Returns (system, base, b_triple): base is the image of the affine base
    (a minimal spreading set of size n), b_triple = {b1,b2,b3} (a minimal
    spreading set of size 3).  The partial two-sizes system is embedded into
    the smallest admissible order at least twice-plus-one its point count;
    if every restart budget there fails, the next two admissible orders are
    tried.  Each candidate completion is verified: both witnesses must
    spread and every hyperplane X_i must stay properly closed (which also
    certifies minimality of the base, since any proper subset of it sits
    inside some X_i).
    """
    art = section4_partial(n)
    source = art.system
    u = source.order
    base = frozenset(art.base_points)
    b_triple = frozenset(art.b_points[:3])
    rng = random.Random(seed)

    targets = []
    v = next_admissible(2 * u + 1)
    for _ in range(3):
        targets.append(v)
        v = next_admissible(v + 1)

    last_report = None
    for target in targets:
        remaining = restarts_per_target
        while remaining > 0:
            try:
                report = complete_partial(
                    source,
                    target,
                    seed=rng.getrandbits(32),
                    restarts=remaining,
                    moves_per_restart=moves_per_restart,
                )
            except BudgetExhaustedError as exc:
                last_report = exc.partial
                break
            remaining -= report.restarts_used
            system = report.system
            last_report = report
            okay = (
                is_spreading_set(system, b_triple)
                and is_spreading_set(system, base)
                and all(
                    not is_spreading_set(system, base - {a})
                    for a in sorted(base)
                )
            )
            if okay:
                return system, base, b_triple
    raise BudgetExhaustedError(
        "two-sizes completion failed for targets %s" % (targets,),
        partial=last_report,
    )
