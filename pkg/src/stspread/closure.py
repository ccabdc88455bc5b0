"""Closure, spreading and saturating operators on triple systems.

For a point subset S of a system, the neighbours N(S) are the points z
outside S lying in a block {x,y,z} with both x and y inside S.  Iterating
S -> S u N(S) until nothing new appears yields the closure cl(S), the
smallest subset containing S that is closed under completing covered pairs.
S is spreading when cl(S) is the whole point set, and saturating when one
single step S u N(S) already covers everything.  A Steiner system is a
spreading system when every nontrivial 3-subset (one that is not a block)
spreads; equivalently, it has no nontrivial proper subsystem.

Point sets are handled as int bitmasks internally; bit i set means point i
is a member.  The public functions accept any iterable of point indices and
return frozensets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import NotSteinerError, TrivialOrderError
from .system import TripleSystem

DEFAULT_CLOSED_SET_BUDGET = 100000


# -- bitmask plumbing ------------------------------------------------------


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(ts: TripleSystem, points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        ts.check_point(p)
        mask |= 1 << p
    return mask


def _to_set(mask: int) -> frozenset:
    return frozenset(_iter_bits(mask))


def _closure_mask(third, seeds):
    """Fixpoint closure of the given points; returns (mask, members).

    members lists the closure in discovery order, which makes incremental
    extension possible: pairs among a prefix never need re-checking.
    """
    members = []
    mask = 0
    for p in seeds:
        bit = 1 << p
        if not mask & bit:
            mask |= bit
            members.append(p)
    i = 0
    while i < len(members):
        x = members[i]
        row = third[x]
        for j in range(i):
            z = row[members[j]]
            if z >= 0 and not (mask >> z) & 1:
                mask |= 1 << z
                members.append(z)
        i += 1
    return mask, members


def _closure_extend(third, mask, members, extra):
    """Closure of (closed set given by mask/members) plus one point.

    Only pairs touching the new point and its consequences are examined;
    pairs inside the already-closed prefix cannot fire anything new.
    """
    mask |= 1 << extra
    members = members + [extra]
    i = len(members) - 1
    while i < len(members):
        x = members[i]
        row = third[x]
        for j in range(i):
            z = row[members[j]]
            if z >= 0 and not (mask >> z) & 1:
                mask |= 1 << z
                members.append(z)
        i += 1
    return mask, members


# -- public operators ------------------------------------------------------


def neighbors(ts: TripleSystem, points: Iterable[int]) -> frozenset:
    """Points outside the set that complete a covered pair inside it."""
    mask = _mask_of(ts, points)
    third = ts._third
    out = 0
    inside = list(_iter_bits(mask))
    for i, x in enumerate(inside):
        row = third[x]
        for y in inside[:i]:
            z = row[y]
            if z >= 0 and not (mask >> z) & 1:
                out |= 1 << z
    return _to_set(out)


def closure_points(ts: TripleSystem, points: Iterable[int]) -> frozenset:
    """The closure cl(S) without step bookkeeping (fast path)."""
    mask, _ = _closure_mask(ts._third, _iter_bits(_mask_of(ts, points)))
    return _to_set(mask)


@dataclass(frozen=True)
class ClosureTrace:
    """Step-by-step closure record.

    steps[0] is the input set; steps[i+1] = steps[i] u N(steps[i]); the last
    step is the fixpoint cl(S).  firing_blocks[i] lists, in sorted order, the
    blocks {x,y,z} with x,y in steps[i] whose third point z entered at step
    i+1, so len(firing_blocks) == len(steps) - 1.
    """

    steps: tuple
    firing_blocks: tuple

    @property
    def points(self) -> frozenset:
        return self.steps[-1]

    def report(self) -> str:
        """Line-oriented rendering used by the CLI --trace flag."""
        lines = ["step 0: start %s" % _fmt_points(self.steps[0])]
        for i, fired in enumerate(self.firing_blocks, start=1):
            added = self.steps[i] - self.steps[i - 1]
            blocks = ",".join("(%d %d %d)" % b for b in fired)
            lines.append("step %d: add %s via %s" % (i, _fmt_points(added), blocks))
        lines.append(
            "closure: %s size %d" % (_fmt_points(self.points), len(self.points))
        )
        return "\n".join(lines)


def _fmt_points(points) -> str:
    return "{%s}" % ",".join(str(p) for p in sorted(points))


def closure(ts: TripleSystem, points: Iterable[int]) -> ClosureTrace:
    """Full closure trace of the given point set."""
    third = ts._third
    mask = _mask_of(ts, points)
    steps = [_to_set(mask)]
    firing = []
    fresh = list(_iter_bits(mask))
    older = []
    while True:
        fired = set()
        new_mask = 0
        # only pairs with at least one endpoint added last round can fire
        for i, x in enumerate(fresh):
            row = third[x]
            for y in older + fresh[:i]:
                z = row[y]
                if z >= 0 and not (mask >> z) & 1:
                    new_mask |= 1 << z
                    fired.add(tuple(sorted((x, y, z))))
        if not new_mask:
            break
        mask |= new_mask
        older += fresh
        fresh = list(_iter_bits(new_mask))
        steps.append(_to_set(mask))
        firing.append(tuple(sorted(fired)))
    return ClosureTrace(tuple(steps), tuple(firing))


def is_spreading_set(ts: TripleSystem, points: Iterable[int]) -> bool:
    """True when cl(S) is the whole point set."""
    mask, _ = _closure_mask(ts._third, _iter_bits(_mask_of(ts, points)))
    return mask == (1 << ts.order) - 1


def is_saturating_set(ts: TripleSystem, points: Iterable[int]) -> bool:
    """True when S u N(S) already covers every point (one-step spreading)."""
    mask = _mask_of(ts, points)
    third = ts._third
    inside = list(_iter_bits(mask))
    cover = mask
    for i, x in enumerate(inside):
        row = third[x]
        for y in inside[:i]:
            z = row[y]
            if z >= 0:
                cover |= 1 << z
    return cover == (1 << ts.order) - 1


def is_spreading_system(ts: TripleSystem) -> bool:
    """Does every nontrivial 3-subset spread?

    Equivalent to the absence of nontrivial proper subsystems.  Requires a
    Steiner system of order above 3; smaller orders have no nontrivial
    3-subsets to test.
    """
    if not ts.is_steiner():
        raise NotSteinerError("spreading-system test needs a Steiner system")
    if ts.order <= 3:
        raise TrivialOrderError("spreading-system test needs order > 3")
    third = ts._third
    full = (1 << ts.order) - 1
    for a, b, c in combinations(range(ts.order), 3):
        if third[a][b] == c:
            continue
        mask, _ = _closure_mask(third, (a, b, c))
        if mask != full:
            return False
    return True


@dataclass(frozen=True)
class ClosedSetEnumeration:
    """Result of enumerate_closed_sets: the proper nontrivial closed sets,
    canonically sorted, plus a flag telling whether the budget cut the
    search short."""

    sets: tuple
    truncated: bool


def enumerate_closed_sets(
    ts: TripleSystem, max_count: int = DEFAULT_CLOSED_SET_BUDGET
) -> ClosedSetEnumeration:
    """All proper closed sets of size >= 3 that are not single blocks.

    These are exactly the nontrivial subsystems.  Search is breadth-first on
    the closure lattice: seed with the closures of all non-block 3-subsets,
    then repeatedly close (closed set + outside point).  Collection stops,
    with truncated=True, once max_count sets have been found.
    """
    third = ts._third
    n = ts.order
    full = (1 << n) - 1
    found = {}
    frontier = []
    truncated = False

    def offer(mask, members):
        nonlocal truncated
        if mask == full or mask in found:
            return
        size = len(members)
        if size < 3:
            return
        if size == 3:
            a, b, c = sorted(members)
            if third[a][b] == c:
                return
        if len(found) >= max_count:
            truncated = True
            return
        found[mask] = tuple(members)
        frontier.append(mask)

    for a, b, c in combinations(range(n), 3):
        if third[a][b] == c:
            continue
        mask, members = _closure_mask(third, (a, b, c))
        offer(mask, members)
        if truncated:
            break

    qi = 0
    while qi < len(frontier) and not truncated:
        mask = frontier[qi]
        members = list(found[mask])
        qi += 1
        for p in range(n):
            if not (mask >> p) & 1:
                m2, mem2 = _closure_extend(third, mask, members, p)
                offer(m2, mem2)
                if truncated:
                    break

    sets = sorted((_to_set(m) for m in found), key=lambda s: (len(s), sorted(s)))
    return ClosedSetEnumeration(tuple(sets), truncated)
