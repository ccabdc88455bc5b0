"""Constructions of Steiner and partial triple systems.

Provided families:

* pg2(d): the projective space PG(d,2).  Points are the nonzero vectors of
  F2^(d+1), blocks are the triples {a, b, a xor b}.  Point i carries the
  label vector of the integer i+1, so the standard basis vector e_i sits at
  point index 2^i - 1.

* ag3(d): the affine space AG(d,3).  Points are all vectors of F3^d (point
  index = integer with base-3 digits the coordinates), blocks are the
  zero-sum triples of distinct vectors, i.e. the affine lines.

* subsystem_free_sts15(seed): a random STS(15) without proper subsystems,
  found by randomized pair-covering backtracking and verified before return.

* perturbed_pg(d, seed): PG(d,2) with the blocks inside the 15-point
  subspace W spanned by e_0..e_3 replaced by a subsystem-free STS(15),
  aligned so that the three lines on the pairs {e_1,e_2}, {e_2,e_3},
  {e_1,e_3} survive.  The result is a Steiner system of the same order in
  which {e_1, ..., e_d} is a minimal spreading set of size d: one less than
  the maximum that greedy growth can force.

* section4_partial(n): the partial system with minimal spreading sets of
  two different sizes (3 and n).  Inside AG(n-1,3) take the affine base
  a_1 = 0, a_2 = e_1, ..., a_n = e_(n-1); for each i let X_i be the affine
  span of the base minus a_i, and collect every line lying inside some X_i.
  Then pick b_1, b_2, b_3 from X_1, X_2, X_3 minus the other hyperplanes,
  append fresh points b_4 ... b_(n+7), and wire them with the triples
  (b_k, b_(k+1), b_(k+3)) for k = 1..n+4 and (b_l, b_(l+4), a_(l-3)) for
  l = 4..n+3.  The b-chain drags in every a_i, so {b_1,b_2,b_3} spreads,
  while each X_i stays closed because no added triple has two points in it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from . import config
from .closure import _closure_mask, closure_points, is_spreading_system
from .errors import (
    EmptyDifferenceSetError,
    NoTriangleAlignmentError,
    NoTriangleError,
    NotSteinerError,
    SearchExhaustedError,
    TooLargeError,
    TrivialOrderError,
)
from .system import GeometryTag, SystemKind, TripleSystem

STS15_NODE_BUDGET = 10 ** 6
STS15_MAX_RESTARTS = 100


def pg2(d: int) -> TripleSystem:
    """The projective Steiner triple system PG(d,2) of order 2^(d+1) - 1."""
    if d < 1:
        raise TrivialOrderError("pg2 needs dimension >= 1")
    order = (1 << (d + 1)) - 1
    if order > config.order_cap(config.MAX_CONSTRUCTION_ORDER):
        raise TooLargeError("PG(%d,2) has order %d, above the cap" % (d, order))
    triples = []
    for a in range(1, order + 1):
        for b in range(a + 1, order + 1):
            c = a ^ b
            if c > b:
                triples.append((a - 1, b - 1, c - 1))
    labels = tuple(
        tuple((v >> i) & 1 for i in range(d + 1)) for v in range(1, order + 1)
    )
    tag = GeometryTag("pg2", d, None, labels)
    return TripleSystem(order, triples, SystemKind.STEINER, tag)


def _f3_digits(value: int, width: int) -> tuple:
    return tuple((value // 3 ** i) % 3 for i in range(width))


def ag3(d: int) -> TripleSystem:
    """The affine Steiner triple system AG(d,3) of order 3^d."""
    if d < 1:
        raise TrivialOrderError("ag3 needs dimension >= 1")
    order = 3 ** d
    if order > config.order_cap(config.MAX_CONSTRUCTION_ORDER):
        raise TooLargeError("AG(%d,3) has order %d, above the cap" % (d, order))
    powers = [3 ** i for i in range(d)]
    triples = []
    for a in range(order):
        da = _f3_digits(a, d)
        for b in range(a + 1, order):
            db = _f3_digits(b, d)
            c = sum(((-da[i] - db[i]) % 3) * powers[i] for i in range(d))
            if c > b:
                triples.append((a, b, c))
    labels = tuple(_f3_digits(v, d) for v in range(order))
    tag = GeometryTag("ag3", d, None, labels)
    return TripleSystem(order, triples, SystemKind.STEINER, tag)


def find_triangle(ts: TripleSystem):
    """First triangle configuration of a Steiner system, in index order.

    Returns (vertices, edges) = ((a, a', a''), (b, b', b'')) such that
    {a, b, a'}, {a', b', a''} and {a'', b'', a} are blocks.  Any non-block
    triple works as the vertex set: the three pair completions are then
    automatically distinct and disjoint from the vertices, so systems of
    order >= 7 always contain one.
    """
    if not ts.is_steiner():
        raise NotSteinerError("triangle search needs a Steiner system")
    if ts.order < 7:
        raise NoTriangleError("no triangle in orders below 7")
    third = ts._third
    for a, b, c in combinations(range(ts.order), 3):
        if third[a][b] != c:
            return (a, b, c), (third[a][b], third[b][c], third[a][c])
    raise NoTriangleError("system has no non-block triple")


class _NodesExhausted(Exception):
    pass


def _backtrack_sts(order: int, rng: random.Random, node_budget: int):
    """One randomized pair-covering backtracking run; blocks or None."""
    third = [[-1] * order for _ in range(order)]
    blocks = []
    nodes = 0

    def least_uncovered():
        for x in range(order):
            row = third[x]
            for y in range(x + 1, order):
                if row[y] == -1:
                    return x, y
        return None

    def place(x, y, z):
        for u, v, w in ((x, y, z), (x, z, y), (y, z, x)):
            third[u][v] = w
            third[v][u] = w
        blocks.append((x, y, z))

    def unplace(x, y, z):
        for u, v in ((x, y), (x, z), (y, z)):
            third[u][v] = -1
            third[v][u] = -1
        blocks.pop()

    def extend():
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _NodesExhausted
        pair = least_uncovered()
        if pair is None:
            return True
        x, y = pair
        rowx, rowy = third[x], third[y]
        cands = [
            z
            for z in range(order)
            if z != x and z != y and rowx[z] == -1 and rowy[z] == -1
        ]
        rng.shuffle(cands)
        for z in cands:
            place(x, y, z)
            if extend():
                return True
            unplace(x, y, z)
        return False

    try:
        return list(blocks) if extend() else None
    except _NodesExhausted:
        return None


def subsystem_free_sts15(
    seed: int = 0,
    max_restarts: int = STS15_MAX_RESTARTS,
    node_budget: int = STS15_NODE_BUDGET,
) -> TripleSystem:
    """A random STS(15) in which every nontrivial 3-subset spreads.

    Randomized backtracking over pair covering, with restarts; candidates
    with a proper subsystem are rejected and the search continues.  Fully
    deterministic for a fixed seed.
    """
    rng = random.Random(seed)
    for _ in range(max_restarts):
        blocks = _backtrack_sts(15, rng, node_budget)
        if blocks is None:
            continue
        ts = TripleSystem(
            15, blocks, SystemKind.STEINER, GeometryTag("random", None, seed)
        )
        if is_spreading_system(ts):
            return ts
    raise SearchExhaustedError(
        "no subsystem-free STS(15) found in %d restarts" % max_restarts
    )


def perturbed_pg(d: int, seed: int = 0) -> TripleSystem:
    """PG(d,2) with its e_0..e_3 subspace replaced by a subsystem-free STS(15).

    The replacement is relabeled so that the three blocks on the pairs
    {e_1,e_2}, {e_2,e_3} and {e_1,e_3} coincide with the projective lines;
    every block with at most one point inside the subspace is untouched.
    {e_1, ..., e_d} then spreads and no proper subset of it does, giving a
    minimal spreading set one short of the projective maximum.
    """
    if d < 4:
        raise TrivialOrderError("perturbed_pg needs dimension >= 4")
    base = pg2(d)
    # point index of the label vector v is v - 1
    v1, v2, v3 = 1, 3, 7
    e12, e23, e13 = 5, 11, 9
    wanted = [(1, 3, 5), (3, 7, 11), (1, 7, 9)]

    sts = subsystem_free_sts15(seed)
    (a1, a2, a3), (b12, b23, b13) = find_triangle(sts)
    relabel = {a1: v1, a2: v2, a3: v3, b12: e12, b23: e23, b13: e13}
    rest_src = [p for p in range(15) if p not in relabel]
    rest_dst = [p for p in range(15) if p not in set(relabel.values())]
    relabel.update(zip(rest_src, rest_dst))

    inner = [
        tuple(sorted((relabel[a], relabel[b], relabel[c]))) for a, b, c in sts.triples
    ]
    outer = [t for t in base.triples if t[2] >= 15]
    tag = GeometryTag("perturbed_pg", d, seed, base.tag.labels)
    ts = TripleSystem(base.order, outer + inner, SystemKind.STEINER, tag)

    for block in wanted:
        if block not in ts.triples:
            raise NoTriangleAlignmentError("aligned block %r missing" % (block,))
    w_mask, _ = _closure_mask(ts._third, (v1, v2, v3))
    if w_mask != (1 << 15) - 1:
        raise NoTriangleAlignmentError("replacement subsystem does not fill W")
    return ts


@dataclass(frozen=True)
class Section4Artifacts:
    """Output bundle of section4_partial.

    system is the partial triple system; base_points are the images of the
    affine base a_1..a_n, hyperplane_sets the images of X_1..X_n, and
    b_points the chain b_1..b_(n+7) (the first three live inside the
    geometry, the rest are fresh points).
    """

    system: TripleSystem
    base_points: tuple
    hyperplane_sets: tuple
    b_points: tuple


def section4_partial(n: int = 4) -> Section4Artifacts:
    """Partial system with minimal spreading sets of sizes 3 and n."""
    if n <= 3:
        raise TrivialOrderError("two-sizes construction needs n > 3")
    if n > config.section_n_cap():
        raise TooLargeError("two-sizes construction capped at n = %d" % config.section_n_cap())

    ambient = ag3(n - 1)
    labels = ambient.tag.labels
    base = [0] + [3 ** j for j in range(n - 1)]  # 0, e_1, ..., e_(n-1)
    hyper = []
    for i in range(n):
        span = closure_points(ambient, [p for k, p in enumerate(base) if k != i])
        if base[i] in span:
            raise EmptyDifferenceSetError("affine base point a_%d is not independent" % (i + 1))
        hyper.append(span)

    union = sorted(set().union(*hyper))
    rank = {p: i for i, p in enumerate(union)}
    hyper_masks = [frozenset(h) for h in hyper]

    kept = set()
    for t in ambient.triples:
        s = set(t)
        if any(s <= h for h in hyper_masks):
            kept.add(t)

    b_geo = []
    for i in range(3):
        others = set().union(*(h for j, h in enumerate(hyper_masks) if j != i))
        diff = sorted(hyper_masks[i] - others, key=lambda p: labels[p])
        if not diff:
            raise EmptyDifferenceSetError(
                "X_%d minus the other hyperplanes is empty" % (i + 1)
            )
        b_geo.append(diff[0])

    order = len(union) + n + 4
    b_points = [rank[p] for p in b_geo] + list(range(len(union), order))
    base_new = [rank[p] for p in base]
    hyper_new = [frozenset(rank[p] for p in h) for h in hyper_masks]

    triples = [tuple(sorted((rank[a], rank[b], rank[c]))) for a, b, c in kept]
    added = []
    for k in range(1, n + 5):  # (b_k, b_(k+1), b_(k+3)),  k = 1..n+4
        added.append((b_points[k - 1], b_points[k], b_points[k + 2]))
    for l in range(4, n + 4):  # (b_l, b_(l+4), a_(l-3)),  l = 4..n+3
        added.append((b_points[l - 1], b_points[l + 3], base_new[l - 4]))
    for t in added:
        assert all(len(set(t) & h) <= 1 for h in hyper_new), (
            "added triple %r meets a hyperplane twice" % (t,)
        )
    triples += [tuple(sorted(t)) for t in added]

    full_labels = tuple(
        labels[union[i]] if i < len(union) else None for i in range(order)
    )
    tag = GeometryTag("section4", n, None, full_labels)
    system = TripleSystem(order, triples, SystemKind.PARTIAL, tag)
    return Section4Artifacts(
        system=system,
        base_points=tuple(base_new),
        hyperplane_sets=tuple(hyper_new),
        b_points=tuple(b_points),
    )
