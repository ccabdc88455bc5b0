"""Core types for (partial) Steiner triple systems.

A triple system here is a finite point set {0, ..., order-1} together with a
collection of 3-element blocks in which any two blocks share at most one
point (pairwise linearity).  When every pair of points lies in exactly one
block the system is a Steiner triple system; such systems exist precisely for
orders congruent to 1 or 3 mod 6 (orders 1 and 3 are degenerate but legal).

The module also fixes the one-line-per-block text interchange format used by
the command line tools:

    v <order> <steiner|partial>
    # optional comment lines
    b <i> <j> <k>

with 0-based point indices, UTF-8 text and LF line endings.  Serialization is
canonical: each triple is sorted ascending and triples are emitted in
lexicographic order, so equal systems produce byte-identical files.
Coordinate labels attached by the geometric constructions travel in a sidecar
file of "l <index> <vector>" lines rather than in the main format.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    BadOrderError,
    DuplicatePairError,
    NotSteinerError,
    OutOfRangeError,
    ParseError,
    SamePointError,
)

# A point set is just a frozenset of point indices.
PointSet = frozenset

Triple = tuple


class SystemKind(enum.Enum):
    PARTIAL = "partial"
    STEINER = "steiner"


@dataclass(frozen=True)
class GeometryTag:
    """Construction provenance carried by a TripleSystem.

    variant is one of "plain", "pg2", "ag3", "perturbed_pg", "section4" or
    "random"; param holds the dimension d (pg2, ag3, perturbed_pg) or the
    parameter n (section4); seed records the RNG seed for randomized
    constructions.  labels, when present, maps each point index to its
    coordinate vector (a tuple of small ints), with None entries for points
    that have no geometric meaning.
    """

    variant: str = "plain"
    param: Optional[int] = None
    seed: Optional[int] = None
    labels: Optional[tuple] = None

    def label_of(self, point: int):
        if self.labels is None:
            return None
        return self.labels[point]


PLAIN_TAG = GeometryTag()


def steiner_admissible(order: int) -> bool:
    """True when a Steiner triple system of this order exists."""
    if order < 1:
        return False
    if order <= 3:
        return order in (1, 3)
    return order % 6 in (1, 3)


def _canonical_triples(triples: Iterable[Sequence[int]], order: int):
    seen = set()
    out = []
    for t in triples:
        if len(t) != 3:
            raise SamePointError("block %r does not have three distinct points" % (t,))
        a, b, c = sorted(t)
        if a == b or b == c:
            raise SamePointError("block %r repeats a point" % (t,))
        if a < 0 or c >= order:
            raise OutOfRangeError("block %r is outside [0, %d)" % (t, order))
        key = (a, b, c)
        if key in seen:
            continue
        seen.add(key)
        out.append(key)
    out.sort()
    return tuple(out)


class TripleSystem:
    """An immutable, validated (partial) Steiner triple system.

    Instances are built through build_system / parse or the construction
    helpers; attributes must not be mutated after construction.  Duplicate
    triples in the input collapse silently; a shared pair between two
    distinct triples raises DuplicatePairError.  A system declared partial
    whose pair coverage turns out to be total is upgraded to Steiner so that
    "kind is Steiner" and "every pair is covered" always agree.
    """

    __slots__ = ("order", "triples", "kind", "tag", "_third")

    def __init__(self, order, triples, kind=SystemKind.PARTIAL, tag=PLAIN_TAG):
        if not isinstance(order, int) or order < 1:
            raise BadOrderError("order must be a positive integer, got %r" % (order,))
        if kind is SystemKind.STEINER and order > 3 and order % 6 not in (1, 3):
            raise BadOrderError(
                "no Steiner triple system of order %d exists (order mod 6 must be 1 or 3)"
                % order
            )
        triples = _canonical_triples(triples, order)

        # third[x][y] = z when {x,y,z} is a block, else -1; doubles as the
        # pair index and as the linearity check.
        third = [[-1] * order for _ in range(order)]
        for a, b, c in triples:
            for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
                if third[x][y] != -1:
                    raise DuplicatePairError(
                        "pair (%d, %d) lies in two blocks" % (x, y)
                    )
                third[x][y] = z
                third[y][x] = z

        total = all(
            third[x][y] != -1 for x in range(order) for y in range(x + 1, order)
        )
        if kind is SystemKind.STEINER and not total:
            raise NotSteinerError("some pair is not covered by any block")
        if total and steiner_admissible(order):
            kind = SystemKind.STEINER

        self.order = order
        self.triples = triples
        self.kind = kind
        self.tag = tag if tag is not None else PLAIN_TAG
        self._third = third

    def __setattr__(self, name, value):
        if hasattr(self, "_third"):
            raise AttributeError("TripleSystem is immutable")
        super().__setattr__(name, value)

    # -- basic queries ---------------------------------------------------

    @property
    def points(self):
        return range(self.order)

    def is_steiner(self) -> bool:
        return self.kind is SystemKind.STEINER

    def check_point(self, x: int) -> None:
        if not isinstance(x, int) or x < 0 or x >= self.order:
            raise OutOfRangeError("point %r outside [0, %d)" % (x, self.order))

    def third_point(self, x: int, y: int):
        """The unique z with {x,y,z} a block, or None when the pair is uncovered."""
        self.check_point(x)
        self.check_point(y)
        if x == y:
            raise SamePointError("third_point needs two distinct points, got %d twice" % x)
        z = self._third[x][y]
        return None if z == -1 else z

    def block_through(self, x: int, y: int):
        """The block containing the pair {x,y}, or None."""
        z = self.third_point(x, y)
        if z is None:
            return None
        return tuple(sorted((x, y, z)))

    def __reduce__(self):
        # revalidating on unpickle is cheap and keeps the slots+guard scheme
        return (TripleSystem, (self.order, self.triples, self.kind, self.tag))

    def __eq__(self, other):
        if not isinstance(other, TripleSystem):
            return NotImplemented
        return (
            self.order == other.order
            and self.kind == other.kind
            and self.triples == other.triples
        )

    def __hash__(self):
        return hash((self.order, self.kind, self.triples))

    def __repr__(self):
        return "TripleSystem(order=%d, blocks=%d, kind=%s, tag=%s)" % (
            self.order,
            len(self.triples),
            self.kind.value,
            self.tag.variant,
        )


def build_system(order, triples, kind=SystemKind.PARTIAL, tag=PLAIN_TAG) -> TripleSystem:
    """Validate and build a TripleSystem.

    Steiner kind is verified, never trusted: every pair must be covered and
    the order must admit a Steiner system.  Accepts kind as a SystemKind or
    as the strings "partial" / "steiner".
    """
    if isinstance(kind, str):
        try:
            kind = SystemKind(kind)
        except ValueError:
            raise BadOrderError("unknown system kind %r" % kind) from None
    return TripleSystem(order, triples, kind, tag)


def validate_pairwise(ts: TripleSystem) -> None:
    """Re-run the linearity check; kept for symmetry, construction validates."""
    TripleSystem(ts.order, ts.triples, ts.kind, ts.tag)


def induced_subsystem(ts: TripleSystem, points: Iterable[int]):
    """Restrict ts to a point subset.

    Returns (sub, kept) where kept is the sorted tuple of original indices;
    point kept[i] of ts becomes point i of sub.  sub contains exactly the
    blocks of ts lying fully inside the subset.  Closed subsets of Steiner
    systems therefore induce full Steiner systems and are tagged as such.
    """
    kept = sorted(set(points))
    for p in kept:
        ts.check_point(p)
    if not kept:
        raise OutOfRangeError("induced subsystem needs at least one point")
    rank = {p: i for i, p in enumerate(kept)}
    inside = set(kept)
    sub_triples = [
        (rank[a], rank[b], rank[c])
        for a, b, c in ts.triples
        if a in inside and b in inside and c in inside
    ]
    sub = TripleSystem(len(kept), sub_triples, SystemKind.PARTIAL, PLAIN_TAG)
    return sub, tuple(kept)


# -- text format ---------------------------------------------------------


def serialize(ts: TripleSystem) -> str:
    """Canonical text form of a system (sorted triples, LF line endings)."""
    lines = ["v %d %s" % (ts.order, ts.kind.value)]
    tag = ts.tag
    if tag.variant != "plain":
        extra = "" if tag.seed is None else " seed=%d" % tag.seed
        param = "-" if tag.param is None else str(tag.param)
        lines.append("# tag %s %s%s" % (tag.variant, param, extra))
    for a, b, c in ts.triples:
        lines.append("b %d %d %d" % (a, b, c))
    return "\n".join(lines) + "\n"


def serialize_labels(ts: TripleSystem) -> str:
    """Sidecar text mapping point indices to coordinate vectors.

    Empty string when the system carries no labels.  Vector coordinates are
    the digits of the label tuple, e.g. (1,0,1) -> "101".
    """
    labels = ts.tag.labels
    if not labels:
        return ""
    lines = []
    for i, vec in enumerate(labels):
        if vec is None:
            continue
        lines.append("l %d %s" % (i, "".join(str(d) for d in vec)))
    return "\n".join(lines) + "\n" if lines else ""


def _parse_tag_comment(text: str):
    parts = text.split()
    # expected: tag <variant> <param|-> [seed=<int>]
    if len(parts) < 3 or parts[0] != "tag":
        return None
    variant = parts[1]
    if variant not in ("plain", "pg2", "ag3", "perturbed_pg", "section4", "random"):
        return None
    param = None if parts[2] == "-" else int(parts[2])
    seed = None
    for extra in parts[3:]:
        if extra.startswith("seed="):
            seed = int(extra[5:])
    return GeometryTag(variant, param, seed, None)


def parse(text: str) -> TripleSystem:
    """Parse the text interchange format back into a validated system.

    Raises ParseError with a 1-based line number on any malformed line.  The
    construction tag (variant, parameter, seed) is restored when the writer
    recorded it; coordinate labels live in the sidecar and are re-attached
    with parse_labels / with_labels.
    """
    order = None
    kind = None
    tag = PLAIN_TAG
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if order is not None and tag is PLAIN_TAG:
                maybe = _parse_tag_comment(line[1:].strip())
                if maybe is not None:
                    tag = maybe
            continue
        fields = line.split()
        if fields[0] == "v":
            if order is not None:
                raise ParseError("line %d: repeated header" % lineno)
            if len(fields) != 3:
                raise ParseError("line %d: header must be 'v <order> <kind>'" % lineno)
            try:
                order = int(fields[1])
            except ValueError:
                raise ParseError("line %d: bad order %r" % (lineno, fields[1])) from None
            if fields[2] not in ("steiner", "partial"):
                raise ParseError(
                    "line %d: kind must be 'steiner' or 'partial', got %r"
                    % (lineno, fields[2])
                )
            kind = SystemKind(fields[2])
        elif fields[0] == "b":
            if order is None:
                raise ParseError("line %d: block before header" % lineno)
            if len(fields) != 4:
                raise ParseError("line %d: block must be 'b <i> <j> <k>'" % lineno)
            try:
                t = tuple(int(f) for f in fields[1:])
            except ValueError:
                raise ParseError("line %d: non-integer point index" % lineno) from None
            if len(set(t)) != 3:
                raise ParseError("line %d: repeated index in block" % lineno)
            if min(t) < 0 or max(t) >= order:
                raise ParseError("line %d: point outside [0, %d)" % (lineno, order))
            triples.append(t)
        else:
            raise ParseError("line %d: unknown record %r" % (lineno, fields[0]))
    if order is None:
        raise ParseError("line 0: missing 'v <order> <kind>' header")
    try:
        return TripleSystem(order, triples, kind, tag)
    except (DuplicatePairError, NotSteinerError, BadOrderError) as exc:
        raise ParseError("invalid system: %s" % exc) from exc


def parse_labels(text: str) -> dict:
    """Parse a label sidecar into {point index: coordinate tuple}."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3 or fields[0] != "l":
            raise ParseError("line %d: label line must be 'l <index> <vector>'" % lineno)
        try:
            idx = int(fields[1])
            vec = tuple(int(ch) for ch in fields[2])
        except ValueError:
            raise ParseError("line %d: bad label line" % lineno) from None
        out[idx] = vec
    return out


def with_labels(ts: TripleSystem, labels: dict) -> TripleSystem:
    """Return a copy of ts whose tag carries the given point labels."""
    full = tuple(labels.get(i) for i in range(ts.order))
    tag = GeometryTag(ts.tag.variant, ts.tag.param, ts.tag.seed, full)
    return TripleSystem(ts.order, ts.triples, ts.kind, tag)
