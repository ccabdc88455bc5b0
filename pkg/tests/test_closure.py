"""Closure fixpoint, traces, spreading/saturating predicates, closed sets."""

import random

import pytest

from stspread import (
    OutOfRangeError,
    TrivialOrderError,
    ag3,
    build_system,
    closure,
    closure_points,
    enumerate_closed_sets,
    is_saturating_set,
    is_spreading_set,
    is_spreading_system,
    neighbors,
    pg2,
    subsystem_free_sts15,
)

from oracles import (
    f2_span_indices,
    f3_affine_span,
    gaussian_binomial,
    naive_closure,
)

FANO = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))


def test_neighbors_fano():
    ts = build_system(7, FANO, "steiner")
    assert neighbors(ts, {0, 1}) == {2}
    assert neighbors(ts, {0, 1, 2}) == set()
    assert neighbors(ts, {0, 1, 3}) == {2, 4, 5}


def test_closure_pair_is_block():
    ts = build_system(7, FANO, "steiner")
    assert closure_points(ts, [0, 1]) == {0, 1, 2}


def test_closure_non_block_triple_spreads_fano():
    ts = build_system(7, FANO, "steiner")
    assert closure_points(ts, [0, 1, 3]) == set(range(7))


def test_closure_matches_linear_span_in_pg():
    ts = pg2(4)
    rng = random.Random(11)
    for _ in range(300):
        size = rng.randint(0, 5)
        seeds = rng.sample(range(31), size)
        assert closure_points(ts, seeds) == set(f2_span_indices(seeds, 4))


def test_closure_matches_affine_span_in_ag():
    ts = ag3(3)
    rng = random.Random(12)
    for _ in range(300):
        size = rng.randint(0, 4)
        seeds = rng.sample(range(27), size)
        assert closure_points(ts, seeds) == set(f3_affine_span(seeds, 3))


def test_closure_matches_naive_fixpoint():
    ts = subsystem_free_sts15(0)
    rng = random.Random(13)
    for _ in range(200):
        seeds = rng.sample(range(15), rng.randint(0, 4))
        assert closure_points(ts, seeds) == naive_closure(ts.triples, seeds)


def test_closure_rejects_out_of_range():
    ts = build_system(7, FANO, "steiner")
    with pytest.raises(OutOfRangeError):
        closure_points(ts, [0, 9])


def test_trace_steps_and_report():
    ts = build_system(7, FANO, "steiner")
    trace = closure(ts, [0, 1, 3])
    assert trace.points == frozenset(range(7))
    assert trace.steps[0] == frozenset({0, 1, 3})
    # each step grows strictly until the fixpoint
    for earlier, later in zip(trace.steps, trace.steps[1:]):
        assert earlier < later
    report = trace.report()
    assert report.startswith("step 0: start")
    assert "closure:" in report
    # every firing block mentioned in the trace is a real block
    for fired in trace.firing_blocks[1:]:
        for block in fired:
            assert block in ts.triples


def test_spreading_and_saturating_predicates():
    ts = build_system(7, FANO, "steiner")
    assert is_spreading_set(ts, (0, 1, 3))
    assert not is_spreading_set(ts, (0, 1, 2))
    # {0,1,3} spreads in two steps but one step misses point 6
    assert not is_saturating_set(ts, (0, 1, 3))
    assert is_saturating_set(ts, (0, 1, 2, 3))
    # a basis of pg2(3) spreads but needs more than one step
    space = pg2(3)
    assert is_spreading_set(space, (0, 1, 3, 7))
    assert not is_saturating_set(space, (0, 1, 3, 7))


def test_spreading_system_detection():
    assert is_spreading_system(subsystem_free_sts15(0))
    assert not is_spreading_system(pg2(3))
    assert is_spreading_system(build_system(7, FANO, "steiner"))
    with pytest.raises(TrivialOrderError):
        is_spreading_system(build_system(3, ((0, 1, 2),), "steiner"))


def test_closed_sets_of_pg3_are_the_fano_subsystems():
    ts = pg2(3)
    enum = enumerate_closed_sets(ts)
    assert not enum.truncated
    # proper nontrivial closed sets of PG(3,2) are its 15 planes
    assert len(enum.sets) == gaussian_binomial(4, 3)
    expected = set()
    for h in range(1, 16):
        expected.add(frozenset(
            lab - 1 for lab in range(1, 16) if bin(lab & h).count("1") % 2 == 0 and lab
        ))
    assert set(enum.sets) == expected
    for s in enum.sets:
        assert len(s) == 7


def test_closed_sets_none_in_subsystem_free_sts15():
    enum = enumerate_closed_sets(subsystem_free_sts15(0))
    assert enum.sets == ()
    assert not enum.truncated


def test_closed_sets_ag3_planes_and_lines_are_excluded_blocks_only():
    ts = ag3(2)
    enum = enumerate_closed_sets(ts)
    # AG(2,3) has no proper closed set larger than a block
    assert enum.sets == ()


def test_closed_sets_of_pg4_truncation_flag():
    enum = enumerate_closed_sets(pg2(4), max_count=3)
    assert enum.truncated
    assert len(enum.sets) == 3


def test_closed_sets_of_pg4_full():
    enum = enumerate_closed_sets(pg2(4))
    # Fano planes plus 15-point hyperplanes of PG(4,2); lines are blocks and
    # are excluded, singletons/pairs are below the size floor
    assert len(enum.sets) == gaussian_binomial(5, 3) + gaussian_binomial(5, 4)
    sizes = sorted({len(s) for s in enum.sets})
    assert sizes == [7, 15]
