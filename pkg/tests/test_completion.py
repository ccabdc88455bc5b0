"""Hill-climbing completion, random systems, and the two-sizes pipeline."""

import pytest

from stspread import (
    BudgetExhaustedError,
    InadmissibleOrderError,
    SystemKind,
    TrivialOrderError,
    build_system,
    complete_partial,
    is_spreading_set,
    next_admissible,
    random_sts,
    section4_partial,
    two_minimal_sizes_sts,
)

from oracles import naive_is_spreading

FANO = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))


def test_next_admissible():
    assert next_admissible(7) == 7
    assert next_admissible(8) == 9
    assert next_admissible(10) == 13
    assert next_admissible(62) == 63
    assert next_admissible(64) == 67


def test_random_sts_valid_and_reproducible():
    for order in (7, 9, 13, 15, 19):
        ts = random_sts(order, 4)
        assert ts.order == order
        assert ts.is_steiner()
        assert len(ts.triples) == order * (order - 1) // 6
    assert random_sts(13, 8) == random_sts(13, 8)
    assert random_sts(13, 8) != random_sts(13, 9)


def test_random_sts_rejects_bad_orders():
    with pytest.raises(InadmissibleOrderError):
        random_sts(8, 0)
    with pytest.raises(TrivialOrderError):
        random_sts(3, 0)


def test_complete_empty_partial():
    empty = build_system(13, (), "partial")
    report = complete_partial(empty, 13, seed=2)
    assert report.success
    assert report.system.is_steiner()
    assert report.source_order == 13
    assert report.target_order == 13


def test_complete_fano_into_sts15():
    fano = build_system(7, FANO, "partial")
    report = complete_partial(fano, 15, seed=0)
    assert report.success
    full = report.system
    assert full.order == 15
    assert full.is_steiner()
    assert set(FANO) <= set(full.triples)
    assert dict(report.checks)["steiner"]
    assert dict(report.checks)["contains_source"]


def test_complete_keeps_source_indices():
    src = build_system(9, ((0, 1, 2), (3, 4, 5), (6, 7, 8)), "partial")
    report = complete_partial(src, 9, seed=1)
    assert set(src.triples) <= set(report.system.triples)


def test_complete_rejects_inadmissible_target():
    fano = build_system(7, FANO, "partial")
    with pytest.raises(InadmissibleOrderError):
        complete_partial(fano, 14, seed=0)
    with pytest.raises(InadmissibleOrderError):
        complete_partial(fano, 3, seed=0)


def test_complete_budget_exhaustion_carries_report():
    art = section4_partial(4)
    with pytest.raises(BudgetExhaustedError) as info:
        complete_partial(art.system, 61, seed=0, restarts=1, moves_per_restart=50)
    partial = info.value.partial
    assert partial is not None
    assert not partial.success
    assert partial.system is None
    assert partial.restarts_used == 1


def test_completion_report_kv_format():
    report = complete_partial(build_system(7, FANO, "partial"), 15, seed=0)
    kv = report.to_kv()
    assert "source_order=7" in kv
    assert "target_order=15" in kv
    assert "success=true" in kv
    assert "check.steiner=pass" in kv


def test_section4_embeds_into_sts61():
    art = section4_partial(4)
    report = complete_partial(art.system, 61, seed=0)
    assert report.success
    full = report.system
    assert full.order == 61
    assert len(full.triples) == 61 * 60 // 6
    assert set(art.system.triples) <= set(full.triples)


def test_two_sizes_pipeline():
    ts, base, b_triple = two_minimal_sizes_sts(4, seed=0)
    assert ts.is_steiner()
    assert ts.order == 61
    assert len(base) == 4
    assert len(b_triple) == 3
    # check (a): the three b-points spread and are minimal
    assert is_spreading_set(ts, b_triple)
    b = sorted(b_triple)
    for i in range(3):
        pair = b[:i] + b[i + 1:]
        assert not is_spreading_set(ts, pair)
    # check (b): the base spreads
    assert is_spreading_set(ts, base)
    # check (c): no (n-1)-subset of the base spreads
    for a in sorted(base):
        assert not is_spreading_set(ts, set(base) - {a})


def test_two_sizes_spreading_agrees_with_naive_oracle():
    ts, base, b_triple = two_minimal_sizes_sts(4, seed=0)
    assert naive_is_spreading(ts.order, ts.triples, b_triple)
    assert naive_is_spreading(ts.order, ts.triples, base)
    some_a = sorted(base)[0]
    assert not naive_is_spreading(ts.order, ts.triples, set(base) - {some_a})


def test_two_sizes_reproducible():
    first = two_minimal_sizes_sts(4, seed=0)
    second = two_minimal_sizes_sts(4, seed=0)
    assert first == second
