"""Vectorised enumeration sweeps against per-graph recounts."""

from __future__ import annotations

import pytest

from ttlab import BlowupSpec, CapacityError, DIGRAPH, ORIENTED, is_free
from ttlab.oracle import SWEEP_BOUND, graph_from_index, iter_digraphs, sweep

SPECS = [BlowupSpec(2, 1), BlowupSpec(3, 1), BlowupSpec(4, 1),
         BlowupSpec(2, 2), BlowupSpec(3, 2)]


def test_iter_digraphs_counts_and_order():
    digraphs = list(iter_digraphs(2, DIGRAPH))
    assert len(digraphs) == 4
    assert [g.states for g in digraphs] == [(0,), (1,), (2,), (3,)]
    oriented = list(iter_digraphs(2, ORIENTED))
    assert len(oriented) == 3
    assert all(g.is_oriented for g in oriented)
    assert len(list(iter_digraphs(0, DIGRAPH))) == 1


def test_graph_from_index_matches_iteration_order():
    for mode, total in ((DIGRAPH, 4 ** 3), (ORIENTED, 3 ** 3)):
        for idx, g in enumerate(iter_digraphs(3, mode)):
            assert graph_from_index(3, mode, idx) == g
        assert idx == total - 1


@pytest.mark.parametrize("mode", [DIGRAPH, ORIENTED])
@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_sweep_frontier_matches_per_graph_recount(mode, spec):
    n = 4
    free = 0
    frontier: dict[int, tuple[int, int]] = {}
    for idx, g in enumerate(iter_digraphs(n, mode)):
        if not is_free(g, spec):
            continue
        free += 1
        cell = frontier.get(g.f2)
        if cell is None or g.f1 > cell[0]:
            frontier[g.f2] = (g.f1, idx)
    summary = sweep(n, spec, mode)
    assert summary.free_count == free
    assert summary.frontier == frontier
    assert summary.total == (4 if mode == DIGRAPH else 3) ** 6


def test_sweep_is_memoised_and_thread_count_is_immaterial():
    base = sweep(4, BlowupSpec(3, 1), DIGRAPH)
    again = sweep(4, BlowupSpec(3, 1), DIGRAPH, threads=3, chunk=64)
    assert again is base  # cached summary object


def test_sweep_threads_agree_on_fresh_computation():
    one = sweep(5, BlowupSpec(4, 1), DIGRAPH, threads=1)
    # drop the memo so the threaded run actually recomputes
    from ttlab import oracle
    oracle._SWEEPS.pop((5, DIGRAPH, 4, 1))
    two = sweep(5, BlowupSpec(4, 1), DIGRAPH, threads=4, chunk=1 << 12)
    assert one == two


def test_sweep_capacity_bounds():
    assert SWEEP_BOUND[DIGRAPH] == 5
    assert SWEEP_BOUND[ORIENTED] == 6
    with pytest.raises(CapacityError):
        sweep(6, BlowupSpec(3, 1), DIGRAPH)
    with pytest.raises(CapacityError):
        sweep(7, BlowupSpec(3, 1), ORIENTED)
