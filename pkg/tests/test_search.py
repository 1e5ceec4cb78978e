import numpy as np
import pytest

from arcdesign import (
    SearchConfig,
    apply_move,
    e_aug_direct,
    e_con,
    neighbor_moves,
    random_contraction,
    search_augmented_direct,
    search_contraction,
    validate_augmented,
    validate_contraction,
)
from arcdesign.errors import InfeasibleParametersError
from arcdesign.search import Move

from oracles import exhaustive_best_e_con


class TestRandomContraction:
    def test_valid_for_reference_dimensions(self):
        c = random_contraction(12, 8, 3, r=np.full(12, 2), seed=1)
        assert validate_contraction(c).ok

    def test_deterministic(self):
        a = random_contraction(12, 8, 3, seed=1)
        b = random_contraction(12, 8, 3, seed=1)
        assert a == b

    def test_seed_sweep_valid_and_diverse(self):
        seen = set()
        for seed in range(1, 101):
            c = random_contraction(4, 4, 2, r=np.full(4, 2), seed=seed)
            assert validate_contraction(c).ok
            seen.add(c.cells.tobytes())
        assert len(seen) > 10

    def test_unequal_replication(self):
        c = random_contraction(24, 16, 5, seed=3)
        assert validate_contraction(c).ok
        assert sorted(np.unique(c.r)) == [3, 4]

    def test_infeasible_rejected(self):
        with pytest.raises(InfeasibleParametersError):
            random_contraction(10, 3, 2, seed=0)
        with pytest.raises(InfeasibleParametersError):
            random_contraction(12, 8, 3, r=np.full(12, 3), seed=0)


class TestNeighborMoves:
    def test_within_column_preserves_columns(self):
        c = random_contraction(12, 8, 3, seed=0)
        moves = [m for m in neighbor_moves(c) if m.kind == "within_column"]
        assert moves
        for move in moves:
            after = apply_move(c, move)
            assert validate_contraction(after).ok
            for j in range(8):
                assert set(after.cells[:, j]) == set(c.cells[:, j])

    def test_documented_rejected_row_move(self, ex1_contraction):
        # swapping (1,1)=3 with (1,4)=1 would put 3 into column 4, which
        # already holds a 3, so the catalogue must not contain it
        rejected = Move("within_row", (0, 0), (0, 3))
        moves = neighbor_moves(ex1_contraction)
        assert rejected not in moves
        assert 3 in ex1_contraction.cells[:, 3]
        assert any(m.kind == "within_row" for m in moves)

    def test_all_moves_yield_valid_designs(self):
        rng = np.random.default_rng(13)
        for _ in range(6):
            v = int(rng.integers(5, 13))
            s = int(rng.integers(3, min(v, 8) + 1))
            k = int(rng.integers(2, 5))
            from arcdesign import feasibility_df

            if k > v or feasibility_df(v, s, k) < 0:
                continue
            c = random_contraction(v, s, k, seed=int(rng.integers(1 << 32)))
            for move in neighbor_moves(c):
                after = apply_move(c, move)
                assert validate_contraction(after).ok
                assert np.array_equal(after.r, c.r)

    def test_latin_square_has_no_legal_moves(self, latin3):
        # every label already sits in every row and column
        assert neighbor_moves(latin3) == ()


class TestSearchContraction:
    def test_quality_band_12x8(self):
        result = search_contraction(12, 8, 3, SearchConfig(seed=0))
        assert result.objective >= 0.5639
        assert validate_contraction(result.best).ok

    def test_exhaustive_optimum_4x4(self):
        best, count = exhaustive_best_e_con(4, 4)
        assert count == 216
        result = search_contraction(4, 4, 2, SearchConfig(seed=0))
        assert result.objective == pytest.approx(best, abs=1e-12)

    def test_determinism(self):
        cfg = SearchConfig(seed=9, restarts=5)
        a = search_contraction(12, 8, 3, cfg)
        b = search_contraction(12, 8, 3, cfg)
        assert a.best == b.best
        assert a.objective == b.objective
        assert a.trace == b.trace
        assert a.restart_of_best == b.restart_of_best

    def test_serial_matches_concurrent(self):
        serial = search_contraction(10, 5, 4, SearchConfig(seed=4, restarts=6))
        threaded = search_contraction(10, 5, 4, SearchConfig(seed=4, restarts=6, workers=3))
        assert serial.best == threaded.best
        assert serial.objective == threaded.objective
        assert serial.trace == threaded.trace

    def test_trace_is_nondecreasing_and_reproducible(self):
        result = search_contraction(12, 8, 3, SearchConfig(seed=2, restarts=4))
        values = [val for _, val in result.trace]
        assert values == sorted(values)
        assert e_con(result.best) == pytest.approx(result.objective, abs=1e-12)

    def test_anneal_strategy(self):
        result = search_contraction(
            12, 8, 3, SearchConfig(seed=2, strategy="anneal", restarts=2, max_iters=3000)
        )
        values = [val for _, val in result.trace]
        assert values == sorted(values)
        assert result.objective >= 0.52

    def test_column_first_strategy(self):
        result = search_contraction(
            12, 8, 3, SearchConfig(seed=2, strategy="column-first", restarts=8)
        )
        assert validate_contraction(result.best).ok
        assert result.objective >= 0.52

    def test_e_aug_objective(self):
        result = search_contraction(
            12, 8, 3, SearchConfig(seed=0, restarts=4, objective="e_aug")
        )
        assert result.objective == pytest.approx(0.388112, abs=2e-3)

    def test_infeasible_parameters_raise(self):
        with pytest.raises(InfeasibleParametersError):
            search_contraction(10, 3, 2, SearchConfig(seed=0, restarts=1))

    def test_time_budget_flag(self):
        result = search_contraction(
            16, 10, 4, SearchConfig(seed=0, restarts=500, time_budget=0.3)
        )
        assert result.timed_out
        assert validate_contraction(result.best).ok


class TestSearchAugmentedDirect:
    def test_small_budget_12x8(self):
        cfg = SearchConfig(seed=0, restarts=2, max_iters=250)
        result = search_augmented_direct(12, 8, 3, cfg)
        assert 0.0 < result.objective < 1.0
        assert result.objective == pytest.approx(e_aug_direct(result.best), abs=1e-12)
        report = validate_augmented(result.best)
        assert report.ok  # column structure and test-line uniqueness hold
        assert len(result.row_check_counts) == 12
        assert sum(result.row_check_counts) == 24

    def test_determinism(self):
        cfg = SearchConfig(seed=5, restarts=2, max_iters=120)
        a = search_augmented_direct(6, 4, 3, cfg)
        b = search_augmented_direct(6, 4, 3, cfg)
        assert a.best == b.best and a.objective == b.objective

    def test_tiny_exhaustive_comparison(self):
        # at (3, 3, 2) both routes are enumerable; record both optima and
        # check each search attains its own; no ordering is asserted
        import itertools

        from arcdesign import AugmentedDesign, ContractionDesign
        from arcdesign.errors import DisconnectedDesignError

        best_contraction = 0.0
        for c in _all_3x3_k2_contractions():
            try:
                val = e_aug_direct(_augmented_from(c))
            except DisconnectedDesignError:
                val = 0.0
            best_contraction = max(best_contraction, val)

        best_direct = 0.0
        rows = list(itertools.permutations(range(3), 2))
        for placement in itertools.product(rows, repeat=3):
            cells = np.zeros((3, 3), dtype=np.int64)
            for j, (r1, r2) in enumerate(placement):
                cells[r1, j] = 4
                cells[r2, j] = 5
            nxt = 1
            for j in range(3):
                for l in range(3):
                    if cells[l, j] == 0:
                        cells[l, j] = nxt
                        nxt += 1
            try:
                val = e_aug_direct(AugmentedDesign(k=2, cells=cells))
            except DisconnectedDesignError:
                val = 0.0
            best_direct = max(best_direct, val)

        search_c = search_contraction(3, 3, 2, SearchConfig(seed=0, restarts=6))
        from arcdesign import augment

        assert e_aug_direct(augment(search_c.best)) == pytest.approx(best_contraction, abs=1e-9)
        search_d = search_augmented_direct(3, 3, 2, SearchConfig(seed=0, restarts=6, max_iters=300))
        assert search_d.objective == pytest.approx(best_direct, abs=1e-9)
        # the contraction route constrains rows as well, so record both values
        assert best_direct > 0 and best_contraction > 0


def _all_3x3_k2_contractions():
    import itertools

    from arcdesign import ContractionDesign

    for row1 in itertools.permutations([1, 2, 3]):
        for row2 in itertools.permutations([1, 2, 3]):
            if any(a == b for a, b in zip(row1, row2)):
                continue
            c = ContractionDesign.from_cells(np.array([row1, row2]), v=3)
            if validate_contraction(c).ok:
                yield c


def _augmented_from(c):
    from arcdesign import augment

    return augment(c)
