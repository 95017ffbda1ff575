import numpy as np
import pytest

from tastePath.constants import CandidateKind
from tastePath.core.exceptions import EmptyInputError, UnknownEntityError, UsageError
from tastePath.models.allocation import CandidatePair, CoListeningTable
from tastePath.models.trajectory import GenreTrajectory
from tastePath.trajectory import (
    TrajectorySampler,
    build_rank_map,
    build_trajectory_set,
    invert,
    rank_transform,
    sample_trajectory,
    sampling_reconstruction_curve,
)
from tastePath.test.common import tensor

GENRES = ["hard rock", "jazz", "metal", "rock"]


def _table(entries):
    """entries: {(k, user_row, genre): {neighbor: count}}"""
    table = CoListeningTable(n_genres=len(GENRES))
    for (k, u, g), counts in entries.items():
        neighbors = np.array([GENRES.index(n) for n in counts], dtype=np.int64)
        table.entries[(k, u, GENRES.index(g))] = (neighbors, np.array(list(counts.values()), dtype=np.int64))
    return table


@pytest.fixture
def X():
    return tensor(
        [
            {"u": {"metal": 0.6, "rock": 0.3, "hard rock": 0.1}, "v": {"jazz": 1.0}},
            {"u": {"metal": 0.5, "rock": 0.4, "hard rock": 0.1}},
            {"u": {"metal": 1.0}, "v": {"jazz": 0.5, "rock": 0.5}},
            {"u": {"jazz": 1.0}, "v": {"jazz": 1.0}},
        ],
        genres=GENRES,
    )


class TestSampling:
    def test_single_neighbour_is_certain(self, X):
        pair = CandidatePair("u", "hard rock", CandidateKind.DISAPPEARANCE)
        table = _table({(0, 0, "hard rock"): {"rock": 3}})
        assert sample_trajectory(X, table, pair, seed=1).genres[0] == "rock"

    def test_fallback_to_allocation_row(self, X):
        pair = CandidatePair("v", "jazz", CandidateKind.DISAPPEARANCE)
        traj = sample_trajectory(X, _table({}), pair, seed=5)
        assert traj.genres[0] == "jazz"

    def test_empty_window_is_missing(self, X):
        pair = CandidatePair("v", "jazz", CandidateKind.DISAPPEARANCE)
        traj = sample_trajectory(X, _table({}), pair, seed=0)
        assert traj.genres[1] is None
        assert traj.missing == [1]
        assert len(traj) == X.K - 1

    def test_colistening_draws_follow_counts(self, X):
        pair = CandidatePair("u", "hard rock", CandidateKind.DISAPPEARANCE)
        table = _table({(0, 0, "hard rock"): {"rock": 1, "metal": 1}})
        draws = [sample_trajectory(X, table, pair, seed=s).genres[0] for s in range(10000)]
        assert draws.count("rock") / len(draws) == pytest.approx(0.5, abs=0.02)

    def test_unknown_pair_raises(self, X):
        with pytest.raises(UnknownEntityError):
            sample_trajectory(X, _table({}), CandidatePair("nobody", "jazz", CandidateKind.APPEARANCE))
        with pytest.raises(UnknownEntityError):
            sample_trajectory(X, _table({}), CandidatePair("u", "polka", CandidateKind.APPEARANCE))

    def test_same_seed_same_draws(self, X):
        pair = CandidatePair("u", "rock", CandidateKind.DISAPPEARANCE)
        sampler = TrajectorySampler(X, _table({}), seed=11)
        assert sampler.sample(pair, 50) == TrajectorySampler(X, _table({}), seed=11).sample(pair, 50)

    def test_reconstruction_improves_with_sample_size(self, X):
        sampler = TrajectorySampler(X, _table({}), seed=0)
        pairs = [CandidatePair("u", "rock", CandidateKind.DISAPPEARANCE)]
        curve = sampling_reconstruction_curve(sampler, pairs, [1, 4000])
        small, large = curve["mean_tv"].tolist()
        assert large < small
        assert large < 0.05


class TestRanks:
    def test_rank_transform_worked_example(self, X):
        pair = CandidatePair("u", "hard rock", CandidateKind.DISAPPEARANCE)
        rank_map = build_rank_map(X, pair)
        traj = GenreTrajectory(anchor=pair, genres=("metal", "rock", "hard rock"))
        assert rank_transform(traj, rank_map).ranks == (1, 2, 0)

    def test_target_window_does_not_affect_ranks(self, X):
        pair = CandidatePair("u", "hard rock", CandidateKind.DISAPPEARANCE)
        assert "jazz" not in build_rank_map(X, pair).ranks

    def test_anchor_only_gives_zeros(self, X):
        pair = CandidatePair("u", "metal", CandidateKind.DISAPPEARANCE)
        traj = GenreTrajectory(anchor=pair, genres=("metal", "metal", "metal"))
        assert rank_transform(traj, build_rank_map(X, pair)).ranks == (0, 0, 0)

    def test_all_missing_gives_empty(self, X):
        pair = CandidatePair("u", "metal", CandidateKind.DISAPPEARANCE)
        traj = GenreTrajectory(anchor=pair, genres=(None, None, None))
        assert len(rank_transform(traj, build_rank_map(X, pair))) == 0

    def test_anchor_is_the_only_rank_zero(self, X):
        pair = CandidatePair("v", "rock", CandidateKind.DISAPPEARANCE)
        ranks = build_rank_map(X, pair).ranks
        assert [g for g, r in ranks.items() if r == 0] == ["rock"]
        assert sorted(ranks.values()) == list(range(len(ranks)))

    def test_ties_broken_by_genre_id(self):
        X = tensor([{"u": {"b": 0.5, "a": 0.5}}, {"u": {"c": 1.0}}], genres=["a", "b", "c"])
        ranks = build_rank_map(X, CandidatePair("u", "c", CandidateKind.APPEARANCE)).ranks
        assert ranks == {"c": 0, "a": 1, "b": 2}

    def test_invert_then_transform_is_identity(self, X):
        pair = CandidatePair("u", "rock", CandidateKind.DISAPPEARANCE)
        sampler = TrajectorySampler(X, _table({}), seed=3)
        for traj in sampler.sample(pair, 20):
            ranked = rank_transform(traj, sampler.rank_map(pair))
            back = GenreTrajectory(anchor=pair, genres=invert(ranked))
            assert rank_transform(back, ranked.rank_map).ranks == ranked.ranks


class TestTrajectorySet:
    def test_single_pair_counts(self, X):
        pair = CandidatePair("u", "rock", CandidateKind.DISAPPEARANCE)
        result = build_trajectory_set(X, _table({}), {pair}, n_per_pair=3, total=3, seed=0)
        assert len(result.selected) == 3
        assert all(t.anchor == pair for t in result.selected)

    def test_fewer_than_total_returns_all(self, X):
        pairs = {
            CandidatePair("u", "rock", CandidateKind.DISAPPEARANCE),
            CandidatePair("v", "rock", CandidateKind.DISAPPEARANCE),
        }
        assert len(build_trajectory_set(X, _table({}), pairs, n_per_pair=4, total=100).selected) == 8

    def test_same_seed_same_set(self, X):
        pairs = {
            CandidatePair("u", "rock", CandidateKind.DISAPPEARANCE),
            CandidatePair("v", "jazz", CandidateKind.DISAPPEARANCE),
        }
        first = build_trajectory_set(X, _table({}), pairs, n_per_pair=20, total=15, seed=9, holdout=10)
        second = build_trajectory_set(X, _table({}), pairs, n_per_pair=20, total=15, seed=9, holdout=10)
        assert [t.ranks for t in first.selected] == [t.ranks for t in second.selected]
        assert [t.ranks for t in first.held_out] == [t.ranks for t in second.held_out]

    def test_threads_do_not_change_the_draw(self, X):
        pairs = {
            CandidatePair("u", "rock", CandidateKind.DISAPPEARANCE),
            CandidatePair("v", "jazz", CandidateKind.DISAPPEARANCE),
        }
        serial = build_trajectory_set(X, _table({}), pairs, n_per_pair=20, total=15, seed=2)
        threaded = build_trajectory_set(X, _table({}), pairs, n_per_pair=20, total=15, seed=2, n_jobs=2)
        assert [t.ranks for t in serial.selected] == [t.ranks for t in threaded.selected]

    def test_holdout_bounded_by_remainder(self, X):
        pair = CandidatePair("u", "rock", CandidateKind.DISAPPEARANCE)
        result = build_trajectory_set(X, _table({}), {pair}, n_per_pair=10, total=6, holdout=100)
        assert len(result.selected) == 6
        assert len(result.held_out) == 4

    def test_zero_total_rejected(self, X):
        with pytest.raises(UsageError):
            build_trajectory_set(X, _table({}), {CandidatePair("u", "rock", CandidateKind.DISAPPEARANCE)}, total=0)

    def test_no_usable_pairs(self):
        X = tensor([{"u": {}}, {"u": {}}, {"u": {"a": 1.0}}], genres=["a"])
        with pytest.raises(EmptyInputError):
            build_trajectory_set(X, _table({}), {CandidatePair("u", "a", CandidateKind.APPEARANCE)}, total=5)
