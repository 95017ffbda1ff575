import numpy as np
import pytest
import scipy.sparse as sp

from tastePath.core.exceptions import EmptyInputError, NumericalError, ShapeError
from tastePath.dict_learn import dict_metrics, fit, grad_smooth, loss, select_topn, sweep
from tastePath.dict_learn.objective import PrecomputedObjective
from tastePath.models.pathlet import LearnConfig, Pathlet, PathletDictionary
from tastePath.pathlet_graph import encode, induce_graph, mine_candidates
from tastePath.test.common import random_corpus


def _ones(m):
    return sp.csc_matrix(np.ones((m, 1)))


def _converging(lambda_=0.0, epochs=3000, seed=0):
    """Patience disabled so runs go the full length"""
    return LearnConfig(lambda_=lambda_, max_epochs=epochs, patience=epochs, stagnation_tol=0.0, seed=seed)


def _self_dictionary(corpus):
    graph = induce_graph(corpus)
    candidates = [Pathlet(tuple(t), 1) for t in corpus]
    return encode(corpus, candidates, graph), candidates


class TestLoss:
    def test_perfect_reconstruction(self):
        assert loss(_ones(3), _ones(3), np.ones((1, 1)), 0.0) == 0.0

    def test_zero_code(self):
        P = sp.csc_matrix(np.array([[1.0, 0.0], [1.0, 1.0]]))
        assert loss(P, _ones(2), np.zeros((1, 2)), 0.7) == pytest.approx(1.5)

    def test_one_dimensional_quadratic(self):
        for a in [0.0, 0.3, 0.75, 1.0]:
            assert loss(_ones(2), _ones(2), np.array([[a]]), 0.5) == pytest.approx((1 - a) ** 2 + 0.5 * a)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            loss(_ones(2), _ones(3), np.ones((1, 1)), 0.0)
        with pytest.raises(ShapeError):
            grad_smooth(_ones(2), _ones(2), np.ones((2, 1)))


class TestGradient:
    def test_matches_central_differences(self):
        rng = np.random.default_rng(0)
        h = 1e-6
        for _ in range(5):
            P = sp.csc_matrix((rng.random((10, 10)) < 0.4).astype(float))
            D0 = sp.csc_matrix((rng.random((10, 10)) < 0.4).astype(float))
            alpha = rng.random((10, 10))
            grad = grad_smooth(P, D0, alpha)
            numeric = np.zeros_like(alpha)
            for idx in np.ndindex(*alpha.shape):
                up, down = alpha.copy(), alpha.copy()
                up[idx] += h
                down[idx] -= h
                numeric[idx] = (loss(P, D0, up, 0.0) - loss(P, D0, down, 0.0)) / (2 * h)
            assert np.linalg.norm(numeric - grad) / np.linalg.norm(grad) < 1e-5

    def test_zero_code(self):
        P = sp.csc_matrix(np.array([[1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))
        D0 = sp.csc_matrix(np.array([[1.0], [1.0], [0.0]]))
        np.testing.assert_array_equal(grad_smooth(P, D0, np.zeros((1, 2))), -(D0.T @ P).toarray())

    def test_stationary_at_optimum(self):
        assert np.abs(grad_smooth(_ones(4), _ones(4), np.ones((1, 1)))).max() < 1e-6

    def test_precomputed_objective_matches_direct_form(self):
        rng = np.random.default_rng(1)
        P = sp.csc_matrix((rng.random((12, 7)) < 0.5).astype(float))
        D0 = sp.csc_matrix((rng.random((12, 9)) < 0.3).astype(float))
        objective = PrecomputedObjective(P, D0)
        for lambda_ in [0.0, 0.3]:
            alpha = rng.random((9, 7))
            value, grad = objective(alpha, lambda_)
            assert value == pytest.approx(loss(P, D0, alpha, lambda_), rel=1e-10)
            np.testing.assert_allclose(grad, grad_smooth(P, D0, alpha) + lambda_, atol=1e-10)


class TestFit:
    def test_single_trajectory_single_candidate(self):
        model = fit(_ones(2), _ones(2), _converging())
        assert model.alpha[0, 0] == pytest.approx(1.0, abs=1e-3)
        assert model.final_loss < 1e-5

    @pytest.mark.parametrize("m", [1, 2, 4])
    @pytest.mark.parametrize("lambda_", [0.0, 0.5, 1.0, 10.0])
    def test_one_dimensional_closed_form(self, m, lambda_):
        model = fit(_ones(m), _ones(m), _converging(lambda_))
        assert model.alpha[0, 0] == pytest.approx(max(0.0, 1.0 - lambda_ / m), abs=0.01)

    def test_large_lambda_zeroes_the_code(self):
        corpus = [(0, 1, 2), (1, 2, 0), (2, 0, 1, 2)]
        enc, _ = _self_dictionary(corpus)
        popcount = np.asarray(enc.D0_mat.sum(axis=0)).max()
        model = fit(enc.P_mat, enc.D0_mat, _converging(10 * popcount, epochs=300))
        assert model.alpha.max() == 0.0

    def test_self_dictionary_reconstructs(self):
        corpus = [(0, 1, 2), (3, 4), (5, 6, 7, 8)]
        enc, _ = _self_dictionary(corpus)
        model = fit(enc.P_mat, enc.D0_mat, _converging(epochs=1000))
        assert model.final_loss < 1e-4 * enc.P_mat.multiply(enc.P_mat).sum()

    def test_overlapping_self_dictionary_mostly_reconstructs(self):
        corpus = random_corpus(np.random.default_rng(3), 12, max_len=6, alphabet=4)
        enc, _ = _self_dictionary(corpus)
        model = fit(enc.P_mat, enc.D0_mat, _converging(epochs=2000))
        assert model.final_loss < 0.05 * enc.P_mat.sum()

    def test_alpha_stays_in_box(self):
        corpus = random_corpus(np.random.default_rng(8), 20)
        enc = encode(corpus, mine_candidates(corpus, top_m=30), induce_graph(corpus))
        for epochs in [1, 2, 5, 40]:
            model = fit(enc.P_mat, enc.D0_mat, _converging(0.01, epochs=epochs))
            assert model.alpha.min() >= 0.0 and model.alpha.max() <= 1.0
            assert model.final_loss <= model.initial_loss
            assert all(np.isfinite(model.loss_history))

    def test_stagnation_stops_early(self):
        model = fit(_ones(2), _ones(2), LearnConfig(lambda_=0.0, max_epochs=500))
        assert model.stop_reason == "stagnation"
        assert len(model.loss_history) < 500

    def test_stagnation_measured_against_best_loss(self):
        corpus = random_corpus(np.random.default_rng(5), 30)
        enc = encode(corpus, mine_candidates(corpus, top_m=40), induce_graph(corpus))
        cfg = LearnConfig(lambda_=0.05, learning_rate=0.2, max_epochs=2000, patience=4, stagnation_tol=1e-3)
        model = fit(enc.P_mat, enc.D0_mat, cfg)
        assert model.stop_reason == "stagnation"
        before = min([model.initial_loss] + model.loss_history[: -cfg.patience])
        assert min(model.loss_history[-cfg.patience :]) > before * (1 - cfg.stagnation_tol) ** cfg.patience

    def test_same_seed_same_code(self):
        corpus = random_corpus(np.random.default_rng(9), 15)
        enc = encode(corpus, mine_candidates(corpus, top_m=20), induce_graph(corpus))
        cfg = LearnConfig(max_epochs=50, seed=4)
        np.testing.assert_array_equal(fit(enc.P_mat, enc.D0_mat, cfg).alpha, fit(enc.P_mat, enc.D0_mat, cfg).alpha)

    def test_non_finite_loss_reports_epoch(self):
        P = np.array([[np.nan], [1.0]])
        with pytest.raises(NumericalError) as err:
            fit(P, _ones(2), LearnConfig())
        assert err.value.epoch == 0

    def test_empty_inputs(self):
        with pytest.raises(EmptyInputError):
            fit(sp.csc_matrix((2, 0)), _ones(2))


class TestSelection:
    def test_by_influence(self):
        candidates = [Pathlet((0, 1), 1), Pathlet((1, 2), 1), Pathlet((2, 3), 1)]
        alpha = np.array([[0.9], [0.1], [0.5]])
        chosen = select_topn(alpha, candidates, 2)
        assert chosen.pathlets == [candidates[0], candidates[2]]
        assert chosen.influence == [0.9, 0.5]

    def test_saturation(self):
        candidates = [Pathlet((0, 1), 1), Pathlet((1, 2), 1)]
        chosen = select_topn(np.array([[0.2], [0.4]]), candidates, 10)
        assert chosen.pathlets == [candidates[1], candidates[0]]

    def test_zero_code_falls_back_to_support_then_length(self):
        candidates = [Pathlet((0, 1, 2), 5), Pathlet((0, 1), 5), Pathlet((1, 2), 9)]
        chosen = select_topn(np.zeros((3, 4)), candidates, 3)
        assert [p.ranks for p in chosen] == [(1, 2), (0, 1), (0, 1, 2)]

    def test_row_count_must_match(self):
        with pytest.raises(ShapeError):
            select_topn(np.zeros((2, 1)), [Pathlet((0, 1), 1)], 1)


class TestDictionaryMetrics:
    def test_verbatim_dictionary(self):
        corpus = [(0, 1, 2), (2, 1), (3, 0, 3, 1)]
        dictionary = PathletDictionary([Pathlet(t, 1) for t in corpus], [1.0, 1.0, 1.0])
        metrics = dict_metrics(dictionary, corpus)
        assert metrics.cover_ratio == 1.0
        assert metrics.mean_pathlets_per_trajectory == 1.0
        assert metrics.code_sparsity == pytest.approx(2 / 3)

    def test_no_shared_edges(self):
        metrics = dict_metrics(PathletDictionary([Pathlet((8, 9), 1)], [1.0]), [(0, 1, 2)])
        assert metrics.cover_ratio == 0.0
        assert metrics.code_sparsity == 1.0

    def test_half_covered(self):
        assert dict_metrics(PathletDictionary([Pathlet((0, 1), 1)], [1.0]), [(0, 1, 2)]).cover_ratio == 0.5

    def test_empty_evaluation_set(self):
        with pytest.raises(EmptyInputError):
            dict_metrics(PathletDictionary([Pathlet((0, 1), 1)], [1.0]), [])


class TestSweep:
    def test_one_row_per_lambda(self):
        corpus = random_corpus(np.random.default_rng(12), 30)
        candidates = mine_candidates(corpus, top_m=40)
        enc = encode(corpus, candidates, induce_graph(corpus))
        table = sweep(enc.P_mat, enc.D0_mat, candidates, corpus, [0.0, 0.01, 100.0], LearnConfig(max_epochs=30, top_n=10))
        assert table["lambda"].tolist() == [0.0, 0.01, 100.0]
        assert table["cover_ratio"].between(0, 1).all()
        assert table["code_sparsity"].between(0, 1).all()
