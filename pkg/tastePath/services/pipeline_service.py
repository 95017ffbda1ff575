import re
from dataclasses import asdict
from typing import Any, Dict, Iterable, List, Optional, Tuple

import joblib
import numpy as np
import pandas as pd

from tastePath import constants
from tastePath.constants import CandidateKind, ModelName, Split, Stage
from tastePath.core.exceptions import EmptyInputError, UsageError
from tastePath.core.run_config import RunConfig
from tastePath.dict_learn import dict_metrics, fit, select_topn, sweep
from tastePath.embed import embed_pairs, embedding_frame
from tastePath.evaluate import (
    analysis_frame,
    analyze_pathlets,
    auc,
    decompose_by_intra_variability,
    diversity_by_popularity,
    evaluate_models,
    extended_pathlet_graphs,
    pathlet_correlation,
    to_dot,
    to_json,
    variation_decomposition,
)
from tastePath.ingest import allocation, candidate_sets, colistening_table, load_events, slice_windows
from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor, CandidatePair, CandidateSets, CoListeningTable
from tastePath.models.manifest import StageManifest
from tastePath.models.metrics import MetricsReport
from tastePath.models.pathlet import Pathlet, PathletDictionary
from tastePath.models.prediction import ClassifierReport, PredictionMatrix
from tastePath.models.synth import RecoveryReport
from tastePath.models.trajectory import RankTrajectory
from tastePath.pathlet_graph import encode, induce_graph, mine_candidates
from tastePath.predict import (
    ClassifierFactory,
    ConstantClassifier,
    IClassifier,
    as_arrays,
    baseline_nmf,
    baseline_popularity,
    baseline_previous,
    label_pairs,
    plug_previous,
    popularity_distribution,
    train_or_constant,
)
from tastePath.services.interfaces import IPipelineService
from tastePath.stores.artifacts.interface import IArtifactStore
from tastePath.stores.base import atomic_path, write_json, write_text
from tastePath.stores.records import CandidateStore, DictionaryStore, PlantedStore, TrajectoryStore
from tastePath.stores.tables import (
    load_candidates,
    load_colistening,
    load_embeddings,
    load_prediction,
    load_tensor,
    save_candidates,
    save_colistening,
    save_loss_history,
    save_prediction,
    save_tensor,
    write_frame,
)
from tastePath.synth import generate_planted, recovery_report
from tastePath.trajectory import TrajectorySampler, build_pair_trajectories, build_trajectory_set, sampling_reconstruction_curve

logger = get_logger("tastePath.services")

# config sections each stage's outputs depend on
_SECTIONS: Dict[Stage, Tuple[str, ...]] = {
    Stage.INGEST: ("dataset", "windows"),
    Stage.TRAJECTORIES: ("dataset", "windows", "sampling"),
    Stage.MINE: ("dataset", "windows", "sampling", "mining"),
    Stage.LEARN: ("dataset", "windows", "sampling", "mining", "learning"),
    Stage.EMBED: ("dataset", "windows", "sampling", "mining", "learning"),
    Stage.PREDICT: ("dataset", "windows", "sampling", "mining", "learning", "forest", "nmf", "analysis"),
    Stage.EVALUATE: ("dataset", "windows", "sampling", "mining", "learning", "forest", "nmf", "analysis"),
    Stage.ANALYZE: ("dataset", "windows", "sampling", "mining", "learning", "analysis"),
    Stage.SWEEP: ("dataset", "windows", "sampling", "mining", "learning", "analysis"),
    Stage.SYNTH: ("dataset", "windows", "sampling", "mining", "learning"),
}

# evaluation table order
_MODEL_ORDER = [ModelName.POPULARITY, ModelName.NMF, ModelName.PREVIOUS, ModelName.PLUG_PREVIOUS]

_ORACLE_STAGE = "evaluate_oracle"
_GRAPH_DIR = "graphs"
_DEFAULT_GRAPH_GENRES = 5


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name) or "_"


class PipelineService(IPipelineService):
    def __init__(
        self,
        run_config: RunConfig,
        artifacts: IArtifactStore,
        factory: ClassifierFactory,
        trajectory_store: TrajectoryStore,
        candidate_store: CandidateStore,
        dictionary_store: DictionaryStore,
        planted_store: PlantedStore,
        n_jobs: int = 1,
    ):
        self.config = run_config
        self.artifacts = artifacts
        self.factory = factory
        self.trajectory_store = trajectory_store
        self.candidate_store = candidate_store
        self.dictionary_store = dictionary_store
        self.planted_store = planted_store
        self.n_jobs = n_jobs

    # -- manifest plumbing -------------------------------------------------

    def _sections(self, stage: Stage) -> Tuple[str, ...]:
        """Synthetic runs depend on the generator settings instead of the study windows"""
        sections = _SECTIONS[stage]
        if self.config.synthetic:
            return tuple("synth" if s == "windows" else s for s in sections)
        return sections

    def _hash(self, stage: Stage) -> str:
        return self.config.section_hash(*self._sections(stage))

    def _require(self, *stages: Stage) -> None:
        for stage in stages:
            self.artifacts.require(stage.value, self._hash(stage))

    def _begin(self, stage: Stage, name: Optional[str] = None) -> None:
        name = name or stage.value
        logger.info(f"running stage {name}")
        self.artifacts.reset(name)

    def _finish(
        self,
        stage: Stage,
        seed: int,
        inputs: Iterable[Stage] = (),
        params: Optional[Dict[str, Any]] = None,
        name: Optional[str] = None,
    ) -> StageManifest:
        config = self.config.snapshot(*self._sections(stage))
        if params:
            config["params"] = params
        return self.artifacts.write_manifest(
            name or stage.value,
            seed=seed,
            config=config,
            config_hash=self._hash(stage),
            inputs=[s.value for s in inputs],
        )

    def _path(self, stage: Stage, name: str):
        return self.artifacts.path(stage.value, name)

    # -- artifact readers --------------------------------------------------

    def _tensor(self) -> AllocationTensor:
        return load_tensor(
            self._path(Stage.INGEST, constants.ALLOCATION_FILE), self._path(Stage.INGEST, constants.INDEX_FILE)
        )

    def _colistening(self, X: AllocationTensor) -> CoListeningTable:
        return load_colistening(self._path(Stage.INGEST, constants.COLISTENING_FILE), X)

    def _candidates(self, split: Split) -> CandidateSets:
        name = constants.TRAIN_CANDIDATES_FILE if split == Split.TRAIN else constants.CANDIDATES_FILE
        return load_candidates(self._path(Stage.INGEST, name))

    def _dictionary(self) -> PathletDictionary:
        return self.dictionary_store.load(self._path(Stage.LEARN, constants.DICTIONARY_FILE))

    def _trajectory_set(self) -> Tuple[List[RankTrajectory], List[RankTrajectory]]:
        selected = self.trajectory_store.read(self._path(Stage.TRAJECTORIES, constants.SELECTED_FILE))
        held_out = self.trajectory_store.read(self._path(Stage.TRAJECTORIES, constants.HELD_OUT_FILE))
        return selected, held_out

    def _pair_trajectories(self, split: Split) -> List[RankTrajectory]:
        name = constants.PAIR_TRAJECTORIES_FILE.format(split=split.value)
        return self.trajectory_store.read(self._path(Stage.TRAJECTORIES, name))

    def _embeddings(self, split: Split) -> Dict[CandidatePair, np.ndarray]:
        return load_embeddings(self._path(Stage.EMBED, constants.EMBEDDINGS_FILE.format(split=split.value)))

    @staticmethod
    def _train_side(X: AllocationTensor) -> AllocationTensor:
        """The tensor without its last window: features end one window early, labels come from K-2"""
        return X.truncate(X.K - 1)

    def _encoded(self, selected: List[RankTrajectory]):
        candidates: List[Pathlet] = self.candidate_store.read(self._path(Stage.MINE, constants.MINED_FILE))
        if not candidates:
            raise EmptyInputError("mining produced no candidate pathlet")
        graph = induce_graph(t.ranks for t in selected)
        return encode([t.ranks for t in selected], candidates, graph), candidates

    # -- stages ------------------------------------------------------------

    def ingest(self) -> StageManifest:
        dataset, windows = self.config.dataset, self.config.windows
        if self.config.synthetic:
            raise UsageError("a synth dataset has no event log; run the synth stage instead of ingest")
        if windows.K < 3:
            raise UsageError("the pipeline needs K >= 3: one label window for training and one for evaluation")
        log = load_events(
            dataset.path,
            dataset.format,
            window=windows,
            vocabulary=dataset.vocabulary,
            columns=dataset.columns,
            genre_map=dataset.genre_map,
        )
        if not len(log.frame):
            raise EmptyInputError(f"no event of {dataset.path} falls inside the study interval")
        sliced = slice_windows(log, windows)
        X = allocation(sliced)
        table = colistening_table(sliced, X)

        self._begin(Stage.INGEST)
        save_tensor(
            self._path(Stage.INGEST, constants.ALLOCATION_FILE),
            self._path(Stage.INGEST, constants.INDEX_FILE),
            X,
            extra={"skipped_events": int(log.skipped)},
        )
        save_colistening(self._path(Stage.INGEST, constants.COLISTENING_FILE), table, X)
        save_candidates(self._path(Stage.INGEST, constants.CANDIDATES_FILE), candidate_sets(X))
        save_candidates(self._path(Stage.INGEST, constants.TRAIN_CANDIDATES_FILE), candidate_sets(self._train_side(X)))
        return self._finish(Stage.INGEST, seed=self.config.sampling.seed)

    def trajectories(self) -> StageManifest:
        if self.config.synthetic:
            raise UsageError("a synth dataset gets its trajectories from the synth stage")
        self._require(Stage.INGEST)
        sampling = self.config.sampling
        X = self._tensor()
        table = self._colistening(X)
        X_train = self._train_side(X)
        train, evaluation = self._candidates(Split.TRAIN), self._candidates(Split.EVAL)
        train_pairs = train.of(CandidateKind.APPEARANCE) + train.of(CandidateKind.DISAPPEARANCE)
        eval_pairs = evaluation.of(CandidateKind.APPEARANCE) + evaluation.of(CandidateKind.DISAPPEARANCE)

        trajectory_set = build_trajectory_set(
            X_train,
            table,
            train_pairs,
            n_per_pair=sampling.n_per_pair,
            total=sampling.total,
            seed=sampling.seed,
            holdout=sampling.holdout,
            n_jobs=self.n_jobs,
        )
        by_split = {
            Split.TRAIN: build_pair_trajectories(
                X_train, table, train_pairs, sampling.embed_per_pair, sampling.seed, self.n_jobs
            ),
            Split.EVAL: build_pair_trajectories(X, table, eval_pairs, sampling.embed_per_pair, sampling.seed, self.n_jobs),
        }

        self._begin(Stage.TRAJECTORIES)
        self.trajectory_store.write(self._path(Stage.TRAJECTORIES, constants.SELECTED_FILE), trajectory_set.selected)
        self.trajectory_store.write(self._path(Stage.TRAJECTORIES, constants.HELD_OUT_FILE), trajectory_set.held_out)
        for split, trajectories in by_split.items():
            name = constants.PAIR_TRAJECTORIES_FILE.format(split=split.value)
            self.trajectory_store.write(self._path(Stage.TRAJECTORIES, name), trajectories)
        return self._finish(Stage.TRAJECTORIES, seed=sampling.seed, inputs=[Stage.INGEST])

    def mine(self) -> StageManifest:
        self._require(Stage.TRAJECTORIES)
        mining = self.config.mining
        selected, _ = self._trajectory_set()
        graph = induce_graph(t.ranks for t in selected)
        candidates = mine_candidates((t.ranks for t in selected), l_max=mining.l_max, top_m=mining.top_m)

        self._begin(Stage.MINE)
        write_text(self._path(Stage.MINE, constants.GRAPH_FILE), graph.to_edge_list())
        self.candidate_store.write(self._path(Stage.MINE, constants.MINED_FILE), candidates)
        return self._finish(Stage.MINE, seed=self.config.sampling.seed, inputs=[Stage.TRAJECTORIES])

    def learn(self) -> StageManifest:
        self._require(Stage.MINE)
        cfg = self.config.learning
        selected, held_out = self._trajectory_set()
        encoding, candidates = self._encoded(selected)
        model = fit(encoding.P_mat, encoding.D0_mat, cfg)
        dictionary = select_topn(model.alpha, candidates, cfg.top_n)

        self._begin(Stage.LEARN)
        self.dictionary_store.save(self._path(Stage.LEARN, constants.DICTIONARY_FILE), dictionary)
        save_loss_history(self._path(Stage.LEARN, constants.LOSS_FILE), model.initial_loss, model.loss_history)
        with atomic_path(self._path(Stage.LEARN, constants.CODE_MODEL_FILE)) as tmp:
            joblib.dump(
                {
                    "alpha": model.alpha,
                    "initial_loss": model.initial_loss,
                    "loss_history": list(model.loss_history),
                    "best_epoch": model.best_epoch,
                    "stop_reason": model.stop_reason,
                    "candidates": [p.ranks for p in candidates],
                },
                tmp,
            )
        summary: Dict[str, Any] = {
            "n_candidates": len(candidates),
            "n_trajectories": len(selected),
            "dictionary_size": len(dictionary),
            "final_loss": model.final_loss,
            "initial_loss": model.initial_loss,
            "best_epoch": model.best_epoch,
            "stop_reason": model.stop_reason,
        }
        if held_out:
            summary.update(dict_metrics(dictionary, held_out).to_dict())
        else:
            logger.warning("no held-out trajectories; dictionary metrics skipped")
        write_json(self._path(Stage.LEARN, constants.DICTIONARY_METRICS_FILE), summary)
        return self._finish(Stage.LEARN, seed=cfg.seed, inputs=[Stage.MINE])

    def embed(self, per_pair: Optional[int] = None) -> StageManifest:
        self._require(Stage.LEARN, Stage.TRAJECTORIES)
        available = self.config.sampling.embed_per_pair
        per_pair = available if per_pair is None else per_pair
        if not 1 <= per_pair <= available:
            raise UsageError(f"--per-pair must be in [1, {available}] (sampling.embed_per_pair)")
        dictionary = self._dictionary()
        results = {split: embed_pairs(self._pair_trajectories(split), dictionary, per_pair) for split in Split}

        self._begin(Stage.EMBED)
        for split, embeddings in results.items():
            path = self._path(Stage.EMBED, constants.EMBEDDINGS_FILE.format(split=split.value))
            write_frame(path, embedding_frame(embeddings, dictionary))
        return self._finish(
            Stage.EMBED,
            seed=self.config.sampling.seed,
            inputs=[Stage.TRAJECTORIES, Stage.LEARN],
            params={"per_pair": per_pair},
        )

    def _train_classifier(
        self, X_train: AllocationTensor, pairs: List[CandidatePair], embeddings, kind: CandidateKind
    ) -> Tuple[IClassifier, ClassifierReport]:
        data = label_pairs(X_train, pairs, embeddings)
        if not data:
            logger.warning(f"no labelled {kind.value} pair; predicting it never happens")
            return ConstantClassifier(0.0), ClassifierReport(kind.value, 0, 0, ConstantClassifier.name)
        classifier, report = train_or_constant(data, kind.value, self.config.forest, self.factory)
        features, labels = as_arrays(data)
        report.train_auc = auc(classifier.predict_proba(features), labels)
        return classifier, report

    def predict(self) -> StageManifest:
        self._require(Stage.INGEST, Stage.EMBED)
        X = self._tensor()
        X_train = self._train_side(X)
        train = self._candidates(Split.TRAIN)
        train_embeddings = self._embeddings(Split.TRAIN)

        classifiers: Dict[CandidateKind, IClassifier] = {}
        reports: List[ClassifierReport] = []
        for kind in CandidateKind:
            classifiers[kind], report = self._train_classifier(X_train, train.of(kind), train_embeddings, kind)
            reports.append(report)

        predictions: Dict[ModelName, PredictionMatrix] = {
            ModelName.POPULARITY: baseline_popularity(X),
            ModelName.NMF: baseline_nmf(X, self.config.nmf),
            ModelName.PREVIOUS: baseline_previous(X),
            ModelName.PLUG_PREVIOUS: plug_previous(
                X,
                classifiers[CandidateKind.APPEARANCE],
                classifiers[CandidateKind.DISAPPEARANCE],
                self._embeddings(Split.EVAL),
                threshold=self.config.analysis.threshold,
            ),
        }

        self._begin(Stage.PREDICT)
        for kind, classifier in classifiers.items():
            with atomic_path(self._path(Stage.PREDICT, constants.CLASSIFIER_FILE.format(kind=kind.value))) as tmp:
                classifier.save(tmp)
        for name in _MODEL_ORDER:
            save_prediction(self._path(Stage.PREDICT, constants.PREDICTION_FILE.format(model=name.value)), predictions[name])
        write_json(
            self._path(Stage.PREDICT, constants.PREDICT_REPORT_FILE),
            {
                "classifiers": [asdict(r) for r in reports],
                "flags": {name.value: predictions[name].flags for name in _MODEL_ORDER},
            },
        )
        return self._finish(Stage.PREDICT, seed=self.config.forest.seed, inputs=[Stage.INGEST, Stage.EMBED])

    def evaluate(self, oracle: bool = False) -> List[MetricsReport]:
        self._require(Stage.INGEST, Stage.PREDICT)
        X = self._tensor()
        candidates = self._candidates(Split.EVAL)
        predictions = [
            load_prediction(self._path(Stage.PREDICT, constants.PREDICTION_FILE.format(model=name.value)), name.value)
            for name in _MODEL_ORDER
        ]
        if oracle:
            # every model predicts the target window exactly
            predictions = [
                PredictionMatrix(name=p.name, values=X.target.copy(), users=list(X.users), genres=list(X.genres))
                for p in predictions
            ]
        reports = evaluate_models(
            X,
            predictions,
            candidates,
            changed_only=self.config.analysis.changed_cells_only,
            shift_previous=not oracle,
        )

        name = _ORACLE_STAGE if oracle else Stage.EVALUATE.value
        self._begin(Stage.EVALUATE, name)
        rows = [r.to_dict() for r in reports]
        write_json(self.artifacts.path(name, constants.METRICS_FILE), {"oracle": oracle, "models": rows})
        write_frame(self.artifacts.path(name, "metrics.csv"), pd.DataFrame(rows))
        self._finish(
            Stage.EVALUATE,
            seed=self.config.sampling.seed,
            inputs=[Stage.INGEST, Stage.PREDICT],
            params={"oracle": oracle},
            name=name,
        )
        return reports

    def _correlations(
        self, X: AllocationTensor, candidates: CandidateSets, embeddings, dictionary: PathletDictionary
    ) -> Dict[CandidateKind, np.ndarray]:
        result = {}
        for kind in CandidateKind:
            data = label_pairs(X, candidates.of(kind), embeddings)
            if not data:
                logger.warning(f"no embedded {kind.value} pair; its correlations are all zero")
                result[kind] = np.zeros(len(dictionary))
                continue
            features, labels = as_arrays(data)
            result[kind] = pathlet_correlation(features, labels)
        return result

    def _graph_genres(self, X: AllocationTensor, popularity: np.ndarray) -> List[str]:
        chosen = list(self.config.analysis.graph_genres)
        for genre in chosen:
            X.genre_col(genre)
        if chosen:
            return chosen
        order = sorted(range(X.n_genres), key=lambda g: (-popularity[g], X.genres[g]))
        return [X.genres[g] for g in order[:_DEFAULT_GRAPH_GENRES]]

    def analyze(self) -> StageManifest:
        self._require(Stage.INGEST, Stage.EMBED)
        analysis = self.config.analysis
        X = self._tensor()
        dictionary = self._dictionary()
        candidates = self._candidates(Split.EVAL)
        embeddings = self._embeddings(Split.EVAL)
        pair_trajectories = self._pair_trajectories(Split.EVAL)

        decomposition = variation_decomposition(X)
        buckets = None
        if decomposition.empty:
            logger.warning("no user changed between consecutive windows; variation buckets skipped")
        else:
            buckets = decompose_by_intra_variability(decomposition, analysis.variation_buckets)

        correlations = self._correlations(X, candidates, embeddings, dictionary)
        pathlets = analysis_frame(
            analyze_pathlets(dictionary, correlations[CandidateKind.APPEARANCE], correlations[CandidateKind.DISAPPEARANCE])
        )
        popularity = popularity_distribution(X)
        diversity = diversity_by_popularity(
            dictionary,
            embeddings,
            correlations[CandidateKind.APPEARANCE],
            dict(zip(X.genres, popularity.tolist())),
            CandidateKind.APPEARANCE,
            analysis.popularity_buckets,
        )

        rank_maps = {t.anchor: t.rank_map for t in pair_trajectories}
        graphs = {
            genre: extended_pathlet_graphs(
                dictionary,
                embeddings,
                rank_maps,
                correlations[CandidateKind.APPEARANCE],
                correlations[CandidateKind.DISAPPEARANCE],
                genre,
            )
            for genre in self._graph_genres(X, popularity)
        }

        sampler = TrajectorySampler(X, self._colistening(X), self.config.sampling.seed)
        pairs = [p for p in sorted(candidates.appearance | candidates.disappearance) if not sampler.is_empty(p)]
        reconstruction = sampling_reconstruction_curve(
            sampler, pairs[: analysis.reconstruction_pairs], analysis.reconstruction_sizes
        )

        self._begin(Stage.ANALYZE)
        write_frame(self._path(Stage.ANALYZE, constants.VARIATION_FILE), decomposition)
        if buckets is not None:
            write_frame(self._path(Stage.ANALYZE, constants.VARIATION_BUCKETS_FILE), buckets)
        write_frame(self._path(Stage.ANALYZE, constants.PATHLETS_FILE), pathlets)
        write_frame(self._path(Stage.ANALYZE, constants.DIVERSITY_FILE), diversity)
        write_frame(self._path(Stage.ANALYZE, constants.RECONSTRUCTION_FILE), reconstruction)
        for genre, by_outcome in graphs.items():
            for outcome, graph in by_outcome.items():
                stem = f"{_GRAPH_DIR}/{_slug(genre)}_{outcome}"
                write_text(self._path(Stage.ANALYZE, f"{stem}.dot"), to_dot(graph))
                write_text(self._path(Stage.ANALYZE, f"{stem}.json"), to_json(graph))
        return self._finish(
            Stage.ANALYZE, seed=self.config.sampling.seed, inputs=[Stage.INGEST, Stage.TRAJECTORIES, Stage.EMBED]
        )

    def sweep(self) -> StageManifest:
        self._require(Stage.MINE)
        selected, held_out = self._trajectory_set()
        if not held_out:
            raise UsageError("the sweep scores held-out trajectories; set sampling.holdout > 0")
        encoding, candidates = self._encoded(selected)
        table = sweep(
            encoding.P_mat,
            encoding.D0_mat,
            candidates,
            held_out,
            self.config.analysis.sweep_lambdas,
            self.config.learning,
        )

        self._begin(Stage.SWEEP)
        write_frame(self._path(Stage.SWEEP, constants.SWEEP_FILE), table)
        return self._finish(Stage.SWEEP, seed=self.config.learning.seed, inputs=[Stage.MINE])

    def synth(self) -> RecoveryReport:
        """
        Publish a planted corpus as the trajectories artifact, run the stock mine and
        learn stages on it and score the learned dictionary against the planted pathlets.
        """
        if not self.config.synthetic:
            raise UsageError("the synth stage needs dataset.format: synth")
        spec, sampling = self.config.synth, self.config.sampling
        if self.config.learning.top_n < spec.n_pathlets:
            raise UsageError(
                f"learning.top_n ({self.config.learning.top_n}) must be at least synth.n_pathlets ({spec.n_pathlets})"
            )
        corpus = generate_planted(spec, holdout=sampling.holdout)

        self._begin(Stage.TRAJECTORIES)
        self.trajectory_store.write(self._path(Stage.TRAJECTORIES, constants.SELECTED_FILE), corpus.trajectories)
        self.trajectory_store.write(self._path(Stage.TRAJECTORIES, constants.HELD_OUT_FILE), corpus.held_out)
        by_split = {Split.TRAIN: corpus.trajectories, Split.EVAL: corpus.held_out}
        for split, trajectories in by_split.items():
            name = constants.PAIR_TRAJECTORIES_FILE.format(split=split.value)
            self.trajectory_store.write(self._path(Stage.TRAJECTORIES, name), trajectories)
        self._finish(Stage.TRAJECTORIES, seed=spec.seed)

        self.mine()
        self.learn()
        report = recovery_report(self._dictionary(), corpus.planted)
        logger.info(f"recovered {len(report.recovered)} of {report.n_planted} planted pathlets")

        self._begin(Stage.SYNTH)
        self.planted_store.write(
            self._path(Stage.SYNTH, constants.PLANTED_FILE),
            [(p, corpus.planting_counts.get(p, 0)) for p in corpus.planted],
        )
        write_json(self._path(Stage.SYNTH, constants.RECOVERY_FILE), report.to_dict())
        self._finish(Stage.SYNTH, seed=spec.seed, inputs=[Stage.TRAJECTORIES, Stage.LEARN])
        return report
