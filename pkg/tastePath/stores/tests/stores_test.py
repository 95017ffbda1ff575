import json

import numpy as np
import pytest

from tastePath.constants import CandidateKind
from tastePath.models.allocation import AllocationTensor, CandidatePair, CandidateSets, CoListeningTable
from tastePath.models.pathlet import Pathlet, PathletDictionary
from tastePath.models.prediction import PredictionMatrix
from tastePath.stores.base import atomic_path, read_json, write_json
from tastePath.stores.exceptions import ArtifactError
from tastePath.stores.records import CandidateStore, DictionaryStore, PlantedStore, TrajectoryStore
from tastePath.stores.tables import (
    load_candidates,
    load_colistening,
    load_prediction,
    load_tensor,
    save_candidates,
    save_colistening,
    save_prediction,
    save_tensor,
)
from tastePath.test.common import rank_trajectory


@pytest.fixture
def counts_tensor():
    counts = np.array(
        [
            [[2, 0, 1], [0, 0, 0]],
            [[1, 1, 0], [0, 3, 1]],
            [[0, 0, 4], [1, 0, 0]],
        ],
        dtype=np.int64,
    )
    totals = counts.sum(axis=2, keepdims=True)
    values = np.where(totals > 0, counts / np.maximum(totals, 1), 0.0)
    return AllocationTensor(values=values, users=["a", "b"], genres=["jazz", "metal", "rock"], counts=counts)


@pytest.mark.unit
class TestAtomicWrites:
    def test_failed_write_leaves_no_file(self, tmp_path):
        target = tmp_path / "out.json"
        with pytest.raises(RuntimeError):
            with atomic_path(target) as tmp:
                tmp.write_text("partial")
                raise RuntimeError("boom")
        assert not target.exists()
        assert list(tmp_path.iterdir()) == []

    def test_failed_write_keeps_previous_content(self, tmp_path):
        target = tmp_path / "out.json"
        write_json(target, {"a": 1})
        with pytest.raises(RuntimeError):
            with atomic_path(target) as tmp:
                tmp.write_text("partial")
                raise RuntimeError("boom")
        assert read_json(target) == {"a": 1}

    def test_json_keys_sorted(self, tmp_path):
        target = tmp_path / "out.json"
        write_json(target, {"b": 1, "a": {"d": 2, "c": 3}})
        text = target.read_text()
        assert text.index('"a"') < text.index('"b"')
        assert text.index('"c"') < text.index('"d"')
        assert text.endswith("\n")

    def test_unreadable_json_is_artifact_error(self, tmp_path):
        target = tmp_path / "bad.json"
        target.write_text("{not json")
        with pytest.raises(ArtifactError):
            read_json(target)


@pytest.mark.unit
class TestRecordStores:
    def test_trajectory_records_keep_rank_map(self, tmp_path):
        store = TrajectoryStore()
        trajectories = [rank_trajectory([0, 1, 2, 1]), rank_trajectory([2, 0], user="v")]
        assert store.write(tmp_path / "t.jsonl", trajectories) == 2

        loaded = store.read(tmp_path / "t.jsonl")
        assert [t.ranks for t in loaded] == [(0, 1, 2, 1), (2, 0)]
        assert loaded[1].anchor == CandidatePair("v", "g0", CandidateKind.APPEARANCE)
        assert loaded[0].invert() == ("g0", "g1", "g2", "g1")

    def test_writes_are_byte_identical(self, tmp_path):
        store = CandidateStore()
        pathlets = [Pathlet((1, 2, 3), 7), Pathlet((0, 1), 4)]
        store.write(tmp_path / "a.jsonl", pathlets)
        store.write(tmp_path / "b.jsonl", pathlets)
        assert (tmp_path / "a.jsonl").read_bytes() == (tmp_path / "b.jsonl").read_bytes()

    def test_dictionary_keeps_order_and_influence(self, tmp_path):
        store = DictionaryStore()
        dictionary = PathletDictionary(pathlets=[Pathlet((3, 1), 2), Pathlet((0, 1, 2), 5)], influence=[0.9, 0.4])
        store.save(tmp_path / "d.jsonl", dictionary)
        loaded = store.load(tmp_path / "d.jsonl")
        assert loaded.labels() == ["3-1", "0-1-2"]
        assert loaded.influence == [0.9, 0.4]
        assert loaded.pathlets[1].support == 5

    def test_planted_records(self, tmp_path):
        store = PlantedStore()
        store.write(tmp_path / "p.jsonl", [((1, 2, 3), 11), ((4, 5, 6), 0)])
        assert store.read(tmp_path / "p.jsonl") == [((1, 2, 3), 11), ((4, 5, 6), 0)]

    def test_bad_record_names_its_line(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text('{"ranks": [1, 2], "support": 3}\n{"ranks": [1]}\n')
        with pytest.raises(ArtifactError, match=":2:"):
            CandidateStore().read(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ArtifactError):
            CandidateStore().read(tmp_path / "none.jsonl")


@pytest.mark.unit
class TestTables:
    def test_tensor_reload_matches(self, tmp_path, counts_tensor):
        save_tensor(tmp_path / "counts.csv", tmp_path / "index.json", counts_tensor, extra={"skipped_events": 3})
        loaded = load_tensor(tmp_path / "counts.csv", tmp_path / "index.json")
        assert loaded.users == ["a", "b"]
        assert loaded.genres == ["jazz", "metal", "rock"]
        np.testing.assert_array_equal(loaded.counts, counts_tensor.counts)
        np.testing.assert_array_equal(loaded.values, counts_tensor.values)
        assert json.loads((tmp_path / "index.json").read_text())["skipped_events"] == 3

    def test_colistening_reload(self, tmp_path, counts_tensor):
        table = CoListeningTable(n_genres=3)
        table.entries[(1, 1, 1)] = (np.array([1, 2]), np.array([2, 1]))
        table.entries[(0, 0, 0)] = (np.array([2]), np.array([1]))
        save_colistening(tmp_path / "co.csv", table, counts_tensor)

        loaded = load_colistening(tmp_path / "co.csv", counts_tensor)
        assert sorted(loaded.entries) == [(0, 0, 0), (1, 1, 1)]
        np.testing.assert_array_equal(loaded.vector(1, 1, 1), table.vector(1, 1, 1))

    def test_candidates_reload(self, tmp_path):
        sets = CandidateSets()
        sets.appearance.add(CandidatePair("a", "metal", CandidateKind.APPEARANCE))
        sets.disappearance.add(CandidatePair("a", "jazz", CandidateKind.DISAPPEARANCE))
        sets.disappearance.add(CandidatePair("b", "rock", CandidateKind.DISAPPEARANCE))
        save_candidates(tmp_path / "cand.csv", sets)

        loaded = load_candidates(tmp_path / "cand.csv")
        assert loaded.appearance == sets.appearance
        assert loaded.disappearance == sets.disappearance

    def test_prediction_reload_keeps_exclusions(self, tmp_path):
        prediction = PredictionMatrix(
            name="previous",
            values=np.array([[0.25, 0.75], [0.0, 0.0]]),
            users=["a", "b"],
            genres=["jazz", "rock"],
        )
        save_prediction(tmp_path / "previous.csv", prediction)
        loaded = load_prediction(tmp_path / "previous.csv", "previous")
        np.testing.assert_allclose(loaded.values, prediction.values)
        assert loaded.excluded.tolist() == [False, True]
        assert loaded.genres == ["jazz", "rock"]
