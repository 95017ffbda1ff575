import json

import pytest

from tastePath.core.exceptions import ParseError, UnknownEntityError
from tastePath.ingest import load_events
from tastePath.models.events import ListeningEvent, WindowConfig
from tastePath.test.common import write_csv


def test_csv_line_maps_to_event(tmp_path):
    path = write_csv(tmp_path / "events.csv", [("u1", 1641000000, "rock", "tr9")])
    log = load_events(path)
    assert log.history("u1").events == [ListeningEvent("u1", 1641000000, "rock", "tr9")]


def test_events_sorted_by_timestamp_with_stable_ties(tmp_path):
    path = write_csv(
        tmp_path / "events.csv",
        [("u1", 20, "jazz", ""), ("u1", 10, "rock", ""), ("u1", 20, "metal", ""), ("u0", 5, "pop", "")],
    )
    log = load_events(path)
    assert [e.genre for e in log.history("u1").events] == ["rock", "jazz", "metal"]
    assert log.users == ["u0", "u1"]


def test_empty_file_gives_empty_collection(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("", encoding="utf-8")
    log = load_events(path)
    assert len(log) == 0
    assert log.users == []


def test_header_only_file_gives_empty_collection(tmp_path):
    path = write_csv(tmp_path / "events.csv", [])
    assert load_events(path).users == []


def test_track_column_is_optional(tmp_path):
    path = write_csv(tmp_path / "events.csv", [("u1", 3, "rock")], header="user,ts,genre")
    assert load_events(path).history("u1").events[0].track is None


def test_malformed_timestamp_reports_line(tmp_path):
    path = write_csv(tmp_path / "events.csv", [("u1", 3, "rock", ""), ("u1", "soon", "jazz", "")])
    with pytest.raises(ParseError) as err:
        load_events(path)
    assert err.value.line == 3


def test_empty_genre_is_rejected(tmp_path):
    path = write_csv(tmp_path / "events.csv", [("u1", 3, "", "")])
    with pytest.raises(ParseError) as err:
        load_events(path)
    assert err.value.line == 2


def test_invalid_utf8_in_csv_reports_line(tmp_path):
    path = tmp_path / "events.csv"
    path.write_bytes(b"user,ts,genre,track\nu1,5,rock,t1\nu2,6,\xff\xferock,t2\n")
    with pytest.raises(ParseError) as err:
        load_events(path)
    assert err.value.line == 3


def test_invalid_utf8_in_jsonl_reports_line(tmp_path):
    path = tmp_path / "events.jsonl"
    path.write_bytes(b'{"user": "u1", "ts": 1, "genre": "rock"}\n{"user": "u1", "ts": 2, "genre": "\xff"}\n')
    with pytest.raises(ParseError) as err:
        load_events(path, fmt="jsonl")
    assert err.value.line == 2


def test_invalid_utf8_in_lastfm_reports_line(tmp_path):
    tsv = tmp_path / "lastfm.tsv"
    tsv.write_bytes(
        b"user_000001\t2009-05-04T23:08:57Z\taid\tDeep Dish\ttid\tSong\n"
        b"user_000001\t2009-05-04T13:54:10Z\taid\t\xc3(\ttid\tSong\n"
    )
    genre_map = tmp_path / "genres.csv"
    genre_map.write_text("artist,genre\nDeep Dish,house\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_events(tsv, fmt="lastfm", genre_map=genre_map)
    assert err.value.line == 2


def test_out_of_interval_events_are_skipped_and_counted(tmp_path):
    path = write_csv(tmp_path / "events.csv", [("u1", 5, "rock", ""), ("u1", 500, "jazz", ""), ("u1", -1, "pop", "")])
    log = load_events(path, window=WindowConfig(t_start=0, t_end=100, K=4))
    assert [e.genre for e in log.history("u1").events] == ["rock"]
    assert log.skipped == 2


def test_jsonl_with_missing_field_reports_line(tmp_path):
    path = tmp_path / "events.jsonl"
    path.write_text(
        json.dumps({"user": "u1", "ts": 1, "genre": "rock"}) + "\n" + json.dumps({"user": "u1", "ts": 2}) + "\n",
        encoding="utf-8",
    )
    with pytest.raises(ParseError) as err:
        load_events(path, fmt="jsonl")
    assert err.value.line == 2


def test_jsonl_matches_csv(tmp_path):
    rows = [("u1", 2, "jazz", "t2"), ("u1", 1, "rock", "t1")]
    csv_log = load_events(write_csv(tmp_path / "e.csv", rows))
    path = tmp_path / "e.jsonl"
    path.write_text(
        "\n".join(json.dumps({"user": u, "ts": t, "genre": g, "track": tr}) for u, t, g, tr in rows) + "\n",
        encoding="utf-8",
    )
    assert load_events(path, fmt="jsonl").history("u1") == csv_log.history("u1")


def test_column_mapping_adapts_dataset_schema(tmp_path):
    path = write_csv(tmp_path / "deezer.csv", [("7", 100, "rock", "42")], header="user_id,ts_listen,genre_name,media_id")
    log = load_events(
        path, columns={"user": "user_id", "ts": "ts_listen", "genre": "genre_name", "track": "media_id"}
    )
    assert log.history("7").events == [ListeningEvent("7", 100, "rock", "42")]


def test_vocabulary_overrides_and_rejects_unknown_genres(tmp_path):
    path = write_csv(tmp_path / "events.csv", [("u1", 1, "rock", "")])
    log = load_events(path, vocabulary=["jazz", "rock", "metal"])
    assert log.genres == ["jazz", "rock", "metal"]
    with pytest.raises(UnknownEntityError):
        load_events(path, vocabulary=["jazz"])


def test_lastfm_adapter_maps_artists_to_genres(tmp_path):
    tsv = tmp_path / "lastfm.tsv"
    tsv.write_text(
        "user_000001\t2009-05-04T23:08:57Z\taid\tDeep Dish\ttid\tFuck Me Im Famous\n"
        "user_000001\t2009-05-04T13:54:10Z\taid2\tUnknown Band\ttid2\tSong\n",
        encoding="utf-8",
    )
    genre_map = tmp_path / "genres.csv"
    genre_map.write_text("artist,genre\nDeep Dish,house\n", encoding="utf-8")
    log = load_events(tsv, fmt="lastfm", genre_map=genre_map)
    events = log.history("user_000001").events
    assert [e.genre for e in events] == ["house"]
    assert events[0].ts == 1241478537
    assert log.skipped == 1
