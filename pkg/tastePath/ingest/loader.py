import csv
import json
import re
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from tastePath.core.exceptions import DataError, ParseError, UnknownEntityError, UsageError
from tastePath.logger import get_logger
from tastePath.models.events import EVENT_COLUMNS, EventLog, WindowConfig

logger = get_logger("tastePath.ingest")

FORMATS = ("csv", "jsonl", "lastfm")
LASTFM_COLUMNS = ["user", "timestamp", "artist_id", "artist", "track_id", "track_name"]

PathLike = Union[str, Path]


def load_events(
    path: PathLike,
    fmt: str = "csv",
    window: Optional[WindowConfig] = None,
    vocabulary: Optional[Union[PathLike, Sequence[str]]] = None,
    columns: Optional[Mapping[str, str]] = None,
    genre_map: Optional[PathLike] = None,
) -> EventLog:
    """
    Parse an event log into a history collection.

    Args:
        path: event file
        fmt: ``csv`` / ``jsonl`` with keys user, ts, genre, track (track optional), or
            ``lastfm`` for the Last-fm 1K TSV dump
        window: when given, events outside [t_start, t_end] are skipped and counted
        vocabulary: genre list (or a file with one genre per line) replacing the
            observed genre set; events outside it are rejected
        columns: canonical name -> source column name, for dataset adapters
        genre_map: ``artist,genre`` CSV, required by ``lastfm``

    Returns:
        EventLog sorted by user, then timestamp, then input order

    Raises:
        ParseError: malformed record, with its line number
    """
    path = Path(path)
    if fmt not in FORMATS:
        raise UsageError(f"unknown event format {fmt!r}, expected one of {FORMATS}")
    if not path.exists():
        raise DataError(f"event file not found: {path}")

    skipped = 0
    if fmt == "csv":
        frame, lines = _read_csv(path, columns)
    elif fmt == "jsonl":
        frame, lines = _read_jsonl(path, columns)
    else:
        if genre_map is None:
            raise UsageError("the lastfm format needs a genre_map file (artist,genre)")
        frame, lines, skipped = _read_lastfm(path, Path(genre_map))

    frame, lines = _validate(frame, lines)

    if window is not None and len(frame):
        inside = (frame["ts"] >= window.t_start) & (frame["ts"] <= window.t_end)
        outside = int((~inside).sum())
        logger.counted_warning(outside, f"skipped events outside [{window.t_start}, {window.t_end}]")
        skipped += outside
        frame, lines = frame[inside.to_numpy()], lines[inside.to_numpy()]

    vocab = None
    if vocabulary is not None:
        vocab = _load_vocabulary(vocabulary)
        unknown = ~frame["genre"].isin(set(vocab)).to_numpy()
        if unknown.any():
            first = int(np.argmax(unknown))
            raise UnknownEntityError(
                f"line {int(lines[first])}: genre {frame['genre'].iloc[first]!r} is not in the vocabulary"
            )

    frame = frame.assign(seq=np.arange(len(frame), dtype=np.int64))
    frame = frame.sort_values(["user", "ts", "seq"], kind="mergesort").reset_index(drop=True)
    logger.info(f"loaded {len(frame)} events for {frame['user'].nunique()} users from {path}")
    return EventLog(frame=frame, skipped=skipped, vocabulary=vocab)


def _read_csv(path: Path, columns: Optional[Mapping[str, str]]):
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        return _empty_frame(), np.zeros(0, dtype=np.int64)
    except UnicodeDecodeError as e:
        raise _encoding_error(path, e) from e
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        raise ParseError(str(e), line=int(match.group(1)) if match else None) from e
    frame = _rename(frame, columns)
    # header is line 1
    lines = np.arange(2, len(frame) + 2, dtype=np.int64)
    return frame, lines


def _read_jsonl(path: Path, columns: Optional[Mapping[str, str]]):
    source = {c: (columns or {}).get(c, c) for c in EVENT_COLUMNS}
    rows: List[Dict[str, object]] = []
    lines: List[int] = []
    with path.open("rb") as f:
        for line_no, encoded in enumerate(f, start=1):
            try:
                raw = encoded.decode("utf-8")
            except UnicodeDecodeError as e:
                raise ParseError(f"invalid UTF-8 at byte {e.start} of the line", line=line_no) from e
            if not raw.strip():
                continue
            try:
                record = json.loads(raw)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON: {e.msg}", line=line_no) from e
            if not isinstance(record, dict):
                raise ParseError("record is not an object", line=line_no)
            missing = [c for c in ("user", "ts", "genre") if source[c] not in record]
            if missing:
                raise ParseError(f"missing field(s) {missing}", line=line_no)
            rows.append({c: record.get(source[c], "") for c in EVENT_COLUMNS})
            lines.append(line_no)
    if not rows:
        return _empty_frame(), np.zeros(0, dtype=np.int64)
    frame = pd.DataFrame(rows, columns=EVENT_COLUMNS)
    for c in EVENT_COLUMNS:
        frame[c] = frame[c].map(lambda v: "" if v is None else str(v))
    return frame, np.asarray(lines, dtype=np.int64)


def _read_lastfm(path: Path, genre_map_path: Path):
    if not genre_map_path.exists():
        raise DataError(f"genre map not found: {genre_map_path}")
    genre_map = pd.read_csv(genre_map_path, dtype=str, keep_default_na=False)
    if not {"artist", "genre"} <= set(genre_map.columns):
        raise DataError("genre map needs columns artist,genre")
    mapping = dict(zip(genre_map["artist"], genre_map["genre"]))

    try:
        raw = pd.read_csv(
            path,
            sep="\t",
            header=None,
            names=LASTFM_COLUMNS,
            dtype=str,
            keep_default_na=False,
            quoting=csv.QUOTE_NONE,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError:
        return _empty_frame(), np.zeros(0, dtype=np.int64), 0
    except UnicodeDecodeError as e:
        raise _encoding_error(path, e) from e
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        raise ParseError(str(e), line=int(match.group(1)) if match else None) from e

    lines = np.arange(1, len(raw) + 1, dtype=np.int64)
    stamps = pd.to_datetime(raw["timestamp"], utc=True, errors="coerce")
    bad = stamps.isna().to_numpy()
    if bad.any():
        first = int(np.argmax(bad))
        raise ParseError(f"invalid timestamp {raw['timestamp'].iloc[first]!r}", line=int(lines[first]))

    genres = raw["artist"].map(mapping)
    mapped = genres.notna().to_numpy() & (genres.fillna("") != "").to_numpy()
    unmapped = int((~mapped).sum())
    logger.counted_warning(unmapped, "skipped Last-fm events of artists without a genre")

    seconds = (stamps - pd.Timestamp(0, tz="UTC")) // pd.Timedelta(seconds=1)
    frame = pd.DataFrame(
        {
            "user": raw["user"],
            "ts": seconds.astype(np.int64).astype(str),
            "genre": genres.fillna(""),
            "track": raw["track_id"],
        }
    )
    return frame[mapped].reset_index(drop=True), lines[mapped], unmapped


def _encoding_error(path: Path, error: UnicodeDecodeError) -> ParseError:
    """Locate the first line of ``path`` that is not valid UTF-8"""
    with path.open("rb") as f:
        for line_no, encoded in enumerate(f, start=1):
            try:
                encoded.decode("utf-8")
            except UnicodeDecodeError:
                return ParseError(f"invalid UTF-8: {error.reason}", line=line_no)
    return ParseError(f"invalid UTF-8: {error.reason}")


def _rename(frame: pd.DataFrame, columns: Optional[Mapping[str, str]]) -> pd.DataFrame:
    if columns:
        frame = frame.rename(columns={src: dst for dst, src in columns.items()})
    missing = [c for c in ("user", "ts", "genre") if c not in frame.columns]
    if missing:
        raise ParseError(f"missing column(s) {missing}", line=1)
    if "track" not in frame.columns:
        frame["track"] = ""
    return frame[EVENT_COLUMNS]


def _validate(frame: pd.DataFrame, lines: np.ndarray):
    if frame.empty:
        return _typed(_empty_frame()), lines

    users = frame["user"].astype(str).str.strip()
    genres = frame["genre"].astype(str).str.strip()
    ts_raw = frame["ts"].astype(str).str.strip()
    ts_ok = ts_raw.str.fullmatch(r"[+-]?\d+").to_numpy()

    for mask, what in (
        (~ts_ok, "timestamp is not an integer"),
        ((users == "").to_numpy(), "empty user"),
        ((genres == "").to_numpy(), "empty genre"),
    ):
        if mask.any():
            first = int(np.argmax(mask))
            raise ParseError(what, line=int(lines[first]))

    tracks = frame["track"].astype(str).str.strip()
    typed = pd.DataFrame(
        {
            "user": users,
            "ts": ts_raw.astype(np.int64),
            "genre": genres,
            "track": tracks.where(tracks != "", None),
        }
    )
    return typed.reset_index(drop=True), lines


def _load_vocabulary(vocabulary: Union[PathLike, Sequence[str]]) -> List[str]:
    if isinstance(vocabulary, (str, Path)):
        with Path(vocabulary).open("r", encoding="utf-8") as f:
            vocab = [line.strip() for line in f if line.strip()]
    else:
        vocab = [str(g) for g in vocabulary]
    if len(set(vocab)) != len(vocab):
        raise DataError("vocabulary lists a genre twice")
    return vocab


def _empty_frame() -> pd.DataFrame:
    return pd.DataFrame({c: pd.Series([], dtype=str) for c in EVENT_COLUMNS})


def _typed(frame: pd.DataFrame) -> pd.DataFrame:
    return frame.astype({"user": str, "ts": np.int64, "genre": str})
