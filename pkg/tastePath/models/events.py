from dataclasses import dataclass, field
from datetime import date, datetime
from typing import List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

EVENT_COLUMNS = ["user", "ts", "genre", "track"]


@dataclass(frozen=True)
class ListeningEvent:
    """One timestamped user-genre interaction"""

    user: str
    ts: int
    genre: str
    track: Optional[str] = None


class WindowConfig(BaseModel):
    """Study interval [t_start, t_end] split into K equal windows"""

    model_config = ConfigDict(frozen=True)

    t_start: int
    t_end: int
    K: int

    @field_validator("t_start", "t_end", mode="before")
    @classmethod
    def _epoch(cls, value):
        """Accept epoch seconds or an ISO-8601 date, read as UTC"""
        if isinstance(value, (date, datetime)) or (isinstance(value, str) and not value.strip().lstrip("-").isdigit()):
            ts = pd.Timestamp(value)
            ts = ts.tz_localize("UTC") if ts.tzinfo is None else ts.tz_convert("UTC")
            return int(ts.timestamp())
        return value

    @model_validator(mode="after")
    def _check(self) -> "WindowConfig":
        if self.t_start >= self.t_end:
            raise ValueError("t_start must be < t_end")
        if self.K < 2:
            raise ValueError("K must be >= 2")
        return self

    @property
    def span(self) -> int:
        return self.t_end - self.t_start

    def window_of(self, ts: int) -> int:
        """0-based window of ``ts``; left-closed windows, the last one closed on the right"""
        k = ((ts - self.t_start) * self.K) // self.span
        return int(min(k, self.K - 1))

    def windows_of(self, ts: np.ndarray) -> np.ndarray:
        k = ((ts.astype(np.int64) - self.t_start) * self.K) // self.span
        return np.minimum(k, self.K - 1)


@dataclass
class History:
    """Events of one user, ordered by timestamp then input order"""

    user: str
    events: List[ListeningEvent] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.events)

    @property
    def genres(self) -> List[str]:
        return [e.genre for e in self.events]


def _rows_to_events(frame: pd.DataFrame) -> List[ListeningEvent]:
    tracks = frame["track"].tolist()
    return [
        ListeningEvent(user=u, ts=int(t), genre=g, track=None if pd.isna(tr) else tr)
        for u, t, g, tr in zip(frame["user"], frame["ts"], frame["genre"], tracks)
    ]


@dataclass
class EventLog:
    """
    History collection backed by a frame sorted by (user, ts, seq), where ``seq`` is
    the input order. ``skipped`` counts records dropped for falling outside the study
    interval or for unmapped artists.
    """

    frame: pd.DataFrame
    skipped: int = 0
    vocabulary: Optional[List[str]] = None

    def __len__(self) -> int:
        return len(self.frame)

    @property
    def users(self) -> List[str]:
        return sorted(self.frame["user"].unique().tolist())

    @property
    def genres(self) -> List[str]:
        if self.vocabulary is not None:
            return list(self.vocabulary)
        return sorted(self.frame["genre"].unique().tolist())

    def history(self, user: str) -> History:
        rows = self.frame[self.frame["user"] == user]
        return History(user=user, events=_rows_to_events(rows))


@dataclass
class SlicedHistory:
    """An event log with a 0-based window index attached to every event"""

    log: EventLog
    config: WindowConfig
    windows: np.ndarray

    @property
    def K(self) -> int:
        return self.config.K

    def window(self, user: str, k: int) -> History:
        """h^k_u for the 0-based window ``k``"""
        frame = self.log.frame
        mask = (frame["user"].to_numpy() == user) & (self.windows == k)
        return History(user=user, events=_rows_to_events(frame[mask]))
