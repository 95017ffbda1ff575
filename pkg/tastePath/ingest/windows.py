import numpy as np

from tastePath.core.exceptions import DataError
from tastePath.models.events import EventLog, SlicedHistory, WindowConfig


def slice_windows(log: EventLog, cfg: WindowConfig) -> SlicedHistory:
    """
    Assign every event to its 0-based window: t goes to k iff
    k/K * |T| <= t - t_start < (k+1)/K * |T|, and t = t_end goes to the last window.
    Integer arithmetic keeps boundaries exact.
    """
    ts = log.frame["ts"].to_numpy(dtype=np.int64)
    if len(ts):
        outside = (ts < cfg.t_start) | (ts > cfg.t_end)
        if outside.any():
            raise DataError(
                f"{int(outside.sum())} events fall outside [{cfg.t_start}, {cfg.t_end}]; "
                "load them with the same window config to skip them"
            )
    windows = cfg.windows_of(ts) if len(ts) else np.zeros(0, dtype=np.int64)
    return SlicedHistory(log=log, config=cfg, windows=windows.astype(np.int64))
