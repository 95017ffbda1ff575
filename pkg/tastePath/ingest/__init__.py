from tastePath.ingest.allocation import allocation, colistening, colistening_table, truncate
from tastePath.ingest.candidates import candidate_sets
from tastePath.ingest.loader import load_events
from tastePath.ingest.windows import slice_windows

__all__ = [
    "allocation",
    "candidate_sets",
    "colistening",
    "colistening_table",
    "load_events",
    "slice_windows",
    "truncate",
]
