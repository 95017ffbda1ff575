from tastePath.core.exceptions import DataError


class ArtifactError(DataError):
    """Stage artifact could not be read or written"""

    pass


class MissingArtifactError(ArtifactError):
    """An upstream stage has not produced its artifacts yet"""

    def __init__(self, stage: str, message: str = ""):
        self.stage = stage
        super().__init__(message or f"missing artifacts of stage '{stage}'; run `tastePath {stage}` first")


class StaleArtifactError(ArtifactError):
    """Artifacts no longer match the configuration or their recorded hashes"""

    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"stale artifacts of stage '{stage}': {message}; re-run `tastePath {stage}`")
