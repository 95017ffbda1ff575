from tastePath.stores.artifacts.impl import FileArtifactStore
from tastePath.stores.artifacts.interface import IArtifactStore

__all__ = ["FileArtifactStore", "IArtifactStore"]
