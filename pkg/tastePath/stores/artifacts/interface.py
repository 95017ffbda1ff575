from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

from tastePath.models.manifest import StageManifest


class IArtifactStore(ABC):
    """Per-stage artifact directories with replay manifests"""

    @abstractmethod
    def stage_dir(self, stage: str) -> Path:
        """Directory of the stage, created on demand"""
        pass

    def path(self, stage: str, name: str) -> Path:
        return self.stage_dir(stage) / name

    @abstractmethod
    def reset(self, stage: str) -> None:
        """Remove the stage's previous outputs before it runs again"""
        pass

    @abstractmethod
    def write_manifest(
        self, stage: str, seed: int, config: Dict[str, Any], config_hash: str, inputs: Iterable[str] = ()
    ) -> StageManifest:
        """Hash every output of the stage and record the manifest"""
        pass

    @abstractmethod
    def read_manifest(self, stage: str) -> Optional[StageManifest]:
        pass

    @abstractmethod
    def manifest_hash(self, stage: str) -> str:
        pass

    @abstractmethod
    def require(self, stage: str, config_hash: Optional[str] = None) -> StageManifest:
        """
        Manifest of a completed stage whose outputs are intact.

        Raises:
            MissingArtifactError: the stage never ran
            StaleArtifactError: config hash, upstream manifest or output hash mismatch
        """
        pass
