import shutil
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

from pydantic import ValidationError

from tastePath import constants
from tastePath.core.config import settings
from tastePath.logger import get_logger
from tastePath.models.manifest import StageManifest
from tastePath.stores.artifacts.interface import IArtifactStore
from tastePath.stores.base import PathLike, file_sha256, read_json, write_json
from tastePath.stores.exceptions import ArtifactError, MissingArtifactError, StaleArtifactError

logger = get_logger("tastePath.stores")


class FileArtifactStore(IArtifactStore):
    def __init__(self, root: PathLike, artifact_version: int = settings.ARTIFACT_VERSION):
        self.root = Path(root)
        self.artifact_version = artifact_version

    def stage_dir(self, stage: str) -> Path:
        path = self.root / stage
        path.mkdir(parents=True, exist_ok=True)
        return path

    def _manifest_path(self, stage: str) -> Path:
        return self.root / stage / constants.MANIFEST_FILE

    def reset(self, stage: str) -> None:
        path = self.root / stage
        if path.exists():
            shutil.rmtree(path)
        path.mkdir(parents=True)

    def write_manifest(
        self, stage: str, seed: int, config: Dict[str, Any], config_hash: str, inputs: Iterable[str] = ()
    ) -> StageManifest:
        directory = self.stage_dir(stage)
        outputs = {
            p.relative_to(directory).as_posix(): file_sha256(p)
            for p in sorted(directory.rglob("*"))
            if p.is_file() and p.name != constants.MANIFEST_FILE and not p.name.startswith(".")
        }
        manifest = StageManifest(
            stage=stage,
            artifact_version=self.artifact_version,
            seed=seed,
            config=config,
            config_hash=config_hash,
            inputs={upstream: self.manifest_hash(upstream) for upstream in sorted(set(inputs))},
            outputs=outputs,
        )
        write_json(self._manifest_path(stage), manifest.model_dump(mode="json"))
        logger.info(f"{stage}: wrote {len(outputs)} artifacts to {directory}")
        return manifest

    def read_manifest(self, stage: str) -> Optional[StageManifest]:
        path = self._manifest_path(stage)
        if not path.exists():
            return None
        try:
            return StageManifest.model_validate(read_json(path))
        except ValidationError as e:
            raise ArtifactError(f"malformed manifest {path}: {e}") from e

    def manifest_hash(self, stage: str) -> str:
        path = self._manifest_path(stage)
        if not path.exists():
            raise MissingArtifactError(stage)
        return file_sha256(path)

    def require(self, stage: str, config_hash: Optional[str] = None) -> StageManifest:
        manifest = self.read_manifest(stage)
        if manifest is None:
            raise MissingArtifactError(stage)
        if manifest.artifact_version != self.artifact_version:
            raise StaleArtifactError(
                stage, f"artifact version {manifest.artifact_version}, expected {self.artifact_version}"
            )
        if config_hash is not None and manifest.config_hash != config_hash:
            raise StaleArtifactError(stage, "configuration changed since the stage ran")
        for upstream, recorded in manifest.inputs.items():
            if self.manifest_hash(upstream) != recorded:
                raise StaleArtifactError(stage, f"upstream stage '{upstream}' was re-run")
        directory = self.root / stage
        for name, digest in manifest.outputs.items():
            path = directory / name
            if not path.exists() or file_sha256(path) != digest:
                raise StaleArtifactError(stage, f"output {name} is missing or modified")
        return manifest
