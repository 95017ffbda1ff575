from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field


class StageManifest(BaseModel):
    """
    Everything needed to replay one stage: the config snapshot and its hash, the seed,
    the manifest hashes of the upstream stages read, and the SHA-256 of every output.
    """

    model_config = ConfigDict(frozen=True)

    stage: str
    artifact_version: int
    seed: int
    config: Dict[str, Any] = Field(default_factory=dict)
    config_hash: str
    inputs: Dict[str, str] = Field(default_factory=dict)
    outputs: Dict[str, str] = Field(default_factory=dict)
