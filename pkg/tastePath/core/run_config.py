import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from tastePath import constants
from tastePath.core.exceptions import ConfigError
from tastePath.models.events import WindowConfig
from tastePath.models.pathlet import LearnConfig
from tastePath.models.prediction import ForestConfig, NMFConfig
from tastePath.models.synth import PlantedSpec


class _Section(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class DatasetConfig(_Section):
    path: str = "data/events.csv"
    # synth: no file is read, the corpus is generated from the synth section
    format: str = Field(default="csv", pattern="^(csv|jsonl|lastfm|synth)$")
    # canonical column -> source column
    columns: Optional[Dict[str, str]] = None
    vocabulary: Optional[str] = None
    genre_map: Optional[str] = None


class SamplingConfig(_Section):
    n_per_pair: int = Field(default=constants.DEFAULT_N_PER_PAIR, ge=1)
    total: int = Field(default=constants.DEFAULT_TOTAL_TRAJECTORIES, ge=1)
    holdout: int = Field(default=constants.DEFAULT_HOLDOUT_TRAJECTORIES, ge=0)
    embed_per_pair: int = Field(default=constants.DEFAULT_EMBED_PER_PAIR, ge=1)
    seed: int = 0


class MiningConfig(_Section):
    l_max: int = Field(default=constants.DEFAULT_L_MAX, ge=2)
    top_m: int = Field(default=constants.DEFAULT_TOP_M, ge=1)


class AnalysisConfig(_Section):
    threshold: float = Field(default=constants.CLASSIFIER_THRESHOLD, ge=0.0, le=1.0)
    # score only cells that changed in plus-minus AUC
    changed_cells_only: bool = True
    variation_buckets: int = Field(default=10, ge=1)
    popularity_buckets: int = Field(default=5, ge=1)
    # anchor genres whose extended pathlet graphs are exported; empty means the 5 most popular
    graph_genres: List[str] = Field(default_factory=list)
    sweep_lambdas: List[float] = Field(default_factory=lambda: [0.0, 0.0005, 0.001, 0.0025, 0.005, 0.01, 0.025])
    reconstruction_sizes: List[int] = Field(default_factory=lambda: [1, 10, 100, 1000])
    # candidate pairs scored by the sampling reconstruction curve, in sorted order
    reconstruction_pairs: int = Field(default=200, ge=1)


class RunConfig(_Section):
    """One pipeline run, loaded from a single YAML file"""

    dataset: DatasetConfig = DatasetConfig()
    windows: WindowConfig = WindowConfig(t_start="2022-01-01", t_end="2023-06-01", K=17)
    sampling: SamplingConfig = SamplingConfig()
    mining: MiningConfig = MiningConfig()
    learning: LearnConfig = LearnConfig()
    forest: ForestConfig = ForestConfig()
    nmf: NMFConfig = NMFConfig()
    analysis: AnalysisConfig = AnalysisConfig()
    synth: PlantedSpec = PlantedSpec()
    output_dir: str = "runs/default"

    @property
    def synthetic(self) -> bool:
        return self.dataset.format == "synth"

    @classmethod
    def load(cls, path: Union[str, Path]) -> "RunConfig":
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"config file {path} does not exist")
        try:
            raw = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"{path} is not valid YAML: {e}") from e
        if not isinstance(raw, dict):
            raise ConfigError(f"{path} must hold a mapping of sections")
        return cls.from_dict(raw, source=str(path))

    @classmethod
    def from_dict(cls, raw: Dict[str, Any], source: str = "<dict>") -> "RunConfig":
        try:
            return cls.model_validate(raw)
        except ValidationError as e:
            raise ConfigError(f"invalid run configuration in {source}:\n{e}") from e

    def snapshot(self, *sections: str) -> Dict[str, Any]:
        """Canonical JSON-ready view of the named sections, or of everything"""
        dump = self.model_dump(mode="json", by_alias=True)
        if not sections:
            return dump
        unknown = [s for s in sections if s not in dump]
        if unknown:
            raise ConfigError(f"unknown config sections {unknown}")
        return {s: dump[s] for s in sorted(sections)}

    def section_hash(self, *sections: str) -> str:
        return hash_snapshot(self.snapshot(*sections))

    def with_output_dir(self, output_dir: Union[str, Path]) -> "RunConfig":
        return self.model_copy(update={"output_dir": str(output_dir)})


def hash_snapshot(snapshot: Dict[str, Any]) -> str:
    """SHA-256 of the canonical JSON form"""
    canonical = json.dumps(snapshot, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def load_run_config(path: Union[str, Path]) -> RunConfig:
    return RunConfig.load(path)
