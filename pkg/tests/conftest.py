from pathlib import Path

import pytest
import yaml

from tastePath.test.common import toy_run_config, write_toy_events


@pytest.fixture(scope="session")
def toy_events(tmp_path_factory) -> Path:
    return write_toy_events(tmp_path_factory.mktemp("data") / "events.csv")


@pytest.fixture
def config_file(tmp_path, toy_events):
    """Writes a toy run configuration to YAML; call with section overrides"""

    def make(output_dir: Path = None, name: str = "run.yaml", **overrides) -> Path:
        raw = toy_run_config(toy_events, output_dir or tmp_path / "run", **overrides)
        path = tmp_path / name
        path.write_text(yaml.safe_dump(raw, sort_keys=True), encoding="utf-8")
        return path

    return make
