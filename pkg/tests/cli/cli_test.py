import json

import pytest
from typer.testing import CliRunner

from tastePath import constants
from tastePath.cli import app, main

runner = CliRunner()

_PIPELINE = ["ingest", "trajectories", "mine", "learn", "embed", "predict", "evaluate"]


def _invoke(config, *args):
    return runner.invoke(app, ["--config", str(config), *args])


def _run_pipeline(config):
    for stage in _PIPELINE:
        result = _invoke(config, stage)
        assert result.exit_code == 0, f"{stage}: {result.output}"


@pytest.mark.integration
@pytest.mark.slow
class TestPipelineCommands:
    def test_identical_runs_are_byte_identical(self, tmp_path, config_file):
        first = config_file(output_dir=tmp_path / "a", name="a.yaml")
        second = config_file(output_dir=tmp_path / "b", name="b.yaml")
        _run_pipeline(first)
        _run_pipeline(second)

        for stage, name in (
            ("evaluate", constants.METRICS_FILE),
            ("learn", constants.DICTIONARY_FILE),
            ("predict", "plug_previous.csv"),
        ):
            a = (tmp_path / "a" / stage / name).read_bytes()
            b = (tmp_path / "b" / stage / name).read_bytes()
            assert a == b, f"{stage}/{name} differs between runs"
        manifest_a = (tmp_path / "a" / "evaluate" / constants.MANIFEST_FILE).read_bytes()
        manifest_b = (tmp_path / "b" / "evaluate" / constants.MANIFEST_FILE).read_bytes()
        assert manifest_a == manifest_b

    def test_oracle_evaluation(self, tmp_path, config_file):
        config = config_file()
        _run_pipeline(config)
        result = _invoke(config, "evaluate", "--oracle")
        assert result.exit_code == 0, result.output

        payload = json.loads((tmp_path / "run" / "evaluate_oracle" / constants.METRICS_FILE).read_text())
        assert payload["oracle"] is True
        for row in payload["models"]:
            assert row["atv"] == pytest.approx(0.0, abs=1e-12)
            assert row["shifted"] is False

    def test_evaluate_prints_table(self, tmp_path, config_file):
        config = config_file()
        _run_pipeline(config)
        result = _invoke(config, "evaluate")
        assert "plug_previous" in result.output
        assert "one-window shift" in result.output

    def test_output_dir_override(self, tmp_path, config_file):
        config = config_file()
        result = _invoke(config, "--output-dir", str(tmp_path / "elsewhere"), "ingest")
        assert result.exit_code == 0, result.output
        assert (tmp_path / "elsewhere" / "ingest" / constants.MANIFEST_FILE).exists()
        assert not (tmp_path / "run").exists()


@pytest.mark.integration
class TestExitCodes:
    def test_missing_upstream_is_data_error(self, config_file):
        result = _invoke(config_file(), "mine")
        assert result.exit_code == 2
        assert "trajectories" in result.output

    def test_invalid_config_is_usage_error(self, config_file):
        result = _invoke(config_file(mining={"l_max": 1}), "ingest")
        assert result.exit_code == 1

    def test_missing_config_file(self, tmp_path):
        result = runner.invoke(app, ["--config", str(tmp_path / "none.yaml"), "ingest"])
        assert result.exit_code == 1

    def test_missing_events_is_data_error(self, tmp_path, config_file):
        config = config_file(dataset={"path": str(tmp_path / "absent.csv"), "format": "csv"})
        assert _invoke(config, "ingest").exit_code == 2

    def test_undecodable_events_are_data_error(self, tmp_path, config_file):
        events = tmp_path / "broken.csv"
        events.write_bytes(b"user,ts,genre,track\nu1,5,\xffrock,t1\n")
        config = config_file(dataset={"path": str(events), "format": "csv"})
        assert main(["--config", str(config), "ingest"]) == 2

    def test_unknown_command_maps_to_one(self, config_file):
        assert main(["--config", str(config_file()), "no-such-stage"]) == 1

    def test_bad_option_value_maps_to_one(self, config_file):
        assert main(["--config", str(config_file()), "--threads", "0", "ingest"]) == 1

    def test_main_returns_stage_exit_code(self, config_file):
        assert main(["--config", str(config_file()), "learn"]) == 2

    def test_synth_command(self, tmp_path, config_file):
        result = _invoke(config_file(dataset={"format": "synth"}), "synth")
        assert result.exit_code == 0, result.output
        assert "recovery score" in result.output
        for stage in ("trajectories", "mine", "learn", "synth"):
            assert (tmp_path / "run" / stage / constants.MANIFEST_FILE).exists()
        assert (tmp_path / "run" / "synth" / constants.RECOVERY_FILE).exists()

    def test_synth_on_an_event_dataset_is_a_usage_error(self, config_file):
        assert main(["--config", str(config_file()), "synth"]) == 1
