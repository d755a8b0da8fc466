import os

import pytest
import yaml

from config import ConfigError, ConfigManager, ConfigParser, ConfigValidator
from config.defaults import DEFAULT_EXPERIMENTS


def _write(tmp_path, data):
    path = tmp_path / "dlogkit.yaml"
    path.write_text(data if isinstance(data, str) else yaml.safe_dump(data))
    return str(path)


def _errors(tmp_path, data):
    with pytest.raises(ConfigError) as info:
        ConfigManager(_write(tmp_path, data))
    return " ".join(info.value.details)


def test_missing_file_falls_back_to_defaults(tmp_path, caplog):
    manager = ConfigManager(str(tmp_path / "absent.yaml"))
    assert not manager.from_file
    assert "not found" in caplog.text
    assert manager.get_solver_config()["default_algorithm"] == "dic"
    assert manager.get_bench_config()["seed"] == 20240601
    assert manager.experiment_names() == sorted(DEFAULT_EXPERIMENTS)


def test_repository_config_loads(config_path):
    manager = ConfigManager(config_path)
    assert manager.from_file
    solver = manager.get_solver_config()
    assert solver["bound_formula"] == "sqrt-half"
    assert solver["bound_multiplier"] == "0.5"
    assert "table3" in manager.experiment_names()
    large = manager.get_experiment("large-bits")
    assert large["formulas"] == {"ic": "half-sqrt", "dic": "sqrt-half"}
    assert manager.get_experiment("nope") is None


def test_partial_file_gets_defaults(tmp_path):
    manager = ConfigManager(_write(tmp_path, {"solver": {"max_rounds": 9}}))
    solver = manager.get_solver_config()
    assert solver["max_rounds"] == 9
    assert solver["residue_cap"] == 16
    assert manager.get_logging_config()["level"] == "INFO"


def test_empty_file_is_all_defaults(tmp_path):
    assert ConfigManager(_write(tmp_path, "")).get_bench_config()["trials"] == 20


def test_invalid_yaml(tmp_path):
    with pytest.raises(ConfigError) as info:
        ConfigManager(_write(tmp_path, "solver: [unclosed\n"))
    assert "Invalid YAML" in str(info.value)


def test_top_level_must_be_a_mapping(tmp_path):
    with pytest.raises(ConfigError):
        ConfigManager(_write(tmp_path, "- a\n- b\n"))


def test_unknown_section_and_key(tmp_path):
    assert "Unknown section 'daemon'" in _errors(tmp_path, {"daemon": {}})
    assert "solver.speed is not a known option" in _errors(tmp_path, {"solver": {"speed": 3}})


@pytest.mark.parametrize("solver, fragment", [
    ({"max_rounds": 0}, "solver.max_rounds must be >= 1"),
    ({"executor": "gpu"}, "solver.executor must be one of"),
    ({"default_algorithm": "kangaroo"}, "solver.default_algorithm must be one of"),
    ({"bound_multiplier": "0"}, "bound_multiplier must be a positive rational"),
    ({"bound_multiplier": "x/2"}, "bound_multiplier must be a positive rational"),
    ({"max_candidates": "many"}, "solver.max_candidates must be of type int"),
])
def test_solver_validation(tmp_path, solver, fragment):
    assert fragment in _errors(tmp_path, {"solver": solver})


def test_bench_formulas_validation(tmp_path):
    details = _errors(tmp_path, {"bench": {"formulas": {"ic": "cube-root", "nfs": "sqrt-half"}}})
    assert "bench.formulas.ic must be one of" in details
    assert "unknown algorithm 'nfs'" in details


def test_experiment_validation(tmp_path):
    experiment = {"bits": [10, 20], "algorithms": ["dic", "kangaroo"], "multipliers": ["0.5", "-1"]}
    details = _errors(tmp_path, {"experiments": {"bad": experiment}})
    assert "experiments.bad.bits must be >= 12" in details
    assert "experiments.bad.algorithms must be one of" in details
    assert "'-1' is not a positive rational" in details


def test_experiment_required_fields(tmp_path):
    details = _errors(tmp_path, {"experiments": {"bare": {"description": "x"}}})
    assert "Missing required field 'bits' in experiments.bare" in details


def test_experiment_defaults_applied(tmp_path):
    manager = ConfigManager(_write(tmp_path, {"experiments": {"mine": {"bits": [16], "algorithms": ["bsgs"]}}}))
    assert manager.experiment_names() == ["mine"]
    mine = manager.get_experiment("mine")
    assert mine["multipliers"] == ["0.5"]
    assert mine["x_axis"] == "bits"
    assert mine["logy"] is False


def test_env_var_expansion(tmp_path, monkeypatch):
    monkeypatch.setenv("DLOGKIT_LOGDIR", str(tmp_path))
    manager = ConfigManager(_write(tmp_path, {"logging": {"file": "${DLOGKIT_LOGDIR}/run.log"}}))
    assert manager.get_logging_config()["file"] == os.path.join(str(tmp_path), "run.log")


def test_relative_log_file_resolves_next_to_config(tmp_path):
    manager = ConfigManager(_write(tmp_path, {"logging": {"file": "logs/run.log"}}))
    assert manager.get_logging_config()["file"] == os.path.join(str(tmp_path), "logs", "run.log")


def test_parser_reports_missing_file(tmp_path):
    ok, result = ConfigParser(str(tmp_path / "absent.yaml")).parse_file()
    assert not ok
    assert "not found" in result["error"]


def test_validator_accepts_defaults():
    config = ConfigParser("unused").defaults_only()
    assert ConfigValidator().validate_config(config) == (True, [])


def test_accessors_return_copies(config_path):
    manager = ConfigManager(config_path)
    experiments = manager.get_all_experiments()
    assert sorted(experiments) == manager.experiment_names()
    experiments["table3"]["bits"].append(99)
    assert 99 not in manager.get_experiment("table3")["bits"]

    raw = manager.get_raw_config()
    assert set(raw) == {"solver", "bench", "logging", "experiments"}
    raw["solver"]["max_rounds"] = 1
    assert manager.get_solver_config()["max_rounds"] == 50


def test_env_vars_are_expanded_before_validation(tmp_path, monkeypatch):
    monkeypatch.setenv("DLOGKIT_MULT", "abc")
    details = _errors(tmp_path, {"solver": {"bound_multiplier": "${DLOGKIT_MULT}"}})
    assert "bound_multiplier must be a positive rational" in details

    monkeypatch.setenv("DLOGKIT_MULT", "1/4")
    manager = ConfigManager(_write(tmp_path, {"solver": {"bound_multiplier": "${DLOGKIT_MULT}"}}))
    assert manager.get_solver_config()["bound_multiplier"] == "1/4"
