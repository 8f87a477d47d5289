from pathlib import Path

from baby_steps import given, then, when
from pytest import raises

from quiver_rings import InvalidInputError
from quiver_rings.cli import RunConfig, load_config_file
from quiver_rings.core import DEFAULT_SUBQUIVER_CAP


def test_defaults():
    with when:
        config = RunConfig()

    with then:
        assert config.cap == DEFAULT_SUBQUIVER_CAP
        assert config.seed == 0
        assert config.output_format == "text"
        assert (config.cartan_samples, config.wrapping_pairs, config.pie_samples) == (100, 50, 20)
        assert config.suites == ()


def test_merged_ignores_none():
    with given:
        config = RunConfig(seed=5)

    with when:
        merged = config.merged({"seed": None, "cap": 64, "suites": ["mu", "ring"]})

    with then:
        assert merged.seed == 5
        assert merged.cap == 64
        assert merged.suites == ("mu", "ring")
        assert config.cap == DEFAULT_SUBQUIVER_CAP


def test_merged_rejects_unknown_keys():
    with when, raises(InvalidInputError) as exc:
        RunConfig().merged({"colour": "red", "seed": 1})

    with then:
        assert str(exc.value) == "unknown config keys: colour"


def test_unknown_output_format():
    with when, raises(InvalidInputError) as exc:
        RunConfig(output_format="xml")

    with then:
        assert str(exc.value) == "unknown output format 'xml', expected one of text, json, yaml"


def test_cap_must_be_positive():
    with when, raises(InvalidInputError):
        RunConfig().merged({"cap": 0})


def test_load_config_file(tmp_path: Path):
    with given:
        path = tmp_path / "config.yaml"
        path.write_text("seed: 9\npie-samples: 2\noutput_format: yaml\n", encoding="utf-8")

    with when:
        overrides = load_config_file(path)

    with then:
        assert overrides == {"seed": 9, "pie_samples": 2, "output_format": "yaml"}
        assert RunConfig().merged(overrides).pie_samples == 2


def test_load_empty_config_file(tmp_path: Path):
    with given:
        path = tmp_path / "config.yaml"
        path.write_text("", encoding="utf-8")

    with when:
        overrides = load_config_file(path)

    with then:
        assert overrides == {}


def test_config_file_must_be_a_mapping(tmp_path: Path):
    with given:
        path = tmp_path / "config.yaml"
        path.write_text("- seed\n", encoding="utf-8")

    with when, raises(InvalidInputError) as exc:
        load_config_file(path)

    with then:
        assert str(exc.value).endswith("must contain a mapping")


def test_missing_config_file(tmp_path: Path):
    with when, raises(InvalidInputError):
        load_config_file(tmp_path / "absent.yaml")
