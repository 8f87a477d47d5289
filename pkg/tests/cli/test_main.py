import json
from pathlib import Path

import yaml
from baby_steps import given, then, when
from pytest import CaptureFixture, MonkeyPatch, raises

from quiver_rings import InvariantCheckFailed
from quiver_rings.cli import SUITES, main
from quiver_rings.cli._verify import VerifyContext

from .._utils import QuiverFileFactory, quiver_file

__all__ = ("quiver_file",)  # fixtures


def test_paths_text(quiver_file: QuiverFileFactory, capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()

    with when:
        code = main(["paths", "3", "1", "--input", str(path)])

    with then:
        assert code == 0
        assert capsys.readouterr().out == "paths from 3 to 1: 2\n  3·α·γ\n  3·β·γ\n"


def test_tensor_json(quiver_file: QuiverFileFactory, capsys: CaptureFixture[str]):
    with given:
        path = quiver_file(suffix=".yaml")

    with when:
        code = main(["tensor-proj", "3", "3", "--input", str(path), "--format", "json"])

    with then:
        assert code == 0
        assert json.loads(capsys.readouterr().out) == {
            "command": "tensor-proj",
            "family": "P",
            "x": "3",
            "y": "3",
            "multiplicities": {"3": 1, "2": 2},
            "decomposition": "P(3) + 2·P(2)",
        }


def test_pie_product_yaml(quiver_file: QuiverFileFactory, capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()

    with when:
        code = main(["pie", "product", "P_Q", "I_Q", "--input", str(path), "--format", "yaml"])

    with then:
        assert code == 0
        report = yaml.safe_load(capsys.readouterr().out)
        assert report["components"] == {"E_{αγ}": 1, "E_{βγ}": 1}


def test_pie_mobius_csv(quiver_file: QuiverFileFactory, capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()

    with when:
        code = main(["pie", "mobius", "--input", str(path)])

    with then:
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 15
        assert lines[0].startswith(",E_1,E_2,E_3,")


def test_reruns_are_identical(quiver_file: QuiverFileFactory, capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()
        argv = ["pie", "idempotents", "--input", str(path), "--seed", "3"]
        main(argv)
        first = capsys.readouterr().out

    with when:
        main(argv)
        second = capsys.readouterr().out

    with then:
        assert first == second
        assert "e[E_{αβ}] = E_{αβ} - P_{αβ} - I_{αβ} + E_α + E_β" in first.splitlines()


def test_missing_input(capsys: CaptureFixture[str]):
    with when:
        code = main(["paths", "3", "1"])

    with then:
        assert code == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "paths needs --input" in captured.err


def test_cyclic_input(quiver_file: QuiverFileFactory, capsys: CaptureFixture[str]):
    with given:
        path = quiver_file({"vertices": ["v"], "arrows": [{"name": "l", "from": "v", "to": "v"}]})

    with when:
        code = main(["paths", "v", "v", "--input", str(path)])

    with then:
        assert code == 2
        assert "path set may be infinite" in capsys.readouterr().err


def test_cap_exceeded(quiver_file: QuiverFileFactory, capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()

    with when:
        code = main(["pie", "list", "--input", str(path), "--cap", "4"])

    with then:
        assert code == 3
        assert "cap exceeded" in capsys.readouterr().err


def test_bad_arguments():
    with when, raises(SystemExit) as exc:
        main(["tensor-proj", "3"])

    with then:
        assert exc.value.code == 2


def test_config_file(quiver_file: QuiverFileFactory, tmp_path: Path,
                     capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()
        config = tmp_path / "config.yaml"
        config.write_text(f"input-path: {path}\noutput_format: json\n", encoding="utf-8")

    with when:
        code = main(["paths", "3", "2", "--config", str(config)])

    with then:
        assert code == 0
        assert json.loads(capsys.readouterr().out)["paths"] == ["3·α", "3·β"]


def test_flags_override_config_file(quiver_file: QuiverFileFactory, tmp_path: Path,
                                    capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()
        config = tmp_path / "config.yaml"
        config.write_text("output_format: json\n", encoding="utf-8")

    with when:
        code = main(["paths", "3", "2", "--config", str(config), "--input", str(path),
                     "--format", "text"])

    with then:
        assert code == 0
        assert capsys.readouterr().out.startswith("paths from 3 to 2: 2\n")


def test_verify_example(quiver_file: QuiverFileFactory, capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()

    with when:
        code = main(["verify", "--input", str(path), "--suite", "example"])

    with then:
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[:2] == ["seed 0", "example: pass (22 cases)"]
        assert lines[2] == ("  note: e[P_{αβ}] = P_{αβ} - E_α - E_β + E_3,"
                            " listed as P_{αβ} - E_α - E_β - E_3")
        assert len([line for line in lines if line.startswith("  note: ")]) == 7
        assert lines[-1] == "all suites passed"


def test_failed_verification(monkeypatch: MonkeyPatch, capsys: CaptureFixture[str]):
    with given:
        def failing(ctx: VerifyContext) -> int:
            raise InvariantCheckFailed("always fails", "counterexample")
        monkeypatch.setitem(SUITES, "example", failing)

    with when:
        code = main(["verify", "--suite", "example", "--format", "json"])

    with then:
        assert code == 4
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is False
        assert report["suites"][0]["failure"] == {"invariant": "always fails",
                                                  "detail": "counterexample"}


def test_realize_then_linearize(quiver_file: QuiverFileFactory, tmp_path: Path,
                                capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()
        main(["pie", "realize", "P_{αβ}", "--input", str(path), "--format", "json"])
        realized = tmp_path / "realized.json"
        realized.write_text(capsys.readouterr().out, encoding="utf-8")

    with when:
        code = main(["linearize", "--input", str(realized), "--format", "json"])

    with then:
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["dims"] == {"1": 0, "2": 2, "3": 1}
        assert report["matrices"] == {"α": [[1], [0]], "β": [[0], [1]], "γ": []}
        assert report["basis"]["2"] == ["3·α", "3·β"]


def test_linearize_needs_a_quiver_over_q(quiver_file: QuiverFileFactory,
                                         capsys: CaptureFixture[str]):
    with given:
        path = quiver_file()

    with when:
        code = main(["linearize", "--input", str(path)])

    with then:
        assert code == 2
        assert "needs 'base' and 'total'" in capsys.readouterr().err
