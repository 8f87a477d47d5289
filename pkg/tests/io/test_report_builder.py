from baby_steps import given, then, when

from quiver_rings.core import Quiver, enumerate_paths
from quiver_rings.io import ReportBuilder
from quiver_rings.linearize import linearization
from quiver_rings.pie import PieCategory, structure_constants
from quiver_rings.projectives import tensor_projectives

from .._utils import q3, q3_pie

__all__ = ("q3", "q3_pie",)  # fixtures


def test_build_paths(q3: Quiver):
    with given:
        paths = enumerate_paths(q3, "3", "1")

    with when:
        report = ReportBuilder().build_paths("3", "1", paths)

    with then:
        assert report == {
            "command": "paths",
            "source": "3",
            "target": "1",
            "count": 2,
            "paths": ["3·α·γ", "3·β·γ"],
        }


def test_build_tensor(q3: Quiver):
    with given:
        multiplicities = tensor_projectives(q3, "3", "3")

    with when:
        report = ReportBuilder().build_tensor(q3, "P", "3", "3", multiplicities)

    with then:
        assert report == {
            "command": "tensor-proj",
            "family": "P",
            "x": "3",
            "y": "3",
            "multiplicities": {"3": 1, "2": 2},
            "decomposition": "P(3) + 2·P(2)",
        }
        assert list(report["multiplicities"]) == ["3", "2"]


def test_build_pie_object(q3_pie: PieCategory):
    with when:
        entry = ReportBuilder().build_pie_object(q3_pie.object("E_{αγ}"))

    with then:
        assert entry == {
            "name": "E_{αγ}",
            "kind": "E",
            "kinds": ["P", "I", "E"],
            "support": {"vertices": ["1", "2", "3"], "arrows": ["α", "γ"]},
            "dimension_vector": {"1": 1, "2": 1, "3": 1},
        }


def test_build_pie_list(q3_pie: PieCategory):
    with when:
        report = ReportBuilder().build_pie_list(q3_pie)

    with then:
        assert report["command"] == "pie list"
        assert report["count"] == 14
        assert report["objects"][0]["name"] == "E_1"


def test_build_matrix():
    with when:
        report = ReportBuilder().build_matrix("pie homs", ("a", "b"), ((1, 2), (0, 1)))

    with then:
        assert report == {"command": "pie homs", "objects": ["a", "b"],
                          "rows": [[1, 2], [0, 1]]}


def test_build_idempotents(q3_pie: PieCategory):
    with when:
        report = ReportBuilder().build_idempotents(q3_pie)

    with then:
        assert report["identity"] == "E_Q"
        assert len(report["idempotents"]) == 14
        entry = next(e for e in report["idempotents"] if e["object"] == "E_{αβ}")
        assert entry["expansion"] == "E_{αβ} - P_{αβ} - I_{αβ} + E_α + E_β"
        assert entry["terms"] == {"E_α": 1, "E_β": 1, "P_{αβ}": -1, "I_{αβ}": -1,
                                  "E_{αβ}": 1}
        assert entry["dimension_vector"] == {"1": 0, "2": 0, "3": 0}


def test_build_product(q3_pie: PieCategory):
    with given:
        x, y = q3_pie.object("P_Q"), q3_pie.object("I_Q")
        components = structure_constants(q3_pie, x, y)

    with when:
        report = ReportBuilder().build_product(q3_pie, x, y, components)

    with then:
        assert report == {
            "command": "pie product",
            "x": "P_Q",
            "y": "I_Q",
            "component_count": 2,
            "components": {"E_{αγ}": 1, "E_{βγ}": 1},
            "decomposition": "E_{αγ} + E_{βγ}",
        }


def test_build_verify():
    with given:
        suites = [{"name": "paths", "passed": True, "cases": 3, "failure": None,
                   "notes": []},
                  {"name": "mu", "passed": False, "cases": 0, "notes": [],
                   "failure": {"invariant": "x", "detail": "y"}}]

    with when:
        report = ReportBuilder().build_verify(7, suites)  # type: ignore[arg-type]

    with then:
        assert report["passed"] is False
        assert report["seed"] == 7
        assert [suite["name"] for suite in report["suites"]] == ["paths", "mu"]


def test_build_realization(q3_pie: PieCategory):
    with given:
        obj = q3_pie.object("P_{αβ}")

    with when:
        report = ReportBuilder().build_realization(obj)

    with then:
        assert list(report) == ["command", "object", "base", "total", "vertexLabel",
                                "arrowLabel"]
        assert report["base"]["vertices"] == ["1", "2", "3"]
        assert report["total"]["arrows"] == [{"name": "3·α", "from": "3", "to": "3·α"},
                                             {"name": "3·β", "from": "3", "to": "3·β"}]


def test_build_linearization(q3_pie: PieCategory):
    with given:
        rep = linearization(q3_pie.object("E_γ").realization)

    with when:
        report = ReportBuilder().build_linearization(rep)

    with then:
        assert report == {
            "command": "linearize",
            "dims": {"1": 1, "2": 1, "3": 0},
            "matrices": {"α": [[]], "β": [[]], "γ": [[1]]},
            "basis": {"1": ["1"], "2": ["2"], "3": []},
        }
