from baby_steps import given, then, when
from pytest import raises

from quiver_rings import PieConstructionError
from quiver_rings.core import Quiver, Subquiver, full_subquiver
from quiver_rings.over_q import is_wrapping, iso_over_q
from quiver_rings.pie import (
    Coincidences,
    PieKind,
    build_E,
    build_I,
    build_object,
    build_P,
    object_name,
    qualified_label,
    support_label,
)

from .._utils import chain, q3

__all__ = ("q3", "chain",)  # fixtures


def _double(q3: Quiver) -> Subquiver:
    return Subquiver(q3, frozenset({"2", "3"}), frozenset({"α", "β"}))


def test_path_space_of_q3(q3: Quiver):
    with when:
        paths = build_P(full_subquiver(q3))

    with then:
        assert paths.total.vertices == ("3", "3·α", "3·α·γ", "3·β", "3·β·γ")
        assert paths.total.arrow("3·α·γ").source == "3·α"
        assert paths.arrow_label["3·β·γ"] == "γ"
        assert paths.name == "P_Q"
        assert is_wrapping(paths)


def test_injective_of_q3(q3: Quiver):
    with when:
        dual = build_I(full_subquiver(q3))

    with then:
        assert dual.total.vertices == ("1", "2·γ", "3·α·γ", "3·β·γ")
        assert dual.total.arrow("3·α·γ").target == "2·γ"
        assert dual.arrow_label["3·α·γ"] == "α"
        assert dual.fiber_sizes == (1, 1, 2)


def test_path_space_needs_unique_source():
    with given:
        q = Quiver.from_edges(["a", "b", "c"], [("x", "a", "c"), ("y", "b", "c")])

    with when, raises(PieConstructionError) as exc:
        build_P(full_subquiver(q))

    with then:
        assert str(exc.value) == "P_T needs a unique source, T has sources a, b"


def test_injective_needs_unique_sink():
    with given:
        q = Quiver.from_edges(["a", "b", "c"], [("x", "a", "b"), ("y", "a", "c")])

    with when, raises(PieConstructionError):
        build_I(full_subquiver(q))


def test_disconnected_support(q3: Quiver):
    with given:
        sub = Subquiver(q3, frozenset({"1", "3"}))

    with when, raises(PieConstructionError):
        build_E(sub)


def test_coincidences_of_a_path(q3: Quiver):
    with given:
        sub = Subquiver(q3, frozenset({"1", "2", "3"}), frozenset({"α", "γ"}))

    with when:
        groups = Coincidences.of(sub).groups()

    with then:
        assert groups == [frozenset({PieKind.P, PieKind.I, PieKind.E})]
        assert iso_over_q(build_P(sub), build_E(sub)) is not None
        assert iso_over_q(build_I(sub), build_E(sub)) is not None


def test_coincidences_with_parallel_arrows(q3: Quiver):
    with when:
        groups = Coincidences.of(_double(q3)).groups()

    with then:
        assert groups == [frozenset({PieKind.P}), frozenset({PieKind.I}),
                          frozenset({PieKind.E})]


def test_coincidences_with_two_sources():
    with given:
        q = Quiver.from_edges(["a", "b", "c"], [("x", "a", "c"), ("y", "b", "c")])

    with when:
        coincidences = Coincidences.of(full_subquiver(q))

    with then:
        assert coincidences.defined_kinds() == (PieKind.I, PieKind.E)
        assert coincidences.groups() == [frozenset({PieKind.I, PieKind.E})]


def test_object_names(q3: Quiver, chain: Quiver):
    with given:
        vertex = Subquiver(q3, frozenset({"2"}))
        arrow = Subquiver(chain, frozenset({"a", "b"}), frozenset({"x0"}))

    with when:
        names = [object_name(PieKind.P, _double(q3)), object_name(PieKind.E, vertex),
                 object_name(PieKind.I, full_subquiver(q3)), object_name(PieKind.E, arrow)]

    with then:
        assert names == ["P_{αβ}", "E_2", "I_Q", "E_{x0}"]
        assert support_label(Subquiver(q3, frozenset({"2", "3"}), frozenset({"α"}))) == "α"


def test_labels_join_with_commas_when_names_are_long():
    with given:
        q = Quiver.from_edges(["1", "2", "3"],
                              [("a", "1", "2"), ("b", "2", "3"), ("ab", "1", "3")])
        pair = Subquiver(q, frozenset({"1", "2", "3"}), frozenset({"a", "b"}))
        single = Subquiver(q, frozenset({"1", "3"}), frozenset({"ab"}))

    with when:
        labels = support_label(pair), support_label(single)

    with then:
        assert labels == ("a,b", "ab")


def test_qualified_label(q3: Quiver):
    with given:
        q = Quiver.from_edges(["x,y", "z"], [("f|g", "x,y", "z")])

    with when:
        labels = (qualified_label(_double(q3)), qualified_label(Subquiver(q3, frozenset({"1"}))),
                  qualified_label(full_subquiver(q)))

    with then:
        assert labels == ("2,3|α,β", "1|", "x\\,y,z|f\\|g")
        assert object_name(PieKind.E, full_subquiver(q), qualified=True) == "E_{x\\,y,z|f\\|g}"


def test_build_object_uses_canonical_kind(q3: Quiver):
    with given:
        sub = Subquiver(q3, frozenset({"2", "3"}), frozenset({"β"}))

    with when:
        obj = build_object(sub, frozenset({PieKind.P, PieKind.I, PieKind.E}))

    with then:
        assert obj.kind == PieKind.E
        assert obj.name == "E_β"
        assert str(obj) == "E_β"
        assert obj.realization.fiber_sizes == (0, 1, 1)
