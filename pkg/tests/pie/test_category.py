from baby_steps import given, then, when
from hypothesis import given as for_all
from hypothesis import settings
from pytest import raises

from quiver_rings import CapExceededError, CyclicQuiverError, InvalidInputError
from quiver_rings.core import Quiver
from quiver_rings.moebius import identity_element, multiply
from quiver_rings.pie import (
    PieCategory,
    build_pie,
    format_element,
    identity_decomposition,
    idempotents,
    multiply_by_structure,
    structure_constants,
    virtual_dimension_vector,
)

from .._utils import acyclic_quivers, loop_quiver, q3, q3_pie

__all__ = ("q3", "q3_pie", "loop_quiver",)  # fixtures


def test_objects_of_q3(q3_pie: PieCategory):
    with when:
        names = {obj.name for obj in q3_pie.objects}

    with then:
        assert len(q3_pie) == 14
        assert names == {"E_1", "E_2", "E_3", "E_α", "E_β", "E_γ", "P_{αβ}", "I_{αβ}",
                         "E_{αβ}", "E_{αγ}", "E_{βγ}", "P_Q", "I_Q", "E_Q"}


def test_objects_are_grouped_by_support(q3_pie: PieCategory):
    with when:
        block = q3_pie.blocks[q3_pie.object("E_{αβ}").support]

    with then:
        assert [obj.name for obj in block] == ["P_{αβ}", "I_{αβ}", "E_{αβ}"]
        assert q3_pie.objects[-1].name == "E_Q"


def test_lookup_without_braces(q3_pie: PieCategory):
    with when:
        found = q3_pie.object("P_αβ")

    with then:
        assert found is q3_pie.object("P_{αβ}")


def test_lookup_unknown_object(q3_pie: PieCategory):
    with when, raises(InvalidInputError) as exc:
        q3_pie.object("E_δ")

    with then:
        assert str(exc.value) == "no PIE object named 'E_δ'"


def test_path_space_times_injective(q3_pie: PieCategory):
    with given:
        paths, dual = q3_pie.object("P_Q"), q3_pie.object("I_Q")

    with when:
        constants = structure_constants(q3_pie, paths, dual)

    with then:
        assert {obj.name: n for obj, n in constants.items()} == {"E_{αγ}": 1, "E_{βγ}": 1}


def test_structure_constants_are_cached(q3_pie: PieCategory):
    with given:
        paths, dual = q3_pie.object("P_Q"), q3_pie.object("I_Q")
        first = structure_constants(q3_pie, paths, dual)

    with when:
        second = structure_constants(q3_pie, dual, paths)

    with then:
        assert second == first
        assert len(q3_pie._products) == 1


def test_product_through_fiber_products(q3_pie: PieCategory):
    with given:
        paths = q3_pie.basis_element(q3_pie.object("P_Q"))
        dual = q3_pie.basis_element(q3_pie.object("I_Q"))

    with when:
        result = multiply_by_structure(q3_pie, paths, dual)

    with then:
        assert result == multiply(paths, dual)
        assert format_element(result) == "E_{αγ} + E_{βγ}"


def test_idempotent_of_parallel_arrows(q3_pie: PieCategory):
    with given:
        target = q3_pie.object("E_{αβ}")

    with when:
        unit = idempotents(q3_pie)[target]

    with then:
        assert format_element(unit, lead=target) == "E_{αβ} - P_{αβ} - I_{αβ} + E_α + E_β"


def test_idempotents_of_path_spaces(q3_pie: PieCategory):
    with given:
        units = idempotents(q3_pie)
        obj = q3_pie.object

    with when:
        expansions = {name: format_element(units[obj(name)], lead=obj(name))
                      for name in ("P_{αβ}", "I_{αβ}", "E_{αγ}")}

    with then:
        assert expansions == {
            "P_{αβ}": "P_{αβ} - E_α - E_β + E_3",
            "I_{αβ}": "I_{αβ} - E_α - E_β + E_2",
            "E_{αγ}": "E_{αγ} - E_γ - E_α + E_2",
        }


def test_identity_decomposition(q3_pie: PieCategory):
    with given:
        units = list(idempotents(q3_pie).values())

    with when:
        identity = identity_decomposition(q3_pie)

    with then:
        assert format_element(identity) == "E_Q"
        total = units[0]
        for unit in units[1:]:
            total = total + unit
        assert total == identity


def test_identity_of_disconnected_base():
    with given:
        q = Quiver.from_edges(["a", "b", "c"], [("x", "a", "b")])
        category = build_pie(q)

    with when:
        identity = identity_decomposition(category)

    with then:
        assert format_element(identity) == "E_x + E_c"
        assert identity == identity_element(category.data)


def test_virtual_dimension_vectors(q3_pie: PieCategory):
    with given:
        units = idempotents(q3_pie)

    with when:
        vectors = {obj.name: virtual_dimension_vector(q3_pie, unit).entries
                   for obj, unit in units.items()}

    with then:
        assert vectors["P_Q"] == (0, 0, 0)
        assert vectors["E_3"] == (0, 0, 1)
        assert all(entry in (0, 1) for entries in vectors.values() for entry in entries)


def test_cap_is_enforced(q3: Quiver):
    with when, raises(CapExceededError) as exc:
        build_pie(q3, cap=5)

    with then:
        assert exc.value.required == 10


def test_cyclic_quiver(loop_quiver: Quiver):
    with when, raises(CyclicQuiverError):
        build_pie(loop_quiver)


@for_all(acyclic_quivers(max_vertices=4, max_arrows=4))
@settings(max_examples=15, deadline=None)
def test_idempotents_are_orthogonal(q: Quiver):
    with given:
        category = build_pie(q)
        units = idempotents(category)

    with when:
        squares = [multiply_by_structure(category, e, e) == e for e in units.values()]
        dimensions = [virtual_dimension_vector(category, e).entries for e in units.values()]

    with then:
        assert all(squares)
        assert all(entry in (0, 1) for entries in dimensions for entry in entries)


@for_all(acyclic_quivers(max_vertices=3, max_arrows=3))
@settings(max_examples=10, deadline=None)
def test_distinct_idempotents_multiply_to_zero(q: Quiver):
    with given:
        category = build_pie(q)
        units = idempotents(category)
        zero = category.element({})

    with when:
        products = [multiply_by_structure(category, units[x], units[y])
                    for x in category.objects for y in category.objects if x != y]

    with then:
        assert all(product == zero for product in products)


def test_names_stay_distinct_with_long_arrow_names():
    with given:
        q = Quiver.from_edges(["1", "2", "3"],
                              [("a", "1", "2"), ("b", "2", "3"), ("ab", "1", "3")])

    with when:
        category = build_pie(q)
        names = [obj.name for obj in category.objects]

    with then:
        assert len(set(names)) == len(names) == 12
        assert category.object("E_{a,b}").support.arrows == {"a", "b"}
        assert category.object("E_ab").support.arrows == {"ab"}


def test_colliding_labels_fall_back_to_qualified_names():
    with given:
        q = Quiver.from_edges(["Q", "x"], [("f", "Q", "x")])

    with when:
        category = build_pie(q)

    with then:
        assert [obj.name for obj in category.objects] == ["E_{Q|}", "E_{x|}", "E_{Q,x|f}"]
        assert category.object("E_{Q,x|f}").support.is_full
