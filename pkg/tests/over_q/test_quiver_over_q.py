from baby_steps import given, then, when
from pytest import raises

from quiver_rings import BaseMismatchError, InvalidQuiverError
from quiver_rings.core import Quiver, Subquiver, full_subquiver
from quiver_rings.over_q import (
    QuiverOverQ,
    connected_components,
    disjoint_union,
    inclusion,
    is_wrapping,
    require_same_base,
    restrict,
    support,
)
from quiver_rings.pie import build_P

from .._utils import chain, q3

__all__ = ("q3", "chain",)  # fixtures


def make_double_alpha(q3: Quiver) -> QuiverOverQ:
    total = Quiver.from_edges(["s", "t"], [("a1", "s", "t"), ("a2", "s", "t")])
    return QuiverOverQ(total, q3, {"s": "3", "t": "2"}, {"a1": "α", "a2": "α"})


def test_labels_must_commute_with_endpoints(q3: Quiver):
    with given:
        total = Quiver.from_edges(["s", "t"], [("a", "s", "t")])

    with when, raises(InvalidQuiverError) as exc:
        QuiverOverQ(total, q3, {"s": "2", "t": "1"}, {"a": "α"})

    with then:
        assert "does not respect start/terminal maps" in str(exc.value)


def test_every_vertex_needs_a_label(q3: Quiver):
    with when, raises(InvalidQuiverError) as exc:
        QuiverOverQ(Quiver(("s",)), q3, {}, {})

    with then:
        assert "has no valid label" in str(exc.value)


def test_fibers_keep_input_order(q3: Quiver):
    with given:
        x = build_P(full_subquiver(q3))

    with when:
        fibers = x.vertex_fibers

    with then:
        assert fibers == {"1": ("3·α·γ", "3·β·γ"), "2": ("3·α", "3·β"), "3": ("3",)}
        assert x.fiber_sizes == (2, 2, 1)
        assert x.arrow_fiber_sizes == (1, 1, 2)


def test_inclusion_support(q3: Quiver):
    with given:
        sub = Subquiver(q3, frozenset({"2", "3"}), frozenset({"β"}))

    with when:
        result = support(inclusion(sub))

    with then:
        assert result == sub


def test_wrapping(q3: Quiver):
    with given:
        included = inclusion(full_subquiver(q3))
        doubled = make_double_alpha(q3)

    with when:
        result = (is_wrapping(included), is_wrapping(doubled))

    with then:
        assert result == (True, False)


def test_restrict_to_subquiver(q3: Quiver):
    with given:
        x = build_P(full_subquiver(q3))
        sub = Subquiver(q3, frozenset({"2", "3"}), frozenset({"α"}))

    with when:
        restricted = restrict(x, sub)

    with then:
        assert restricted.total.vertices == ("3", "3·α", "3·β")
        assert [a.name for a in restricted.total.arrows] == ["3·α"]


def test_connected_components_order(q3: Quiver):
    with given:
        x = build_P(full_subquiver(q3))
        sub = Subquiver(q3, frozenset({"1", "2"}), frozenset({"γ"}))

    with when:
        parts = connected_components(restrict(x, sub))

    with then:
        assert [p.total.vertices for p in parts] == [("3·α", "3·α·γ"), ("3·β", "3·β·γ")]


def test_disjoint_union(q3: Quiver, chain: Quiver):
    with given:
        part = inclusion(full_subquiver(q3))

    with when:
        union = disjoint_union([part, part])

    with then:
        assert union.total.vertices == ("0:1", "0:2", "0:3", "1:1", "1:2", "1:3")
        assert len(connected_components(union)) == 2


def test_require_same_base(q3: Quiver, chain: Quiver):
    with when, raises(BaseMismatchError) as exc:
        require_same_base(inclusion(full_subquiver(q3)), inclusion(full_subquiver(chain)))

    with then:
        assert "same base" in str(exc.value)
