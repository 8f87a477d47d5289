from baby_steps import given, then, when
from hypothesis import given as for_all
from hypothesis import settings
from pytest import raises

from quiver_rings import CyclicQuiverError
from quiver_rings.core import Path, Quiver, enumerate_paths, iter_paths_from, path_count_matrix

from .._utils import acyclic_quivers, chain, loop_quiver, q3, single_vertex

__all__ = ("q3", "chain", "single_vertex", "loop_quiver",)  # fixtures


def test_enumerate_paths_between_source_and_sink(q3: Quiver):
    with when:
        paths = enumerate_paths(q3, "3", "1")

    with then:
        assert [str(p) for p in paths] == ["3·α·γ", "3·β·γ"]


def test_enumerate_paths_trivial(q3: Quiver):
    with when:
        paths = enumerate_paths(q3, "2", "2")

    with then:
        assert paths == [Path.trivial("2")]
        assert str(paths[0]) == "2"


def test_enumerate_paths_against_arrows(q3: Quiver):
    with when:
        paths = enumerate_paths(q3, "1", "3")

    with then:
        assert paths == []


def test_enumerate_paths_cyclic(loop_quiver: Quiver):
    with when, raises(CyclicQuiverError) as exc:
        enumerate_paths(loop_quiver, "v", "v")

    with then:
        assert str(exc.value) == "path set may be infinite"


def test_path_count_matrix_q3(q3: Quiver):
    with when:
        counts = path_count_matrix(q3)

    with then:
        assert counts.as_lists() == [
            [1, 0, 0],
            [1, 1, 0],
            [2, 2, 1],
        ]


def test_path_count_lookup_reuses_its_index(q3: Quiver):
    with given:
        counts = path_count_matrix(q3)

    with when:
        entries = counts["3", "1"], counts.row("3"), counts.column("1")

    with then:
        assert entries == (2, {"1": 2, "2": 2, "3": 1}, {"1": 1, "2": 1, "3": 2})
        assert counts.index is counts.index
        assert counts.index == {"1": 0, "2": 1, "3": 2}


def test_path_count_matrix_single_vertex(single_vertex: Quiver):
    with when:
        counts = path_count_matrix(single_vertex)

    with then:
        assert counts.as_lists() == [[1]]


def test_path_count_matrix_chain(chain: Quiver):
    with when:
        counts = path_count_matrix(chain)

    with then:
        assert counts.as_lists() == [
            [1, 1, 1],
            [0, 1, 1],
            [0, 0, 1],
        ]


def test_iter_paths_from_source(q3: Quiver):
    with when:
        paths = [str(p) for p in iter_paths_from(q3, "3")]

    with then:
        assert sorted(paths) == ["3", "3·α", "3·α·γ", "3·β", "3·β·γ"]


@for_all(acyclic_quivers())
@settings(max_examples=50, deadline=None)
def test_path_counts_match_enumeration(quiver: Quiver):
    with given:
        counts = path_count_matrix(quiver)

    with when:
        listed = {(x, y): len(enumerate_paths(quiver, x, y))
                  for x in quiver.vertices for y in quiver.vertices}

    with then:
        assert all(listed[x, y] == counts[x, y] for x, y in listed)
        assert all(counts[v, v] == 1 for v in quiver.vertices)


@for_all(acyclic_quivers())
@settings(max_examples=50, deadline=None)
def test_path_count_recurrence(quiver: Quiver):
    with given:
        counts = path_count_matrix(quiver)

    with when:
        violations = [(x, z) for x in quiver.vertices for z in quiver.vertices if x != z
                      and counts[x, z] != sum(counts[x, a.source] for a in quiver.in_arrows[z])]

    with then:
        assert violations == []
