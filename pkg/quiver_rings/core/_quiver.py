from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Tuple

import networkx as nx

from .._errors import CyclicQuiverError, InvalidQuiverError

__all__ = ("Arrow", "Quiver", "ValidationReport", "validate", "ensure_acyclic", "opposite",
           "topological_order",)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """
    A finite quiver: an ordered vertex list and an ordered arrow list.

    Identifiers are opaque strings. Every deterministic order produced by this package
    derives from the input order of ``vertices`` and ``arrows``. Instances are immutable;
    derived lookups are computed on first use and cached on the instance.
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))

    @classmethod
    def from_edges(cls, vertices: Iterable[str],
                   arrows: Iterable[Tuple[str, str, str]] = ()) -> "Quiver":
        """
        Build a quiver from vertex names and ``(name, source, target)`` triples.

        :param vertices: Vertex identifiers in their canonical order.
        :param arrows: Arrow triples in their canonical order.
        :return: The quiver.
        """
        return cls(tuple(vertices), tuple(Arrow(*arrow) for arrow in arrows))

    @cached_property
    def vertex_index(self) -> Dict[str, int]:
        return {vertex: index for index, vertex in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> Dict[str, int]:
        return {arrow.name: index for index, arrow in enumerate(self.arrows)}

    @cached_property
    def _arrows_by_name(self) -> Dict[str, Arrow]:
        return {arrow.name: arrow for arrow in self.arrows}

    @cached_property
    def out_arrows(self) -> Dict[str, Tuple[Arrow, ...]]:
        outgoing: Dict[str, List[Arrow]] = {vertex: [] for vertex in self.vertices}
        for arrow in self.arrows:
            outgoing.setdefault(arrow.source, []).append(arrow)
        return {vertex: tuple(arrows) for vertex, arrows in outgoing.items()}

    @cached_property
    def in_arrows(self) -> Dict[str, Tuple[Arrow, ...]]:
        incoming: Dict[str, List[Arrow]] = {vertex: [] for vertex in self.vertices}
        for arrow in self.arrows:
            incoming.setdefault(arrow.target, []).append(arrow)
        return {vertex: tuple(arrows) for vertex, arrows in incoming.items()}

    @property
    def sources(self) -> Tuple[str, ...]:
        return tuple(v for v in self.vertices if not self.in_arrows[v])

    @property
    def sinks(self) -> Tuple[str, ...]:
        return tuple(v for v in self.vertices if not self.out_arrows[v])

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrows_by_name[name]
        except KeyError:
            raise InvalidQuiverError(f"unknown arrow {name!r}") from None

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self.vertex_index

    def require_vertex(self, vertex: str) -> None:
        if vertex not in self.vertex_index:
            raise InvalidQuiverError(f"unknown vertex {vertex!r}")

    def arrows_between(self, source: str, target: str) -> Tuple[Arrow, ...]:
        return tuple(a for a in self.out_arrows.get(source, ()) if a.target == target)

    def to_networkx(self) -> "nx.MultiDiGraph":
        """
        Export the quiver as a networkx multigraph keyed by arrow name.

        :return: A ``MultiDiGraph`` whose nodes are the vertices in input order.
        """
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            graph.add_edge(arrow.source, arrow.target, key=arrow.name)
        return graph


@dataclass(frozen=True)
class ValidationReport:
    duplicate_vertices: Tuple[str, ...] = ()
    duplicate_arrows: Tuple[str, ...] = ()
    dangling_arrows: Tuple[str, ...] = ()
    is_acyclic: bool = False
    problems: Tuple[str, ...] = field(default=(), repr=False)

    @property
    def is_valid(self) -> bool:
        return not self.problems

    def raise_for_errors(self) -> None:
        if self.problems:
            raise InvalidQuiverError("; ".join(self.problems))


def validate(quiver: Quiver) -> ValidationReport:
    """
    Check endpoint membership, identifier uniqueness and acyclicity of a quiver.

    Problems are reported, never raised; use ``raise_for_errors`` to escalate.

    :param quiver: The quiver to check.
    :return: A report listing every violation and whether the quiver is acyclic.
    """
    vertex_counts = Counter(quiver.vertices)
    arrow_counts = Counter(arrow.name for arrow in quiver.arrows)
    duplicate_vertices = tuple(v for v, n in vertex_counts.items() if n > 1)
    duplicate_arrows = tuple(a for a, n in arrow_counts.items() if n > 1)
    dangling = tuple(arrow.name for arrow in quiver.arrows
                     if arrow.source not in vertex_counts or arrow.target not in vertex_counts)

    problems = [f"duplicate vertex {v!r}" for v in duplicate_vertices]
    problems += [f"duplicate arrow {a!r}" for a in duplicate_arrows]
    problems += [f"arrow {a!r} has an endpoint outside the vertex list" for a in dangling]

    is_acyclic = False
    if not dangling:
        is_acyclic = nx.is_directed_acyclic_graph(quiver.to_networkx())

    return ValidationReport(duplicate_vertices, duplicate_arrows, dangling, is_acyclic,
                            tuple(problems))


def ensure_acyclic(quiver: Quiver) -> None:
    report = validate(quiver)
    report.raise_for_errors()
    if not report.is_acyclic:
        raise CyclicQuiverError()


@lru_cache(maxsize=None)
def topological_order(quiver: Quiver) -> Tuple[str, ...]:
    """
    Order the vertices so that every arrow points forward.

    Kahn's algorithm; among the available vertices the earliest in input order wins.

    :param quiver: An acyclic quiver.
    :return: The vertices in topological order.
    :raises CyclicQuiverError: If the quiver has a directed cycle.
    """
    ensure_acyclic(quiver)
    graph = quiver.to_networkx()
    return tuple(nx.lexicographical_topological_sort(graph, key=quiver.vertex_index.__getitem__))


def opposite(quiver: Quiver) -> Quiver:
    return Quiver(quiver.vertices,
                  tuple(Arrow(a.name, a.target, a.source) for a in quiver.arrows))
