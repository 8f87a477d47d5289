import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

import networkx as nx

from .._errors import CapExceededError, InvalidQuiverError
from ._paths import path_count_matrix
from ._quiver import Arrow, Quiver, validate

__all__ = ("Subquiver", "DEFAULT_SUBQUIVER_CAP", "full_subquiver", "connected_subquivers",
           "successor_closure",)

logger = logging.getLogger(__name__)

DEFAULT_SUBQUIVER_CAP = 2 ** 20


@dataclass(frozen=True)
class Subquiver:
    """
    A vertex subset and an arrow subset of a parent quiver, closed under endpoints.

    Equality and hashing use the two subsets only; the parent is carried along for
    ordering and lookups.
    """

    parent: Quiver = field(compare=False, repr=False)
    vertices: FrozenSet[str]
    arrows: FrozenSet[str] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "arrows", frozenset(self.arrows))
        unknown = [v for v in self.vertices if not self.parent.has_vertex(v)]
        if unknown:
            raise InvalidQuiverError(f"vertices {sorted(unknown)} are not in the parent quiver")
        for name in self.arrows:
            arrow = self.parent.arrow(name)
            if arrow.source not in self.vertices or arrow.target not in self.vertices:
                raise InvalidQuiverError(f"arrow {name!r} leaves the subquiver")

    @cached_property
    def vertex_list(self) -> Tuple[str, ...]:
        return tuple(v for v in self.parent.vertices if v in self.vertices)

    @cached_property
    def arrow_list(self) -> Tuple[Arrow, ...]:
        return tuple(a for a in self.parent.arrows if a.name in self.arrows)

    @cached_property
    def sort_key(self) -> Tuple[int, int, Tuple[int, ...], Tuple[int, ...]]:
        vertex_index = self.parent.vertex_index
        arrow_index = self.parent.arrow_index
        return (len(self.vertices), len(self.arrows),
                tuple(sorted(vertex_index[v] for v in self.vertices)),
                tuple(sorted(arrow_index[a] for a in self.arrows)))

    @cached_property
    def _quiver(self) -> Quiver:
        return Quiver(self.vertex_list, self.arrow_list)

    def as_quiver(self) -> Quiver:
        return self._quiver

    @property
    def is_full(self) -> bool:
        return (len(self.vertices) == len(self.parent.vertices)
                and len(self.arrows) == len(self.parent.arrows))

    @property
    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((a.source, a.target) for a in self.arrow_list)
        return bool(nx.is_connected(graph))

    @property
    def sources(self) -> Tuple[str, ...]:
        return self.as_quiver().sources

    @property
    def sinks(self) -> Tuple[str, ...]:
        return self.as_quiver().sinks

    @property
    def unique_source(self) -> Optional[str]:
        sources = self.sources
        return sources[0] if len(sources) == 1 else None

    @property
    def unique_sink(self) -> Optional[str]:
        sinks = self.sinks
        return sinks[0] if len(sinks) == 1 else None

    @property
    def has_parallel_paths(self) -> bool:
        counts = path_count_matrix(self.as_quiver())
        return any(n > 1 for row in counts.entries for n in row)

    @property
    def is_single_path(self) -> bool:
        quiver = self.as_quiver()
        return (self.is_connected
                and all(len(quiver.out_arrows[v]) <= 1 for v in quiver.vertices)
                and all(len(quiver.in_arrows[v]) <= 1 for v in quiver.vertices)
                and len(quiver.sources) == 1)

    def issubset(self, other: "Subquiver") -> bool:
        return self.vertices <= other.vertices and self.arrows <= other.arrows

    def __le__(self, other: "Subquiver") -> bool:
        return self.issubset(other)


def full_subquiver(quiver: Quiver) -> Subquiver:
    return Subquiver(quiver, frozenset(quiver.vertices), frozenset(a.name for a in quiver.arrows))


def _is_connected_arrow_set(arrows: Iterable[Arrow]) -> bool:
    graph = nx.MultiGraph()
    graph.add_edges_from((a.source, a.target) for a in arrows)
    return bool(nx.is_connected(graph))


def connected_subquivers(quiver: Quiver, cap: int = DEFAULT_SUBQUIVER_CAP) -> List[Subquiver]:
    """
    Enumerate every nonempty connected subquiver, arrow subsets not necessarily full.

    A connected subquiver is either a single vertex or a connected nonempty arrow set
    together with its endpoints, so the candidates are the vertices plus the nonempty
    arrow subsets. Output is sorted by vertex count, arrow count, then vertex and arrow
    indices.

    :param quiver: A valid finite quiver.
    :param cap: Largest number of candidates the enumeration may examine.
    :return: The connected subquivers, without duplicates.
    :raises CapExceededError: If the candidate count exceeds ``cap``.
    """
    validate(quiver).raise_for_errors()
    required = len(quiver.vertices) + 2 ** len(quiver.arrows) - 1
    if required > cap:
        raise CapExceededError(cap, required)

    found = [Subquiver(quiver, frozenset({v})) for v in quiver.vertices]
    for size in range(1, len(quiver.arrows) + 1):
        for arrows in combinations(quiver.arrows, size):
            if _is_connected_arrow_set(arrows):
                vertices = {a.source for a in arrows} | {a.target for a in arrows}
                found.append(Subquiver(quiver, frozenset(vertices),
                                       frozenset(a.name for a in arrows)))

    found.sort(key=lambda sub: sub.sort_key)
    logger.debug("%d connected subquivers out of %d candidates", len(found), required)
    return found


def successor_closure(sub: Union[Quiver, Subquiver], vertex: str) -> Subquiver:
    """
    Return the full subquiver of ``sub`` on the vertices reachable from ``vertex``.

    Reachability uses directed paths inside ``sub`` only.

    :param sub: A subquiver, or a quiver standing for its full subquiver.
    :param vertex: The starting vertex; must belong to ``sub``.
    :return: The successor closure of ``vertex``.
    :raises InvalidQuiverError: If ``vertex`` is not in ``sub``.
    """
    if isinstance(sub, Quiver):
        sub = full_subquiver(sub)
    if vertex not in sub.vertices:
        raise InvalidQuiverError(f"vertex {vertex!r} is not in the subquiver")

    local = sub.as_quiver()
    reached = {vertex}
    frontier = [vertex]
    while frontier:
        current = frontier.pop()
        for arrow in local.out_arrows[current]:
            if arrow.target not in reached:
                reached.add(arrow.target)
                frontier.append(arrow.target)

    arrows = frozenset(a.name for a in local.arrows if a.source in reached)
    return Subquiver(sub.parent, frozenset(reached), arrows)
