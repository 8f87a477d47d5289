from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Tuple

import networkx as nx

from ._quiver import Arrow, Quiver, ensure_acyclic, topological_order

__all__ = ("Path", "PathCountMatrix", "enumerate_paths", "iter_paths_from", "iter_paths_to",
           "path_count_matrix",)


@dataclass(frozen=True)
class Path:
    """
    A path in a quiver: an anchor vertex followed by composable arrows.

    The trivial path at ``v`` has no arrows and ``start == end == v``.
    """

    start: str
    arrows: Tuple[str, ...]
    end: str

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls(vertex, (), vertex)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def extended(self, arrow: Arrow) -> "Path":
        assert arrow.source == self.end
        return Path(self.start, self.arrows + (arrow.name,), arrow.target)

    def prepended(self, arrow: Arrow) -> "Path":
        assert arrow.target == self.start
        return Path(arrow.source, (arrow.name,) + self.arrows, self.end)

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        return self.start + "".join(f"·{arrow}" for arrow in self.arrows)


@dataclass(frozen=True)
class PathCountMatrix:
    """
    Path counts ``n_xy`` of an acyclic quiver, trivial paths included.

    Rows and columns follow the quiver's vertex order.
    """

    vertices: Tuple[str, ...]
    entries: Tuple[Tuple[int, ...], ...]

    @cached_property
    def index(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def __getitem__(self, key: Tuple[str, str]) -> int:
        x, y = key
        return self.entries[self.index[x]][self.index[y]]

    def row(self, vertex: str) -> Dict[str, int]:
        values = self.entries[self.index[vertex]]
        return dict(zip(self.vertices, values))

    def column(self, vertex: str) -> Dict[str, int]:
        position = self.index[vertex]
        return {v: row[position] for v, row in zip(self.vertices, self.entries)}

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


def iter_paths_from(quiver: Quiver, start: str) -> Iterator[Path]:
    """
    Yield every path starting at ``start`` in lexicographic order of arrow indices.

    The trivial path comes first; a path is always yielded before its extensions.

    :param quiver: An acyclic quiver.
    :param start: The common start vertex.
    """
    ensure_acyclic(quiver)
    quiver.require_vertex(start)
    stack = [Path.trivial(start)]
    while stack:
        path = stack.pop()
        yield path
        for arrow in reversed(quiver.out_arrows[path.end]):
            stack.append(path.extended(arrow))


def iter_paths_to(quiver: Quiver, end: str) -> Iterator[Path]:
    """
    Yield every path ending at ``end``, built by prepending arrows in input order.

    :param quiver: An acyclic quiver.
    :param end: The common end vertex.
    """
    ensure_acyclic(quiver)
    quiver.require_vertex(end)
    stack = [Path.trivial(end)]
    while stack:
        path = stack.pop()
        yield path
        for arrow in reversed(quiver.in_arrows[path.start]):
            stack.append(path.prepended(arrow))


def enumerate_paths(quiver: Quiver, x: str, y: str) -> List[Path]:
    """
    List every path from ``x`` to ``y`` exactly once.

    The order is lexicographic in the sequence of arrow indices; the trivial path is
    included when ``x == y``.

    :param quiver: An acyclic quiver.
    :param x: Start vertex.
    :param y: End vertex.
    :return: The paths from ``x`` to ``y``.
    :raises CyclicQuiverError: If the quiver has a directed cycle.
    """
    ensure_acyclic(quiver)
    quiver.require_vertex(x)
    quiver.require_vertex(y)

    reaches_y = nx.ancestors(quiver.to_networkx(), y) | {y}
    if x not in reaches_y:
        return []

    paths = []
    stack = [Path.trivial(x)]
    while stack:
        path = stack.pop()
        if path.end == y:
            # acyclic: nothing leaving y comes back
            paths.append(path)
            continue
        for arrow in reversed(quiver.out_arrows[path.end]):
            if arrow.target in reaches_y:
                stack.append(path.extended(arrow))
    return paths


@lru_cache(maxsize=None)
def path_count_matrix(quiver: Quiver) -> PathCountMatrix:
    """
    Count paths between all vertex pairs by dynamic programming over a topological order.

    Uses the recurrence ``n_xz = sum(n_x,s(a) for arrows a ending at z)`` for ``z != x``.

    :param quiver: An acyclic quiver.
    :return: The matrix of path counts.
    :raises CyclicQuiverError: If the quiver has a directed cycle.
    """
    order = topological_order(quiver)
    rows = []
    for x in quiver.vertices:
        counts = {v: 0 for v in quiver.vertices}
        counts[x] = 1
        for z in order[order.index(x) + 1:]:
            counts[z] = sum(counts[arrow.source] for arrow in quiver.in_arrows[z])
        rows.append(tuple(counts[v] for v in quiver.vertices))
    return PathCountMatrix(quiver.vertices, tuple(rows))
