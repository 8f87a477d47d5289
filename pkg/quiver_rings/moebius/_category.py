import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import (
    Callable,
    Dict,
    Generic,
    Hashable,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
)

import networkx as nx

from .._errors import CategoryNotAcyclicError, InternalInvariantError, InvalidInputError
from .._linalg import exact_product, is_identity, unitriangular_inverse

__all__ = ("AcyclicCategoryData", "build_category", "poset_category", "moebius_value",
           "moebius_recursive",)

logger = logging.getLogger(__name__)

ObjectT = TypeVar("ObjectT", bound=Hashable)
IntRows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class AcyclicCategoryData(Generic[ObjectT]):
    """
    A finite acyclic category known through its Hom counts.

    ``hom_counts[i][j]`` is the number of morphisms from ``objects[i]`` to ``objects[j]``
    and ``moebius`` is its exact inverse. ``order`` lists object indices so that the Hom
    matrix is upper unitriangular; it certifies acyclicity.
    """

    objects: Tuple[ObjectT, ...]
    hom_counts: IntRows
    moebius: IntRows
    order: Tuple[int, ...]
    names: Tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def from_hom_matrix(cls, objects: Sequence[ObjectT], matrix: Sequence[Sequence[int]],
                        names: Optional[Sequence[str]] = None) -> "AcyclicCategoryData[ObjectT]":
        """
        Certify that ``matrix`` is the Hom matrix of an acyclic category and invert it.

        :param objects: Object handles, in row order.
        :param matrix: Square nonnegative Hom counts.
        :param names: Display names; ``str(object)`` when omitted.
        :return: The category data.
        :raises CategoryNotAcyclicError: If an object has a nonidentity endomorphism or
            nonzero Hom counts form a cycle among distinct objects.
        """
        objects = tuple(objects)
        size = len(objects)
        rows = tuple(tuple(int(entry) for entry in row) for row in matrix)
        if len(rows) != size or any(len(row) != size for row in rows):
            raise InvalidInputError("Hom matrix must be square with one row per object")
        labels = tuple(names) if names is not None else tuple(str(o) for o in objects)
        if any(entry < 0 for row in rows for entry in row):
            raise InvalidInputError("Hom counts must be nonnegative")

        for i in range(size):
            if rows[i][i] != 1:
                raise CategoryNotAcyclicError(
                    f"category not acyclic: [{labels[i]},{labels[i]}] = {rows[i][i]}")

        graph = nx.DiGraph()
        graph.add_nodes_from(range(size))
        graph.add_edges_from((i, j) for i in range(size) for j in range(size)
                             if i != j and rows[i][j])
        if not nx.is_directed_acyclic_graph(graph):
            cycle = [labels[i] for i, _ in nx.find_cycle(graph)]
            raise CategoryNotAcyclicError(f"category not acyclic: Hom cycle {' -> '.join(cycle)}")
        order = tuple(nx.lexicographical_topological_sort(graph))

        inverse = unitriangular_inverse(rows, order)
        if not is_identity(exact_product(rows, inverse)):
            raise InternalInvariantError("Hom matrix times Möbius matrix is not the identity")
        logger.debug("acyclic category with %d objects", size)
        return cls(objects, rows, tuple(tuple(row) for row in inverse), order, labels)

    @cached_property
    def index(self) -> Dict[ObjectT, int]:
        return {obj: i for i, obj in enumerate(self.objects)}

    def __len__(self) -> int:
        return len(self.objects)

    def hom(self, x: ObjectT, y: ObjectT) -> int:
        return self.hom_counts[self.index[x]][self.index[y]]

    def mu(self, x: ObjectT, y: ObjectT) -> int:
        return self.moebius[self.index[x]][self.index[y]]

    def name(self, x: ObjectT) -> str:
        return self.names[self.index[x]]

    def terminal_objects(self) -> List[ObjectT]:
        """
        Objects receiving exactly one morphism from every object.
        """
        size = len(self.objects)
        return [self.objects[t] for t in range(size)
                if all(self.hom_counts[w][t] == 1 for w in range(size))]


def build_category(objects: Iterable[ObjectT], hom_counter: Callable[[ObjectT, ObjectT], int],
                   names: Optional[Sequence[str]] = None) -> AcyclicCategoryData[ObjectT]:
    """
    Fill the Hom matrix with ``hom_counter`` and invert it exactly.

    :param objects: Object handles, in the order rows and columns should follow.
    :param hom_counter: Returns ``[x, y]`` for a pair of objects.
    :param names: Optional display names.
    :return: The category data.
    :raises CategoryNotAcyclicError: If no unitriangular order exists.
    """
    objects = tuple(objects)
    matrix = [[hom_counter(x, y) for y in objects] for x in objects]
    return AcyclicCategoryData.from_hom_matrix(objects, matrix, names)


def poset_category(elements: Iterable[ObjectT],
                   leq: Callable[[ObjectT, ObjectT], bool]) -> AcyclicCategoryData[ObjectT]:
    return build_category(elements, lambda x, y: 1 if leq(x, y) else 0)


def moebius_recursive(category: AcyclicCategoryData[ObjectT], x: ObjectT, y: ObjectT) -> int:
    """
    Evaluate ``μ(x, y) = -Σ [x, z]·μ(z, y)`` over ``x < z <= y`` without the inverse matrix.

    :param category: The category.
    :param x: Source object.
    :param y: Target object.
    :return: ``μ(x, y)``.
    """
    hom = category.hom_counts
    target = category.index[y]
    values: Dict[int, int] = {}
    # every z with a morphism x -> z comes after x in the certified order
    for i in reversed(category.order):
        if i == target:
            values[i] = 1
            continue
        values[i] = -sum(hom[i][z] * values[z] for z in values if z != i and hom[i][z])
    return values[category.index[x]]


def moebius_value(category: AcyclicCategoryData[ObjectT], x: ObjectT, y: ObjectT,
                  cross_check: bool = False) -> int:
    """
    Read ``μ(x, y)`` off the Möbius matrix.

    :param category: The category.
    :param x: Source object.
    :param y: Target object.
    :param cross_check: Also evaluate the recursion and compare.
    :return: ``μ(x, y)``.
    :raises InternalInvariantError: If the recursion disagrees with the matrix.
    """
    value = category.mu(x, y)
    if cross_check:
        recursive = moebius_recursive(category, x, y)
        if recursive != value:
            raise InternalInvariantError(
                f"μ({category.name(x)}, {category.name(y)}): matrix {value}, "
                f"recursion {recursive}")
    return value
