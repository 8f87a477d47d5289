from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Tuple

import numpy as np

from .._errors import InternalInvariantError
from .._linalg import solve_upper, unitriangular_inverse
from ..core import Quiver, path_count_matrix, topological_order

__all__ = ("CartanMatrix", "cartan_matrix", "solve_cartan",)

IntRows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class CartanMatrix:
    """
    The Cartan matrix of an acyclic quiver and its exact inverse.

    Rows and columns follow the vertex order of ``quiver``. Entry ``[w][x]`` is
    ``n_xw = dim P(x)_w``, so column ``x`` is the dimension vector of ``P(x)``.
    """

    quiver: Quiver
    matrix: IntRows
    inverse: IntRows

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    def __getitem__(self, key: Tuple[str, str]) -> int:
        w, x = key
        index = self.quiver.vertex_index
        return self.matrix[index[w]][index[x]]

    def column(self, x: str) -> Dict[str, int]:
        position = self.quiver.vertex_index[x]
        return {w: row[position] for w, row in zip(self.vertices, self.matrix)}

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=object)

    def inverse_as_array(self) -> np.ndarray:
        return np.array(self.inverse, dtype=object)


@lru_cache(maxsize=None)
def cartan_matrix(q: Quiver) -> CartanMatrix:
    """
    Assemble the Cartan matrix from path counts and invert it exactly.

    The inverse is checked against its closed form: the transposed inverse has 1 on the
    diagonal and minus the number of arrows ``x -> y`` at ``(x, y)``.

    :param q: An acyclic quiver.
    :return: The cached Cartan matrix of ``q``.
    :raises CyclicQuiverError: If ``q`` has a directed cycle.
    :raises InternalInvariantError: If the inverse disagrees with the closed form.
    """
    counts = path_count_matrix(q).entries
    index = q.vertex_index
    order = [index[v] for v in topological_order(q)]
    # counts is upper unitriangular in topological order; C is its transpose
    counts_inverse = unitriangular_inverse(counts, order)

    for x in q.vertices:
        for y in q.vertices:
            expected = (1 if x == y else 0) - len(q.arrows_between(x, y))
            if counts_inverse[index[x]][index[y]] != expected:
                raise InternalInvariantError(
                    f"Cartan inverse entry ({x}, {y}) is {counts_inverse[index[x]][index[y]]}, "
                    f"expected {expected}")

    size = len(q.vertices)
    matrix = tuple(tuple(counts[x][w] for x in range(size)) for w in range(size))
    inverse = tuple(tuple(counts_inverse[x][w] for x in range(size)) for w in range(size))
    return CartanMatrix(q, matrix, inverse)


def solve_cartan(cartan: CartanMatrix, rhs: Mapping[str, int]) -> Dict[str, int]:
    """
    Solve ``C·c = rhs`` exactly by back-substitution.

    Used as the brute-force oracle for tensor product multiplicities: with ``rhs`` the
    pointwise product of two projective dimension vectors, ``c`` is the decomposition.

    :param cartan: The Cartan matrix of a quiver.
    :param rhs: A dimension vector, indexed by vertex.
    :return: The unique integer solution, indexed by vertex in quiver order.
    """
    q = cartan.quiver
    index = q.vertex_index
    order = [index[v] for v in topological_order(q)]
    # C is upper unitriangular in reverse topological order
    values = [int(rhs.get(v, 0)) for v in q.vertices]
    solution = solve_upper(cartan.matrix, order[::-1], values)
    return dict(zip(q.vertices, solution))
