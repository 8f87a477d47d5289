from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np

from .._errors import BaseMismatchError, InvalidInputError
from ..core import Quiver

__all__ = ("Representation", "DimensionVector", "dimension_vector", "representations_equal",
           "identity_representation", "simple_representation", "arrow_rank",)


@dataclass(frozen=True)
class DimensionVector:
    """
    Dimensions indexed by the vertices of a base quiver, in the base's vertex order.
    """

    vertices: Tuple[str, ...]
    entries: Tuple[int, ...]

    def __getitem__(self, vertex: str) -> int:
        return self.entries[self.vertices.index(vertex)]

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(self.vertices, self.entries))

    def __mul__(self, other: "DimensionVector") -> "DimensionVector":
        if self.vertices != other.vertices:
            raise BaseMismatchError("dimension vectors over different vertex sets")
        return DimensionVector(self.vertices,
                               tuple(a * b for a, b in zip(self.entries, other.entries)))

    def __str__(self) -> str:
        return "(" + ",".join(str(n) for n in self.entries) + ")"


@dataclass(frozen=True, eq=False)
class Representation:
    """
    A representation of ``base`` over the integers.

    ``matrices[α]`` has shape ``dims[t(α)] × dims[s(α)]``; vertices of dimension zero
    carry empty matrices. ``basis`` optionally names the basis vectors at each vertex.
    """

    base: Quiver
    dims: Mapping[str, int]
    matrices: Mapping[str, np.ndarray]
    basis: Optional[Mapping[str, Tuple[str, ...]]] = field(default=None)

    def __post_init__(self) -> None:
        dims = {v: int(self.dims.get(v, 0)) for v in self.base.vertices}
        if any(n < 0 for n in dims.values()):
            raise InvalidInputError("dimensions must be nonnegative")
        matrices: Dict[str, np.ndarray] = {}
        for arrow in self.base.arrows:
            shape = (dims[arrow.target], dims[arrow.source])
            matrix = self.matrices.get(arrow.name)
            if matrix is None:
                matrix = np.zeros(shape, dtype=np.int64)
            else:
                matrix = np.array(matrix, dtype=np.int64)
                if matrix.size == 0:
                    matrix = matrix.reshape(shape)
                if matrix.shape != shape:
                    raise InvalidInputError(
                        f"matrix of {arrow.name!r} has shape {matrix.shape}, expected {shape}")
            matrix.setflags(write=False)
            matrices[arrow.name] = matrix
        object.__setattr__(self, "dims", MappingProxyType(dims))
        object.__setattr__(self, "matrices", MappingProxyType(matrices))

        if self.basis is not None:
            basis = {v: tuple(self.basis.get(v, ())) for v in self.base.vertices}
            for vertex, names in basis.items():
                if len(names) != dims[vertex]:
                    raise InvalidInputError(f"basis at {vertex!r} has {len(names)} names, "
                                            f"dimension is {dims[vertex]}")
            object.__setattr__(self, "basis", MappingProxyType(basis))

    @property
    def total_dimension(self) -> int:
        return sum(self.dims.values())

    def to_dict(self) -> Dict[str, Any]:
        """
        Dump dimensions and row-major matrices in base vertex and arrow order.
        """
        payload: Dict[str, Any] = {
            "dims": {v: self.dims[v] for v in self.base.vertices},
            "matrices": {a.name: self.matrices[a.name].tolist() for a in self.base.arrows},
        }
        if self.basis is not None:
            payload["basis"] = {v: list(self.basis[v]) for v in self.base.vertices}
        return payload


def dimension_vector(rep: Representation) -> DimensionVector:
    return DimensionVector(rep.base.vertices, tuple(rep.dims[v] for v in rep.base.vertices))


def representations_equal(v: Representation, w: Representation) -> bool:
    """
    Compare two representations entry by entry under their declared bases.

    :param v: A representation.
    :param w: A representation of the same quiver.
    :return: True iff dimensions and every structure matrix coincide.
    :raises BaseMismatchError: If the base quivers differ.
    """
    if v.base != w.base:
        raise BaseMismatchError("representations of different quivers")
    if dict(v.dims) != dict(w.dims):
        return False
    return all(np.array_equal(v.matrices[a.name], w.matrices[a.name]) for a in v.base.arrows)


def identity_representation(q: Quiver) -> Representation:
    return Representation(q, {v: 1 for v in q.vertices},
                          {a.name: np.ones((1, 1), dtype=np.int64) for a in q.arrows},
                          {v: (v,) for v in q.vertices})


def simple_representation(q: Quiver, vertex: str) -> Representation:
    q.require_vertex(vertex)
    return Representation(q, {vertex: 1}, {}, {v: (v,) if v == vertex else () for v in q.vertices})


def arrow_rank(rep: Representation, arrow: str) -> int:
    matrix = rep.matrices[rep.base.arrow(arrow).name]
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))
