from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Mapping, Tuple

from .._errors import BaseMismatchError
from .._formatting import signed_sum
from ..core import Quiver, topological_order
from ._cartan import cartan_matrix

__all__ = ("Basis", "ProjectiveRingElement", "to_e_basis", "from_e_basis",
           "multiply_projective_elements", "format_terms",)


class Basis(str, Enum):
    P = "P"
    E = "e"


def format_terms(terms: Mapping[str, int], symbol: str = "P") -> str:
    """
    Render ``{"3": 1, "2": 2}`` as ``P(3) + 2·P(2)``, keeping the mapping's order.
    """
    return signed_sum((f"{symbol}({key})", coefficient) for key, coefficient in terms.items())


@dataclass(frozen=True)
class ProjectiveRingElement:
    """
    An integer combination of the projectives ``P(x)`` or of the idempotents ``e(x)``.

    ``coefficients`` follow the vertex order of ``quiver``; ``basis`` tells which of the
    two families they refer to.
    """

    quiver: Quiver = field(repr=False)
    coefficients: Tuple[int, ...]
    basis: Basis = Basis.P

    def __post_init__(self) -> None:
        coefficients = tuple(int(c) for c in self.coefficients)
        if len(coefficients) != len(self.quiver.vertices):
            raise BaseMismatchError("one coefficient per vertex is required")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_mapping(cls, quiver: Quiver, terms: Mapping[str, int],
                     basis: Basis = Basis.P) -> "ProjectiveRingElement":
        for vertex in terms:
            quiver.require_vertex(vertex)
        return cls(quiver, tuple(terms.get(v, 0) for v in quiver.vertices), basis)

    @classmethod
    def projective(cls, quiver: Quiver, vertex: str) -> "ProjectiveRingElement":
        return cls.from_mapping(quiver, {vertex: 1}, Basis.P)

    @classmethod
    def idempotent(cls, quiver: Quiver, vertex: str) -> "ProjectiveRingElement":
        return cls.from_mapping(quiver, {vertex: 1}, Basis.E)

    @classmethod
    def one(cls, quiver: Quiver) -> "ProjectiveRingElement":
        return cls(quiver, (1,) * len(quiver.vertices), Basis.E)

    def as_dict(self) -> Dict[str, int]:
        return {v: c for v, c in zip(self.quiver.vertices, self.coefficients) if c}

    def _same_ring(self, other: "ProjectiveRingElement") -> None:
        if self.quiver != other.quiver:
            raise BaseMismatchError("elements of different representation rings")

    def __add__(self, other: "ProjectiveRingElement") -> "ProjectiveRingElement":
        self._same_ring(other)
        other = other.in_basis(self.basis)
        return ProjectiveRingElement(self.quiver, tuple(
            a + b for a, b in zip(self.coefficients, other.coefficients)), self.basis)

    def __neg__(self) -> "ProjectiveRingElement":
        return ProjectiveRingElement(self.quiver, tuple(-c for c in self.coefficients),
                                     self.basis)

    def __sub__(self, other: "ProjectiveRingElement") -> "ProjectiveRingElement":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "ProjectiveRingElement":
        return ProjectiveRingElement(self.quiver, tuple(scalar * c for c in self.coefficients),
                                     self.basis)

    def __mul__(self, other: "ProjectiveRingElement") -> "ProjectiveRingElement":
        return multiply_projective_elements(self, other)

    def in_basis(self, basis: Basis) -> "ProjectiveRingElement":
        if basis == self.basis:
            return self
        return to_e_basis(self) if basis == Basis.E else from_e_basis(self)

    def __str__(self) -> str:
        order = topological_order(self.quiver)
        terms = dict(zip(self.quiver.vertices, self.coefficients))
        return format_terms({v: terms[v] for v in order}, self.basis.value)


def to_e_basis(element: ProjectiveRingElement) -> ProjectiveRingElement:
    """
    Rewrite ``element`` in the idempotent basis using ``P(x) = Σ_z n_xz e(z)``.

    :param element: An element in either basis.
    :return: The same element with ``basis == Basis.E``.
    """
    if element.basis == Basis.E:
        return element
    matrix = cartan_matrix(element.quiver).matrix
    coefficients = tuple(sum(entry * c for entry, c in zip(row, element.coefficients))
                         for row in matrix)
    return ProjectiveRingElement(element.quiver, coefficients, Basis.E)


def from_e_basis(element: ProjectiveRingElement) -> ProjectiveRingElement:
    """
    Rewrite ``element`` in the projective basis using ``e(x) = P(x) - Σ_{x->y} P(y)``.

    :param element: An element in either basis.
    :return: The same element with ``basis == Basis.P``.
    """
    if element.basis == Basis.P:
        return element
    inverse = cartan_matrix(element.quiver).inverse
    coefficients = tuple(sum(entry * c for entry, c in zip(row, element.coefficients))
                         for row in inverse)
    return ProjectiveRingElement(element.quiver, coefficients, Basis.P)


def multiply_projective_elements(a: ProjectiveRingElement,
                                 b: ProjectiveRingElement) -> ProjectiveRingElement:
    """
    Multiply in the projective subring, where the ``e(z)`` are orthogonal idempotents.

    :param a: An element in either basis.
    :param b: An element of the same ring in either basis.
    :return: The product, in the basis of ``a``.
    :raises BaseMismatchError: If ``a`` and ``b`` live over different quivers.
    """
    a._same_ring(b)
    left, right = to_e_basis(a), to_e_basis(b)
    product = ProjectiveRingElement(a.quiver, tuple(
        x * y for x, y in zip(left.coefficients, right.coefficients)), Basis.E)
    return product.in_basis(a.basis)
