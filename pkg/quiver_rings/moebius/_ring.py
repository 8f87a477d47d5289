from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Generic, Mapping, Tuple

from .._errors import BaseMismatchError
from ._category import AcyclicCategoryData, ObjectT

__all__ = ("ObjectBasis", "MoebiusRingElement", "to_delta", "from_delta", "multiply",
           "multiply_by_formula", "identity_element",)


class ObjectBasis(str, Enum):
    OBJECT = "object"
    DELTA = "delta"


@dataclass(frozen=True)
class MoebiusRingElement(Generic[ObjectT]):
    """
    An element of the Möbius ring of a finite acyclic category.

    ``coefficients`` follow the category's object order, in the object basis or in the
    basis of orthogonal idempotents ``δ_x = Σ_z μ(z, x)·z``.
    """

    category: AcyclicCategoryData[ObjectT] = field(repr=False, compare=False)
    coefficients: Tuple[int, ...]
    basis: ObjectBasis = ObjectBasis.OBJECT

    def __post_init__(self) -> None:
        coefficients = tuple(int(c) for c in self.coefficients)
        if len(coefficients) != len(self.category):
            raise BaseMismatchError("one coefficient per object is required")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def basis_element(cls, category: AcyclicCategoryData[ObjectT], x: ObjectT,
                      basis: ObjectBasis = ObjectBasis.OBJECT) -> "MoebiusRingElement[ObjectT]":
        coefficients = [0] * len(category)
        coefficients[category.index[x]] = 1
        return cls(category, tuple(coefficients), basis)

    @classmethod
    def from_mapping(cls, category: AcyclicCategoryData[ObjectT], terms: Mapping[ObjectT, int],
                     basis: ObjectBasis = ObjectBasis.OBJECT) -> "MoebiusRingElement[ObjectT]":
        coefficients = [0] * len(category)
        for x, value in terms.items():
            coefficients[category.index[x]] += value
        return cls(category, tuple(coefficients), basis)

    def terms(self) -> Dict[ObjectT, int]:
        return {x: c for x, c in zip(self.category.objects, self.coefficients) if c}

    def in_basis(self, basis: ObjectBasis) -> "MoebiusRingElement[ObjectT]":
        if basis == self.basis:
            return self
        return to_delta(self) if basis == ObjectBasis.DELTA else from_delta(self)

    def _check(self, other: "MoebiusRingElement[ObjectT]") -> None:
        if self.category is not other.category:
            raise BaseMismatchError("elements of different Möbius rings")

    def __add__(self, other: "MoebiusRingElement[ObjectT]") -> "MoebiusRingElement[ObjectT]":
        self._check(other)
        other = other.in_basis(self.basis)
        return MoebiusRingElement(self.category, tuple(
            a + b for a, b in zip(self.coefficients, other.coefficients)), self.basis)

    def __neg__(self) -> "MoebiusRingElement[ObjectT]":
        return MoebiusRingElement(self.category, tuple(-c for c in self.coefficients),
                                  self.basis)

    def __sub__(self, other: "MoebiusRingElement[ObjectT]") -> "MoebiusRingElement[ObjectT]":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "MoebiusRingElement[ObjectT]":
        return MoebiusRingElement(self.category, tuple(scalar * c for c in self.coefficients),
                                  self.basis)

    def __mul__(self, other: "MoebiusRingElement[ObjectT]") -> "MoebiusRingElement[ObjectT]":
        return multiply(self, other)


def _apply(rows: Tuple[Tuple[int, ...], ...], vector: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sum(entry * value for entry, value in zip(row, vector) if entry)
                 for row in rows)


def to_delta(element: MoebiusRingElement[ObjectT]) -> MoebiusRingElement[ObjectT]:
    """
    Rewrite ``element`` in the δ basis using ``x = Σ_z [z, x]·δ_z``.
    """
    if element.basis == ObjectBasis.DELTA:
        return element
    category = element.category
    return MoebiusRingElement(category, _apply(category.hom_counts, element.coefficients),
                              ObjectBasis.DELTA)


def from_delta(element: MoebiusRingElement[ObjectT]) -> MoebiusRingElement[ObjectT]:
    """
    Rewrite ``element`` in the object basis using ``δ_x = Σ_z μ(z, x)·z``.
    """
    if element.basis == ObjectBasis.OBJECT:
        return element
    category = element.category
    return MoebiusRingElement(category, _apply(category.moebius, element.coefficients),
                              ObjectBasis.OBJECT)


def multiply(a: MoebiusRingElement[ObjectT],
             b: MoebiusRingElement[ObjectT]) -> MoebiusRingElement[ObjectT]:
    """
    Multiply two elements; the δ basis consists of orthogonal idempotents.

    :param a: An element in either basis.
    :param b: An element of the same ring in either basis.
    :return: The product, in the basis of ``a``.
    :raises BaseMismatchError: If ``a`` and ``b`` belong to different categories.
    """
    a._check(b)
    left, right = to_delta(a), to_delta(b)
    product = MoebiusRingElement(a.category, tuple(
        x * y for x, y in zip(left.coefficients, right.coefficients)), ObjectBasis.DELTA)
    return product.in_basis(a.basis)


def multiply_by_formula(a: MoebiusRingElement[ObjectT],
                        b: MoebiusRingElement[ObjectT]) -> MoebiusRingElement[ObjectT]:
    """
    Multiply in the object basis with ``xy = Σ_z (Σ_w μ(z, w)[w, x][w, y])·z``.

    Serves as an independent check of ``multiply``.

    :param a: An element in either basis.
    :param b: An element of the same ring in either basis.
    :return: The product in the object basis.
    """
    a._check(b)
    category = a.category
    hom, moebius = category.hom_counts, category.moebius
    left = a.in_basis(ObjectBasis.OBJECT).coefficients
    right = b.in_basis(ObjectBasis.OBJECT).coefficients
    size = len(category)

    coefficients = [0] * size
    for x in range(size):
        if not left[x]:
            continue
        for y in range(size):
            if not right[y]:
                continue
            weight = left[x] * right[y]
            for z in range(size):
                coefficients[z] += weight * sum(moebius[z][w] * hom[w][x] * hom[w][y]
                                                for w in range(size) if moebius[z][w])
    return MoebiusRingElement(category, tuple(coefficients), ObjectBasis.OBJECT)


def identity_element(category: AcyclicCategoryData[ObjectT]) -> MoebiusRingElement[ObjectT]:
    """
    Return ``Σ_x δ_x`` in the object basis, the identity of the Möbius ring.
    """
    ones = MoebiusRingElement(category, (1,) * len(category), ObjectBasis.DELTA)
    return from_delta(ones)
