import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

import networkx as nx

from .._errors import InternalInvariantError, InvalidInputError, PieNotClosedError
from .._formatting import signed_sum
from ..core import (
    DEFAULT_SUBQUIVER_CAP,
    Quiver,
    Subquiver,
    connected_subquivers,
    ensure_acyclic,
)
from ..linearize import DimensionVector
from ..moebius import (
    AcyclicCategoryData,
    MoebiusRingElement,
    ObjectBasis,
    build_category,
    identity_element,
)
from ..over_q import (
    QuiverOverQ,
    connected_components,
    count_homs,
    fiber_product,
    is_wrapping,
    iso_over_q,
    support,
)
from ._objects import (
    Coincidences,
    PieKind,
    PieObject,
    build_E,
    build_I,
    build_object,
    build_P,
    support_label,
)

__all__ = ("PieCategory", "build_pie", "structure_constants", "idempotents",
           "multiply_by_structure", "identity_decomposition", "virtual_dimension_vector",
           "format_element",)

logger = logging.getLogger(__name__)

PieElement = MoebiusRingElement[PieObject]


@dataclass(frozen=True, eq=False)
class PieCategory:
    """
    The PIE category of an acyclic quiver together with its Hom and Möbius matrices.

    Objects are grouped in blocks by support, blocks ordered by support size, and inside
    a block ordered P, I, E; the Hom matrix is upper unitriangular in this order.
    Structure constants are filled in on first use and cached per unordered pair.
    """

    base: Quiver
    objects: Tuple[PieObject, ...]
    data: AcyclicCategoryData[PieObject]
    _products: Dict[FrozenSet[PieObject], Tuple[PieObject, ...]] = field(
        default_factory=dict, repr=False)

    @cached_property
    def blocks(self) -> Dict[Subquiver, Tuple[PieObject, ...]]:
        blocks: Dict[Subquiver, List[PieObject]] = {}
        for obj in self.objects:
            blocks.setdefault(obj.support, []).append(obj)
        return {sub: tuple(members) for sub, members in blocks.items()}

    @cached_property
    def _by_name(self) -> Dict[str, PieObject]:
        return {obj.name: obj for obj in self.objects}

    def __len__(self) -> int:
        return len(self.objects)

    def object(self, name: str) -> PieObject:
        """
        Look an object up by name; ``E_Q``, ``P_{αβ}`` and ``P_αβ`` all work.
        """
        found = self._by_name.get(name) or self._by_name.get(_with_braces(name))
        if found is None:
            raise InvalidInputError(f"no PIE object named {name!r}")
        return found

    def element(self, terms: Mapping[PieObject, int]) -> PieElement:
        return MoebiusRingElement.from_mapping(self.data, terms)

    def basis_element(self, obj: PieObject) -> PieElement:
        return MoebiusRingElement.basis_element(self.data, obj)


def _with_braces(name: str) -> str:
    kind, _, label = name.partition("_")
    return f"{kind}_{{{label}}}" if label and not label.startswith("{") else name


def _check_block(sub: Subquiver, coincidences: Coincidences) -> None:
    builders = {PieKind.P: build_P, PieKind.I: build_I, PieKind.E: build_E}
    built = {kind: builders[kind](sub) for kind in coincidences.defined_kinds()}
    groups = coincidences.groups()
    for left, right in combinations(built, 2):
        same_group = any(left in group and right in group for group in groups)
        isomorphic = iso_over_q(built[left], built[right]) is not None
        if same_group != isomorphic:
            raise InternalInvariantError(
                f"{left.value}_T and {right.value}_T over {sorted(sub.vertices)}: coincidence "
                f"rule says {same_group}, isomorphism test says {isomorphic}")


def build_pie(q: Quiver, cap: int = DEFAULT_SUBQUIVER_CAP) -> PieCategory:
    """
    Build the PIE category of ``q`` and certify that it is acyclic.

    Every connected subquiver ``T`` contributes the defined objects among ``P_T``,
    ``I_T`` and ``E_T``, one per coincidence class; the coincidence rules are checked
    against isomorphism testing. Hom counts come from brute-force morphism counting.
    Objects are named after their support; when two supports share a short label every
    object is named by its vertices and arrows instead.

    :param q: An acyclic quiver.
    :param cap: Largest number of subquiver candidates to examine.
    :return: The category.
    :raises CyclicQuiverError: If ``q`` has a directed cycle.
    :raises CapExceededError: If the enumeration would exceed ``cap``.
    :raises InternalInvariantError: If a coincidence rule disagrees with isomorphism
        testing or the Hom matrix is not unitriangular in block order.
    """
    ensure_acyclic(q)
    supports = connected_subquivers(q, cap)
    labels = {support_label(sub) for sub in supports}
    qualified = len(labels) < len(supports)
    if qualified:
        logger.debug("short support labels collide, naming objects by vertices and arrows")

    objects: List[PieObject] = []
    for sub in supports:
        coincidences = Coincidences.of(sub)
        _check_block(sub, coincidences)
        for kinds in coincidences.groups():
            obj = build_object(sub, kinds, qualified)
            if not is_wrapping(obj.realization):
                raise InternalInvariantError(f"{obj.name} is not a wrapping")
            objects.append(obj)

    data = build_category(objects, lambda x, y: count_homs(x.realization, y.realization),
                          [obj.name for obj in objects])
    for i, row in enumerate(data.hom_counts):
        if any(row[:i]):
            raise InternalInvariantError(
                f"Hom matrix is not upper triangular at {objects[i].name}")
    logger.debug("PIE category with %d objects over %d vertices", len(objects), len(q.vertices))
    return PieCategory(q, tuple(objects), data)


def _match(category: PieCategory, component: QuiverOverQ) -> PieObject:
    candidates = category.blocks.get(support(component), ())
    for candidate in candidates:
        if iso_over_q(component, candidate.realization) is not None:
            return candidate
    raise PieNotClosedError(f"component over {sorted(support(component).vertices)} "
                            f"matches no object")


def structure_constants(category: PieCategory, x: PieObject,
                        y: PieObject) -> Dict[PieObject, int]:
    """
    Decompose ``x ×_Q y`` into PIE objects.

    :param category: The PIE category holding ``x`` and ``y``.
    :param x: An object.
    :param y: An object.
    :return: Multiplicity of each component type, in object order.
    :raises PieNotClosedError: If some component is isomorphic to no object.
    """
    key = frozenset((x, y))
    components = category._products.get(key)
    if components is None:
        product = fiber_product(x.realization, y.realization)
        components = tuple(_match(category, part) for part in connected_components(product))
        category._products[key] = components
    counts = Counter(components)
    return {obj: counts[obj] for obj in category.objects if counts[obj]}


def multiply_by_structure(category: PieCategory, a: PieElement, b: PieElement) -> PieElement:
    """
    Multiply two elements through fiber products of their terms.

    :param category: The PIE category.
    :param a: An element of the Möbius ring of ``category``.
    :param b: Another element.
    :return: The product in the object basis.
    """
    left = a.in_basis(ObjectBasis.OBJECT).terms()
    right = b.in_basis(ObjectBasis.OBJECT).terms()
    total: Counter[PieObject] = Counter()
    for x, coefficient_x in left.items():
        for y, coefficient_y in right.items():
            for w, multiplicity in structure_constants(category, x, y).items():
                total[w] += coefficient_x * coefficient_y * multiplicity
    return category.element(total)


def idempotents(category: PieCategory) -> Dict[PieObject, PieElement]:
    """
    Expand every ``e_x = Σ_z μ(z, x)·z`` in the object basis.
    """
    data = category.data
    return {x: MoebiusRingElement.basis_element(data, x, ObjectBasis.DELTA)
            .in_basis(ObjectBasis.OBJECT) for x in category.objects}


def identity_decomposition(category: PieCategory) -> PieElement:
    """
    Return the identity as the sum of ``E_C`` over the connected components C of the base.

    For a connected base this is ``E_Q``. It equals the sum of all idempotents.
    """
    base = category.base
    graph = base.to_networkx()
    terms: Dict[PieObject, int] = {}
    for members in nx.weakly_connected_components(graph):
        sub = Subquiver(base, frozenset(members),
                        frozenset(a.name for a in base.arrows if a.source in members))
        terms[next(obj for obj in category.blocks[sub] if PieKind.E in obj.kinds)] = 1
    decomposition = category.element(terms)
    if decomposition.coefficients != identity_element(category.data).coefficients:
        raise InternalInvariantError("idempotents do not sum to the components of the base")
    return decomposition


def virtual_dimension_vector(category: PieCategory, element: PieElement) -> DimensionVector:
    """
    Dimension vector of the linearization of an integer combination of objects.
    """
    totals = [0] * len(category.base.vertices)
    for obj, coefficient in element.in_basis(ObjectBasis.OBJECT).terms().items():
        for i, size in enumerate(obj.realization.fiber_sizes):
            totals[i] += coefficient * size
    return DimensionVector(category.base.vertices, tuple(totals))


def format_element(element: PieElement, lead: Optional[PieObject] = None) -> str:
    """
    Render an element as ``E_{αβ} - P_{αβ} - I_{αβ} + E_α + E_β``.

    ``lead`` goes first; the other terms follow by decreasing support arrow count, then
    object order.
    """
    terms = element.in_basis(ObjectBasis.OBJECT).terms()
    position = element.category.index
    ordered = sorted(terms, key=lambda obj: (obj != lead, -len(obj.support.arrows),
                                             position[obj]))
    return signed_sum((obj.name, terms[obj]) for obj in ordered)
