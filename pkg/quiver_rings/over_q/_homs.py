from collections import Counter
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from ..core import Arrow
from ._quiver_over_q import OverQMorphism, QuiverOverQ, require_same_base

__all__ = ("count_homs", "iter_homs", "iso_over_q",)


def _closing_arrows(x: QuiverOverQ) -> List[Tuple[Arrow, ...]]:
    # arrows whose endpoints are both placed once the vertex at that position is placed
    position = x.total.vertex_index
    closing: List[List[Arrow]] = [[] for _ in x.total.vertices]
    for arrow in x.total.arrows:
        closing[max(position[arrow.source], position[arrow.target])].append(arrow)
    return [tuple(arrows) for arrows in closing]


def _candidates(x: QuiverOverQ, y: QuiverOverQ) -> List[Tuple[str, ...]]:
    return [y.vertex_fiber(x.vertex_label[v]) for v in x.total.vertices]


def count_homs(x: QuiverOverQ, y: QuiverOverQ) -> int:
    """
    Count the morphisms ``x -> y`` of quivers over Q.

    Vertex images are chosen inside label fibers in the input order of ``x.total``.
    As soon as both endpoints of an arrow are placed, the number of arrows of ``y``
    it may go to is multiplied in; a zero prunes the branch.

    :param x: The domain.
    :param y: The codomain.
    :return: The exact number of morphisms.
    :raises BaseMismatchError: If ``x`` and ``y`` have different bases.
    """
    require_same_base(x, y)
    vertices = x.total.vertices
    candidates = _candidates(x, y)
    if any(not images for images in candidates):
        return 0
    closing = _closing_arrows(x)
    groups = y.arrow_groups
    assignment: Dict[str, str] = {}

    def extend(position: int, weight: int) -> int:
        if position == len(vertices):
            return weight
        vertex = vertices[position]
        total = 0
        for image in candidates[position]:
            assignment[vertex] = image
            factor = weight
            for arrow in closing[position]:
                key = (x.arrow_label[arrow.name], assignment[arrow.source],
                       assignment[arrow.target])
                factor *= len(groups.get(key, ()))
                if not factor:
                    break
            if factor:
                total += extend(position + 1, factor)
        assignment.pop(vertex, None)
        return total

    return extend(0, 1)


def iter_homs(x: QuiverOverQ, y: QuiverOverQ) -> Iterator[OverQMorphism]:
    """
    Enumerate the morphisms ``x -> y`` one by one.

    The order is an artifact of the search and carries no meaning.

    :param x: The domain.
    :param y: The codomain.
    :raises BaseMismatchError: If ``x`` and ``y`` have different bases.
    """
    require_same_base(x, y)
    vertices = x.total.vertices
    candidates = _candidates(x, y)
    groups = y.arrow_groups
    arrows = x.total.arrows

    for images in product(*candidates):
        vertex_map = dict(zip(vertices, images))
        choices = [groups.get((x.arrow_label[a.name], vertex_map[a.source],
                               vertex_map[a.target]), ()) for a in arrows]
        for chosen in product(*choices):
            yield OverQMorphism(vertex_map, {a.name: c for a, c in zip(arrows, chosen)})


def _pairs_agree(x: QuiverOverQ, y: QuiverOverQ, u: str, v: str,
                 image_u: str, image_v: str) -> bool:
    empty: "Counter[str]" = Counter()
    return (x.pair_labels.get((u, v), empty) == y.pair_labels.get((image_u, image_v), empty)
            and x.pair_labels.get((v, u), empty) == y.pair_labels.get((image_v, image_u), empty))


def iso_over_q(x: QuiverOverQ, y: QuiverOverQ) -> Optional[OverQMorphism]:
    """
    Look for an isomorphism of quivers over Q between ``x`` and ``y``.

    :param x: The domain.
    :param y: The codomain.
    :return: An invertible morphism ``x -> y``, or None when the two are not isomorphic.
    :raises BaseMismatchError: If ``x`` and ``y`` have different bases.
    """
    require_same_base(x, y)
    if x.fiber_sizes != y.fiber_sizes or x.arrow_fiber_sizes != y.arrow_fiber_sizes:
        return None

    vertices: Sequence[str] = x.total.vertices
    candidates = _candidates(x, y)
    assignment: Dict[str, str] = {}
    used: Set[str] = set()

    def extend(position: int) -> bool:
        if position == len(vertices):
            return True
        vertex = vertices[position]
        for image in candidates[position]:
            if image in used:
                continue
            if not _pairs_agree(x, y, vertex, vertex, image, image):
                continue
            if not all(_pairs_agree(x, y, vertex, other, image, assignment[other])
                       for other in vertices[:position]):
                continue
            assignment[vertex] = image
            used.add(image)
            if extend(position + 1):
                return True
            used.discard(image)
            del assignment[vertex]
        return False

    if not extend(0):
        return None

    arrow_map: Dict[str, str] = {}
    for (label, source, target), names in x.arrow_groups.items():
        images = y.arrow_groups[(label, assignment[source], assignment[target])]
        arrow_map.update(zip(names, images))
    return OverQMorphism(dict(assignment), arrow_map)
