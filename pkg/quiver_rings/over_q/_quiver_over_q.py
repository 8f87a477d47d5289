from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Dict, List, Mapping, Sequence, Tuple

import networkx as nx

from .._errors import BaseMismatchError, InvalidQuiverError
from ..core import Arrow, Quiver, Subquiver, validate

__all__ = ("QuiverOverQ", "OverQMorphism", "inclusion", "restrict", "support", "is_wrapping",
           "connected_components", "is_morphism", "require_same_base", "disjoint_union",)

ArrowKey = Tuple[str, str, str]


@dataclass(frozen=True, eq=False)
class QuiverOverQ:
    """
    A quiver ``total`` together with a structure map to the quiver ``base``.

    The structure map is given by ``vertex_label`` and ``arrow_label``; it must commute
    with the start and terminal maps. Fibers keep the input order of ``total``.
    """

    total: Quiver
    base: Quiver
    vertex_label: Mapping[str, str]
    arrow_label: Mapping[str, str]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertex_label", MappingProxyType(dict(self.vertex_label)))
        object.__setattr__(self, "arrow_label", MappingProxyType(dict(self.arrow_label)))
        validate(self.total).raise_for_errors()

        for vertex in self.total.vertices:
            label = self.vertex_label.get(vertex)
            if label is None or not self.base.has_vertex(label):
                raise InvalidQuiverError(f"vertex {vertex!r} has no valid label")
        for arrow in self.total.arrows:
            label = self.arrow_label.get(arrow.name)
            if label is None:
                raise InvalidQuiverError(f"arrow {arrow.name!r} has no label")
            image = self.base.arrow(label)
            if (self.vertex_label[arrow.source] != image.source
                    or self.vertex_label[arrow.target] != image.target):
                raise InvalidQuiverError(
                    f"arrow {arrow.name!r} over {label!r} does not respect start/terminal maps")

    @cached_property
    def vertex_fibers(self) -> Dict[str, Tuple[str, ...]]:
        fibers: Dict[str, List[str]] = {v: [] for v in self.base.vertices}
        for vertex in self.total.vertices:
            fibers[self.vertex_label[vertex]].append(vertex)
        return {v: tuple(members) for v, members in fibers.items()}

    @cached_property
    def arrow_fibers(self) -> Dict[str, Tuple[str, ...]]:
        fibers: Dict[str, List[str]] = {a.name: [] for a in self.base.arrows}
        for arrow in self.total.arrows:
            fibers[self.arrow_label[arrow.name]].append(arrow.name)
        return {a: tuple(members) for a, members in fibers.items()}

    @cached_property
    def arrow_groups(self) -> Dict[ArrowKey, Tuple[str, ...]]:
        """
        Arrows of ``total`` grouped by ``(label, source, target)``.
        """
        groups: Dict[ArrowKey, List[str]] = {}
        for arrow in self.total.arrows:
            key = (self.arrow_label[arrow.name], arrow.source, arrow.target)
            groups.setdefault(key, []).append(arrow.name)
        return {key: tuple(names) for key, names in groups.items()}

    @cached_property
    def pair_labels(self) -> Dict[Tuple[str, str], "Counter[str]"]:
        pairs: Dict[Tuple[str, str], Counter[str]] = {}
        for (label, source, target), names in self.arrow_groups.items():
            pairs.setdefault((source, target), Counter())[label] += len(names)
        return pairs

    @property
    def fiber_sizes(self) -> Tuple[int, ...]:
        return tuple(len(self.vertex_fibers[v]) for v in self.base.vertices)

    @property
    def arrow_fiber_sizes(self) -> Tuple[int, ...]:
        return tuple(len(self.arrow_fibers[a.name]) for a in self.base.arrows)

    def vertex_fiber(self, vertex: str) -> Tuple[str, ...]:
        return self.vertex_fibers[vertex]

    def arrow_fiber(self, arrow: str) -> Tuple[str, ...]:
        return self.arrow_fibers[arrow]

    def __repr__(self) -> str:
        label = self.name or "QuiverOverQ"
        return f"<{label} {len(self.total.vertices)}v/{len(self.total.arrows)}a>"


@dataclass(frozen=True)
class OverQMorphism:
    vertex_map: Mapping[str, str]
    arrow_map: Mapping[str, str]


def require_same_base(x: QuiverOverQ, y: QuiverOverQ) -> None:
    if x.base != y.base:
        raise BaseMismatchError("quivers over Q must share the same base quiver")


def inclusion(sub: Subquiver) -> QuiverOverQ:
    """
    Regard a subquiver as a quiver over its parent through the inclusion map.

    :param sub: The subquiver ``T``.
    :return: The object ``E_T``.
    """
    total = sub.as_quiver()
    return QuiverOverQ(total, sub.parent,
                       {v: v for v in total.vertices}, {a.name: a.name for a in total.arrows})


def restrict(x: QuiverOverQ, sub: Subquiver) -> QuiverOverQ:
    """
    Restrict ``x`` to the preimage of the subquiver ``sub`` of its base.

    :param x: A quiver over Q.
    :param sub: A subquiver of Q.
    :return: The quiver over Q formed by the vertices and arrows of ``x`` lying over ``sub``.
    """
    vertices = tuple(v for v in x.total.vertices if x.vertex_label[v] in sub.vertices)
    arrows = tuple(a for a in x.total.arrows if x.arrow_label[a.name] in sub.arrows)
    return QuiverOverQ(Quiver(vertices, arrows), x.base,
                       {v: x.vertex_label[v] for v in vertices},
                       {a.name: x.arrow_label[a.name] for a in arrows})


def support(x: QuiverOverQ) -> Subquiver:
    return Subquiver(x.base, frozenset(x.vertex_label.values()),
                     frozenset(x.arrow_label.values()))


def is_wrapping(x: QuiverOverQ) -> bool:
    """
    Tell whether the structure map never collapses parallel arrows.

    :param x: A quiver over Q.
    :return: True iff parallel arrows of ``x.total`` always carry distinct labels.
    """
    return all(len(names) == 1 for names in x.arrow_groups.values())


def connected_components(x: QuiverOverQ) -> List[QuiverOverQ]:
    """
    Split ``x`` into its connected components, each keeping its labels.

    Components are ordered by the position of their first vertex in ``x.total``.

    :param x: A quiver over Q.
    :return: The components; empty when ``x`` has no vertices.
    """
    graph = x.total.to_networkx()
    index = x.total.vertex_index
    components = sorted(nx.weakly_connected_components(graph),
                        key=lambda vertices: min(index[v] for v in vertices))
    parts = []
    for members in components:
        vertices = tuple(v for v in x.total.vertices if v in members)
        arrows = tuple(a for a in x.total.arrows if a.source in members)
        parts.append(QuiverOverQ(Quiver(vertices, arrows), x.base,
                                 {v: x.vertex_label[v] for v in vertices},
                                 {a.name: x.arrow_label[a.name] for a in arrows}))
    return parts


def is_morphism(x: QuiverOverQ, y: QuiverOverQ, g: OverQMorphism) -> bool:
    """
    Check that ``g`` is a morphism of quivers over Q from ``x`` to ``y``.

    :param x: The domain.
    :param y: The codomain.
    :param g: Candidate vertex and arrow maps.
    :return: True iff ``g`` is total, label preserving and respects start/terminal maps.
    """
    for vertex in x.total.vertices:
        image = g.vertex_map.get(vertex)
        if image is None or not y.total.has_vertex(image):
            return False
        if y.vertex_label[image] != x.vertex_label[vertex]:
            return False
    for arrow in x.total.arrows:
        name = g.arrow_map.get(arrow.name)
        if name is None:
            return False
        target_arrow = y.total.arrow(name)
        if y.arrow_label[name] != x.arrow_label[arrow.name]:
            return False
        if (target_arrow.source != g.vertex_map[arrow.source]
                or target_arrow.target != g.vertex_map[arrow.target]):
            return False
    return True


def disjoint_union(parts: Sequence[QuiverOverQ]) -> QuiverOverQ:
    """
    Put quivers over the same base side by side.

    Names are prefixed with the position of their part, as in ``"0:3"``.

    :param parts: At least one quiver over Q.
    :return: The coproduct of ``parts`` in the category of quivers over Q.
    :raises BaseMismatchError: If the parts do not share a base.
    """
    if not parts:
        raise InvalidQuiverError("disjoint union needs at least one part")
    base = parts[0].base
    vertices: List[str] = []
    arrows: List[Arrow] = []
    vertex_label: Dict[str, str] = {}
    arrow_label: Dict[str, str] = {}
    for position, part in enumerate(parts):
        require_same_base(parts[0], part)
        for vertex in part.total.vertices:
            vertices.append(f"{position}:{vertex}")
            vertex_label[vertices[-1]] = part.vertex_label[vertex]
        for arrow in part.total.arrows:
            arrows.append(Arrow(f"{position}:{arrow.name}",
                                f"{position}:{arrow.source}", f"{position}:{arrow.target}"))
            arrow_label[arrows[-1].name] = part.arrow_label[arrow.name]
    return QuiverOverQ(Quiver(tuple(vertices), tuple(arrows)), base, vertex_label, arrow_label)
