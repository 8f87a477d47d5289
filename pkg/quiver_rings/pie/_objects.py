from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from .._errors import PieConstructionError
from .._formatting import escape_identifier
from ..core import Arrow, Path, Quiver, Subquiver, iter_paths_from, iter_paths_to
from ..over_q import QuiverOverQ, inclusion

__all__ = ("PieKind", "Coincidences", "PieObject", "build_P", "build_I", "build_E",
           "build_object", "canonical_kind", "support_label", "qualified_label", "object_name",)


class PieKind(str, Enum):
    P = "P"
    I = "I"  # noqa: E741
    E = "E"

    @property
    def position(self) -> int:
        return _KIND_ORDER.index(self)


_KIND_ORDER = (PieKind.P, PieKind.I, PieKind.E)


@dataclass(frozen=True)
class Coincidences:
    """
    Which of ``P_T``, ``I_T`` and ``E_T`` exist for a support ``T`` and which coincide.

    ``E_T = P_T`` iff T has a unique source and no parallel paths, ``E_T = I_T`` iff it
    has a unique sink and no parallel paths, and ``P_T = I_T`` iff T is a single path.
    """

    unique_source: Optional[str]
    unique_sink: Optional[str]
    parallel_paths: bool
    single_path: bool

    @classmethod
    def of(cls, sub: Subquiver) -> "Coincidences":
        return cls(sub.unique_source, sub.unique_sink, sub.has_parallel_paths,
                   sub.is_single_path)

    @property
    def has_p(self) -> bool:
        return self.unique_source is not None

    @property
    def has_i(self) -> bool:
        return self.unique_sink is not None

    @property
    def p_is_e(self) -> bool:
        return self.has_p and not self.parallel_paths

    @property
    def i_is_e(self) -> bool:
        return self.has_i and not self.parallel_paths

    @property
    def p_is_i(self) -> bool:
        return self.single_path

    def defined_kinds(self) -> Tuple[PieKind, ...]:
        return tuple(kind for kind, defined in zip(_KIND_ORDER, (self.has_p, self.has_i, True))
                     if defined)

    def groups(self) -> List[FrozenSet[PieKind]]:
        """
        Partition the defined kinds into distinct objects, ordered by canonical kind.
        """
        merged = {kind: {kind} for kind in self.defined_kinds()}
        pairs = ((PieKind.P, PieKind.E, self.p_is_e), (PieKind.I, PieKind.E, self.i_is_e),
                 (PieKind.P, PieKind.I, self.p_is_i))
        for left, right, coincide in pairs:
            if coincide:
                union = merged[left] | merged[right]
                for kind in union:
                    merged[kind] = union
        distinct = {frozenset(group) for group in merged.values()}
        return sorted(distinct, key=lambda group: canonical_kind(group).position)


def canonical_kind(kinds: FrozenSet[PieKind]) -> PieKind:
    return PieKind.E if PieKind.E in kinds else PieKind.P if PieKind.P in kinds else PieKind.I


def support_label(sub: Subquiver) -> str:
    """
    Short label of a support: ``Q``, a vertex, or its arrows in quiver order.

    Arrow names are concatenated when every arrow of the parent quiver has a
    one-character name other than a comma or backslash, and comma-joined otherwise.
    """
    if sub.is_full:
        return "Q"
    if not sub.arrows:
        return ",".join(escape_identifier(v) for v in sub.vertex_list)
    names = [arrow.name for arrow in sub.arrow_list]
    if all(len(arrow.name) == 1 and arrow.name not in ",\\" for arrow in sub.parent.arrows):
        return "".join(names)
    return ",".join(escape_identifier(name) for name in names)


def qualified_label(sub: Subquiver) -> str:
    """
    Label naming every vertex and arrow, as in ``1,2|a``; distinct supports never share it.
    """
    vertices = ",".join(escape_identifier(v, ",|") for v in sub.vertex_list)
    arrows = ",".join(escape_identifier(a.name, ",|") for a in sub.arrow_list)
    return f"{vertices}|{arrows}"


def object_name(kind: PieKind, sub: Subquiver, qualified: bool = False) -> str:
    label = qualified_label(sub) if qualified else support_label(sub)
    return f"{kind.value}_{label}" if len(label) == 1 else f"{kind.value}_{{{label}}}"


@dataclass(frozen=True)
class PieObject:
    """
    An object of the PIE category: ``P_T``, ``I_T`` or ``E_T`` for a connected ``T``.

    ``kinds`` lists every construction that produces this object; ``kind`` is the
    canonical one (E when E participates, else P).
    """

    kind: PieKind
    kinds: FrozenSet[PieKind]
    support: Subquiver
    realization: QuiverOverQ = field(compare=False, repr=False)
    name: str = field(default="", compare=False)

    @property
    def key(self) -> Tuple[Tuple[int, int, Tuple[int, ...], Tuple[int, ...]], int]:
        return self.support.sort_key, self.kind.position

    def __str__(self) -> str:
        return self.name


def _require_connected(sub: Subquiver) -> None:
    if not sub.is_connected:
        raise PieConstructionError(f"support {sorted(sub.vertices)} is not connected")


def build_P(sub: Subquiver) -> QuiverOverQ:
    """
    Build the path space ``P_T`` of a connected subquiver with a unique source.

    Vertices are the paths of T from its source, named like ``3·α·γ``; every path ``p``
    has an arrow to ``p·a`` for each arrow ``a`` of T leaving its end, named after the
    longer path.

    :param sub: The support ``T``.
    :return: ``P_T`` as a quiver over the parent of ``T``.
    :raises PieConstructionError: If ``T`` is disconnected or has several sources.
    """
    _require_connected(sub)
    source = sub.unique_source
    if source is None:
        raise PieConstructionError(
            f"P_T needs a unique source, T has sources {', '.join(sub.sources)}")
    local = sub.as_quiver()
    vertices: List[str] = []
    arrows: List[Arrow] = []
    vertex_label: Dict[str, str] = {}
    arrow_label: Dict[str, str] = {}
    for path in iter_paths_from(local, source):
        vertices.append(str(path))
        vertex_label[str(path)] = path.end
        if not path.is_trivial:
            previous = Path(path.start, path.arrows[:-1], local.arrow(path.arrows[-1]).source)
            arrows.append(Arrow(str(path), str(previous), str(path)))
            arrow_label[str(path)] = path.arrows[-1]
    return QuiverOverQ(Quiver(tuple(vertices), tuple(arrows)), sub.parent,
                       vertex_label, arrow_label, object_name(PieKind.P, sub))


def build_I(sub: Subquiver) -> QuiverOverQ:
    """
    Build ``I_T``, the dual of ``P_T``: vertices are the paths of T into its sink.

    :param sub: The support ``T``.
    :return: ``I_T`` as a quiver over the parent of ``T``.
    :raises PieConstructionError: If ``T`` is disconnected or has several sinks.
    """
    _require_connected(sub)
    sink = sub.unique_sink
    if sink is None:
        raise PieConstructionError(
            f"I_T needs a unique sink, T has sinks {', '.join(sub.sinks)}")
    local = sub.as_quiver()
    vertices: List[str] = []
    arrows: List[Arrow] = []
    vertex_label: Dict[str, str] = {}
    arrow_label: Dict[str, str] = {}
    for path in iter_paths_to(local, sink):
        vertices.append(str(path))
        vertex_label[str(path)] = path.start
        if not path.is_trivial:
            shorter = Path(local.arrow(path.arrows[0]).target, path.arrows[1:], path.end)
            arrows.append(Arrow(str(path), str(path), str(shorter)))
            arrow_label[str(path)] = path.arrows[0]
    return QuiverOverQ(Quiver(tuple(vertices), tuple(arrows)), sub.parent,
                       vertex_label, arrow_label, object_name(PieKind.I, sub))


def build_E(sub: Subquiver) -> QuiverOverQ:
    _require_connected(sub)
    embedded = inclusion(sub)
    return QuiverOverQ(embedded.total, embedded.base, embedded.vertex_label,
                       embedded.arrow_label, object_name(PieKind.E, sub))


_BUILDERS = {PieKind.P: build_P, PieKind.I: build_I, PieKind.E: build_E}


def build_object(sub: Subquiver, kinds: FrozenSet[PieKind], qualified: bool = False) -> PieObject:
    kind = canonical_kind(kinds)
    name = object_name(kind, sub, qualified)
    realization = _BUILDERS[kind](sub)
    if qualified:
        realization = replace(realization, name=name)
    return PieObject(kind, kinds, sub, realization, name)
