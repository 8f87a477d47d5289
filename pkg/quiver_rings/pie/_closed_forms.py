from typing import FrozenSet, Optional

from ..core import Subquiver, path_count_matrix
from ._objects import Coincidences, PieKind, PieObject

__all__ = ("hom_count_closed_form", "mu_closed_form", "same_skeleton",)

_SWAP = {PieKind.P: PieKind.I, PieKind.I: PieKind.P, PieKind.E: PieKind.E}


def _paths_in(sub: Subquiver, start: str, end: str) -> int:
    return path_count_matrix(sub.as_quiver())[start, end]


def hom_count_closed_form(x: PieObject, y: PieObject) -> int:
    """
    Count morphisms between two PIE objects from their kinds and supports alone.

    With ``S = supp x`` and ``T = supp y``: nothing unless ``S ⊆ T``; exactly one into
    ``E_T``; into ``P_T`` the paths of T from the source of T to the source of S when
    ``x`` is P-type, else none; dually into ``I_T``.

    :param x: The domain.
    :param y: The codomain, over the same base.
    :return: ``[x, y]``.
    """
    source_support, target_support = x.support, y.support
    if not source_support.issubset(target_support):
        return 0
    if PieKind.E in y.kinds:
        return 1
    if PieKind.P in y.kinds:
        if PieKind.P not in x.kinds:
            return 0
        return _paths_in(target_support, _source(target_support), _source(source_support))
    if PieKind.I not in x.kinds:
        return 0
    return _paths_in(target_support, _sink(source_support), _sink(target_support))


def _source(sub: Subquiver) -> str:
    source = sub.unique_source
    assert source is not None
    return source


def _sink(sub: Subquiver) -> str:
    sink = sub.unique_sink
    assert sink is not None
    return sink


def _adjacent_pairs(sub: Subquiver) -> FrozenSet[FrozenSet[str]]:
    return frozenset(frozenset((a.source, a.target)) for a in sub.arrow_list)


def same_skeleton(s: Subquiver, t: Subquiver) -> bool:
    """
    Tell whether two subquivers join exactly the same vertex pairs by at least one arrow.
    """
    return s.vertices == t.vertices and _adjacent_pairs(s) == _adjacent_pairs(t)


def _mu_p_side(x_kinds: FrozenSet[PieKind], y_kind: PieKind, coincidences: Coincidences,
               sign: int) -> Optional[int]:
    # E_S coincides with neither P_S nor I_S
    if not coincidences.p_is_e and not coincidences.i_is_e:
        if x_kinds == {PieKind.E}:
            return sign if y_kind == PieKind.E else 0
        if x_kinds == {PieKind.P}:
            return {PieKind.P: sign, PieKind.E: -sign, PieKind.I: 0}[y_kind]
        return None
    # P_S = E_S = I_S: S is a path
    if coincidences.p_is_i:
        return {PieKind.E: -sign, PieKind.P: sign, PieKind.I: sign}[y_kind]
    # P_S = E_S != I_S
    if coincidences.p_is_e and x_kinds == {PieKind.P, PieKind.E}:
        return sign if y_kind == PieKind.P else 0
    return None


def _opposite_coincidences(coincidences: Coincidences) -> Coincidences:
    return Coincidences(coincidences.unique_sink, coincidences.unique_source,
                        coincidences.parallel_paths, coincidences.single_path)


def mu_closed_form(x: PieObject, y: PieObject) -> Optional[int]:
    """
    Evaluate ``μ(x, y)`` in closed form when the supports ``S ⊆ T`` share a skeleton.

    The sign is ``(-1)^#A`` with ``A`` the arrows of T outside S, and the case split
    follows the coincidences among ``P_S``, ``I_S`` and ``E_S``. Formulas with I-type
    objects are the P-type ones read over the opposite quiver.

    :param x: The domain.
    :param y: The codomain.
    :return: ``μ(x, y)``, or None when no closed form applies.
    """
    if x == y:
        return 1
    s, t = x.support, y.support
    if not s.issubset(t) or not same_skeleton(s, t):
        return None
    if len(y.kinds) != 1:
        return None
    (y_kind,) = y.kinds
    sign = -1 if len(t.arrows - s.arrows) % 2 else 1
    coincidences = Coincidences.of(s)

    value = _mu_p_side(x.kinds, y_kind, coincidences, sign)
    if value is not None:
        return value
    # the same formulas over the opposite quiver exchange P and I
    return _mu_p_side(frozenset(_SWAP[k] for k in x.kinds), _SWAP[y_kind],
                      _opposite_coincidences(coincidences), sign)
