from typing import Dict, List

from .._formatting import escape_identifier
from ..core import Arrow, Quiver
from ._quiver_over_q import QuiverOverQ, require_same_base

__all__ = ("fiber_product", "pair_name",)


def pair_name(left: str, right: str) -> str:
    """
    Name the pair as ``(left,right)``; commas and backslashes in the parts are escaped.
    """
    return f"({escape_identifier(left)},{escape_identifier(right)})"


def fiber_product(x: QuiverOverQ, y: QuiverOverQ) -> QuiverOverQ:
    """
    Build the fiber product ``x ×_Q y``, the categorical product over Q.

    Vertices are the label-matched pairs ``(v', v'')`` and arrows the label-matched
    arrow pairs. Both lists are ordered with the ``x`` element major, which is the
    basis order of the Kronecker product used by ``linearize.tensor``.

    :param x: A quiver over Q.
    :param y: A quiver over the same Q.
    :return: The fiber product.
    :raises BaseMismatchError: If ``x`` and ``y`` have different bases.
    """
    require_same_base(x, y)
    base = x.base

    vertices: List[str] = []
    vertex_label: Dict[str, str] = {}
    for left in x.total.vertices:
        label = x.vertex_label[left]
        for right in y.vertex_fiber(label):
            name = pair_name(left, right)
            vertices.append(name)
            vertex_label[name] = label

    arrows: List[Arrow] = []
    arrow_label: Dict[str, str] = {}
    for left in x.total.arrows:
        label = x.arrow_label[left.name]
        for right_name in y.arrow_fiber(label):
            right = y.total.arrow(right_name)
            arrow = Arrow(pair_name(left.name, right.name),
                          pair_name(left.source, right.source),
                          pair_name(left.target, right.target))
            arrows.append(arrow)
            arrow_label[arrow.name] = label

    return QuiverOverQ(Quiver(tuple(vertices), tuple(arrows)), base, vertex_label, arrow_label)
