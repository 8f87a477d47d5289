from typing import Dict

from .._errors import InternalInvariantError
from ..core import Quiver, opposite, path_count_matrix
from ._ring import ProjectiveRingElement

__all__ = ("tensor_projectives", "tensor_injectives", "projective_product",)


def tensor_projectives(q: Quiver, x: str, y: str) -> Dict[str, int]:
    """
    Decompose ``P(x) ⊗ P(y)`` into indecomposable projectives.

    The multiplicity of ``P(w)`` is ``n_xw·n_yw`` minus the sum of ``n_xz·n_yz`` over
    the arrows ``z -> w``.

    :param q: An acyclic quiver.
    :param x: A vertex of ``q``.
    :param y: A vertex of ``q``.
    :return: Multiplicities indexed by every vertex of ``q``, in vertex order.
    :raises CyclicQuiverError: If ``q`` has a directed cycle.
    :raises InternalInvariantError: If a multiplicity comes out negative.
    """
    q.require_vertex(x)
    q.require_vertex(y)
    counts = path_count_matrix(q)
    from_x, from_y = counts.row(x), counts.row(y)

    multiplicities: Dict[str, int] = {}
    for w in q.vertices:
        value = from_x[w] * from_y[w]
        value -= sum(from_x[a.source] * from_y[a.source] for a in q.in_arrows[w])
        if value < 0:
            raise InternalInvariantError(
                f"negative multiplicity {value} of P({w}) in P({x}) ⊗ P({y})")
        multiplicities[w] = value
    return multiplicities


def tensor_injectives(q: Quiver, x: str, y: str) -> Dict[str, int]:
    """
    Decompose ``I(x) ⊗ I(y)`` into indecomposable injectives.

    Duality exchanges the injectives of ``q`` with the projectives of its opposite
    and commutes with tensor products, so the multiplicities are read off there.
    """
    return tensor_projectives(opposite(q), x, y)


def projective_product(q: Quiver, x: str, y: str) -> ProjectiveRingElement:
    return ProjectiveRingElement.from_mapping(q, tensor_projectives(q, x, y))
