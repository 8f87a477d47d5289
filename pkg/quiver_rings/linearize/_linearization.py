from typing import Dict, Tuple

import numpy as np

from .._errors import BaseMismatchError
from ..over_q import QuiverOverQ, pair_name
from ._representation import Representation

__all__ = ("linearization", "tensor",)


def linearization(x: QuiverOverQ) -> Representation:
    """
    Push the identity representation of ``x.total`` forward along its structure map.

    The basis at a base vertex ``v`` is the fiber over ``v`` in the order of ``x.total``;
    every arrow ``β`` over ``α`` adds 1 at (target of ``β``, source of ``β``) in the
    matrix of ``α``.

    :param x: A quiver over Q.
    :return: The linearization ``L(x)``, a representation of Q with 0/1 matrices when
        ``x`` is a wrapping.
    """
    base = x.base
    basis = {v: x.vertex_fiber(v) for v in base.vertices}
    position: Dict[str, int] = {}
    for names in basis.values():
        position.update((name, i) for i, name in enumerate(names))

    matrices: Dict[str, np.ndarray] = {}
    for arrow in base.arrows:
        matrix = np.zeros((len(basis[arrow.target]), len(basis[arrow.source])), dtype=np.int64)
        for name in x.arrow_fiber(arrow.name):
            over = x.total.arrow(name)
            matrix[position[over.target], position[over.source]] += 1
        matrices[arrow.name] = matrix

    return Representation(base, {v: len(names) for v, names in basis.items()}, matrices, basis)


def _pair_basis(left: Tuple[str, ...], right: Tuple[str, ...]) -> Tuple[str, ...]:
    return tuple(pair_name(a, b) for a in left for b in right)


def tensor(v: Representation, w: Representation) -> Representation:
    """
    Tensor two representations vertex by vertex.

    Matrices are Kronecker products, so the pair basis at each vertex is ordered with
    the basis of ``v`` major.

    :param v: A representation of Q.
    :param w: A representation of the same Q.
    :return: ``v ⊗ w``.
    :raises BaseMismatchError: If ``v`` and ``w`` are representations of different quivers.
    """
    if v.base != w.base:
        raise BaseMismatchError("cannot tensor representations of different quivers")
    base = v.base
    dims = {x: v.dims[x] * w.dims[x] for x in base.vertices}
    matrices = {a.name: np.kron(v.matrices[a.name], w.matrices[a.name]) for a in base.arrows}
    basis = None
    if v.basis is not None and w.basis is not None:
        basis = {x: _pair_basis(v.basis[x], w.basis[x]) for x in base.vertices}
    return Representation(base, dims, matrices, basis)
