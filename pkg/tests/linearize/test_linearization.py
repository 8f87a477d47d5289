from typing import Tuple

import numpy as np
from baby_steps import given, then, when
from hypothesis import given as for_all
from hypothesis import settings
from pytest import raises

from quiver_rings import BaseMismatchError
from quiver_rings.core import Quiver, Subquiver, full_subquiver
from quiver_rings.linearize import (
    arrow_rank,
    dimension_vector,
    identity_representation,
    linearization,
    representations_equal,
    tensor,
)
from quiver_rings.over_q import QuiverOverQ, fiber_product, inclusion
from quiver_rings.pie import build_I, build_P

from .._utils import chain, q3, wrapping_pairs

__all__ = ("q3", "chain",)  # fixtures


def test_linearization_of_path_space(q3: Quiver):
    with given:
        paths = build_P(full_subquiver(q3))

    with when:
        rep = linearization(paths)

    with then:
        assert dimension_vector(rep).as_dict() == {"1": 2, "2": 2, "3": 1}
        assert rep.basis is not None
        assert rep.basis["2"] == ("3·α", "3·β")
        assert rep.matrices["α"].tolist() == [[1], [0]]
        assert rep.matrices["β"].tolist() == [[0], [1]]
        assert rep.matrices["γ"].tolist() == [[1, 0], [0, 1]]
        assert arrow_rank(rep, "γ") == 2


def test_linearization_of_injective(q3: Quiver):
    with given:
        dual = build_I(full_subquiver(q3))

    with when:
        rep = linearization(dual)

    with then:
        assert dimension_vector(rep).as_dict() == {"1": 1, "2": 1, "3": 2}
        assert arrow_rank(rep, "α") == 1
        assert arrow_rank(rep, "β") == 1


def test_linearization_of_base_is_identity(q3: Quiver):
    with when:
        rep = linearization(inclusion(full_subquiver(q3)))

    with then:
        assert representations_equal(rep, identity_representation(q3))


def test_linearization_of_subquiver(q3: Quiver):
    with given:
        sub = Subquiver(q3, frozenset({"2", "3"}), frozenset({"α"}))

    with when:
        rep = linearization(inclusion(sub))

    with then:
        assert dimension_vector(rep).entries == (0, 1, 1)
        assert rep.matrices["α"].tolist() == [[1]]
        assert rep.matrices["β"].tolist() == [[0]]
        assert rep.matrices["γ"].shape == (0, 1)


def test_tensor_uses_kronecker_products(q3: Quiver):
    with given:
        rep = linearization(build_P(full_subquiver(q3)))

    with when:
        product = tensor(rep, rep)

    with then:
        assert dimension_vector(product).as_dict() == {"1": 4, "2": 4, "3": 1}
        assert np.array_equal(product.matrices["γ"], np.eye(4, dtype=np.int64))
        assert product.basis is not None
        assert product.basis["3"] == ("(3,3)",)


def test_tensor_needs_a_common_base(q3: Quiver, chain: Quiver):
    with when, raises(BaseMismatchError):
        tensor(identity_representation(q3), identity_representation(chain))


@for_all(wrapping_pairs())
@settings(max_examples=40, deadline=None)
def test_linearization_turns_fiber_products_into_tensors(
        pair: Tuple[QuiverOverQ, QuiverOverQ]):
    with given:
        x, y = pair

    with when:
        left = tensor(linearization(x), linearization(y))
        right = linearization(fiber_product(x, y))

    with then:
        assert representations_equal(left, right)
        assert left.basis is not None and right.basis is not None
        assert dict(left.basis) == dict(right.basis)


@for_all(wrapping_pairs())
@settings(max_examples=30, deadline=None)
def test_wrappings_linearize_to_zero_one_matrices(pair: Tuple[QuiverOverQ, QuiverOverQ]):
    with given:
        x, _ = pair

    with when:
        rep = linearization(x)

    with then:
        assert all(((m == 0) | (m == 1)).all() for m in rep.matrices.values())
        assert dimension_vector(rep).entries == x.fiber_sizes


def _swap(left: int, right: int) -> np.ndarray:
    permutation = np.zeros((left * right, left * right), dtype=np.int64)
    for i in range(left):
        for j in range(right):
            permutation[j * left + i, i * right + j] = 1
    return permutation


@for_all(wrapping_pairs())
@settings(max_examples=40, deadline=None)
def test_tensor_commutes_up_to_swapping_factors(pair: Tuple[QuiverOverQ, QuiverOverQ]):
    with given:
        v, w = (linearization(x) for x in pair)
        base = pair[0].base

    with when:
        forward, backward = tensor(v, w), tensor(w, v)

    with then:
        assert dict(forward.dims) == dict(backward.dims)
        for arrow in base.arrows:
            source = _swap(v.dims[arrow.source], w.dims[arrow.source])
            target = _swap(v.dims[arrow.target], w.dims[arrow.target])
            assert (target @ forward.matrices[arrow.name]
                    == backward.matrices[arrow.name] @ source).all()
