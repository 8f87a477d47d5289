from typing import List, Sequence

import numpy as np

__all__ = ("IntMatrix", "unitriangular_inverse", "solve_upper", "exact_product", "is_identity",)

IntMatrix = List[List[int]]


def unitriangular_inverse(matrix: Sequence[Sequence[int]], order: Sequence[int]) -> IntMatrix:
    """
    Invert an integer matrix that is upper unitriangular after permuting by ``order``.

    Runs back-substitution one column at a time with Python integers, so the result is
    exact whatever the size of the entries.

    :param matrix: A square matrix ``U`` in its own index order.
    :param order: Row/column indices such that ``U[order[i]][order[j]] == 0`` for ``i > j``
        and every diagonal entry is 1.
    :return: ``U⁻¹`` in the same index order as ``matrix``.
    """
    size = len(matrix)
    inverse = [[0] * size for _ in range(size)]
    for column in range(size):
        for i in reversed(range(size)):
            row = order[i]
            value = 1 if row == column else 0
            for later in order[i + 1:]:
                entry = matrix[row][later]
                if entry:
                    value -= entry * inverse[later][column]
            inverse[row][column] = value
    return inverse


def solve_upper(matrix: Sequence[Sequence[int]], order: Sequence[int],
                rhs: Sequence[int]) -> List[int]:
    """
    Solve ``U·x = rhs`` for ``U`` upper unitriangular under ``order``.
    """
    solution = [0] * len(rhs)
    for i in reversed(range(len(order))):
        row = order[i]
        value = rhs[row]
        for later in order[i + 1:]:
            entry = matrix[row][later]
            if entry:
                value -= entry * solution[later]
        solution[row] = value
    return solution


def exact_product(left: Sequence[Sequence[int]], right: Sequence[Sequence[int]]) -> IntMatrix:
    # object dtype keeps Python integers, so nothing overflows
    product = np.array(left, dtype=object).reshape(len(left), -1) @ \
        np.array(right, dtype=object).reshape(len(right), -1)
    return [[int(entry) for entry in row] for row in product]


def is_identity(matrix: Sequence[Sequence[int]]) -> bool:
    return all(entry == (1 if i == j else 0)
               for i, row in enumerate(matrix) for j, entry in enumerate(row))
