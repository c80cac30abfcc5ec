from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction

import numpy as np


def int_matrix(rows: Iterable[Iterable[int]]) -> np.ndarray:
    """임의 정밀도 정수 행렬을 만듭니다.

    dtype=object 로 두어 원소가 파이썬 int 로 남도록 합니다 (64비트 오버플로 없음).

    Args:
        rows (Iterable[Iterable[int]]): 행 목록

    Returns:
        np.ndarray: object dtype 의 2차원 배열
    """
    data = [[int(x) for x in row] for row in rows]
    matrix = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        for j, value in enumerate(row):
            matrix[i, j] = value
    return matrix


def identity(n: int) -> np.ndarray:
    return int_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def fraction_matrix(matrix: np.ndarray) -> np.ndarray:
    """정수 행렬을 Fraction 원소의 object 배열로 복사합니다."""
    out = np.empty(matrix.shape, dtype=object)
    for index, value in np.ndenumerate(matrix):
        out[index] = Fraction(value)
    return out


def is_symmetric(matrix: np.ndarray) -> bool:
    rows, cols = matrix.shape
    if rows != cols:
        return False
    return all(matrix[i, j] == matrix[j, i] for i in range(rows) for j in range(i + 1, cols))

