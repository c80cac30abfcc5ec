from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from toric_contact.utils.common import get_logger
from toric_contact.utils.matrix import identity, int_matrix

logger = get_logger()


def _smallest_pivot(d: np.ndarray, t: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    rows, cols = d.shape
    for i in range(t, rows):
        for j in range(t, cols):
            if d[i, j] != 0 and (best is None or abs(d[i, j]) < abs(d[best])):
                best = (i, j)
    return best


def _first_indivisible(d: np.ndarray, t: int) -> int | None:
    rows, cols = d.shape
    for i in range(t + 1, rows):
        for j in range(t + 1, cols):
            if d[i, j] % d[t, t] != 0:
                return i
    return None


def smith_normal_form(m: np.ndarray | Iterable[Iterable[int]]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """정수 행렬의 Smith 표준형.

    가장 작은 0 아닌 원소를 피벗으로 골라 행/열 기본 연산으로 소거하고, 남은 원소가
    피벗으로 나누어떨어지지 않으면 그 행을 피벗 행에 더해 다시 소거합니다.

    Args:
        m: 임의의 정수 행렬

    Returns:
        tuple: (U, D, V). U, V 는 행렬식 +-1 이고 D = U @ m @ V 는 d_1 | d_2 | ... 인
        음이 아닌 대각 행렬
    """
    d = int_matrix(m.tolist() if isinstance(m, np.ndarray) else m)
    rows, cols = d.shape
    u, v = identity(rows), identity(cols)

    for t in range(min(rows, cols)):
        while True:
            pivot = _smallest_pivot(d, t)
            if pivot is None:
                logger.debug(f"smith normal form finished early at {t}")
                return u, d, v
            i, j = pivot
            if i != t:
                d[[t, i]] = d[[i, t]]
                u[[t, i]] = u[[i, t]]
            if j != t:
                d[:, [t, j]] = d[:, [j, t]]
                v[:, [t, j]] = v[:, [j, t]]

            clear = True
            for i in range(t + 1, rows):
                q = d[i, t] // d[t, t]
                if q:
                    d[i] -= q * d[t]
                    u[i] -= q * u[t]
                if d[i, t] != 0:
                    clear = False
            for j in range(t + 1, cols):
                q = d[t, j] // d[t, t]
                if q:
                    d[:, j] -= q * d[:, t]
                    v[:, j] -= q * v[:, t]
                if d[t, j] != 0:
                    clear = False

            if clear:
                bad_row = _first_indivisible(d, t)
                if bad_row is None:
                    break
                d[t] += d[bad_row]
                u[t] += u[bad_row]

        if d[t, t] < 0:
            d[t] = -d[t]
            u[t] = -u[t]

    return u, d, v


def invariant_factors(m: np.ndarray | Iterable[Iterable[int]]) -> list[int]:
    """coker(m) 의 1 이 아닌 불변 인자. 0 은 Z 성분을 뜻합니다."""
    _, d, _ = smith_normal_form(m)
    rows, cols = d.shape
    diagonal = [d[i, i] for i in range(min(rows, cols))]
    factors = [int(x) for x in diagonal if x != 1]
    return factors + [0] * (rows - len(diagonal))


def class_is_zero(m: np.ndarray | Iterable[Iterable[int]], vector: Iterable[int]) -> bool:
    """vector 가 coker(m) 에서 0 인지, 즉 m 의 열들이 생성하는 격자에 속하는지 판정합니다."""
    u, d, _ = smith_normal_form(m)
    rows, cols = d.shape
    image = u.dot(np.array([int(x) for x in vector], dtype=object))
    for i in range(rows):
        divisor = d[i, i] if i < cols else 0
        if divisor == 0:
            if image[i] != 0:
                return False
        elif image[i] % divisor != 0:
            return False
    return True
