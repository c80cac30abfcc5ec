"""plumbing 4-다양체의 정확한 불변량.

교차 형식, 부호수, 오일러 지표, 수반 공식으로 구한 PD(c_1), Gompf 의 theta 와 그 차이로
얻는 d_3 를 모두 유리수 위에서 계산합니다.
"""

from __future__ import annotations

from fractions import Fraction

from toric_contact.domains import IntersectionForm, InvariantsReport, Plumbing
from toric_contact.exceptions import LensMismatch, NoTorsionC1
from toric_contact.plumbing.chain import cone_of_plumbing
from toric_contact.topology.classify import lens_of_cone
from toric_contact.utils.common import get_logger
from toric_contact.utils.matrix import fraction_matrix, int_matrix

logger = get_logger()


def intersection_form(p: Plumbing) -> IntersectionForm:
    """대각 성분 s_i, 바로 위/아래 성분 1 인 삼중대각 행렬."""
    n = len(p)
    rows = [[0] * n for _ in range(n)]
    for i, s in enumerate(p.chain):
        rows[i][i] = s
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = 1
    return IntersectionForm(tuple(tuple(row) for row in rows))


def inertia(q: IntersectionForm) -> tuple[int, int, int]:
    """합동 대각화로 (양의 고유값 수, 음의 고유값 수, 영공간 차원) 을 구합니다.

    0 이 아닌 대각 원소가 있으면 그것으로 Schur 보수를 취하고, 남은 대각이 모두 0 이면
    0 아닌 비대각 원소 b 로 [[0, b], [b, 0]] 블록을 떼어냅니다. 이 쌍곡 블록은 양수와 음수를
    하나씩 기여합니다.

    Args:
        q (IntersectionForm): 대칭 정수 행렬

    Returns:
        tuple[int, int, int]: (b2+, b2-, nullity)
    """
    a = fraction_matrix(q.matrix)
    remaining = list(range(q.size))
    positive = negative = nullity = 0

    while remaining:
        pivot = next((i for i in remaining if a[i, i] != 0), None)
        if pivot is not None:
            if a[pivot, pivot] > 0:
                positive += 1
            else:
                negative += 1
            remaining.remove(pivot)
            for i in remaining:
                factor = a[i, pivot] / a[pivot, pivot]
                if factor:
                    for j in remaining:
                        a[i, j] -= factor * a[pivot, j]
            continue

        t = remaining.pop(0)
        partner = next((j for j in remaining if a[t, j] != 0), None)
        if partner is None:
            nullity += 1
            continue
        remaining.remove(partner)
        b = a[t, partner]
        positive += 1
        negative += 1
        for i in remaining:
            for j in remaining:
                a[i, j] -= (a[i, t] * a[partner, j] + a[i, partner] * a[t, j]) / b

    return positive, negative, nullity


def signature(q: IntersectionForm) -> int:
    positive, negative, _ = inertia(q)
    return positive - negative


def euler_characteristic(p: Plumbing) -> int:
    # 0-핸들 하나에 2-핸들 n 개
    return len(p) + 1


def _adjunction_rhs(p: Plumbing) -> list[int]:
    # 구면 C_j 에 대해 <c_1, [C_j]> = 2 - 2g + [C_j]^2 = 2 + s_j
    return [2 + s for s in p.chain]


def c1_pd(p: Plumbing) -> tuple[Fraction, ...]:
    """Q a = d (d_j = 2 + s_j) 를 정확한 가우스 소거로 풉니다. 자유 변수는 0 으로 둡니다.

    Raises:
        NoTorsionC1: 해가 없는 경우 (c_1 이 torsion 이 아님)
    """
    rows = intersection_form(p).entries
    n = len(rows)
    augmented = fraction_matrix(int_matrix([row + (d,) for row, d in zip(rows, _adjunction_rhs(p))]))

    pivots: list[int] = []
    row = 0
    for col in range(n):
        selected = next((i for i in range(row, n) if augmented[i, col] != 0), None)
        if selected is None:
            continue
        if selected != row:
            augmented[[row, selected]] = augmented[[selected, row]]
        augmented[row] = augmented[row] / augmented[row, col]
        for i in range(n):
            if i != row and augmented[i, col] != 0:
                augmented[i] = augmented[i] - augmented[i, col] * augmented[row]
        pivots.append(col)
        row += 1

    if any(augmented[i, n] != 0 for i in range(row, n)):
        raise NoTorsionC1(f"Q a = d has no rational solution for plumbing {list(p.chain)}")

    solution = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        solution[col] = Fraction(augmented[i, n])
    logger.debug(f"PD(c1) of {list(p.chain)} = {solution} (free columns zeroed)")
    return tuple(solution)


def c1_square(p: Plumbing) -> Fraction:
    """a^T Q a = a^T d. 특이 행렬이어도 해 집합 위에서 일정합니다."""
    return sum((a * d for a, d in zip(c1_pd(p), _adjunction_rhs(p))), Fraction(0))


def theta(p: Plumbing) -> Fraction:
    """theta = c_1^2 - 2 chi - 3 sigma."""
    return c1_square(p) - 2 * euler_characteristic(p) - 3 * signature(intersection_form(p))


def d3_difference(p1: Plumbing, p2: Plumbing) -> Fraction:
    """두 경계 접촉 구조의 d_3 차이 (theta_1 - theta_2) / 4.

    Raises:
        LensMismatch: 두 경계의 렌즈 라벨이 다른 경우
        NoTorsionC1: theta 를 정의할 수 없는 경우
    """
    lens1 = lens_of_cone(cone_of_plumbing(p1))
    lens2 = lens_of_cone(cone_of_plumbing(p2))
    if lens1 != lens2:
        raise LensMismatch(f"boundaries L({lens1.k}, {lens1.l}) and L({lens2.k}, {lens2.l}) differ")
    return (theta(p1) - theta(p2)) / 4


def invariants_report(p: Plumbing) -> InvariantsReport:
    q = intersection_form(p)
    chi = euler_characteristic(p)
    sigma = signature(q)
    pd = c1_pd(p)
    square = c1_square(p)
    return InvariantsReport(
        chi=chi,
        sigma=sigma,
        c1_pd=pd,
        c1_sq=square,
        theta=square - 2 * chi - 3 * sigma,
    )
