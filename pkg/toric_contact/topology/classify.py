"""렌즈 공간 인식과 접촉동형 분류.

두 콘이 접촉동형일 필요충분조건은 렌즈 라벨과 접촉 태그가 모두 같은 것입니다.
"""

from __future__ import annotations

import math

from toric_contact.domains import X_AXIS, ClassificationResult, Direction, LensLabel, MomentCone, lens_orbit
from toric_contact.enums import AngleCategory, ContactTag
from toric_contact.exceptions import NotCoprime
from toric_contact.geometry.cone import delta, full_lutz, half_lutz, normalize
from toric_contact.geometry.exact_angle import category
from toric_contact.topology.smith import class_is_zero, invariant_factors
from toric_contact.utils.common import get_logger

logger = get_logger()


def _second_ray(c: MomentCone) -> tuple[int, int]:
    canonical, _ = normalize(c)
    return canonical.r2.x, canonical.r2.y


def _check_coprime(k: int, l: int) -> None:  # noqa: E741
    if math.gcd(l, k) != 1:
        raise NotCoprime(f"gcd({l}, {k}) != 1")


def reidemeister_orbit(k: int, l: int) -> list[int]:  # noqa: E741
    """L(k, l) 와 미분동형인 L(k, l') 들의 l' 잉여류 {+-l, +-l^-1} mod k.

    Raises:
        NotCoprime: gcd(l, k) != 1 인 경우
    """
    k = abs(k)
    _check_coprime(k, l)
    if k == 0:
        return [1]
    if k == 1:
        return [0]
    return lens_orbit(k, l)


def reidemeister_equivalent(k: int, l: int, k2: int, l2: int) -> bool:  # noqa: E741
    _check_coprime(abs(k), l)
    _check_coprime(abs(k2), l2)
    if abs(k) != abs(k2):
        return False
    return l2 % abs(k) in reidemeister_orbit(k, l) if abs(k) >= 2 else True


def canonical_lens(k: int, l: int) -> LensLabel:  # noqa: E741
    """L(k, l) 의 Reidemeister 궤도에서 가장 작은 l 을 고른 정규 라벨."""
    if k == 0:
        return LensLabel(0, 1)
    return LensLabel(abs(k), min(reidemeister_orbit(k, l)))


def lens_of_cone(c: MomentCone) -> LensLabel:
    l, k = _second_ray(c)  # noqa: E741
    return canonical_lens(k, l)


def contact_class(c: MomentCone) -> ContactTag:
    """t2 - t1 = 2pi w + a 로부터 접촉 구조의 종류를 정합니다.

    w = 0, 0 < a <= pi 이면 tight, w >= 1, 0 < a <= pi 이면 xi_1 (full),
    나머지 (a = 0 또는 pi < a < 2pi) 는 xi_2 (half) 입니다.
    """
    delta(c)
    fractional = category(c.r1, c.r2)
    if fractional in (AngleCategory.BELOW_PI, AngleCategory.PI):
        return ContactTag.TIGHT if c.winding == 0 else ContactTag.OT_FULL
    return ContactTag.OT_HALF


def relation_matrix(c: MomentCone) -> list[list[int]]:
    """H_1 의 관계 행렬. 열은 관계 e_2 = 0 과 k e_1 - l e_2 = 0 입니다."""
    l, k = _second_ray(c)  # noqa: E741
    return [[0, k], [1, -l]]


def first_homology(c: MomentCone) -> list[int]:
    return invariant_factors(relation_matrix(c))


def d2_distinguishes(c: MomentCone) -> bool:
    """t1 쪽 원 궤도(생성원 e_1)의 호몰로지 류가 0 이 아닌지 판정합니다.

    참이면 두 overtwisted 구조는 d_2 만으로 구별됩니다. S^3 에서만 거짓입니다.
    """
    return not class_is_zero(relation_matrix(c), (1, 0))


def classify(c: MomentCone) -> ClassificationResult:
    result = ClassificationResult(
        lens=lens_of_cone(c),
        contact=contact_class(c),
        h1=tuple(first_homology(c)),
    )
    logger.debug(f"classified {c} as {result}")
    return result


def contactomorphic(c1: MomentCone, c2: MomentCone) -> bool:
    a, b = classify(c1), classify(c2)
    return a.lens == b.lens and a.contact == b.contact


def lens_representatives(lens: LensLabel) -> dict[ContactTag, MomentCone]:
    """L(k, l) 위의 토릭 접촉 구조 전체 목록 (접촉동형 기준, 중복 없음).

    tight 대표는 (1, 0) 과 (l, k) 가 펼치는 볼록 콘이고, 두 overtwisted 구조는
    그것에 half-Lutz, full-Lutz twist 를 한 것입니다. LensLabel 은 이미 정규형입니다.
    """
    second = Direction(-1, 0) if lens.k == 0 else Direction(lens.l, lens.k)
    tight = MomentCone(X_AXIS, second, 0)
    return {
        ContactTag.TIGHT: tight,
        ContactTag.OT_HALF: half_lutz(tight),
        ContactTag.OT_FULL: full_lutz(tight),
    }
