"""선형 plumbing 과 모멘트 콘 사이의 양방향 변환."""

from __future__ import annotations

from collections.abc import Sequence

from toric_contact.domains import (
    ZERO_ANGLE,
    LShape,
    MomentCone,
    Plumbing,
    PlumbingFan,
    UnimodularMap,
)
from toric_contact.enums import AngleCategory
from toric_contact.exceptions import BadInput, NoPivot
from toric_contact.geometry.cone import delta, map_direction, normalize
from toric_contact.geometry.exact_angle import angle_add, angle_between, category
from toric_contact.plumbing.continued_fraction import continued_fraction_expand
from toric_contact.utils.common import get_logger

logger = get_logger()


def validate(chain: Sequence[int]) -> Plumbing:
    """사슬을 검증하여 Plumbing 을 만듭니다.

    Raises:
        TooShort: 구면이 2 개 미만인 경우
        NoPivot: 음이 아닌 자기교차수가 없는 경우
    """
    return Plumbing(tuple(chain))


def admissible_pivots(p: Plumbing) -> list[int]:
    """조각 (s_i, s_{i+1}) 이 음이 아닌 원소를 갖는 1-기반 인덱스 i 목록."""
    s = p.chain
    return [i for i in range(1, len(s)) if s[i - 1] >= 0 or s[i] >= 0]


def default_pivot(p: Plumbing) -> int:
    s = p.chain
    first = next(i for i in range(1, len(s) + 1) if s[i - 1] >= 0)
    return min(first, len(s) - 1)


def decompose(p: Plumbing, pivot: int | None = None) -> list[LShape]:
    """(s_1, 0), ..., (s_{i-1}, 0), (s_i, s_{i+1}), (0, s_{i+2}), ..., (0, s_n) 으로 분해합니다.

    Args:
        p (Plumbing): 분해할 plumbing
        pivot (int | None): 1-기반 피벗 인덱스. None 이면 s_i >= 0 인 가장 작은 i
            (i = n 이면 n - 1)

    Returns:
        list[LShape]: n - 1 개의 조각

    Raises:
        NoPivot: 지정한 피벗이 허용되지 않는 경우
    """
    if pivot is None:
        pivot = default_pivot(p)
    elif pivot not in admissible_pivots(p):
        raise NoPivot(f"index {pivot} is not an admissible pivot of {list(p.chain)}")

    s = p.chain
    pieces = [LShape(s[j - 1], 0) for j in range(1, pivot)]
    pieces.append(LShape(s[pivot - 1], s[pivot]))
    pieces.extend(LShape(0, s[j - 1]) for j in range(pivot + 2, len(s) + 1))
    logger.debug(f"decomposed {list(s)} at pivot {pivot}")
    return pieces


def fan(p: Plumbing, pivot: int | None = None) -> PlumbingFan:
    """조각들을 gluing 행렬로 이어 붙인 광선 부채꼴을 계산합니다.

    조각 j+1 은 T_{j+1} = T_j A_{j+1} 로 옮겨지고, 이웃한 조각은 T_j v_j = T_{j+1} u_{j+1}
    광선을 공유합니다. 변환된 조각 각도의 합은 R_1 에서 R_2 까지의 각도와 같습니다.
    """
    pieces = decompose(p, pivot)
    transforms = [UnimodularMap.identity()]
    for s in p.chain[1:-1]:
        transforms.append(transforms[-1] @ UnimodularMap.gluing(s))

    rays = [map_direction(transforms[0], pieces[0].u)]
    angles = []
    for piece, t in zip(pieces, transforms):
        start = map_direction(t, piece.u)
        end = map_direction(t, piece.v)
        rays.append(end)
        angles.append(angle_between(start, end))
    return PlumbingFan(tuple(pieces), tuple(transforms), tuple(rays), tuple(angles))


def cone_of_plumbing(p: Plumbing, pivot: int | None = None) -> MomentCone:
    """plumbing 경계의 모멘트 콘.

    광선은 R_1 = (-1, s_1), R_2 = A_2 ... A_{n-1} (s_n, -1) 이고, 2pi 의 배수는 광선 쌍만으로
    보이지 않으므로 winding 은 조각 각도를 더해 얻습니다.
    """
    f = fan(p, pivot)
    total = ZERO_ANGLE
    for angle in f.angles:
        total = angle_add(total, angle)
    return MomentCone(f.rays[0], f.rays[-1], total.winding)


def plumbing_of_cone(c: MomentCone) -> Plumbing:
    """콘을 경계로 갖는 선형 plumbing 을 만듭니다.

    t2 - t1 에서 반 바퀴 m 개를 벗겨 남은 각도를 (0, pi] 로 만들고, 그 콘의 plumbing 뒤에
    0 을 2m 개 붙입니다. (0, 0) 한 쌍이 정확히 pi 를 더합니다.
    """
    delta(c)
    fractional = category(c.r1, c.r2)
    if fractional is AngleCategory.ZERO:
        half_turns = 2 * c.winding - 1
    elif fractional is AngleCategory.ABOVE_PI:
        half_turns = 2 * c.winding + 1
    else:
        half_turns = 2 * c.winding
    stripped = c.r2 if half_turns % 2 == 0 else -c.r2

    if stripped == -c.r1:
        base = [0, 0, 0]
    else:
        canonical, _ = normalize(MomentCone(c.r1, stripped, 0))
        l, k = canonical.r2.x, canonical.r2.y  # noqa: E741
        base = [0, 0] if l == 0 else continued_fraction_expand(k, l)

    logger.debug(f"cone {c}: stripped {half_turns} half turns, base plumbing {base}")
    return Plumbing(tuple(base + [0] * (2 * half_turns)))


def blow_up(p: Plumbing, i: int) -> Plumbing:
    """i 번째와 i+1 번째 구면의 교점을 blow up 합니다.

    (..., s_i, s_{i+1}, ...) -> (..., s_i - 1, -1, s_{i+1} - 1, ...)

    Raises:
        BadInput: 1 <= i < n 이 아닌 경우
        NoPivot: 결과 사슬에 음이 아닌 원소가 없는 경우
    """
    s = list(p.chain)
    if not 1 <= i < len(s):
        raise BadInput(f"blow-up index must satisfy 1 <= i < {len(s)}, got {i}")
    return validate(s[: i - 1] + [s[i - 1] - 1, -1, s[i] - 1] + s[i + 1 :])
