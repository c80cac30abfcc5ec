from __future__ import annotations

from toric_contact.domains import HALF_TURN, Direction, ExactAngle, MomentCone, UnimodularMap
from toric_contact.enums import LutzKind
from toric_contact.exceptions import DegenerateCone
from toric_contact.geometry.exact_angle import angle_add, angle_between, direction_reduce
from toric_contact.utils.common import get_logger

logger = get_logger()


def ext_gcd(p: int, q: int) -> tuple[int, int, int]:
    """확장 유클리드 알고리즘.

    Returns:
        tuple[int, int, int]: a * p + b * q = g 를 만족하는 (g, a, b), g >= 0
    """
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def delta(c: MomentCone) -> ExactAngle:
    """콘의 전체 각도 t2 - t1.

    Raises:
        DegenerateCone: winding = 0 이고 두 광선이 같은 경우
    """
    if c.winding == 0 and c.r1 == c.r2:
        raise DegenerateCone("cone spans a zero angle")
    return ExactAngle(angle_between(c.r1, c.r2).dir, c.winding)


def map_direction(m: UnimodularMap, u: Direction) -> Direction:
    return direction_reduce(*m.map_vector(u.x, u.y))


def apply(m: UnimodularMap, c: MomentCone) -> MomentCone:
    """SL(2, Z) 변환을 콘에 적용합니다. 방향 보존 사상이므로 winding 은 변하지 않습니다."""
    return MomentCone(map_direction(m, c.r1), map_direction(m, c.r2), c.winding)


def normalize(c: MomentCone) -> tuple[MomentCone, UnimodularMap]:
    """콘을 정규형으로 보내고, 그 변환을 함께 돌려줍니다.

    첫 광선은 (1, 0) 으로 보내고 두 번째 광선 (l, k) 는 shear 로 0 <= l < |k| 가 되게 합니다.
    (1, 0) 의 안정화 부분군이 정확히 shear 들이므로 정규형은 유일합니다.

    Args:
        c (MomentCone): 정규화할 콘

    Returns:
        tuple[MomentCone, UnimodularMap]: (정규 콘, apply(m, c) = 정규 콘 인 m)
    """
    delta(c)
    p, q = c.r1.x, c.r1.y
    _, a, b = ext_gcd(p, q)
    m = UnimodularMap(a, b, -q, p)
    l, k = m.map_vector(c.r2.x, c.r2.y)  # noqa: E741
    if k != 0:
        m = UnimodularMap.shear((l % abs(k) - l) // k) @ m
    out = apply(m, c)
    logger.debug(f"normalized {c} -> {out} via {m.rows()}")
    return out, m


def half_lutz(c: MomentCone) -> MomentCone:
    """half-Lutz twist: Y(t1, t2) -> Y(t1, t2 + pi)."""
    moved = angle_add(delta(c), HALF_TURN)
    return MomentCone(c.r1, -c.r2, moved.winding)


def full_lutz(c: MomentCone) -> MomentCone:
    return MomentCone(c.r1, c.r2, c.winding + 1)


def lutz(c: MomentCone, kind: LutzKind) -> MomentCone:
    if kind is LutzKind.HALF:
        return half_lutz(c)
    return full_lutz(c)


def toric_equivalent(c1: MomentCone, c2: MomentCone) -> bool:
    return normalize(c1)[0] == normalize(c2)[0]
