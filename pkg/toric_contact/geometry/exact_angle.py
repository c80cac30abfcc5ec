"""유리 기울기 각도의 정확한 산술.

각도는 원시 가우스 정수 방향과 회전 수(winding)로 표현합니다.
arg(z1 * z2) = arg z1 + arg z2 이므로 각도의 합은 가우스 정수 곱으로 닫혀 있습니다.
"""

from __future__ import annotations

import math

from toric_contact.domains import X_AXIS, Direction, ExactAngle
from toric_contact.enums import AngleCategory, Ordering
from toric_contact.exceptions import ZeroVector


def direction_reduce(x: int, y: int) -> Direction:
    """(x, y) 를 gcd 로 나누어 원시 방향으로 만듭니다.

    Args:
        x (int): x 좌표
        y (int): y 좌표

    Returns:
        Direction: 부호와 비율이 보존된 원시 벡터

    Raises:
        ZeroVector: (x, y) = (0, 0) 인 경우
    """
    if x == 0 and y == 0:
        raise ZeroVector("cannot reduce the zero vector")
    g = math.gcd(x, y)
    return Direction(x // g, y // g)


def quadrant(u: Direction) -> int:
    """arg(u) 가 속한 사분면. 축 위의 광선은 반시계 방향으로 시작하는 사분면에 속합니다."""
    if u.x > 0 and u.y >= 0:
        return 0
    if u.x <= 0 and u.y > 0:
        return 1
    if u.x < 0 and u.y <= 0:
        return 2
    return 3


def cross(u: Direction, v: Direction) -> int:
    return u.x * v.y - u.y * v.x


def arg_compare(u: Direction, v: Direction) -> Ordering:
    """[0, 2pi) 에서 arg(u) 와 arg(v) 를 비교합니다."""
    qu, qv = quadrant(u), quadrant(v)
    if qu != qv:
        return Ordering.LESS if qu < qv else Ordering.GREATER
    c = cross(u, v)
    if c > 0:
        return Ordering.LESS
    if c < 0:
        return Ordering.GREATER
    return Ordering.EQUAL


def gaussian_product(u: Direction, v: Direction) -> Direction:
    return direction_reduce(u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x)


def angle_between(u: Direction, v: Direction) -> ExactAngle:
    """arg(v) - arg(u) mod 2pi 를 v * conj(u) 로 계산합니다."""
    return ExactAngle(direction_reduce(v.x * u.x + v.y * u.y, v.y * u.x - v.x * u.y), 0)


def angle_add(a: ExactAngle, b: ExactAngle) -> ExactAngle:
    """두 정확한 각도의 합.

    곱의 방향이 첫 피연산자보다 앞서면 2pi 를 넘긴 것이므로 한 바퀴를 올립니다.
    """
    product = gaussian_product(a.dir, b.dir)
    carry = 0
    if b.dir != X_AXIS and arg_compare(product, a.dir) is Ordering.LESS:
        carry = 1
    return ExactAngle(product, a.winding + b.winding + carry)


def angle_compare(a: ExactAngle, b: ExactAngle) -> Ordering:
    if a.winding != b.winding:
        return Ordering.LESS if a.winding < b.winding else Ordering.GREATER
    return arg_compare(a.dir, b.dir)


def category(u: Direction, v: Direction) -> AngleCategory:
    """arg(v) - arg(u) mod 2pi 의 구간을 외적 부호로 판정합니다."""
    if u == v:
        return AngleCategory.ZERO
    if u == -v:
        return AngleCategory.PI
    return AngleCategory.BELOW_PI if cross(u, v) > 0 else AngleCategory.ABOVE_PI


def as_radians(a: ExactAngle) -> float:
    # 렌더링과 테스트 오라클 전용
    return 2 * math.pi * a.winding + math.atan2(a.dir.y, a.dir.x) % (2 * math.pi)
