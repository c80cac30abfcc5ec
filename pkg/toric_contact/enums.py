import sys
from enum import Enum

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self


class ContactTag(str, Enum):
    """토릭 접촉 구조의 접촉동형 분류 태그."""

    TIGHT = "tight"
    OT_HALF = "ot_half"  # xi_2, half-Lutz 계열
    OT_FULL = "ot_full"  # xi_1, full-Lutz 계열


class LutzKind(str, Enum):
    HALF = "half"
    FULL = "full"

    @classmethod
    def _missing_(cls, value: object) -> Self | None:
        # 대소문자 구분 없이 매칭합니다.
        value = str(value).lower()
        for member in cls:
            if member.value == value:
                return member
        return None


class Ordering(int, Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class AngleCategory(str, Enum):
    """[0, 2pi) 안의 각도 a 가 속하는 구간."""

    ZERO = "zero"
    BELOW_PI = "below_pi"  # (0, pi)
    PI = "pi"
    ABOVE_PI = "above_pi"  # (pi, 2pi)
