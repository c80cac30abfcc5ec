from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from toric_contact.exceptions import BadInput, DivisionByZero


def continued_fraction_expand(k: int, l: int) -> list[int]:  # noqa: E741
    """k / l = s_1 - 1 / (s_2 - 1 / (... - 1 / s_n)) 인 (s_1, ..., s_n) 을 찾습니다.

    s_1 = floor(k / l) >= 0 이고 s_j <= -2 (j >= 2) 입니다. 분모 l_j 가 순감소하므로
    반복은 l 번 안에 끝납니다. l = 1 이면 [k] 대신 같은 값을 갖는 [k - 1, -1] 을 돌려주어
    길이가 항상 2 이상이 되게 합니다.

    Args:
        k (int): 분자, k >= 1
        l (int): 분모, l >= 1, gcd(k, l) = 1

    Returns:
        list[int]: plumbing 사슬

    Raises:
        BadInput: 전제 조건을 만족하지 않는 경우
    """
    if k < 1 or l < 1 or math.gcd(k, l) != 1:
        raise BadInput(f"continued fraction needs coprime k, l >= 1, got ({k}, {l})")
    if l == 1:
        return [k - 1, -1]

    value = Fraction(k, l)
    chain = [math.floor(value)]
    rest = value - chain[0]
    while rest:
        inverse = 1 / rest
        if inverse.denominator == 1:
            chain.append(-inverse.numerator)
            break
        s = -math.floor(inverse) - 1
        chain.append(s)
        rest = -inverse - s
    return chain


def continued_fraction_eval(chain: Sequence[int]) -> Fraction:
    """음의 연분수 s_1 - 1 / (s_2 - ...) 를 오른쪽부터 정확히 계산합니다.

    Raises:
        BadInput: 빈 사슬인 경우
        DivisionByZero: 중간 꼬리의 값이 0 이 되는 경우
    """
    if not chain:
        raise BadInput("empty chain")
    value = Fraction(chain[-1])
    for s in reversed(chain[:-1]):
        if value == 0:
            raise DivisionByZero(f"tail of {list(chain)} evaluates to zero")
        value = s - 1 / value
    return value
