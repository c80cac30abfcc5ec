from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from toric_contact.enums import ContactTag
from toric_contact.exceptions import (
    BadInput,
    DegenerateCone,
    InvalidOptions,
    NoPivot,
    NotPrimitive,
    NotUnimodular,
    TooShort,
    ZeroVector,
)
from toric_contact.utils.matrix import int_matrix, is_symmetric

# 정확한 유리수 타입
Rational = Fraction


def _integer(value, what: str) -> int:
    # numpy 정수는 받고 bool, float, Fraction 은 거부
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise BadInput(f"{what} must be integers, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class Direction:
    """유리 기울기를 갖는 각도를 대신하는 원시(primitive) 정수 벡터.

    Attributes:
        x (int): x 좌표
        y (int): y 좌표

    Raises:
        ZeroVector: (0, 0) 인 경우
        NotPrimitive: gcd(|x|, |y|) != 1 인 경우
    """

    x: int
    y: int

    def __post_init__(self):
        if self.x == 0 and self.y == 0:
            raise ZeroVector("direction must be a non-zero vector")
        if math.gcd(self.x, self.y) != 1:
            raise NotPrimitive(f"direction ({self.x}, {self.y}) is not primitive")

    def __neg__(self) -> Direction:
        return Direction(-self.x, -self.y)

    def as_tuple(self) -> tuple[int, int]:
        return self.x, self.y


X_AXIS = Direction(1, 0)
NEG_X_AXIS = Direction(-1, 0)


@dataclass(frozen=True)
class ExactAngle:
    """원의 보편 피복 위의 유리 기울기 점: 2pi * winding + arg(dir)."""

    dir: Direction
    winding: int = 0

    def __post_init__(self):
        if self.winding < 0:
            raise BadInput("winding must be non-negative")


ZERO_ANGLE = ExactAngle(X_AXIS, 0)
HALF_TURN = ExactAngle(NEG_X_AXIS, 0)


@dataclass(frozen=True)
class MomentCone:
    """비자유 작용을 갖는 접촉 토릭 3-다양체의 모멘트 콘.

    첫 번째 광선 r1 에서 반시계 방향으로 winding 바퀴를 더 돌아 r2 에 이르는 각도가
    t2 - t1 입니다.

    Attributes:
        r1 (Direction): 첫 번째 광선 (각도 t1)
        r2 (Direction): 두 번째 광선
        winding (int): t2 - t1 안에 들어있는 완전한 회전의 수
    """

    r1: Direction
    r2: Direction
    winding: int = 0

    def __post_init__(self):
        if self.winding < 0:
            raise BadInput("winding must be non-negative")
        if self.winding == 0 and self.r1 == self.r2:
            raise DegenerateCone("cone spans a zero angle")


@dataclass(frozen=True)
class UnimodularMap:
    """SL(2, Z) 원소. 행은 (a, b), (c, d) 입니다."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise NotUnimodular(f"determinant of {self.rows()} is not 1")

    @classmethod
    def identity(cls) -> UnimodularMap:
        return cls(1, 0, 0, 1)

    @classmethod
    def shear(cls, n: int) -> UnimodularMap:
        return cls(1, n, 0, 1)

    @classmethod
    def gluing(cls, s: int) -> UnimodularMap:
        """연속한 L-shape 를 붙이는 행렬 A = [[-s, -1], [1, 0]]."""
        return cls(-s, -1, 1, 0)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def __matmul__(self, other: UnimodularMap) -> UnimodularMap:
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def map_vector(self, x: int, y: int) -> tuple[int, int]:
        return self.a * x + self.b * y, self.c * x + self.d * y


def lens_orbit(k: int, l: int) -> list[int]:  # noqa: E741
    """k >= 2, gcd(l, k) = 1 일 때 L(k, l) 과 미분동형인 l' 잉여류 {+-l, +-l^-1} mod k."""
    inverse = pow(l, -1, k)
    return sorted({l % k, -l % k, inverse, -inverse % k})


@dataclass(frozen=True)
class LensLabel:
    """렌즈 공간 L(k, l) 의 정규 대표.

    k >= 2 이면 1 <= l < k 인 어떤 l 을 받아도 Reidemeister 궤도의 최솟값으로 바꾸어
    저장하므로, 같은 렌즈 공간의 라벨은 서로 같습니다.

    Attributes:
        k (int): 기본군의 위수 (S^1 x S^2 이면 0)
        l (int): Reidemeister 궤도의 최솟값
    """

    k: int
    l: int  # noqa: E741

    def __post_init__(self):
        if self.k < 0:
            raise BadInput("lens order must be non-negative")
        if self.k == 0 and self.l != 1:
            raise BadInput("S^1 x S^2 is labelled L(0, 1)")
        if self.k == 1 and self.l != 0:
            raise BadInput("S^3 is labelled L(1, 0)")
        if self.k >= 2:
            if not (1 <= self.l < self.k and math.gcd(self.l, self.k) == 1):
                raise BadInput(f"L({self.k}, {self.l}) is not a valid lens label")
            object.__setattr__(self, "l", min(lens_orbit(self.k, self.l)))


@dataclass(frozen=True)
class ClassificationResult:
    lens: LensLabel
    contact: ContactTag
    h1: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class Plumbing:
    """구면 위의 선형 plumbing (s_1, ..., s_n).

    Raises:
        BadInput: 정수가 아닌 원소가 있는 경우
        TooShort: n < 2 인 경우
        NoPivot: 모든 s_i 가 음수인 경우
    """

    chain: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(_integer(s, "self-intersections") for s in self.chain))
        self.validate()

    def validate(self) -> None:
        if len(self.chain) < 2:
            raise TooShort(f"a linear plumbing needs at least two spheres, got {len(self.chain)}")
        if all(s < 0 for s in self.chain):
            raise NoPivot(f"plumbing {list(self.chain)} has no non-negative self-intersection")

    def __len__(self) -> int:
        return len(self.chain)


@dataclass(frozen=True)
class LShape:
    """두 구면 plumbing 조각 (a, b) 의 모멘트 상. 광선은 u = (-1, a), v = (b, -1)."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 and self.b < 0:
            raise BadInput(f"L-shape ({self.a}, {self.b}) has no non-negative entry")

    @property
    def u(self) -> Direction:
        return Direction(-1, self.a)

    @property
    def v(self) -> Direction:
        return Direction(self.b, -1)


@dataclass(frozen=True)
class PlumbingFan:
    """plumbing 모멘트 상의 광선 부채꼴.

    Attributes:
        pieces (tuple[LShape, ...]): 분해된 n - 1 개의 L-shape
        transforms (tuple[UnimodularMap, ...]): 누적 gluing 행렬 T_j = A_2 ... A_j
        rays (tuple[Direction, ...]): T_1 u_1, T_1 v_1, ..., T_{n-1} v_{n-1} (n 개)
        angles (tuple[ExactAngle, ...]): 변환된 각 조각의 각도
    """

    pieces: tuple[LShape, ...]
    transforms: tuple[UnimodularMap, ...]
    rays: tuple[Direction, ...]
    angles: tuple[ExactAngle, ...]


@dataclass(frozen=True)
class IntersectionForm:
    """대칭 정수 교차 형식. 원소는 튜플로 보관하고 계산 시 numpy 배열로 꺼냅니다."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(_integer(x, "intersection form entries") for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if not is_symmetric(self.matrix):
            raise BadInput("intersection form must be a symmetric square matrix")

    @property
    def matrix(self) -> np.ndarray:
        return int_matrix(self.entries)

    @property
    def size(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class RenderOptions:
    canvas_size: int = 400
    ray_length: float = 160.0
    show_labels: bool = True

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.canvas_size < 64:
            raise InvalidOptions("canvas_size must be at least 64 pixels")
        if not self.ray_length > 0:
            raise InvalidOptions("ray_length must be positive")


@dataclass(frozen=True)
class InvariantsReport:
    chi: int
    sigma: int
    c1_pd: tuple[Fraction, ...]
    c1_sq: Fraction
    theta: Fraction
