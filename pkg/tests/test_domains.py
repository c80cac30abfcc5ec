from fractions import Fraction

import numpy as np
import pytest

from toric_contact.domains import (
    Direction,
    ExactAngle,
    IntersectionForm,
    LensLabel,
    LShape,
    MomentCone,
    Plumbing,
    Rational,
    RenderOptions,
    UnimodularMap,
)
from toric_contact.enums import ContactTag, LutzKind
from toric_contact.exceptions import (
    BadInput,
    DegenerateCone,
    InvalidOptions,
    NoPivot,
    NotPrimitive,
    NotUnimodular,
    ToricError,
    TooShort,
    ZeroVector,
)


class TestDirection:
    """Direction 도메인 객체 테스트"""

    def test_valid_direction(self):
        """원시 벡터로 생성되는지 테스트"""
        u = Direction(2, -3)
        assert u.as_tuple() == (2, -3)
        assert -u == Direction(-2, 3)

    def test_zero_vector(self):
        """(0, 0) 은 ZeroVector 인지 테스트"""
        with pytest.raises(ZeroVector):
            Direction(0, 0)

    @pytest.mark.parametrize("x, y", [(2, 0), (4, 6), (-3, 9)])
    def test_not_primitive(self, x, y):
        """원시 벡터가 아니면 NotPrimitive 인지 테스트"""
        with pytest.raises(NotPrimitive):
            Direction(x, y)

    def test_frozen(self):
        """불변 객체인지 테스트"""
        with pytest.raises(AttributeError):
            Direction(1, 0).x = 2


class TestMomentCone:
    """MomentCone 과 ExactAngle 테스트"""

    def test_full_turn_with_same_rays(self):
        """광선이 같아도 winding 이 있으면 허용되는지 테스트"""
        assert MomentCone(Direction(1, 1), Direction(1, 1), 1).winding == 1

    def test_degenerate(self):
        """winding 0 에 같은 광선은 DegenerateCone 인지 테스트"""
        with pytest.raises(DegenerateCone):
            MomentCone(Direction(1, 1), Direction(1, 1))

    def test_negative_winding(self):
        """음수 winding 은 거부되는지 테스트"""
        with pytest.raises(BadInput):
            MomentCone(Direction(1, 0), Direction(0, 1), -1)
        with pytest.raises(BadInput):
            ExactAngle(Direction(1, 0), -1)


class TestUnimodularMap:
    """UnimodularMap 테스트"""

    def test_not_unimodular(self):
        """행렬식이 1 이 아니면 NotUnimodular 인지 테스트"""
        with pytest.raises(NotUnimodular):
            UnimodularMap(1, 0, 0, -1)

    def test_gluing_and_product(self):
        """gluing 행렬 곱과 벡터 작용 테스트"""
        a = UnimodularMap.gluing(-1)
        assert a.rows() == ((1, -1), (1, 0))
        assert (UnimodularMap.identity() @ a) == a
        # A(-1) 은 위수 6
        power = UnimodularMap.identity()
        for _ in range(6):
            power = power @ a
        assert power == UnimodularMap.identity()
        assert UnimodularMap.shear(2).map_vector(1, 1) == (3, 1)


class TestLensLabel:
    """LensLabel 테스트"""

    @pytest.mark.parametrize("k, l", [(0, 1), (1, 0), (2, 1), (7, 3)])
    def test_valid_labels(self, k, l):  # noqa: E741
        """허용되는 라벨 테스트"""
        assert LensLabel(k, l).k == k

    @pytest.mark.parametrize("k, l, expected", [(7, 3, 2), (7, 5, 2), (7, 6, 1), (5, 3, 2), (12, 7, 5), (2, 1, 1)])
    def test_label_is_canonicalized(self, k, l, expected):  # noqa: E741
        """같은 Reidemeister 궤도의 라벨은 최솟값으로 저장되어 서로 같은지 테스트"""
        label = LensLabel(k, l)
        assert label.l == expected
        assert label == LensLabel(k, expected)
        assert hash(label) == hash(LensLabel(k, expected))

    @pytest.mark.parametrize("k, l", [(-1, 0), (0, 0), (1, 1), (6, 4), (5, 5), (5, 0)])
    def test_invalid_labels(self, k, l):  # noqa: E741
        """허용되지 않는 라벨 테스트"""
        with pytest.raises(BadInput):
            LensLabel(k, l)


class TestPlumbing:
    """Plumbing 과 LShape 테스트"""

    def test_chain_normalized_to_tuple(self):
        """사슬이 int 튜플로 저장되는지 테스트"""
        p = Plumbing([0, -2])
        assert p.chain == (0, -2)
        assert len(p) == 2

    @pytest.mark.parametrize("chain", [(1.7, 0), (0, -2.0), (Fraction(1, 2), 0), (True, 0), ("0", 0)])
    def test_non_integer_chain(self, chain):
        """정수가 아닌 원소는 잘라내지 않고 BadInput 인지 테스트"""
        with pytest.raises(BadInput):
            Plumbing(chain)

    def test_numpy_integers_accepted(self):
        """numpy 정수는 파이썬 int 로 저장되는지 테스트"""
        p = Plumbing((np.int64(0), np.int32(-2)))
        assert p.chain == (0, -2)
        assert all(type(s) is int for s in p.chain)

    def test_too_short(self):
        """원소가 하나면 TooShort 인지 테스트"""
        with pytest.raises(TooShort):
            Plumbing((3,))

    def test_no_pivot(self):
        """모두 음수면 NoPivot 인지 테스트"""
        with pytest.raises(NoPivot):
            Plumbing((-1, -1))

    def test_lshape_rays(self):
        """L-shape 의 광선 u, v 테스트"""
        piece = LShape(3, -1)
        assert (piece.u, piece.v) == (Direction(-1, 3), Direction(-1, -1))

    def test_lshape_needs_non_negative_entry(self):
        """두 원소가 모두 음수인 L-shape 는 거부되는지 테스트"""
        with pytest.raises(BadInput):
            LShape(-1, -2)


class TestIntersectionFormAndOptions:
    """IntersectionForm 과 RenderOptions 테스트"""

    def test_intersection_form(self):
        """대칭 행렬은 허용되는지 테스트"""
        q = IntersectionForm(((0, 1), (1, -2)))
        assert q.size == 2
        assert q.matrix[1, 1] == -2

    def test_non_square(self):
        """정사각이 아니면 거부되는지 테스트"""
        with pytest.raises(BadInput):
            IntersectionForm(((0, 1, 0), (1, 0, 0)))

    @pytest.mark.parametrize("entries", [((0.5, 1), (1, 0)), ((0, 1), (1, Fraction(-3, 2))), ((0, True), (True, 0))])
    def test_non_integer_entries(self, entries):
        """정수가 아닌 교차 형식 원소는 BadInput 인지 테스트"""
        with pytest.raises(BadInput):
            IntersectionForm(entries)

    def test_render_options_defaults(self):
        """렌더링 옵션 기본값 테스트"""
        options = RenderOptions()
        assert (options.canvas_size, options.ray_length, options.show_labels) == (400, 160.0, True)

    def test_render_options_invalid(self):
        """잘못된 옵션은 InvalidOptions 인지 테스트"""
        with pytest.raises(InvalidOptions):
            RenderOptions(canvas_size=0)


class TestEnumsAndErrors:
    """열거형과 예외 계층 테스트"""

    def test_lutz_kind_case_insensitive(self):
        """LutzKind 가 대소문자 구분 없이 매칭되는지 테스트"""
        assert LutzKind("Half") is LutzKind.HALF
        assert LutzKind("FULL") is LutzKind.FULL
        with pytest.raises(ValueError):
            LutzKind("quarter")

    def test_contact_tag_values(self):
        """ContactTag 값이 JSON 출력 문자열인지 테스트"""
        assert [tag.value for tag in ContactTag] == ["tight", "ot_half", "ot_full"]

    def test_errors_are_value_errors(self):
        """모든 도메인 오류가 ToricError 이자 ValueError 인지 테스트"""
        for exc in (ZeroVector, NotPrimitive, DegenerateCone, BadInput, TooShort):
            assert issubclass(exc, ToricError)
            assert issubclass(exc, ValueError)
        assert NotPrimitive.code == "not_coprime"

    def test_rational_is_fraction(self):
        """Rational 별칭이 Fraction 인지 테스트"""
        assert Rational(1, 2) == Fraction(1, 2)
