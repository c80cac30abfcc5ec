import math

import pytest

from tests.factories.cone_factory import ConeFactory
from toric_contact.domains import Direction, LensLabel, MomentCone
from toric_contact.enums import ContactTag
from toric_contact.exceptions import BadInput, NotCoprime
from toric_contact.geometry.cone import half_lutz
from toric_contact.topology.classify import (
    canonical_lens,
    classify,
    contact_class,
    contactomorphic,
    d2_distinguishes,
    first_homology,
    lens_of_cone,
    lens_representatives,
    reidemeister_equivalent,
    reidemeister_orbit,
)


def _sweep():
    """|좌표| <= 12 인 모든 원시 두 번째 광선과 winding 0..2"""
    for x in range(-12, 13):
        for y in range(-12, 13):
            if math.gcd(x, y) != 1:
                continue
            for winding in range(3):
                if winding == 0 and (x, y) == (1, 0):
                    continue
                yield MomentCone(Direction(1, 0), Direction(x, y), winding)


def _brute_orbit(k: int, l: int) -> set[int]:  # noqa: E741
    inverse = next(x for x in range(k) if (x * l) % k == 1)
    return {l % k, (-l) % k, inverse, (-inverse) % k}


class TestClassifyS3:
    """S^3 위의 세 가지 구조 분류 테스트"""

    def test_tight(self):
        """pi/2 콘은 (L(1, 0), tight) 인지 테스트"""
        result = classify(ConeFactory.s3_tight())
        assert result.lens == LensLabel(1, 0)
        assert result.contact is ContactTag.TIGHT
        assert result.h1 == ()

    def test_half(self):
        """3pi/2 콘은 xi_2 (half) 인지 테스트"""
        result = classify(ConeFactory.s3_half())
        assert result.lens == LensLabel(1, 0)
        assert result.contact is ContactTag.OT_HALF

    def test_full(self):
        """5pi/2 콘은 xi_1 (full) 인지 테스트"""
        result = classify(ConeFactory.s3_full())
        assert result.lens == LensLabel(1, 0)
        assert result.contact is ContactTag.OT_FULL


class TestContactClass:
    """contact_class 경계 사례 테스트"""

    def test_half_plane_is_tight(self):
        """t2 - t1 = pi 는 tight 인지 테스트"""
        assert contact_class(ConeFactory.half_plane()) is ContactTag.TIGHT
        assert lens_of_cone(ConeFactory.half_plane()) == LensLabel(0, 1)

    def test_exact_full_turns_are_half_class(self):
        """t2 - t1 = 2pi n 은 xi_2 로 분류되는지 테스트"""
        for winding in (1, 2, 3):
            c = MomentCone(Direction(1, 0), Direction(1, 0), winding)
            assert contact_class(c) is ContactTag.OT_HALF

    def test_three_pi_is_full_class(self):
        """t2 - t1 = 3pi 는 xi_1 로 분류되는지 테스트"""
        c = MomentCone(Direction(1, 0), Direction(-1, 0), 1)
        assert contact_class(c) is ContactTag.OT_FULL

    def test_tight_iff_at_most_pi(self):
        """tight 인 것과 t2 - t1 <= pi 인 것이 동치인지 전수 검사"""
        for c in _sweep():
            total = 2 * math.pi * c.winding + math.atan2(c.r2.y, c.r2.x) % (2 * math.pi)
            assert (contact_class(c) is ContactTag.TIGHT) == (total <= math.pi), c


class TestHomology:
    """first_homology 와 d2_distinguishes 테스트"""

    def test_homology_over_sweep(self):
        """H_1 이 렌즈 공간 종류에 맞는지 전수 검사"""
        for c in _sweep():
            k = abs(c.r2.y)
            if k >= 2:
                assert first_homology(c) == [k]
            elif k == 1:
                assert first_homology(c) == []
            else:
                assert first_homology(c) == [0]

    def test_d2_false_exactly_on_s3(self):
        """d_2 가 S^3 에서만 구별하지 못하는지 전수 검사"""
        for c in _sweep():
            assert d2_distinguishes(c) == (lens_of_cone(c).k != 1)

    def test_lens_label_of_l_5_2(self):
        """(1, 0), (2, 5) 콘은 L(5, 2) 인지 테스트"""
        c = ConeFactory.lens(5, 2)
        assert lens_of_cone(c) == LensLabel(5, 2)
        assert first_homology(c) == [5]


class TestReidemeister:
    """Reidemeister 궤도와 동치 테스트"""

    def test_orbit_matches_brute_force(self):
        """k <= 30 에서 궤도가 전수 계산과 같은지 테스트"""
        for k in range(2, 31):
            for l in range(1, k):  # noqa: E741
                if math.gcd(k, l) != 1:
                    continue
                assert set(reidemeister_orbit(k, l)) == _brute_orbit(k, l)

    def test_equivalence_matches_brute_force(self):
        """동치 판정이 전수 궤도 포함 관계와 같은지 테스트"""
        for k in range(2, 31):
            units = [l for l in range(1, k) if math.gcd(k, l) == 1]  # noqa: E741
            for l1 in units:
                orbit = _brute_orbit(k, l1)
                for l2 in units:
                    assert reidemeister_equivalent(k, l1, k, l2) == (l2 in orbit)

    def test_classic_pair(self):
        """L(7, 1) 과 L(7, 2) 는 구별되는지 테스트"""
        assert not reidemeister_equivalent(7, 1, 7, 2)
        assert reidemeister_equivalent(7, 2, 7, 3)  # 2 * 4 = 1 mod 7, -4 = 3
        assert lens_of_cone(ConeFactory.lens(7, 1)) != lens_of_cone(ConeFactory.lens(7, 2))

    def test_small_orders(self):
        """S^3 와 S^1 x S^2 의 궤도 테스트"""
        assert reidemeister_orbit(1, 0) == [0]
        assert reidemeister_orbit(0, 1) == [1]

    def test_non_coprime(self):
        """서로소가 아니면 NotCoprime 이 발생하는지 테스트"""
        with pytest.raises(NotCoprime):
            reidemeister_orbit(6, 4)


class TestCatalogue:
    """lens_representatives 와 contactomorphic 테스트"""

    @pytest.mark.parametrize("k, l", [(0, 1), (1, 0), (2, 1), (5, 2), (7, 2), (12, 5)])
    def test_representatives_classify_back(self, k, l):  # noqa: E741
        """각 대표가 자기 라벨과 태그로 분류되는지 테스트"""
        lens = LensLabel(k, l)
        structures = lens_representatives(lens)
        assert set(structures) == set(ContactTag)
        for tag, cone in structures.items():
            result = classify(cone)
            assert result.lens == lens
            assert result.contact is tag

    def test_representatives_use_canonical_label(self):
        """정규형이 아닌 라벨 L(7, 3) 은 L(7, 2) 로 정규화되는지 테스트"""
        assert canonical_lens(7, 3) == LensLabel(7, 2)
        for cone in lens_representatives(LensLabel(7, 3)).values():
            assert lens_of_cone(cone) == LensLabel(7, 2)

    def test_hand_built_label_matches_classification(self):
        """손으로 만든 L(7, 3) 라벨이 분류 결과와 같은지 테스트"""
        assert classify(ConeFactory.lens(7, 3)).lens == LensLabel(7, 3)
        assert lens_of_cone(ConeFactory.lens(12, 7)) == LensLabel(12, 7)

    def test_representatives_are_distinct(self):
        """대표끼리는 서로 접촉동형이 아닌지 테스트"""
        cones = list(lens_representatives(LensLabel(5, 2)).values())
        for i, a in enumerate(cones):
            for b in cones[i + 1 :]:
                assert not contactomorphic(a, b)

    def test_contactomorphic_across_orbit(self):
        """L(5, 2) 와 L(5, 3) 의 tight 구조는 접촉동형인지 테스트"""
        assert contactomorphic(ConeFactory.lens(5, 2), ConeFactory.lens(5, 3))
        assert contactomorphic(half_lutz(ConeFactory.lens(5, 2)), half_lutz(ConeFactory.lens(5, 3)))

    def test_invalid_label(self):
        """정규형이 아닌 라벨은 거부되는지 테스트"""
        with pytest.raises(BadInput):
            LensLabel(6, 4)
