class ToricError(ValueError):
    """패키지의 모든 검증 오류의 기반 클래스.

    Attributes:
        code (str): CLI 의 JSON 오류 출력에 쓰이는 기계 판독용 코드
    """

    code: str = "toric_error"


class ZeroVector(ToricError):
    code = "zero_vector"


class NotPrimitive(ToricError):
    code = "not_coprime"


class DegenerateCone(ToricError):
    code = "degenerate_cone"


class NotUnimodular(ToricError):
    code = "not_unimodular"


class NotCoprime(ToricError):
    code = "not_coprime"


class TooShort(ToricError):
    code = "too_short"


class NoPivot(ToricError):
    code = "no_pivot"


class BadInput(ToricError):
    code = "bad_input"


class DivisionByZero(ToricError, ZeroDivisionError):
    code = "division_by_zero"


class NoTorsionC1(ToricError):
    code = "no_torsion_c1"


class LensMismatch(ToricError):
    code = "lens_mismatch"


class InvalidOptions(ToricError):
    code = "invalid_options"


class MalformedInput(ToricError):
    code = "malformed_json"


class UsageError(ToricError):
    code = "usage"
