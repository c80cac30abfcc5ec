from __future__ import annotations

import json
import sys
from collections.abc import Callable
from functools import wraps

from toric_contact.exceptions import ToricError, UsageError
from toric_contact.utils.common import get_logger

logger = get_logger()


def _exit_code_for(
    exc: Exception, fail_for: tuple[type[Exception], ...], usage_for: tuple[type[Exception], ...]
) -> int | None:
    if any(isinstance(exc, exc_type) for exc_type in usage_for):
        # 사용법 오류
        return 2

    elif any(isinstance(exc, exc_type) for exc_type in fail_for):
        # 검증 오류
        return 1

    return None


def _report(exc: Exception) -> None:
    code = getattr(exc, "code", type(exc).__name__)
    sys.stderr.write(json.dumps({"error": code, "detail": str(exc)}) + "\n")


def command(
    _func: Callable | None = None,
    *,
    fail_for: tuple[type[Exception], ...] = (ToricError,),
    usage_for: tuple[type[Exception], ...] = (UsageError,),
):
    """CLI 하위 명령을 종료 코드를 돌려주는 함수로 감쌉니다.

    usage_for 예외는 2, fail_for 예외는 1 로 바꾸고 오류 스트림에 한 줄짜리 JSON
    {"error": code, "detail": message} 를 씁니다. 어느 쪽에도 속하지 않는 예외는 그대로 전파됩니다.

    Args:
        _func: 인자 없이 @command 로 쓴 경우의 대상 함수
        fail_for: 종료 코드 1 로 처리할 예외 타입
        usage_for: 종료 코드 2 로 처리할 예외 타입
    """

    def decorator(func: Callable):
        @wraps(func)
        def wrapper(*args, **kwargs) -> int:
            try:
                result = func(*args, **kwargs)
            except Exception as exc:
                exit_code = _exit_code_for(exc, fail_for, usage_for)
                if exit_code is None:
                    raise
                logger.info(f"{func.__name__} failed with exit code {exit_code}: {exc}")
                _report(exc)
                return exit_code
            return 0 if result is None else int(result)

        setattr(wrapper, "_command_decorated", True)
        return wrapper

    return decorator if _func is None else decorator(_func)
