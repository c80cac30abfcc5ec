from __future__ import annotations

import logging
import sys
from functools import lru_cache

LOGGER_NAME = "toric_contact"
LOG_FORMAT = "%(asctime)s.%(msecs)03dZ - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s"


@lru_cache
def get_logger() -> logging.Logger:
    """패키지 로거를 만듭니다.

    핸들러가 없을 때만 표준 오류로 쓰는 핸들러를 하나 붙입니다. 표준 출력은 CLI 의
    JSON 결과 전용입니다.

    Returns:
        logging.Logger: 설정된 로거 인스턴스
    """
    logger = logging.getLogger(LOGGER_NAME)
    if not logger.hasHandlers():
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(logging.INFO)
    return logger


def parse_log_level(level: str | int) -> int:
    """'debug', 'WARNING', 10 같은 값을 logging 레벨 숫자로 바꿉니다.

    Raises:
        ValueError: 알 수 없는 레벨 이름인 경우
    """
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    if not isinstance(value, int):
        raise ValueError(f"unknown log level: {level}")
    return value
