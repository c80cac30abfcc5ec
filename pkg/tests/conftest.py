"""
공통 테스트 설정
"""

import logging

import pytest
from hypothesis import HealthCheck, settings

from toric_contact.config import SettingsHandler, ToolkitSettings
from toric_contact.utils.common import get_logger

# 로깅 설정
logging.basicConfig(level=logging.INFO)

settings.register_profile("toric", deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
settings.load_profile("toric")


@pytest.fixture(autouse=True)
def 설정_초기화():
    """테스트마다 전역 설정 싱글톤과 로그 레벨을 되돌립니다."""
    SettingsHandler.set_settings(None)
    ToolkitSettings._ToolkitSettings__instance = None
    yield
    SettingsHandler.set_settings(None)
    ToolkitSettings._ToolkitSettings__instance = None
    get_logger().setLevel(logging.INFO)
