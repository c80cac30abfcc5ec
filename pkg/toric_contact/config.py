from __future__ import annotations

from contextvars import ContextVar

from toric_contact.domains import RenderOptions
from toric_contact.utils.common import get_logger, parse_log_level

_ALLOWED_KEYS = frozenset({"render_options", "log_level"})


def verify_config(**kwargs):
    """설정 값을 검증합니다.

    Args:
        **kwargs: render_options (RenderOptions), log_level (str) 만 허용

    Raises:
        ValueError: 알 수 없는 키, 잘못된 타입 또는 알 수 없는 로그 레벨인 경우
    """
    unknown = set(kwargs) - _ALLOWED_KEYS
    if unknown:
        raise ValueError(f"unknown settings: {sorted(unknown)}")
    if "render_options" in kwargs and not isinstance(kwargs["render_options"], RenderOptions):
        raise ValueError("render_options must be a RenderOptions instance")
    if "log_level" in kwargs:
        parse_log_level(kwargs["log_level"])


# 현재 컨텍스트에서 쓰이는 렌더링 옵션. None 이면 전역 설정을 따릅니다.
render_context: ContextVar[RenderOptions | None] = ContextVar("render_context", default=None)


class ToolkitSettings:
    __instance = None

    def __new__(cls, *args, **kwargs):
        if cls.__instance is None:
            cls.__instance = super().__new__(cls)
        return cls.__instance

    def __init__(self, render_options: RenderOptions | None = None, log_level: str = "WARNING"):
        render_options = render_options or RenderOptions()
        verify_config(render_options=render_options, log_level=log_level)
        self.render_options: RenderOptions = render_options
        self.log_level: str = log_level.upper()

    def apply_log_level(self) -> None:
        get_logger().setLevel(parse_log_level(self.log_level))


class SettingsHandler:
    settings: ToolkitSettings = None
    __instance = None

    def __new__(cls, *args, **kwargs):
        if cls.__instance is None:
            cls.__instance = super().__new__(cls)
        return cls.__instance

    @classmethod
    def get_settings(cls) -> ToolkitSettings:
        if cls.settings is None:
            raise ValueError("Toolkit settings not initialized.")
        return cls.settings

    @classmethod
    def set_settings(cls, settings: ToolkitSettings | None) -> None:
        cls.settings = settings


def init_settings(render_options: RenderOptions | None = None, log_level: str = "WARNING") -> ToolkitSettings:
    handler = SettingsHandler()
    settings = ToolkitSettings(render_options=render_options, log_level=log_level)
    handler.set_settings(settings)
    settings.apply_log_level()
    get_logger().debug(f"Toolkit settings initialized (log level {settings.log_level})")
    return settings


def current_render_options() -> RenderOptions:
    """컨텍스트 변수, 전역 설정, 기본값 순서로 렌더링 옵션을 고릅니다."""
    options = render_context.get()
    if options is not None:
        return options
    if SettingsHandler.settings is not None:
        return SettingsHandler.settings.render_options
    return RenderOptions()
