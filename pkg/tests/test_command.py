import json
from unittest.mock import patch

import pytest

from toric_contact.decorator.command import command
from toric_contact.exceptions import BadInput, MalformedInput, UsageError
from toric_contact.interface import AutoCommandMixIn


class TestCommandDecorator:
    """command 데코레이터 테스트"""

    def test_success_returns_zero(self):
        """None 을 돌려주면 종료 코드 0 인지 테스트"""

        @command
        def ok():
            return None

        assert ok() == 0

    def test_explicit_exit_code(self):
        """정수 결과는 그대로 종료 코드가 되는지 테스트"""

        @command
        def partial():
            return 3

        assert partial() == 3

    def test_domain_error_exit_one(self, capsys):
        """도메인 오류는 종료 코드 1 과 JSON 오류 줄인지 테스트"""

        @command
        def broken():
            raise MalformedInput("invalid JSON")

        assert broken() == 1
        payload = json.loads(capsys.readouterr().err)
        assert payload == {"error": "malformed_json", "detail": "invalid JSON"}

    def test_usage_error_exit_two(self, capsys):
        """UsageError 는 종료 코드 2 인지 테스트"""

        @command
        def misused():
            raise UsageError("the following arguments are required: --cone")

        assert misused() == 2
        assert json.loads(capsys.readouterr().err)["error"] == "usage"

    def test_unknown_error_propagates(self):
        """처리 대상이 아닌 예외는 그대로 전파되는지 테스트"""

        @command
        def crash():
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError, match="boom"):
            crash()

    def test_custom_exception_tuples(self, capsys):
        """fail_for / usage_for 를 바꿀 수 있는지 테스트"""

        @command(fail_for=(KeyError,), usage_for=(BadInput,))
        def lookup(kind: str):
            if kind == "key":
                raise KeyError("missing")
            raise BadInput("bad")

        assert lookup("key") == 1
        assert json.loads(capsys.readouterr().err)["error"] == "KeyError"
        assert lookup("bad") == 2
        assert json.loads(capsys.readouterr().err)["error"] == "bad_input"

    def test_marker_and_wraps(self):
        """마커 속성과 functools.wraps 가 적용되는지 테스트"""

        @command
        def named():
            """설명"""

        assert getattr(named, "_command_decorated") is True
        assert named.__name__ == "named"
        assert named.__doc__ == "설명"

    @patch("toric_contact.decorator.command.logger")
    def test_handled_error_logged(self, mock_logger, capsys):
        """처리된 오류가 info 로 기록되는지 테스트"""

        @command
        def broken():
            raise BadInput("bad chain")

        broken()
        mock_logger.info.assert_called_once()
        assert "exit code 1" in mock_logger.info.call_args[0][0]


class TestAutoCommandMixIn:
    """AutoCommandMixIn 테스트"""

    def test_public_methods_wrapped(self, capsys):
        """public 메서드가 command 로 감싸지는지 테스트"""

        class Sample(AutoCommandMixIn):
            def run(self):
                raise BadInput("bad")

            def _helper(self):
                raise BadInput("bad")

        assert getattr(Sample.run, "_command_decorated", False) is True
        assert Sample().run() == 1
        payload = json.loads(capsys.readouterr().err)
        assert payload["error"] == "bad_input"
        with pytest.raises(BadInput):
            Sample()._helper()

    @patch("toric_contact.interface.command")
    def test_skip_already_decorated(self, mock_command):
        """이미 데코레이트된 메서드는 건너뛰는지 테스트"""

        def pre_decorated(self):
            return 0

        pre_decorated._command_decorated = True

        class Sample(AutoCommandMixIn):
            def normal(self):
                return 0

            already = pre_decorated

        mock_command.assert_called_once()
