"""CLI 와 주고받는 JSON 형식.

수는 정확한 정수 또는 {"num", "den"} 유리수 객체로만 내보냅니다.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from toric_contact.domains import ClassificationResult, Direction, InvariantsReport, LensLabel, MomentCone, Plumbing
from toric_contact.exceptions import BadInput, MalformedInput


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc.msg} at position {exc.pos}") from exc
    except (ValueError, RecursionError) as exc:
        # 너무 긴 정수 리터럴, 너무 깊은 중첩
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def _direction(value: Any, name: str) -> Direction:
    if not (isinstance(value, list) and len(value) == 2 and all(_is_int(x) for x in value)):
        raise MalformedInput(f"{name} must be a pair of integers")
    return Direction(value[0], value[1])


def parse_cone(text: str) -> MomentCone:
    """{"r1": [x, y], "r2": [x, y], "winding": w} 를 읽습니다. winding 은 생략하면 0 입니다.

    Raises:
        MalformedInput: JSON 이 아니거나 필드 모양이 맞지 않는 경우
        ToricError: 값이 콘의 불변식을 어기는 경우
    """
    data = _loads(text)
    if not isinstance(data, dict) or "r1" not in data or "r2" not in data:
        raise MalformedInput('cone must be an object with "r1" and "r2"')
    winding = data.get("winding", 0)
    if not _is_int(winding):
        raise MalformedInput("winding must be an integer")
    return MomentCone(_direction(data["r1"], "r1"), _direction(data["r2"], "r2"), winding)


def parse_chain(text: str) -> Plumbing:
    """'0,0,0,0' 형식 또는 {"chain": [...]} JSON 을 읽습니다."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = _loads(stripped)
        chain = data.get("chain") if isinstance(data, dict) else None
        if not (isinstance(chain, list) and all(_is_int(s) for s in chain)):
            raise MalformedInput('plumbing must be an object with an integer list "chain"')
        return Plumbing(tuple(chain))
    try:
        chain = [int(part) for part in stripped.split(",")]
    except ValueError as exc:
        raise BadInput(f"chain must be comma-separated integers, got {text!r}") from exc
    return Plumbing(tuple(chain))


def rational(value: Fraction | int) -> dict[str, int]:
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def cone_json(c: MomentCone) -> dict[str, Any]:
    return {"r1": list(c.r1.as_tuple()), "r2": list(c.r2.as_tuple()), "winding": c.winding}


def lens_json(lens: LensLabel) -> dict[str, int]:
    return {"k": lens.k, "l": lens.l}


def classification_json(result: ClassificationResult) -> dict[str, Any]:
    return {"lens": lens_json(result.lens), "contact": result.contact.value, "h1": list(result.h1)}


def chain_json(p: Plumbing) -> dict[str, list[int]]:
    return {"chain": list(p.chain)}


def report_json(report: InvariantsReport) -> dict[str, Any]:
    return {
        "chi": report.chi,
        "sigma": report.sigma,
        "c1_pd": [rational(a) for a in report.c1_pd],
        "c1_sq": rational(report.c1_sq),
        "theta": rational(report.theta),
    }


def dumps(payload: dict[str, Any]) -> str:
    return json.dumps(payload)
