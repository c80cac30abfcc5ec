"""toric-contact 명령행 도구.

하위 명령마다 JSON 한 줄을 표준 출력에 쓰고, 오류는 종료 코드 1 (검증) 또는 2 (사용법) 와
함께 오류 스트림에 JSON 한 줄로 알립니다.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from toric_contact import __version__
from toric_contact.cli.codec import (
    chain_json,
    classification_json,
    cone_json,
    dumps,
    lens_json,
    parse_chain,
    parse_cone,
    rational,
    report_json,
)
from toric_contact.config import SettingsHandler, current_render_options, init_settings, render_context
from toric_contact.decorator.command import command
from toric_contact.domains import LensLabel, RenderOptions
from toric_contact.enums import LutzKind
from toric_contact.exceptions import UsageError
from toric_contact.geometry.cone import lutz, toric_equivalent
from toric_contact.interface import AutoCommandMixIn
from toric_contact.plumbing.chain import blow_up, cone_of_plumbing, plumbing_of_cone
from toric_contact.render.svg import render_cone_svg, render_plumbing_svg
from toric_contact.topology.classify import classify, contactomorphic, lens_representatives
from toric_contact.topology.fourmanifold import d3_difference, invariants_report
from toric_contact.utils.common import get_logger

logger = get_logger()


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="toric-contact", description="Classify contact toric 3-manifolds exactly.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default="WARNING", help="package log level (default: WARNING)")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", help="lens label and contact class of a cone").add_argument("--cone", required=True)
    sub.add_parser("to-plumbing", help="linear plumbing bounding a cone").add_argument("--cone", required=True)

    from_plumbing = sub.add_parser("from-plumbing", help="boundary cone of a linear plumbing")
    from_plumbing.add_argument("--chain", required=True)
    from_plumbing.add_argument("--pivot", type=int, default=None)

    sub.add_parser("invariants", help="chi, sigma, c1^2 and theta of a plumbing").add_argument(
        "--chain", required=True
    )

    lutz_parser = sub.add_parser("lutz", help="apply a half or full Lutz twist")
    lutz_parser.add_argument("--cone", required=True)
    lutz_parser.add_argument("--kind", required=True, type=LutzKind, choices=list(LutzKind), metavar="{half,full}")

    equiv = sub.add_parser("equiv", help="compare two cones")
    equiv.add_argument("--a", required=True)
    equiv.add_argument("--b", required=True)

    render = sub.add_parser("render", help="draw a cone or a plumbing fan as SVG")
    source = render.add_mutually_exclusive_group(required=True)
    source.add_argument("--cone")
    source.add_argument("--chain")
    render.add_argument("--out", type=Path, default=None)
    render.add_argument("--canvas-size", type=int, default=None)
    render.add_argument("--ray-length", type=float, default=None)
    render.add_argument("--no-labels", action="store_true")

    d3 = sub.add_parser("d3", help="d3 difference of two plumbings with the same boundary")
    d3.add_argument("--a", required=True)
    d3.add_argument("--b", required=True)

    blow = sub.add_parser("blow-up", help="blow up the intersection of spheres i and i+1")
    blow.add_argument("--chain", required=True)
    blow.add_argument("--at", type=int, required=True)

    catalogue = sub.add_parser("catalogue", help="all toric contact structures on L(k, l)")
    catalogue.add_argument("--k", type=int, required=True)
    catalogue.add_argument("--l", type=int, required=True)

    return parser


class Commands(AutoCommandMixIn):
    """하위 명령 구현. 모든 public 메서드는 command 로 감싸져 종료 코드를 돌려줍니다."""

    def _emit(self, payload: dict) -> None:
        sys.stdout.write(dumps(payload) + "\n")

    def classify(self, args: argparse.Namespace) -> None:
        self._emit(classification_json(classify(parse_cone(args.cone))))

    def to_plumbing(self, args: argparse.Namespace) -> None:
        self._emit(chain_json(plumbing_of_cone(parse_cone(args.cone))))

    def from_plumbing(self, args: argparse.Namespace) -> None:
        cone = cone_of_plumbing(parse_chain(args.chain), args.pivot)
        self._emit({"cone": cone_json(cone), "classification": classification_json(classify(cone))})

    def invariants(self, args: argparse.Namespace) -> None:
        self._emit(report_json(invariants_report(parse_chain(args.chain))))

    def lutz(self, args: argparse.Namespace) -> None:
        self._emit(cone_json(lutz(parse_cone(args.cone), args.kind)))

    def equiv(self, args: argparse.Namespace) -> None:
        a, b = parse_cone(args.a), parse_cone(args.b)
        self._emit({"toric_equivalent": toric_equivalent(a, b), "contactomorphic": contactomorphic(a, b)})

    def render(self, args: argparse.Namespace) -> None:
        base = current_render_options()
        options = RenderOptions(
            canvas_size=args.canvas_size if args.canvas_size is not None else base.canvas_size,
            ray_length=args.ray_length if args.ray_length is not None else base.ray_length,
            show_labels=base.show_labels and not args.no_labels,
        )
        token = render_context.set(options)
        try:
            if args.cone is not None:
                svg = render_cone_svg(parse_cone(args.cone))
            else:
                svg = render_plumbing_svg(parse_chain(args.chain))
        finally:
            render_context.reset(token)

        if args.out is None:
            sys.stdout.write(svg + "\n")
        else:
            args.out.write_text(svg + "\n", encoding="utf-8")
            self._emit({"written": str(args.out)})

    def d3(self, args: argparse.Namespace) -> None:
        self._emit({"d3": rational(d3_difference(parse_chain(args.a), parse_chain(args.b)))})

    def blow_up(self, args: argparse.Namespace) -> None:
        self._emit(chain_json(blow_up(parse_chain(args.chain), args.at)))

    def catalogue(self, args: argparse.Namespace) -> None:
        lens = LensLabel(args.k, args.l)
        structures = lens_representatives(lens)
        self._emit({"lens": lens_json(lens), "structures": {tag.value: cone_json(c) for tag, c in structures.items()}})


@command
def _run(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)
    current = SettingsHandler.settings
    try:
        init_settings(render_options=current.render_options if current else None, log_level=args.log_level)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    logger.debug(f"dispatching {args.command}")
    return getattr(Commands(), args.command.replace("-", "_"))(args)


def run(argv: Sequence[str] | None = None) -> int:
    """명령행을 실행하고 종료 코드를 돌려줍니다.

    Args:
        argv (Sequence[str] | None): 인자 목록. None 이면 sys.argv[1:]

    Returns:
        int: 0 성공, 1 검증 오류, 2 사용법 오류
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        return _run(list(argv))
    except SystemExit as exc:
        # --help 와 --version 은 argparse 가 직접 종료합니다.
        return exc.code if isinstance(exc.code, int) else 0


def main() -> None:
    sys.exit(run())
