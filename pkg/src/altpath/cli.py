"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import HypothesisViolated, InputError, InternalError
from .geom import bounding_region
from .io import (
    GenParams,
    emit_instance,
    emit_partition,
    emit_path,
    generate,
    parse_instance,
    parse_partition,
    parse_path,
    render_svg,
)
from .partition import plane_partition
from .paths import closed_cycle, open_path
from .verify import brute_force_path, verify_partition, verify_path

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class _Usage(InputError):
    pass


def _read(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    try:
        return Path(name).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {name}: {exc.strerror}") from None


def _write(text: str, dest: Optional[str]) -> None:
    if dest is None or dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _cmd_gen(args) -> int:
    params = GenParams(args.s, args.blue, args.red_out, args.seed, args.range)
    _write(emit_instance(generate(params)), args.output)
    return EXIT_OK


def _cmd_solve(args) -> int:
    inst = parse_instance(_read(args.instance))
    balanced = len(inst.red) == len(inst.blue)
    if args.closed and not balanced:
        raise HypothesisViolated("--closed needs as many red as blue points")
    if args.open and balanced:
        raise HypothesisViolated("--open needs color counts differing by one")
    path = closed_cycle(inst) if balanced else open_path(inst, seed=args.seed)
    _write(emit_path(path), args.output)
    return EXIT_OK


def _plane_inputs(inst):
    poly = [p.point for p in inst.polygon_points]
    return poly, list(inst.blue), inst.outer_red


def _cmd_partition(args) -> int:
    inst = parse_instance(_read(args.instance))
    if len(inst.red) != len(inst.blue):
        raise HypothesisViolated("partitioning needs as many red as blue points")
    poly, blue, red = _plane_inputs(inst)
    _write(emit_partition(plane_partition(poly, blue, red)), args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = parse_instance(_read(args.instance))
    if args.path is None and args.partition is None:
        raise _Usage("give --path and/or --partition")
    failed = False
    if args.path is not None:
        report = verify_path(inst.points, parse_path(_read(args.path)))
        print(f"path: {report or 'Ok'}")
        failed |= report is not None
    if args.partition is not None:
        poly, blue, red = _plane_inputs(inst)
        ambient = bounding_region([p.point for p in inst.points])
        part = parse_partition(_read(args.partition))
        report = verify_partition(ambient, poly, red, blue, part, [1] * len(poly))
        print(f"partition: {report or 'Ok'}")
        failed |= report is not None
    return EXIT_FAILED if failed else EXIT_OK


def _cmd_oracle(args) -> int:
    inst = parse_instance(_read(args.instance))
    closed = len(inst.red) == len(inst.blue)
    path = brute_force_path(list(inst.red), list(inst.blue), closed)
    _write("none\n" if path is None else emit_path(path), args.output)
    return EXIT_OK


def _cmd_render(args) -> int:
    inst = parse_instance(_read(args.instance))
    path = parse_path(_read(args.path)) if args.path else None
    part = parse_partition(_read(args.partition)) if args.partition else None
    _write(render_svg(inst, path, part), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altpath", description="Non-crossing alternating paths on red/blue point sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a seeded random instance")
    g.add_argument("--s", type=int, required=True, help="number of polygon vertices")
    g.add_argument("--blue", type=int, required=True, help="number of blue points")
    g.add_argument("--red-out", type=int, required=True, help="number of red points outside the polygon")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--range", type=int, default=1000, help="coordinate range (default 1000)")
    g.add_argument("-o", "--output")
    g.set_defaults(run=_cmd_gen)

    s = sub.add_parser("solve", help="build an alternating Hamiltonian path or cycle")
    s.add_argument("instance")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--closed", action="store_true", help="require a closed cycle")
    mode.add_argument("--open", action="store_true", help="require an open path")
    s.add_argument("--seed", type=int, default=0, help="seed for the auxiliary point in the open case")
    s.add_argument("-o", "--output")
    s.set_defaults(run=_cmd_solve)

    p = sub.add_parser("partition", help="split the plane into one region per polygon edge")
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.set_defaults(run=_cmd_partition)

    v = sub.add_parser("verify", help="check a path and/or partition file")
    v.add_argument("instance")
    v.add_argument("--path")
    v.add_argument("--partition")
    v.set_defaults(run=_cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive search on a tiny instance")
    o.add_argument("instance")
    o.add_argument("-o", "--output")
    o.set_defaults(run=_cmd_oracle)

    r = sub.add_parser("render", help="draw an instance as SVG")
    r.add_argument("instance")
    r.add_argument("--path")
    r.add_argument("--partition")
    r.add_argument("-o", "--output")
    r.set_defaults(run=_cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
