"""Command-line interface.

Exit codes: 0 success, 1 no realization exists, 2 invalid input or usage,
3 a produced grid failed ``--verify``.
"""
from __future__ import annotations

import argparse
import sys
import time

from .centered import NotCentered, reconstruct_centered
from .formats import InstanceError, parse_grid, parse_instance, render, serialize_instance
from .grid import is_hv_convex_polyomino, is_realization
from .hvconvex import reconstruct_hv
from .oracle import generate_instance
from .ryser import ryser_reconstruct

EXIT_OK, EXIT_NONE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3
MODES = ("auto", "hv", "centered", "ryser")


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _resolve_mode(mode: str, p) -> str:
    if mode == "auto":
        return "centered" if (p.rows == p.n).any() else "hv"
    return mode


def _solve(p, mode: str, prune: bool, parallel: bool, trace):
    """Return ``(grid or None, stats or None)``."""
    if mode == "ryser":
        return ryser_reconstruct(p), None
    if mode == "centered":
        res = reconstruct_centered(p, trace=trace)
    else:
        res = reconstruct_hv(p, "pruned" if prune else "full", parallel=parallel)
        if trace:
            trace(f"anchors tried={res.stats.anchors_tried} clauses={res.stats.clauses_generated}"
                  + (f" anchor={res.anchor}" if res.success else ""))
    return res.grid, res.stats


def cmd_reconstruct(args) -> int:
    try:
        inst = parse_instance(_read(args.input), strict=not args.lenient)
    except (OSError, InstanceError) as exc:
        _err(f"error: {exc}")
        return EXIT_INPUT
    for w in inst.warnings:
        _err(f"warning: {w}")
    p = inst.projections
    mode = _resolve_mode(args.mode, p)
    trace = (lambda line: _err(line)) if args.trace else None
    try:
        grid, _ = _solve(p, mode, args.prune, args.parallel, trace)
    except NotCentered as exc:
        _err(f"error: NotCentered: {exc}")
        return EXIT_INPUT
    except ValueError as exc:
        _err(f"error: {exc}")
        return EXIT_INPUT
    if grid is None:
        _err("no realization exists")
        return EXIT_NONE
    if args.verify:
        ok = is_realization(grid, p) and (mode == "ryser" or is_hv_convex_polyomino(grid))
        if not ok:
            _err("verification failed: output is not a valid realization")
            return EXIT_VERIFY
    sys.stdout.write(render(grid, args.format))
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        inst = parse_instance(_read(args.input), strict=False)
        grid = parse_grid(_read(args.grid))
    except (OSError, InstanceError) as exc:
        _err(f"error: {exc}")
        return EXIT_INPUT
    p = inst.projections
    if grid.shape != p.shape:
        _err(f"error: grid is {grid.m}x{grid.n}, instance is {p.m}x{p.n}")
        return EXIT_INPUT
    real = is_realization(grid, p)
    hv = is_hv_convex_polyomino(grid)
    print(f"realization\t{'yes' if real else 'no'}")
    print(f"hv-convex polyomino\t{'yes' if hv else 'no'}")
    if not real or (args.require_hv and not hv):
        return EXIT_NONE
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.rows < 1 or args.cols < 1:
        _err("error: --rows and --cols must be positive")
        return EXIT_INPUT
    grid, p = generate_instance(args.rows, args.cols, args.seed, centered=args.centered)
    out = f"# generated: rows={args.rows} cols={args.cols} seed={args.seed}" \
          f"{' centered' if args.centered else ''}\n"
    out += serialize_instance(p)
    out += "# witness:\n" + "".join(f"# {line}\n" for line in render(grid).splitlines())
    sys.stdout.write(out)
    if args.witness:
        with open(args.witness, "w") as fh:
            fh.write(render(grid, args.format))
    return EXIT_OK


def _parse_sizes(text: str) -> list[tuple[int, int]]:
    sizes = []
    for item in text.split(","):
        item = item.strip().lower()
        if not item:
            continue
        m, _, n = item.partition("x")
        sizes.append((int(m), int(n or m)))
    if not sizes:
        raise ValueError("empty size list")
    return sizes


def cmd_bench(args) -> int:
    try:
        sizes = _parse_sizes(args.sizes)
    except ValueError as exc:
        _err(f"error: bad --sizes: {exc}")
        return EXIT_INPUT
    print("mode\tm\tn\tmillis\tclauses\tanchors\tsteps")
    for m, n in sizes:
        mode = args.mode
        _, p = generate_instance(m, n, args.seed, centered=(mode in ("centered", "auto")))
        mode = _resolve_mode(mode, p)
        best = None
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            grid, stats = _solve(p, mode, args.prune, False, None)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        clauses = stats.clauses_generated if stats else 0
        anchors = stats.anchors_tried if stats else 0
        steps = stats.steps if stats else 0
        print(f"{mode}\t{m}\t{n}\t{best * 1000:.3f}\t{clauses}\t{anchors}\t{steps}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hvtomo", description="Reconstruct binary images from row and column sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("reconstruct", help="reconstruct a grid from an instance file")
    rec.add_argument("--input", required=True, help="instance file ('-' for stdin)")
    rec.add_argument("--mode", choices=MODES, default="auto")
    rec.add_argument("--format", choices=("ascii", "pbm"), default="ascii")
    rec.add_argument("--prune", dest="prune", action="store_true", default=True,
                     help="restrict anchor rows (hv mode, default)")
    rec.add_argument("--no-prune", dest="prune", action="store_false",
                     help="try every anchor pair (hv mode)")
    rec.add_argument("--verify", action="store_true", help="re-validate the output grid")
    rec.add_argument("--trace", action="store_true", help="print progress lines on stderr")
    rec.add_argument("--parallel", action="store_true", help="try anchors in worker processes")
    rec.add_argument("--lenient", action="store_true",
                     help="warn instead of failing on sums outside the usual bounds")
    rec.set_defaults(func=cmd_reconstruct)

    chk = sub.add_parser("check", help="check a grid against an instance")
    chk.add_argument("--input", required=True)
    chk.add_argument("--grid", required=True, help="ASCII or PBM grid file")
    chk.add_argument("--require-hv", action="store_true",
                     help="also require an hv-convex polyomino")
    chk.set_defaults(func=cmd_check)

    gen = sub.add_parser("generate", help="emit a random hv-convex instance and its witness")
    gen.add_argument("--rows", type=int, required=True)
    gen.add_argument("--cols", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--centered", action="store_true", help="force a completely filled row")
    gen.add_argument("--witness", help="also write the witness grid to this file")
    gen.add_argument("--format", choices=("ascii", "pbm"), default="ascii")
    gen.set_defaults(func=cmd_generate)

    bench = sub.add_parser("bench", help="time reconstruction on generated instances")
    bench.add_argument("--mode", choices=MODES, default="auto")
    bench.add_argument("--sizes", required=True, help="comma-separated sizes, e.g. 10,20x30")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeat", type=int, default=3)
    bench.add_argument("--prune", dest="prune", action="store_true", default=True)
    bench.add_argument("--no-prune", dest="prune", action="store_false")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
