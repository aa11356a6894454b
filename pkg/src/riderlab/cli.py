"""Command-line interface.

Subcommands: count, fit, period, denom, vertices, spiral, verify, oeis.
Exit codes: 0 all checks pass, 1 verification mismatch, 2 usage or budget
error. Primary outputs (CSV, JSON, SVG, vertex dumps) are deterministic:
re-running a command with the same inputs reproduces them byte for byte.
Matplotlib report figures (--plot/--png) are secondary artifacts.
"""

from __future__ import annotations

import argparse
import datetime
import itertools
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import configs, formulas, oeis, polytope, svgout
from .counting import count_placements
from .errors import BudgetExceededError
from .model import Board, PieceSpec, parse_piece
from .quasipoly import FitError, detect_period, interpolate
from .exactmath import lcm_all


@dataclass
class RunManifest:
    command: str
    piece: str
    q: int | None
    n_range: tuple[int, int] | None
    outputs: dict = field(default_factory=dict)
    cache_keys: list = field(default_factory=list)

    def write(self) -> None:
        if not self.outputs:
            return
        first = Path(next(iter(self.outputs.values())))
        payload = {
            "command": self.command,
            "piece": self.piece,
            "q": self.q,
            "n_range": list(self.n_range) if self.n_range else None,
            "outputs": self.outputs,
            "cache_keys": self.cache_keys,
            "created": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
        manifest_path = first.with_name(first.name + ".manifest.json")
        manifest_path.write_text(json.dumps(payload, indent=2) + "\n")


def _board(name: str) -> Board:
    return Board.triangle() if name == "triangle" else Board.square()


def _counts(piece: PieceSpec, board: Board, q: int, n_max: int):
    return [(n, count_placements(piece, board, q, n)) for n in range(1, n_max + 1)]


def cmd_count(args) -> int:
    piece = parse_piece(args.piece)
    rows = _counts(piece, _board(args.board), args.q, args.n_max)
    manifest = RunManifest("count", str(piece), args.q, (1, args.n_max))
    if args.csv:
        text = "n,count\n" + "".join(f"{n},{c}\n" for n, c in rows)
        Path(args.csv).write_text(text)
        manifest.outputs["csv"] = args.csv
    else:
        for n, c in rows:
            print(f"{n},{c}")
    if args.plot:
        from . import figures
        figures.plot_counts(rows, args.plot,
                            f"{piece}: q={args.q} on {args.board} board")
        manifest.outputs["plot"] = args.plot
    manifest.write()
    return 0


def cmd_fit(args) -> int:
    piece = parse_piece(args.piece)
    degree = 2 * args.q
    n_max = args.period_max * (degree + 3)
    rows = _counts(piece, Board.square(), args.q, n_max)
    period = detect_period(rows, degree, args.period_max)
    qp = interpolate(rows, degree, period)
    print(f"degree={degree} period={period}")
    print(f"leading={qp.leading()} types(n=-1)={qp.evaluate(-1)}")
    manifest = RunManifest("fit", str(piece), args.q, (1, n_max))
    if args.json:
        Path(args.json).write_text(qp.to_json() + "\n")
        manifest.outputs["json"] = args.json
        manifest.write()
    else:
        print(qp.to_json())
    return 0


def cmd_period(args) -> int:
    piece = parse_piece(args.piece)
    degree = 2 * args.q
    max_period = max(1, args.n_max // (degree + 3))
    rows = _counts(piece, Board.square(), args.q, args.n_max)
    period = detect_period(rows, degree, max_period)
    print(f"period={period}")
    if args.q <= 3:
        denom = polytope.polytope_denominator(piece, args.q)
        agree = "equal" if period == denom else (
            "divides" if denom % period == 0 else "DISAGREES")
        print(f"denominator={denom} period-vs-denominator={agree}")
    return 0


def cmd_denom(args) -> int:
    piece = parse_piece(args.piece)
    records = polytope.enumerate_vertices(piece, args.q, budget=args.budget)
    denoms = sorted({r.denominator for r in records})
    print(f"D={lcm_all(denoms)}")
    print(f"max_delta={max(denoms)}")
    print(f"denominators={','.join(map(str, denoms))}")
    if len(piece.moves) == 1:
        m = piece.moves[0]
        print(f"one-move closed form: {polytope.one_move_denominator(Board.square(), m, args.q)}")
    horiz = [m for m in piece.moves if (m.c, m.d) == (1, 0)]
    others = [m for m in piece.moves if (m.c, m.d) != (1, 0)]
    if len(piece.moves) == 2 and horiz and others:
        m = others[0]
        val = polytope.two_move_denominator(abs(m.c), abs(m.d), args.q)
        print(f"two-move closed form: {val} ({polytope.TWO_MOVE_CONJECTURE_NOTE})")
    return 0


def cmd_vertices(args) -> int:
    piece = parse_piece(args.piece)
    records = polytope.enumerate_vertices(piece, args.q, budget=args.budget)
    text = polytope.dump_vertices(records)
    if args.dump:
        Path(args.dump).write_text(text)
        manifest = RunManifest("vertices", str(piece), args.q, None,
                               outputs={"dump": args.dump})
        manifest.write()
        print(f"{len(records)} vertices -> {args.dump}")
    else:
        sys.stdout.write(text)
    return 0


_NIGHTRIDER_TWISTS = {
    0: ((2, 1), (1, -2), (1, 2), (2, -1)),   # discrete Fibonacci spiral analog
    1: ((1, -2), (2, 1), (1, 2), (2, -1)),   # expanding kite
}


def _make_config(args, piece: PieceSpec):
    if args.kind == "rectangle":
        if piece.name != "semiqueen":
            raise ValueError("the golden rectangle is the semiqueen construction")
        return configs.golden_rectangle(args.q)
    if args.kind == "parallelogram":
        pairs = list(itertools.permutations(range(3), 2))
        if not 0 <= args.variant < len(pairs):
            raise ValueError("parallelogram --variant must be 0..5")
        return configs.golden_parallelogram(piece, pairs[args.variant], args.q)
    if args.kind == "spiral":
        if piece.name != "queen":
            raise ValueError("the discrete Fibonacci spiral is the queen construction")
        return configs.queens_spiral(args.q)
    if args.kind == "twisted":
        if len(piece.moves) != 4:
            raise ValueError("twisted spirals need a four-move piece")
        if piece.name == "nightrider" and args.variant in _NIGHTRIDER_TWISTS:
            from .model import canonical_move
            assignment = tuple(canonical_move(c, d)
                               for c, d in _NIGHTRIDER_TWISTS[args.variant])
        else:
            perms = list(itertools.permutations(piece.moves))
            assignment = perms[args.variant % len(perms)]
        return configs.twisted_spiral(piece, assignment, args.q)
    raise ValueError(f"unknown spiral kind {args.kind!r}")


def cmd_spiral(args) -> int:
    piece = parse_piece(args.piece)
    config = _make_config(args, piece)
    box = config.bounding_box()
    print(f"label={config.label} q={config.q} delta={config.claimed_delta} "
          f"box={box[0]}x{box[1]} scale={config.scale}")
    print("fixations=" + ";".join(f"{a}{i}={v}" for a, i, v in config.fixations))
    manifest = RunManifest("spiral", str(piece), args.q, None)
    if args.svg:
        Path(args.svg).write_text(svgout.emit_svg(config))
        manifest.outputs["svg"] = args.svg
    if args.png:
        from . import figures
        figures.plot_config(config, args.png,
                            f"{config.label} q={config.q} delta={config.claimed_delta}")
        manifest.outputs["png"] = args.png
    manifest.write()
    return 0


def cmd_verify(args) -> int:
    piece = parse_piece(args.piece)
    board = Board.square()
    failures = 0
    ran = False
    if args.formula:
        ran = True
        for n in range(1, args.n_max + 1):
            expected = formulas.closed_form_count(piece, args.q, n)
            if expected is None:
                print(f"formula: no closed form for ({piece}, q={args.q})",
                      file=sys.stderr)
                return 2
            actual = count_placements(piece, board, args.q, n)
            if expected != actual:
                failures += 1
                print(f"formula mismatch at n={n}: counted {actual}, formula {expected}")
        print(f"formula check: {'ok' if failures == 0 else 'FAILED'} "
              f"(n <= {args.n_max})")
    if args.oeis:
        ran = True
        report = oeis.verify_against_oeis(piece, args.q, args.n_max,
                                          cache_dir=args.cache)
        for n, ours, theirs in report.mismatches:
            print(f"oeis mismatch at n={n}: counted {ours}, {report.ident} has {theirs}")
        failures += len(report.mismatches)
        print(f"oeis check vs {report.ident}: "
              f"{'ok' if report.ok else 'FAILED'} "
              f"({len(report.checked)} values, {len(report.skipped)} outside b-file)")
    if not ran:
        print("nothing to verify: pass --formula and/or --oeis", file=sys.stderr)
        return 2
    return 1 if failures else 0


def cmd_oeis(args) -> int:
    entry = oeis.oeis_fetch(args.id, cache_dir=args.cache)
    print(f"{entry.ident}: offset={entry.offset} terms={len(entry.values)} "
          f"first={entry.values[0][1]} last_index={entry.values[-1][0]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riderlab",
        description="Nonattacking rider placements: exact counts, "
                    "quasipolynomial fits, and inside-out polytope denominators.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_piece_q(p, q_required=True):
        p.add_argument("--piece", required=True,
                       help="preset name or move list like '(1,0);(2,1)'")
        p.add_argument("--q", type=int, required=q_required)

    p = sub.add_parser("count", help="exact placement counts")
    add_piece_q(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--board", choices=["square", "triangle"], default="square")
    p.add_argument("--csv", help="write n,count rows to this path")
    p.add_argument("--plot", help="write a matplotlib figure alongside the CSV")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("fit", help="fit the counting quasipolynomial")
    add_piece_q(p)
    p.add_argument("--period-max", type=int, required=True)
    p.add_argument("--json", help="write the quasipolynomial JSON to this path")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("period", help="detect the minimal period from counts")
    add_piece_q(p)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("denom", help="denominator by vertex enumeration")
    add_piece_q(p)
    p.add_argument("--budget", type=int, help="node budget (required for q=4)")
    p.set_defaults(func=cmd_denom)

    p = sub.add_parser("vertices", help="enumerate inside-out polytope vertices")
    add_piece_q(p)
    p.add_argument("--budget", type=int)
    p.add_argument("--dump", help="write the vertex dump to this path")
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("spiral", help="extremal vertex configurations")
    p.add_argument("--kind", required=True,
                   choices=["rectangle", "parallelogram", "spiral", "twisted"])
    add_piece_q(p)
    p.add_argument("--variant", type=int, default=0,
                   help="parallelogram transform 0..5 / twisted assignment")
    p.add_argument("--svg", help="write a deterministic SVG to this path")
    p.add_argument("--png", help="write a matplotlib figure to this path")
    p.set_defaults(func=cmd_spiral)

    p = sub.add_parser("verify", help="cross-check counts against references")
    add_piece_q(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--oeis", action="store_true")
    p.add_argument("--formula", action="store_true")
    p.add_argument("--cache", help="OEIS cache directory")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis", help="fetch/inspect an OEIS b-file")
    p.add_argument("--id", required=True)
    p.add_argument("--cache", help="cache directory")
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, FitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
