"""Constructive extremal vertex configurations.

Generators for the families whose denominators grow with the Fibonacci
numbers: the semiqueen golden rectangle, its linear-transform golden
parallelograms for any three-move piece, the four-move discrete Fibonacci
spiral, and the twisted spirals obtained by reassigning the spiral's slopes.
Each generator emits integer coordinates at generator scale S (the side of
the smallest bounding square) together with the defining move equations and
three boundary fixations; dividing by S puts the configuration in the unit
cube, where it is a vertex of the inside-out polytope and its denominator is
S divided by the gcd of all coordinates with S.

Piece indices in equations and fixations are 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .counting import _hyperplane_row
from .errors import UnsatisfiedConstraintError
from .exactmath import fib, lcm_all, nullspace, primitive_integer_vector, rank
from .model import Move, PieceSpec, canonical_move
from .polytope import triangle_weights


@dataclass(frozen=True)
class Trajectory:
    """Corner-anchored zigzag of a two-move rider, at unit (board) scale."""

    points: tuple[tuple[Fraction, Fraction], ...]
    moves_used: tuple[tuple[int, int], ...]
    anchor: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class GeneratedConfig:
    positions: tuple[tuple[int, int], ...]  # generator scale, mins at 0
    scale: int  # bounding square side S
    move_equations: tuple[tuple[int, int, Move], ...]
    fixations: tuple[tuple[str, int, int], ...]  # (axis, piece, 0 or S)
    label: str
    claimed_delta: int

    @property
    def q(self) -> int:
        return len(self.positions)

    @property
    def unit_positions(self) -> tuple[tuple[Fraction, Fraction], ...]:
        s = self.scale
        return tuple((Fraction(x, s), Fraction(y, s)) for x, y in self.positions)

    def bounding_box(self) -> tuple[int, int]:
        xs = [x for x, _ in self.positions]
        ys = [y for _, y in self.positions]
        return (max(xs) - min(xs), max(ys) - min(ys))


def _translate_to_origin(points) -> list[tuple[int, int]]:
    mx = min(x for x, _ in points)
    my = min(y for _, y in points)
    return [(x - mx, y - my) for x, y in points]


def _check_config(config: GeneratedConfig) -> None:
    pos = config.positions
    for (i, j, m) in config.move_equations:
        dx = pos[j - 1][0] - pos[i - 1][0]
        dy = pos[j - 1][1] - pos[i - 1][1]
        if dx * m.d - dy * m.c != 0:
            raise UnsatisfiedConstraintError(
                f"pieces {i},{j} do not attack along {m}")
    for (axis, i, val) in config.fixations:
        coord = pos[i - 1][0] if axis == "x" else pos[i - 1][1]
        if coord != val:
            raise UnsatisfiedConstraintError(f"fixation {axis}{i}={val} unmet")


def _delta_of_integral(points, scale: int) -> int:
    g = scale
    for x, y in points:
        g = gcd(g, gcd(x, y))
    return scale // g


def _choose_fixations(points, scale: int, move_eqs, q: int):
    """Deterministic rank-completing triple of boundary coordinates."""
    candidates = []
    for i, (x, y) in enumerate(points, start=1):
        for axis, coord in (("x", x), ("y", y)):
            if coord in (0, scale):
                candidates.append((axis, i, coord))
    move_rows = [list(_hyperplane_row(i, j, m, q)) for (i, j, m) in move_eqs]
    for triple in itertools.combinations(sorted(candidates), 3):
        rows = list(move_rows)
        for (axis, i, _) in triple:
            row = [0] * (2 * q)
            row[2 * (i - 1) + (0 if axis == "x" else 1)] = 1
            rows.append(row)
        if rank(rows) == 2 * q:
            return tuple(triple)
    raise UnsatisfiedConstraintError("no rank-completing fixation triple found")


def generate_trajectory(c: int, d: int, max_pieces: int) -> Trajectory:
    """Zigzag from (0,0) alternating slope d/c with horizontal bounces.

    Stops on reaching the top edge y = 1, on landing at a corner (primitive
    trajectories end there), or after max_pieces pieces.
    """
    if c < 1 or d < 1 or gcd(c, d) != 1:
        raise ValueError("need coprime positive c, d")
    if max_pieces < 1:
        raise ValueError("max_pieces must be positive")
    corners = {(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)),
               (Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))}
    pts = [(Fraction(0), Fraction(0))]
    moves_used: list[tuple[int, int]] = []
    slope_turn = True
    while len(pts) < max_pieces:
        x, y = pts[-1]
        if y == 1:
            break
        if slope_turn:
            t = min((1 - x) / c, (1 - y) / d)
            nxt = (x + t * c, y + t * d)
            moves_used.append((c, d))
        else:
            nxt = (Fraction(1) - x, y)
            moves_used.append((1, 0) if nxt[0] > x else (-1, 0))
        pts.append(nxt)
        slope_turn = not slope_turn
        if nxt in corners or nxt[1] == 1:
            break
    return Trajectory(tuple(pts), tuple(moves_used), pts[0])


_RECT_DIAG = canonical_move(1, -1)
_VERT = canonical_move(0, 1)
_HORIZ = canonical_move(1, 0)


def _rectangle_positions(q: int) -> list[tuple[int, int]]:
    pos = [(1, 0)]
    for i in range(2, q + 1):
        f = fib(i // 2 - 1)
        step = {0: (f, -f), 1: (0, f), 2: (-f, f), 3: (f, 0)}[i % 4]
        pos.append((pos[-1][0] + step[0], pos[-1][1] + step[1]))
    return pos


def golden_rectangle_position(i: int) -> tuple[int, int]:
    """Closed-form position of the i-th semiqueen in the golden rectangle."""
    if i == 1:
        return (1, 0)
    f, g = fib(i // 2), fib(i // 2 - 1)
    return {0: (f, 0), 1: (f, g), 2: (0, f), 3: (g, f)}[i % 4]


def _rectangle_equations(q: int) -> list[tuple[int, int, Move]]:
    eqs = []

    def emit(a, b, m):
        if 1 <= a <= q and 1 <= b <= q:
            eqs.append((min(a, b), max(a, b), m))

    for i in range(0, q + 1):
        if i >= 1:
            emit(4 * i, 4 * i + 1, _VERT)
            emit(4 * i, 4 * i + 4, _HORIZ)
        emit(4 * i + 2, 4 * i + 6, _VERT)
        emit(4 * i + 1, 4 * i + 3, _VERT)
        emit(4 * i + 2, 4 * i + 3, _HORIZ)
        emit(4 * i + 3, 4 * i + 5, _HORIZ)
        emit(2 * i + 1, 2 * i + 2, _RECT_DIAG)
    eqs.append((1, 4, _HORIZ))
    return sorted(set(eqs))


def golden_rectangle(q: int) -> GeneratedConfig:
    """Semiqueen golden rectangle: denominator fib(q // 2)."""
    if q < 4:
        raise ValueError("golden rectangle needs q >= 4 to anchor")
    pos = _rectangle_positions(q)
    eqs = _rectangle_equations(q)
    half = q // 2
    scale = fib(half)
    fix_axis = "x" if half % 2 == 0 else "y"
    fixations = (("y", 1, 0), ("x", 2, 0), (fix_axis, q, scale))
    config = GeneratedConfig(tuple(pos), scale, tuple(eqs), fixations,
                             "rectangle", _delta_of_integral(pos, scale))
    _check_config(config)
    return config


def weighted_moves(piece: PieceSpec) -> list[tuple[int, int]]:
    """The vectors w_i * m_i of a three-move piece (triangle relation)."""
    if len(piece.moves) != 3:
        raise ValueError("weighted moves need exactly three moves")
    w = triangle_weights(*piece.moves)
    return [(w[k] * piece.moves[k].c, w[k] * piece.moves[k].d) for k in range(3)]


def golden_parallelogram(piece: PieceSpec, move_choice, q: int) -> GeneratedConfig:
    """Linear image of the golden rectangle for a three-move piece.

    move_choice is an ordered pair (i, j) of indices into the weighted move
    vectors, or an explicit pair of vectors, each of the form +-w_k m_k. Signs
    are fixed so the third triangle side stays parallel to the remaining move.
    """
    if q < 4:
        raise ValueError("golden parallelogram needs q >= 4")
    wm = weighted_moves(piece)
    if all(isinstance(v, int) for v in move_choice):
        i, j = move_choice
        if i == j:
            raise ValueError("move_choice needs two distinct moves")
        v1 = (-wm[i][0], -wm[i][1])
        v2 = wm[j]
        used = {i, j}
    else:
        (v1, v2) = (tuple(move_choice[0]), tuple(move_choice[1]))
        used = set()
        for v in (v1, v2):
            k = next((k for k in range(3) if v in (wm[k], (-wm[k][0], -wm[k][1]))), None)
            if k is None:
                raise ValueError(f"{v} is not +-(w_k m_k) for this piece")
            used.add(k)
        if len(used) != 2:
            raise ValueError("move_choice must use two distinct weighted moves")
    if v1[0] * v2[1] - v1[1] * v2[0] == 0:
        raise ValueError("degenerate transform: parallel images")
    third = piece.moves[({0, 1, 2} - used).pop()]
    diff = (v2[0] - v1[0], v2[1] - v1[1])
    if diff[0] * third.d - diff[1] * third.c != 0:
        raise ValueError("sign choice leaves the third triangle side unmatched")

    rect = _rectangle_positions(q)
    raw = [(x * v1[0] + y * v2[0], x * v1[1] + y * v2[1]) for x, y in rect]
    pos = _translate_to_origin(raw)
    scale = max(max(x for x, _ in pos), max(y for _, y in pos))
    move_map = {_VERT: canonical_move(*v2), _HORIZ: canonical_move(*v1),
                _RECT_DIAG: canonical_move(*diff)}
    eqs = sorted({(i_, j_, move_map[m]) for (i_, j_, m) in _rectangle_equations(q)})
    fixations = _choose_fixations(pos, scale, eqs, q)
    config = GeneratedConfig(tuple(pos), scale, tuple(eqs), fixations,
                             f"parallelogram[{v1},{v2}]",
                             _delta_of_integral(pos, scale))
    _check_config(config)
    return config


def golden_parallelogram_table(piece: PieceSpec, q: int) -> list[GeneratedConfig]:
    """All six ordered-pair golden parallelograms of a three-move piece."""
    return [golden_parallelogram(piece, (i, j), q)
            for i, j in itertools.permutations(range(3), 2)]


_SPIRAL_DIRS = {1: (1, -1), 0: (1, 1)}  # step parity -> diagonal direction


def _spiral_steps(q: int, sigma: int) -> list[int]:
    # s_1 = sigma, s_2 = -s_1, s_3 = s_2 - s_1, then the spiral closure
    # alternates s_{2i+2} = -s_{2i} - s_{2i+1}, s_{2i+3} = s_{2i+2} - s_{2i+1}.
    s = [sigma, -sigma, -2 * sigma]
    while len(s) < q - 1:
        k = len(s) + 1  # index of the next step s_k
        if k % 2 == 0:
            s.append(-s[k - 3] - s[k - 2])
        else:
            s.append(s[k - 2] - s[k - 3])
    return s[: q - 1]


def _spiral_equations(q: int, m1: Move, m2: Move, m3: Move, m4: Move):
    eqs = []

    def emit(a, b, m):
        if 1 <= a <= q and 1 <= b <= q:
            eqs.append((min(a, b), max(a, b), m))

    for i in range(0, q + 1):
        if i >= 1:
            emit(2 * i, 2 * i + 1, m1)
            emit(2 * i, 2 * i + 3, m3)
        emit(2 * i + 1, 2 * i + 2, m2)
        emit(2 * i + 1, 2 * i + 4, m4)
    eqs.append((1, 3, m3))
    return sorted(set(eqs))


def queens_spiral(q: int) -> GeneratedConfig:
    """Discrete Fibonacci spiral of q queens; denominator fib(q - 1).

    Steps alternate the two diagonals with Fibonacci lengths; the bounding
    rectangle is fib(q-1) x fib(q-2)."""
    if q < 4:
        raise ValueError("spiral needs q >= 4")
    sigma = 1 if q % 4 in (0, 2) else -1
    steps = _spiral_steps(q, sigma)
    pts = [(0, 0)]
    for k, s in enumerate(steps, start=1):
        dx, dy = _SPIRAL_DIRS[k % 2]
        pts.append((pts[-1][0] + s * dx, pts[-1][1] + s * dy))
    pos = _translate_to_origin(pts)
    scale = max(max(x for x, _ in pos), max(y for _, y in pos))
    eqs = _spiral_equations(q, canonical_move(1, 1), canonical_move(1, -1),
                            _VERT, _HORIZ)
    pattern = {
        0: (("x", q, 0), ("y", q - 1, 0), ("x", q - 2, scale)),
        1: (("x", q, 0), ("y", q, 0), ("y", q - 2, scale)),
        2: (("x", q, scale), ("y", q, 0), ("x", q - 2, 0)),
        3: (("y", q, scale), ("x", q - 1, 0), ("y", q - 2, 0)),
    }[q % 4]
    config = GeneratedConfig(tuple(pos), scale, tuple(eqs), pattern, "spiral",
                             _delta_of_integral(pos, scale))
    _check_config(config)
    return config


def twisted_spiral(piece: PieceSpec, assignment, q: int) -> GeneratedConfig:
    """Fibonacci spiral with the four slopes reassigned.

    assignment is an ordered tuple of four of the piece's moves (a
    permutation): slot 1 joins consecutive even-odd pieces, slot 2 odd-even,
    slot 3 carries the (1,3)-type closures, slot 4 the (odd, odd+3) closures.
    The move-equation system has a one-dimensional solution space once
    translations are pinned; the minimal integral solution gives the scale.
    """
    if q < 4:
        raise ValueError("twisted spiral needs q >= 4")
    moves = tuple(assignment)
    if sorted(moves) != sorted(piece.moves) or len(piece.moves) != 4:
        raise ValueError("assignment must be a permutation of the piece's four moves")
    eqs = _spiral_equations(q, *moves)
    rows = [list(_hyperplane_row(i, j, m, q)) for (i, j, m) in eqs]
    rows.append([1] + [0] * (2 * q - 1))  # x_1 = 0
    rows.append([0, 1] + [0] * (2 * q - 2))  # y_1 = 0
    basis = nullspace(rows)
    if len(basis) != 1:
        raise ValueError("rank-deficient system for the given assignment")
    vec = primitive_integer_vector(basis[0])
    if next(v for v in vec if v) < 0:
        vec = [-v for v in vec]
    pts = [(vec[2 * k], vec[2 * k + 1]) for k in range(q)]
    pos = _translate_to_origin(pts)
    scale = max(max(x for x, _ in pos), max(y for _, y in pos))
    fixations = _choose_fixations(pos, scale, eqs, q)
    config = GeneratedConfig(tuple(pos), scale, tuple(eqs), fixations,
                             f"twisted[{','.join(str(m) for m in moves)}]",
                             _delta_of_integral(pos, scale))
    _check_config(config)
    return config


def config_denominator(config) -> int:
    """Minimal dilation making the configuration integral.

    Accepts a GeneratedConfig (validated against its own constraints first),
    a Trajectory, or any iterable of rational points."""
    if isinstance(config, GeneratedConfig):
        _check_config(config)
        return lcm_all(c.denominator
                       for pt in config.unit_positions for c in pt)
    if isinstance(config, Trajectory):
        pts = config.points
    else:
        pts = [(Fraction(x), Fraction(y)) for x, y in config]
    return lcm_all(c.denominator for pt in pts for c in pt)


def is_vertex(config: GeneratedConfig, piece: PieceSpec) -> bool:
    """Whether the config is a vertex of the piece's inside-out polytope.

    Requires every move equation to use a move of the piece, the active
    system (move equations + fixations) to have rank 2q, and the unit-scaled
    position to lie in the closed cube.
    """
    q = config.q
    if any(m not in piece.moves for (_, _, m) in config.move_equations):
        return False
    try:
        _check_config(config)
    except UnsatisfiedConstraintError:
        return False
    if any(not (0 <= x <= config.scale and 0 <= y <= config.scale)
           for x, y in config.positions):
        return False
    rows = [list(_hyperplane_row(i, j, m, q)) for (i, j, m) in config.move_equations]
    for (axis, i, _) in config.fixations:
        row = [0] * (2 * q)
        row[2 * (i - 1) + (0 if axis == "x" else 1)] = 1
        rows.append(row)
    return rank(rows) == 2 * q
