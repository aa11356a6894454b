"""Vertices and denominators of the inside-out polytope ([0,1]^2q, moves).

A vertex is a point of the cube where some rank-2q set of move hyperplanes
and facet hyperplanes (coordinate fixations to 0 or 1) meet. Its denominator
Delta is the least common denominator of its coordinates, equivalently the
smallest dilation making the configuration integral; the polytope denominator
D is the lcm of all vertex denominators and the Ehrhart period divides it.

Enumeration walks the intersection lattice of the move arrangement; on each
subspace the cube section's vertices are found by pinning a full-rank set of
coordinates to 0/1 and solving exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .counting import build_lattice, _hyperplane_row
from .errors import BudgetExceededError
from .exactmath import lcm_all, nullspace
from .model import Board, Move, PieceSpec, antipode

_DEFAULT_VERTEX_BUDGET = 20_000_000

#: The two-move closed form below assumes every vertex comes from simple
#: trajectories and their intersections; that reduction is conjectural, so
#: results should be read as conditional (they are cross-checked against
#: enumerate_vertices for q <= 3 in the test suite).
TWO_MOVE_CONJECTURE_NOTE = (
    "conjecture-conditional: assumes vertices arise from simple trajectories")


@dataclass(frozen=True)
class Constraint:
    """Move equation ("H", i, j, move) or fixation ("F", piece, axis, bound)."""

    kind: str
    data: tuple

    @staticmethod
    def move(i: int, j: int, m: Move) -> "Constraint":
        if i == j:
            raise ValueError("move equation needs distinct pieces")
        return Constraint("H", (min(i, j), max(i, j), m))

    @staticmethod
    def fixation(piece_index: int, axis: str, bound: int) -> "Constraint":
        if axis not in ("x", "y") or bound not in (0, 1):
            raise ValueError("fixation is x_i or y_i pinned to 0 or 1")
        return Constraint("F", (piece_index, axis, bound))

    def __str__(self):
        if self.kind == "H":
            i, j, m = self.data
            return f"H({i},{j};{m.d}/{m.c})"
        i, axis, bound = self.data
        return f"{axis}{i}={bound}"


@dataclass(frozen=True)
class VertexRecord:
    position: tuple[Fraction, ...]
    denominator: int
    active: tuple[Constraint, ...]


def _vertex_active(pos, hyps, q: int) -> tuple[Constraint, ...]:
    active = []
    for (i, j, m) in hyps:
        dx = pos[2 * (j - 1)] - pos[2 * (i - 1)]
        dy = pos[2 * (j - 1) + 1] - pos[2 * (i - 1) + 1]
        if dx * m.d - dy * m.c == 0:
            active.append(Constraint.move(i, j, m))
    for p in range(1, q + 1):
        for axis, idx in (("x", 2 * (p - 1)), ("y", 2 * (p - 1) + 1)):
            if pos[idx] in (0, 1):
                active.append(Constraint.fixation(p, axis, int(pos[idx])))
    return tuple(active)


def constraint_rows(constraints, q: int) -> list[list[int]]:
    rows = []
    for con in constraints:
        if con.kind == "H":
            rows.append(list(_hyperplane_row(*con.data, q)))
        else:
            p, axis, _ = con.data
            row = [0] * (2 * q)
            row[2 * (p - 1) + (0 if axis == "x" else 1)] = 1
            rows.append(row)
    return rows


def _invert(mat):
    """Exact inverse of a square Fraction matrix, or None if singular."""
    d = len(mat)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(d)]
           for i, row in enumerate(mat)]
    for col in range(d):
        piv = next((r for r in range(col, d) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(d):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[d:] for row in aug]


_VERTEX_CACHE: dict[tuple[PieceSpec, int], tuple[VertexRecord, ...]] = {}


def enumerate_vertices(piece: PieceSpec, q: int,
                       budget: int | None = None) -> tuple[VertexRecord, ...]:
    """All vertices of the inside-out polytope, sorted by position.

    q <= 3 runs within the default budget; q = 4 is best-effort and requires
    an explicit budget (BudgetExceededError when it runs out).
    """
    if q < 1:
        raise ValueError("q must be positive")
    if q > 4:
        raise ValueError("vertex enumeration supports q <= 4")
    if q == 4 and budget is None:
        raise BudgetExceededError("q = 4 is best-effort: pass an explicit budget")
    if budget is None and (piece, q) in _VERTEX_CACHE:
        return _VERTEX_CACHE[(piece, q)]
    limit = budget if budget is not None else _DEFAULT_VERTEX_BUDGET
    lattice = build_lattice(piece, q, mobius=False)
    hyps = [(i, j, m) for i in range(1, q + 1) for j in range(i + 1, q + 1)
            for m in piece.moves]
    found: dict[tuple, None] = {}
    ops = 0
    for sub in lattice.elements:
        dim = 2 * q - sub.codim
        basis = nullspace([list(row) for row in sub.rref]) if sub.codim else \
            [[Fraction(int(i == j)) for i in range(2 * q)] for j in range(2 * q)]
        coord_rows = [[basis[k][idx] for k in range(dim)] for idx in range(2 * q)]
        nonzero = [idx for idx in range(2 * q) if any(coord_rows[idx])]
        for combo in itertools.combinations(nonzero, dim):
            ops += 1
            if ops > limit:
                raise BudgetExceededError("vertex enumeration budget exceeded")
            inv = _invert([coord_rows[idx] for idx in combo])
            if inv is None:
                continue
            for rhs in itertools.product((0, 1), repeat=dim):
                ops += 1
                if ops > limit:
                    raise BudgetExceededError("vertex enumeration budget exceeded")
                t = [sum(inv[r][k] * rhs[k] for k in range(dim)) for r in range(dim)]
                pos = []
                ok = True
                for idx in range(2 * q):
                    v = sum(coord_rows[idx][k] * t[k] for k in range(dim))
                    if v < 0 or v > 1:
                        ok = False
                        break
                    pos.append(v)
                if ok:
                    found.setdefault(tuple(pos), None)
    records = []
    for pos in sorted(found):
        delta = lcm_all(v.denominator for v in pos)
        records.append(VertexRecord(pos, delta, _vertex_active(pos, hyps, q)))
    result = tuple(records)
    if budget is None:
        _VERTEX_CACHE[(piece, q)] = result
    return result


def vertex_denominators(piece: PieceSpec, q: int, budget: int | None = None) -> set[int]:
    return {rec.denominator for rec in enumerate_vertices(piece, q, budget)}


def polytope_denominator(piece: PieceSpec, q: int, budget: int | None = None) -> int:
    """lcm of all vertex denominators (an upper bound multiple of the period)."""
    return lcm_all(vertex_denominators(piece, q, budget))


def max_vertex_denominator(piece: PieceSpec, q: int, budget: int | None = None) -> int:
    """Largest single vertex denominator (reported as observed, not asserted)."""
    return max(vertex_denominators(piece, q, budget))


def dump_vertices(records) -> str:
    lines = []
    for rec in records:
        coords = ",".join(f"{v.numerator}/{v.denominator}" for v in rec.position)
        cons = ";".join(str(c) for c in sorted(rec.active, key=str))
        lines.append(f"{coords}|delta={rec.denominator}|constraints={cons}")
    return "\n".join(lines) + ("\n" if lines else "")


def one_move_denominator(board: Board, move: Move, q: int) -> int:
    """Denominator of the one-move inside-out polytope on any board.

    q = 1: least common denominator of the corners. q >= 2: corners plus
    every existing antipode; on the square board this equals max(|c|, |d|).
    """
    if q < 1:
        raise ValueError("q must be positive")
    points = list(board.corners)
    if q >= 2:
        for corner in board.corners:
            other = antipode(board, corner, move)
            if other is not None:
                points.append(other)
    return lcm_all(Fraction(c).denominator for pt in points for c in pt)


def two_move_denominator(c: int, d: int, q: int) -> int:
    """Closed-form denominator for the rider with moves (1,0) and (c,d).

    Conditional on the simple-trajectory reduction (see
    TWO_MOVE_CONJECTURE_NOTE); cross-checked against enumeration for small q.
    """
    if c < 1 or d < 1 or gcd(c, d) != 1:
        raise ValueError("need coprime positive c, d")
    if q < 1:
        raise ValueError("q must be positive")
    if q == 1:
        return 1
    if d >= c:
        return d
    if q <= 2 * (c // d) + 1:
        return c
    return c * d


def triangle_weights(m1: Move, m2: Move, m3: Move) -> tuple[int, int, int]:
    """Integer relation w1*m1 + w2*m2 + w3*m3 = 0, gcd 1, first weight positive."""

    def cross(a: Move, b: Move) -> int:
        return a.c * b.d - a.d * b.c

    w = [cross(m2, m3), cross(m3, m1), cross(m1, m2)]
    if not all(w):
        raise ValueError("moves must be pairwise nonparallel")
    g = gcd(gcd(abs(w[0]), abs(w[1])), abs(w[2]))
    w = [v // g for v in w]
    first = next(v for v in w if v)
    if first < 0:
        w = [-v for v in w]
    return tuple(w)


def triangle_denominator(m1: Move, m2: Move, m3: Move) -> int:
    """Denominator of the three-piece pairwise-attacking triangle vertex."""
    w = triangle_weights(m1, m2, m3)
    moves = (m1, m2, m3)
    return max(max(abs(w[i] * moves[i].c), abs(w[i] * moves[i].d)) for i in range(3))
