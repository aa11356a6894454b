"""Pieces, moves, boards, and the attack predicate.

A rider piece is a finite set of pairwise nonparallel primitive integer
vectors ("basic moves"); it attacks along every integer multiple of each
move. Moves are stored undirected: (c, d) and (-c, -d) name the same attack
line, so the canonical form fixes c > 0, or c = 0 and d = 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True, order=True)
class Move:
    c: int
    d: int

    def __post_init__(self):
        if (self.c, self.d) == (0, 0):
            raise ValueError("zero vector is not a move")
        if gcd(abs(self.c), abs(self.d)) != 1:
            raise ValueError("move must be primitive; use canonical_move")
        if self.c < 0 or (self.c == 0 and self.d < 0):
            raise ValueError("move must be in canonical orientation; use canonical_move")

    @property
    def chat(self) -> int:
        return min(abs(self.c), abs(self.d))

    @property
    def dhat(self) -> int:
        return max(abs(self.c), abs(self.d))

    @property
    def perp(self) -> tuple[int, int]:
        """Normal vector (d, -c); the attack line is its zero set."""
        return (self.d, -self.c)

    def slope_str(self) -> str:
        return f"{self.d}/{self.c}"

    def __str__(self):
        return f"({self.c},{self.d})"


def canonical_move(c: int, d: int) -> Move:
    """Reduce (c, d) to lowest terms and canonical orientation."""
    if (c, d) == (0, 0):
        raise ValueError("zero vector is not a move")
    g = gcd(abs(c), abs(d))
    c, d = c // g, d // g
    if c < 0 or (c == 0 and d < 0):
        c, d = -c, -d
    return Move(c, d)


@dataclass(frozen=True)
class PieceSpec:
    moves: tuple[Move, ...]
    name: str | None = None

    def __post_init__(self):
        if not self.moves:
            raise ValueError("a piece needs at least one move")
        if len(set(self.moves)) != len(self.moves):
            raise ValueError("duplicate (parallel) moves")
        object.__setattr__(self, "moves", tuple(sorted(set(self.moves))))

    def __str__(self):
        return self.name or ";".join(str(m) for m in self.moves)


def piece(move_pairs, name=None) -> PieceSpec:
    return PieceSpec(tuple(canonical_move(c, d) for c, d in move_pairs), name)


PRESETS: dict[str, PieceSpec] = {
    "semirook": piece([(1, 0)], "semirook"),
    "rook": piece([(1, 0), (0, 1)], "rook"),
    "semibishop": piece([(1, 1)], "semibishop"),
    "bishop": piece([(1, 1), (1, -1)], "bishop"),
    "queen": piece([(1, 0), (0, 1), (1, 1), (1, -1)], "queen"),
    # The semiqueen keeps the (1,-1) diagonal: the golden-rectangle family is
    # built on that chirality.
    "semiqueen": piece([(1, 0), (0, 1), (1, -1)], "semiqueen"),
    "frontal-queen": piece([(0, 1), (1, 1), (1, -1)], "frontal-queen"),
    # Right-handed subqueen only.
    "subqueen": piece([(0, 1), (1, 1)], "subqueen"),
    "nightrider": piece([(2, 1), (1, 2), (2, -1), (1, -2)], "nightrider"),
    "N1": piece([(2, 1)], "N1"),
    "N2-lateral": piece([(2, 1), (2, -1)], "N2-lateral"),
    "N2-inclined": piece([(2, 1), (1, 2)], "N2-inclined"),
    "N2-ortho": piece([(2, 1), (1, -2)], "N2-ortho"),
    "N3": piece([(2, -1), (2, 1), (1, 2)], "N3"),
}

_ALIASES = {
    "q10": "semirook",
    "q20": "rook",
    "q01": "semibishop",
    "q02": "bishop",
    "q22": "queen",
    "q21": "semiqueen",
    "q12": "frontal-queen",
    "q11": "subqueen",
    "frontal": "frontal-queen",
    "frontalqueen": "frontal-queen",
    "n": "nightrider",
    "n4": "nightrider",
    "lateral": "N2-lateral",
    "inclined": "N2-inclined",
    "ortho": "N2-ortho",
    "lateral-nightrider": "N2-lateral",
    "inclined-nightrider": "N2-inclined",
    "orthonightrider": "N2-ortho",
}

_MOVE_LIST_RE = re.compile(r"^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def parse_piece(text: str) -> PieceSpec:
    """Parse a piece name, a Qhk/Nk code, or an explicit move list.

    Move-list syntax: semicolon-separated integer pairs, e.g. "(1,0);(2,1)".
    """
    key = text.strip().lower()
    lookup = {k.lower(): k for k in PRESETS}
    if key in lookup:
        return PRESETS[lookup[key]]
    if key in _ALIASES:
        return PRESETS[_ALIASES[key]]
    if "(" in text:
        moves = []
        for part in text.split(";"):
            m = _MOVE_LIST_RE.match(part)
            if not m:
                raise ValueError(f"bad move list element: {part!r}")
            moves.append((int(m.group(1)), int(m.group(2))))
        return piece(moves, None)
    raise ValueError(f"unknown piece: {text!r}")


@dataclass(frozen=True)
class Board:
    kind: str  # "square" | "triangle" | "polygon"
    corners: tuple[Point, ...]

    @staticmethod
    def square() -> "Board":
        pts = [(0, 0), (1, 0), (1, 1), (0, 1)]
        return Board("square", tuple((Fraction(x), Fraction(y)) for x, y in pts))

    @staticmethod
    def triangle() -> "Board":
        """Right triangle 0 <= x <= y <= 1 (legs on axes, hypotenuse slope 1)."""
        pts = [(0, 0), (1, 1), (0, 1)]
        return Board("triangle", tuple((Fraction(x), Fraction(y)) for x, y in pts))

    @staticmethod
    def polygon(corners) -> "Board":
        pts = tuple((Fraction(x), Fraction(y)) for x, y in corners)
        if len(pts) < 3:
            raise ValueError("polygon needs at least 3 corners")
        n = len(pts)
        cross_signs = set()
        for i in range(n):
            ax, ay = pts[i]
            bx, by = pts[(i + 1) % n]
            cx, cy = pts[(i + 2) % n]
            cr = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
            if cr == 0:
                raise ValueError("corners must be in strictly convex position")
            cross_signs.add(cr > 0)
        if len(cross_signs) != 1:
            raise ValueError("corners must be listed in convex boundary order")
        return Board("polygon", pts)


@dataclass(frozen=True)
class Configuration:
    """Ordered piece positions; dilation None means unit-scale ([0,1]^2)."""

    positions: tuple[Point, ...]
    dilation: int | None = None


def attacks(z1, z2, spec: PieceSpec) -> bool:
    """True iff z2 - z1 lies on an attack line of the piece.

    Coincident positions attack: the zero vector is a multiple of every move.
    """
    dx = Fraction(z2[0]) - Fraction(z1[0])
    dy = Fraction(z2[1]) - Fraction(z1[1])
    for m in spec.moves:
        if dx * m.d - dy * m.c == 0:
            return True
    return False


def _clip_halfplane(t_lo, t_hi, num, den):
    """Intersect {t : num + t*den >= 0} into [t_lo, t_hi]; None bounds = open."""
    if den == 0:
        if num < 0:
            return None
        return t_lo, t_hi
    t = Fraction(-num, den)
    if den > 0:
        t_lo = t if t_lo is None else max(t_lo, t)
    else:
        t_hi = t if t_hi is None else min(t_hi, t)
    if t_lo is not None and t_hi is not None and t_lo > t_hi:
        return None
    return t_lo, t_hi


def antipode(board: Board, corner, move: Move):
    """Second boundary point of the move-direction line through a corner.

    Returns None when the line meets the board only at the corner. When the
    move is parallel to an edge at the corner the other endpoint of that edge
    comes out naturally (the clipped segment is the edge itself).
    """
    cx, cy = Fraction(corner[0]), Fraction(corner[1])
    if (cx, cy) not in board.corners:
        raise ValueError("point is not a corner of the board")
    pts = board.corners
    n = len(pts)
    area2 = sum(pts[i][0] * pts[(i + 1) % n][1] - pts[(i + 1) % n][0] * pts[i][1] for i in range(n))
    orient = 1 if area2 > 0 else -1
    lo, hi = None, None
    for i in range(n):
        ax, ay = pts[i]
        bx, by = pts[(i + 1) % n]
        ex, ey = bx - ax, by - ay
        # interior side of edge: orient * cross(e, z - a) >= 0
        num = orient * (ex * (cy - ay) - ey * (cx - ax))
        den = orient * (ex * move.d - ey * move.c)
        clipped = _clip_halfplane(lo, hi, num, den)
        if clipped is None:
            return None
        lo, hi = clipped
    if lo is None or hi is None or lo == hi:
        return None
    t = hi if hi != 0 else lo
    if t == 0:
        return None
    return (cx + t * move.c, cy + t * move.d)
