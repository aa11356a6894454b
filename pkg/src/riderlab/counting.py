"""Exact enumeration of nonattacking placements and attack-line counts.

The board of size n is the set of integer points in the interior of the
(n+1)-fold dilation of the unit square (i.e. [1,n]^2), or for the triangle
board the points with 1 <= x <= y-1 <= n. A placement count is the number of
q-subsets with no attacking pair.

Lattice-point counts along subspaces of the move arrangement (`alpha_line`,
`beta_line`, `subspace_count`) count configurations of the essential pieces
only; `count_via_mobius` combines them with Mobius coefficients from the
intersection lattice and must reproduce q! times the direct count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .errors import BudgetExceededError
from .model import Board, Move, PieceSpec

_DEFAULT_LATTICE_BUDGET = 5_000_000


def board_points(board: Board, n: int) -> list[tuple[int, int]]:
    if board.kind == "square":
        return [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    if board.kind == "triangle":
        return [(x, y) for x in range(1, n + 1) for y in range(x + 1, n + 2)]
    raise ValueError("counting supports square and triangle boards only")


def _attack_masks(points, moves) -> list[int]:
    """masks[i] = bitmask of points sharing an attack line with point i."""
    masks = [0] * len(points)
    for m in moves:
        buckets: dict[int, int] = {}
        for idx, (x, y) in enumerate(points):
            buckets.setdefault(m.d * x - m.c * y, 0)
            buckets[m.d * x - m.c * y] |= 1 << idx
        for idx, (x, y) in enumerate(points):
            masks[idx] |= buckets[m.d * x - m.c * y]
    for idx in range(len(points)):
        masks[idx] &= ~(1 << idx)
    return masks


@lru_cache(maxsize=None)
def count_placements(piece: PieceSpec, board: Board, q: int, n: int) -> int:
    """Number of nonattacking unlabelled placements of q pieces on the board."""
    if q < 1 or n < 1:
        raise ValueError("q and n must be positive")
    points = board_points(board, n)
    total_pts = len(points)
    if q == 1:
        return total_pts
    masks = _attack_masks(points, piece.moves)
    above = [~((1 << (i + 1)) - 1) for i in range(total_pts)]

    def go(allowed: int, remaining: int) -> int:
        if remaining == 1:
            return allowed.bit_count()
        total = 0
        a = allowed
        while a:
            low = a & -a
            i = low.bit_length() - 1
            a ^= low
            nxt = allowed & above[i] & ~masks[i]
            if nxt:
                total += go(nxt, remaining - 1)
        return total

    return go((1 << total_pts) - 1, q)


@lru_cache(maxsize=None)
def _line_table(move: Move, n: int) -> dict[int, int]:
    """Number of points of [1,n]^2 on each attack line of the given slope.

    Lines are keyed by d*x - c*y, constant exactly along direction (c, d)."""
    table: dict[int, int] = {}
    for x in range(1, n + 1):
        base = move.d * x
        for y in range(1, n + 1):
            key = base - move.c * y
            table[key] = table.get(key, 0) + 1
    return table


def alpha_line(move: Move, n: int) -> int:
    """Ordered pairs of board positions attacking along the move's slope.

    Coincident pairs count, so this is the sum of (line length)^2."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(c * c for c in _line_table(move, n).values())


def beta_line(move: Move, n: int) -> int:
    """Ordered collinear triples along the move's slope: sum of (length)^3."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(c ** 3 for c in _line_table(move, n).values())


@dataclass(frozen=True)
class CountRecord:
    """One counting result; the labelled count is q! times the unlabelled."""

    piece: PieceSpec
    q: int
    n: int
    unlabeled: int
    board: Board

    @property
    def labeled(self) -> int:
        return factorial(self.q) * self.unlabeled


def count_record(piece: PieceSpec, board: Board, q: int, n: int) -> CountRecord:
    return CountRecord(piece, q, n, count_placements(piece, board, q, n), board)


# ---------------------------------------------------------------------------
# Intersection lattice


@dataclass(frozen=True)
class Subspace:
    """One intersection subspace of the move arrangement.

    `equations` is the full set of arrangement hyperplanes containing the
    subspace (canonical; piece indices are 1-based with i < j). `basis` is an
    independent generating subset of size `codim`.
    """

    equations: tuple[tuple[int, int, Move], ...]
    basis: tuple[tuple[int, int, Move], ...]
    kappa: int
    codim: int
    mobius: int | None = None
    rref: tuple[tuple[int, ...], ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class IntersectionLattice:
    piece: PieceSpec
    q: int
    elements: tuple[Subspace, ...]  # ordered by codim; elements[0] is the whole space

    def top(self) -> Subspace:
        return self.elements[0]


def _hyperplane_row(i: int, j: int, m: Move, q: int) -> tuple[int, ...]:
    row = [0] * (2 * q)
    row[2 * (j - 1)] += m.d
    row[2 * (j - 1) + 1] -= m.c
    row[2 * (i - 1)] -= m.d
    row[2 * (i - 1) + 1] += m.c
    return tuple(row)


def _reduce_against(row, rref_rows, pivots):
    """Reduce an integer row against integer RREF rows; primitive result."""
    from math import gcd

    row = list(row)
    for rr, p in zip(rref_rows, pivots):
        if row[p]:
            f, lead = row[p], rr[p]
            row = [a * lead - b * f for a, b in zip(row, rr)]
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


def _int_rref(rows) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Canonical integer RREF (primitive rows, positive pivots, reduced above)."""
    from math import gcd

    work: list[list[int]] = []
    pivots: list[int] = []
    for row in rows:
        red = _reduce_against(row, work, pivots)
        if any(red):
            work.append(red)
            pivots.append(next(i for i, v in enumerate(red) if v))
    order = sorted(range(len(work)), key=lambda k: pivots[k])
    work = [work[k] for k in order]
    pivots = [pivots[k] for k in order]
    # eliminate above pivots, normalize signs
    for r in range(len(work) - 1, -1, -1):
        p = pivots[r]
        if work[r][p] < 0:
            work[r] = [-v for v in work[r]]
        for s in range(r):
            if work[s][p]:
                f, lead = work[s][p], work[r][p]
                work[s] = [a * lead - b * f for a, b in zip(work[s], work[r])]
                g = 0
                for v in work[s]:
                    g = gcd(g, v)
                if g > 1:
                    work[s] = [v // g for v in work[s]]
    return tuple(tuple(r) for r in work), tuple(pivots)


def all_hyperplanes(piece: PieceSpec, q: int) -> list[tuple[int, int, Move]]:
    return [(i, j, m) for i in range(1, q + 1) for j in range(i + 1, q + 1) for m in piece.moves]


@lru_cache(maxsize=None)
def build_lattice(piece: PieceSpec, q: int, budget: int | None = None,
                  mobius: bool | None = None) -> IntersectionLattice:
    """All intersections of subsets of the move arrangement, with Mobius values.

    Subspaces are deduplicated by canonical integer RREF; `equations` ends up
    as the full set of containing hyperplanes, so per-type multiplicities come
    out of the enumeration itself.
    """
    if q < 1:
        raise ValueError("q must be positive")
    if q > 4:
        raise BudgetExceededError("intersection lattice supported for q <= 4")
    if budget is None:
        budget = _DEFAULT_LATTICE_BUDGET
    if mobius is None:
        mobius = q <= 3
    hyps = all_hyperplanes(piece, q)
    rows = {h: _hyperplane_row(*h, q) for h in hyps}

    # Closure under intersection, one hyperplane at a time.
    seen: dict[tuple, dict] = {}
    empty = ((), ())
    seen[empty[0]] = {"rref": (), "pivots": (), "gens": ()}
    frontier = [()]
    ops = 0
    while frontier:
        new_frontier = []
        for key in frontier:
            info = seen[key]
            for h in hyps:
                ops += 1
                if ops > budget:
                    raise BudgetExceededError("lattice construction budget exceeded")
                red = _reduce_against(rows[h], info["rref"], info["pivots"])
                if not any(red):
                    continue  # h already contains this subspace
                rref, pivots = _int_rref(list(info["rref"]) + [list(red)])
                if rref not in seen:
                    seen[rref] = {"rref": rref, "pivots": pivots,
                                  "gens": info["gens"] + (h,)}
                    new_frontier.append(rref)
        frontier = new_frontier

    elements = []
    for key, info in seen.items():
        containing = tuple(
            h for h in hyps
            if not any(_reduce_against(rows[h], info["rref"], info["pivots"]))
        )
        pieces_involved = {i for (i, j, m) in containing} | {j for (i, j, m) in containing}
        elements.append(Subspace(
            equations=containing,
            basis=info["gens"],
            kappa=len(pieces_involved),
            codim=len(info["rref"]),
            mobius=None,
            rref=info["rref"],
        ))
    elements.sort(key=lambda s: (s.codim, s.equations))

    if mobius:
        mob: dict[tuple, int] = {}
        by_eqs = [(frozenset(s.equations), s) for s in elements]
        values = []
        for eqs, s in by_eqs:
            if not eqs:
                mu = 1
            else:
                mu = -sum(mob[o] for o, _ in values if o < eqs)
            mob[eqs] = mu
            values.append((eqs, s))
        elements = [
            Subspace(s.equations, s.basis, s.kappa, s.codim,
                     mob[frozenset(s.equations)], s.rref)
            for s in elements
        ]
    return IntersectionLattice(piece, q, tuple(elements))


# ---------------------------------------------------------------------------
# Counting integer configurations on a subspace


def _t_range(coord: int, step: int, n: int):
    """Integer t with 1 <= coord + t*step <= n (step != 0)."""
    if step > 0:
        lo = -((coord - 1) // step)
        hi = (n - coord) // step
    else:
        lo = -((n - coord) // -step)
        hi = (coord - 1) // -step
    return lo, hi


def _points_on_line(z, move: Move, n: int) -> list[tuple[int, int]]:
    x0, y0 = z
    lo, hi = None, None
    for coord, step in ((x0, move.c), (y0, move.d)):
        if step == 0:
            if not (1 <= coord <= n):
                return []
            continue
        a, b = _t_range(coord, step, n)
        lo = a if lo is None else max(lo, a)
        hi = b if hi is None else min(hi, b)
    if lo is None or lo > hi:
        return []
    return [(x0 + t * move.c, y0 + t * move.d) for t in range(lo, hi + 1)]


def _on_line(z, anchor, move: Move) -> bool:
    return move.d * (z[0] - anchor[0]) - move.c * (z[1] - anchor[1]) == 0


def _intersect_lines(a0, m0: Move, a1, m1: Move):
    """Integer intersection point of two lines, or None (parallel/non-integral)."""
    det = m0.d * m1.c - m1.d * m0.c
    if det == 0:
        return None
    r0 = m0.d * a0[0] - m0.c * a0[1]
    r1 = m1.d * a1[0] - m1.c * a1[1]
    xn = r0 * m1.c - r1 * m0.c
    yn = r0 * m1.d - r1 * m0.d
    if xn % det or yn % det:
        return None
    return (xn // det, yn // det)


def _count_on_constraints(cons, n: int) -> int:
    """Grid points satisfying all (anchor, move) line constraints."""
    if len(cons) == 1:
        (anchor, m) = cons[0]
        return _line_table(m, n).get(m.d * anchor[0] - m.c * anchor[1], 0)
    for a in range(len(cons)):
        for b in range(a + 1, len(cons)):
            pt = _intersect_lines(cons[a][0], cons[a][1], cons[b][0], cons[b][1])
            if cons[a][1] != cons[b][1]:
                if pt is None:
                    return 0
                if not (1 <= pt[0] <= n and 1 <= pt[1] <= n):
                    return 0
                return 1 if all(_on_line(pt, z, m) for z, m in cons) else 0
    # all constraints parallel: anchors must be mutually collinear
    (anchor, m) = cons[0]
    if all(_on_line(z, anchor, m) for z, _ in cons[1:]):
        return _line_table(m, n).get(m.d * anchor[0] - m.c * anchor[1], 0)
    return 0


def _candidate_points(cons, n: int) -> list[tuple[int, int]]:
    if not cons:
        return [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    (anchor, m) = cons[0]
    pts = _points_on_line(anchor, m, n)
    for z, mm in cons[1:]:
        pts = [p for p in pts if _on_line(p, z, mm)]
    return pts


def _component_count(nodes, edges, n: int) -> int:
    if len(nodes) == 1:
        return n * n
    adj: dict = {u: [] for u in nodes}
    for (a, b, m) in edges:
        adj[a].append((b, m))
        adj[b].append((a, m))
    order_key = {u: (-len(adj[u]), u) for u in nodes}

    def rec(placed: dict) -> int:
        remaining = [u for u in nodes if u not in placed]
        if not remaining:
            return 1
        mult = 1
        terminals = [u for u in remaining if all(v in placed for v, _ in adj[u])]
        for u in terminals:
            mult *= _count_on_constraints([(placed[v], m) for v, m in adj[u]], n)
            if mult == 0:
                return 0
        rest = [u for u in remaining if u not in terminals]
        if not rest:
            return mult
        anchored = [u for u in rest if any(v in placed for v, _ in adj[u])]
        nxt = min(anchored or rest, key=order_key.get)
        cons = [(placed[v], m) for v, m in adj[nxt] if v in placed]
        total = 0
        for z in _candidate_points(cons, n):
            placed[nxt] = z
            total += rec(placed)
            del placed[nxt]
        return mult * total

    return rec({})


def subspace_count(piece: PieceSpec, subspace, n: int, max_kappa: int = 4) -> int:
    """Integer configurations of the essential pieces lying on the subspace.

    Membership count only: configurations satisfying every equation of the
    subspace, inside the open dilated square (coordinates in [1, n]). Mobius
    exclusion is count_via_mobius's job.
    """
    if n < 1:
        raise ValueError("n must be positive")
    eqs = list(subspace.equations) if isinstance(subspace, Subspace) else list(subspace)
    norm = []
    for (i, j, m) in eqs:
        if i == j:
            raise ValueError("attack equation needs two distinct pieces")
        if m not in piece.moves:
            raise ValueError(f"move {m} is not a move of {piece}")
        norm.append((min(i, j), max(i, j), m))
    if not norm:
        return 1
    pieces_involved = sorted({i for i, _, _ in norm} | {j for _, j, _ in norm})
    if len(pieces_involved) > max_kappa:
        raise BudgetExceededError(f"subspace involves more than {max_kappa} pieces")

    # Pairs tied by two independent slopes collapse to coincident pieces.
    parent = {p: p for p in pieces_involved}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    while True:
        pair_moves: dict[tuple[int, int], set[Move]] = {}
        for (i, j, m) in norm:
            gi, gj = find(i), find(j)
            if gi == gj:
                continue
            pair_moves.setdefault((min(gi, gj), max(gi, gj)), set()).add(m)
        merged = False
        for (a, b), ms in pair_moves.items():
            if len(ms) >= 2 and find(a) != find(b):
                parent[find(b)] = find(a)
                merged = True
        if not merged:
            break
    edges = sorted({(min(find(i), find(j)), max(find(i), find(j)), m)
                    for (i, j, m) in norm if find(i) != find(j)})
    groups = sorted({find(p) for p in pieces_involved})

    comp_parent = {g: g for g in groups}

    def cfind(x):
        while comp_parent[x] != x:
            comp_parent[x] = comp_parent[comp_parent[x]]
            x = comp_parent[x]
        return x

    for (a, b, _) in edges:
        if cfind(a) != cfind(b):
            comp_parent[cfind(b)] = cfind(a)
    comps: dict[int, list[int]] = {}
    for g in groups:
        comps.setdefault(cfind(g), []).append(g)
    total = 1
    for root, comp_nodes in sorted(comps.items()):
        comp_edges = [(a, b, m) for (a, b, m) in edges if cfind(a) == root]
        total *= _component_count(comp_nodes, comp_edges, n)
        if total == 0:
            return 0
    return total


def count_via_mobius(piece: PieceSpec, q: int, n: int) -> int:
    """Labelled nonattacking count via Mobius inversion over the lattice.

    Must equal q! * count_placements on the square board.
    """
    if q > 3:
        raise BudgetExceededError("Mobius-inversion counting supported for q <= 3")
    lattice = build_lattice(piece, q, mobius=True)
    total = 0
    for sub in lattice.elements:
        alpha = subspace_count(piece, sub, n) if sub.equations else 1
        total += sub.mobius * n ** (2 * (q - sub.kappa)) * alpha
    return total


def labeled_count(piece: PieceSpec, board: Board, q: int, n: int) -> int:
    return factorial(q) * count_placements(piece, board, q, n)
