import random
from fractions import Fraction

import pytest

from riderlab.model import (Board, Move, PRESETS, antipode, attacks,
                            canonical_move, parse_piece, piece)


def test_canonical_move_examples():
    assert canonical_move(2, 4) == Move(1, 2)
    assert canonical_move(-1, -1) == Move(1, 1)
    assert canonical_move(0, -3) == Move(0, 1)


def test_canonical_move_idempotent_random():
    rng = random.Random(7)
    for _ in range(300):
        c, d = rng.randint(-9, 9), rng.randint(-9, 9)
        if (c, d) == (0, 0):
            continue
        m = canonical_move(c, d)
        assert canonical_move(m.c, m.d) == m


def test_move_rejects_zero_and_noncanonical():
    with pytest.raises(ValueError):
        canonical_move(0, 0)
    with pytest.raises(ValueError):
        Move(2, 4)
    with pytest.raises(ValueError):
        Move(-1, 2)


def test_move_accessors():
    m = canonical_move(1, -2)
    assert (m.chat, m.dhat) == (1, 2)
    assert m.perp == (-2, -1)


def test_presets_move_counts():
    sizes = {"semirook": 1, "rook": 2, "semibishop": 1, "bishop": 2,
             "queen": 4, "semiqueen": 3, "frontal-queen": 3, "subqueen": 2,
             "nightrider": 4, "N1": 1, "N2-lateral": 2, "N2-inclined": 2,
             "N2-ortho": 2, "N3": 3}
    for name, k in sizes.items():
        assert len(PRESETS[name].moves) == k, name


def test_piece_rejects_parallel_moves():
    with pytest.raises(ValueError):
        piece([(1, 1), (2, 2)])
    with pytest.raises(ValueError):
        piece([])


def test_parse_piece_names_and_codes():
    assert parse_piece("queen") is PRESETS["queen"]
    assert parse_piece("Q21") is PRESETS["semiqueen"]
    assert parse_piece("q12") is PRESETS["frontal-queen"]
    assert parse_piece("lateral") is PRESETS["N2-lateral"]
    assert parse_piece("N4") is PRESETS["nightrider"]
    custom = parse_piece("(1,0);(2,1)")
    assert custom.moves == (Move(1, 0), Move(2, 1))
    with pytest.raises(ValueError):
        parse_piece("dragonrider")
    with pytest.raises(ValueError):
        parse_piece("(1,0);(oops)")


def test_attacks_examples():
    assert attacks((1, 1), (3, 3), PRESETS["queen"])
    assert attacks((0, 0), (2, 4), PRESETS["nightrider"])
    assert not attacks((1, 2), (3, 5), PRESETS["rook"])


def test_attacks_symmetric_and_coincident_random():
    rng = random.Random(11)
    pieces = [PRESETS["queen"], PRESETS["nightrider"], PRESETS["N3"]]
    for _ in range(200):
        z1 = (Fraction(rng.randint(-8, 8), rng.randint(1, 5)),
              Fraction(rng.randint(-8, 8), rng.randint(1, 5)))
        z2 = (Fraction(rng.randint(-8, 8), rng.randint(1, 5)),
              Fraction(rng.randint(-8, 8), rng.randint(1, 5)))
        for p in pieces:
            assert attacks(z1, z2, p) == attacks(z2, z1, p)
            assert attacks(z1, z1, p)


def test_board_constructors():
    sq = Board.square()
    assert sq.kind == "square" and len(sq.corners) == 4
    tri = Board.triangle()
    assert tri.corners == ((0, 0), (1, 1), (0, 1))
    poly = Board.polygon([(0, 0), (2, 0), (2, 1), (0, 1)])
    assert poly.kind == "polygon"
    with pytest.raises(ValueError):
        Board.polygon([(0, 0), (1, 0)])
    with pytest.raises(ValueError):
        Board.polygon([(0, 0), (1, 0), (2, 0), (1, 1)])  # collinear corners
    with pytest.raises(ValueError):
        Board.polygon([(0, 0), (1, 1), (1, 0), (0, 1)])  # not boundary order


def test_antipode_square_examples():
    sq = Board.square()
    assert antipode(sq, (0, 0), canonical_move(1, 2)) == (Fraction(1, 2), 1)
    assert antipode(sq, (0, 1), canonical_move(1, 1)) is None
    assert antipode(sq, (1, 0), canonical_move(1, 1)) is None
    # move parallel to an edge: the other endpoint of that edge
    assert antipode(sq, (0, 0), canonical_move(1, 0)) == (1, 0)


def test_antipode_triangle_hypotenuse():
    tri = Board.triangle()
    assert antipode(tri, (0, 0), canonical_move(1, 1)) == (1, 1)
    assert antipode(tri, (0, 1), canonical_move(1, 1)) is None


def test_antipode_requires_corner():
    with pytest.raises(ValueError):
        antipode(Board.square(), (Fraction(1, 2), 0), canonical_move(1, 1))


def test_antipode_involution_on_square():
    rng = random.Random(3)
    sq = Board.square()
    for _ in range(50):
        c, d = rng.randint(-6, 6), rng.randint(-6, 6)
        if (c, d) == (0, 0):
            continue
        m = canonical_move(c, d)
        for corner in sq.corners:
            other = antipode(sq, corner, m)
            if other is not None and other in sq.corners:
                assert antipode(sq, other, m) == corner
