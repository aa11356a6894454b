from fractions import Fraction

import pytest

from riderlab import configs as cf
from riderlab import polytope as pt
from riderlab.errors import UnsatisfiedConstraintError
from riderlab.exactmath import fib
from riderlab.model import PRESETS, canonical_move

M = canonical_move


def test_trajectory_13_4():
    t = cf.generate_trajectory(13, 4, 8)
    assert t.anchor == (0, 0)
    assert t.points[1] == (1, Fraction(4, 13))
    assert t.points[3] == (1, Fraction(8, 13))
    assert t.points[5] == (1, Fraction(12, 13))
    assert t.points[7] == (Fraction(1, 4), 1)
    assert cf.config_denominator(t) == 52


def test_trajectory_unit_slope_stops_at_far_corner():
    t = cf.generate_trajectory(1, 1, 3)
    assert t.points == ((0, 0), (1, 1))


def test_trajectory_2_1_denominators():
    t = cf.generate_trajectory(2, 1, 5)
    denoms = {c.denominator for p in t.points for c in p}
    assert denoms <= {1, 2}
    assert t.points[-1] == (1, 1)  # corner ends a primitive trajectory


def test_trajectory_denominators_stay_in_c_and_d():
    for c, d in ((5, 2), (7, 3), (4, 3), (13, 4)):
        t = cf.generate_trajectory(c, d, 30)
        denoms = {coord.denominator for p in t.points for coord in p}
        assert denoms <= {1, c, d}, (c, d, denoms)


def test_trajectory_validation():
    with pytest.raises(ValueError):
        cf.generate_trajectory(4, 2, 5)
    with pytest.raises(ValueError):
        cf.generate_trajectory(3, 1, 0)


def test_golden_rectangle_positions_match_closed_form():
    for q in range(4, 25):
        g = cf.golden_rectangle(q)
        for i in range(1, q + 1):
            assert g.positions[i - 1] == cf.golden_rectangle_position(i), (q, i)
        assert len(g.move_equations) == 2 * q - 3
        assert g.claimed_delta == fib(q // 2)
        assert cf.config_denominator(g) == fib(q // 2)


def test_golden_rectangle_q12():
    g = cf.golden_rectangle(12)
    assert g.claimed_delta == 13
    assert sorted(g.bounding_box()) == [8, 13]
    assert cf.is_vertex(g, PRESETS["semiqueen"])


def test_golden_rectangle_q4_anchor_and_guard():
    g = cf.golden_rectangle(4)
    assert g.positions[3] == (2, 0)
    with pytest.raises(ValueError):
        cf.golden_rectangle(3)


def test_rectangle_is_vertex_for_semiqueen_only():
    g = cf.golden_rectangle(8)
    assert cf.is_vertex(g, PRESETS["semiqueen"])
    assert cf.is_vertex(g, PRESETS["queen"])       # moves are a superset
    assert not cf.is_vertex(g, PRESETS["rook"])     # diagonal move missing


def test_parallelogram_table_three_move_nightrider():
    table = cf.golden_parallelogram_table(PRESETS["N3"], 13)
    assert sorted(c.claimed_delta for c in table) == \
        sorted([172, 110, 158, 152, 125, 139])


def test_parallelogram_identity_choice_reproduces_rectangle():
    sq = PRESETS["semiqueen"]
    match = [cf.golden_parallelogram(sq, (i, j), 8)
             for i, j in ((2, 0), (0, 2))]
    assert any(p.positions == cf.golden_rectangle(8).positions for p in match)


def test_parallelogram_explicit_vectors_and_errors():
    n3 = PRESETS["N3"]
    wm = cf.weighted_moves(n3)
    assert set(wm) == {(6, -3), (-10, -5), (4, 8)}
    cfg = cf.golden_parallelogram(n3, ((10, 5), (6, -3)), 13)
    assert cfg.claimed_delta == 172
    with pytest.raises(ValueError):
        cf.golden_parallelogram(n3, ((3, 3), (6, -3)), 13)
    with pytest.raises(ValueError):
        cf.golden_parallelogram(n3, (0, 0), 13)
    with pytest.raises(ValueError):
        cf.golden_parallelogram(PRESETS["queen"], (0, 1), 13)


def test_parallelograms_are_vertices():
    for cfg in cf.golden_parallelogram_table(PRESETS["N3"], 9):
        assert cf.is_vertex(cfg, PRESETS["N3"])
    for cfg in cf.golden_parallelogram_table(PRESETS["frontal-queen"], 10):
        assert cf.is_vertex(cfg, PRESETS["frontal-queen"])


def test_queens_spiral_values():
    s8 = cf.queens_spiral(8)
    assert s8.claimed_delta == 21
    assert sorted(s8.bounding_box()) == [13, 21]
    assert cf.is_vertex(s8, PRESETS["queen"])
    for q in range(4, 17):
        s = cf.queens_spiral(q)
        assert s.claimed_delta == fib(q - 1)
        assert sorted(s.bounding_box()) == sorted([fib(q - 1), fib(q - 2)])
        assert len(s.move_equations) == 2 * q - 3
    with pytest.raises(ValueError):
        cf.queens_spiral(3)


def test_spiral_missing_fixation_is_not_vertex():
    s = cf.queens_spiral(8)
    broken = cf.GeneratedConfig(s.positions, s.scale, s.move_equations,
                                s.fixations[:2], s.label, s.claimed_delta)
    assert not cf.is_vertex(broken, PRESETS["queen"])
    from riderlab.counting import _hyperplane_row
    from riderlab.exactmath import rank
    rows = [list(_hyperplane_row(i, j, m, 8)) for (i, j, m) in s.move_equations]
    for (axis, i, _) in broken.fixations:
        row = [0] * 16
        row[2 * (i - 1) + (0 if axis == "x" else 1)] = 1
        rows.append(row)
    assert rank(rows) == 15  # 2q - 1


def test_twisted_spiral_nightrider_captions():
    nr = PRESETS["nightrider"]
    natural = (M(2, 1), M(1, -2), M(1, 2), M(2, -1))
    kite = (M(1, -2), M(2, 1), M(1, 2), M(2, -1))
    expected = {5: (286, 346), 6: (1585, 2030), 7: (8914, 11626)}
    for q, (dn, dk) in expected.items():
        a = cf.twisted_spiral(nr, natural, q)
        b = cf.twisted_spiral(nr, kite, q)
        assert (a.claimed_delta, b.claimed_delta) == (dn, dk)
        assert cf.is_vertex(a, nr) and cf.is_vertex(b, nr)


def test_twisted_spiral_queen_assignment_matches_spiral():
    qn = PRESETS["queen"]
    assignment = (M(1, 1), M(1, -1), M(0, 1), M(1, 0))
    tw = cf.twisted_spiral(qn, assignment, 8)
    assert tw.claimed_delta == cf.queens_spiral(8).claimed_delta == 21


def test_twisted_spiral_validation():
    with pytest.raises(ValueError):
        cf.twisted_spiral(PRESETS["N3"], PRESETS["N3"].moves, 6)
    with pytest.raises(ValueError):
        cf.twisted_spiral(PRESETS["nightrider"],
                          (M(2, 1), M(2, 1), M(1, 2), M(2, -1)), 6)


def test_config_denominator_triangle_example():
    cfg = cf.GeneratedConfig(
        positions=((0, 3), (6, 0), (10, 8)),
        scale=10,
        move_equations=((1, 2, M(2, -1)), (1, 3, M(2, 1)), (2, 3, M(1, 2))),
        fixations=(("x", 1, 0), ("y", 2, 0), ("x", 3, 10)),
        label="triangle",
        claimed_delta=10)
    assert cf.config_denominator(cfg) == 10
    assert cf.is_vertex(cfg, PRESETS["N3"])


def test_config_denominator_integral_corners():
    cfg = cf.GeneratedConfig(
        positions=((0, 0), (1, 1)), scale=1,
        move_equations=((1, 2, M(1, 1)),),
        fixations=(("x", 1, 0), ("y", 1, 0), ("x", 2, 1)),
        label="corners", claimed_delta=1)
    assert cf.config_denominator(cfg) == 1


def test_config_denominator_rejects_unsatisfied():
    cfg = cf.GeneratedConfig(
        positions=((0, 3), (6, 1), (10, 8)), scale=10,
        move_equations=((1, 2, M(2, -1)),),
        fixations=(("x", 1, 0),),
        label="broken", claimed_delta=10)
    with pytest.raises(UnsatisfiedConstraintError):
        cf.config_denominator(cfg)


def test_triangle_config_appears_in_enumeration():
    cfg = cf.GeneratedConfig(
        positions=((0, 3), (6, 0), (10, 8)),
        scale=10,
        move_equations=((1, 2, M(2, -1)), (1, 3, M(2, 1)), (2, 3, M(1, 2))),
        fixations=(("x", 1, 0), ("y", 2, 0), ("x", 3, 10)),
        label="triangle", claimed_delta=10)
    unit = tuple(c for pt_ in cfg.unit_positions for c in pt_)
    records = pt.enumerate_vertices(PRESETS["N3"], 3)
    by_pos = {rec.position: rec for rec in records}
    assert unit in by_pos
    assert by_pos[unit].denominator == 10


def test_frontal_queen_parallelogram_case_formulas():
    fq = PRESETS["frontal-queen"]
    for q in range(12, 21):
        deltas = {c.claimed_delta for c in cf.golden_parallelogram_table(fq, q)}
        h, r = q // 2, q % 4
        value_a = {0: 2 * fib(h) - 1, 1: fib(h + 2) - 1,
                   2: fib(h + 1) - 1, 3: fib(h + 1) + fib(h - 1) - 1}[r]
        value_c = {0: fib(h + 1) - 1, 1: fib(h + 1) + fib(h - 1) - 1,
                   2: 2 * fib(h) - 1, 3: fib(h + 2) - 1}[r]
        assert value_a in deltas and value_c in deltas, (q, deltas)


def test_frontal_queen_q12_caption_values():
    fq = PRESETS["frontal-queen"]
    deltas = sorted({c.claimed_delta for c in cf.golden_parallelogram_table(fq, 12)},
                    reverse=True)
    assert deltas == [25, 21, 20]


def test_exponential_growth_witness_spot():
    for name in ("semiqueen", "N3"):
        spec = PRESETS[name]
        for q in (12, 13, 16):
            bound = fib(q // 2) - 1
            assert all(c.claimed_delta >= bound
                       for c in cf.golden_parallelogram_table(spec, q))
    assert cf.golden_rectangle(16).claimed_delta >= fib(8) - 1
