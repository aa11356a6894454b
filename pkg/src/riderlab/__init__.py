"""riderlab: exact counting of nonattacking rider placements on square and
triangular boards, Ehrhart quasipolynomial fitting and period detection, and
vertex/denominator analysis of the associated inside-out polytopes."""

from .exactmath import Rational, fib, stirling_first, stirling_second, elem_sym, solve_linear
from .model import (Board, Configuration, Move, PieceSpec, PRESETS, attacks,
                    antipode, canonical_move, parse_piece, piece)
from .counting import (CountRecord, IntersectionLattice, Subspace, alpha_line,
                       beta_line, build_lattice, count_placements,
                       count_record, count_via_mobius, subspace_count)
from .quasipoly import (Quasipolynomial, coefficient_gamma, detect_period,
                        evaluate, interpolate, interpolate_parity, parity_check,
                        sample_budget, types_count)
from .formulas import formula_eval, formula_ids, closed_form_count
from .polytope import (Constraint, VertexRecord, enumerate_vertices,
                       max_vertex_denominator, one_move_denominator,
                       polytope_denominator, triangle_denominator,
                       triangle_weights, two_move_denominator,
                       vertex_denominators)
from .configs import (GeneratedConfig, Trajectory, config_denominator,
                      generate_trajectory, golden_parallelogram,
                      golden_parallelogram_table, golden_rectangle, is_vertex,
                      queens_spiral, twisted_spiral)
from .oeis import OeisEntry, oeis_fetch, verify_against_oeis
from .svgout import emit_svg
from .errors import BudgetExceededError, UnsatisfiedConstraintError

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
