"""Exact integer and rational arithmetic shared by every other module.

Everything downstream (attack counting, vertex enumeration, quasipolynomial
fitting) runs over exact rationals; floats never enter a result. ``Rational``
is the standard library ``fractions.Fraction``, which already guarantees the
reduced-form invariants (gcd(|num|, den) = 1, den >= 1).

The linear solver uses fraction-free (Bareiss-style) elimination on integer
rows with gcd normalization, which keeps intermediate entries small when
solving the 2q x 2q vertex systems.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rational = Fraction

_FIB = [1, 1]
_STIRLING1: list[list[int]] = [[1]]
_STIRLING2: list[list[int]] = [[1]]


class LinearSystemError(ValueError):
    """Base class for solve_linear failures."""


class SingularSystemError(LinearSystemError):
    """System is consistent but has infinitely many solutions."""


class InconsistentSystemError(LinearSystemError):
    """System has no solution."""


def fib(i: int) -> int:
    """i-th Fibonacci number, indexed F_0 = F_1 = 1."""
    if i < 0:
        raise ValueError("fib index must be nonnegative")
    while len(_FIB) <= i:
        _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[i]


def _grow_stirling1(n: int) -> None:
    while len(_STIRLING1) <= n:
        m = len(_STIRLING1)
        prev = _STIRLING1[-1]
        row = [0] * (m + 1)
        for k in range(m + 1):
            left = prev[k - 1] if 0 <= k - 1 < m else 0
            right = prev[k] if k < m else 0
            row[k] = left - (m - 1) * right
        _STIRLING1.append(row)


def _grow_stirling2(n: int) -> None:
    while len(_STIRLING2) <= n:
        m = len(_STIRLING2)
        prev = _STIRLING2[-1]
        row = [0] * (m + 1)
        for k in range(m + 1):
            left = prev[k - 1] if 0 <= k - 1 < m else 0
            right = prev[k] if k < m else 0
            row[k] = left + k * right
        _STIRLING2.append(row)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k); 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    _grow_stirling1(n)
    return _STIRLING1[n][k]


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k); 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    _grow_stirling2(n)
    return _STIRLING2[n][k]


def elem_sym(q: int, n: int) -> int:
    """Elementary symmetric function e_q(1, 2, ..., n).

    Equals |s(n+1, n+1-q)|; computed here by the one-variable-at-a-time
    product recurrence so it can serve as an independent cross-check.
    """
    if q < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    if q > n:
        return 0
    row = [1] + [0] * q
    for v in range(1, n + 1):
        for j in range(min(q, v), 0, -1):
            row[j] += v * row[j - 1]
    return row[q]


def falling(x, k: int):
    """Falling factorial (x)_k = x (x-1) ... (x-k+1); (x)_0 = 1."""
    out = 1
    for j in range(k):
        out *= x - j
    return out


def binomial(x, k: int):
    """Binomial coefficient with integer (possibly negative) upper argument."""
    if k < 0:
        return 0
    val = Fraction(falling(x, k), 1) / falling(k, k) if k else Fraction(1)
    if val.denominator == 1:
        return int(val)
    return val


def _integer_rows(matrix) -> list[list[int]]:
    rows = []
    for row in matrix:
        frs = [Fraction(v) for v in row]
        mult = 1
        for f in frs:
            mult = mult * f.denominator // gcd(mult, f.denominator)
        rows.append([int(f * mult) for f in frs])
    return rows


def _reduce_row(row: list[int]) -> None:
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        for j in range(len(row)):
            row[j] //= g


def _echelon(rows: list[list[int]]):
    """In-place fraction-free row echelon; returns pivot column list."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f == 0:
                continue
            rows[i] = [a * lead - b * f for a, b in zip(rows[i], rows[r])]
            _reduce_row(rows[i])
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(matrix) -> int:
    rows = _integer_rows(matrix)
    if not rows:
        return 0
    return len(_echelon(rows))


def solve_linear(matrix, rhs) -> list[Fraction]:
    """Solve A x = b exactly; raises if the solution is not unique.

    Accepts rectangular systems. Raises SingularSystemError when the system
    is consistent with free variables, InconsistentSystemError when there is
    no solution.
    """
    nrows = len(matrix)
    if nrows != len(rhs):
        raise ValueError("matrix/rhs size mismatch")
    ncols = len(matrix[0]) if nrows else 0
    rows = _integer_rows([list(row) + [b] for row, b in zip(matrix, rhs)])
    pivots = _echelon(rows)
    if ncols in pivots:
        raise InconsistentSystemError("inconsistent system")
    if len(pivots) < ncols:
        raise SingularSystemError("singular system (free variables remain)")
    x: list[Fraction] = [Fraction(0)] * ncols
    for r in range(ncols - 1, -1, -1):
        c = pivots[r]
        acc = Fraction(rows[r][ncols])
        for j in range(c + 1, ncols):
            acc -= rows[r][j] * x[j]
        x[c] = acc / rows[r][c]
    return x


def nullspace(matrix) -> list[list[Fraction]]:
    """Basis of the rational nullspace of A (list of column vectors)."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    if nrows == 0:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rows = _integer_rows(matrix)
    pivots = _echelon(rows)
    rows = rows[: len(pivots)]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            acc = Fraction(0)
            for j in range(c + 1, ncols):
                if rows[r][j]:
                    acc -= rows[r][j] * vec[j]
            vec[c] = acc / rows[r][c]
        basis.append(vec)
    return basis


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else max(abs(a), abs(b))


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, v)
    return out


def primitive_integer_vector(vec) -> list[int]:
    """Scale a rational vector to coprime integers (sign of first nonzero kept)."""
    frs = [Fraction(v) for v in vec]
    mult = lcm_all(f.denominator for f in frs)
    ints = [int(f * mult) for f in frs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints
