"""Closed-form counting formulas and coefficient identities.

Rook counts have the elementary falling-factorial formula; bishops (q <= 6)
and queens (q <= 4) carry transcribed quasipolynomial tables; nightriders and
their partial pieces have the degree-4 two-piece formula; the semibishop has
the Stirling closed form, with the triangular board giving a single Stirling
number. Arshon's per-color bishop sums and the Stirling-number double sum
restatement are included as independent oracles for the bishop counts.

All evaluators return exact Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exactmath import binomial, falling, stirling_first, stirling_second
from .quasipoly import Quasipolynomial

F = Fraction


def _pm(main, alt) -> Quasipolynomial:
    """Quasipolynomial {main} + (-1)^n {alt}; coefficient lists constant-first."""
    deg = len(main) - 1
    main = list(main) + [0] * 0
    alt = list(alt) + [0] * (len(main) - len(alt))
    even = tuple(F(a) + F(b) for a, b in zip(main, alt))
    odd = tuple(F(a) - F(b) for a, b in zip(main, alt))
    return Quasipolynomial(deg, 2, (even, odd))


def _poly(coeffs) -> Quasipolynomial:
    return Quasipolynomial(len(coeffs) - 1, 1, (tuple(F(c) for c in coeffs),))


BISHOP_TABLE: dict[int, Quasipolynomial] = {
    1: _poly([0, 0, 1]),
    2: _poly([0, F(-1, 3), F(1, 2), F(-2, 3), F(1, 2)]),
    3: _pm(
        [F(1, 8), F(-2, 3), F(4, 3), F(-5, 3), F(5, 4), F(-2, 3), F(1, 6)],
        [F(-1, 8)]),
    4: _pm(
        [F(1, 2), F(-73, 30), F(337, 72), F(-35, 6), F(355, 72), F(-29, 10),
         F(11, 9), F(-1, 3), F(1, 24)],
        [F(-1, 2), F(1, 2), F(-1, 8)]),
    5: _pm(
        [F(9, 4), F(-1321, 120), F(2599, 120), F(-4853, 180), F(3413, 144),
         F(-2731, 180), F(523, 72), F(-118, 45), F(49, 72), F(-1, 9), F(1, 120)],
        [F(-9, 4), F(85, 24), F(-17, 8), F(7, 12), F(-1, 16)]),
    6: _pm(
        [F(765, 64), F(-7517, 126), F(14579, 120), F(-498557, 3240),
         F(199519, 1440), F(-100459, 1080), F(2873, 60), F(-72991, 3780),
         F(8819, 1440), F(-4813, 3240), F(37, 144), F(-1, 36), F(1, 720)],
        [F(-765, 64), F(47, 2), F(-467, 24), F(211, 24), F(-221, 96), F(1, 3),
         F(-1, 48)]),
}


def _queen4() -> Quasipolynomial:
    a = [F(253, 54), F(-18131, 270), F(3989, 24), F(-19103, 108), F(817, 8),
         F(-1051, 30), F(65, 9), F(-5, 6), F(1, 24)]
    b = [F(-7, 2), F(7), F(-21, 8), F(1, 4)]
    rows = []
    for r in range(6):
        sign = 1 if r % 2 == 0 else -1
        coeffs = [c + sign * (b[k] if k < len(b) else 0) for k, c in enumerate(a)]
        rm3 = r % 3
        # Re(z3^n) * 32(n-1)/27 and Im(z3^n) * 40*sqrt(3)/81, expanded per residue.
        re = F(1) if rm3 == 0 else F(-1, 2)
        im_term = F(0) if rm3 == 0 else (F(20, 27) if rm3 == 1 else F(-20, 27))
        coeffs[1] += re * F(32, 27)
        coeffs[0] += -re * F(32, 27) + im_term
        rows.append(tuple(coeffs))
    return Quasipolynomial(8, 6, tuple(rows))


QUEEN_TABLE: dict[int, Quasipolynomial] = {
    1: _poly([0, 0, 1]),
    2: _poly([0, F(-1, 3), F(3, 2), F(-5, 3), F(1, 2)]),
    3: _pm(
        [F(1, 8), F(-43, 12), F(11), F(-25, 2), F(79, 12), F(-5, 3), F(1, 6)],
        [F(-1, 8), F(1, 4)]),
    4: _queen4(),
}

SEMIBISHOP_TABLE: dict[int, Quasipolynomial] = {
    1: _poly([0, 0, 1]),
    2: _poly([0, F(-1, 6), 0, F(-1, 3), F(1, 2)]),
    3: _poly([0, 0, F(1, 6), F(-1, 6), F(1, 6), F(-1, 3), F(1, 6)]),
    4: _poly([0, F(1, 60), F(1, 72), F(-1, 6), F(2, 9), F(-11, 60), F(2, 9),
              F(-1, 6), F(1, 24)]),
}


def partial_nightrider_q2(k: int) -> Quasipolynomial:
    """Two-piece count for a partial nightrider with k of the four moves."""
    if not 1 <= k <= 4:
        raise ValueError("k must be between 1 and 4")
    even = (F(0), F(-k, 6), F(k - 1, 2), F(-5 * k, 24), F(1, 2))
    odd = (F(0), F(-k, 6) - F(k, 8), F(k - 1, 2), F(-5 * k, 24), F(1, 2))
    return Quasipolynomial(4, 2, (even, odd))


NIGHTRIDER_Q2 = partial_nightrider_q2(4)


def rook_count(q: int, n: int) -> Fraction:
    """q! C(n,q)^2 as the exact rational (n)_q^2 / q!; valid for negative n."""
    return F(falling(n, q)) ** 2 / factorial(q)


def semirook_count(q: int, n: int) -> Fraction:
    """One horizontal move: q distinct rows, a free column each: C(n,q) n^q."""
    return F(binomial(n, q)) * F(n) ** q


def semibishop_count(q: int, n: int) -> Fraction:
    """(-1)^q sum_k s(n+1, n+1-k) s(n, n-(q-k)); needs n >= 0."""
    if n < 0:
        raise ValueError("Stirling closed form needs n >= 0")
    total = sum(stirling_first(n + 1, n + 1 - k) * stirling_first(n, n - (q - k))
                for k in range(q + 1))
    return F((-1) ** q * total)


def triangle_semibishop_count(q: int, n: int) -> Fraction:
    """Unlabelled semibishops on the n x n triangular board: |s(n+1, n+1-q)|."""
    if n < 0:
        raise ValueError("needs n >= 0")
    return F((-1) ** q * stirling_first(n + 1, n + 1 - q))


def arshon_black(n: int, i: int) -> Fraction:
    """Nonattacking bishops on the black squares of an n x n board.

    For odd n, "black" is the smaller color class (the one without corners)."""
    if i < 0:
        return F(0)
    if i > n - 1:
        return F(0)
    if n % 2 == 0:
        top = n - 1
        return sum(
            F((-1) ** j) * binomial(n - 1 - i, j)
            * F(n + 1 - i - j) ** (n // 2) * F(n - i - j) ** (n // 2 - 1)
            / factorial(n - 1 - i)
            for j in range(top + 1))
    return sum(
        F((-1) ** j) * binomial(n - 1 - i, j)
        * F(n + 1 - i - j) ** ((n - 1) // 2) * F(n - i - j) ** ((n - 1) // 2)
        / factorial(n - 1 - i)
        for j in range(n + 1))


def arshon_white(n: int, i: int) -> Fraction:
    """Nonattacking bishops on the white squares (equal to black when n is even)."""
    if i < 0:
        return F(0)
    if n % 2 == 0:
        return arshon_black(n, i)
    if i > n:
        return F(0)
    return sum(
        F((-1) ** j) * binomial(n - i, j)
        * F(n + 1 - i - j) ** ((n + 1) // 2) * F(n - i - j) ** ((n - 1) // 2)
        / factorial(n - i)
        for j in range(n + 1))


def arshon_bishop_count(q: int, n: int) -> Fraction:
    """Bishops on the full board: combine the two independent color counts."""
    return sum(arshon_black(n, i) * arshon_white(n, q - i) for i in range(q + 1))


def kotesovec_bishop_count(q: int, n: int) -> Fraction:
    """Stirling-number double-sum restatement of the bishops formula."""
    if n < 1:
        raise ValueError("needs n >= 1")
    half_up = (n + 1) // 2
    half_dn = n // 2
    total = 0
    for i in range(q + 1):
        first = sum(binomial(half_up, j) * stirling_second(j + half_dn, n - i)
                    for j in range(half_up + 1))
        second = sum(binomial(half_dn, h) * stirling_second(h + half_up, n - (q - i))
                     for h in range(half_dn + 1))
        total += first * second
    return F(total)


def rook_gamma(q: int, i: int) -> Fraction:
    """Coefficient gamma_i of n^(2q-i) in the unlabelled rook count."""
    total = sum(stirling_first(q, q - k) * stirling_first(q, q - (i - k))
                for k in range(i + 1))
    return F(total, factorial(q))


def rook_gamma_leading(i: int) -> Fraction:
    """Coefficient of q^(2i) in the polynomial q! gamma_i; sign (-1)^i."""
    total = F(0)
    for k in range(i + 1):
        inner1 = sum(F((-1) ** r) * binomial(2 * k, k + r) * stirling_second(k + r, r)
                     for r in range(k + 1))
        inner2 = sum(F((-1) ** s) * binomial(2 * (i - k), i - k + s)
                     * stirling_second(i - k + s, s) for s in range(i - k + 1))
        total += binomial(2 * i, 2 * k) * inner1 * inner2
    return total / factorial(2 * i)


def queen_gamma(q: int, i: int) -> Fraction:
    """Constant-in-n queen coefficients gamma_0..gamma_3."""
    if i == 0:
        return F(1, factorial(q))
    if i == 1:
        return -F(5, 3) / factorial(q - 2)
    if i == 2:
        return (F(25, 9) * falling(q - 2, 2) + F(61, 6) * (q - 2) + 3) \
            / (2 * factorial(q - 2))
    if i == 3:
        return -(F(125, 27) * falling(q - 2, 4) + F(305, 6) * falling(q - 2, 3)
                 + F(681, 5) * falling(q - 2, 2) + 73 * (q - 2) + 2) \
            / (6 * factorial(q - 2))
    raise ValueError("queen gamma closed forms cover i <= 3")


def nightrider_gamma(q: int, i: int, k: int = 4) -> Fraction:
    """Nightrider-family coefficients: gamma_1 for any k, gamma_2 for k=4."""
    if i == 1:
        return -F(5 * k, 24) / factorial(q - 2)
    if i == 2 and k == 4:
        return (F(25, 36) * falling(q - 2, 2) + F(1871, 720) * (q - 2) + 3) \
            / (2 * factorial(q - 2))
    raise ValueError("unsupported nightrider coefficient")


_TABLES = {
    "rook-general": lambda q, n: rook_count(q, n),
    "semibishop-general": lambda q, n: semibishop_count(q, n),
    "triangle-semibishop": lambda q, n: triangle_semibishop_count(q, n),
    "arshon-black": lambda q, n: arshon_black(n, q),
    "arshon-white": lambda q, n: arshon_white(n, q),
    "arshon-bishop": lambda q, n: arshon_bishop_count(q, n),
    "kotesovec-bishop-doublesum": lambda q, n: kotesovec_bishop_count(q, n),
    "rook-coefficient": lambda q, n: rook_gamma(q, n) * factorial(q),
    "queen-gamma": lambda q, n: queen_gamma(q, n),
    "nightrider-gamma": lambda q, n: nightrider_gamma(q, n),
}


def closed_form_count(piece, q: int, n: int) -> Fraction | None:
    """Library closed form for a preset piece's count, or None if uncovered."""
    if q == 1:
        return F(n) ** 2
    name = piece.name
    if name == "rook":
        return rook_count(q, n)
    if name == "semirook":
        return semirook_count(q, n)
    if name == "semibishop":
        return semibishop_count(q, n)
    if name == "bishop" and q in BISHOP_TABLE:
        return BISHOP_TABLE[q].evaluate(n)
    if name == "queen" and q in QUEEN_TABLE:
        return QUEEN_TABLE[q].evaluate(n)
    if name in ("nightrider", "N1", "N2-lateral", "N2-inclined", "N2-ortho", "N3") \
            and q == 2:
        return partial_nightrider_q2(len(piece.moves)).evaluate(n)
    return None


def formula_ids() -> list[str]:
    ids = sorted(_TABLES)
    ids += ["bishop-q<=6", "queen-q<=4", "nightrider-q2", "semibishop-q<=4"]
    ids += [f"partial-nightrider-q2-k{k}" for k in range(1, 5)]
    return sorted(ids)


def formula_eval(fid: str, q: int, n: int) -> Fraction:
    """Evaluate a named closed form.

    For the coefficient families (rook-coefficient, queen-gamma,
    nightrider-gamma) the third argument is the coefficient index i; for the
    Arshon per-color sums the second argument is the piece count on that
    color. Raises ValueError for unsupported (id, q).
    """
    if fid in _TABLES:
        return _TABLES[fid](q, n)
    if fid == "bishop-q<=6":
        if q not in BISHOP_TABLE:
            raise ValueError("bishop table covers q <= 6")
        return BISHOP_TABLE[q].evaluate(n)
    if fid == "queen-q<=4":
        if q not in QUEEN_TABLE:
            raise ValueError("queen table covers q <= 4")
        return QUEEN_TABLE[q].evaluate(n)
    if fid == "semibishop-q<=4":
        if q not in SEMIBISHOP_TABLE:
            raise ValueError("semibishop table covers q <= 4")
        return SEMIBISHOP_TABLE[q].evaluate(n)
    if fid == "nightrider-q2":
        if q != 2:
            raise ValueError("nightrider closed form is for q = 2")
        return NIGHTRIDER_Q2.evaluate(n)
    if fid.startswith("partial-nightrider-q2-k"):
        if q != 2:
            raise ValueError("partial nightrider closed form is for q = 2")
        return partial_nightrider_q2(int(fid.rsplit("k", 1)[1])).evaluate(n)
    raise ValueError(f"unknown formula id: {fid}")
