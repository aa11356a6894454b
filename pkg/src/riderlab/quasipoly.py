"""Quasipolynomials: representation, exact fitting, period detection.

A quasipolynomial of period p is p polynomial constituents dispatched on
n mod p (mathematical modulus, so negative n evaluate via the residue in
{0, ..., p-1}). Coefficients are exact rationals stored constant-term first.

Counting quasipolynomials evaluated at n = -1 give the number of
combinatorially distinct nonattacking configuration types.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .exactmath import solve_linear, SingularSystemError, InconsistentSystemError


class FitError(ValueError):
    pass


class InsufficientSamplesError(FitError):
    pass


class InconsistentFitError(FitError):
    pass


class PeriodNotFoundError(FitError):
    pass


@dataclass(frozen=True)
class Quasipolynomial:
    degree: int
    period: int
    constituents: tuple[tuple[Fraction, ...], ...]  # [residue][power], constant first

    def __post_init__(self):
        if self.period < 1 or len(self.constituents) != self.period:
            raise ValueError("need one constituent per residue class")
        if any(len(c) != self.degree + 1 for c in self.constituents):
            raise ValueError("constituents must all have degree+1 coefficients")
        object.__setattr__(
            self, "constituents",
            tuple(tuple(Fraction(v) for v in c) for c in self.constituents))

    def evaluate(self, n: int) -> Fraction:
        coeffs = self.constituents[n % self.period]
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * n + c
        return acc

    def gamma(self, i: int, residue: int = 0) -> Fraction:
        """Coefficient of n^(degree - i) in the constituent for the residue."""
        if not 0 <= i <= self.degree:
            raise ValueError("coefficient index out of range")
        return self.constituents[residue % self.period][self.degree - i]

    def leading(self) -> Fraction:
        return self.constituents[0][self.degree]

    def with_period(self, p: int) -> "Quasipolynomial":
        """Re-express with a period that is a multiple of the current one."""
        if p % self.period:
            raise ValueError("new period must be a multiple")
        reps = tuple(self.constituents[r % self.period] for r in range(p))
        return Quasipolynomial(self.degree, p, reps)

    def to_json(self) -> str:
        return json.dumps({
            "degree": self.degree,
            "period": self.period,
            "constituents": [
                [f"{c.numerator}/{c.denominator}" for c in row]
                for row in self.constituents
            ],
        }, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "Quasipolynomial":
        data = json.loads(text)
        rows = tuple(
            tuple(Fraction(item) for item in row) for row in data["constituents"])
        return Quasipolynomial(data["degree"], data["period"], rows)


def evaluate(qp: Quasipolynomial, n: int) -> Fraction:
    return qp.evaluate(n)


def coefficient_gamma(qp: Quasipolynomial, i: int, residue: int = 0) -> Fraction:
    return qp.gamma(i, residue)


def types_count(qp: Quasipolynomial) -> Fraction:
    """Number of combinatorial configuration types: the value at n = -1."""
    return qp.evaluate(-1)


def _fit_polynomial(samples, degree: int, known_leading) -> list[Fraction]:
    """Exact degree-d fit through (n, value) samples; verifies extras."""
    needed = degree + (0 if known_leading is not None else 1)
    if len(samples) < needed:
        raise InsufficientSamplesError(
            f"need {needed} samples per residue, got {len(samples)}")
    use = samples[:needed]
    ncoef = degree + 1
    if known_leading is None:
        mat = [[Fraction(n) ** p for p in range(ncoef)] for n, _ in use]
        rhs = [Fraction(v) for _, v in use]
    else:
        mat = [[Fraction(n) ** p for p in range(degree)] for n, _ in use]
        rhs = [Fraction(v) - Fraction(known_leading) * Fraction(n) ** degree for n, v in use]
    try:
        sol = solve_linear(mat, rhs)
    except (SingularSystemError, InconsistentSystemError) as exc:
        raise InsufficientSamplesError(f"degenerate sample placement: {exc}") from exc
    coeffs = list(sol) + ([Fraction(known_leading)] if known_leading is not None else [])
    for n, v in samples:
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * n + c
        if acc != v:
            raise InconsistentFitError(
                f"samples inconsistent with degree {degree} at n={n}")
    return coeffs


def interpolate(values, degree: int, period: int,
                known_leading=None) -> Quasipolynomial:
    """Exact quasipolynomial through the (n, value) samples.

    Needs degree+1 samples per residue class (degree if the leading
    coefficient is supplied); any surplus samples are consistency-checked.
    """
    by_res: dict[int, list] = {r: [] for r in range(period)}
    for n, v in sorted(values):
        by_res[n % period].append((n, v))
    rows = []
    for r in range(period):
        rows.append(tuple(_fit_polynomial(by_res[r], degree, known_leading)))
    return Quasipolynomial(degree, period, tuple(rows))


def detect_period(values, degree: int, max_period: int, holdout: int = 2) -> int:
    """Smallest period whose fit predicts `holdout` reserved samples per residue."""
    if holdout < 1:
        raise ValueError("holdout must be positive")
    values = sorted(values)
    for p in range(1, max_period + 1):
        by_res: dict[int, list] = {r: [] for r in range(p)}
        for n, v in values:
            by_res[n % p].append((n, v))
        if any(len(s) < degree + 1 + holdout for s in by_res.values()):
            raise InsufficientSamplesError(
                f"not enough samples to test period {p} with holdout {holdout}")
        try:
            fit = interpolate(
                [s for r in range(p) for s in by_res[r][:-holdout]], degree, p)
        except FitError:
            continue
        if all(fit.evaluate(n) == v
               for r in range(p) for n, v in by_res[r][-holdout:]):
            return p
    raise PeriodNotFoundError(f"no period <= {max_period} fits")


def parity_check(qp: Quasipolynomial, d: int) -> bool:
    """Reflection identity for subspace counts of degree d.

    Constituent alpha_{-i} evaluated at -n must equal (-1)^d alpha_i(n) as a
    polynomial identity: a[-i mod p][j] * (-1)^j == (-1)^d * a[i][j].
    """
    p = qp.period
    for i in range(p):
        a_i = qp.constituents[i]
        a_ri = qp.constituents[(-i) % p]
        for j in range(qp.degree + 1):
            if a_ri[j] * (-1) ** j != a_i[j] * (-1) ** d:
                return False
    return True


def sample_budget(kappa: int, codim: int, p: int) -> int:
    """Values sufficient to pin down all constituents of a subspace count."""
    if codim > 2 * kappa:
        raise ValueError("codimension cannot exceed 2*kappa")
    eps = 1 if codim % 2 == 0 else 0
    return ceil(Fraction(p) * (Fraction(kappa) - Fraction(codim, 2))) + eps


def interpolate_parity(values, kappa: int, codim: int, period: int) -> Quasipolynomial:
    """Fit a subspace count using the parity structure of its constituents.

    Unknowns: one shared leading coefficient; for residue 0 (and p/2 when p is
    even) only the coefficients with j = degree (mod 2); full coefficient rows
    for 0 < i < p/2; residues above p/2 are reflections. With well-placed
    samples, sample_budget(kappa, codim, p) values suffice.
    """
    d = 2 * kappa - codim
    p = period
    unknowns: list[tuple[int, int]] = [(-1, d)]  # shared leading coefficient
    for i in range(0, p // 2 + 1):
        if i == 0 or (p % 2 == 0 and i == p // 2):
            js = [j for j in range(d) if (d - j) % 2 == 0]
        else:
            js = list(range(d))
        unknowns.extend((i, j) for j in js)
    index = {u: k for k, u in enumerate(unknowns)}

    def row_for(n: int):
        r = n % p
        i = r if r <= p // 2 else None
        row = [Fraction(0)] * len(unknowns)
        row[index[(-1, d)]] = Fraction(n) ** d
        if i is not None:
            for j in range(d):
                key = (i, j)
                if key in index:
                    row[index[key]] = Fraction(n) ** j
        else:
            mirror = p - r
            for j in range(d):
                key = (mirror, j)
                if key in index:
                    # a[r][j] = (-1)^(d-j) * a[p-r][j]
                    row[index[key]] = Fraction(n) ** j * (-1) ** (d - j)
        return row

    samples = sorted(values)
    mat = [row_for(n) for n, _ in samples]
    rhs = [Fraction(v) for _, v in samples]
    # Greedily keep rows that raise the rank, then solve the square core.
    from .exactmath import rank as _rank

    sel_rows, sel_rhs = [], []
    for row, b in zip(mat, rhs):
        if len(sel_rows) == len(unknowns):
            break
        if _rank(sel_rows + [row]) > len(sel_rows):
            sel_rows.append(row)
            sel_rhs.append(b)
    try:
        sol = solve_linear(sel_rows, sel_rhs)
    except (SingularSystemError, InconsistentSystemError) as exc:
        raise InsufficientSamplesError(f"parity fit needs better-placed samples: {exc}") from exc
    coef: dict[tuple[int, int], Fraction] = {u: sol[k] for u, k in index.items()}
    rows = []
    for r in range(p):
        i = r if r <= p // 2 else p - r
        sign_needed = r <= p // 2
        row = []
        for j in range(d):
            base = coef.get((i, j), Fraction(0))
            row.append(base if sign_needed else base * (-1) ** (d - j))
        row.append(coef[(-1, d)])
        rows.append(tuple(row))
    fit = Quasipolynomial(d, p, tuple(rows))
    for n, v in samples:
        if fit.evaluate(n) != v:
            raise InconsistentFitError(f"parity fit mismatch at n={n}")
    return fit
