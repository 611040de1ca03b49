"""Truncated power-series expansion of the H and F generating functions.

Both are of the form ``N / (1 - (T1 + T2))`` with monomials in x, y, q. The
series ``S`` satisfies ``S = N + S * (T1 + T2)``, so the coefficients at
q-degree ``e`` depend only on lower degrees and one pass per degree suffices.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

Monomial = tuple[int, int, int]  # exponents of (x, y, q)


class TruncationError(IndexError):
    """Coefficient requested beyond the truncation cap."""


class GradingError(AssertionError):
    """A monomial with q-exponent other than alpha + lambda - 1 appeared."""


@dataclass(frozen=True)
class TruncatedBivariateSeries:
    cap: int
    coeff: dict[tuple[int, int], int] = field(default_factory=dict)

    def coefficient(self, alpha: int, lambda_: int) -> int:
        if alpha + lambda_ - 1 > self.cap:
            raise TruncationError(
                f"perimeter {alpha + lambda_ - 1} is beyond the series cap {self.cap}"
            )
        return self.coeff.get((alpha, lambda_), 0)

    def perimeter_sums(self) -> "TruncatedUnivariateSeries":
        """Set x = y = 1: collapse each fixed-perimeter diagonal."""
        out = [0] * (self.cap + 1)
        for (alpha, lam), c in self.coeff.items():
            out[alpha + lam - 1] += c
        return TruncatedUnivariateSeries(self.cap, tuple(out))


@dataclass(frozen=True)
class TruncatedUnivariateSeries:
    cap: int
    coeffs: tuple[int, ...]  # index n holds the coefficient of q^n

    def coefficient(self, n: int) -> int:
        if n > self.cap:
            raise TruncationError(f"degree {n} is beyond the series cap {self.cap}")
        if n < 0:
            return 0
        return self.coeffs[n]


def coefficient(series, *index):
    """``coefficient(s, alpha, lambda_)`` or ``coefficient(s, n)``."""
    return series.coefficient(*index)


def expand_geometric(numerator: Monomial, steps: list[Monomial], cap: int,
                     check_grading: bool = True) -> TruncatedBivariateSeries:
    """Expand ``numerator / (1 - sum(steps))`` up to q-degree ``cap``.

    Each step monomial must have positive q-degree. With ``check_grading``
    every produced monomial is asserted to lie on ``q = alpha + lambda - 1``.
    """
    if any(s[2] < 1 for s in steps):
        raise ValueError("every step needs positive q-degree")
    layers: list[dict[tuple[int, int], int]] = [defaultdict(int) for _ in range(cap + 1)]
    nx, ny, nq = numerator
    if nq <= cap:
        layers[nq][nx, ny] += 1
    for e in range(cap + 1):
        layer = layers[e]
        if check_grading:
            for x, y in layer:
                if x + y - 1 != e:
                    raise GradingError(f"monomial x^{x} y^{y} q^{e} breaks the perimeter grading")
        for sx, sy, sq in steps:
            target = e + sq
            if target > cap:
                continue
            dest = layers[target]
            for (x, y), c in layer.items():
                dest[x + sx, y + sy] += c
    coeff = {}
    for layer in layers:
        for key, c in layer.items():
            if c:
                coeff[key] = c
    return TruncatedBivariateSeries(cap, coeff)


def expand_H(d: int, a: int, cap: int) -> TruncatedBivariateSeries:
    """x^a y q^a / (1 - (x q + x^d y q^(d+1)))."""
    return expand_geometric((a, 1, a), [(1, 0, 1), (d, 1, d + 1)], cap)


def expand_F(d: int, a: int, cap: int) -> TruncatedBivariateSeries:
    """x^a y q^a / (1 - (y q + x^(d+1) q^(d+1)))."""
    return expand_geometric((a, 1, a), [(0, 1, 1), (d + 1, 0, d + 1)], cap)


def _expand_univariate(start: int, step_degrees: list[int], cap: int) -> TruncatedUnivariateSeries:
    out = [0] * (cap + 1)
    if start <= cap:
        out[start] = 1
    for e in range(cap + 1):
        for s in step_degrees:
            if e - s >= 0:
                out[e] += out[e - s]
    return TruncatedUnivariateSeries(cap, tuple(out))


def expand_h_univariate(d: int, a: int, cap: int) -> TruncatedUnivariateSeries:
    """q^a / (1 - (q + q^(d+1))), the x = y = 1 specialization of H and F."""
    return _expand_univariate(a, [1, d + 1], cap)


def expand_h_univariate_printed(d: int, a: int, cap: int) -> TruncatedUnivariateSeries:
    """q^a / (1 - (q + q^d)): the denominator as printed in the source.

    Kept only to show that it does not match the counts; see
    ``scripts/denominator_check.py``.
    """
    return _expand_univariate(a, [1, d], cap)
