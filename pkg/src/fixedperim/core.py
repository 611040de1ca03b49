"""Closed-form counts for fixed-perimeter partition families.

Families (all at perimeter ``n = alpha + lambda - 1``):

* ``H``   parts d-distinct and >= a
* ``F``   parts congruent to a mod d+1
* ``L``   parts congruent to +a or -a mod d+3
* ``LAB`` parts congruent to a or b mod d+3

Every count is an exact Python ``int``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class DomainError(ValueError):
    """Parameters fall outside the domain where a closed form is valid."""


class Family(str, Enum):
    H = "H"
    F = "F"
    L = "L"
    LAB = "LAB"

    @classmethod
    def parse(cls, name: str) -> "Family":
        try:
            return cls(name.upper())
        except ValueError:
            raise DomainError(f"unknown family {name!r}; expected one of h, f, l, lab") from None


@dataclass(frozen=True)
class Params:
    d: int
    a: int
    n: int
    b: int | None = None

    def __post_init__(self):
        if self.d < 1 or self.a < 1 or self.n < 1:
            raise DomainError(f"need d, a, n >= 1, got d={self.d}, a={self.a}, n={self.n}")
        if self.b is not None and self.b < 1:
            raise DomainError(f"need b >= 1, got b={self.b}")


@dataclass(frozen=True)
class RefinementCell:
    alpha: int
    lambda_: int
    count: int

    @property
    def perimeter(self) -> int:
        return self.alpha + self.lambda_ - 1


@dataclass(frozen=True)
class RefinementTable:
    family: Family
    params: Params
    cells: tuple[RefinementCell, ...]

    @property
    def total(self) -> int:
        return sum(c.count for c in self.cells)

    @property
    def arms(self) -> list[int]:
        return [c.alpha for c in self.cells]

    def as_triples(self) -> list[tuple[int, int, int]]:
        return [(c.alpha, c.lambda_, c.count) for c in self.cells]


def binomial(top: int, bottom: int) -> int:
    """``C(top, bottom)``, or 0 unless ``0 <= bottom <= top``."""
    if bottom < 0 or top < 0 or bottom > top:
        return 0
    return math.comb(top, bottom)


# -- domain helpers ---------------------------------------------------------


def _check_positive(**kw):
    for name, value in kw.items():
        if value < 1:
            raise DomainError(f"{name} must be >= 1, got {value}")


def _check_hf_domain(d: int, a: int):
    _check_positive(d=d, a=a)
    if a > d + 1:
        raise DomainError(f"closed form needs 1 <= a <= d+1, got a={a}, d={d}")


def canonical_pm_residue(d: int, a: int) -> int:
    """Representative of the class pair +a/-a mod d+3, in ``[1, (d+3)/2]``."""
    m = d + 3
    r = a % m
    r = min(r, m - r)
    if r == 0:
        raise DomainError(f"a={a} is 0 mod d+3={m}; parts cannot be congruent to 0")
    return r


def is_degenerate(d: int, a: int) -> bool:
    """True when +a and -a mod d+3 are one class (d odd, a = (d+3)/2)."""
    return 2 * canonical_pm_residue(d, a) == d + 3


def _residue(a: int, m: int) -> int:
    r = a % m
    if r == 0:
        raise DomainError(f"residue {a} is 0 mod {m}; parts cannot be congruent to 0")
    return r


# -- refined counts ---------------------------------------------------------


def h_refined(d: int, a: int, alpha: int, lambda_: int) -> int:
    """d-distinct partitions with parts >= a, largest part alpha, lambda_ parts."""
    _check_hf_domain(d, a)
    _check_positive(alpha=alpha, lambda_=lambda_)
    if alpha < a + d * (lambda_ - 1):
        return 0
    return binomial(alpha - a - (d - 1) * (lambda_ - 1), lambda_ - 1)


def f_refined(d: int, a: int, alpha: int, lambda_: int) -> int:
    """Partitions into parts = a mod d+1 with largest part alpha and lambda_ parts."""
    _check_hf_domain(d, a)
    _check_positive(alpha=alpha, lambda_=lambda_)
    if alpha < a or (alpha - a) % (d + 1):
        return 0
    return binomial((alpha - a) // (d + 1) + lambda_ - 1, lambda_ - 1)


def _multiset_count(set_size: int, lambda_: int) -> int:
    # largest part fixed; the other lambda_-1 parts are a multiset from a set of size set_size
    return binomial(set_size + lambda_ - 2, lambda_ - 1)


def l_refined(d: int, a: int, alpha: int, lambda_: int) -> int:
    """Partitions into parts = +-a mod d+3 with largest part alpha and lambda_ parts.

    ``a`` is first reduced to its canonical representative. In the degenerate
    case the two classes coincide and the admissible set holds one residue only.
    """
    _check_positive(d=d, a=a, alpha=alpha, lambda_=lambda_)
    a = canonical_pm_residue(d, a)
    m = d + 3
    if alpha < a:
        return 0
    if 2 * a == m:
        if (alpha - a) % m:
            return 0
        return _multiset_count((alpha - a) // m + 1, lambda_)
    if (alpha - a) % m == 0:
        return _multiset_count(2 * ((alpha - a) // m) + 1, lambda_)
    if (alpha + a) % m == 0:
        return _multiset_count(2 * ((alpha + a) // m), lambda_)
    return 0


def _lab_residues(d: int, a: int, b: int) -> tuple[int, ...]:
    _check_positive(d=d, a=a, b=b)
    m = d + 3
    return tuple(sorted({_residue(a, m), _residue(b, m)}))


def _count_parts_upto(alpha: int, residues: tuple[int, ...], m: int) -> int:
    return sum((alpha - r) // m + 1 for r in residues if alpha >= r)


def lab_refined(d: int, a: int, b: int, alpha: int, lambda_: int) -> int:
    """Partitions into parts = a or b mod d+3 with largest part alpha and lambda_ parts."""
    residues = _lab_residues(d, a, b)
    _check_positive(alpha=alpha, lambda_=lambda_)
    m = d + 3
    if alpha % m not in residues:
        return 0
    return _multiset_count(_count_parts_upto(alpha, residues, m), lambda_)


# -- totals -----------------------------------------------------------------


def h_total(d: int, a: int, n: int) -> int:
    _check_hf_domain(d, a)
    _check_positive(n=n)
    if n < a:
        return 0
    top = (n - a) // (d + 1) + 1
    return sum(h_refined(d, a, n - lam + 1, lam) for lam in range(1, top + 1))


def f_total(d: int, a: int, n: int) -> int:
    _check_hf_domain(d, a)
    _check_positive(n=n)
    if n < a:
        return 0
    return sum(
        f_refined(d, a, a + k * (d + 1), n - a - k * (d + 1) + 1)
        for k in range((n - a) // (d + 1) + 1)
    )


def f_total_parity_split(d: int, a: int, n: int) -> int:
    """``f_total`` with the sum over k split into its even and odd halves."""
    _check_hf_domain(d, a)
    _check_positive(n=n)
    if n < a:
        return 0
    r = n - a
    top = r // (d + 1)
    even = sum(binomial(r - 2 * k * d, r - 2 * k * d - 2 * k) for k in range(top // 2 + 1))
    odd = 0
    for k in range(1, (top + 1) // 2 + 1):
        j = 2 * k - 1
        odd += binomial(r - j * d, r - j * d - j)
    return even + odd


def l_total_cells(d: int, a: int, n: int) -> int:
    """ell total summed cell by cell over the admissible arm lengths."""
    _check_positive(d=d, a=a, n=n)
    a = canonical_pm_residue(d, a)
    m = d + 3
    if n < a:
        return 0
    arms = {a + m * k for k in range((n - a) // m + 1)}
    arms |= {m * k - a for k in range(1, (n + a) // m + 1)}
    return sum(l_refined(d, a, alpha, n - alpha + 1) for alpha in arms)


def l_total_binomial(d: int, a: int, n: int) -> int:
    """ell total as two direct binomial sums; needs the two classes to be distinct."""
    _check_positive(d=d, a=a, n=n)
    a = canonical_pm_residue(d, a)
    m = d + 3
    if 2 * a == m:
        raise DomainError(f"binomial-sum form needs a < (d+3)/2, got a={a}, d={d}")
    if n < a:
        return 0
    first = sum(
        binomial(n - a - k * d - k, n - a - k * d - 3 * k) for k in range((n - a) // m + 1)
    )
    second = sum(
        binomial(n + a - k * d - k - 1, n + a - k * d - 3 * k)
        for k in range(1, (n + a) // m + 1)
    )
    return first + second


def l_total(d: int, a: int, n: int) -> int:
    """Count of perimeter-n partitions into parts = +-a mod d+3.

    In the degenerate case the count is taken from ``f_total(d+2, a, n)``.
    """
    _check_positive(d=d, a=a, n=n)
    a = canonical_pm_residue(d, a)
    if 2 * a == d + 3:
        return f_total(d + 2, a, n)
    return l_total_binomial(d, a, n)


def l_ab_total(d: int, a: int, b: int, n: int) -> int:
    residues = _lab_residues(d, a, b)
    _check_positive(n=n)
    m = d + 3
    total = 0
    for r in residues:
        for alpha in range(r, n + 1, m):
            total += _multiset_count(_count_parts_upto(alpha, residues, m), n - alpha + 1)
    return total


def l_ab_printed_formula(d: int, a: int, b: int, n: int) -> int:
    """Evaluate the published two-sum expression for the a-or-b count.

    Diagnostic only: the first binomial's ``n-q`` is read as ``n-a``, and no
    residue canonicalization is applied. Compare against :func:`l_ab_total`.
    """
    _check_positive(d=d, a=a, b=b, n=n)
    m = d + 3
    first = second = 0
    if n >= a:
        first = sum(
            binomial(n - a - k * d - k, n - a - k * d - 3 * k) for k in range((n - a) // m + 1)
        )
    if n >= b:
        second = sum(
            binomial(n - b - k * d - k - 1, n - b - k * d - 3 * k)
            for k in range(1, (n - b) // m + 1)
        )
    return first + second


def total(family: Family | str, d: int, a: int, n: int, b: int | None = None) -> int:
    family = Family.parse(family) if isinstance(family, str) else family
    if family is Family.LAB:
        if b is None:
            raise DomainError("family LAB needs b")
        return l_ab_total(d, a, b, n)
    if b is not None:
        raise DomainError(f"b is only accepted with family LAB, not {family.value}")
    return {Family.H: h_total, Family.F: f_total, Family.L: l_total}[family](d, a, n)


def refined(family: Family | str, d: int, a: int, alpha: int, lambda_: int,
            b: int | None = None) -> int:
    family = Family.parse(family) if isinstance(family, str) else family
    if family is Family.LAB:
        if b is None:
            raise DomainError("family LAB needs b")
        return lab_refined(d, a, b, alpha, lambda_)
    return {Family.H: h_refined, Family.F: f_refined, Family.L: l_refined}[family](
        d, a, alpha, lambda_
    )


# -- duality ----------------------------------------------------------------


def duality_map(d: int, a: int, alpha: int, lambda_: int) -> tuple[int, int]:
    """Send an H cell (alpha, lambda_) to the F cell with the same count and perimeter."""
    _check_hf_domain(d, a)
    _check_positive(alpha=alpha, lambda_=lambda_)
    if alpha < a + d * (lambda_ - 1):
        raise DomainError(f"cell ({alpha}, {lambda_}) is outside the H support for d={d}, a={a}")
    return a + (d + 1) * (lambda_ - 1), alpha - a - d * (lambda_ - 1) + 1


def duality_inverse(d: int, a: int, alpha: int, lambda_: int) -> tuple[int, int]:
    """Inverse of :func:`duality_map` on the F support."""
    _check_hf_domain(d, a)
    _check_positive(alpha=alpha, lambda_=lambda_)
    if alpha < a or (alpha - a) % (d + 1):
        raise DomainError(f"cell ({alpha}, {lambda_}) is outside the F support for d={d}, a={a}")
    leg = (alpha - a) // (d + 1) + 1
    return lambda_ - 1 + a + d * (leg - 1), leg


# -- tables -----------------------------------------------------------------


def refinement_table(family: Family | str, d: int, a: int, n: int,
                     b: int | None = None) -> RefinementTable:
    """Nonzero (alpha, lambda, count) cells at perimeter n.

    H cells are ordered by lambda ascending, the others by alpha ascending.
    """
    family = Family.parse(family) if isinstance(family, str) else family
    if family is not Family.LAB and b is not None:
        raise DomainError(f"b is only accepted with family LAB, not {family.value}")
    params = Params(d, a, n, b)
    cells = []
    for alpha in range(1, n + 1):
        lam = n - alpha + 1
        c = refined(family, d, a, alpha, lam, b)
        if c:
            cells.append(RefinementCell(alpha, lam, c))
    if family is Family.H:
        cells.sort(key=lambda c: c.lambda_)
    return RefinementTable(family, params, tuple(cells))
