"""Brute-force generation of fixed-perimeter partitions.

This is the oracle the closed forms are checked against, so it shares no
code with :mod:`fixedperim.core` beyond the ``Family`` names.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator

from .core import DomainError, Family

DEFAULT_ENUM_CAP = 40
ENUM_CAP_ENV = "PERIM_ENUM_CAP"


class EnumerationCapError(DomainError):
    """Requested perimeter is above the enumeration cap."""


def enumeration_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None


# -- partitions and words ---------------------------------------------------


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"parts must be nonincreasing: {parts}")

    @property
    def arm(self) -> int:
        return self.parts[0]

    @property
    def leg(self) -> int:
        return len(self.parts)

    @property
    def perimeter(self) -> int:
        return self.arm + self.leg - 1

    def __str__(self):
        return "+".join(map(str, self.parts))


def perimeter_of(p: Partition | tuple[int, ...] | list[int]) -> int:
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    return p.perimeter


def word_of(p: Partition | tuple[int, ...] | list[int]) -> str:
    """Boundary word from the lower-left to the upper-right corner.

    E is a unit step east, N a unit step north. ``2+2+1`` gives ``ENENN``.
    """
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    letters = []
    width = 0
    for part in reversed(p.parts):
        letters.append("E" * (part - width))
        letters.append("N")
        width = part
    return "".join(letters)


def partition_of(word: str) -> Partition:
    if not word or word[0] != "E" or word[-1] != "N":
        raise ValueError(f"boundary word must start with E and end with N: {word!r}")
    rows = []
    width = 0
    for ch in word:
        if ch == "E":
            width += 1
        elif ch == "N":
            rows.append(width)
        else:
            raise ValueError(f"unexpected letter {ch!r} in boundary word")
    return Partition(tuple(reversed(rows)))


# -- constraints ------------------------------------------------------------


class PartConstraint:
    """Which parts may appear, and the minimum gap between consecutive parts."""

    gap = 0

    def admits(self, part: int) -> bool:
        return True

    @property
    def smallest_part(self) -> int:
        return 1

    def room(self, ceiling: int) -> float:
        """Most parts that fit at or below ``ceiling``."""
        if ceiling < self.smallest_part:
            return 0
        if self.gap == 0:
            return math.inf
        return (ceiling - self.smallest_part) // self.gap + 1


@dataclass(frozen=True)
class Unrestricted(PartConstraint):
    pass


@dataclass(frozen=True)
class DDistinctMin(PartConstraint):
    d: int
    a: int

    @property
    def gap(self):
        return self.d

    def admits(self, part):
        return part >= self.a

    @property
    def smallest_part(self):
        return self.a


@dataclass(frozen=True)
class Residue(PartConstraint):
    a: int
    m: int

    def admits(self, part):
        return (part - self.a) % self.m == 0

    @property
    def smallest_part(self):
        return (self.a - 1) % self.m + 1


@dataclass(frozen=True)
class PMResidue(PartConstraint):
    a: int
    m: int

    def admits(self, part):
        return (part - self.a) % self.m == 0 or (part + self.a) % self.m == 0

    @property
    def smallest_part(self):
        return min((self.a - 1) % self.m + 1, (-self.a - 1) % self.m + 1)


@dataclass(frozen=True)
class TwoResidues(PartConstraint):
    a: int
    b: int
    m: int

    def admits(self, part):
        return (part - self.a) % self.m == 0 or (part - self.b) % self.m == 0

    @property
    def smallest_part(self):
        return min((self.a - 1) % self.m + 1, (self.b - 1) % self.m + 1)


def constraint_for(family: Family | str, d: int, a: int, b: int | None = None) -> PartConstraint:
    family = Family.parse(family) if isinstance(family, str) else family
    if family is Family.H:
        return DDistinctMin(d=d, a=a)
    if family is Family.F:
        return Residue(a=a, m=d + 1)
    if family is Family.L:
        return PMResidue(a=a, m=d + 3)
    if b is None:
        raise DomainError("family LAB needs b")
    return TwoResidues(a=a, b=b, m=d + 3)


# -- enumeration ------------------------------------------------------------


def _tails(count: int, ceiling: int, c: PartConstraint) -> Iterator[tuple[int, ...]]:
    # count more parts, each <= ceiling, largest first
    if count == 0:
        yield ()
        return
    if count > c.room(ceiling):
        return
    for part in range(ceiling, 0, -1):
        if c.admits(part):
            for rest in _tails(count - 1, part - c.gap, c):
                yield (part,) + rest


def enumerate_fixed_perimeter(n: int, c: PartConstraint, arm: int | None = None,
                              cap: int | None = None) -> Iterator[Partition]:
    """Yield every perimeter-n partition obeying ``c``, in decreasing lex order.

    For each admissible largest part the remaining parts are chosen below it
    directly, so inadmissible shapes are never built.
    """
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise EnumerationCapError(f"perimeter {n} exceeds enumeration cap {cap}")
    arms = range(n, 0, -1) if arm is None else [arm] if 1 <= arm <= n else []
    for alpha in arms:
        if not c.admits(alpha):
            continue
        for rest in _tails(n - alpha, alpha - c.gap, c):
            yield Partition((alpha,) + rest)


def oracle_count(family: Family | str, d: int, a: int, n: int, b: int | None = None,
                 cap: int | None = None) -> int:
    c = constraint_for(family, d, a, b)
    return sum(1 for _ in enumerate_fixed_perimeter(n, c, cap=cap))


def oracle_refined(family: Family | str, d: int, a: int, alpha: int, lambda_: int,
                   b: int | None = None, cap: int | None = None) -> int:
    c = constraint_for(family, d, a, b)
    n = alpha + lambda_ - 1
    return sum(1 for _ in enumerate_fixed_perimeter(n, c, arm=alpha, cap=cap))
