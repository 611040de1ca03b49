"""Grid verification of the identities and inequalities, plus the a-shift scanner.

Checks assert proven statements and collect every violation as data. The
scanner only reports; it never judges the conjecture it scans.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable

from . import core
from .core import DomainError, Family
from .enumeration import Unrestricted, enumerate_fixed_perimeter, oracle_count
from .series import expand_F, expand_H, expand_h_univariate


@dataclass(frozen=True)
class GridSpec:
    """Parameter grid. ``a=None`` means every valid a for the check at hand."""

    d_min: int = 1
    d_max: int = 10
    n_max: int = 200
    oracle_n_max: int = 25
    a: int | None = None
    n_min: int = 1

    def __post_init__(self):
        if not 1 <= self.d_min <= self.d_max:
            raise DomainError(f"empty d range [{self.d_min}, {self.d_max}]")
        if not 1 <= self.n_min <= self.n_max:
            raise DomainError(f"empty n range [{self.n_min}, {self.n_max}]")
        if self.oracle_n_max > self.n_max:
            raise DomainError("oracle_n_max must not exceed n_max")
        if self.a is not None and self.a < 1:
            raise DomainError(f"a must be >= 1, got {self.a}")

    @property
    def ds(self) -> range:
        return range(self.d_min, self.d_max + 1)

    @property
    def ns(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def a_values(self, upper: int) -> range | list[int]:
        """Valid a in ``[1, upper]``, or just the fixed a if it is in range."""
        if self.a is None:
            return range(1, upper + 1)
        return [self.a] if self.a <= upper else []


@dataclass(frozen=True)
class Failure:
    params: dict
    relation: str
    lhs: int
    rhs: int


@dataclass
class CheckReport:
    check_name: str
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, relation: str, lhs: int, rhs: int, **params):
        self.cases_run += 1
        if not ok:
            self.failures.append(Failure(params, relation, lhs, rhs))

    def eq(self, lhs, rhs, relation, **params):
        self.expect(lhs == rhs, relation, lhs, rhs, **params)

    def le(self, lhs, rhs, relation, **params):
        self.expect(lhs <= rhs, relation, lhs, rhs, **params)

    def finish(self) -> "CheckReport":
        self.failures.sort(key=lambda f: sorted(f.params.items()))
        return self

    def to_dict(self) -> dict:
        return {
            "check": self.check_name,
            "passed": self.passed,
            "cases_run": self.cases_run,
            "failures": [asdict(f) for f in self.failures],
            "stats": self.stats,
        }


def _nondegenerate_a(d: int) -> int:
    # largest a with a < (d+3)/2
    return (d + 2) // 2


# -- theorem checks ---------------------------------------------------------


def check_duality(g: GridSpec) -> CheckReport:
    rep = CheckReport("duality")
    for d in g.ds:
        for a in g.a_values(d + 1):
            for n in g.ns:
                h, f = core.h_total(d, a, n), core.f_total(d, a, n)
                rep.eq(h, f, "h_total == f_total", d=d, a=a, n=n)
                for cell in core.refinement_table(Family.H, d, a, n).cells:
                    ap, lp = core.duality_map(d, a, cell.alpha, cell.lambda_)
                    rep.eq(core.f_refined(d, a, ap, lp), cell.count,
                           "f_refined(dual cell) == h_refined(cell)",
                           d=d, a=a, alpha=cell.alpha, lambda_=cell.lambda_)
                    back = core.duality_inverse(d, a, ap, lp)
                    rep.expect(back == (cell.alpha, cell.lambda_), "inverse(dual(cell)) == cell",
                               back[0], cell.alpha, d=d, a=a, lambda_=cell.lambda_)
                if n <= g.oracle_n_max:
                    rep.eq(h, oracle_count(Family.H, d, a, n), "h_total == oracle", d=d, a=a, n=n)
                    rep.eq(f, oracle_count(Family.F, d, a, n), "f_total == oracle", d=d, a=a, n=n)
    return rep.finish()


def check_fu_tang(g: GridSpec) -> CheckReport:
    """h_1 refinement by number of parts k equals C(n-k, k-1)."""
    rep = CheckReport("fu_tang")
    for n in g.ns:
        for k in range(1, n + 1):
            rep.eq(core.h_refined(1, 1, n - k + 1, k), core.binomial(n - k, k - 1),
                   "h_refined(1,1,n-k+1,k) == C(n-k,k-1)", n=n, k=k)
    return rep.finish()


def check_straub(g: GridSpec) -> CheckReport:
    """Distinct parts versus odd parts at fixed perimeter."""
    rep = CheckReport("straub")
    for n in g.ns:
        h = core.h_total(1, 1, n)
        rep.eq(h, core.l_total(1, 1, n), "h_1^(1) == l_1^(1)", n=n)
        rep.eq(h, core.f_total(1, 1, n), "h_1^(1) == f_1^(1)", n=n)
        if n <= g.oracle_n_max:
            rep.eq(h, oracle_count(Family.L, 1, 1, n), "h_1^(1) == odd-part oracle", n=n)
    return rep.finish()


def check_parity_split(g: GridSpec) -> CheckReport:
    rep = CheckReport("parity_split")
    for d in g.ds:
        for a in g.a_values(d + 1):
            for n in g.ns:
                rep.eq(core.f_total_parity_split(d, a, n), core.f_total(d, a, n),
                       "parity split == f_total", d=d, a=a, n=n)
    return rep.finish()


def check_l_forms(g: GridSpec) -> CheckReport:
    """Cell-sum and binomial-sum forms of l_total agree."""
    rep = CheckReport("l_forms")
    for d in g.ds:
        for a in g.a_values(_nondegenerate_a(d)):
            for n in g.ns:
                c = core.l_total_cells(d, a, n)
                rep.eq(c, core.l_total_binomial(d, a, n), "cell sum == binomial sum", d=d, a=a, n=n)
                if n <= g.oracle_n_max:
                    rep.eq(c, oracle_count(Family.L, d, a, n), "cell sum == oracle", d=d, a=a, n=n)
    return rep.finish()


def check_reverse_alder(g: GridSpec) -> CheckReport:
    rep = CheckReport("reverse_alder")
    strict = equal = 0
    equalities = []
    for d in g.ds:
        for a in g.a_values(_nondegenerate_a(d)):
            for n in g.ns:
                h, ell = core.h_total(d, a, n), core.l_total(d, a, n)
                rep.le(h, ell, "h_total <= l_total", d=d, a=a, n=n)
                if h < ell:
                    strict += 1
                elif h == ell:
                    equal += 1
                    equalities.append((d, a, n))
                if n <= g.oracle_n_max:
                    rep.le(oracle_count(Family.H, d, a, n), oracle_count(Family.L, d, a, n),
                           "oracle h <= oracle l", d=d, a=a, n=n)
    rep.stats = {"strict": strict, "equal": equal, "equalities": equalities}
    return rep.finish()


def check_degenerate(g: GridSpec) -> CheckReport:
    rep = CheckReport("degenerate")
    for d in g.ds:
        if d % 2 == 0:
            continue
        a = (d + 3) // 2
        if g.a is not None and g.a != a:
            continue
        for n in g.ns:
            ell = core.l_total_cells(d, a, n)
            f2, h2 = core.f_total(d + 2, a, n), core.h_total(d + 2, a, n)
            rep.eq(ell, f2, "l_total == f_total(d+2)", d=d, a=a, n=n)
            rep.eq(f2, h2, "f_total(d+2) == h_total(d+2)", d=d, a=a, n=n)
            rep.eq(core.l_total(d, a, n), ell, "l_total == cell sum", d=d, a=a, n=n)
            rep.le(ell, core.h_total(d, a, n), "l_total <= h_total", d=d, a=a, n=n)
            if n <= g.oracle_n_max:
                rep.eq(ell, oracle_count(Family.L, d, a, n), "l_total == oracle", d=d, a=a, n=n)
    return rep.finish()


def check_shifts(g: GridSpec) -> CheckReport:
    rep = CheckReport("shifts")
    for d in g.ds:
        for a in g.a_values(d + 1):
            for n in g.ns:
                h = core.h_total(d, a, n)
                if a + 1 <= d + 1:
                    rep.le(core.h_total(d, a + 1, n), h, "h_d^(a+1) <= h_d^(a)", d=d, a=a, n=n)
                rep.le(core.h_total(d + 1, a, n), h, "h_(d+1)^(a) <= h_d^(a)", d=d, a=a, n=n)
                rep.le(h, core.h_total(d, a, n + 1), "h(n) <= h(n+1)", d=d, a=a, n=n)
        for a in g.a_values(_nondegenerate_a(d)):
            for n in g.ns:
                ell = core.l_total(d, a, n)
                rep.le(ell, core.l_total(d, a, n + 1), "l(n) <= l(n+1)", d=d, a=a, n=n)
                rep.le(core.l_total(d + 1, a, n), ell, "l_(d+1)^(a) <= l_d^(a)", d=d, a=a, n=n)
    return rep.finish()


def floor_bound_sides(d: int, a: int, n: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """(lhs, rhs) of the two floor inequalities comparing F and L arm ranges."""
    q = (n - a) // (d + 1)
    return (q // 2, (n - a) // (d + 3)), ((q + 1) // 2, (n + a) // (d + 3))


def check_floor_bounds(g: GridSpec) -> CheckReport:
    rep = CheckReport("floor_bounds")
    for d in g.ds:
        for a in g.a_values(_nondegenerate_a(d)):
            for n in range(max(a, g.n_min), g.n_max + 1):
                (l1, r1), (l2, r2) = floor_bound_sides(d, a, n)
                rep.expect(0 <= l1 <= r1, "0 <= floor(floor((n-a)/(d+1))/2) <= floor((n-a)/(d+3))",
                           l1, r1, d=d, a=a, n=n)
                rep.expect(0 <= l2 <= r2,
                           "0 <= floor((floor((n-a)/(d+1))+1)/2) <= floor((n+a)/(d+3))",
                           l2, r2, d=d, a=a, n=n)
    return rep.finish()


def check_arm_length_counts(g: GridSpec) -> CheckReport:
    rep = CheckReport("arm_lengths")
    for d in g.ds:
        m = d + 3
        for a in g.a_values(_nondegenerate_a(d)):
            for n in range(max(a, g.n_min), g.n_max + 1):
                arms = len(core.refinement_table(Family.L, d, a, n).cells)
                formula = (n - a) // m + (n + a) // m + 1
                split = (len(core.refinement_table(Family.F, d + 2, a, n).cells)
                         + len(core.refinement_table(Family.F, d + 2, m - a, n).cells))
                rep.eq(arms, formula, "#arms(l) == floor((n-a)/m) + floor((n+a)/m) + 1",
                       d=d, a=a, n=n)
                rep.eq(arms, split, "#arms(l) == #arms(f_(d+2)^(a)) + #arms(f_(d+2)^(d+3-a))",
                       d=d, a=a, n=n)
    return rep.finish()


UNRESTRICTED_N_MAX = 20


def check_unrestricted(g: GridSpec) -> CheckReport:
    """All perimeter-n partitions number 2^(n-1)."""
    rep = CheckReport("unrestricted")
    for n in range(g.n_min, min(g.oracle_n_max, UNRESTRICTED_N_MAX) + 1):
        count = sum(1 for _ in enumerate_fixed_perimeter(n, Unrestricted()))
        rep.eq(count, 2 ** (n - 1), "#partitions == 2^(n-1)", n=n)
    return rep.finish()


def cross_check(g: GridSpec) -> CheckReport:
    """Closed form vs series vs oracle; L and LAB have no series route."""
    rep = CheckReport("cross_check")
    for d in g.ds:
        for a in g.a_values(d + 1):
            sH, sF = expand_H(d, a, g.n_max), expand_F(d, a, g.n_max)
            uni = expand_h_univariate(d, a, g.n_max)
            sums_H, sums_F = sH.perimeter_sums(), sF.perimeter_sums()
            for n in g.ns:
                h, f = core.h_total(d, a, n), core.f_total(d, a, n)
                rep.eq(h, uni.coefficient(n), "h_total == univariate series", d=d, a=a, n=n)
                rep.eq(h, sums_H.coefficient(n), "h_total == H series at x=y=1", d=d, a=a, n=n)
                rep.eq(f, sums_F.coefficient(n), "f_total == F series at x=y=1", d=d, a=a, n=n)
                for alpha in range(1, n + 1):
                    lam = n - alpha + 1
                    rep.eq(core.h_refined(d, a, alpha, lam), sH.coefficient(alpha, lam),
                           "h_refined == H coefficient", d=d, a=a, alpha=alpha, lambda_=lam)
                    rep.eq(core.f_refined(d, a, alpha, lam), sF.coefficient(alpha, lam),
                           "f_refined == F coefficient", d=d, a=a, alpha=alpha, lambda_=lam)
                if n <= g.oracle_n_max:
                    rep.eq(h, oracle_count(Family.H, d, a, n), "h_total == oracle", d=d, a=a, n=n)
                    rep.eq(f, oracle_count(Family.F, d, a, n), "f_total == oracle", d=d, a=a, n=n)
        for a in g.a_values(d + 2):
            for n in range(g.n_min, g.oracle_n_max + 1):
                rep.eq(core.l_total(d, a, n), oracle_count(Family.L, d, a, n),
                       "l_total == oracle", d=d, a=a, n=n)
                for b in range(1, d + 3):
                    rep.eq(core.l_ab_total(d, a, b, n), oracle_count(Family.LAB, d, a, n, b),
                           "l_ab_total == oracle", d=d, a=a, b=b, n=n)
    return rep.finish()


CHECKS: dict[str, Callable[[GridSpec], CheckReport]] = {
    "duality": check_duality,
    "fu_tang": check_fu_tang,
    "straub": check_straub,
    "parity_split": check_parity_split,
    "l_forms": check_l_forms,
    "reverse_alder": check_reverse_alder,
    "degenerate": check_degenerate,
    "shifts": check_shifts,
    "floor_bounds": check_floor_bounds,
    "arm_lengths": check_arm_length_counts,
    "unrestricted": check_unrestricted,
    "cross_check": cross_check,
}


def run_checks(names: list[str], g: GridSpec) -> list[CheckReport]:
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise DomainError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    return [CHECKS[name](g) for name in names]


# -- conjecture scan --------------------------------------------------------


@dataclass(frozen=True)
class ScanReport:
    d: int
    a: int
    n_max: int
    exceptions: tuple[int, ...]
    stable_from: int

    def verify(self) -> bool:
        """Recompute every exception; True when each one still violates."""
        return all(core.l_total(self.d, self.a, n) > core.l_total(self.d, self.a + 1, n)
                   for n in self.exceptions)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "a": self.a,
            "n_max": self.n_max,
            "exceptions": list(self.exceptions),
            "stable_from": self.stable_from,
        }


def scan_a_shift_conjecture(d: int, a: int, n_max: int) -> ScanReport:
    """Every n <= n_max where l_d^(a)(n) > l_d^(a+1)(n).

    ``stable_from`` is one past the last exception found (1 if none); it says
    nothing about perimeters beyond ``n_max``.
    """
    if d < 1 or a < 1:
        raise DomainError(f"need d, a >= 1, got d={d}, a={a}")
    if 2 * (a + 1) > d + 3:
        raise DomainError(f"a+1={a + 1} exceeds (d+3)/2 for d={d}; no distinct class to compare")
    exceptions = tuple(
        n for n in range(1, n_max + 1) if core.l_total(d, a, n) > core.l_total(d, a + 1, n)
    )
    stable_from = exceptions[-1] + 1 if exceptions else 1
    return ScanReport(d, a, n_max, exceptions, stable_from)


# -- printed a-or-b formula -------------------------------------------------


@dataclass(frozen=True)
class LabDiagnostic:
    d: int
    a: int
    b: int
    n_max: int
    matches: tuple[int, ...]
    mismatches: tuple[tuple[int, int, int], ...]  # (n, printed, true)

    @property
    def agrees_everywhere(self) -> bool:
        return not self.mismatches


def lab_formula_diagnostic(d: int, a: int, b: int, n_max: int) -> LabDiagnostic:
    """Compare the printed a-or-b binomial sums with the true count, per n."""
    matches, mismatches = [], []
    for n in range(1, n_max + 1):
        printed, true = core.l_ab_printed_formula(d, a, b, n), core.l_ab_total(d, a, b, n)
        if printed == true:
            matches.append(n)
        else:
            mismatches.append((n, printed, true))
    return LabDiagnostic(d, a, b, n_max, tuple(matches), tuple(mismatches))
