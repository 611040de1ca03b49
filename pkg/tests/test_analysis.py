import pytest
from hypothesis import given, settings, strategies as st

from fixedperim import core
from fixedperim.analysis import (
    CHECKS,
    GridSpec,
    check_arm_length_counts,
    check_degenerate,
    check_duality,
    check_floor_bounds,
    check_reverse_alder,
    check_shifts,
    cross_check,
    floor_bound_sides,
    lab_formula_diagnostic,
    run_checks,
    scan_a_shift_conjecture,
)
from fixedperim.core import DomainError
from fixedperim.enumeration import oracle_count

SMALL = GridSpec(d_max=4, n_max=40, oracle_n_max=12)


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_every_check_passes_on_small_grid(name):
    rep = CHECKS[name](SMALL)
    assert rep.cases_run > 0
    assert rep.passed, rep.failures[:5]


def test_grid_validation():
    with pytest.raises(DomainError):
        GridSpec(d_min=3, d_max=2)
    with pytest.raises(DomainError):
        GridSpec(n_max=10, oracle_n_max=20)


def test_unknown_check():
    with pytest.raises(DomainError):
        run_checks(["nosuch"], SMALL)


def test_single_point_duality():
    for d, a, n, want in [(1, 2, 9, 21), (2, 1, 7, 6)]:
        rep = check_duality(GridSpec(d_min=d, d_max=d, a=a, n_min=n, n_max=n, oracle_n_max=n))
        assert rep.passed
        assert core.h_total(d, a, n) == core.f_total(d, a, n) == want


def test_failures_are_data():
    rep = check_duality(GridSpec(d_min=1, d_max=1, a=2, n_min=9, n_max=9, oracle_n_max=0))
    rep.le(5, 3, "forced", d=1)
    assert not rep.passed
    assert rep.to_dict()["failures"][0] == {"params": {"d": 1}, "relation": "forced", "lhs": 5, "rhs": 3}


def test_reverse_alder_examples():
    assert core.h_total(2, 1, 7) == 6 < core.l_total(2, 1, 7) == 8
    assert oracle_count("H", 2, 1, 7) == 6 and oracle_count("L", 2, 1, 7) == 8
    assert core.h_total(1, 1, 4) == core.l_total(1, 1, 4) == 3
    rep = check_reverse_alder(GridSpec(d_max=3, n_max=30, oracle_n_max=10))
    assert rep.passed
    assert (1, 1, 4) in rep.stats["equalities"]
    assert rep.stats["strict"] + rep.stats["equal"] == rep.stats["strict"] + len(rep.stats["equalities"])


def test_degenerate_examples():
    assert core.l_total(3, 3, 8) == 1 == core.h_total(5, 3, 8) == oracle_count("L", 3, 3, 8)
    assert core.h_total(3, 3, 8) >= 1
    assert core.l_total(1, 2, 2) == 1 == core.h_total(3, 2, 2) == oracle_count("L", 1, 2, 2)
    assert core.l_total(3, 3, 2) == 0 == core.h_total(5, 3, 2)
    assert check_degenerate(GridSpec(d_max=9, n_max=60, oracle_n_max=15)).passed


def test_shift_examples():
    assert core.h_total(2, 2, 7) == 4 <= core.h_total(2, 1, 7) == 6
    assert oracle_count("H", 2, 2, 7) == 4
    assert core.l_total(2, 1, 5) == 3 <= core.l_total(2, 1, 6)
    assert core.l_total(3, 1, 7) <= core.l_total(2, 1, 7)
    assert check_shifts(GridSpec(d_max=5, n_max=60, oracle_n_max=0)).passed


def test_floor_bound_examples():
    assert floor_bound_sides(1, 1, 5)[0] == (1, 1)
    assert floor_bound_sides(2, 1, 1) == ((0, 0), (0, 0))
    # d = 1, a = 1: the second inequality is an equality for every n
    for n in range(1, 300):
        lhs, rhs = floor_bound_sides(1, 1, n)[1]
        assert lhs == rhs
    assert check_floor_bounds(GridSpec(d_max=20, n_max=200, oracle_n_max=0)).passed


def test_arm_length_examples():
    def arms(family, d, a, n):
        return len(core.refinement_table(family, d, a, n).cells)

    assert arms("L", 2, 1, 7) == 3 and arms("F", 4, 1, 7) == 2 and arms("F", 4, 4, 7) == 1
    assert arms("L", 2, 1, 1) == 1 and arms("F", 4, 4, 1) == 0
    assert core.refinement_table("L", 1, 1, 4).arms == [1, 3]
    assert check_arm_length_counts(GridSpec(d_max=4, n_max=60, oracle_n_max=0)).passed


def test_cross_check_points():
    assert core.h_total(1, 2, 9) == 21 == oracle_count("H", 1, 2, 9)
    assert core.l_total(2, 1, 7) == 8 == oracle_count("L", 2, 1, 7)
    assert core.f_total(3, 2, 1) == 0 == oracle_count("F", 3, 2, 1)
    assert cross_check(GridSpec(d_max=3, n_max=30, oracle_n_max=10)).passed


def test_scan_example():
    rep = scan_a_shift_conjecture(2, 1, 50)
    assert rep.exceptions[0] == 1
    assert core.l_total(2, 1, 1) == 1 and core.l_total(2, 2, 1) == 0
    for n in rep.exceptions:
        if n <= 25:
            assert oracle_count("L", 2, 1, n) > oracle_count("L", 2, 2, n)
    assert rep.verify()


def test_scan_empty_range():
    rep = scan_a_shift_conjecture(4, 2, 1)
    assert rep.exceptions == () and rep.stable_from == 1
    assert scan_a_shift_conjecture(2, 1, 0).exceptions == ()


def test_scan_domain():
    with pytest.raises(DomainError):
        scan_a_shift_conjecture(2, 2, 10)  # 3 and 2 are the same +- class mod 5
    scan_a_shift_conjecture(1, 1, 10)  # compares with the degenerate class 2 mod 4


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.data())
def test_scan_reports_are_self_verifying(d, data):
    a = data.draw(st.integers(1, (d + 1) // 2))
    n_max = data.draw(st.integers(0, 150))
    rep = scan_a_shift_conjecture(d, a, n_max)
    assert list(rep.exceptions) == sorted(set(rep.exceptions))
    assert rep.stable_from <= n_max + 1
    assert all(n < rep.stable_from for n in rep.exceptions)
    assert rep.verify()
    assert rep == scan_a_shift_conjecture(d, a, n_max)


def test_scan_6_2_is_recorded():
    rep = scan_a_shift_conjecture(6, 2, 200)
    assert rep.verify()
    assert rep.exceptions == (2, 12, 13, 14, 15, 16, 26, 27, 28)


def test_lab_printed_formula_diagnostic():
    diag = lab_formula_diagnostic(2, 1, 4, 30)
    assert not diag.agrees_everywhere
    assert diag.matches[:3] == (1, 2, 3)
    first_bad = diag.mismatches[0]
    assert first_bad == (4, 1, 2)
    assert core.l_ab_total(2, 1, 4, 4) == oracle_count("LAB", 2, 1, 4, 4) == 2
