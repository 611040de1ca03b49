import itertools

import pytest
from hypothesis import given, strategies as st

from fixedperim import core
from fixedperim.core import Family
from fixedperim.enumeration import (
    DDistinctMin,
    EnumerationCapError,
    PMResidue,
    Partition,
    Unrestricted,
    enumerate_fixed_perimeter,
    oracle_count,
    oracle_refined,
    partition_of,
    perimeter_of,
    word_of,
)


@pytest.mark.parametrize("parts, expected", [([7, 2, 1], 9), ([3, 2], 4), ([13], 13)])
def test_perimeter_of(parts, expected):
    assert perimeter_of(parts) == expected


@pytest.mark.parametrize("parts", [[], [2, 3], [3, 0]])
def test_partition_rejects_invalid(parts):
    with pytest.raises(ValueError):
        Partition(tuple(parts))


def test_words():
    assert word_of([2, 2, 1]) == "ENENN"
    assert word_of([1]) == "EN"
    assert partition_of("ENENN").parts == (2, 2, 1)


@pytest.mark.parametrize("word", ["", "NE", "EE", "NN", "EXN"])
def test_partition_of_rejects_malformed(word):
    with pytest.raises(ValueError):
        partition_of(word)


def test_round_trip_all_small_partitions():
    for n in range(1, 16):
        for p in enumerate_fixed_perimeter(n, Unrestricted()):
            w = word_of(p)
            assert partition_of(w) == p
            assert w.count("E") == p.arm and w.count("N") == p.leg
            assert len(w) == p.perimeter + 1


def test_round_trip_all_admissible_words():
    for length in range(2, 15):
        for middle in itertools.product("EN", repeat=length - 2):
            w = "E" + "".join(middle) + "N"
            assert word_of(partition_of(w)) == w


@given(st.lists(st.integers(1, 12), min_size=1, max_size=13))
def test_round_trip_random(parts):
    p = Partition(tuple(sorted(parts, reverse=True)))
    assert p.perimeter <= 25
    assert partition_of(word_of(p)) == p


@given(st.text(alphabet="EN", max_size=24))
def test_word_round_trip_random(middle):
    w = "E" + middle + "N"
    assert word_of(partition_of(w)) == w


def test_enumerate_odd_parts():
    got = [p.parts for p in enumerate_fixed_perimeter(4, PMResidue(a=1, m=4))]
    assert got == [(3, 3), (3, 1), (1, 1, 1, 1)]


def test_enumerate_figure_total():
    assert sum(1 for _ in enumerate_fixed_perimeter(9, DDistinctMin(d=1, a=2))) == 21


@pytest.mark.parametrize("d", [1, 2, 5])
def test_enumerate_perimeter_one(d):
    assert [p.parts for p in enumerate_fixed_perimeter(1, DDistinctMin(d=d, a=1))] == [(1,)]


@pytest.mark.parametrize("family, d, a, n", [("H", 1, 3, 7), ("F", 2, 2, 11), ("L", 3, 2, 12)])
def test_enumeration_is_ordered_distinct_and_valid(family, d, a, n):
    from fixedperim.enumeration import constraint_for

    c = constraint_for(family, d, a)
    parts = [p.parts for p in enumerate_fixed_perimeter(n, c)]
    assert parts == sorted(parts, reverse=True)
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert p[0] + len(p) - 1 == n
        assert all(c.admits(x) for x in p)
        assert all(x - y >= c.gap for x, y in zip(p, p[1:]))


def test_enumeration_matches_brute_force_filter():
    # independent of the generator: filter every perimeter-n partition by its definition
    for n in range(1, 13):
        everything = list(enumerate_fixed_perimeter(n, Unrestricted()))
        for d in (1, 2, 3):
            for a in (1, 2, 3):
                want = [p for p in everything
                        if p.parts[-1] >= a and all(x - y >= d for x, y in zip(p.parts, p.parts[1:]))]
                assert oracle_count(Family.H, d, a, n) == len(want)


@pytest.mark.parametrize("family, d, a, n, expected", [("H", 2, 1, 7, 6), ("L", 2, 1, 7, 8), ("F", 1, 2, 9, 21)])
def test_oracle_count(family, d, a, n, expected):
    assert oracle_count(family, d, a, n) == expected


def test_oracle_accepts_a_above_closed_form_domain():
    # closed form rejects a > d+1; the oracle still answers
    assert oracle_count(Family.H, 1, 4, 4) == 1
    # parts = 4 mod 2 are the even parts: 6, 4+4+4, 4+4+2, 4+2+2, 2+2+2+2+2
    assert oracle_count(Family.F, 1, 4, 6) == 5
    with pytest.raises(core.DomainError):
        core.h_total(1, 4, 4)


def test_unrestricted_count_is_power_of_two():
    for n in range(1, 16):
        assert sum(1 for _ in enumerate_fixed_perimeter(n, Unrestricted())) == 2 ** (n - 1)


def test_cap_guard(monkeypatch):
    with pytest.raises(EnumerationCapError):
        oracle_count(Family.H, 1, 1, 41)
    monkeypatch.setenv("PERIM_ENUM_CAP", "10")
    with pytest.raises(EnumerationCapError):
        oracle_count(Family.H, 1, 1, 11)
    assert oracle_count(Family.H, 1, 1, 10) == core.h_total(1, 1, 10)
    assert oracle_count(Family.H, 1, 1, 12, cap=12) == core.h_total(1, 1, 12)


@pytest.mark.parametrize("family", ["H", "F", "L"])
def test_oracle_matches_closed_forms(family):
    for d in range(1, 7):
        upper = d + 1 if family != "L" else d + 2
        for a in range(1, upper + 1):
            for n in range(1, 21):
                assert oracle_count(family, d, a, n) == core.total(family, d, a, n), (d, a, n)


def test_oracle_matches_lab():
    for d in range(1, 5):
        for a in range(1, d + 3):
            for b in range(1, d + 3):
                for n in range(1, 16):
                    assert oracle_count(Family.LAB, d, a, n, b) == core.l_ab_total(d, a, b, n)


def test_oracle_refined_matches_cells():
    for d in range(1, 5):
        for a in range(1, d + 2):
            for alpha in range(1, 13):
                for lam in range(1, 13 - alpha + 1):
                    for family in ("H", "F", "L"):
                        assert oracle_refined(family, d, a, alpha, lam) == core.refined(
                            family, d, a, alpha, lam), (family, d, a, alpha, lam)
