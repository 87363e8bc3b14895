import csv
import io
import json
import math
from fractions import Fraction

import pytest

from dedekind_eq.arith import BoundExceeded, NotCoprime, euler_phi, factor_squarefree, mod_inverse
from dedekind_eq.census import (
    NotSquareFree,
    count_equal,
    full_census,
    least_suitable_pair,
    merge_classes,
    search_suitable_pairs,
    squarefree_bound_check,
    value_classes,
)
from dedekind_eq.equality import theorem1_decide, condition2
from oracles import brute_S, brute_classes


def test_count_equal_examples():
    assert count_equal(32, 455) == 6
    assert brute_S(1, 3) == Fraction(2, 3) and brute_S(2, 3) == Fraction(-2, 3)
    assert count_equal(1, 3) == 1
    assert count_equal(16, 77) == 4
    with pytest.raises(NotCoprime):
        count_equal(7, 77)


def test_census_77_against_brute_force():
    report = full_census(77)
    assert report.classes == {v: sorted(a) for v, a in sorted(brute_classes(77).items())}
    assert report.classes[Fraction(300, 77)] == [9, 16, 53, 60]


def test_census_small():
    report = full_census(3)
    assert report.classes == {Fraction(-2, 3): [2], Fraction(2, 3): [1]}
    assert report.nontrivial_values == []


def test_census_297():
    report = full_census(297)
    assert report.distinct_positive_count == 41
    positive = [v for v in report.nontrivial_values if v > 0]
    assert positive == [Fraction(n, 297) for n in (3076, 1712, 1460, 1456, 1136)]
    assert [v for v in report.nontrivial_values if v < 0] == [-v for v in reversed(positive)]


def test_census_455():
    report = full_census(455)
    assert report.counts[32] == 6
    assert report.max_count == 6
    assert 8 not in report.counts.values()


@pytest.mark.parametrize("b", [1, 2, 12, 77, 297, 455, 560])
def test_census_invariants(b):
    report = full_census(b)
    assert sum(len(a) for a in report.classes.values()) == (euler_phi(b) if b > 1 else 0)
    for value, args in report.classes.items():
        assert report.classes.get(-value) == sorted(b - c for c in args)
        for c in args:
            assert mod_inverse(c, b) in args
            assert report.counts[c] == len(args) >= len({c, mod_inverse(c, b)})
            for d in args:
                assert condition2(b, c, d)
                if d != c and b <= 300:
                    assert theorem1_decide(b, c, d)


def test_parallel_sweep_matches_serial():
    b = 10_403
    assert value_classes(b, workers=3) == value_classes(b)


def test_merge_is_order_independent():
    parts = [{Fraction(1): [5]}, {Fraction(1): [2], Fraction(-1): [3]}]
    assert merge_classes(parts) == merge_classes(parts[::-1]) == {Fraction(-1): [3], Fraction(1): [2, 5]}


def test_naive_census_matches():
    assert full_census(143, naive=True).classes == full_census(143).classes


def test_bounds():
    with pytest.raises(BoundExceeded):
        full_census(2000, bound=1000)
    with pytest.raises(NotSquareFree):
        squarefree_bound_check(297)


@pytest.mark.parametrize("b, r", [(455, 3), (77, 2), (11, 1)])
def test_squarefree_bound_examples(b, r):
    rep = squarefree_bound_check(b)
    assert rep.ok and rep.bound_2r == 2**r
    assert max(rep.attained) <= 2**r
    if b == 455:
        assert 6 in rep.attained
    if b == 11:
        assert set(rep.attained) <= {1, 2}


def test_squarefree_reports_violations():
    report = full_census(77)
    report.counts[1] = 3
    rep = squarefree_bound_check(77, report)
    assert rep.counterexamples == [(1, 3)] and not rep.ok


def test_search():
    hits = {h.b: h for h in search_suitable_pairs(5, 13)}
    assert (hits[77].c, hits[77].d) == (9, 16)
    assert (hits[143].c, hits[143].d) == (8, 73)
    assert 35 not in hits
    assert all(h.common_value > 0 for h in hits.values())
    assert least_suitable_pair(35) is None


def test_exports():
    report = full_census(77)
    doc = json.loads(report.to_json())
    assert doc["b"] == "77"
    assert doc["classes"]["300/77"] == ["9", "16", "53", "60"]
    assert doc["N"]["16"] == 4
    rows = list(csv.reader(io.StringIO(report.to_csv())))
    assert rows[0] == ["c", "S", "N"]
    assert [int(r[0]) for r in rows[1:]] == [c for c in range(1, 77) if math.gcd(c, 77) == 1]
    assert ["16", "300/77", "4"] in rows
