import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind_eq.arith import mod_inverse
from dedekind_eq.core import dedekind_S
from dedekind_eq.equality import (
    Condition2Violated,
    CongruentArguments,
    PreconditionViolated,
    ThreeTermInstance,
    condition2,
    criterion_value,
    least_positive_t,
    lemma1_holds,
    proposition1_residual,
    theorem1_decide,
    three_term_residual,
)
from oracles import brute_S


def test_condition2_examples():
    assert (16 - 60) * (16 * 60 - 1) == -548 * 77
    assert condition2(77, 16, 60)
    assert not condition2(5, 1, 2)
    assert (2 - 8) * (2 * 8 - 1) == -10 * 9
    assert condition2(9, 2, 8)


def test_least_positive_t_examples():
    assert least_positive_t(77, 16, 60) == 33
    assert least_positive_t(77, 60, 16) == 44
    assert least_positive_t(5, 3, 2) == 1
    with pytest.raises(CongruentArguments):
        least_positive_t(7, 3, 10)


def test_lemma1_examples():
    assert mod_inverse(60, 77) == 9 and mod_inverse(16, 77) == 53
    assert lemma1_holds(77, 16, 60)
    assert not lemma1_holds(5, 1, 2)
    assert lemma1_holds(77, 16, 16)


def test_three_term_examples():
    inst = ThreeTermInstance(23, 77, 16, 77)
    assert inst.Q == 539
    assert three_term_residual(inst) == 0
    assert three_term_residual(ThreeTermInstance(1, 1, 0, 1)) == 0
    with pytest.raises(PreconditionViolated):
        ThreeTermInstance(16, 77, 23, 77)
    with pytest.raises(PreconditionViolated):
        ThreeTermInstance(22, 77, 16, 77)


def random_instance(rng, limit=500):
    while True:
        B, D = rng.randint(1, limit), rng.randint(1, limit)
        A = rng.randint(-2 * B, 2 * B)
        C = rng.randint(-2 * D, 2 * D)
        if math.gcd(A, B) == 1 and math.gcd(C, D) == 1 and A * D - B * C > 0:
            return ThreeTermInstance(A, B, C, D)


def test_three_term_random_and_jk_shift():
    rng = random.Random(5)
    for _ in range(200):
        inst = random_instance(rng)
        assert three_term_residual(inst) == 0
        shift = rng.randint(-3, 3)
        moved = ThreeTermInstance(inst.A, inst.B, inst.C, inst.D,
                                  j=inst.j + shift * inst.D, k=inst.k + shift * inst.C)
        assert three_term_residual(moved) == 0
        assert (moved.R - inst.R) % inst.Q == 0


def test_proposition1_examples():
    assert proposition1_residual(77, 16, 60) == 0
    assert proposition1_residual(5, 1, 2) == 0
    assert proposition1_residual(9, 2, 8) == 0
    with pytest.raises(CongruentArguments):
        proposition1_residual(9, 2, 11)


def test_theorem1_examples():
    assert theorem1_decide(77, 16, 60)
    assert brute_S(2, 9) == Fraction(16, 9) and brute_S(8, 9) == Fraction(-56, 9)
    assert not theorem1_decide(9, 2, 8)
    assert theorem1_decide(77, 9, 16)
    with pytest.raises(Condition2Violated):
        theorem1_decide(5, 1, 2)
    with pytest.raises(CongruentArguments):
        theorem1_decide(9, 2, 2)


def test_theorem1_other_t_choices():
    rng = random.Random(11)
    checked = 0
    while checked < 150:
        b = rng.randint(3, 300)
        c, d = rng.randrange(1, b), rng.randrange(1, b)
        if math.gcd(c, b) != 1 or math.gcd(d, b) != 1 or c == d or not condition2(b, c, d):
            continue
        t = least_positive_t(b, c, d)
        expected = dedekind_S(c, b) == dedekind_S(d, b)
        for tt in (t, t + b, t + 2 * b):
            assert theorem1_decide(b, c, d, t=tt) == expected
        checked += 1
    with pytest.raises(ValueError):
        theorem1_decide(77, 16, 60, t=34)


@pytest.mark.parametrize("b", [2, 9, 12, 35, 77, 91, 120, 143, 200, 297])
def test_structure_per_modulus(b):
    units = [c for c in range(1, b) if math.gcd(c, b) == 1]
    values = {c: dedekind_S(c, b) for c in units}
    for c in units:
        for d in units:
            c2 = condition2(b, c, d)
            assert c2 == ((values[c] - values[d]).denominator == 1)
            if c2:
                assert lemma1_holds(b, c, d)
            if values[c] == values[d]:
                assert c2
            if c != d and c2:
                assert theorem1_decide(b, c, d) == (values[c] == values[d])


@given(st.integers(2, 10**12).flatmap(
    lambda b: st.tuples(st.just(b), st.integers(1, b - 1), st.integers(1, b - 1))))
def test_proposition1_property(triple):
    b, c, d = triple
    if math.gcd(c, b) != 1 or math.gcd(d, b) != 1 or c == d:
        return
    assert proposition1_residual(b, c, d) == 0


def test_criterion_value():
    assert criterion_value(77, 7) == Fraction(51, 539) - 3
