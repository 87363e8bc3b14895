"""Dedekind sums s(c, b) and their normalized form S(c, b) = 12 s(c, b).

Two evaluators are provided.  :func:`dedekind_s_naive` is the defining
sum over k = 1..b and is the ground truth used by the tests; it is linear
in b.  :func:`dedekind_s_fast` walks the Euclidean algorithm using the
reciprocity law

    S(c, b) + S(b, c) = (b^2 + c^2 + 1) / (b c) - 3

and periodicity in the argument, so it needs one step per division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import NotCoprime, BoundExceeded

NAIVE_BOUND = 10**7


@dataclass(frozen=True)
class ArgPair:
    """A modulus ``b >= 1`` with a coprime argument reduced into ``[0, b-1]``."""

    modulus: int
    argument: int

    @classmethod
    def of(cls, c: int, b: int) -> "ArgPair":
        if b < 1:
            raise ValueError(f"modulus must be >= 1, got {b}")
        if math.gcd(c, b) != 1:
            raise NotCoprime(f"gcd({c}, {b}) != 1")
        return cls(b, c % b)


def _checked(c: int, b: int) -> int:
    if b < 1:
        raise ValueError(f"modulus must be >= 1, got {b}")
    if math.gcd(c, b) != 1:
        raise NotCoprime(f"gcd({c}, {b}) != 1")
    return c % b


def sawtooth(x) -> Fraction:
    """((x)): x - floor(x) - 1/2, and 0 at integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def _sawtooth_numerator_sum(c: int, b: int) -> int:
    # ((k/b)) = (2k - b) / (2b) for 0 < k < b; likewise for ((ck/b)) with
    # ck mod b in place of k.  k = b contributes nothing.
    total = 0
    chunk = max(1, min(b, (2**62) // (b * b)))
    for lo in range(1, b, chunk):
        k = np.arange(lo, min(b, lo + chunk), dtype=np.int64)
        r = (c * k) % b
        total += int(np.sum((2 * k - b) * (2 * r - b)))
    return total


def dedekind_s_naive(c: int, b: int) -> Fraction:
    """s(c, b) straight from the defining sum; refuses ``b > 10**7``."""
    c = _checked(c, b)
    if b > NAIVE_BOUND:
        raise BoundExceeded(f"naive evaluation refused for b = {b} > {NAIVE_BOUND}")
    if b == 1:
        return Fraction(0)
    return Fraction(_sawtooth_numerator_sum(c, b), 4 * b * b)


def dedekind_S_naive(c: int, b: int) -> Fraction:
    return 12 * dedekind_s_naive(c, b)


def _S_descent(c: int, b: int) -> Fraction:
    # Direct reciprocity descent; denominators grow with the step count.
    total = Fraction(0)
    sign = 1
    while b > 1:
        total += sign * (Fraction(b * b + c * c + 1, b * c) - 3)
        sign = -sign
        b, c = c, b % c
    return total


def _S_fast(c: int, b: int) -> Fraction:
    """Reciprocity descent with the step terms regrouped into integers.

    With remainders r_0 = b, r_1 = c, ..., r_n = 1 and quotients q_i, the
    alternating sum of (r_i^2 + r_{i+1}^2 + 1)/(r_i r_{i+1}) - 3 telescopes to

        sum (-1)^i q_{i+1} + c/b + F - 3 [n odd],

    where F = sum (-1)^i / (r_i r_{i+1}).  Partial sums of F have the form
    A_j / (r_0 r_j) with A_{j+1} = (A_j r_{j+1} + (-1)^j r_0) / r_j exact.
    """
    if b == 1:
        return Fraction(0)
    r0 = b
    prev, r = b, c
    acc, qsum, sign, n = 1, 0, 1, 0
    while True:
        q, nxt = divmod(prev, r)
        qsum += sign * q
        n += 1
        if r == 1:
            break
        acc = (acc * nxt - sign * r0) // r
        sign = -sign
        prev, r = r, nxt
    return Fraction(qsum * r0 + c + acc - 3 * r0 * (n % 2), r0)


def dedekind_S(c: int, b: int, *, naive: bool = False) -> Fraction:
    """Normalized Dedekind sum S(c, b) = 12 s(c, b)."""
    if naive:
        return dedekind_S_naive(c, b)
    return _S_fast(_checked(c, b), b)


def dedekind_s_fast(c: int, b: int) -> Fraction:
    return dedekind_S(c, b) / 12


def is_zero_sum_argument(c: int, b: int) -> bool:
    """Whether c^2 = -1 (mod b), which forces S(c, b) = 0."""
    _checked(c, b)
    return (c * c + 1) % b == 0
