"""Deciding S(c, b) = S(d, b) for two arguments sharing a modulus.

The decision procedure reduces the equality to a single Dedekind sum with
modulus b*t taking the value (t^2 + 2)/(b t) - 3, where t is the least
positive residue of c - d.  The module also exposes the identities the
procedure rests on as residual functions that must evaluate to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import mod_inverse, xgcd
from .core import dedekind_S


class CongruentArguments(ValueError):
    pass


class Condition2Violated(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


def _reduced(b: int, c: int, d: int) -> tuple:
    if b < 1:
        raise ValueError(f"modulus must be >= 1, got {b}")
    if math.gcd(c, b) != 1 or math.gcd(d, b) != 1:
        raise ValueError(f"arguments {c}, {d} must be coprime to {b}")
    return c % b, d % b


def condition2(b: int, c: int, d: int) -> bool:
    """b | (c - d)(cd - 1): the necessary condition for equality."""
    return (c - d) * (c * d - 1) % b == 0


def least_positive_t(b: int, c: int, d: int) -> int:
    t = (c - d) % b
    if t == 0:
        raise CongruentArguments(f"{c} = {d} (mod {b})")
    return t


def lemma1_holds(b: int, c: int, d: int) -> bool:
    """c - d = d* - c* (mod b)."""
    c, d = _reduced(b, c, d)
    return (c - d - mod_inverse(d, b) + mod_inverse(c, b)) % b == 0


def criterion_value(b: int, t: int) -> Fraction:
    """(t^2 + 2) / (b t) - 3."""
    return Fraction(t * t + 2, b * t) - 3


@dataclass(frozen=True)
class ThreeTermInstance:
    """Integers A, B, C, D with (A, B) = (C, D) = 1, B, D >= 1, Q = AD - BC > 0.

    ``j`` and ``k`` default to the extended-Euclid solution of
    ``-C j + D k = 1``; any other solution may be passed explicitly.
    """

    A: int
    B: int
    C: int
    D: int
    j: int = field(default=None)
    k: int = field(default=None)

    def __post_init__(self):
        if self.B < 1 or self.D < 1:
            raise PreconditionViolated("B and D must be positive")
        if math.gcd(self.A, self.B) != 1 or math.gcd(self.C, self.D) != 1:
            raise PreconditionViolated("need (A, B) = (C, D) = 1")
        if self.Q <= 0:
            raise PreconditionViolated(f"Q = AD - BC = {self.Q} is not positive")
        if self.j is None or self.k is None:
            _, j, k = xgcd(-self.C, self.D)
            object.__setattr__(self, "j", j)
            object.__setattr__(self, "k", k)
        if -self.C * self.j + self.D * self.k != 1:
            raise PreconditionViolated("j, k must satisfy -C j + D k = 1")

    @property
    def Q(self) -> int:
        return self.A * self.D - self.B * self.C

    @property
    def R(self) -> int:
        return self.A * self.j - self.B * self.k


def three_term_residual(inst: ThreeTermInstance) -> Fraction:
    """S(A,B) - S(C,D) - S(R,Q) - (B^2 + D^2 + Q^2)/(BDQ) + 3; always zero."""
    A, B, C, D, Q, R = inst.A, inst.B, inst.C, inst.D, inst.Q, inst.R
    return (
        dedekind_S(A, B)
        - dedekind_S(C, D)
        - dedekind_S(R, Q)
        - Fraction(B * B + D * D + Q * Q, B * D * Q)
        + 3
    )


def proposition1_residual(b: int, c: int, d: int) -> Fraction:
    """S(1 + d* t, bt) - criterion_value(b, t) - (S(d, b) - S(c, b)); always zero.

    Holds for any coprime c, d with c != d (mod b), without the
    necessary condition.
    """
    c, d = _reduced(b, c, d)
    t = least_positive_t(b, c, d)
    d_inv = mod_inverse(d, b)
    return (
        dedekind_S(1 + d_inv * t, b * t)
        - criterion_value(b, t)
        - (dedekind_S(d, b) - dedekind_S(c, b))
    )


def theorem1_decide(b: int, c: int, d: int, t: int = None) -> bool:
    """Decide S(c, b) = S(d, b) through the single sum S(1 + ct, bt).

    ``t`` defaults to the least positive residue of c - d; any positive
    ``t = c - d (mod b)`` is accepted.  S(c, b) and S(d, b) themselves are
    never evaluated.
    """
    c, d = _reduced(b, c, d)
    t0 = least_positive_t(b, c, d)
    if not condition2(b, c, d):
        raise Condition2Violated(
            f"(c - d)(cd - 1) is not divisible by {b}; the sums cannot be equal"
        )
    if t is None:
        t = t0
    elif t <= 0 or (t - t0) % b:
        raise ValueError(f"t = {t} must be positive and congruent to c - d mod {b}")
    return dedekind_S(1 + c * t, b * t) == criterion_value(b, t)
