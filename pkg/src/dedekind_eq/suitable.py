"""Suitable sets and the sequences of equal Dedekind sums they generate.

A set {c, d} is suitable for b when c, d are coprime to b, d is neither c
nor c* modulo b, and S(c, b) = S(d, b) != 0.  From a suitable set one gets
another with a strictly larger modulus:

    t  = least positive residue of d - c*  (mod b)
    b' = b t,  c' = 1 + c t,  d' = 1 + d t

Iterating gives an unbounded sequence of pairwise equal sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .arith import mod_inverse
from .core import dedekind_S
from .equality import criterion_value

DEFAULT_MAX_STEPS = 12


class NotSuitable(ValueError):
    pass


class StepLimitExceeded(ValueError):
    pass


def is_suitable(b: int, c: int, d: int) -> bool:
    if b < 2 or math.gcd(c, b) != 1 or math.gcd(d, b) != 1:
        return False
    if (c - d) % b == 0 or (d - mod_inverse(c, b)) % b == 0:
        return False
    value = dedekind_S(c, b)
    return value != 0 and value == dedekind_S(d, b)


@dataclass(frozen=True, eq=False)
class SuitableSet:
    """A suitable set {c, d} for modulus b, with the shared value S(c, b).

    ``c`` and ``d`` keep the order they were given in, but equality and
    hashing treat the pair as unordered.
    """

    b: int
    c: int
    d: int
    common_value: Fraction

    @classmethod
    def make(cls, b: int, c: int, d: int) -> "SuitableSet":
        if not is_suitable(b, c, d):
            raise NotSuitable(f"{{{c}, {d}}} is not a suitable set for {b}")
        return cls(b, c % b, d % b, dedekind_S(c, b))

    def _key(self):
        return (self.b, frozenset((self.c % self.b, self.d % self.b)))

    def __eq__(self, other):
        if not isinstance(other, SuitableSet):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


@dataclass(frozen=True)
class SequenceState:
    index: int
    b: int
    c: int
    d: int
    t: int
    common_value: Fraction

    @property
    def suitable_set(self) -> SuitableSet:
        return SuitableSet(self.b, self.c, self.d, self.common_value)


def derived_sets(s: SuitableSet) -> Tuple[SuitableSet, SuitableSet, SuitableSet]:
    """The three companions {c, d*}, {c*, d}, {c*, d*} of a suitable set."""
    ci, di = mod_inverse(s.c, s.b), mod_inverse(s.d, s.b)
    return tuple(SuitableSet.make(s.b, x, y) for x, y in ((s.c, di), (ci, s.d), (ci, di)))


def step_t(s: SuitableSet) -> int:
    return (s.d - mod_inverse(s.c, s.b)) % s.b


def theorem2_step(s: SuitableSet) -> Tuple[int, SuitableSet]:
    """Return ``(t, successor)`` with successor = {1 + ct, 1 + dt} for b t."""
    if not is_suitable(s.b, s.c, s.d):
        raise NotSuitable(f"{{{s.c}, {s.d}}} is not a suitable set for {s.b}")
    t = step_t(s)
    b1, c1, d1 = s.b * t, 1 + s.c * t, 1 + s.d * t
    return t, SuitableSet.make(b1, c1, d1)


def generate_sequence(
    seed: SuitableSet, n: int, max_steps: int = DEFAULT_MAX_STEPS
) -> List[SequenceState]:
    """The first ``n`` states b_0 = seed.b, b_1, ..., each with its own t_i.

    Raises :class:`StepLimitExceeded` for ``n > max_steps``; digit counts
    roughly double with every step.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_steps:
        raise StepLimitExceeded(f"n = {n} exceeds the step limit {max_steps}")
    if not is_suitable(seed.b, seed.c, seed.d):
        raise NotSuitable(f"{{{seed.c}, {seed.d}}} is not a suitable set for {seed.b}")
    states = []
    current = seed
    for i in range(n):
        t = step_t(current)
        states.append(
            SequenceState(i, current.b, current.c, current.d, t, current.common_value)
        )
        if i + 1 < n:
            _, current = theorem2_step(current)
            if current.common_value != criterion_value(states[-1].b, t):
                raise AssertionError(f"step {i} broke the closed-form common value")
    return states


def ratio_trace(states: List[SequenceState]) -> List[Fraction]:
    return [Fraction(s.t, s.b) for s in states]
