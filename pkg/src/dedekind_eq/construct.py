"""CRT construction of 2^k arguments sharing one Dedekind sum value.

Head primes p_1..p_k are each = +-1 (mod 5), so 5 has a square root
alpha_i modulo p_i.  Tail primes p_{k+1}..p_r are each = 1 modulo
b_0 = p_1...p_k.  With b = p_1...p_r and t = p_{k+1}...p_r, the arguments

    c = (3 +- alpha_i) / 2  (mod p_i),  i <= k
    c = 1                   (mod p_i),  i > k

are exactly the 2^k values of c in [1, b-1] with S(c, b) = (t^2 + 2)/b - 3.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .arith import BoundExceeded, NotPrime, crt, is_prime, mod_inverse, sqrt_mod_p
from .core import dedekind_S

DEFAULT_SWEEP_BOUND = 10**6


class NotPlusMinusOneMod5(ValueError):
    pass


class TailNotOneModB0(ValueError):
    pass


class DuplicatePrime(ValueError):
    pass


@dataclass(frozen=True)
class Theorem3Input:
    head_primes: Tuple[int, ...]
    tail_primes: Tuple[int, ...] = ()

    @property
    def b0(self) -> int:
        return math.prod(self.head_primes)

    @property
    def t(self) -> int:
        return math.prod(self.tail_primes)

    @property
    def b(self) -> int:
        return self.b0 * self.t

    @property
    def k(self) -> int:
        return len(self.head_primes)

    @property
    def r(self) -> int:
        return len(self.head_primes) + len(self.tail_primes)


@dataclass(frozen=True)
class Theorem3Family:
    b: int
    t: int
    k: int
    r: int
    target_value: Fraction
    members: Tuple[int, ...]
    witness_roots: Tuple[int, ...]


def validate_input(head: Sequence[int], tail: Sequence[int] = ()) -> Theorem3Input:
    head, tail = tuple(head), tuple(tail)
    if not head:
        raise ValueError("at least one head prime is required")
    seen = set()
    for p in head + tail:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p in seen:
            raise DuplicatePrime(f"{p} appears more than once")
        seen.add(p)
    for p in head:
        if p % 5 not in (1, 4):
            raise NotPlusMinusOneMod5(f"{p} = {p % 5} (mod 5)")
    inp = Theorem3Input(head, tail)
    for p in tail:
        if p % inp.b0 != 1:
            raise TailNotOneModB0(f"{p} = {p % inp.b0} (mod {inp.b0})")
    return inp


def target_value(inp: Theorem3Input) -> Fraction:
    t = inp.t
    return Fraction(t * t + 2, inp.b) - 3


def _member(inp: Theorem3Input, roots: Sequence[int], signs: Sequence[int]) -> int:
    residues = []
    for p, alpha, sign in zip(inp.head_primes, roots, signs):
        residues.append(((3 + sign * alpha) * mod_inverse(2, p) % p, p))
    residues.extend((1, p) for p in inp.tail_primes)
    return crt(residues)


def build_family(inp: Theorem3Input) -> Theorem3Family:
    """All 2^k members, each checked against the target value."""
    roots = tuple(sqrt_mod_p(5, p)[0] for p in inp.head_primes)
    value = target_value(inp)
    members = []
    for signs in itertools.product((1, -1), repeat=inp.k):
        c = _member(inp, roots, signs)
        if dedekind_S(c, inp.b) != value:
            raise AssertionError(f"member {c} misses the target value at b = {inp.b}")
        members.append(c)
    return Theorem3Family(
        b=inp.b,
        t=inp.t,
        k=inp.k,
        r=inp.r,
        target_value=value,
        members=tuple(sorted(members)),
        witness_roots=roots,
    )


def distinguished_member(inp: Theorem3Input) -> int:
    """The member with every sign +, i.e. c = (3 + alpha_i)/2 mod p_i."""
    roots = [sqrt_mod_p(5, p)[0] for p in inp.head_primes]
    return _member(inp, roots, [1] * inp.k)


def attaining_arguments(b: int, value: Fraction, bound: int = DEFAULT_SWEEP_BOUND) -> List[int]:
    if b > bound:
        raise BoundExceeded(f"sweep of b = {b} exceeds the bound {bound}")
    return [c for c in range(1, b) if math.gcd(c, b) == 1 and dedekind_S(c, b) == value]


def verify_family_exact_count(fam: Theorem3Family, bound: int = DEFAULT_SWEEP_BOUND) -> bool:
    """Sweep every c in [1, b-1] and compare the attaining set with the family."""
    hits = attaining_arguments(fam.b, fam.target_value, bound)
    return len(hits) == 2**fam.k and tuple(hits) == fam.members
