"""Exact integer and rational primitives.

Integers are plain Python ``int`` (unbounded); rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.  Nothing in this module touches floating point.
"""

from __future__ import annotations

import math
import random
import sys
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

Rational = Fraction

DEFAULT_FACTOR_BOUND = 10**12


class NotCoprime(ValueError):
    pass


class ModuliNotCoprime(ValueError):
    pass


class NotPrime(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


def _lift_str_digit_limit() -> None:
    # CPython >= 3.10.7 caps int<->str conversion at 4300 digits by default.
    setter = getattr(sys, "set_int_max_str_digits", None)
    if setter is not None:
        setter(0)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)`` and ``g >= 0``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b != 0:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def mod_inverse(c: int, b: int) -> int:
    """Inverse of ``c`` modulo ``b`` in ``[0, b-1]``; 0 when ``b == 1``."""
    if b < 1:
        raise ValueError(f"modulus must be >= 1, got {b}")
    if b == 1:
        return 0
    g, x, _ = xgcd(c % b, b)
    if g != 1:
        raise NotCoprime(f"{c} is not invertible modulo {b} (gcd {g})")
    return x % b


def crt(residues: Iterable[Tuple[int, int]]) -> int:
    """Solve ``x = r_i (mod m_i)`` for pairwise coprime moduli.

    Returns the unique solution in ``[0, prod(m_i) - 1]``.
    """
    x, modulus = 0, 1
    for r, m in residues:
        if m < 1:
            raise ValueError(f"modulus must be >= 1, got {m}")
        g, inv, _ = xgcd(modulus, m)
        if g != 1:
            raise ModuliNotCoprime(f"{modulus} and {m} share the factor {g}")
        # x + modulus * h = r (mod m)
        h = ((r - x) * inv) % m
        x += modulus * h
        modulus *= m
        x %= modulus
    return x


_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
# 64 random rounds: error probability <= 4**-64 = 2**-128.
_MR_RANDOM_ROUNDS = 64


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic for ``n < 2**64`` (first twelve prime bases).  Above that
    the twelve fixed bases are followed by 64 pseudo-random bases, giving an
    error probability below ``2**-128``.  The random bases are seeded from
    ``n`` so repeated calls give the same answer.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_mr_round(n, d, s, a) for a in _MR_BASES_64):
        return False
    if n < 2**64:
        return True
    rng = random.Random(n)
    return all(
        _mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(_MR_RANDOM_ROUNDS)
    )


def is_prime_certain(n: int) -> bool:
    """True when :func:`is_prime` is a proof rather than a probable answer."""
    return n < 2**64


def sqrt_mod_p(a: int, p: int) -> Optional[Tuple[int, int]]:
    """Square roots of ``a`` modulo an odd prime ``p`` (Tonelli-Shanks).

    Returns ``(x, p - x)`` with ``x <= p - x``, ``(0, 0)`` when ``p | a``
    and ``None`` for a nonresidue.
    """
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return (0, 0)
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return (min(r, p - r), max(r, p - r))


def factor_squarefree(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> Optional[list]:
    """Distinct prime factors of a square-free ``n`` by trial division.

    Returns ``None`` if ``n`` has a square factor.  Raises
    :class:`BoundExceeded` when ``n`` is larger than ``bound``.
    """
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    if n > bound:
        raise BoundExceeded(f"{n} exceeds the trial-division bound {bound}")
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return None
            primes.append(p)
        p += 1 if p == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


def primes_between(lo: int, hi: int) -> list:
    """Primes ``p`` with ``lo <= p <= hi``."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


# -- serialization ---------------------------------------------------------

def format_int(n: int) -> str:
    _lift_str_digit_limit()
    return str(n)


def parse_int(text: str) -> int:
    _lift_str_digit_limit()
    text = text.strip()
    if not text or not text.lstrip("+-").isdigit():
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def format_rational(x: Fraction) -> str:
    """``"num/den"`` in lowest terms; zero is ``"0/1"``."""
    x = Fraction(x)
    return f"{format_int(x.numerator)}/{format_int(x.denominator)}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if not sep:
        return Fraction(parse_int(num))
    d = parse_int(den)
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(parse_int(num), d)


def product(values: Sequence[int]) -> int:
    return math.prod(values)
