"""Exhaustive equality census for a single modulus.

Every argument c in [1, b-1] coprime to b is evaluated exactly and grouped
by value.  From the classes we read off N(c, b) (the class size, c itself
included), the distinct positive values, and the values that are shared
by arguments other than c and c*.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .arith import (
    BoundExceeded,
    NotCoprime,
    factor_squarefree,
    format_int,
    format_rational,
    mod_inverse,
    primes_between,
)
from .core import dedekind_S
from .suitable import is_suitable

DEFAULT_SWEEP_BOUND = 10**6


class NotSquareFree(ValueError):
    pass


def _check_bound(b: int, bound: int) -> None:
    if b > bound:
        raise BoundExceeded(f"sweep of b = {b} exceeds the bound {bound}")


def _sweep(b: int, lo: int, hi: int, naive: bool = False) -> Dict[Fraction, List[int]]:
    classes: Dict[Fraction, List[int]] = {}
    for c in range(lo, hi):
        if math.gcd(c, b) == 1:
            classes.setdefault(dedekind_S(c, b, naive=naive), []).append(c)
    return classes


def merge_classes(parts) -> Dict[Fraction, List[int]]:
    """Merge partial class maps; result lists are sorted, keys ordered by value."""
    merged: Dict[Fraction, List[int]] = {}
    for part in parts:
        for value, args in part.items():
            merged.setdefault(value, []).extend(args)
    return {v: sorted(merged[v]) for v in sorted(merged)}


def value_classes(
    b: int, *, workers: int = 1, naive: bool = False, bound: int = DEFAULT_SWEEP_BOUND
) -> Dict[Fraction, List[int]]:
    _check_bound(b, bound)
    if b == 1:
        return {}
    if workers <= 1 or b < 10_000:
        return merge_classes([_sweep(b, 1, b, naive)])
    edges = [1 + (b - 1) * i // workers for i in range(workers + 1)]
    with ProcessPoolExecutor(workers) as pool:
        parts = pool.map(_sweep, [b] * workers, edges[:-1], edges[1:], [naive] * workers)
        return merge_classes(list(parts))


@dataclass
class CensusReport:
    b: int
    classes: Dict[Fraction, List[int]]
    distinct_positive_count: int
    nontrivial_values: List[Fraction]
    counts: Dict[int, int] = field(repr=False)

    @property
    def max_count(self) -> int:
        return max(self.counts.values(), default=0)

    def value_of(self, c: int) -> Fraction:
        for value, args in self.classes.items():
            if c in args:
                return value
        raise KeyError(c)

    def to_json(self) -> str:
        doc = {
            "b": format_int(self.b),
            "distinct_values": len(self.classes),
            "distinct_positive_count": self.distinct_positive_count,
            "nontrivial_values": [format_rational(v) for v in self.nontrivial_values],
            "max_N": self.max_count,
            "classes": {
                format_rational(v): [format_int(c) for c in args]
                for v, args in self.classes.items()
            },
            "N": {format_int(c): self.counts[c] for c in sorted(self.counts)},
        }
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        values = {c: v for v, args in self.classes.items() for c in args}
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["c", "S", "N"])
        for c in sorted(values):
            writer.writerow([format_int(c), format_rational(values[c]), self.counts[c]])
        return out.getvalue()


def _is_nontrivial_class(b: int, args: List[int]) -> bool:
    members = set(args)
    return any(
        d != c and d != mod_inverse(c, b) for c in members for d in members
    )


def full_census(
    b: int, *, workers: int = 1, naive: bool = False, bound: int = DEFAULT_SWEEP_BOUND
) -> CensusReport:
    classes = value_classes(b, workers=workers, naive=naive, bound=bound)
    counts = {c: len(args) for args in classes.values() for c in args}
    nontrivial = sorted(
        (v for v, args in classes.items() if _is_nontrivial_class(b, args)), reverse=True
    )
    return CensusReport(
        b=b,
        classes=classes,
        distinct_positive_count=sum(1 for v in classes if v > 0),
        nontrivial_values=nontrivial,
        counts=counts,
    )


def count_equal(c: int, b: int) -> int:
    """N(c, b): arguments d in [1, b-1] coprime to b with S(d, b) = S(c, b)."""
    if math.gcd(c, b) != 1:
        raise NotCoprime(f"gcd({c}, {b}) != 1")
    target = dedekind_S(c, b)
    return sum(1 for d in range(1, b) if math.gcd(d, b) == 1 and dedekind_S(d, b) == target)


@dataclass
class SquarefreeReport:
    b: int
    primes: List[int]
    bound_2r: int
    attained: List[int]
    # (c, N(c, b)) pairs breaking N <= 2^r or "N is 1 or even"
    counterexamples: List[Tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def squarefree_bound_check(
    b: int, report: Optional[CensusReport] = None, bound: int = DEFAULT_SWEEP_BOUND
) -> SquarefreeReport:
    _check_bound(b, bound)
    primes = factor_squarefree(b)
    if primes is None:
        raise NotSquareFree(f"{b} has a square factor")
    if report is None:
        report = full_census(b, bound=bound)
    limit = 2 ** len(primes)
    bad = [
        (c, n)
        for c, n in sorted(report.counts.items())
        if n > limit or (n != 1 and n % 2)
    ]
    return SquarefreeReport(
        b=b,
        primes=primes,
        bound_2r=limit,
        attained=sorted(set(report.counts.values())),
        counterexamples=bad,
    )


@dataclass(frozen=True)
class SearchHit:
    b: int
    p: int
    q: int
    c: int
    d: int
    common_value: Fraction


def least_suitable_pair(b: int, report: Optional[CensusReport] = None) -> Optional[Tuple[int, int]]:
    """Lexicographically least (c, d), c < d, forming a suitable set for b.

    Only positive common values are considered; a negative-valued set
    {c, d} mirrors the positive set {b - c, b - d}.
    """
    if report is None:
        report = full_census(b)
    best = None
    for value, args in report.classes.items():
        if value <= 0:
            continue
        for i, c in enumerate(args):
            if best is not None and c > best[0]:
                break
            c_inv = mod_inverse(c, b)
            for d in args[i + 1:]:
                if d != c_inv:
                    if best is None or (c, d) < best:
                        best = (c, d)
                    break
    return best


def search_suitable_pairs(
    pmin: int, pmax: int, bound: int = DEFAULT_SWEEP_BOUND
) -> List[SearchHit]:
    """Least suitable set for each b = p q with primes 5 <= p < q in [pmin, pmax].

    Moduli are visited in ascending order; those without a suitable set
    produce no hit.
    """
    primes = primes_between(max(pmin, 5), pmax)
    moduli = sorted((p * q, p, q) for i, p in enumerate(primes) for q in primes[i + 1:])
    for b, _, _ in moduli:
        _check_bound(b, bound)
    hits = []
    for b, p, q in moduli:
        report = full_census(b, bound=bound)
        pair = least_suitable_pair(b, report)
        if pair is not None:
            c, d = pair
            assert is_suitable(b, c, d)
            hits.append(SearchHit(b, p, q, c, d, dedekind_S(c, b)))
    return hits


def hits_to_json(hits: List[SearchHit]) -> str:
    return json.dumps(
        [
            {
                "b": format_int(h.b),
                "primes": [format_int(h.p), format_int(h.q)],
                "c": format_int(h.c),
                "d": format_int(h.d),
                "value": format_rational(h.common_value),
            }
            for h in hits
        ],
        indent=2,
    )


def hits_to_csv(hits: List[SearchHit]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["b", "p", "q", "c", "d", "value"])
    for h in hits:
        writer.writerow([h.b, h.p, h.q, h.c, h.d, format_rational(h.common_value)])
    return out.getvalue()
