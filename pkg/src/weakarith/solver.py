"""Triples (a, b, c) of positive integers with ab - c, bc - a, ca - b all powers of 2.

Two independent routes: ``solve_naive`` enumerates the cube, ``solve_pruned``
follows the parity case analysis that pins the solutions down to four
unordered triples, then re-verifies every candidate.
"""

from __future__ import annotations

import itertools
import math
import json
from typing import Iterable, NamedTuple

import numpy as np

from .core import odd_part, v2

Triple = tuple[int, int, int]


class Residuals(NamedTuple):
    m: int  # a*b - c
    n: int  # b*c - a
    p: int  # c*a - b


def is_pow2(k: int) -> bool:
    return k >= 1 and k & (k - 1) == 0


def residuals(t: Triple) -> Residuals:
    a, b, c = t
    return Residuals(a * b - c, b * c - a, c * a - b)


def is_solution(t: Triple) -> bool:
    return all(min(t) >= 1 and is_pow2(r) for r in residuals(t))


def permutations(t: Triple) -> set[Triple]:
    return set(itertools.permutations(t))


def _pow2_mask(x: np.ndarray) -> np.ndarray:
    return (x >= 1) & ((x & (x - 1)) == 0)


def solve_naive(bound: int) -> set[Triple]:
    """Every triple with entries in [1, bound] satisfying the definition."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    r = np.arange(1, bound + 1, dtype=np.int64)
    b, c = np.meshgrid(r, r, indexing="ij")
    out: set[Triple] = set()
    # one (b, c) slab per value of a
    for a in range(1, bound + 1):
        ok = _pow2_mask(a * b - c) & _pow2_mask(b * c - a) & _pow2_mask(c * a - b)
        for bi, ci in zip(*np.nonzero(ok)):
            out.add((a, int(bi) + 1, int(ci) + 1))
    return out


def pow2_pair_with_gap(gap: int) -> tuple[int, int] | None:
    """The unique powers of two (u, u + gap) with gap > 0, if any.

    u + gap = 2**k and u = 2**i force i = v2(gap) and odd_part(gap) = 2**(k-i) - 1.
    """
    i, rest = v2(gap), odd_part(gap)
    if not is_pow2(rest + 1):
        return None
    return 1 << i, (1 << i) + gap


def _equal_pair_branch() -> list[Triple]:
    """a == b: PT(a*(c-1)) forces PT(a) and PT(c-1)."""
    found = []
    # c > 2: c - 1 and c + 1 are powers of two two apart
    pair = pow2_pair_with_gap(2)
    if pair is not None:
        c = pair[0] + 1
        a2 = c + 1  # a**2 - c == 1 since a**2 - c is odd
        a = math.isqrt(a2)
        if a * a == a2:
            found.append((a, a, c))
    # c == 2: a is a power of two not divisible by 4 and a > 1
    found.append((2, 2, 2))
    return found


def _ordered_c2() -> list[Triple]:
    """1 < 2 < b < a; exactly one of a, b is even."""
    found = []
    # a odd, b even: n = 2b - a is odd, so n == 1 and a = 2b - 1; then
    # 9m = (3b - 2)(6b + 1) - 16 puts 3b - 2 among the divisors of 16
    for t in (1, 2, 4, 8, 16):
        if (t + 2) % 3 == 0:
            b = (t + 2) // 3
            a = 2 * b - 1
            if 2 < b < a:
                found.append((a, b, 2))
    # a even, b odd: p = 2a - b is odd, so b = 2a - 1 > a, contradicting b < a
    return found


def _ordered_c3() -> list[Triple]:
    """1 < 3 < b < a; p <= 2(a + 1) leaves a - b in {1, 2}."""
    found = []
    # a = b + 1: n = 2b - 1 is odd, so n == 1 and b == 1: impossible
    # a = b + 2: m = (b - 1)(b + 3), two powers of two four apart
    pair = pow2_pair_with_gap(4)
    if pair is not None:
        b = pair[0] + 1
        if b > 3:
            found.append((b + 2, b, 3))
    return found


def canonical_solutions() -> list[Triple]:
    """Sorted representatives produced by the case analysis (not yet verified)."""
    return sorted(_equal_pair_branch() + _ordered_c2() + _ordered_c3())


def solve_pruned(bound: int) -> set[Triple]:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out: set[Triple] = set()
    for rep in canonical_solutions():
        for t in permutations(rep):
            if not is_solution(t):
                raise AssertionError(f"case analysis produced a non-solution {t}")
            if max(t) <= bound:
                out.add(t)
    return out


def check_identity_12(b_max: int) -> bool:
    """9(2b^2 - b - 2) == (3b - 2)(6b + 1) - 16 for every b in [1, b_max]."""
    if b_max < 1:
        raise ValueError("b_max must be >= 1")
    return all(
        9 * (2 * b * b - b - 2) == (3 * b - 2) * (6 * b + 1) - 16 for b in range(1, b_max + 1)
    )


def check_mp_identities(samples: Iterable[Triple]) -> bool:
    """m - p == (b - c)(a + 1) and m + p == (b + c)(a - 1) on every sample."""
    for a, b, c in samples:
        m, _, p = residuals((a, b, c))
        if m - p != (b - c) * (a + 1) or m + p != (b + c) * (a - 1):
            return False
    return True


def sorted_solutions(solutions: Iterable[Triple]) -> list[list[int]]:
    return [list(t) for t in sorted(solutions)]


def solutions_to_json(solutions: Iterable[Triple]) -> str:
    return json.dumps(sorted_solutions(solutions))
