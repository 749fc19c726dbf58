"""Closed-form evaluators: multiplicity-vector sums over A_n.

Every counting family reduces to

    sum over (l_1..l_n) with sum s*l_s = n  of  prod_s C(l_s + m_s - 1, l_s)

where m_s is the family's multiplicity pattern.  C(l + m - 1, l) counts the
ways to split l copies of part s among m indistinguishable-slot variables,
which is exactly the coefficient extraction the generating function performs.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Callable

from .combinat import binomial
from .sequences import (
    pp_multiplicity,
    ppr_multiplicity,
    pps_multiplicity,
    ppso_multiplicity,
)
from .series import oracle_value


class HypothesisError(ValueError):
    """An evaluator was called outside its validity range."""


def bounded_composition_count(total: int, copies: int, limit: int) -> int:
    """Number of (x_1..x_copies) with 0 <= x_i <= limit and sum x_i = total.

    Inclusion-exclusion over the coordinates pushed past the limit; returns 0
    outside the support [0, copies*limit].
    """
    if copies < 1:
        raise ValueError("copies must be >= 1")
    if limit < 0:
        raise ValueError("limit must be >= 0")
    if total < 0:
        return 0
    out = 0
    for i in range(copies + 1):
        rest = total - i * (limit + 1)
        if rest < 0:
            break
        term = binomial(copies, i) * binomial(rest + copies - 1, copies - 1)
        out += term if i % 2 == 0 else -term
    return out


@dataclass(frozen=True)
class BlockPolynomial:
    """(1 + z + ... + z^alpha)^copies with alpha = modulus/copies - 1.

    Coefficients can be read off two ways — direct expansion and the
    inclusion-exclusion closed form — and the two must agree.  The polynomial
    is reciprocal: coefficient(k) == coefficient(degree - k).
    """

    copies: int
    modulus: int

    def __post_init__(self) -> None:
        if self.copies < 1:
            raise ValueError("copies must be >= 1")
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if self.modulus % self.copies:
            raise ValueError("copies must divide modulus")

    @property
    def alpha(self) -> int:
        return self.modulus // self.copies - 1

    @property
    def degree(self) -> int:
        return self.copies * self.alpha

    def coefficients(self) -> tuple[int, ...]:
        out = [1]
        for _ in range(self.copies):
            grown = [0] * (len(out) + self.alpha)
            for i, c in enumerate(out):
                for j in range(self.alpha + 1):
                    grown[i + j] += c
            out = grown
        return tuple(out)

    def coefficient_direct(self, k: int) -> int:
        if k < 0 or k > self.degree:
            return 0
        return self.coefficients()[k]

    def coefficient_closed(self, k: int) -> int:
        if k < 0:
            return 0
        return bounded_composition_count(k, self.copies, self.alpha)


@functools.lru_cache(maxsize=128)
def multiplicity_vectors(n: int) -> tuple[tuple[int, ...], ...]:
    """All (l_1..l_n) with l_1 + 2 l_2 + ... + n l_n = n, in decreasing
    lexicographic order of the tuples as written."""
    if n < 1:
        raise ValueError("multiplicity_vectors requires n >= 1")
    out: list[tuple[int, ...]] = []
    vec = [0] * n

    # Slots at index >= s-1 are zero whenever rec(s, ...) is entered, because
    # every loop below ends on l = 0.
    def rec(s: int, remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(vec))
            return
        if remaining < s:
            return
        for l in range(remaining // s, -1, -1):
            vec[s - 1] = l
            rec(s + 1, remaining - s * l)

    rec(1, n)
    return tuple(out)


def _vector_sum(n: int, multiplicity_at: Callable[[int], int], shards: int = 1) -> int:
    """sum over A_n of prod_s C(l_s + m_s - 1, l_s), shard-partitionable."""
    if shards < 1:
        raise ValueError("shards must be >= 1")
    vectors = multiplicity_vectors(n)
    total = 0
    for shard in range(shards):
        for vec in vectors[shard::shards]:
            term = 1
            for s, l in enumerate(vec, start=1):
                if l:
                    term *= binomial(l + multiplicity_at(s) - 1, l)
            total += term
    return total


def pp_formula(n: int, *, shards: int = 1) -> int:
    """Plane partitions of n via the multiplicity-vector sum (valid for n >= 3)."""
    if n < 3:
        raise HypothesisError("pp_formula requires n >= 3")
    return _vector_sum(n, pp_multiplicity, shards)


def ppr_formula(n: int, r: int, *, shards: int = 1) -> int:
    """Plane partitions of n with at most r rows (valid for n > r >= 2)."""
    if r < 2 or n <= r:
        raise HypothesisError("ppr_formula requires n > r >= 2")
    return _vector_sum(n, lambda s: ppr_multiplicity(s, r), shards)


def pps_formula(n: int, *, shards: int = 1) -> int:
    """Strict plane partitions of n (valid for n >= 3)."""
    if n < 3:
        raise HypothesisError("pps_formula requires n >= 3")
    return _vector_sum(n, pps_multiplicity, shards)


def ppso_formula(n: int, *, shards: int = 1) -> int:
    """The odd-weighted count ppso(n) (valid for n >= 3)."""
    if n < 3:
        raise HypothesisError("ppso_formula requires n >= 3")
    return _vector_sum(n, ppso_multiplicity, shards)


def multipartition_formula(n: int, r: int, *, shards: int = 1) -> int:
    """r-component multipartitions of n (valid for n >= 4 and 2 <= r < n)."""
    if n < 4 or r < 2 or r >= n:
        raise HypothesisError("multipartition_formula requires n >= 4 and 2 <= r < n")
    return _vector_sum(n, lambda s: r, shards)


def ppr_inclusion_exclusion(n: int, r: int, pr_values: Callable[[int], int]) -> int:
    """pp_r(n) as an alternating sum of multipartition counts.

    pr_values(k) must supply P_r(k) for 0 <= k <= n (arguments below zero are
    treated as zero).  Each shift pattern (t_1..t_{r-1}) with 0 <= t_j <= r-j
    contributes sign (-1)^sum(t) times prod_j C(r-j, t_j).
    """
    if r < 1:
        raise ValueError("ppr_inclusion_exclusion requires r >= 1")
    if n < 0:
        return 0
    total = 0
    for ts in itertools.product(*(range(r - j + 1) for j in range(1, r))):
        shift = sum(j * t for j, t in enumerate(ts, start=1))
        if shift > n:
            continue
        coeff = 1
        for j, t in enumerate(ts, start=1):
            coeff *= binomial(r - j, t)
        value = coeff * pr_values(n - shift)
        total += -value if sum(ts) % 2 else value
    return total


def ppr_via_multipartition_formula(n: int, r: int) -> int:
    """pp_r(n) by the alternating sum, with formula-backed multipartition
    counts wherever the formula hypothesis holds and the DP oracle elsewhere."""

    cache: dict[int, int] = {}

    def pr(k: int) -> int:
        if k < 0:
            return 0
        if k not in cache:
            if k >= 4 and 2 <= r < k:
                cache[k] = multipartition_formula(k, r)
            else:
                cache[k] = oracle_value("P_r", k, r=r)
        return cache[k]

    return ppr_inclusion_exclusion(n, r, pr)
