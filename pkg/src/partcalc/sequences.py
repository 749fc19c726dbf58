"""Weight sequences for the counting families.

Each counting family is determined by how many times part k may repeat:

    p     -> 1            pp_r -> min(k, r)      ppso -> 1 (k odd), k/2 (k even)
    pp    -> k            pps  -> floor((k+1)/2)  P_r  -> r

A WeightSequence is the expanded part list (multiplicities explicit); a
WeightFunction is the compressed part -> multiplicity view on 1..bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

QUANTITIES = ("p", "pp", "pp_r", "pps", "ppso", "P_r", "p_a")

# Quantities whose weight pattern needs the extra parameter r.
R_QUANTITIES = ("pp_r", "P_r")


def pp_multiplicity(k: int) -> int:
    return k


def ppr_multiplicity(k: int, r: int) -> int:
    return min(k, r)


def pps_multiplicity(k: int) -> int:
    return (k + 1) // 2


def ppso_multiplicity(k: int) -> int:
    return 1 if k % 2 else k // 2


@dataclass(frozen=True)
class WeightSequence:
    """Nondecreasing list of positive integer parts, multiplicities explicit."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("WeightSequence needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be nondecreasing")

    @classmethod
    def from_parts(cls, parts) -> "WeightSequence":
        return cls(tuple(sorted(parts)))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def lcm(self) -> int:
        return math.lcm(*self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def to_weight_function(self) -> "WeightFunction":
        counts = self.multiplicities()
        bound = self.parts[-1]
        return WeightFunction(bound, tuple(counts.get(k, 0) for k in range(1, bound + 1)))


@dataclass(frozen=True)
class WeightFunction:
    """Part -> multiplicity map on 1..bound; weights[k-1] is the multiplicity of k."""

    bound: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.bound < 1:
            raise ValueError("WeightFunction requires bound >= 1")
        if len(self.weights) != self.bound:
            raise ValueError("need one weight per part in 1..bound")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")

    def __call__(self, k: int) -> int:
        if 1 <= k <= self.bound:
            return self.weights[k - 1]
        return 0

    def expand(self) -> WeightSequence:
        parts = []
        for k in range(1, self.bound + 1):
            parts.extend([k] * self.weights[k - 1])
        return WeightSequence(tuple(parts))


def _expand_pattern(bound: int, multiplicity_at) -> WeightSequence:
    return WeightFunction(bound, tuple(multiplicity_at(k) for k in range(1, bound + 1))).expand()


def seq_pp(n: int) -> WeightSequence:
    """(1, 2, 2, 3, 3, 3, ..., n repeated n times)."""
    if n < 1:
        raise ValueError("seq_pp requires n >= 1")
    return _expand_pattern(n, pp_multiplicity)


def seq_pp_r(n: int, r: int) -> WeightSequence:
    """Part k repeated min(k, r) times."""
    if n < 1 or r < 1:
        raise ValueError("seq_pp_r requires n >= 1 and r >= 1")
    return _expand_pattern(n, lambda k: ppr_multiplicity(k, r))


def seq_strict(n: int) -> WeightSequence:
    """Part k repeated floor((k+1)/2) times."""
    if n < 1:
        raise ValueError("seq_strict requires n >= 1")
    return _expand_pattern(n, pps_multiplicity)


def seq_symmetric(n: int) -> WeightSequence:
    """Part k repeated once for odd k and k/2 times for even k."""
    if n < 1:
        raise ValueError("seq_symmetric requires n >= 1")
    return _expand_pattern(n, ppso_multiplicity)


def seq_multipartition(n: int, r: int) -> WeightSequence:
    """Every part 1..n repeated r times."""
    if n < 1 or r < 1:
        raise ValueError("seq_multipartition requires n >= 1 and r >= 1")
    return _expand_pattern(n, lambda k: r)


def quantity_multiplicity(quantity: str, k: int, r: int | None = None) -> int:
    """Multiplicity of part k in the weight sequence of the given quantity."""
    if quantity == "p":
        return 1
    if quantity == "pp":
        return pp_multiplicity(k)
    if quantity == "pps":
        return pps_multiplicity(k)
    if quantity == "ppso":
        return ppso_multiplicity(k)
    if quantity in R_QUANTITIES:
        if r is None:
            raise ValueError(f"quantity {quantity!r} requires r")
        return ppr_multiplicity(k, r) if quantity == "pp_r" else r
    raise ValueError(f"no multiplicity pattern for quantity {quantity!r}")


def quantity_weights(quantity: str, bound: int, r: int | None = None) -> WeightFunction:
    if bound < 1:
        raise ValueError("quantity_weights requires bound >= 1")
    return WeightFunction(
        bound, tuple(quantity_multiplicity(quantity, k, r) for k in range(1, bound + 1))
    )


def quantity_sequence(quantity: str, n: int, r: int | None = None) -> WeightSequence:
    return quantity_weights(quantity, n, r).expand()
