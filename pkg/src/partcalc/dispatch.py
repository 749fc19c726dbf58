"""Route a quantity request to a formula, an oracle, or a Stirling sum."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import diagrams, formulas, series, stirling
from .sequences import QUANTITIES, R_QUANTITIES, WeightSequence, seq_pp_r

METHODS = ("auto", "oracle-series", "oracle-dp", "oracle-enum", "theorem", "stirling")


class RequestError(ValueError):
    """Invalid quantity/parameter combination."""


@dataclass(frozen=True)
class ComputationRequest:
    quantity: str
    n: int
    r: int | None = None
    parts: tuple[int, ...] | None = None
    method: str = "auto"
    strict: bool = False

    def __post_init__(self) -> None:
        if self.quantity not in QUANTITIES:
            raise RequestError(f"unknown quantity {self.quantity!r}")
        if self.n < 0:
            raise RequestError("n must be >= 0")
        if self.method not in METHODS:
            raise RequestError(f"unknown method {self.method!r}")
        if self.quantity in R_QUANTITIES:
            if self.r is None:
                raise RequestError(f"quantity {self.quantity!r} requires --r")
            if self.r < 1:
                raise RequestError("r must be >= 1")
        elif self.r is not None:
            raise RequestError(f"quantity {self.quantity!r} does not take --r")
        if self.quantity == "p_a":
            if not self.parts:
                raise RequestError("quantity 'p_a' requires --parts")
            if any(p < 1 for p in self.parts):
                raise RequestError("parts must be positive")
        elif self.parts is not None:
            raise RequestError(f"quantity {self.quantity!r} does not take --parts")


def _theorem_path(req: ComputationRequest) -> Callable[[], int] | None:
    q, n, r = req.quantity, req.n, req.r
    if q == "pp" and n >= 3:
        return lambda: formulas.pp_formula(n)
    if q == "pp_r":
        assert r is not None
        if r >= n and n >= 3:
            return lambda: formulas.pp_formula(n)
        if 2 <= r < n:
            return lambda: formulas.ppr_formula(n, r)
        return None
    if q == "pps" and n >= 3:
        return lambda: formulas.pps_formula(n)
    if q == "ppso" and n >= 3:
        return lambda: formulas.ppso_formula(n)
    if q == "P_r":
        assert r is not None
        if n >= 4 and 2 <= r < n:
            return lambda: formulas.multipartition_formula(n, r)
        return None
    return None


def _stirling_path(req: ComputationRequest) -> Callable[[], int] | None:
    q, n, r = req.quantity, req.n, req.r
    if q == "p_a":
        parts = req.parts
        assert parts is not None
        return lambda: stirling.restricted_count_stirling(WeightSequence.from_parts(parts), n)
    if q == "p" and n >= 1:
        return lambda: stirling.restricted_count_stirling(seq_pp_r(n, 1), n)
    if q == "pp" and n >= 3:
        return lambda: stirling.pp_stirling(n)
    if q == "pp_r":
        assert r is not None
        if r >= n and n >= 3:
            return lambda: stirling.pp_stirling(n)
        if 2 <= r <= n - 1:
            return lambda: stirling.ppr_stirling(n, r)
        if r == 1 and n >= 1:
            return lambda: stirling.restricted_count_stirling(seq_pp_r(n, 1), n)
        return None
    if q == "pps" and n >= 3:
        return lambda: stirling.pps_stirling(n)
    if q == "ppso" and n >= 3:
        return lambda: stirling.ppso_stirling(n)
    if q == "P_r":
        assert r is not None
        if n >= 4 and 2 <= r < n:
            return lambda: stirling.multipartition_stirling(n, r)
        if r == 1 and n >= 1:
            return lambda: stirling.restricted_count_stirling(seq_pp_r(n, 1), n)
        return None
    return None


_ENUM_KIND = {"p": "max_rows", "pp": "all", "pp_r": "max_rows", "pps": "strict", "ppso": "symmetric"}


def _enum_value(req: ComputationRequest) -> int:
    kind = _ENUM_KIND.get(req.quantity)
    if kind is None:
        raise RequestError(f"no diagram predicate for quantity {req.quantity!r}")
    if req.n == 0:
        return 1
    r = 1 if req.quantity == "p" else req.r
    return diagrams.count_diagrams(req.n, kind, r=r)


def _oracle(req: ComputationRequest, backend: str) -> int:
    return series.oracle_value(
        req.quantity, req.n, r=req.r, parts=req.parts, backend=backend
    )


def compute(req: ComputationRequest) -> tuple[int, str]:
    """Evaluate the request; returns (value, method actually used).

    method="auto" prefers the closed-form evaluator when its hypothesis
    holds and falls back to the DP oracle.  Explicit "theorem"/"stirling"
    requests outside their hypotheses fall back the same way unless
    strict=True, in which case they raise HypothesisError.
    """
    if req.method == "oracle-dp":
        return _oracle(req, "dp"), "oracle-dp"
    if req.method == "oracle-series":
        return _oracle(req, "series"), "oracle-series"
    if req.method == "oracle-enum":
        return _enum_value(req), "oracle-enum"
    if req.method == "auto":
        path = _theorem_path(req)
        if path is not None:
            return path(), "theorem"
        return _oracle(req, "dp"), "oracle-dp"
    if req.method in ("theorem", "stirling"):
        path = _theorem_path(req) if req.method == "theorem" else _stirling_path(req)
        if path is None:
            if req.strict:
                raise formulas.HypothesisError(
                    f"method {req.method!r} does not cover {_describe(req)}"
                )
            return _oracle(req, "dp"), "oracle-dp"
        return path(), req.method
    raise RequestError(f"unknown method {req.method!r}")


def _describe(req: ComputationRequest) -> str:
    label = f"{req.quantity}, n={req.n}"
    if req.r is not None:
        label += f", r={req.r}"
    return label
