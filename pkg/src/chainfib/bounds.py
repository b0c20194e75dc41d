"""Lower and upper bounds on L(k, g, n).

L(k, g, n) is the least entropy of a pseudo-Anosov map of S_{g,n} whose
action on first homology fixes a subspace of dimension at least k.

Lower bound, valid for all (k, g, n): b_1 of a mapping torus is kappa + 1,
b_1 <= 334.08 vol, and vol <= 3 pi |chi| h, hence

    L(k, g, n) >= (k + 1) / (334.08 * 3 pi * |chi|).

Upper bound, for 4g-4 <= k+1 <= n <= 2k-4g+6:

    L(k, g, n) <= 2 (k + 1) log(k + 3) / |chi|,

witnessed by a chained-link sequence tuple of length k+1.  All logarithms
are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chainlink import ChainClass
from .errors import ConsistencyError, DomainError, NonHyperbolicSurface
from .families import (
    SequenceIndex,
    in_theorem_domain,
    require_theorem_domain,
    solve_target,
    target_index,
)
from .thurston import monodromy_stretch

BETTI_VOLUME_CONSTANT = 334.08
LOWER_CONSTANT = BETTI_VOLUME_CONSTANT * 3 * math.pi
# rounded values quoted alongside the bound; display only
LOWER_CONSTANT_QUOTED = 3147.8
LOWER_COEFFICIENT_QUOTED = 0.00031


def chi_abs(g: int, n: int) -> int:
    chi = 2 - 2 * g - n
    if g < 0 or n < 0:
        raise ValueError("genus and punctures must be non-negative")
    if chi >= 0:
        raise NonHyperbolicSurface(f"S_{{{g},{n}}} has Euler characteristic {chi} >= 0")
    return -chi


@dataclass(frozen=True)
class BoundsQuery:
    k: int
    g: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.g < 0 or self.n < 0:
            raise ValueError("k, g, n must be non-negative")
        if 3 * self.g - 3 + self.n < 1:
            raise NonHyperbolicSurface(
                f"S_{{{self.g},{self.n}}} carries no pseudo-Anosov maps"
            )
        chi_abs(self.g, self.n)

    @property
    def chi_abs(self) -> int:
        return chi_abs(self.g, self.n)


def _query(q: BoundsQuery | tuple[int, int, int]) -> BoundsQuery:
    return q if isinstance(q, BoundsQuery) else BoundsQuery(*q)


def lower_bound(q: BoundsQuery | tuple[int, int, int]) -> float:
    q = _query(q)
    return (q.k + 1) / (LOWER_CONSTANT * q.chi_abs)


@dataclass(frozen=True)
class UpperBound:
    value: float
    witness: ChainClass


def upper_bound(q: BoundsQuery | tuple[int, int, int]) -> UpperBound:
    q = _query(q)
    require_theorem_domain(q.k, q.g, q.n)
    value = 2 * (q.k + 1) * math.log(q.k + 3) / q.chi_abs
    return UpperBound(value, solve_target(q.k, q.g, q.n))


def corollary_applies(k: int, g: int, n: int) -> str | None:
    """Which corollary of the upper bound covers (k, g, n), if any."""
    if k == n - 1 and n >= 4 * g - 4 and g >= 2:
        return "k=n-1"
    if g >= 2 and n >= 4 * g - 4 and n + 4 * g - 6 <= 2 * k and k < n:
        return "fixed-genus"
    return None


def corollary_bounds(q: BoundsQuery | tuple[int, int, int]) -> float | None:
    """2(k+1) log(n+2) / |chi| where a corollary applies, else None.

    At k = n - 1 this is 2n log(n+2) / |chi|, identical to the upper bound.
    """
    q = _query(q)
    which = corollary_applies(q.k, q.g, q.n)
    if which is None:
        return None
    return 2 * (q.k + 1) * math.log(q.n + 2) / q.chi_abs


@dataclass(frozen=True)
class EntropyCap:
    """Bound on the normalized entropy |chi| h of a t = 1 sequence tuple.

    ``exact`` is |chi(S)| log(lambda_N), an upper bound on the normalized
    entropy because the tuple is (1, ..., 1) plus a class in the closed cone;
    ``cap`` is 2N log(N+2).
    """

    exact: float
    cap: float
    length: int
    chi_ratio: float


def chi_ratio(idx: SequenceIndex) -> float:
    """|chi| / N for the sequence tuple: (6m + 2 pad + i) / (4m + pad + i)."""
    return (6 * idx.m + 2 * idx.pad + idx.i) / idx.length


def normalized_entropy_cap(idx: SequenceIndex) -> EntropyCap:
    if idx.t != 1:
        raise ValueError("the entropy cap is stated for t = 1")
    n = idx.length
    chi = 6 * idx.m + 2 * idx.pad + idx.i
    exact = chi * monodromy_stretch(n).entropy
    return EntropyCap(exact, 2 * n * math.log(n + 2), n, chi / n)


@dataclass(frozen=True)
class BoundsReport:
    k: int
    g: int
    n: int
    chi_abs: int
    lower: float
    upper: float | None
    in_theorem_domain: bool
    witness: ChainClass | None
    corollary: float | None
    normalized_entropy_cap: float | None
    failed_conditions: tuple[str, ...] = ()


def bounds_report(q: BoundsQuery | tuple[int, int, int]) -> BoundsReport:
    q = _query(q)
    lower = lower_bound(q)
    try:
        ub = upper_bound(q)
    except DomainError as exc:
        return BoundsReport(
            q.k, q.g, q.n, q.chi_abs, lower, None, False, None,
            corollary_bounds(q), None, tuple(exc.failed),
        )
    cap = normalized_entropy_cap(target_index(q.k, q.g, q.n))
    if not lower < ub.value:
        raise ConsistencyError(f"lower bound {lower} not below upper bound {ub.value}")
    return BoundsReport(
        q.k, q.g, q.n, q.chi_abs, lower, ub.value, True, ub.witness,
        corollary_bounds(q), cap.cap,
    )


def domain_points(g: int, k_max: int) -> list[tuple[int, int]]:
    """Lattice points (k, n) with k <= k_max in the upper-bound domain at genus g."""
    if g < 2 or k_max < 1:
        raise ValueError("need g >= 2 and k_max >= 1")
    return [
        (k, n)
        for k in range(0, k_max + 1)
        for n in range(k + 1, 2 * k - 4 * g + 7)
        if in_theorem_domain(k, g, n)
    ]

