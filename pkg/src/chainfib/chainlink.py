"""Fibered classes of M(N), the exterior of the N-chained link with two half twists.

Coordinates are taken in the basis of twice-punctured disks bounded by the
link components.  Every class with all coordinates >= 1 lies in the fibered
cone containing (1, ..., 1); there the norm is the coordinate sum and the
boundary count is the cyclic sum ``sum_i gcd(a[i-1] + a[i+1], a[i])``.
Outside that orthant the shape of the fibered cone is unknown and classes
are rejected.
"""

from __future__ import annotations

import enum

from .core import (
    ClassLike,
    FiberClass,
    SurfaceType,
    check64,
    checked_sum,
    gcd0,
    is_primitive,
    surface_from,
)
from .errors import NotPrimitive, OutsideCone

MIN_COMPONENTS = 4


class ChainClass(FiberClass):
    # M(N) is hyperbolic only for N >= 4.
    min_length = MIN_COMPONENTS

    @property
    def components(self) -> int:
        return len(self.coords)


def as_chain(v: ClassLike) -> ChainClass:
    if isinstance(v, ChainClass):
        return v
    return ChainClass(tuple(v))


class Region(enum.Enum):
    """Where a class sits relative to what is known about the fibered cone."""

    INSIDE = "inside-known-subcone"
    # Closed orthant minus its interior: the norm is still the coordinate sum
    # (the norm is linear on the closed cone) but fiberedness is not known.
    UNKNOWN = "unknown"
    NORM_UNDEFINED = "norm-undefined"


def chain_region(v: ClassLike) -> Region:
    v = as_chain(v)
    if all(a >= 1 for a in v):
        return Region.INSIDE
    if all(a >= 0 for a in v) and any(v):
        return Region.UNKNOWN
    return Region.NORM_UNDEFINED


def chain_in_cone(v: ClassLike) -> bool:
    return all(a >= 1 for a in as_chain(v))


def _require_cone(v: ChainClass) -> None:
    if not chain_in_cone(v):
        raise OutsideCone(
            f"{v} has a coordinate below 1; only the open positive orthant is "
            "known to lie in the fibered cone"
        )


def chain_norm(v: ClassLike) -> int:
    v = as_chain(v)
    _require_cone(v)
    return checked_sum(v)


def boundary_terms(v: ClassLike) -> list[int]:
    """Per-component boundary counts, without cone or primitivity checks."""
    a = as_chain(v).coords
    n = len(a)
    return [gcd0(check64(a[i - 1] + a[(i + 1) % n]), a[i]) for i in range(n)]


def chain_boundaries(v: ClassLike) -> int:
    v = as_chain(v)
    _require_cone(v)
    if not is_primitive(v):
        raise NotPrimitive(f"{v} is not primitive")
    return checked_sum(boundary_terms(v))


def chain_classify(v: ClassLike) -> SurfaceType:
    v = as_chain(v)
    return surface_from(chain_norm(v), chain_boundaries(v))
