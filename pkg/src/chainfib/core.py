"""Exact integer primitives shared by the cone models.

Python integers never wrap, but the data model promises 64-bit coordinates,
so every value that is stored or produced by a sum goes through
:func:`check64` and overflow surfaces as :class:`IntegerOverflow`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import IntegerOverflow, NegativeGenus, ParityError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check64(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise IntegerOverflow(f"{value} does not fit in a signed 64-bit integer")
    return value


def checked_sum(values: Iterable[int]) -> int:
    total = 0
    for v in values:
        total = check64(total + v)
    return total


def gcd0(a: int, b: int) -> int:
    """Non-negative gcd with ``gcd0(0, w) == |w|`` and ``gcd0(0, 0) == 0``."""
    return gcd(a, b)


@dataclass(frozen=True)
class FiberClass:
    """Integer class in H_2(M, dM; Z), in the manifold's canonical basis."""

    coords: tuple[int, ...]

    min_length = 3

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coordinates must be integers, got {c!r}")
            check64(c)
        if len(coords) < self.min_length:
            raise ValueError(
                f"{type(self).__name__} needs at least {self.min_length} "
                f"coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.coords)) + ")"


ClassLike = Union[FiberClass, Sequence[int]]


def content(v: ClassLike) -> int:
    """gcd of all coordinates, folded with :func:`gcd0`."""
    return reduce(gcd0, v, 0)


def is_primitive(v: ClassLike) -> bool:
    return content(v) == 1


@dataclass(frozen=True, order=True)
class SurfaceType:
    """Orientable surface S_{g,n}: genus ``genus`` with ``punctures`` punctures."""

    genus: int
    punctures: int

    def __post_init__(self) -> None:
        if self.genus < 0 or self.punctures < 0:
            raise ValueError("genus and punctures must be non-negative")

    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.punctures

    def __str__(self) -> str:
        return f"S_{{{self.genus},{self.punctures}}}"


def surface_from(norm: int, boundaries: int) -> SurfaceType:
    """Surface type of a fiber with Thurston norm ``norm`` and ``boundaries``
    boundary components, using -chi = norm and chi = 2 - 2g - n."""
    if norm < 1 or boundaries < 1:
        raise ValueError(f"need norm >= 1 and boundaries >= 1, got {norm}, {boundaries}")
    twice_genus = check64(norm + 2 - boundaries)
    if twice_genus % 2:
        raise ParityError(f"norm {norm} + boundaries {boundaries} is odd")
    if twice_genus < 0:
        raise NegativeGenus(
            f"norm {norm} with {boundaries} boundaries gives genus {twice_genus // 2}"
        )
    return SurfaceType(twice_genus // 2, boundaries)
