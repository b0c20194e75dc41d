"""The fibered face of the magic manifold.

The face is ``{(x, y, z) : x + y - z = 1, x > 0, y > 0, x > z, y > z}``;
classes live in the open cone over it.  On a primitive class the Thurston
norm is ``x + y - z`` and the fiber has
``gcd(x, y+z) + gcd(y, z+x) + gcd(z, x+y)`` boundary components.
"""

from __future__ import annotations

from .core import ClassLike, FiberClass, SurfaceType, check64, gcd0, is_primitive, surface_from
from .errors import NotPrimitive, OutsideCone


class MagicClass(FiberClass):
    min_length = 3

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.coords) != 3:
            raise ValueError(f"magic manifold classes have 3 coordinates, got {len(self.coords)}")


def as_magic(v: ClassLike) -> MagicClass:
    if isinstance(v, MagicClass):
        return v
    return MagicClass(tuple(v))


def magic_in_cone(v: ClassLike) -> bool:
    x, y, z = as_magic(v)
    return x > 0 and y > 0 and x > z and y > z


def _require_cone(v: MagicClass) -> None:
    if not magic_in_cone(v):
        raise OutsideCone(f"{v} is not in the open cone over the fibered face")


def magic_norm(v: ClassLike) -> int:
    v = as_magic(v)
    _require_cone(v)
    x, y, z = v
    return check64(check64(x + y) - z)


def magic_boundaries(v: ClassLike) -> int:
    v = as_magic(v)
    _require_cone(v)
    if not is_primitive(v):
        raise NotPrimitive(f"{v} is not primitive")
    x, y, z = v
    return (
        gcd0(x, check64(y + z))
        + gcd0(y, check64(z + x))
        + gcd0(z, check64(x + y))
    )


def magic_classify(v: ClassLike) -> SurfaceType:
    v = as_magic(v)
    return surface_from(magic_norm(v), magic_boundaries(v))
