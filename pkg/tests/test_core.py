import pytest

from chainfib.core import (
    INT64_MAX,
    FiberClass,
    SurfaceType,
    check64,
    checked_sum,
    content,
    gcd0,
    is_primitive,
    surface_from,
)
from chainfib.errors import IntegerOverflow, NegativeGenus, ParityError


@pytest.mark.parametrize("a, b, expected", [
    (0, 5, 5), (4, 6, 2), (0, 0, 0), (-4, 6, 2), (7, 0, 7), (-9, -12, 3),
])
def test_gcd0_values(a, b, expected):
    assert gcd0(a, b) == expected
    assert gcd0(b, a) == expected


@pytest.mark.parametrize("v, expected", [
    ((1, 1, 0), True),
    ((4, 4, 2), False),
    ((15, 15, 9), False),
    ((0, 0, 0), False),
    ((2, 2, 1, 1), True),
])
def test_is_primitive(v, expected):
    assert is_primitive(v) is expected


def test_content():
    assert content((15, 15, 9)) == 3
    assert content((0, 0, 0)) == 0
    assert content((-6, 4, 0)) == 2


def test_surface_from_examples():
    assert surface_from(9, 7) == SurfaceType(2, 7)
    assert surface_from(2, 4) == SurfaceType(0, 4)
    with pytest.raises(ParityError):
        surface_from(3, 4)
    with pytest.raises(NegativeGenus):
        surface_from(2, 6)
    with pytest.raises(ValueError):
        surface_from(0, 2)


def test_surface_type():
    s = SurfaceType(2, 7)
    assert str(s) == "S_{2,7}"
    assert s.euler_characteristic() == -9
    assert SurfaceType(1, 9) < SurfaceType(2, 0)
    with pytest.raises(ValueError):
        SurfaceType(-1, 2)


def test_overflow_is_reported():
    assert check64(INT64_MAX) == INT64_MAX
    with pytest.raises(IntegerOverflow):
        check64(INT64_MAX + 1)
    with pytest.raises(IntegerOverflow):
        checked_sum([INT64_MAX, 1])
    with pytest.raises(IntegerOverflow):
        FiberClass((2**64, 1, 1))
    # still an OverflowError for callers that only know the builtin
    with pytest.raises(OverflowError):
        check64(-(2**63) - 1)


def test_fiber_class_validation():
    v = FiberClass([1, 2, 3])
    assert v.coords == (1, 2, 3) and len(v) == 3 and v[1] == 2 and list(v) == [1, 2, 3]
    assert str(v) == "(1, 2, 3)"
    with pytest.raises(TypeError):
        FiberClass((1, 2.0, 3))
    with pytest.raises(TypeError):
        FiberClass((True, 1, 1))
    with pytest.raises(ValueError):
        FiberClass((1, 2))
