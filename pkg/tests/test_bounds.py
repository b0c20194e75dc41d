import math

import pytest

from chainfib.bounds import (
    LOWER_CONSTANT,
    LOWER_CONSTANT_QUOTED,
    BoundsQuery,
    bounds_report,
    chi_abs,
    chi_ratio,
    corollary_applies,
    corollary_bounds,
    domain_points,
    lower_bound,
    normalized_entropy_cap,
    upper_bound,
)
from chainfib.errors import DomainError, NonHyperbolicSurface
from chainfib.families import SequenceIndex


def test_chi_abs():
    assert chi_abs(2, 6) == 8
    assert chi_abs(1, 6) == 6
    with pytest.raises(NonHyperbolicSurface):
        chi_abs(0, 2)
    with pytest.raises(NonHyperbolicSurface):
        BoundsQuery(0, 1, 0)


def test_lower_bound_examples():
    assert lower_bound((5, 2, 6)) == pytest.approx(2.3819884921560006e-4, rel=1e-14)
    assert lower_bound((0, 2, 0)) == pytest.approx(1.5879923281040005e-4, rel=1e-14)
    assert LOWER_CONSTANT == pytest.approx(1002.24 * math.pi, rel=1e-15)
    assert abs(LOWER_CONSTANT - LOWER_CONSTANT_QUOTED) / LOWER_CONSTANT_QUOTED < 1e-3


def test_upper_bound_examples():
    ub = upper_bound((5, 2, 6))
    assert ub.value == pytest.approx(12 * math.log(8) / 8, rel=1e-15)
    assert ub.value == pytest.approx(3.1191623125197534, rel=1e-14)
    assert ub.witness.coords == (2, 2, 1, 1, 1, 1)
    assert upper_bound((7, 2, 8)).value == pytest.approx(3.6841361487904734, rel=1e-14)
    with pytest.raises(DomainError) as info:
        upper_bound((3, 2, 6))
    assert info.value.failed == ["n <= 2k-4g+6"]


def test_corollaries():
    assert corollary_applies(5, 2, 6) == "k=n-1"
    assert corollary_bounds((5, 2, 6)) == upper_bound((5, 2, 6)).value
    assert corollary_bounds((7, 2, 8)) == pytest.approx(3.6841361487904734, rel=1e-14)
    assert corollary_bounds((2, 2, 6)) is None
    assert corollary_applies(2, 2, 6) is None


def test_entropy_cap_examples():
    cap = normalized_entropy_cap(SequenceIndex(1, 1, 1))
    assert cap.exact == pytest.approx(18.570933620060046, rel=1e-14)
    assert cap.cap == pytest.approx(24.953298500158027, rel=1e-14)
    cap = normalized_entropy_cap(SequenceIndex(1, 0, 4))
    assert cap.exact == pytest.approx(10 * math.log(5 + math.sqrt(24)), rel=1e-14)
    assert cap.exact == pytest.approx(22.92431669561178, rel=1e-14)
    assert cap.cap == pytest.approx(36.841361487904734, rel=1e-14)
    with pytest.raises(ValueError):
        normalized_entropy_cap(SequenceIndex(1, t=2))


def test_chi_ratio_tends_to_one():
    ratios = [chi_ratio(SequenceIndex(1, 0, i)) for i in range(0, 2000)]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert all(r >= 1 for r in ratios)
    assert ratios[-1] - 1 < 1e-3


def test_bounds_report_inside_and_outside():
    rep = bounds_report((5, 2, 6))
    assert rep.in_theorem_domain and rep.lower < rep.upper
    assert rep.normalized_entropy_cap == pytest.approx(24.953298500158027)
    rep = bounds_report((3, 2, 6))
    assert not rep.in_theorem_domain
    assert rep.upper is None and rep.witness is None
    assert rep.failed_conditions == ("n <= 2k-4g+6",)


def test_domain_points_examples():
    pts = domain_points(2, 7)
    assert (5, 6) in pts and (7, 8) in pts and (3, 6) not in pts
    assert (8, 9) in domain_points(3, 8)
    # not empty: k = 3, 4 already admit points at g = 2
    assert domain_points(2, 4) == [(3, 4), (4, 5), (4, 6)]
    with pytest.raises(ValueError):
        domain_points(1, 5)
