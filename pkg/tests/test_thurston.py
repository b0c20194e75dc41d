import math
from fractions import Fraction

import numpy as np
import pytest

from chainfib.errors import DomainError, NonConvergence
from chainfib.thurston import (
    MONODROMY_WORD,
    IntersectionMatrix,
    Kind,
    Letter,
    StretchFactor,
    TwistWord,
    charpoly_top_root,
    classify_word,
    monodromy_stretch,
    mu,
    mu_batch,
    perron_root,
    represent,
)

SQRT15 = math.sqrt(15)


def test_mu_examples():
    for n in (1, 4, 6, 50):
        assert mu([[1] * n]) == pytest.approx(n, rel=1e-14)
    assert mu(IntersectionMatrix.ones_row(7)) == pytest.approx(7, rel=1e-14)
    assert mu([[1]]) == pytest.approx(1, rel=1e-14)
    assert mu([[1, 1], [1, 1]]) == pytest.approx(4, rel=1e-14)


def test_mu_larger_matrix_against_numpy():
    rng = np.random.default_rng(7)
    n = rng.integers(0, 4, size=(6, 9))
    n[:, 0] = 1
    m = IntersectionMatrix(n)
    expected = float(np.linalg.eigvalsh(m.gram()).max())
    assert mu(m) == pytest.approx(expected, rel=1e-10)


def test_intersection_matrix_validation():
    with pytest.raises(ValueError):
        IntersectionMatrix([[1, -1]])
    with pytest.raises(ValueError):
        IntersectionMatrix([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        IntersectionMatrix([])
    m = IntersectionMatrix([[2, 1], [0, 3]])
    assert m.shape == (2, 2)
    assert m.gram_exact() == [[5, 3], [3, 9]]
    with pytest.raises(ValueError):
        m.entries[0, 0] = 5


def test_charpoly_root_repeated_roots():
    # double and triple eigenvalues, where a naive cubic solve loses digits
    assert charpoly_top_root([[9, 0], [0, 9]]) == 9.0
    assert charpoly_top_root([[5, 0, 0], [0, 5, 0], [0, 0, 1]]) == 5.0
    assert charpoly_top_root([[5, 0, 0], [0, 5, 0], [0, 0, 5]]) == 5.0
    assert charpoly_top_root([[3, 1, 1], [1, 3, 1], [1, 1, 3]]) == pytest.approx(5.0, abs=1e-13)


def test_power_iteration_cap():
    g = np.array([[2.0, 1.0, 0.0], [1.0, 2.0, 1.0], [0.0, 1.0, 2.0]])
    assert perron_root(g) == pytest.approx(2 + math.sqrt(2), rel=1e-13)
    with pytest.raises(NonConvergence):
        perron_root(g, max_iter=1)


def test_words():
    w = TwistWord.parse("A B^-1")
    assert w == MONODROMY_WORD == TwistWord.parse("Ab") == TwistWord.parse("A b")
    assert str(w) == "A B^-1"
    assert w.inverse() == TwistWord((Letter.B, Letter.A_INV))
    assert len(w + w) == 4
    assert str(TwistWord()) == "1"
    with pytest.raises(ValueError):
        TwistWord.parse("AC")


def test_represent_examples():
    assert represent("A", 4).rows() == [[1.0, 2.0], [0.0, 1.0]]
    assert represent("", 3).rows() == [[1.0, 0.0], [0.0, 1.0]]
    for n in range(4, 40):
        rep = represent(MONODROMY_WORD, n)
        assert rep.exact_trace() == n + 2
        assert rep.exact_det() == 1


def test_represent_irrational_mu():
    rep = represent("A B^-1 A B", math.pi)
    assert rep.conjugate is None
    assert rep.det() == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        rep.exact_trace()
    with pytest.raises(ValueError):
        represent("A", 0)


def test_represent_fraction_mu():
    rep = represent("A b", Fraction(1, 2))
    assert rep.exact_trace() == Fraction(5, 2)
    assert rep.exact_det() == 1


def test_classify_examples():
    wt = classify_word(MONODROMY_WORD, 6)
    assert wt.kind is Kind.HYPERBOLIC and wt.is_pseudo_anosov
    assert wt.stretch.value == pytest.approx(4 + SQRT15, abs=1e-12)
    assert wt.stretch.exact_form == (8, 60)
    assert classify_word("A", 3).kind is Kind.PARABOLIC
    assert classify_word("A", math.e).kind is Kind.PARABOLIC
    golden = classify_word(MONODROMY_WORD, 1)
    assert golden.stretch.value == pytest.approx((3 + math.sqrt(5)) / 2, abs=1e-14)
    # mu = 1: A B^-1 has trace 3, A B has trace 1
    assert classify_word("A B", 1).kind is Kind.ELLIPTIC


def test_monodromy_stretch_examples():
    s4 = monodromy_stretch(4)
    assert s4.value == pytest.approx(3 + 2 * math.sqrt(2), abs=1e-14)
    assert s4.exact_form == (6, 32)
    s6 = monodromy_stretch(6)
    assert s6.value == pytest.approx(7.872983346207417, abs=1e-14)
    assert s6.exact_form == (8, 60)
    assert s6.entropy == pytest.approx(math.log(4 + SQRT15), abs=1e-14)
    assert s6.reciprocal == pytest.approx(4 - SQRT15, abs=1e-14)
    with pytest.raises(DomainError):
        monodromy_stretch(3)


def test_stretch_from_trace():
    assert StretchFactor.from_trace(Fraction(-8)).exact_form == (8, 60)
    assert StretchFactor.from_trace(Fraction(5, 2)).value == pytest.approx(2.0)
    assert StretchFactor.from_trace(3.0).exact_form is None


def test_mu_batch_matches_scalar_bitwise():
    rng = np.random.default_rng(11)
    stack = rng.integers(0, 11, size=(500, 3, 4))
    stack[:, :, 0] |= 1
    stack[:, 0, :] |= 1
    assert np.array_equal(mu_batch(stack), [mu(x) for x in stack])
    assert mu_batch(np.ones((3, 1, 6), dtype=int)).tolist() == [6.0, 6.0, 6.0]
    with pytest.raises(ValueError):
        mu_batch(np.ones((2, 2)))
    with pytest.raises(ValueError):
        mu_batch(-np.ones((1, 2, 2)))
