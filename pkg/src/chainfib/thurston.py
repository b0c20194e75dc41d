"""Thurston's construction for a pair of filling multicurves A and B.

With ``N[i][j]`` the geometric intersection number of the i-th curve of A
with the j-th curve of B and ``mu`` the Perron-Frobenius eigenvalue of
``N N^T``, the multitwists map to

    T_A -> [[1, sqrt(mu)], [0, 1]],    T_B -> [[1, 0], [-sqrt(mu), 1]].

A word in T_A, T_B is pseudo-Anosov iff its image is hyperbolic (|trace| > 2),
and then its stretch factor is the larger eigenvalue of the image.

Conjugating by ``diag(mu**(1/4), mu**(-1/4))`` turns the generators into
``[[1, 1], [0, 1]]`` and ``[[1, 0], [-mu, 1]]``, whose entries lie in Z[mu].
When mu is rational we carry that conjugate exactly, which makes the trace
and determinant exact no matter how long the word is.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .core import check64
from .errors import ConsistencyError, DomainError, NonConvergence

Number = Union[int, float, Fraction]

POWER_TOL = 1e-14
POWER_MAX_ITER = 10**6
CROSSCHECK_TOL = 1e-10
TRACE_TOL = 1e-12
EPS = float(np.finfo(np.float64).eps)
SMALL_DIM = 4


# -- words -------------------------------------------------------------------


class Letter(enum.Enum):
    A = "A"
    A_INV = "a"
    B = "B"
    B_INV = "b"

    @property
    def inverse(self) -> Letter:
        return _INVERSE[self]

    def __str__(self) -> str:
        return {"A": "A", "a": "A^-1", "B": "B", "b": "B^-1"}[self.value]


_INVERSE = {
    Letter.A: Letter.A_INV,
    Letter.A_INV: Letter.A,
    Letter.B: Letter.B_INV,
    Letter.B_INV: Letter.B,
}

_TOKENS = {
    "A": Letter.A, "a": Letter.A_INV, "A^-1": Letter.A_INV, "A-": Letter.A_INV,
    "B": Letter.B, "b": Letter.B_INV, "B^-1": Letter.B_INV, "B-": Letter.B_INV,
}


@dataclass(frozen=True)
class TwistWord:
    """A word in T_A, T_B and their inverses, read left to right."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(Letter(x) for x in self.letters))

    @classmethod
    def parse(cls, text: str) -> TwistWord:
        """Parse ``"A B^-1"``, ``"A b"`` or the compact ``"Ab"``.

        Lowercase letters and a ``^-1`` or ``-`` suffix both mean the inverse.
        """
        letters: list[Letter] = []
        for token in text.replace(",", " ").split():
            if token in _TOKENS:
                letters.append(_TOKENS[token])
                continue
            for ch in token:
                if ch not in "AaBb":
                    raise ValueError(f"cannot parse twist word {text!r}")
                letters.append(Letter(ch))
        return cls(tuple(letters))

    def inverse(self) -> TwistWord:
        return TwistWord(tuple(x.inverse for x in reversed(self.letters)))

    def __add__(self, other: TwistWord) -> TwistWord:
        return TwistWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters)) or "1"


MONODROMY_WORD = TwistWord((Letter.A, Letter.B_INV))


# -- intersection matrices and mu --------------------------------------------


class IntersectionMatrix:
    """Geometric intersection numbers i(alpha_i, beta_j) of two multicurves."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence[int]] | np.ndarray) -> None:
        arr = np.array(rows, dtype=np.int64)
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("intersection matrix must be a non-empty 2-d array")
        if (arr < 0).any():
            raise ValueError("intersection numbers are non-negative")
        if not arr.any(axis=1).all() or not arr.any(axis=0).all():
            raise ValueError("every curve must meet the other multicurve (no zero row or column)")
        arr.setflags(write=False)
        self.entries = arr

    @classmethod
    def ones_row(cls, n: int) -> IntersectionMatrix:
        """One core curve meeting each of n curves once."""
        if n < 1:
            raise ValueError("need at least one curve")
        self = cls.__new__(cls)
        arr = np.ones((1, n), dtype=np.int64)
        arr.setflags(write=False)
        self.entries = arr
        return self

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def gram(self) -> np.ndarray:
        """N N^T as float64 (exact while entries stay below 2**26)."""
        f = self.entries.astype(np.float64)
        return f @ f.T

    def gram_exact(self) -> list[list[int]]:
        e = self.entries
        peak = int(e.max())
        if peak * peak * e.shape[1] < 2**62:
            return (e @ e.T).tolist()
        obj = e.astype(object)
        return (obj @ obj.T).tolist()

    def __repr__(self) -> str:
        return f"IntersectionMatrix({self.entries.tolist()})"


def perron_root(
    matrix: np.ndarray, tol: float = POWER_TOL, max_iter: int = POWER_MAX_ITER
) -> float:
    """Dominant eigenvalue of a symmetric non-negative matrix by power iteration.

    Starts from the all-ones vector and stops once the residual
    ``||G x - rho x||`` drops below ``tol * rho`` (``rho`` the Rayleigh
    quotient), or below a rounding floor proportional to the dimension.
    """
    g = np.asarray(matrix, dtype=np.float64)
    n = g.shape[0]
    threshold = max(tol, 8 * n * EPS)
    if n <= SMALL_DIM:
        return _perron_small(g.tolist(), threshold, max_iter)
    x = np.full(n, 1.0 / math.sqrt(n))
    for _ in range(max_iter):
        y = g @ x
        rho = float(x @ y)
        if rho <= 0.0:
            raise ValueError("matrix has no positive dominant eigenvalue")
        if float(np.linalg.norm(y - rho * x)) <= threshold * rho:
            return rho
        x = y / np.linalg.norm(y)
    raise NonConvergence(f"power iteration did not converge in {max_iter} steps")


def _perron_small(g: list[list[float]], threshold: float, max_iter: int) -> float:
    # same iteration as perron_root; plain floats beat numpy call overhead here
    n = len(g)
    x = [1.0 / math.sqrt(n)] * n
    for _ in range(max_iter):
        y = [sum(gij * xj for gij, xj in zip(row, x)) for row in g]
        rho = sum(xi * yi for xi, yi in zip(x, y))
        if rho <= 0.0:
            raise ValueError("matrix has no positive dominant eigenvalue")
        if math.sqrt(sum((yi - rho * xi) ** 2 for xi, yi in zip(x, y))) <= threshold * rho:
            return rho
        norm = math.sqrt(sum(yi * yi for yi in y))
        x = [yi / norm for yi in y]
    raise NonConvergence(f"power iteration did not converge in {max_iter} steps")


def mu_batch(
    matrices: np.ndarray, tol: float = POWER_TOL, max_iter: int = POWER_MAX_ITER
) -> np.ndarray:
    """mu for a stack of intersection matrices of shape (count, rows, cols).

    Runs the iteration of :func:`perron_root` on every Gram matrix at once,
    entry by entry; each matrix stops at the first step its residual test
    passes, exactly as it would alone.  Matrices are not validated beyond
    non-negativity.
    """
    n = np.asarray(matrices)
    if n.ndim != 3 or n.shape[0] == 0:
        raise ValueError("expected a non-empty stack of 2-d matrices")
    if (n < 0).any():
        raise ValueError("intersection numbers are non-negative")
    count, r, _ = n.shape
    f = n.astype(np.float64)
    g = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            g[i][j] = g[j][i] = (f[:, i, :] * f[:, j, :]).sum(axis=1)
    threshold = max(tol, 8 * r * EPS)
    out = np.empty(count)
    idx = np.arange(count)
    pending = np.ones(count, dtype=bool)
    x = [np.full(count, 1.0 / math.sqrt(r)) for _ in range(r)]
    for _ in range(max_iter):
        y = [sum(g[i][j] * x[j] for j in range(r)) for i in range(r)]
        rho = sum(x[i] * y[i] for i in range(r))
        if (rho <= 0.0).any():
            raise ValueError("matrix has no positive dominant eigenvalue")
        res = np.sqrt(sum((y[i] - rho * x[i]) ** 2 for i in range(r)))
        done = pending & (res <= threshold * rho)
        if done.any():
            out[idx[done]] = rho[done]
            pending &= ~done
            left = int(pending.sum())
            if left == 0:
                return out
            # shrink the working set only once enough rows have finished;
            # finished rows riding along do not affect the others
            if left <= 0.75 * idx.size:
                keep = pending
                idx, pending = idx[keep], pending[keep]
                old, g = g, [[None] * r for _ in range(r)]
                for i in range(r):
                    for j in range(i, r):
                        g[i][j] = g[j][i] = old[i][j][keep]
                y = [yi[keep] for yi in y]
        norm = np.sqrt(sum(yi * yi for yi in y))
        x = [yi / norm for yi in y]
    raise NonConvergence(f"power iteration did not converge in {max_iter} steps")


def _charpoly(g: Sequence[Sequence[int]]) -> list[int]:
    n = len(g)
    if n == 1:
        return [1, -g[0][0]]
    if n == 2:
        return [1, -(g[0][0] + g[1][1]), g[0][0] * g[1][1] - g[0][1] * g[1][0]]
    c2 = g[0][0] + g[1][1] + g[2][2]
    c1 = (
        g[0][0] * g[1][1] - g[0][1] * g[1][0]
        + g[0][0] * g[2][2] - g[0][2] * g[2][0]
        + g[1][1] * g[2][2] - g[1][2] * g[2][1]
    )
    c0 = (
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    )
    return [1, -c2, c1, -c0]


def _divmod_poly(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    quotient = []
    while len(a) >= len(b):
        c = a[0] / b[0]
        quotient.append(c)
        for j in range(len(b)):
            a[j] -= c * b[j]
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return quotient, a


def _squarefree(coeffs: list[int]) -> list[Fraction]:
    p = [Fraction(c) for c in coeffs]
    deg = len(p) - 1
    a, b = p, [c * (deg - i) for i, c in enumerate(p[:-1])]
    while b:
        a, b = b, _divmod_poly(a, b)[1]
    return _divmod_poly(p, a)[0]


def _cubic_discriminant(b: int, c: int, d: int) -> int:
    """Discriminant of t^3 + b t^2 + c t + d; zero iff a root repeats."""
    return 18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d


def charpoly_top_root(g: Sequence[Sequence[int]]) -> float:
    """Largest root of det(t I - G) for a symmetric integer G of size <= 3.

    Repeated roots are divided out exactly first, so the closed forms below
    only ever see simple roots: linear, quadratic formula, or the
    trigonometric solution of the cubic polished by Newton's method.
    """
    if len(g) > 3:
        raise ValueError("closed form only for sizes up to 3")
    p = _charpoly(g)
    q = p if len(p) < 4 or _cubic_discriminant(*p[1:]) != 0 else _squarefree(p)
    q = [Fraction(x) / q[0] for x in q]
    if len(q) == 2:
        return float(-q[1])
    if len(q) == 3:
        return (-float(q[1]) + math.sqrt(float(q[1] * q[1] - 4 * q[2]))) / 2
    # monic cubic t^3 + b t^2 + c t + d; t = y - b/3 gives y^3 + a y + e
    b, c, d = float(q[1]), float(q[2]), float(q[3])
    a = c - b * b / 3
    e = 2 * b**3 / 27 - b * c / 3 + d
    m = 2 * math.sqrt(-a / 3)
    arg = 3 * e / (a * m)
    t = m * math.cos(math.acos(min(1.0, max(-1.0, arg))) / 3) - b / 3
    for _ in range(3):
        slope = (3 * t + 2 * b) * t + c
        if slope == 0:
            break
        t -= (((t + b) * t + c) * t + d) / slope
    return t


def mu(matrix: IntersectionMatrix | Sequence[Sequence[int]]) -> float:
    """Perron-Frobenius eigenvalue of N N^T.

    For sizes up to 3 the power-iteration value is checked against the
    characteristic polynomial and a disagreement raises ConsistencyError.
    """
    if not isinstance(matrix, IntersectionMatrix):
        matrix = IntersectionMatrix(matrix)
    value = perron_root(matrix.gram())
    if matrix.shape[0] <= 3:
        other = charpoly_top_root(matrix.gram_exact())
        if abs(value - other) > CROSSCHECK_TOL * max(1.0, abs(other)):
            raise ConsistencyError(
                f"power iteration gave {value!r}, characteristic polynomial {other!r}"
            )
    return value


# -- representation ----------------------------------------------------------


def _exact_mu(value: Number) -> int | Fraction | None:
    """mu as an int or Fraction when it is exactly rational, else None."""
    if isinstance(value, bool):
        raise TypeError("mu must be a number")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return None


@dataclass(frozen=True)
class RepMatrix:
    """2x2 real matrix ``[[a, b], [c, d]]`` in the image of the representation.

    ``conjugate`` holds the exact matrix ``M`` (int entries for integer mu,
    Fractions otherwise) such that the real matrix is
    ``[[M00, M01 sqrt(mu)], [M10 / sqrt(mu), M11]]``; it is present only when
    mu is rational.
    """

    a: float
    b: float
    c: float
    d: float
    conjugate: tuple | None = None

    def det(self) -> float:
        if self.conjugate is not None:
            return float(self.exact_det())
        return self.a * self.d - self.b * self.c

    def exact_det(self) -> Fraction:
        m00, m01, m10, m11 = self._require_exact()
        return Fraction(m00 * m11 - m01 * m10)

    def trace(self) -> float:
        if self.conjugate is not None:
            return float(self.exact_trace())
        return self.a + self.d

    def exact_trace(self) -> Fraction:
        m00, _, _, m11 = self._require_exact()
        return Fraction(m00 + m11)

    def spectral_radius(self) -> float:
        """Largest eigenvalue modulus, using det = 1."""
        t = abs(self.trace())
        if t <= 2:
            return 1.0
        return (t + math.sqrt(t * t - 4)) / 2

    def rows(self) -> list[list[float]]:
        return [[self.a, self.b], [self.c, self.d]]

    def _require_exact(self):
        if self.conjugate is None:
            raise ValueError("no exact form: mu was not rational")
        return self.conjugate


def _generator_exact(letter: Letter, mu: int | Fraction):
    return {
        Letter.A: (1, 1, 0, 1),
        Letter.A_INV: (1, -1, 0, 1),
        Letter.B: (1, 0, -mu, 1),
        Letter.B_INV: (1, 0, mu, 1),
    }[letter]


def _generator_float(letter: Letter, s: float):
    return {
        Letter.A: (1.0, s, 0.0, 1.0),
        Letter.A_INV: (1.0, -s, 0.0, 1.0),
        Letter.B: (1.0, 0.0, -s, 1.0),
        Letter.B_INV: (1.0, 0.0, s, 1.0),
    }[letter]


def _mul(p, q):
    return (
        p[0] * q[0] + p[1] * q[2],
        p[0] * q[1] + p[1] * q[3],
        p[2] * q[0] + p[3] * q[2],
        p[2] * q[1] + p[3] * q[3],
    )


def represent(word: TwistWord | Iterable[Letter] | str, mu: Number) -> RepMatrix:
    """Image of ``word`` under the representation determined by ``mu``."""
    word = _as_word(word)
    if mu <= 0:
        raise ValueError("mu must be positive")
    exact = _exact_mu(mu)
    s = math.sqrt(mu)
    if exact is None:
        m = (1.0, 0.0, 0.0, 1.0)
        for letter in word.letters:
            m = _mul(m, _generator_float(letter, s))
        return RepMatrix(*m)
    e = (1, 0, 0, 1)
    for letter in word.letters:
        e = _mul(e, _generator_exact(letter, exact))
    return RepMatrix(float(e[0]), float(e[1]) * s, float(e[2]) / s, float(e[3]), e)


def _as_word(word) -> TwistWord:
    if isinstance(word, TwistWord):
        return word
    if isinstance(word, str):
        return TwistWord.parse(word)
    return TwistWord(tuple(word))


# -- classification ----------------------------------------------------------


@dataclass(frozen=True)
class StretchFactor:
    """Stretch factor (|tr| + sqrt(tr^2 - 4)) / 2 of a hyperbolic image.

    ``exact_form`` is ``(p, q)`` meaning ``(p + sqrt(q)) / 2`` and is set
    whenever the trace is an exact integer.
    """

    value: float
    trace_abs: Fraction | None = None
    exact_form: tuple[int, int] | None = None

    @classmethod
    def from_trace(cls, trace: Fraction | float) -> StretchFactor:
        if isinstance(trace, Fraction):
            t = abs(trace)
            if t.denominator == 1:
                p = int(t)
                q = p * p - 4
                return cls((p + math.sqrt(q)) / 2, t, (p, q))
            tf = float(t)
            return cls((tf + math.sqrt(float(t * t - 4))) / 2, t, None)
        tf = abs(float(trace))
        return cls((tf + math.sqrt(tf * tf - 4)) / 2)

    @property
    def reciprocal(self) -> float:
        return 1.0 / self.value

    @property
    def entropy(self) -> float:
        return math.log(self.value)


class Kind(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class WordType:
    kind: Kind
    trace: float
    stretch: StretchFactor | None = None

    @property
    def is_pseudo_anosov(self) -> bool:
        return self.kind is Kind.HYPERBOLIC


def classify_word(word: TwistWord | Iterable[Letter] | str, mu: Number) -> WordType:
    rep = represent(word, mu)
    if rep.conjugate is not None:
        t = rep.exact_trace()
        if abs(t) > 2:
            return WordType(Kind.HYPERBOLIC, float(t), StretchFactor.from_trace(t))
        return WordType(Kind.PARABOLIC if abs(t) == 2 else Kind.ELLIPTIC, float(t))
    tf = rep.trace()
    if abs(abs(tf) - 2) <= TRACE_TOL:
        return WordType(Kind.PARABOLIC, tf)
    if abs(tf) < 2:
        return WordType(Kind.ELLIPTIC, tf)
    return WordType(Kind.HYPERBOLIC, tf, StretchFactor.from_trace(tf))


def monodromy_stretch(n: int) -> StretchFactor:
    """Stretch factor (n + 2 + sqrt(n^2 + 4n)) / 2 of the monodromy of the
    fiber (1, ..., 1) of M(n), which is T_A T_B^{-1} with mu = n."""
    if n < 4:
        raise DomainError(f"M(n) is hyperbolic only for n >= 4, got {n}", ["n >= 4"])
    p = check64(n + 2)
    q = check64(n * n + 4 * n)
    return StretchFactor((p + math.sqrt(q)) / 2, Fraction(p), (p, q))
