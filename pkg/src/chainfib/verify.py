"""Self-check sweeps behind ``chainfib verify``.

Each check exercises the library over a finite range and compares it with a
second route (closed-form claims, a naive loop, or the characteristic
polynomial).  Checks are independent, so they can run in any order.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import bounds, chainlink, core, families, magic, thurston
from .errors import ModelError

SEED = 20240601


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str
    seconds: float


CHECKS: list[tuple[str, Callable[[], tuple[int, str | None]]]] = []


def check(name: str):
    def register(fn):
        CHECKS.append((name, fn))
        return fn
    return register


def _naive_gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a - b * (a // b)
    return a


@check("core.gcd0")
def _gcd0() -> tuple[int, str | None]:
    n = 0
    for a in range(-30, 31):
        for b in range(-30, 31):
            n += 1
            if core.gcd0(a, b) != _naive_gcd(a, b) or core.gcd0(a, b) != core.gcd0(b, a):
                return n, f"gcd0({a}, {b})"
    return n, None


@check("magic.parity")
def _magic_parity() -> tuple[int, str | None]:
    # every primitive class in the open cone with |coords| <= 200
    x, y, z = np.meshgrid(
        np.arange(1, 201), np.arange(1, 201), np.arange(-200, 200), indexing="ij", sparse=True
    )
    mask = (z < np.minimum(x, y)) & (np.gcd(np.gcd(x, y), z) == 1)
    b = np.gcd(x, y + z) + np.gcd(y, z + x) + np.gcd(z, x + y)
    twice_genus = (x + y - z) + 2 - b
    bad = mask & ((twice_genus % 2 != 0) | (twice_genus < 0))
    if bad.any():
        i = tuple(int(v[0]) for v in np.nonzero(bad))
        return int(mask.sum()), f"index {i}"
    # and through the library itself on a smaller box
    n = int(mask.sum())
    for v in itertools.product(range(1, 25), range(1, 25), range(-24, 24)):
        if magic.magic_in_cone(v) and core.is_primitive(v):
            n += 1
            s = magic.magic_classify(v)
            if s.euler_characteristic() != -magic.magic_norm(v):
                return n, str(v)
    return n, None


@check("magic.families")
def _magic_families() -> tuple[int, str | None]:
    n = 0
    for fam in families.MagicFamily:
        for k in range(1, 201):
            n += 1
            if k < fam.min_k:
                continue
            if fam.admissible(k):
                if not families.check_magic_family(fam, k):
                    return n, f"{fam.name} k={k}"
            elif core.is_primitive(fam.raw(k)) or core.content(fam.raw(k)) != 3:
                return n, f"{fam.name} k={k} excluded but content {core.content(fam.raw(k))}"
    return n, None


@check("magic.coverage")
def _magic_coverage() -> tuple[int, str | None]:
    g3 = families.genus_coverage(families.THREE_BOUNDARY, 60)
    missing = [g for g in range(2, 61) if g not in g3]
    if missing:
        return len(g3), f"3 boundaries: genus {missing} not realized"
    g4 = families.genus_coverage(families.FOUR_BOUNDARY, 60)
    missing = [g for g in range(1, 61) if g not in g4]
    if missing:
        return len(g4), f"4 boundaries: genus {missing} not realized"
    planar = families.puncture_coverage(families.PLANAR, 200)
    missing = [n for n in range(5, 201) if n not in planar]
    if missing:
        return len(planar), f"planar: n {missing} not realized"
    return len(g3) + len(g4) + len(planar), None


@check("chain.exhaustive")
def _chain_exhaustive() -> tuple[int, str | None]:
    n = 0
    for length in range(4, 9):
        for v in itertools.product(range(1, 5), repeat=length):
            if not core.is_primitive(v):
                continue
            n += 1
            try:
                s = chainlink.chain_classify(v)
            except ModelError as exc:
                return n, f"{v}: {exc}"
            if s.euler_characteristic() != -sum(v):
                return n, str(v)
    return n, None


@check("chain.ones")
def _chain_ones() -> tuple[int, str | None]:
    for length in range(4, 513):
        if chainlink.chain_classify((1,) * length) != core.SurfaceType(1, length):
            return length - 3, f"N={length}"
    return 509, None


@check("chain.symmetry")
def _chain_symmetry() -> tuple[int, str | None]:
    rng = random.Random(SEED)
    n = 0
    while n < 100_000:
        v = [rng.randint(1, 12) for _ in range(rng.randint(4, 12))]
        if not core.is_primitive(v):
            continue
        n += 1
        r = rng.randrange(len(v))
        b = chainlink.chain_boundaries(v)
        if b != chainlink.chain_boundaries(v[r:] + v[:r]) or b != chainlink.chain_boundaries(v[::-1]):
            return n, str(v)
    return n, None


@check("sequence.t1")
def _sequence_t1() -> tuple[int, str | None]:
    n = 0
    for m, pad, i in itertools.product(range(1, 11), range(0, 11), range(0, 51)):
        idx = families.SequenceIndex(m, pad, i)
        n += 1
        if chainlink.chain_classify(families.chain_sequence(idx)) != core.SurfaceType(m + 1, idx.length + pad):
            return n, str(idx)
    return n, None


@check("sequence.general_t")
def _sequence_t() -> tuple[int, str | None]:
    n = 0
    for m, pad, i, t in itertools.product(range(1, 6), range(0, 6), range(0, 21), range(1, 6)):
        idx = families.SequenceIndex(m, pad, i, t)
        n += 1
        if chainlink.chain_classify(families.chain_sequence_t(idx)) != idx.claimed_type():
            return n, str(idx)
    return n, None


def theorem_domain(g_max: int = 6, n_max: int = 60):
    """All (k, g, n) with g <= g_max, n <= n_max in the upper-bound domain."""
    for g in range(2, g_max + 1):
        for n in range(0, n_max + 1):
            for k in range(0, n):
                if families.in_theorem_domain(k, g, n):
                    yield k, g, n


@check("target.witness")
def _target() -> tuple[int, str | None]:
    n_cases = 0
    for k, g, n in theorem_domain():
        n_cases += 1
        w = families.solve_target(k, g, n)
        if (
            len(w) != k + 1
            or not core.is_primitive(w)
            or not chainlink.chain_in_cone(w)
            or chainlink.chain_classify(w) != core.SurfaceType(g, n)
        ):
            return n_cases, f"(k={k}, g={g}, n={n})"
        ub = bounds.upper_bound((k, g, n)).value
        expected = 2 * (k + 1) * math.log(k + 3) / (2 * g + n - 2)
        if abs(ub - expected) > 1e-12 or not bounds.lower_bound((k, g, n)) < ub:
            return n_cases, f"bounds at (k={k}, g={g}, n={n})"
        cor = bounds.corollary_bounds((k, g, n))
        if cor is None or cor < ub - 1e-12 or (k == n - 1 and cor != ub):
            return n_cases, f"corollary at (k={k}, g={g}, n={n})"
    return n_cases, None


@check("bounds.domain_nonempty")
def _domain_nonempty() -> tuple[int, str | None]:
    n = 0
    for g in range(2, 8):
        for k in range(0, 60):
            n += 1
            brute = any(families.in_theorem_domain(k, g, nn) for nn in range(0, 2 * k + 8))
            if brute != families.domain_nonempty(k, g) or brute != (k >= 4 * g - 5):
                return n, f"(k={k}, g={g})"
    return n, None


@check("bounds.entropy_cap")
def _entropy_cap() -> tuple[int, str | None]:
    n = 0
    for m, pad in itertools.product(range(1, 11), range(0, 11)):
        prev = None
        for i in range(0, 51):
            idx = families.SequenceIndex(m, pad, i)
            n += 1
            cap = bounds.normalized_entropy_cap(idx)
            ratio = bounds.chi_ratio(idx)
            if not cap.exact < cap.cap or not 1 <= ratio < 2 or (prev is not None and not ratio < prev):
                return n, str(idx)
            prev = ratio
    for size in range(4, 10_001):
        n += 1
        if not thurston.monodromy_stretch(size).value < size + 2:
            return n, f"N={size}"
    return n, None


@check("thurston.monodromy")
def _monodromy() -> tuple[int, str | None]:
    prev = 0.0
    for n in range(4, 10_001):
        sf = thurston.monodromy_stretch(n)
        w = thurston.classify_word(thurston.MONODROMY_WORD, thurston.mu(thurston.IntersectionMatrix.ones_row(n)))
        if (
            w.stretch is None
            or abs(w.stretch.value - sf.value) > 1e-12
            or w.stretch.trace_abs != n + 2
            or not n < sf.value < n + 2
            or not sf.value > prev
        ):
            return n - 3, f"n={n}"
        prev = sf.value
    return 9997, None


@check("thurston.representation")
def _representation() -> tuple[int, str | None]:
    rng = random.Random(SEED)
    letters = list(thurston.Letter)
    for n in range(1, 2001):
        word = thurston.TwistWord(tuple(rng.choice(letters) for _ in range(rng.randint(0, 20))))
        mu = rng.randint(1, 50)
        if abs(thurston.represent(word, mu).det() - 1) > 1e-12:
            return n, f"det {word} mu={mu}"
        e = thurston.represent(word + word.inverse(), mu)
        if max(abs(a - b) for a, b in zip((e.a, e.b, e.c, e.d), (1, 0, 0, 1))) > 1e-10:
            return n, f"w w^-1 {word} mu={mu}"
    return 2000, None


def charpoly_coefficients(g: list[list[int]]) -> list[int]:
    """Integer coefficients of det(t I - G), highest degree first (size 2 or 3)."""
    if len(g) == 2:
        return [1, -(g[0][0] + g[1][1]), g[0][0] * g[1][1] - g[0][1] * g[1][0]]
    minors = sum(g[a][a] * g[b][b] - g[a][b] * g[b][a] for a, b in ((0, 1), (0, 2), (1, 2)))
    det = (
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    )
    return [1, -(g[0][0] + g[1][1] + g[2][2]), minors, -det]


def _polydiv(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = []
    while len(a) >= len(b):
        c = a[0] / b[0]
        q.append(c)
        for j in range(len(b)):
            a[j] -= c * b[j]
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return q, a


def squarefree(coeffs: list[int]) -> list[Fraction]:
    """p / gcd(p, p') with exact rational arithmetic; the result has simple roots."""
    p = [Fraction(c) for c in coeffs]
    deg = len(p) - 1
    dp = [c * (deg - i) for i, c in enumerate(p[:-1])]
    a, b = p, dp
    while b:
        _, r = _polydiv(a, b)
        a, b = b, r
    q, _ = _polydiv(p, a)
    return q


def charpoly_top_root(g: list[list[int]]) -> float:
    """Largest root of the characteristic polynomial of a 2x2 or 3x3 integer G.

    Roots of the square-free part come from np.roots and are then polished
    by Newton's method on that (simple-rooted) polynomial.
    """
    p = charpoly_coefficients(g)
    if len(p) == 4:
        b, c, d = p[1:]
        disc = 18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d
    else:
        disc = p[1] ** 2 - 4 * p[2]
    q = [float(c) for c in (p if disc != 0 else squarefree(p))]
    if len(q) == 2:
        return -q[1] / q[0]
    r = float(max(np.roots(q).real))
    dq = [c * (len(q) - 1 - i) for i, c in enumerate(q[:-1])]
    for _ in range(4):
        value = slope = 0.0
        for c in q:
            value = value * r + c
        for c in dq:
            slope = slope * r + c
        if slope == 0:
            break
        r -= value / slope
    return r


@check("thurston.mu_charpoly")
def _mu_charpoly() -> tuple[int, str | None]:
    n = 0
    candidates = itertools.chain(
        (np.array(e).reshape(2, 2) for e in itertools.product(range(11), repeat=4)),
        (np.array(e).reshape(3, 3) for e in itertools.product(range(3), repeat=9)),
    )
    rng = np.random.default_rng(SEED)
    sampled = (rng.integers(0, 11, size=(3, 3)) for _ in range(10_000))
    for arr in itertools.chain(candidates, sampled):
        if not arr.any(axis=0).all() or not arr.any(axis=1).all():
            continue
        n += 1
        g = (arr @ arr.T).tolist()
        value = thurston.mu(arr)
        other = charpoly_top_root(g)
        if abs(value - other) > 1e-10 * max(1.0, other):
            return n, f"{arr.tolist()}: {value!r} vs {other!r}"
    return n, None


def run_checks(names: list[str] | None = None) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        if names and name not in names:
            continue
        start = time.perf_counter()
        try:
            cases, failure = fn()
        except ModelError as exc:
            cases, failure = 0, f"{type(exc).__name__}: {exc}"
        results.append(
            CheckResult(name, failure is None, cases, failure or "ok", time.perf_counter() - start)
        )
    return results
