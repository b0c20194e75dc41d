"""Sequence families of fibered classes and the (k, g, n) target solver.

Magic manifold families approach the rays through (4, 4, 2) (three and four
boundary components) and (1, 1, 0) (planar fibers).  Chained-link sequences
are tuples

    (t+1) * pad, (t+1, t+1, t, t) * m, t * i

of length N = pad + 4m + i in M(N).  For t = 1 the tuple is a fiber of type
S_{m+1, N+pad}; in general the genus is 2mt - (m-1) and there are
(N - 4m)t + 4m + pad boundary components.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .chainlink import ChainClass
from .core import SurfaceType, check64, content, is_primitive
from .errors import ConsistencyError, DomainError, ExcludedResidue, NotPrimitive
from .magic import MagicClass, magic_classify


# -- magic manifold ----------------------------------------------------------


@dataclass(frozen=True)
class _Family:
    label: str
    coords: Callable[[int], tuple[int, int, int]]
    boundaries: Callable[[int], int]
    genus: Callable[[int], int]
    excluded_residue: int | None = None  # k mod 3 that is not allowed
    min_k: int = 1


class MagicFamily(enum.Enum):
    THREE_BDRY_1 = _Family("(4k+1, 4k+1, 2k+1)", lambda k: (4*k + 1, 4*k + 1, 2*k + 1), lambda k: 3, lambda k: 3*k)
    THREE_BDRY_2 = _Family("(4k, 4k, 2k+1)", lambda k: (4*k, 4*k, 2*k + 1), lambda k: 3, lambda k: 3*k - 1)
    THREE_BDRY_3 = _Family("(4k-1, 4k-1, 2k+1)", lambda k: (4*k - 1, 4*k - 1, 2*k + 1), lambda k: 3, lambda k: 3*k - 2, 1)
    THREE_BDRY_4 = _Family("(4k+1, 4k+1, 2k-1)", lambda k: (4*k + 1, 4*k + 1, 2*k - 1), lambda k: 3, lambda k: 3*k + 1, 2)
    FOUR_BDRY_1 = _Family("(4k+1, 4k+1, 2k)", lambda k: (4*k + 1, 4*k + 1, 2*k), lambda k: 4, lambda k: 3*k)
    FOUR_BDRY_2 = _Family("(4k-1, 4k-1, 2k)", lambda k: (4*k - 1, 4*k - 1, 2*k), lambda k: 4, lambda k: 3*k - 2)
    FOUR_BDRY_3 = _Family("(4k+3, 4k+3, 2k)", lambda k: (4*k + 3, 4*k + 3, 2*k), lambda k: 4, lambda k: 3*k + 2, 0)
    # at k = 1 the tuple (1, 1, 2) is outside the cone and the genus would be -1
    FOUR_BDRY_4 = _Family("(4k-3, 4k-3, 2k)", lambda k: (4*k - 3, 4*k - 3, 2*k), lambda k: 4, lambda k: 3*k - 4, 0, 2)
    PLANAR_A = _Family("(2k-1, 2k, 0)", lambda k: (2*k - 1, 2*k, 0), lambda k: 4*k + 1, lambda k: 0)
    PLANAR_B = _Family("(2k-1, 2k+1, 0)", lambda k: (2*k - 1, 2*k + 1, 0), lambda k: 4*k + 2, lambda k: 0)
    PLANAR_C = _Family("(2k, 2k+1, 0)", lambda k: (2*k, 2*k + 1, 0), lambda k: 4*k + 3, lambda k: 0)
    PLANAR_D = _Family("(2k-1, 2k+3, 0)", lambda k: (2*k - 1, 2*k + 3, 0), lambda k: 4*k + 4, lambda k: 0)

    def __repr__(self) -> str:
        return f"<MagicFamily.{self.name} {self.value.label}>"

    @property
    def label(self) -> str:
        return self.value.label

    @property
    def min_k(self) -> int:
        return self.value.min_k

    def admissible(self, k: int) -> bool:
        r = self.value.excluded_residue
        return k >= self.min_k and (r is None or k % 3 != r)

    def raw(self, k: int) -> tuple[int, int, int]:
        """The tuple at k, without any admissibility check."""
        return tuple(check64(c) for c in self.value.coords(k))

    def claim(self, k: int) -> SurfaceType:
        """Surface type the family is stated to produce at k."""
        return SurfaceType(self.value.genus(k), self.value.boundaries(k))

    @classmethod
    def lookup(cls, name: str) -> MagicFamily:
        key = name.strip().upper().replace("-", "_")
        aliases = {
            "THREEBDRY1": "THREE_BDRY_1", "THREEBDRY2": "THREE_BDRY_2",
            "THREEBDRY3": "THREE_BDRY_3", "THREEBDRY4": "THREE_BDRY_4",
            "FOURBDRY1": "FOUR_BDRY_1", "FOURBDRY2": "FOUR_BDRY_2",
            "FOURBDRY3": "FOUR_BDRY_3", "FOURBDRY4": "FOUR_BDRY_4",
            "PLANARA": "PLANAR_A", "PLANARB": "PLANAR_B",
            "PLANARC": "PLANAR_C", "PLANARD": "PLANAR_D",
        }
        key = aliases.get(key.replace("_", ""), key)
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown family {name!r}") from None


THREE_BOUNDARY = tuple(f for f in MagicFamily if f.name.startswith("THREE"))
FOUR_BOUNDARY = tuple(f for f in MagicFamily if f.name.startswith("FOUR"))
PLANAR = tuple(f for f in MagicFamily if f.name.startswith("PLANAR"))


def magic_family(family: MagicFamily | str, k: int) -> MagicClass:
    """Member k of a magic-manifold family.

    The residue rule and primitivity are checked independently of each other;
    if they disagree that is a ConsistencyError rather than a silent pick.
    """
    if isinstance(family, str):
        family = MagicFamily.lookup(family)
    if k < family.min_k:
        raise DomainError(f"{family.name} needs k >= {family.min_k}, got {k}", [f"k >= {family.min_k}"])
    raw = family.raw(k)
    primitive = is_primitive(raw)
    if not family.admissible(k):
        if primitive:
            raise ConsistencyError(f"{family.name} excludes k={k} but {raw} is primitive")
        raise ExcludedResidue(f"{family.name} is not defined for k={k} (k = {k % 3} mod 3)")
    if not primitive:
        raise ConsistencyError(f"{family.name} admits k={k} but {raw} has content {content(raw)}")
    return MagicClass(raw)


def check_magic_family(family: MagicFamily, k: int) -> bool:
    """True iff member k classifies as the family's stated surface type."""
    return magic_classify(magic_family(family, k)) == family.claim(k)


def genus_coverage(families, g_max: int, k_max: int | None = None) -> dict[int, tuple[MagicFamily, int]]:
    """First (family, k) realizing each genus in 0..g_max."""
    k_max = k_max if k_max is not None else g_max + 2
    found: dict[int, tuple[MagicFamily, int]] = {}
    for k in range(1, k_max + 1):
        for fam in families:
            if not fam.admissible(k):
                continue
            g = magic_classify(magic_family(fam, k)).genus
            if g <= g_max and g not in found:
                found[g] = (fam, k)
    return dict(sorted(found.items()))


def puncture_coverage(families, n_max: int) -> dict[int, tuple[MagicFamily, int]]:
    """First (family, k) realizing each boundary count in 0..n_max."""
    found: dict[int, tuple[MagicFamily, int]] = {}
    for k in range(1, n_max // 4 + 2):
        for fam in families:
            if not fam.admissible(k):
                continue
            n = magic_classify(magic_family(fam, k)).punctures
            if n <= n_max and n not in found:
                found[n] = (fam, k)
    return dict(sorted(found.items()))


# -- chained-link sequences --------------------------------------------------


@dataclass(frozen=True)
class SequenceIndex:
    """Index of the sequence tuple with ``pad`` leading t+1's, ``m`` blocks
    (t+1, t+1, t, t) and ``i`` trailing t's."""

    m: int
    pad: int = 0
    i: int = 0
    t: int = 1

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.pad < 0 or self.i < 0:
            raise ValueError("pad and i must be >= 0")
        if self.t < 1:
            raise ValueError(f"t must be >= 1, got {self.t}")
        if self.length < 4:
            raise ValueError("tuple length pad + 4m + i must be >= 4")

    @property
    def length(self) -> int:
        return self.pad + 4 * self.m + self.i

    def claimed_type(self) -> SurfaceType:
        n = self.length
        m, t = self.m, self.t
        return SurfaceType(2 * m * t - (m - 1), (n - 4 * m) * t + 4 * m + self.pad)


def chain_sequence_t(idx: SequenceIndex) -> ChainClass:
    t = idx.t
    coords = (t + 1,) * idx.pad + (t + 1, t + 1, t, t) * idx.m + (t,) * idx.i
    coords = tuple(check64(c) for c in coords)
    if not is_primitive(coords):
        raise NotPrimitive(f"sequence tuple for {idx} has content {content(coords)}")
    return ChainClass(coords)


def chain_sequence(idx: SequenceIndex) -> ChainClass:
    """The t = 1 tuple, of type S_{m+1, N+pad} in M(N)."""
    if idx.t != 1:
        raise ValueError("chain_sequence is the t = 1 case; use chain_sequence_t")
    return chain_sequence_t(idx)


# -- target solver -----------------------------------------------------------


def theorem_conditions(k: int, g: int, n: int) -> list[tuple[str, bool]]:
    return [
        ("g >= 2", g >= 2),
        ("4g-4 <= k+1", 4 * g - 4 <= k + 1),
        ("k+1 <= n", k + 1 <= n),
        ("n <= 2k-4g+6", n <= 2 * k - 4 * g + 6),
    ]


def in_theorem_domain(k: int, g: int, n: int) -> bool:
    return all(ok for _, ok in theorem_conditions(k, g, n))


def require_theorem_domain(k: int, g: int, n: int) -> None:
    failed = [text for text, ok in theorem_conditions(k, g, n) if not ok]
    if failed:
        raise DomainError(
            f"(k={k}, g={g}, n={n}) violates " + ", ".join(failed), failed
        )


def target_index(k: int, g: int, n: int) -> SequenceIndex:
    require_theorem_domain(k, g, n)
    return SequenceIndex(m=g - 1, pad=n - k - 1, i=2 * k - 4 * g + 6 - n)


def solve_target(k: int, g: int, n: int) -> ChainClass:
    """A class of length k+1 in M(k+1) whose fiber is S_{g,n}.

    The mapping torus then has first Betti number k+1, so the monodromy fixes
    a k-dimensional subspace of homology.
    """
    return chain_sequence(target_index(k, g, n))


def domain_nonempty(k: int, g: int) -> bool:
    """Whether some n satisfies the (k, g, n) domain; equivalent to k >= 4g-5."""
    return g >= 2 and 4 * g - 4 <= k + 1 <= 2 * k - 4 * g + 6
