"""Fibered-class arithmetic on the magic manifold and chained-link complements.

Thurston norm and boundary counts of fibered classes, surface types of
fibers, stretch factors from Thurston's construction, sequence families,
and bounds on the least entropy L(k, g, n).
"""

from .bounds import (
    BoundsQuery,
    BoundsReport,
    EntropyCap,
    UpperBound,
    bounds_report,
    chi_abs,
    corollary_applies,
    corollary_bounds,
    domain_points,
    lower_bound,
    normalized_entropy_cap,
    upper_bound,
)
from .chainlink import (
    ChainClass,
    Region,
    as_chain,
    boundary_terms,
    chain_boundaries,
    chain_classify,
    chain_in_cone,
    chain_norm,
    chain_region,
)
from .core import FiberClass, SurfaceType, content, gcd0, is_primitive, surface_from
from .errors import (
    ConsistencyError,
    DomainError,
    ExcludedResidue,
    IntegerOverflow,
    ModelError,
    NegativeGenus,
    NonConvergence,
    NonHyperbolicSurface,
    NotPrimitive,
    OutsideCone,
    ParityError,
)
from .families import (
    MagicFamily,
    SequenceIndex,
    chain_sequence,
    chain_sequence_t,
    check_magic_family,
    domain_nonempty,
    in_theorem_domain,
    magic_family,
    solve_target,
    target_index,
)
from .magic import MagicClass, as_magic, magic_boundaries, magic_classify, magic_in_cone, magic_norm
from .thurston import (
    IntersectionMatrix,
    Kind,
    Letter,
    MONODROMY_WORD,
    RepMatrix,
    StretchFactor,
    TwistWord,
    WordType,
    classify_word,
    monodromy_stretch,
    mu,
    mu_batch,
    perron_root,
    represent,
)

__version__ = "0.1.0"
