"""Exact-arithmetic library for the operad of shrubs.

Shrubs are height-labeled graphs generalizing forests of rooted trees.
This package validates them, composes them operadically, maps them into the
Zinbiel operad (sums of total orders) and the mould operad (factored
multivariate rational fractions), rebuilds a shrub from its fraction, and
implements the signed action of the symmetric group on one extra index.
"""

from .anticyclic import (
    CTree,
    OrbitInvariant,
    SignedShrub,
    act,
    all_ctrees,
    b0,
    b0_inverse,
    ctree_act,
    forest_act,
    orbit,
    orbit_invariant,
    ram_count_preserved,
)
from .core import (
    RamClass,
    Shrub,
    count_isomorphism_classes,
    enumerate_shrubs_bruteforce,
    label_key,
    trivial_shrub,
    validate_shrub,
)
from .errors import (
    CapExceeded,
    DegreeCapExceeded,
    ForbiddenPattern,
    HeightJump,
    LabelClash,
    MalformedWord,
    NotAForest,
    NotALeaf,
    NotCorrelated,
    NotInImage,
    NotInZinbielImage,
    ShrubError,
    UnknownLabel,
    Unsupported,
    ZeroDenominator,
)
from .mould import (
    FactoredFraction,
    LinearForm,
    MouldElement,
    Polynomial,
    RationalFunction,
    deformed_generators,
    embed_order,
    embed_zinb,
    equals,
    expand,
    format_fraction,
    fraction_of_shrub,
    kappa,
    mould_compose,
    parse_fraction,
    zinb_extract,
)
from .operad import (
    GenWord,
    compose,
    decompose,
    disjoint_union,
    enumerate_shrubs_by_generators,
    evaluate,
    graft,
    graft_generator,
    pair_generator,
)
from .reconstruction import fraction_components, reconstruct, recover_heights
from .series_parallel import count_series_parallel, series_parallel_posets
from .zinbiel import TotalOrder, ZinbElement, compatible_orders, gamma, zinb_compose

__version__ = "0.1.0"
