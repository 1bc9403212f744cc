"""Exact genus-two fixed-complex-structure curve counts in P^2 and P^3.

The count n_{2,d}(mu) of genus-two degree-d curves with a fixed generic
complex structure through a balanced tuple mu of points and lines is half
the difference between the genus-two symplectic invariant (computed by
composition laws from genus-zero data) and a correction term built from
intersection numbers on moduli of stable rational maps.  All arithmetic
is exact.
"""

from .algebra import (
    CohClass,
    DiagonalDecomposition,
    ExactRational,
    basis_class,
    binomial,
    cup,
    diagonal,
)
from .chern import (
    MonomialQuery,
    ReductionState,
    pair_v1,
    pair_v2,
    pair_v2_symmetric,
    s1_count,
    s1_pairings_p3,
    s2_count,
)
from .genus2 import (
    ConsistencyError,
    Genus2Report,
    cr_p2,
    n2_p2_closed,
    n2_p2_pipeline,
    n2_p3,
)
from .gw0 import DEFAULT_TABLE, GWKey, GWTable, N_p3, gw0, n_plane
from .nodecounts import boundary_pairing, tau2_p2, tau_common_node, tau_common_node_p3
from .rt import ConstraintProfile, RTQuery, rt0_3pt, rt0_4pt, rt2_p2_closed, rt_genus_reduce

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "binomial",
    "CohClass",
    "basis_class",
    "cup",
    "diagonal",
    "DiagonalDecomposition",
    "GWKey",
    "GWTable",
    "DEFAULT_TABLE",
    "n_plane",
    "gw0",
    "N_p3",
    "ConstraintProfile",
    "RTQuery",
    "rt0_3pt",
    "rt0_4pt",
    "rt_genus_reduce",
    "rt2_p2_closed",
    "tau2_p2",
    "tau_common_node",
    "tau_common_node_p3",
    "boundary_pairing",
    "MonomialQuery",
    "ReductionState",
    "pair_v1",
    "pair_v2",
    "pair_v2_symmetric",
    "s1_count",
    "s1_pairings_p3",
    "s2_count",
    "ConsistencyError",
    "Genus2Report",
    "n2_p2_closed",
    "cr_p2",
    "n2_p2_pipeline",
    "n2_p3",
    "__version__",
]
