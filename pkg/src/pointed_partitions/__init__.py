"""Bijections on pointed partitions exchanging hook length and part length."""

from .bijections import (
    Quintuple,
    TildeQuintuple,
    decompose,
    from_tilde,
    phi,
    phi_trace,
    recompose,
    rho,
    tau,
    to_tilde,
    zeta,
)
from .enumeration import (
    DistTable,
    VerifyReport,
    distribution,
    f_count,
    partitions_of,
    pointed_partitions_of,
)
from .partition import (
    Cell,
    Partition,
    PointedPartition,
    StatTuple,
    conjugate,
    make_partition,
    parse_cell,
    parse_partition,
    pointed,
    stats,
    weight,
)
from .qseries import QSeries, gf_f, q_binomial, q_pochhammer_inv, remark_identity_gap
from .rimhook import PealingResult, RimHook, hook_cells, peal, remove_rim_hook, rim_hook, unpeal

__version__ = "0.1.0"
