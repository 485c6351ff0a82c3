"""Library and CLI for the modular structure of the matching permutation
modules of symmetric groups in odd characteristic: block invariants,
vertices, weight-2 decomposition columns, and principal-block Loewy
structure, all cross-checked by brute-force oracles at desk scale.
"""

from .abacus import (
    Abacus,
    Gap,
    from_partition,
    gaps,
    has_odd_gap,
    p_core,
    p_quotient,
    remove_rim_hook,
    removable_rim_hooks,
    render,
    renormalize,
    to_partition,
)
from .blocks import (
    BlockId,
    CoreProfile,
    block_of,
    core_profile,
    enumerate_block,
    two_runner_w,
    witness,
)
from .errors import BoundExceededError, DiagnosticError, FoulkesError, UsageError
from .partitions import (
    Partition,
    conjugate,
    dominates,
    double,
    enumerate_partitions,
    format_partition,
    is_even,
    is_p_regular,
    parse_partition,
)
from .summands import (
    ScottStructure,
    SummandReport,
    analyze,
    character,
    max_vertex_count,
    scott,
    vertex_spectrum,
)
from .weight2 import (
    Chain,
    Colour,
    DecompColumn,
    big_delta,
    chain,
    colour,
    decomp_column,
    delta,
    label,
    nu_circ,
)

__version__ = "0.1.0"

__all__ = [
    "Abacus",
    "BlockId",
    "BoundExceededError",
    "Chain",
    "Colour",
    "CoreProfile",
    "DecompColumn",
    "DiagnosticError",
    "FoulkesError",
    "Gap",
    "Partition",
    "ScottStructure",
    "SummandReport",
    "UsageError",
    "analyze",
    "big_delta",
    "block_of",
    "chain",
    "character",
    "colour",
    "conjugate",
    "core_profile",
    "decomp_column",
    "delta",
    "dominates",
    "double",
    "enumerate_block",
    "enumerate_partitions",
    "format_partition",
    "from_partition",
    "gaps",
    "has_odd_gap",
    "is_even",
    "is_p_regular",
    "label",
    "max_vertex_count",
    "nu_circ",
    "p_core",
    "p_quotient",
    "parse_partition",
    "removable_rim_hooks",
    "remove_rim_hook",
    "render",
    "renormalize",
    "scott",
    "to_partition",
    "two_runner_w",
    "vertex_spectrum",
    "witness",
]
