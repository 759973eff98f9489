"""Exact computation of Kronecker, Littlewood-Richardson and reduced Kronecker
coefficients over symmetric groups, with mechanical theorem verifiers."""

__version__ = "0.1.0"

from .partitions import (
    CycleType,
    Partition,
    add,
    centralizer_order,
    conjugate,
    durfee,
    format_partition,
    pad,
    parse_partition,
    partitions_of,
    scale,
    stable_durfee,
)
from .characters import CharacterCache, character, character_table, dimension
from .coefficients import kronecker, lr, lr3
from .reduced import (
    bracket,
    kronecker_via_bor,
    reduced_bdo,
    reduced_kronecker,
    reduced_stable,
    stable_sequence,
)
from .verifiers import (
    FamilyParameters,
    VerificationReport,
    construct_family,
    dvir_vanishing,
    ip_preconditions,
    max_scan,
    theorem12_chain,
    verify_saturation_counterexample,
)
from .kernel import BACKEND as KERNEL_BACKEND

__all__ = [
    "CycleType",
    "Partition",
    "add",
    "centralizer_order",
    "conjugate",
    "durfee",
    "format_partition",
    "pad",
    "parse_partition",
    "partitions_of",
    "scale",
    "stable_durfee",
    "CharacterCache",
    "character",
    "character_table",
    "dimension",
    "kronecker",
    "lr",
    "lr3",
    "bracket",
    "kronecker_via_bor",
    "reduced_bdo",
    "reduced_kronecker",
    "reduced_stable",
    "stable_sequence",
    "FamilyParameters",
    "VerificationReport",
    "construct_family",
    "dvir_vanishing",
    "ip_preconditions",
    "max_scan",
    "theorem12_chain",
    "verify_saturation_counterexample",
    "KERNEL_BACKEND",
]
