"""Stabilizer-code workbench for genus-2 and genus-5 surface codes."""

__version__ = "0.1.0"

from .catalog import (
    catalog_list,
    genus2_grid_parameters,
    genus2_unit,
    genus2_vertical_chain,
    genus5_stacked,
    genus5_unit,
    get_code,
    surface_512,
)
from .code import (
    CodeParameters,
    LogicalPair,
    StabilizerCode,
    build_code,
    enumerate_stabilizer_group,
    generator_rank,
    ground_state_degeneracy,
    logical_count,
    stabilizer_group_contains,
    validate_logical_pairs,
)
from .dephasing import (
    BlochVector,
    DephasingSpec,
    bloch_coordinates,
    compare_closed_form,
    decoherence_factor,
    dephase,
    genus5_closed_form,
    magnetization,
)
from .distance import (
    DistanceResult,
    cross_validate_distance,
    kl_distance,
    kl_violates,
    symplectic_distance,
)
from .pauli import PauliOperator, commutes, format_pauli, multiply, parse_pauli, weight
from .states import (
    StateVector,
    apply_pauli,
    encode_zero,
    expectation,
    logical_basis,
    logical_state,
)

__all__ = [
    "apply_pauli",
    "bloch_coordinates",
    "BlochVector",
    "build_code",
    "catalog_list",
    "CodeParameters",
    "commutes",
    "compare_closed_form",
    "cross_validate_distance",
    "decoherence_factor",
    "dephase",
    "DephasingSpec",
    "DistanceResult",
    "encode_zero",
    "enumerate_stabilizer_group",
    "expectation",
    "format_pauli",
    "generator_rank",
    "genus2_grid_parameters",
    "genus2_unit",
    "genus2_vertical_chain",
    "genus5_closed_form",
    "genus5_stacked",
    "genus5_unit",
    "get_code",
    "ground_state_degeneracy",
    "kl_distance",
    "kl_violates",
    "logical_basis",
    "logical_count",
    "logical_state",
    "LogicalPair",
    "magnetization",
    "multiply",
    "parse_pauli",
    "PauliOperator",
    "stabilizer_group_contains",
    "StabilizerCode",
    "StateVector",
    "surface_512",
    "symplectic_distance",
    "validate_logical_pairs",
    "weight",
]
