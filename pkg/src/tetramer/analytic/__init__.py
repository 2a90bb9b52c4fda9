"""Closed-form thermal state and its partial-transpose blocks."""

from .assembly import (AssembledState, AssemblyError, analytic_log_partition, analytic_partition_function,
                       assemble_density, element_matrix)
from .blocks import BISECTION_KEYS, ERRATA, PTBlockSet, assemble_pt_blocks, block_negativity, wiring
from .elements import ELEMENTS, element, resolve

__all__ = [
    "AssembledState", "AssemblyError", "analytic_log_partition", "analytic_partition_function",
    "assemble_density", "element_matrix", "BISECTION_KEYS", "ERRATA", "PTBlockSet",
    "assemble_pt_blocks", "block_negativity", "wiring", "ELEMENTS", "element", "resolve",
]
