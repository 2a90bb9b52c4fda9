"""Entanglement of a mixed spin-(1/2, 1) Heisenberg tetramer."""

from .linalg import SITE_DIMS, SITES, partial_trace, partial_transpose, sym_eigen
from .measures import genuine_report, monogamy_table, nu, nu_star, omega, theta
from .model import ModelParams, build_hamiltonian, ground_state_manifold
from .negativity import global_bisections, negativity, reduced_negativity
from .states import density_matrix, partition_function, thermal_density_matrix

__version__ = "0.1.0"

__all__ = [
    "SITE_DIMS", "SITES", "partial_trace", "partial_transpose", "sym_eigen",
    "genuine_report", "monogamy_table", "nu", "nu_star", "omega", "theta",
    "ModelParams", "build_hamiltonian", "ground_state_manifold",
    "global_bisections", "negativity", "reduced_negativity",
    "density_matrix", "partition_function", "thermal_density_matrix",
]
