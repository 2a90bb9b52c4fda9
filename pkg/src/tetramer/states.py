"""Gibbs and ground-state density matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import SpectralDecomposition, sym_eigen
from .model import ManifoldState, build_hamiltonian, ground_state_manifold


@dataclass(frozen=True)
class PartitionFunction:
    """Z stored as log Z, with the shift used for the weights."""

    log_z: float
    shift: float
    weights: np.ndarray

    @property
    def value(self) -> float:
        return math.exp(self.log_z)


def _energies(spec: SpectralDecomposition | np.ndarray) -> np.ndarray:
    if isinstance(spec, SpectralDecomposition):
        return spec.eigenvalues
    return np.asarray(spec, dtype=float)


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if math.isnan(beta) or beta < 0:
        raise ValueError(f"beta must be nonnegative, got {beta}")
    if math.isinf(beta):
        raise ValueError("beta = inf has no finite partition function; use ground_state_density_matrix")
    return beta


def partition_function(spec: SpectralDecomposition | np.ndarray, beta: float) -> PartitionFunction:
    """Log-sum-exp partition function. ``weights`` are the Boltzmann probabilities."""
    beta = _check_beta(beta)
    e = _energies(spec)
    shift = float(e.min())
    x = np.exp(-beta * (e - shift))
    s = x.sum()
    return PartitionFunction(math.log(s) - beta * shift, shift, x / s)


def boltzmann_weights(energies: np.ndarray, beta: float) -> np.ndarray:
    return partition_function(energies, beta).weights


def thermal_density_matrix(spec: SpectralDecomposition, beta: float) -> np.ndarray:
    p = partition_function(spec, beta).weights
    v = spec.eigenvectors
    return (v * p) @ v.T


def ground_state_density_matrix(manifold: Sequence[ManifoldState] | np.ndarray) -> np.ndarray:
    """Uniform mixture over the ground manifold (columns or ManifoldStates)."""
    if isinstance(manifold, np.ndarray):
        vecs = manifold.reshape(manifold.shape[0], -1)
    else:
        if len(manifold) == 0:
            raise ValueError("empty manifold")
        vecs = np.column_stack([m.vector for m in manifold])
    return vecs @ vecs.T / vecs.shape[1]


def density_matrix(J: float, J1: float, h: float, beta: float = math.inf, method: str = "lapack") -> np.ndarray:
    """State at inverse temperature ``beta``; ``inf`` gives the ground mixture."""
    if math.isinf(beta) and beta > 0:
        return ground_state_density_matrix(ground_state_manifold(J, J1, h))
    return thermal_density_matrix(sym_eigen(build_hamiltonian(J, J1, h), method), beta)


def purity(rho: np.ndarray) -> float:
    return float(np.einsum("ij,ji->", rho, rho))
