"""Full 36x36 state from the closed forms, in the A/B block layout."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..model import analytic_spectrum
from .elements import ELEMENTS, element

HALF = 18
REVERSAL = np.fliplr(np.eye(HALF))
REVERSAL.setflags(write=False)


class AssemblyError(RuntimeError):
    pass


def analytic_log_partition(beta: float, J: float, J1: float, h: float) -> float:
    e = analytic_spectrum(J, J1, h)
    e0 = e[0]
    return float(math.log(np.exp(-beta * (e - e0)).sum()) - beta * e0)


def analytic_partition_function(beta: float, J: float, J1: float, h: float) -> float:
    """Z summed over the 36 multiplet energies."""
    if not math.isfinite(beta):
        raise ValueError("beta must be finite")
    return math.exp(analytic_log_partition(beta, J, J1, h))


def element_matrix(h: float, beta: float, J: float, J1: float) -> np.ndarray:
    """Every listed element placed directly, both triangles."""
    log_z = analytic_log_partition(beta, J, J1, h)
    m = np.zeros((36, 36))
    for i, j in ELEMENTS:
        m[i - 1, j - 1] = m[j - 1, i - 1] = element(i, j, h, beta, J, J1, log_z)
    return m


def upper_blocks(h: float, beta: float, J: float, J1: float) -> tuple[np.ndarray, np.ndarray]:
    """A(h) (rows and columns 1..18) and B(h) (rows 1..18, columns 19..36)."""
    log_z = analytic_log_partition(beta, J, J1, h)
    a = np.zeros((HALF, HALF))
    b = np.zeros((HALF, HALF))
    for i, j in ELEMENTS:
        if i > HALF:
            continue
        v = element(i, j, h, beta, J, J1, log_z)
        if j <= HALF:
            a[i - 1, j - 1] = a[j - 1, i - 1] = v
        else:
            b[i - 1, j - 1 - HALF] = v
    return a, b


def reversed_block(a_minus: np.ndarray) -> np.ndarray:
    """J18 A^T J18, applied to A evaluated at reversed field."""
    return REVERSAL @ a_minus.T @ REVERSAL


@dataclass(frozen=True)
class AssembledState:
    A: np.ndarray
    B: np.ndarray
    full: np.ndarray


def assemble_density(h: float, beta: float, J: float, J1: float) -> AssembledState:
    """[[A(h), B(h)], [B(h)^T, J18 A(-h)^T J18]]."""
    if not beta > 0:
        raise ValueError("closed forms need beta > 0")
    a, b = upper_blocks(h, beta, J, J1)
    a_minus, _ = upper_blocks(-h, beta, J, J1)
    full = np.block([[a, b], [b.T, reversed_block(a_minus)]])
    tr = np.trace(full)
    if abs(tr - 1.0) > 1e-8:
        raise AssemblyError(f"trace {tr:.12g} deviates from 1")
    return AssembledState(a, b, full)
