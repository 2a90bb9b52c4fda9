"""Random sweep comparing the closed-form state with exact diagonalization."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .analytic import assemble_density, assemble_pt_blocks
from .linalg import partial_transpose
from .negativity import BISECTIONS
from .states import density_matrix

TOL = 1e-10
BLOCK_KEYS = ("mu1", "S1", "mu1mu2", "mu1S1", "mu1S2")


@dataclass
class VerifyReport:
    points: int
    max_rho_deviation: float
    max_spectrum_deviation: dict = field(default_factory=dict)
    seconds: float = 0.0
    worst_point: tuple = ()

    @property
    def passed(self) -> bool:
        return self.max_rho_deviation <= TOL and all(v <= TOL for v in self.max_spectrum_deviation.values())

    def as_dict(self) -> dict:
        return {"points": self.points, "max_rho_deviation": self.max_rho_deviation,
                "max_spectrum_deviation": self.max_spectrum_deviation, "seconds": self.seconds,
                "worst_point": list(self.worst_point), "tolerance": TOL, "passed": self.passed}


def sample_points(n: int, seed: int = 0) -> np.ndarray:
    """Rows (J, J1, h, beta) with J = +-1, J1 in [-3, 3], h in [0, 6], beta in [0.01, 50]."""
    rng = np.random.default_rng(seed)
    return np.column_stack([
        rng.choice([-1.0, 1.0], n),
        rng.uniform(-3, 3, n),
        rng.uniform(0, 6, n),
        rng.uniform(0.01, 50, n),
    ])


def run_verify(n: int = 200, seed: int = 0) -> VerifyReport:
    t0 = time.perf_counter()
    worst, worst_pt = 0.0, ()
    spec_dev = {k: 0.0 for k in BLOCK_KEYS}
    for J, J1, h, beta in sample_points(n, seed):
        num = density_matrix(J, J1, h, beta)
        ana = assemble_density(h, beta, J, J1).full
        d = float(np.abs(ana - num).max())
        if d > worst:
            worst, worst_pt = d, (J, J1, h, beta)
        for k in BLOCK_KEYS:
            blk = assemble_pt_blocks(k, h, beta, J, J1).spectrum()
            ref = np.linalg.eigvalsh(partial_transpose(num, BISECTIONS[k]))
            spec_dev[k] = max(spec_dev[k], float(np.abs(blk - ref).max()))
    return VerifyReport(n, worst, spec_dev, time.perf_counter() - t0, tuple(float(v) for v in worst_pt))
