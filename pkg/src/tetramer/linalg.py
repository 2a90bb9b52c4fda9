"""Dense real-symmetric primitives over the four-site tensor space.

Sites are ordered (mu1, S1, mu2, S2) with local dimensions (2, 3, 2, 3).
Local bases run over descending z-projection, so the flat index of a
product state is ((i_mu1 * 3 + i_S1) * 2 + i_mu2) * 3 + i_S2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

SITES: tuple[str, ...] = ("mu1", "S1", "mu2", "S2")
SITE_DIMS: tuple[int, ...] = (2, 3, 2, 3)

_ALIASES = {
    "mu1": 0, "μ1": 0, "m1": 0,
    "s1": 1, "S1": 1,
    "mu2": 2, "μ2": 2, "m2": 2,
    "s2": 3, "S2": 3,
}


class ConvergenceError(RuntimeError):
    """Raised when the Jacobi sweep cap is reached without convergence."""


@dataclass(frozen=True)
class SpectralDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.T


def site_index(site: int | str) -> int:
    if isinstance(site, (int, np.integer)):
        if not 0 <= site < len(SITES):
            raise ValueError(f"site index {site} out of range")
        return int(site)
    try:
        return _ALIASES[site] if site in _ALIASES else _ALIASES[site.lower()]
    except KeyError:
        raise ValueError(f"unknown site label {site!r}") from None


def resolve_mask(mask: Iterable[int | str], n_sites: int = 4) -> tuple[int, ...]:
    """Normalize a subsystem mask to a sorted tuple of site indices.

    The mask has to be a non-empty proper subset of the sites.
    """
    if isinstance(mask, (str, int, np.integer)):
        mask = [mask]
    idx = tuple(sorted({site_index(s) for s in mask}))
    if not idx or len(idx) >= n_sites or idx[-1] >= n_sites:
        raise ValueError(f"mask {mask!r} must be a non-empty proper subset of {n_sites} sites")
    return idx


def kron(*mats: np.ndarray) -> np.ndarray:
    """Kronecker product of any number of matrices, left to right."""
    if not mats:
        return np.ones((1, 1))
    return reduce(np.kron, (np.asarray(m, dtype=float) for m in mats))


def _check_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def jacobi_eigh(m: np.ndarray, tol: float = 1e-13, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigensolver for a real symmetric matrix.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * ||m||_F``. Exceeding ``max_sweeps`` raises ConvergenceError.
    """
    a = _check_square(m).copy()
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    if n == 1 or scale == 0.0:
        return np.diag(a).copy(), v
    thresh = tol * scale
    for _ in range(max_sweeps):
        off = np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= thresh:
            w = np.diag(a).copy()
            order = np.argsort(w, kind="stable")
            return w[order], v[:, order]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.copysign(1.0, tau) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    raise ConvergenceError(f"Jacobi did not converge within {max_sweeps} sweeps")


def sym_eigen(m: np.ndarray, method: str = "lapack") -> SpectralDecomposition:
    """Full eigendecomposition of a real symmetric matrix, ascending.

    ``method="jacobi"`` uses the in-house cyclic Jacobi solver and
    ``method="lapack"`` defers to ``numpy.linalg.eigh``.
    """
    m = _check_square(m)
    if method == "lapack":
        w, v = np.linalg.eigh(m)
    elif method == "jacobi":
        w, v = jacobi_eigh(m)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    return SpectralDecomposition(w, v)


def _check_dims(m: np.ndarray, dims: Sequence[int]) -> np.ndarray:
    m = _check_square(m)
    if m.shape[0] != int(np.prod(dims)):
        raise ValueError(f"matrix of size {m.shape[0]} does not match dims {tuple(dims)}")
    return m


def partial_transpose(m: np.ndarray, mask: Iterable[int | str], dims: Sequence[int] = SITE_DIMS) -> np.ndarray:
    """Transpose the tensor factors listed in ``mask``."""
    dims = tuple(dims)
    m = _check_dims(m, dims)
    n = len(dims)
    perm = list(range(2 * n))
    for s in resolve_mask(mask, n):
        perm[s], perm[s + n] = perm[s + n], perm[s]
    return m.reshape(dims + dims).transpose(perm).reshape(m.shape)


def partial_trace(m: np.ndarray, keep: Iterable[int | str], dims: Sequence[int] = SITE_DIMS) -> np.ndarray:
    """Trace out every site not listed in ``keep``."""
    dims = tuple(dims)
    m = _check_dims(m, dims)
    n = len(dims)
    keep = resolve_mask(keep, n)
    rows = list(range(n))
    cols = [s if s not in keep else s + n for s in range(n)]
    out = [s for s in keep] + [s + n for s in keep]
    kept = int(np.prod([dims[s] for s in keep]))
    return np.einsum(m.reshape(dims + dims), rows + cols, out).reshape(kept, kept)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a
