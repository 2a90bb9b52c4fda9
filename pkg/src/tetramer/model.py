"""Hamiltonian, symmetry operators and quantum-number bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .linalg import SITE_DIMS, kron

MU, S = 0.5, 1.0
SPINS = (MU, S, MU, S)
DEGENERACY_TOL = 1e-9


class ClassificationError(ValueError):
    """A vector is not a joint eigenvector of the symmetry operators."""


@dataclass(frozen=True)
class ModelParams:
    """Couplings and field, either per |J| or in kelvin.

    In kelvin mode J, J1 and h hold J/k_B, J1/k_B and h/k_B.
    """

    J: float
    J1: float
    h: float = 0.0
    g: float = 2.2
    unit_mode: str = "normalized"

    def __post_init__(self):
        if self.unit_mode not in ("normalized", "kelvin"):
            raise ValueError(f"unit_mode must be 'normalized' or 'kelvin', got {self.unit_mode!r}")
        for name in ("J", "J1", "h", "g"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.unit_mode == "normalized" and self.J == 0:
            raise ValueError("normalized mode needs J != 0")
        if self.g <= 0:
            raise ValueError("g must be positive")


def spin_matrices(s: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (Sz, S+, S-) for spin ``s`` in the descending-m basis."""
    if s not in (0.5, 1.0, 1, 1.5):
        raise ValueError(f"unsupported spin {s}")
    m = np.arange(s, -s - 1, -1)
    sp = np.zeros((m.size, m.size))
    for k in range(1, m.size):
        sp[k - 1, k] = np.sqrt(s * (s + 1) - m[k] * (m[k] + 1))
    return np.diag(m), sp, sp.T.copy()


def _embed(op: np.ndarray, site: int) -> np.ndarray:
    mats = [np.eye(d) for d in SITE_DIMS]
    mats[site] = op
    return kron(*mats)


@lru_cache(maxsize=None)
def _site_ops() -> tuple[tuple[np.ndarray, np.ndarray, np.ndarray], ...]:
    out = []
    for site, s in enumerate(SPINS):
        ops = tuple(_embed(o, site) for o in spin_matrices(s))
        for o in ops:
            o.setflags(write=False)
        out.append(ops)
    return tuple(out)


def _dot(a: Sequence[int], b: Sequence[int]) -> np.ndarray:
    ops = _site_ops()
    out = np.zeros((36, 36))
    for i in a:
        for j in b:
            zi, pi, mi = ops[i]
            zj, pj, mj = ops[j]
            out += zi @ zj + 0.5 * (pi @ mj + mi @ pj)
    return out


@lru_cache(maxsize=None)
def hamiltonian_terms() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Operators (X_J, X_J1, Sz_tot) with H = J X_J + J1 X_J1 - h Sz_tot."""
    xj = _dot([1], [0]) + _dot([3], [2])
    xj1 = _dot([1, 0], [3, 2])
    sz = sum(op[0] for op in _site_ops())
    for o in (xj, xj1, sz):
        o.setflags(write=False)
    return xj, xj1, sz


def build_hamiltonian(J: float, J1: float, h: float = 0.0) -> np.ndarray:
    xj, xj1, sz = hamiltonian_terms()
    return J * xj + J1 * xj1 - h * sz


class SymmetryOperators(NamedTuple):
    sz_tot: np.ndarray
    sigma1_sq: np.ndarray
    sigma2_sq: np.ndarray
    sigmaT_sq: np.ndarray


@lru_cache(maxsize=None)
def symmetry_operators() -> SymmetryOperators:
    """Total Sz and the squared dimer and total spins."""
    sz = hamiltonian_terms()[2]
    ops = SymmetryOperators(sz, _dot([0, 1], [0, 1]), _dot([2, 3], [2, 3]), _dot([0, 1, 2, 3], [0, 1, 2, 3]))
    for o in ops:
        o.setflags(write=False)
    return ops


@lru_cache(maxsize=None)
def magnetization() -> np.ndarray:
    """Total Sz of every product basis state, in flat order."""
    m = np.diag(hamiltonian_terms()[2]).copy()
    m.setflags(write=False)
    return m


def product_index(m_mu1: float, m_s1: float, m_mu2: float, m_s2: float) -> int:
    """Flat index of the product state |m_mu1, m_S1, m_mu2, m_S2>."""
    idx = 0
    for m, s, d in zip((m_mu1, m_s1, m_mu2, m_s2), SPINS, SITE_DIMS):
        i = s - m
        if abs(i - round(i)) > 1e-12 or not 0 <= round(i) < d:
            raise ValueError(f"projection {m} not allowed for spin {s}")
        idx = idx * d + int(round(i))
    return idx


def _frac(x: float) -> str:
    return str(Fraction(x).limit_denominator(4))


@dataclass(frozen=True)
class StateLabel:
    """Ket label |sigma_T^z, sigma1, sigma2> with optional total spin."""

    sigma_tz: float
    sigma1: float
    sigma2: float
    sigma_t: float | None = field(default=None, compare=False)

    def __str__(self) -> str:
        return f"|{_frac(self.sigma_tz)},{_frac(self.sigma1)},{_frac(self.sigma2)}>"

    @property
    def key(self) -> tuple[float, float, float]:
        return (self.sigma_tz, self.sigma1, self.sigma2)


def _spin_from_casimir(x: float, tol: float, allowed: Sequence[float]) -> float:
    for s in allowed:
        if abs(x - s * (s + 1)) <= tol:
            return s
    raise ClassificationError(f"<X^2> = {x:.10g} matches no allowed spin in {list(allowed)}")


def classify_state(v: np.ndarray, tol: float = 1e-8) -> StateLabel:
    """Read off (sigma_T^z, sigma1, sigma2, sigma_T) from expectation values.

    Raises ClassificationError if ``v`` is not a joint eigenvector.
    """
    v = np.asarray(v, dtype=float)
    v = v / np.linalg.norm(v)
    ops = symmetry_operators()
    vals = [float(v @ o @ v) for o in ops]
    for o, x in zip(ops, vals):
        if np.linalg.norm(o @ v - x * v) > np.sqrt(tol):
            raise ClassificationError("vector mixes symmetry sectors")
    mz = vals[0]
    if abs(mz * 2 - round(mz * 2)) > tol:
        raise ClassificationError(f"<Sz> = {mz:.10g} is not a half-integer")
    s1 = _spin_from_casimir(vals[1], tol, (0.5, 1.5))
    s2 = _spin_from_casimir(vals[2], tol, (0.5, 1.5))
    st = _spin_from_casimir(vals[3], tol, (0.0, 1.0, 2.0, 3.0))
    return StateLabel(round(mz * 2) / 2, s1, s2, st)


class ManifoldState(NamedTuple):
    energy: float
    vector: np.ndarray
    label: StateLabel


def _diagonalize_in_manifold(vecs: np.ndarray) -> np.ndarray:
    # generic combination of commuting symmetries splits every sector
    ops = symmetry_operators()
    mix = ops.sz_tot + 0.37 * ops.sigma1_sq + 0.111 * ops.sigma2_sq + 0.0173 * ops.sigmaT_sq
    _, u = np.linalg.eigh(vecs.T @ mix @ vecs)
    return vecs @ u


def ground_state_manifold(J: float, J1: float, h: float, eps_deg: float = DEGENERACY_TOL) -> list[ManifoldState]:
    """All eigenpairs within ``eps_deg * max(|J|,|J1|,|h|,1)`` of the minimum."""
    w, v = np.linalg.eigh(build_hamiltonian(J, J1, h))
    scale = max(abs(J), abs(J1), abs(h), 1.0)
    sel = np.flatnonzero(w <= w[0] + eps_deg * scale)
    vecs = _diagonalize_in_manifold(v[:, sel]) if sel.size > 1 else v[:, sel]
    return [ManifoldState(float(w[k]), vecs[:, i], classify_state(vecs[:, i])) for i, k in enumerate(sel)]


def manifold_name(manifold: Sequence[ManifoldState]) -> str:
    """Joined ket names, e.g. '|2,1/2,3/2>&|2,3/2,1/2>'."""
    labels = sorted({m.label.key for m in manifold}, key=lambda k: (k[0], k[1], k[2]))
    return "&".join(str(StateLabel(*k)) for k in labels)


# Listed ground-state kets: label -> (sigma_T, prefactor, [(coef, (m_mu1, m_S1, m_mu2, m_S2))]).
_R2 = np.sqrt(2.0)
_LISTED_KETS = {
    (3, 1.5, 1.5): (3, 1.0, [(1, (0.5, 1, 0.5, 1))]),
    (2, 1.5, 1.5): (2, 1 / np.sqrt(6), [
        (_R2, (0.5, 1, 0.5, 0)), (1, (0.5, 1, -0.5, 1)),
        (-_R2, (0.5, 0, 0.5, 1)), (-1, (-0.5, 1, 0.5, 1))]),
    (2, 0.5, 1.5): (2, 1 / np.sqrt(3), [(1, (0.5, 1, 0.5, 0)), (-_R2, (0.5, 1, -0.5, 1))]),
    (2, 1.5, 0.5): (2, 1 / np.sqrt(3), [(1, (0.5, 0, 0.5, 1)), (-_R2, (-0.5, 1, 0.5, 1))]),
    (1, 1.5, 1.5): (1, 1 / np.sqrt(10), [
        (1, (0.5, 1, 0.5, -1)), (_R2, (0.5, 1, -0.5, 0)),
        (-4 / 3, (0.5, 0, 0.5, 0)), (-2 * _R2 / 3, (0.5, 0, -0.5, 1)),
        (-2 * _R2 / 3, (-0.5, 1, 0.5, 0)), (-2 / 3, (-0.5, 1, -0.5, 1)),
        (1, (0.5, -1, 0.5, 1)), (_R2, (-0.5, 0, 0.5, 1))]),
    (1, 0.5, 0.5): (1, 1 / 3, [
        (1, (0.5, 0, 0.5, 0)), (-_R2, (0.5, 0, -0.5, 1)),
        (-_R2, (-0.5, 1, 0.5, 0)), (2, (-0.5, 1, -0.5, 1))]),
    (1, 0.5, 1.5): (1, 1 / 6, [
        (_R2, (0.5, 0, 0.5, 0)), (1, (0.5, 0, -0.5, 1)),
        (-2, (-0.5, 1, 0.5, 0)), (-_R2, (-0.5, 1, -0.5, 1)),
        (-3 * _R2, (0.5, -1, 0.5, 1)), (3, (-0.5, 0, 0.5, 1))]),
    (1, 1.5, 0.5): (1, -1 / 6, [
        (_R2, (0.5, 0, 0.5, 0)), (1, (-0.5, 1, 0.5, 0)),
        (-2, (0.5, 0, -0.5, 1)), (-_R2, (-0.5, 1, -0.5, 1)),
        (-3 * _R2, (0.5, 1, 0.5, -1)), (3, (0.5, 1, -0.5, 0))]),
    (0, 1.5, 1.5): (0, 1 / 6, [
        (3, (0.5, 1, -0.5, -1)), (-_R2, (0.5, 0, 0.5, -1)),
        (-2, (0.5, 0, -0.5, 0)), (-1, (-0.5, 1, 0.5, -1)),
        (-_R2, (-0.5, 1, -0.5, 0)), (-3, (-0.5, -1, 0.5, 1)),
        (_R2, (-0.5, 0, -0.5, 1)), (2, (-0.5, 0, 0.5, 0)),
        (1, (0.5, -1, -0.5, 1)), (_R2, (0.5, -1, 0.5, 0))]),
    (0, 0.5, 0.5): (0, 1 / (3 * _R2), [
        (_R2, (0.5, 0, 0.5, -1)), (-1, (0.5, 0, -0.5, 0)),
        (-2, (-0.5, 1, 0.5, -1)), (_R2, (-0.5, 1, -0.5, 0)),
        (-_R2, (-0.5, 0, -0.5, 1)), (1, (-0.5, 0, 0.5, 0)),
        (2, (0.5, -1, -0.5, 1)), (-_R2, (0.5, -1, 0.5, 0))]),
}

# The two sigma_T^z = 2 mixed-dimer kets carry (sigma1, sigma2) opposite to
# their printed labels: the first dimer (mu1, S1) is fully polarized in the
# ket printed as |2,1/2,3/2>. Both have the same energy, so only the label moves.
LABEL_SWAPS: dict[tuple[float, float, float], tuple[float, float, float]] = {
    (2.0, 0.5, 1.5): (2.0, 1.5, 0.5),
    (2.0, 1.5, 0.5): (2.0, 0.5, 1.5),
}

LISTED_LABELS: tuple[StateLabel, ...] = tuple(
    StateLabel(float(k[0]), k[1], k[2], float(v[0])) for k, v in _LISTED_KETS.items()
)


def _as_key(label: StateLabel | tuple) -> tuple[float, float, float]:
    if isinstance(label, StateLabel):
        return label.key
    return tuple(float(x) for x in label[:3])


def listed_eigenvector(label: StateLabel | tuple) -> np.ndarray:
    """One of the ten listed ground-state kets as a flat 36-vector."""
    key = _as_key(label)
    if key not in _LISTED_KETS:
        raise ValueError(f"no listed ket for label {key}")
    _, pref, terms = _LISTED_KETS[key]
    v = np.zeros(36)
    for c, ms in terms:
        v[product_index(*ms)] += pref * c
    return v


def total_spin_of(label: StateLabel | tuple) -> float:
    """Total spin for a label, falling back to the listed-ket lookup."""
    if isinstance(label, StateLabel) and label.sigma_t is not None:
        return label.sigma_t
    key = _as_key(label)
    if key not in _LISTED_KETS:
        raise ValueError(f"total spin unknown for label {key}; pass sigma_t explicitly")
    return float(_LISTED_KETS[key][0])


def multiplet_energy(sigma1: float, sigma2: float, sigma_t: float, sigma_tz: float, J: float, J1: float, h: float) -> float:
    c = lambda x: x * (x + 1)
    base = c(S) + c(MU)
    return (0.5 * J * (c(sigma1) + c(sigma2) - 2 * base)
            + 0.5 * J1 * (c(sigma_t) - c(sigma1) - c(sigma2))
            - h * sigma_tz)


def analytic_energy(label: StateLabel | tuple, J: float, J1: float, h: float) -> float:
    key = _as_key(label)
    st = total_spin_of(label)
    tz, s1, s2 = key
    if s1 not in (0.5, 1.5) or s2 not in (0.5, 1.5) or not abs(s1 - s2) <= st <= s1 + s2 or abs(tz) > st:
        raise ValueError(f"inconsistent label {key} with total spin {st}")
    return multiplet_energy(s1, s2, st, tz, J, J1, h)


def multiplets() -> list[tuple[float, float, float]]:
    """All (sigma1, sigma2, sigma_T) multiplets, 36 states in total."""
    out = []
    for s1 in (0.5, 1.5):
        for s2 in (0.5, 1.5):
            for st in np.arange(abs(s1 - s2), s1 + s2 + 1):
                out.append((s1, s2, float(st)))
    return out


def analytic_spectrum(J: float, J1: float, h: float) -> np.ndarray:
    """All 36 energies from the multiplet formula, ascending."""
    e = [multiplet_energy(s1, s2, st, m, J, J1, h)
         for s1, s2, st in multiplets() for m in np.arange(-st, st + 1)]
    return np.sort(np.array(e))


@dataclass(frozen=True)
class PhaseBoundary:
    """Line separating two ground-state phases.

    ``kind="field"`` means h = a_J * J + a_J1 * J1, ``kind="coupling"``
    means J = J1.
    """

    left: str
    right: str
    kind: str
    a_J: float = 0.0
    a_J1: float = 0.0

    def field(self, J: float, J1: float) -> float:
        if self.kind != "field":
            raise ValueError("coupling boundary has no field value")
        return self.a_J * J + self.a_J1 * J1


_MIX = "|2,1/2,3/2>&|2,3/2,1/2>"


def phase_boundaries() -> list[PhaseBoundary]:
    return [
        PhaseBoundary("|0,3/2,3/2>", "|1,3/2,3/2>", "field", 0.0, 1.0),
        PhaseBoundary("|0,1/2,1/2>", "|1,1/2,1/2>", "field", 0.0, 1.0),
        PhaseBoundary("|1,3/2,3/2>", "|2,3/2,3/2>", "field", 0.0, 2.0),
        PhaseBoundary("|1,1/2,1/2>", _MIX, "field", 1.5, 0.5),
        PhaseBoundary("|2,3/2,3/2>", "|3,3/2,3/2>", "field", 0.0, 3.0),
        PhaseBoundary(_MIX, "|3,3/2,3/2>", "field", 1.5, 1.5),
        PhaseBoundary("|1,1/2,1/2>", "|3,3/2,3/2>", "field", 1.5, 1.0),
        PhaseBoundary("|0,1/2,1/2>", "|0,3/2,3/2>", "coupling"),
        PhaseBoundary("|1,1/2,1/2>", "|1,3/2,3/2>", "coupling"),
        PhaseBoundary(_MIX, "|2,3/2,3/2>", "coupling"),
    ]


@dataclass(frozen=True)
class ZeroFieldSpectrum:
    """Sector-resolved eigenpairs of H at h = 0.

    Every eigenvector has definite total Sz, so H(h) shares them with
    energies shifted by -h * m.
    """

    energies: np.ndarray
    vectors: np.ndarray
    mz: np.ndarray

    def at_field(self, h: float) -> np.ndarray:
        return self.energies - h * self.mz


def zero_field_spectrum(J: float, J1: float) -> ZeroFieldSpectrum:
    h0 = build_hamiltonian(J, J1, 0.0)
    mz = magnetization()
    energies, vectors, ms = [], np.zeros((36, 36)), []
    col = 0
    for m in np.unique(mz)[::-1]:
        idx = np.flatnonzero(mz == m)
        w, u = np.linalg.eigh(h0[np.ix_(idx, idx)])
        vectors[idx, col:col + idx.size] = u
        energies.extend(w)
        ms.extend([m] * idx.size)
        col += idx.size
    return ZeroFieldSpectrum(np.array(energies), vectors, np.array(ms))
