"""Genuine four-party measures built from global and reduced negativities.

Labels q1..q4 map to sites (mu1, mu2, S1, S2). Tangles are squared
negativities.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .linalg import SITES, site_index
from .negativity import NegativityVector, global_bisections, negativity, pairwise_negativities, reduced_negativity

log = logging.getLogger(__name__)

Q = (0, 2, 1, 3)
# pair slots that enter nu: q1q2, q1q3, q1q4, q3q4
NU_PAIRS = ((Q[0], Q[1]), (Q[0], Q[2]), (Q[0], Q[3]), (Q[2], Q[3]))
CLAMP_TOL = 1e-9
# residuals closer to zero than this are rounding noise
RESIDUAL_FLOOR = 1e-12
EDGE_THRESHOLD = 1e-3


class MonogamyViolation(ArithmeticError):
    """A CKW-type residual fell below -CLAMP_TOL."""


def _name(group: Iterable[int]) -> str:
    return "".join(SITES[i] for i in group)


def geometric_mean(values, power: float | None = None) -> float:
    """(prod values)^power, exactly 0 when any factor is 0."""
    v = np.asarray(list(values), dtype=float)
    if v.size == 0:
        raise ValueError("empty product")
    if np.any(v <= 0):
        return 0.0
    p = 1.0 / v.size if power is None else power
    return float(np.exp(p * np.log(v).sum()))


@dataclass(frozen=True)
class TangleRecord:
    partition: str
    one_tangle: float
    two_tangles: dict = field(default_factory=dict)
    residual: float = 0.0


def _residual(one: float, two: dict, partition: str) -> TangleRecord:
    r = one - sum(two.values())
    if r < -CLAMP_TOL:
        raise MonogamyViolation(f"{partition}: residual {r:.3e} below -{CLAMP_TOL:g}")
    if r < RESIDUAL_FLOOR:
        r = 0.0
    return TangleRecord(partition, one, two, r)


def delta(rho: np.ndarray, center: int | str) -> TangleRecord:
    """Residual of the one-site tangle after removing all pairwise tangles."""
    c = site_index(center)
    others = [q for q in Q if q != c]
    one = negativity(rho, [c]) ** 2
    two = {f"{SITES[c]}|{SITES[o]}": reduced_negativity(rho, c, o) ** 2 for o in others}
    return _residual(one, two, f"{SITES[c]}|rest")


def pi_residual(rho: np.ndarray, pair: Iterable[int | str]) -> TangleRecord:
    """Residual of the pair-vs-pair tangle after removing pair-vs-site tangles."""
    pair = tuple(site_index(s) for s in pair)
    if len(set(pair)) != 2:
        raise ValueError("pair needs two distinct sites")
    rest = [q for q in range(4) if q not in pair]
    one = negativity(rho, pair) ** 2
    two = {f"{_name(pair)}|{SITES[o]}": reduced_negativity(rho, pair, o) ** 2 for o in rest}
    return _residual(one, two, f"{_name(pair)}|{_name(rest)}")


def theta(nv: NegativityVector) -> float:
    return geometric_mean(nv.as_array())


TRISECTION_NAMES = (
    "mu1|mu2|S1S2",
    "mu1|mu2S1|S2",
    "mu1|mu2S2|S1",
    "mu1mu2|S1|S2",
    "mu1S1|mu2|S2",
    "mu1S2|mu2|S1",
)


def trisections(nv: NegativityVector) -> dict[str, float]:
    """All six three-way splits, each a cube root of three bisections."""
    n = nv
    factors = (
        (n.mu1, n.mu2, n.mu1mu2),
        (n.mu1, n.mu1S2, n.S2),
        (n.mu1, n.mu1S1, n.S1),
        (n.mu1mu2, n.S1, n.S2),
        (n.mu1S1, n.mu2, n.S2),
        (n.mu1S2, n.mu2, n.S1),
    )
    return {k: geometric_mean(f) for k, f in zip(TRISECTION_NAMES, factors)}


def trisection_negativity(nv: NegativityVector, which: int) -> float:
    if not 1 <= which <= 6:
        raise ValueError("trisection index runs from 1 to 6")
    return trisections(nv)[TRISECTION_NAMES[which - 1]]


def omega(nv: NegativityVector) -> float:
    return geometric_mean(trisections(nv).values())


def _deltas(rho):
    return [delta(rho, q) for q in Q]


def _pis(rho):
    return [pi_residual(rho, p) for p in NU_PAIRS]


def nu(rho: np.ndarray) -> float:
    """sqrt(prod delta) * sqrt(prod pi), to the power 1/8."""
    vals = [r.residual for r in _deltas(rho) + _pis(rho)]
    return geometric_mean(vals, 1 / 16)


def nu_star(rho: np.ndarray) -> float:
    return geometric_mean([r.residual for r in _deltas(rho)], 1 / 8)


@dataclass(frozen=True)
class GenuineReport:
    theta: float
    nu: float
    omega: float
    nu_star: float
    deltas: dict
    pis: dict
    trisections: dict


def genuine_report(rho: np.ndarray, nv: NegativityVector | None = None) -> GenuineReport:
    nv = global_bisections(rho) if nv is None else nv
    ds, ps = _deltas(rho), _pis(rho)
    d = {SITES[q]: r.residual for q, r in zip(Q, ds)}
    p = {_name(pr): r.residual for pr, r in zip(NU_PAIRS, ps)}
    nu_v = geometric_mean(list(d.values()) + list(p.values()), 1 / 16)
    nus_v = geometric_mean(list(d.values()), 1 / 8)
    th, om = theta(nv), omega(nv)
    if (th > EDGE_THRESHOLD) != (nu_v > EDGE_THRESHOLD) or (th > EDGE_THRESHOLD) != (om > EDGE_THRESHOLD):
        log.debug("measures disagree: theta=%.3g nu=%.3g omega=%.3g", th, nu_v, om)
    return GenuineReport(th, nu_v, om, nus_v, d, p, trisections(nv))


@dataclass(frozen=True)
class MonogamyRecord:
    id: str
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.lhs - self.rhs


MONOGAMY_ROWS = ("mu1", "S1", "mu1mu2", "mu1S1", "mu1S2", "S1S2")


_PAIRS = {"mu1mu2": (0, 2), "mu1S1": (0, 1), "mu1S2": (0, 3), "S1S2": (1, 3)}


def monogamy_table(rho: np.ndarray) -> list[MonogamyRecord]:
    """One-site rows for centres mu1 and S1, then four pair-vs-pair rows."""
    out = []
    for row in MONOGAMY_ROWS:
        group = _PAIRS.get(row) or (site_index(row),)
        rest = [o for o in range(4) if o not in group]
        lhs = negativity(rho, group) ** 2
        rhs = sum(reduced_negativity(rho, group, o) ** 2 for o in rest)
        out.append(MonogamyRecord(f"{_name(group)}|{_name(rest)}", lhs, rhs))
    return out


@dataclass(frozen=True)
class EntanglementGraph:
    weights: dict
    threshold: float = EDGE_THRESHOLD

    @property
    def edges(self) -> list[str]:
        return [k for k, w in self.weights.items() if w > self.threshold]


def entanglement_graph(rho: np.ndarray, threshold: float = EDGE_THRESHOLD) -> EntanglementGraph:
    return EntanglementGraph(pairwise_negativities(rho), threshold)
