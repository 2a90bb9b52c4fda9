"""Negativity of global and reduced bisections.

A zero negativity means the cut is PPT. In these local dimensions that
does not certify separability.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields
from typing import Iterable, Sequence

import numpy as np

from .linalg import SITE_DIMS, SITES, partial_trace, partial_transpose, resolve_mask, site_index

NEG_FLOOR = 1e-12

# name -> transposed group, one entry per global bisection
BISECTIONS: dict[str, tuple[int, ...]] = {
    "mu1": (0,),
    "mu2": (2,),
    "S1": (1,),
    "S2": (3,),
    "mu1mu2": (0, 2),
    "mu1S1": (0, 1),
    "mu1S2": (0, 3),
}

BISECTION_NAMES = {
    "mu1": "mu1|mu2S1S2",
    "mu2": "mu2|mu1S1S2",
    "S1": "S1|mu1mu2S2",
    "S2": "S2|mu1mu2S1",
    "mu1mu2": "mu1mu2|S1S2",
    "mu1S1": "mu1S1|mu2S2",
    "mu1S2": "mu1S2|mu2S1",
}


def negativity(rho: np.ndarray, mask: Iterable[int | str], dims: Sequence[int] = SITE_DIMS,
               floor: float = NEG_FLOOR) -> float:
    """Sum of |lambda| over eigenvalues of the partial transpose below -floor."""
    w = np.linalg.eigvalsh(partial_transpose(rho, mask, dims))
    return 0.0 - float(w[w < -floor].sum())


@dataclass(frozen=True)
class NegativityVector:
    mu1: float
    mu2: float
    S1: float
    S2: float
    mu1mu2: float
    mu1S1: float
    mu1S2: float

    def as_array(self) -> np.ndarray:
        return np.array(astuple(self))

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def __getitem__(self, name: str) -> float:
        return getattr(self, name)

    @classmethod
    def zeros(cls) -> "NegativityVector":
        return cls(*([0.0] * 7))


def global_bisections(rho: np.ndarray, floor: float = NEG_FLOOR) -> NegativityVector:
    return NegativityVector(**{k: negativity(rho, m, floor=floor) for k, m in BISECTIONS.items()})


def _group(g: Iterable[int | str] | int | str) -> tuple[int, ...]:
    if isinstance(g, (str, int, np.integer)):
        return (site_index(g),)
    return tuple(sorted({site_index(s) for s in g}))


@dataclass(frozen=True)
class ReducedBisection:
    """Cut ``a | b`` of the sites left after tracing out the rest."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if not self.a or not self.b or set(self.a) & set(self.b):
            raise ValueError("reduced bisection needs two disjoint non-empty groups")
        if len(self.a) + len(self.b) >= 4:
            raise ValueError("reduced bisection must trace out at least one site")

    @classmethod
    def of(cls, a, b) -> "ReducedBisection":
        return cls(_group(a), _group(b))

    @property
    def kept(self) -> tuple[int, ...]:
        return tuple(sorted(self.a + self.b))

    @property
    def name(self) -> str:
        return "".join(SITES[i] for i in self.a) + "|" + "".join(SITES[i] for i in self.b)


def reduced_state(rho: np.ndarray, keep: Iterable[int | str]) -> tuple[np.ndarray, tuple[int, ...]]:
    keep = resolve_mask(keep)
    return partial_trace(rho, keep), tuple(SITE_DIMS[s] for s in keep)


def reduced_negativity(rho: np.ndarray, a, b=None, floor: float = NEG_FLOOR) -> float:
    """Negativity of ``a | b`` after tracing out the complement of a and b.

    ``a`` may also be a ReducedBisection with ``b`` omitted.
    """
    cut = a if isinstance(a, ReducedBisection) else ReducedBisection.of(a, b)
    kept = cut.kept
    red, dims = reduced_state(rho, kept)
    local = [kept.index(s) for s in cut.a]
    return negativity(red, local, dims, floor)


def pairwise_negativities(rho: np.ndarray) -> dict[str, float]:
    """Reduced negativity for each of the six site pairs."""
    out = {}
    for i in range(4):
        for j in range(i + 1, 4):
            out[f"{SITES[i]}|{SITES[j]}"] = reduced_negativity(rho, i, j)
    return out
