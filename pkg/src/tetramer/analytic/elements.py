"""Closed-form density-matrix elements in the product basis (1-based).

Each element is either a formula or a reference to another element,
possibly scaled and evaluated at reversed field. A formula reads

    scale * exp(beta*J1/4) * exp(m*beta*h) * sum_k c_k exp(-beta*E_k) / Z

with E_k one of the eight multiplet energies below (without the J1/4
shift and the Zeeman term).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

R2 = math.sqrt(2.0)

# label -> (coefficient of J, coefficient of J1)
ENERGY_LABELS: dict[str, tuple[float, float]] = {
    "E1": (1.0, -0.5),   # sigma=(3/2,3/2), sigma_T=2
    "E2": (1.0, 2.5),    # sigma=(3/2,3/2), sigma_T=3
    "E3": (1.0, -2.5),   # sigma=(3/2,3/2), sigma_T=1
    "E4": (1.0, -3.5),   # sigma=(3/2,3/2), sigma_T=0
    "E5": (-0.5, 1.0),   # mixed dimers, sigma_T=2
    "E6": (-0.5, -1.0),  # mixed dimers, sigma_T=1
    "E7": (-2.0, 0.5),   # sigma=(1/2,1/2), sigma_T=1
    "E8": (-2.0, -0.5),  # sigma=(1/2,1/2), sigma_T=0
}


@dataclass(frozen=True)
class Formula:
    scale: float
    m: int
    coefs: tuple[tuple[str, float], ...]


@dataclass(frozen=True)
class Ref:
    target: tuple[int, int]
    factor: float = 1.0
    flip: bool = False


Element = Union[Formula, Ref]


def _f(scale: float, m: int, **coefs: float) -> Formula:
    return Formula(scale, m, tuple(coefs.items()))


def _ref(target: tuple[int, int], factor: float = 1.0, flip: bool = False) -> Ref:
    return Ref(target, factor, flip)


# upper triangle only; (i, j) and (j, i) are equal
ELEMENTS: dict[tuple[int, int], Element] = {
    (1, 1): _f(1, 3, E2=1),
    (2, 2): _f(1/3, 2, E1=1, E2=1, E5=1),
    (3, 3): _f(1/30, 1, E1=5, E2=2, E3=3, E5=5, E6=15),
    (4, 4): _f(1/6, 2, E1=1, E2=1, E5=4),
    (5, 5): _f(1/60, 1, E1=20, E2=8, E3=12, E5=5, E6=15),
    (6, 6): _f(1/20, 0, E1=5, E2=1, E3=9, E4=5),
    (7, 7): _ref((2, 2)),
    (8, 8): _f(1/45, 1, E2=12, E3=8, E7=5, E5=15, E6=5),
    (9, 9): _f(1/90, 0, E1=5, E2=9, E3=1, E4=5, E7=10, E8=10, E5=25, E6=25),
    (10, 10): _f(1/180, 1, E2=24, E3=16, E7=40, E5=75, E6=25),
    (11, 11): _f(1/90, 0, E1=10, E2=18, E3=2, E4=10, E7=5, E8=5, E5=20, E6=20),
    (12, 12): _ref((25, 25), flip=True),
    (13, 13): _ref((3, 3)),
    (14, 14): _ref((9, 9)),
    (15, 15): _ref((22, 22), flip=True),
    (16, 16): _ref((21, 21), flip=True),
    (17, 17): _ref((20, 20), flip=True),
    (18, 18): _ref((19, 19), flip=True),
    (19, 19): _ref((4, 4)),
    (20, 20): _ref((10, 10)),
    (21, 21): _f(1/180, 0, E1=5, E2=9, E3=1, E4=5, E7=40, E8=40, E5=40, E6=40),
    (22, 22): _f(1/90, 1, E2=6, E3=4, E7=40, E5=30, E6=10),
    (23, 23): _ref((14, 14), flip=True),
    (24, 24): _ref((13, 13), flip=True),
    (25, 25): _ref((5, 5)),
    (26, 26): _ref((11, 11), flip=True),
    (27, 27): _ref((10, 10), flip=True),
    (28, 28): _ref((9, 9), flip=True),
    (29, 29): _ref((8, 8), flip=True),
    (30, 30): _ref((7, 7), flip=True),
    (31, 31): _ref((6, 6), flip=True),
    (32, 32): _ref((5, 5), flip=True),
    (33, 33): _ref((4, 4), flip=True),
    (34, 34): _ref((3, 3), flip=True),
    (35, 35): _ref((2, 2), flip=True),
    (36, 36): _ref((1, 1), flip=True),
    (2, 4): _f(R2/6, 2, E1=1, E2=1, E5=-2),
    (2, 7): _f(-1/3, 2, E1=1, E2=-1),
    (2, 19): _ref((2, 7), R2/2),
    (3, 5): _f(R2/60, 1, E1=10, E2=4, E3=6, E5=-5, E6=-15),
    (3, 8): _f(1/30, 1, E2=4, E3=-4, E5=5, E6=-5),
    (3, 10): _f(R2/30, 1, E2=2, E3=-2, E5=-5, E6=5),
    (3, 13): _f(-1/30, 1, E1=5, E2=-2, E3=-3),
    (3, 20): _ref((3, 8), R2/2),
    (3, 22): _ref((3, 10), R2/2),
    (3, 25): _ref((3, 13), R2),
    (4, 7): _ref((2, 19)),
    (4, 19): _ref((2, 7), 1/2),
    (5, 8): _f(R2/60, 1, E2=8, E3=-8, E5=-5, E6=5),
    (5, 10): _ref((3, 8)),
    (5, 13): _ref((3, 25)),
    (5, 20): _ref((5, 8), R2/2),
    (5, 22): _ref((3, 20)),
    (5, 25): _ref((3, 13), 2),
    (6, 9): _f(R2/60, 0, E1=5, E2=3, E3=-3, E4=-5),
    (6, 11): _ref((6, 9), R2),
    (6, 14): _f(-R2/60, 0, E1=5, E2=-3, E3=3, E4=-5),
    (6, 16): _ref((6, 14), R2/2),
    (6, 21): _ref((6, 9), R2/2),
    (6, 23): _ref((6, 9)),
    (6, 26): _ref((6, 14), 2/R2),
    (6, 28): _ref((6, 14)),
    (6, 31): _f(-1/20, 0, E1=5, E2=-1, E3=-9, E4=5),
    (7, 19): _ref((2, 4)),
    (8, 10): _f(R2/180, 1, E2=24, E3=16, E7=-20, E5=-15, E6=-5),
    (8, 13): _ref((3, 8)),
    (8, 20): _ref((8, 10)),
    (8, 22): _f(1/90, 1, E2=12, E3=8, E7=20, E5=-30, E6=-10),
    (8, 25): _ref((5, 8)),
    (9, 11): _f(R2/90, 0, E1=5, E2=9, E3=1, E4=5, E7=-5, E8=-5, E5=-5, E6=-5),
    (9, 14): _f(-1/90, 0, E1=5, E2=-9, E3=-1, E4=5, E7=-10, E8=10, E5=-20, E6=20),
    (9, 16): _f(-R2/180, 0, E1=5, E2=-9, E3=-1, E4=5, E7=20, E8=-20, E5=10, E6=-10),
    (9, 21): _f(R2/180, 0, E1=5, E2=9, E3=1, E4=5, E7=-20, E8=-20, E5=10, E6=10),
    (9, 23): _f(1/90, 0, E1=5, E2=9, E3=1, E4=5, E7=10, E8=10, E5=-20, E6=-20),
    (9, 26): _f(-R2/90, 0, E1=5, E2=-9, E3=-1, E4=5, E7=5, E8=-5, E5=-5, E6=5),
    (9, 28): _f(-1/90, 0, E1=5, E2=-9, E3=-1, E4=5, E7=-10, E8=10, E5=25, E6=-25),
    (9, 31): _ref((6, 28), flip=True),
    (10, 13): _ref((3, 20)),
    (10, 20): _ref((8, 22)),
    (10, 22): _f(R2/180, 1, E2=12, E3=8, E7=-40, E5=15, E6=5),
    (10, 25): _ref((5, 20)),
    (11, 14): _ref((9, 26)),
    (11, 16): _ref((9, 14)),
    (11, 21): _ref((9, 23)),
    (11, 23): _ref((9, 11)),
    (11, 26): _f(-1/90, 0, E1=10, E2=-18, E3=-2, E4=10, E7=-5, E8=5, E5=20, E6=-20),
    (11, 28): _ref((9, 26), flip=True),
    (11, 31): _ref((6, 26), flip=True),
    (12, 15): _ref((22, 25), flip=True),
    (12, 17): _ref((20, 25), flip=True),
    (12, 24): _ref((13, 25), flip=True),
    (12, 27): _ref((10, 25), flip=True),
    (12, 29): _ref((8, 25), flip=True),
    (12, 32): _ref((5, 25), flip=True),
    (12, 34): _ref((3, 25), flip=True),
    (13, 20): _ref((3, 10)),
    (13, 22): _ref((3, 22)),
    (13, 25): _ref((3, 5)),
    (14, 16): _ref((9, 21)),
    (14, 21): _ref((9, 16)),
    (14, 23): _ref((9, 28)),
    (14, 26): _ref((11, 23), flip=True),
    (14, 28): _ref((9, 23), flip=True),
    (14, 31): _ref((6, 23), flip=True),
    (15, 17): _ref((20, 22), flip=True),
    (15, 24): _ref((13, 22), flip=True),
    (15, 27): _ref((10, 22), flip=True),
    (15, 29): _ref((8, 22), flip=True),
    (15, 32): _ref((5, 22), flip=True),
    (15, 34): _ref((3, 22), flip=True),
    (16, 21): _f(-1/180, 0, E1=5, E2=-9, E3=-1, E4=5, E7=-40, E8=40, E5=40, E6=-40),
    (16, 23): _ref((14, 21), flip=True),
    (16, 26): _ref((11, 21), flip=True),
    (16, 28): _ref((9, 21), flip=True),
    (16, 31): _ref((6, 21), flip=True),
    (17, 24): _ref((13, 20), flip=True),
    (17, 27): _ref((10, 20), flip=True),
    (17, 29): _ref((8, 20), flip=True),
    (17, 32): _ref((5, 20), flip=True),
    (17, 34): _ref((3, 20), flip=True),
    (18, 30): _ref((7, 19), flip=True),
    (18, 33): _ref((4, 19), flip=True),
    (18, 35): _ref((2, 19), flip=True),
    (20, 22): _ref((10, 22)),
    (20, 25): _ref((3, 8)),
    (21, 23): _ref((14, 16), flip=True),
    (21, 26): _ref((11, 16), flip=True),
    (21, 28): _ref((9, 16), flip=True),
    (21, 31): _ref((6, 16), flip=True),
    (22, 25): _ref((3, 20)),
    (23, 26): _ref((11, 14), flip=True),
    (23, 28): _ref((9, 14), flip=True),
    (23, 31): _ref((6, 14), flip=True),
    (24, 27): _ref((10, 13), flip=True),
    (24, 29): _ref((8, 13), flip=True),
    (24, 32): _ref((5, 13), flip=True),
    (24, 34): _ref((3, 13), flip=True),
    (26, 28): _ref((9, 11), flip=True),
    (26, 31): _ref((6, 11), flip=True),
    (27, 29): _ref((8, 10), flip=True),
    (27, 32): _ref((5, 10), flip=True),
    (27, 34): _ref((3, 10), flip=True),
    (28, 31): _ref((6, 9), flip=True),
    (29, 32): _ref((5, 8), flip=True),
    (29, 34): _ref((3, 8), flip=True),
    (30, 33): _ref((4, 7), flip=True),
    (30, 35): _ref((2, 7), flip=True),
    (32, 34): _ref((3, 5), flip=True),
    (33, 35): _ref((2, 4), flip=True),}


def _key(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i <= j else (j, i)


@lru_cache(maxsize=None)
def resolve(i: int, j: int) -> tuple[Formula, float, bool] | None:
    """Follow references down to a formula: (formula, factor, flipped)."""
    key = _key(i, j)
    seen = set()
    factor, flip = 1.0, False
    while key in ELEMENTS:
        if key in seen:
            raise RuntimeError(f"reference cycle through {key}")
        seen.add(key)
        e = ELEMENTS[key]
        if isinstance(e, Formula):
            return e, factor, flip
        factor *= e.factor
        flip ^= e.flip
        key = _key(*e.target)
    if seen:
        raise RuntimeError(f"dangling reference to {key}")
    return None


def element(i: int, j: int, h: float, beta: float, J: float, J1: float,
            log_z: float | None = None) -> float:
    """rho_{i,j}(h) from the closed forms; indices are 1-based.

    ``log_z`` is log Z; computed from the analytic spectrum when omitted.
    """
    if not (1 <= i <= 36 and 1 <= j <= 36):
        raise IndexError("indices run from 1 to 36")
    if beta <= 0:
        raise ValueError("closed forms need beta > 0")
    from .assembly import analytic_log_partition

    if log_z is None:
        log_z = analytic_log_partition(beta, J, J1, h)
    r = resolve(i, j)
    if r is None:
        return 0.0
    f, factor, flip = r
    hh = -h if flip else h
    total = 0.0
    for name, c in f.coefs:
        a, b = ENERGY_LABELS[name]
        total += c * math.exp(beta * (J1 / 4 + f.m * hh - a * J - b * J1) - log_z)
    return factor * f.scale * total


def _check_table() -> None:
    for key in ELEMENTS:
        if key[0] > key[1]:
            raise RuntimeError(f"lower-triangle key {key}")
        resolve(*key)


_check_table()
