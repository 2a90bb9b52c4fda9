"""Partial-transpose block structure for the five independent bisections.

Under each partial transpose the 36x36 matrix splits into blocks of sizes
1, 1, 4, 4, 8, 8, 10. Every block entry is a plain density-matrix element
(k, l) evaluated at +h or -h, so the negative spectrum follows from small
dense eigenproblems.

Blocks flagged as paired occur twice: once with all entries at +h and
once with all entries at -h. The size-10 block mixes both; its tokens
carry an explicit "+" or "-" suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..negativity import NEG_FLOOR
from .assembly import element_matrix

BLOCK_SIZES = (1, 1, 4, 4, 8, 8, 10)

# bisection -> ((block id, paired, rows of "k,l[+-]" tokens), ...)
_WIRING = {
    "mu1": (
        (1, True, """
        18,18
        """),
        (2, True, """
        1,1 2,19 4,19 7,19
        2,19 20,20 20,22 20,25
        4,19 20,22 22,22 22,25
        7,19 20,25 22,25 25,25
        """),
        (3, True, """
        2,2 2,4 2,7 3,20 5,20 8,20 10,20 13,20
        2,4 4,4 4,7 3,22 5,22 8,22 10,22 13,22
        2,7 4,7 7,7 3,25 5,25 8,25 10,25 13,25
        3,20 3,22 3,25 21,21 21,23 21,26 21,28 21,31
        5,20 5,22 5,25 21,23 23,23 23,26 23,28 23,31
        8,20 8,22 8,25 21,26 23,26 26,26 26,28 26,31
        10,20 10,22 10,25 21,28 23,28 26,28 28,28 28,31
        13,20 13,22 13,25 21,31 23,31 26,31 28,31 31,31
        """),
        (4, False, """
        3,3- 3,5- 3,8- 3,10- 3,13- 6,21- 9,21- 11,21- 14,21- 16,21+
        3,5- 5,5- 5,8- 5,10- 5,13- 6,23- 9,23- 11,23- 14,23+ 14,21+
        3,8- 5,8- 8,8- 8,10- 8,13- 6,26- 9,26- 11,26+ 11,23+ 11,21+
        3,10- 5,10- 8,10- 10,10- 10,13- 6,28- 9,28+ 9,26+ 9,23+ 9,21+
        3,13- 5,13- 8,13- 10,13- 13,13- 6,31+ 6,28+ 6,26+ 6,23+ 6,21+
        6,21- 6,23- 6,26- 6,28- 6,31+ 13,13+ 10,13+ 8,13+ 5,13+ 3,13+
        9,21- 9,23- 9,26- 9,28+ 6,28+ 10,13+ 10,10+ 8,10+ 5,10+ 3,10+
        11,21- 11,21- 11,26+ 9,26+ 6,26+ 8,13+ 8,10+ 8,8+ 5,8+ 3,8+
        14,21- 14,23+ 11,23+ 9,23+ 6,23+ 5,13+ 5,10+ 5,8+ 5,5+ 3,5+
        16,21+ 14,21+ 11,21+ 9,21+ 6,21+ 3,13+ 3,10+ 3,8+ 3,5+ 3,3+
        """),
    ),
    "S1": (
        (1, True, """
        13,13
        """),
        (2, True, """
        6,6 6,21 6,23 12,24
        6,21 21,21 21,23 24,27
        6,23 21,23 23,23 24,29
        12,24 24,27 24,29 30,30
        """),
        (3, True, """
        1,1 2,7 4,7 7,19 3,13 5,13 13,20 13,22
        2,7 8,8 8,10 8,25 9,14 11,14 14,26 14,28
        4,7 8,10 10,10 10,25 9,16 11,16 16,26 16,28
        7,19 8,25 10,25 25,25 9,31 11,31 26,31 28,31
        3,13 9,14 9,16 9,31 15,15 15,17 15,32 15,34
        5,13 11,14 11,16 11,31 15,17 17,17 17,32 17,34
        13,20 14,26 16,26 26,31 15,32 17,32 32,32 32,34
        13,22 14,28 16,28 28,31 15,34 17,34 32,34 34,34
        """),
        (4, False, """
        2,2+ 2,4+ 2,19+ 3,8+ 5,8+ 8,20+ 8,22+ 6,14+ 14,21+ 14,23+
        2,4+ 4,4+ 4,19+ 3,10+ 5,10+ 10,20+ 10,22+ 6,16+ 16,21+ 14,21-
        2,19+ 4,19+ 19,19+ 3,25+ 5,25+ 20,25+ 22,25+ 6,31+ 6,16- 6,14-
        3,8+ 3,10+ 3,25+ 9,9+ 9,11+ 9,26+ 9,28+ 22,25- 10,22- 8,22-
        5,8+ 5,10+ 5,25+ 9,11+ 11,11+ 11,26+ 9,26- 20,25- 10,20- 8,20-
        8,20+ 10,20+ 20,25+ 9,26+ 11,26+ 11,11- 9,11- 5,25- 5,10- 5,8-
        8,22+ 10,22+ 22,25+ 9,28+ 9,26- 9,11- 9,9- 3,25- 3,10- 3,8-
        6,14+ 6,16+ 6,31+ 22,25- 20,25- 5,25- 3,25- 19,19- 4,19- 2,19-
        14,21+ 16,21+ 6,16- 10,22- 10,20- 5,10- 3,10- 4,19- 4,4- 2,4-
        14,23+ 14,21- 6,14- 8,22- 8,20- 5,8- 3,8- 2,19- 2,4- 2,2-
        """),
    ),
    "mu1mu2": (
        (1, True, """
        15,15
        """),
        (2, True, """
        4,4 4,19 5,22 10,22
        4,19 19,19 20,22 22,25
        5,22 20,22 23,23 23,28
        10,22 22,25 23,28 28,28
        """),
        (3, True, """
        1,1 2,4 4,7 2,19 3,22 7,19 8,22 13,22
        2,4 5,5 5,10 5,20 6,23 10,20 11,23 16,23
        4,7 5,10 10,10 5,25 6,28 10,25 11,28 16,28
        2,19 5,20 5,25 20,20 21,23 20,25 23,26 23,31
        3,22 6,23 6,28 21,23 24,24 21,28 24,29 24,34
        7,19 10,20 10,25 20,25 21,28 25,25 26,28 28,31
        8,22 11,23 11,28 23,26 24,29 26,28 29,29 29,34
        13,22 16,23 16,28 23,31 24,34 28,31 29,34 34,34
        """),
        (4, False, """
        2,2+ 3,5+ 2,7+ 5,8+ 5,13+ 3,20+ 8,20+ 9,23+ 13,20+ 14,23+
        3,5+ 6,6+ 3,10+ 6,11+ 6,16+ 6,21+ 11,21+ 12,24+ 16,21+ 13,20-
        2,7+ 3,10+ 7,7+ 8,10+ 10,13+ 3,25+ 8,25+ 9,28+ 12,24- 9,23-
        5,8+ 6,11+ 8,10+ 11,11+ 11,16+ 6,26+ 11,26+ 8,25- 11,21- 8,20-
        5,13+ 6,16+ 10,13+ 11,16+ 16,16+ 6,31+ 6,26- 3,25- 6,21- 3,20-
        3,20+ 6,21+ 3,25+ 6,26+ 6,31+ 16,16- 11,16- 10,13- 6,16- 5,13-
        8,20+ 11,21+ 8,25+ 11,26+ 6,26- 11,16- 11,11- 8,10- 6,11- 5,8-
        9,23+ 12,24+ 9,28+ 8,25- 3,25- 10,13- 8,10- 7,7- 3,10- 2,7-
        13,20+ 16,21+ 12,24- 11,21- 6,21- 6,16- 6,11- 3,10- 6,6- 3,5-
        14,23+ 13,20- 9,23- 8,20- 3,20- 5,13- 5,8- 2,7- 3,5- 2,2-
        """),
    ),
    "mu1S1": (
        (1, True, """
        6,6
        """),
        (2, True, """
        3,3 3,5 6,9 6,21
        3,5 5,5 6,11 6,23
        6,9 6,11 12,12 12,24
        6,21 6,23 12,24 24,24
        """),
        (3, True, """
        2,2 2,4 3,8 5,8 6,14 3,20 5,20 6,26
        2,4 4,4 3,10 5,10 6,16 3,22 5,22 6,28
        3,8 3,10 9,9 9,11 12,15 9,21 11,21 12,27
        5,8 5,10 9,11 11,11 12,17 9,23 11,23 12,29
        6,14 6,16 12,15 12,17 18,18 15,24 17,24 18,30
        3,20 3,22 9,21 9,23 15,24 21,21 21,23 24,27
        5,20 5,22 11,21 11,23 17,24 21,23 23,23 24,29
        6,26 6,28 12,27 12,29 18,30 24,27 24,29 30,30
        """),
        (4, False, """
        1,1+ 2,7+ 4,7+ 3,13+ 5,13+ 2,19+ 4,19+ 3,25+ 5,25+ 6,31+
        2,7+ 8,8+ 8,10+ 9,14+ 11,14+ 8,20+ 10,20+ 9,26+ 11,26+ 5,25-
        4,7+ 8,10+ 10,10+ 9,16+ 11,16+ 8,22+ 10,22+ 9,28+ 9,26- 3,25-
        3,13+ 9,14+ 9,16+ 15,15+ 15,17+ 14,21+ 16,21+ 10,22- 10,20- 4,19-
        5,13+ 11,14+ 11,16+ 15,17+ 17,17+ 14,23+ 14,21- 8,22- 8,20- 2,19-
        2,19+ 8,20+ 8,22+ 14,21+ 14,23+ 17,17- 15,17- 11,16- 11,14- 5,13-
        4,19+ 10,20+ 10,22+ 16,21+ 14,21- 15,17- 15,15- 9,16- 9,14- 3,13-
        3,25+ 9,26+ 9,28+ 10,22- 8,22- 11,16- 9,16- 10,10- 8,10- 4,7-
        5,25+ 11,26+ 9,26- 10,20- 8,20- 11,14- 9,14- 8,10- 8,8- 2,7-
        6,31+ 5,25- 3,25- 4,19- 2,19- 5,13- 3,13- 4,7- 2,7- 1,1-
        """),
    ),
    "mu1S2": (
        (1, True, """
        16,16
        """),
        (2, True, """
        3,3 3,20 6,21 9,21
        3,20 20,20 21,23 21,26
        6,21 21,23 24,24 24,27
        9,21 21,26 24,27 27,27
        """),
        (3, True, """
        2,2 3,5 3,8 2,19 5,20 8,20 11,21 14,21
        3,5 6,6 6,9 3,22 6,23 9,23 12,24 15,24
        3,8 6,9 9,9 3,25 6,26 9,26 12,27 15,27
        2,19 3,22 3,25 19,19 20,22 20,25 21,28 21,31
        5,20 6,23 6,26 20,22 23,23 23,26 24,29 24,32
        8,20 9,23 9,26 20,25 23,26 26,26 27,29 27,32
        11,21 12,24 12,27 21,28 24,29 27,29 30,30 30,33
        14,21 15,24 15,27 21,31 24,32 27,32 30,33 33,33
        """),
        (4, False, """
        1,1+ 2,4+ 2,7+ 3,10+ 3,13+ 4,19+ 7,19+ 10,20+ 13,20+ 16,21+
        2,4+ 5,5+ 5,8+ 6,11+ 6,14+ 5,22+ 8,22+ 11,23+ 14,23+ 13,20-
        2,7+ 5,8+ 8,8+ 9,11+ 9,14+ 5,25+ 8,25+ 11,26+ 11,23- 10,20-
        3,10+ 6,11+ 9,11+ 12,12+ 12,15+ 6,28+ 9,28+ 8,25- 8,22- 7,19-
        3,13+ 6,14+ 9,14+ 12,15+ 15,15+ 6,31+ 6,28- 5,25- 5,22- 4,19-
        4,19+ 5,22+ 5,25+ 6,28+ 6,31+ 15,15- 12,15- 9,14- 6,14- 3,13-
        7,19+ 8,22+ 8,25+ 9,28+ 6,28- 12,15- 12,12- 9,11- 6,11- 3,10-
        10,20+ 11,23+ 11,26+ 8,25- 5,25- 9,14- 9,11- 8,8- 5,8- 2,7-
        13,20+ 14,23+ 11,23- 8,22- 5,22- 6,14- 6,11- 5,8- 5,5- 2,4-
        16,21+ 13,20- 10,20- 7,19- 4,19- 3,13- 3,10- 2,7- 2,4- 1,1-
        """),
    ),
}

# (bisection, block id, row, col) zero-based -> corrected token.
# The size-10 block is symmetric; this cell was misprinted and disagrees
# with its transpose partner.
ERRATA: dict[tuple[str, int, int, int], str] = {
    ("mu1", 4, 7, 1): "11,23-",
}

BISECTION_KEYS = tuple(_WIRING)


@dataclass(frozen=True)
class Token:
    k: int
    l: int
    sign: int  # +1 for +h, -1 for -h, 0 for the paired copy's own sign


@dataclass(frozen=True)
class BlockSpec:
    block_id: int
    paired: bool
    tokens: tuple[tuple[Token, ...], ...]

    @property
    def size(self) -> int:
        return len(self.tokens)


def _token(s: str) -> Token:
    sign = 0
    if s[-1] in "+-":
        sign = 1 if s[-1] == "+" else -1
        s = s[:-1]
    k, l = (int(x) for x in s.split(","))
    return Token(k, l, sign)


@lru_cache(maxsize=None)
def wiring(bisection: str, as_printed: bool = False) -> tuple[BlockSpec, ...]:
    """Parsed block layout; errata are applied unless ``as_printed``."""
    if bisection not in _WIRING:
        raise KeyError(f"no block layout for bisection {bisection!r}")
    out = []
    for bid, paired, text in _WIRING[bisection]:
        rows = [line.split() for line in text.strip().splitlines()]
        if not as_printed:
            for (key, b, r, c), tok in ERRATA.items():
                if key == bisection and b == bid:
                    rows[r][c] = tok
        toks = tuple(tuple(_token(t) for t in row) for row in rows)
        n = len(toks)
        if any(len(row) != n for row in toks):
            raise ValueError(f"{bisection} block {bid} is not square")
        if paired and any(t.sign for row in toks for t in row):
            raise ValueError(f"{bisection} block {bid}: paired block with explicit signs")
        out.append(BlockSpec(bid, paired, toks))
    sizes = sorted(b.size for b in out for _ in range(2 if b.paired else 1))
    if tuple(sizes) != BLOCK_SIZES:
        raise ValueError(f"{bisection}: block sizes {sizes} do not tile 36")
    return tuple(out)


@dataclass(frozen=True)
class PTBlock:
    block_id: int
    field_sign: int  # +1 / -1 for paired copies, 0 for the mixed block
    matrix: np.ndarray

    @property
    def negative_eigenvalues(self) -> np.ndarray:
        w = np.linalg.eigvalsh(self.matrix)
        return w[w < -NEG_FLOOR]


@dataclass(frozen=True)
class PTBlockSet:
    bisection: str
    blocks: tuple[PTBlock, ...]

    def spectrum(self) -> np.ndarray:
        return np.sort(np.concatenate([np.linalg.eigvalsh(b.matrix) for b in self.blocks]))

    def negativity(self) -> float:
        return 0.0 - float(sum(b.negative_eigenvalues.sum() for b in self.blocks))


def _fill(spec: BlockSpec, sign: int, rp: np.ndarray, rm: np.ndarray) -> np.ndarray:
    n = spec.size
    m = np.empty((n, n))
    for i, row in enumerate(spec.tokens):
        for j, t in enumerate(row):
            s = t.sign or sign
            m[i, j] = (rp if s > 0 else rm)[t.k - 1, t.l - 1]
    return m


def blocks_from_states(bisection: str, rho_plus: np.ndarray, rho_minus: np.ndarray,
                       as_printed: bool = False) -> PTBlockSet:
    """Blocks from the state at +h and the state at -h."""
    out = []
    for spec in wiring(bisection, as_printed):
        signs = (1, -1) if spec.paired else (0,)
        for s in signs:
            out.append(PTBlock(spec.block_id, s, _fill(spec, s, rho_plus, rho_minus)))
    return PTBlockSet(bisection, tuple(out))


def assemble_pt_blocks(bisection: str, h: float, beta: float, J: float, J1: float,
                       as_printed: bool = False) -> PTBlockSet:
    rp = element_matrix(h, beta, J, J1)
    rm = rp if h == 0 else element_matrix(-h, beta, J, J1)
    return blocks_from_states(bisection, rp, rm, as_printed)


def block_negativity(bisection: str, h: float, beta: float, J: float, J1: float) -> float:
    return assemble_pt_blocks(bisection, h, beta, J, J1).negativity()
