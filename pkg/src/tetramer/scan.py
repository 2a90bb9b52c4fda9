"""Grid scans over couplings, field and temperature."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__
from .config import get_preset, mu_b_over_kb
from .measures import (EDGE_THRESHOLD, TRISECTION_NAMES, entanglement_graph, genuine_report, monogamy_table, nu,
                       nu_star, omega, theta, trisections)
from .model import (listed_eigenvector, build_hamiltonian, ground_state_manifold, manifold_name, phase_boundaries,
                    zero_field_spectrum)
from .negativity import BISECTIONS, global_bisections, negativity, pairwise_negativities, reduced_negativity
from .states import density_matrix, ground_state_density_matrix, partition_function

AXIS_NAMES = ("J1_over_absJ", "h_over_absJ", "kT_over_J", "T_kelvin", "B_tesla")
MODES = ("gs-map", "thermal-map", "material-map", "monogamy", "point")
MODE_AXES = {
    "gs-map": ("J1_over_absJ", "h_over_absJ"),
    "thermal-map": ("kT_over_J", "h_over_absJ"),
    "material-map": ("T_kelvin", "B_tesla"),
}
BOUNDARY_EPS = 1e-3
ISOVALUES = tuple(round(0.1 * k, 1) for k in range(1, 11))


# ---------------------------------------------------------------- quantities

def _registry() -> dict[str, Callable[[np.ndarray], float]]:
    q: dict[str, Callable[[np.ndarray], float]] = {}
    for k, m in BISECTIONS.items():
        q[f"N_{k}"] = lambda rho, m=m: negativity(rho, m)
    q["theta"] = lambda rho: theta(global_bisections(rho))
    q["omega"] = lambda rho: omega(global_bisections(rho))
    q["nu"] = nu
    q["nu_star"] = nu_star
    for i, name in enumerate(TRISECTION_NAMES, 1):
        q[f"tri_{i}"] = lambda rho, name=name: trisections(global_bisections(rho))[name]
    sites = ("mu1", "S1", "mu2", "S2")
    for i in range(4):
        for j in range(i + 1, 4):
            q[f"pair_{sites[i]}_{sites[j]}"] = lambda rho, a=sites[i], b=sites[j]: reduced_negativity(rho, a, b)
    return q


QUANTITIES = _registry()


def evaluate(rho: np.ndarray, quantity: str) -> float:
    try:
        fn = QUANTITIES[quantity]
    except KeyError:
        raise ValueError(f"unknown quantity {quantity!r}; choose from {', '.join(QUANTITIES)}") from None
    return float(fn(rho))


# ---------------------------------------------------------------- specs

@dataclass(frozen=True)
class Axis:
    name: str
    min: float
    max: float
    steps: int

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise ValueError(f"unknown axis {self.name!r}; choose from {', '.join(AXIS_NAMES)}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"axis {self.name}: steps must be an integer >= 2")
        if not (math.isfinite(self.min) and math.isfinite(self.max)) or self.max <= self.min:
            raise ValueError(f"axis {self.name}: need finite min < max")

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, int(self.steps))

    @property
    def step(self) -> float:
        return (self.max - self.min) / (self.steps - 1)


def parse_grid(text: str) -> tuple[Axis, Axis]:
    """``X:min:max:steps,Y:min:max:steps`` to a pair of axes."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) != 2:
        raise ValueError(f"grid needs exactly two axes, got {text!r}")
    axes = []
    for p in parts:
        f = p.split(":")
        if len(f) != 4:
            raise ValueError(f"axis spec {p!r} is not name:min:max:steps")
        try:
            axes.append(Axis(f[0], float(f[1]), float(f[2]), int(f[3])))
        except ValueError as e:
            raise ValueError(f"bad axis spec {p!r}: {e}") from None
    return axes[0], axes[1]


@dataclass(frozen=True)
class ScanSpec:
    mode: str
    x: Axis
    y: Axis
    params: dict = field(default_factory=dict)
    quantity: str = "theta"
    threshold: float = EDGE_THRESHOLD

    def __post_init__(self):
        if self.mode not in MODE_AXES:
            raise ValueError(f"mode {self.mode!r} is not a grid mode")
        want = MODE_AXES[self.mode]
        if (self.x.name, self.y.name) != want:
            raise ValueError(f"{self.mode} needs axes {want[0]}, {want[1]}; got {self.x.name}, {self.y.name}")
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}")
        if not self.threshold > 0:
            raise ValueError("threshold must be positive")

    def provenance(self) -> dict:
        return {
            "mode": self.mode,
            "x": asdict(self.x),
            "y": asdict(self.y),
            "params": dict(sorted(self.params.items())),
            "quantity": self.quantity,
            "threshold": self.threshold,
            "version": __version__,
        }


@dataclass
class ScanGrid:
    spec: ScanSpec
    values: np.ndarray  # shape (y.steps, x.steps), row-major in y
    labels: list | None = None
    flags: np.ndarray | None = None
    extras: dict = field(default_factory=dict)

    @property
    def x(self) -> np.ndarray:
        return self.spec.x.values

    @property
    def y(self) -> np.ndarray:
        return self.spec.y.values

    def meta(self) -> dict:
        m = {"provenance": self.spec.provenance(), "shape": list(self.values.shape)}
        if self.labels is not None:
            m["labels"] = self.labels
        if self.flags is not None:
            m["boundary_cells"] = [[int(r), int(c)] for r, c in np.argwhere(self.flags)]
        m.update(self.extras)
        return m


# ---------------------------------------------------------------- cell kernels

def _thermal_or_ground(zf, beta: float, h: float, tol: float = 1e-9) -> np.ndarray:
    """State from a zero-field spectrum; beta=inf takes the ground mixture."""
    e = zf.at_field(h)
    if math.isinf(beta):
        scale = max(1.0, float(np.abs(e).max()))
        sel = e <= e.min() + tol * scale
        return ground_state_density_matrix(zf.vectors[:, sel])
    p = partition_function(e, beta).weights
    return (zf.vectors * p) @ zf.vectors.T


def _gs_row(J: float, x: np.ndarray, yv: float, quantity: str):
    aj = abs(J)
    vals, labs, flags = [], [], []
    lines = phase_boundaries()
    for xv in x:
        J1, h = xv * aj, yv * aj
        man = ground_state_manifold(J, J1, h)
        name = manifold_name(man)
        vals.append(evaluate(ground_state_density_matrix(man), quantity))
        labs.append(name)
        flags.append(_near_boundary(name, J, J1, h, lines))
    return vals, labs, flags


def _near_boundary(name: str, J: float, J1: float, h: float, lines) -> bool:
    aj = abs(J)
    comps = set(name.split("&"))
    for b in lines:
        # degenerate cells on a line carry both labels
        if not (set(b.left.split("&")) <= comps or set(b.right.split("&")) <= comps):
            continue
        d = abs(J1 - J) if b.kind == "coupling" else abs(h - b.field(J, J1))
        if d <= BOUNDARY_EPS * aj * (1 + 1e-9):
            return True
    return False


def _thermal_row(J: float, J1: float, x: np.ndarray, yv: float, quantity: str, h_scale: float,
                 t_scale: float) -> list[float]:
    zf = zero_field_spectrum(J, J1)
    out = []
    for xv in x:
        t = xv * t_scale
        beta = math.inf if t == 0 else 1.0 / t
        out.append(evaluate(_thermal_or_ground(zf, beta, yv * h_scale), quantity))
    return out


def _run_rows(fn, rows, jobs: int):
    if jobs == 1 or len(rows) < 2:
        return [fn(r) for r in rows]
    from joblib import Parallel, delayed
    return Parallel(n_jobs=jobs)(delayed(fn)(r) for r in rows)


# ---------------------------------------------------------------- runners

def run_gs_map(spec: ScanSpec, jobs: int = 1) -> ScanGrid:
    """Ground-state quantity over (J1/|J|, h/|J|); J only sets the sign."""
    if spec.mode != "gs-map":
        raise ValueError("run_gs_map needs a gs-map spec")
    J = float(spec.params.get("J", 1.0))
    if J == 0:
        raise ValueError("normalized axes need J != 0")
    J = math.copysign(1.0, J)
    x = spec.x.values
    rows = _run_rows(lambda yv: _gs_row(J, x, yv, spec.quantity), list(spec.y.values), jobs)
    vals = np.array([r[0] for r in rows])
    return ScanGrid(spec, vals, [r[1] for r in rows], np.array([r[2] for r in rows], dtype=bool))


def run_thermal_map(spec: ScanSpec, jobs: int = 1, isovalues=None) -> ScanGrid:
    """Thermal quantity over (kT/J, h/J) at fixed J1/J, with J > 0."""
    if spec.mode != "thermal-map":
        raise ValueError("run_thermal_map needs a thermal-map spec")
    J = float(spec.params.get("J", 1.0))
    if not J > 0:
        raise ValueError("thermal maps are normalized by J > 0")
    if spec.x.min < 0:
        raise ValueError("temperature axis must be nonnegative")
    J1 = float(spec.params.get("J1_over_J", 1.0)) * J
    x = spec.x.values
    rows = _run_rows(lambda yv: _thermal_row(J, J1, x, yv, spec.quantity, J, J), list(spec.y.values), jobs)
    grid = ScanGrid(spec, np.array(rows))
    levels = ISOVALUES if isovalues is True else isovalues
    if levels:
        grid.extras["isovalues"] = {f"{lv:g}": threshold_curve(grid, lv) for lv in levels}
    grid.extras["threshold_curve"] = threshold_curve(grid, spec.threshold)
    return grid


def field_from_tesla(B, g: float, cfg: dict | None = None):
    """Zeeman energy h/k_B in kelvin."""
    return g * mu_b_over_kb(cfg) * np.asarray(B, dtype=float)


def run_material_map(spec: ScanSpec, jobs: int = 1, cfg: dict | None = None) -> ScanGrid:
    """Quantity over (T in K, B in T) with couplings in kelvin."""
    if spec.mode != "material-map":
        raise ValueError("run_material_map needs a material-map spec")
    if spec.x.min < 0:
        raise ValueError("temperature axis must be nonnegative")
    p = spec.params
    J, J1, g = float(p["J"]), float(p["J1"]), float(p.get("g", 2.2))
    if not g > 0:
        raise ValueError("g must be positive")
    hper = float(field_from_tesla(1.0, g, cfg))
    x = spec.x.values
    rows = _run_rows(lambda bv: _thermal_row(J, J1, x, bv, spec.quantity, hper, 1.0), list(spec.y.values), jobs)
    grid = ScanGrid(spec, np.array(rows))
    grid.extras["thresholds"] = material_thresholds(grid, spec.threshold)
    return grid


def material_grid_spec(preset: str, quantity: str | None = None, grid: str | None = None,
                       threshold: float = EDGE_THRESHOLD, cfg: dict | None = None) -> ScanSpec:
    pr = get_preset(preset, cfg)
    x, y = parse_grid(grid or pr.grid)
    params = {"J": pr.J_over_kB, "J1": pr.J1_over_kB, "g": pr.g, "preset": pr.name,
              "mu_B_over_k_B": mu_b_over_kb(cfg)}
    return ScanSpec("material-map", x, y, params, quantity or pr.quantity, threshold)


# ---------------------------------------------------------------- thresholds

def last_crossing(s: np.ndarray, v: np.ndarray, level: float) -> float | None:
    """Largest s at which v drops through ``level``, linearly interpolated.

    Returns None when v never exceeds the level and s[-1] when it still
    exceeds it at the end of the range.
    """
    s, v = np.asarray(s, float), np.asarray(v, float)
    above = np.flatnonzero(v > level)
    if above.size == 0:
        return None
    k = above[-1]
    if k == s.size - 1:
        return float(s[-1])
    v0, v1 = v[k], v[k + 1]
    return float(s[k] + (v0 - level) / (v0 - v1) * (s[k + 1] - s[k]))


def threshold_curve(grid: ScanGrid, level: float) -> list:
    """Per y row, the x value where the quantity last exceeds ``level``."""
    return [last_crossing(grid.x, row, level) for row in grid.values]


def material_thresholds(grid: ScanGrid, level: float) -> dict:
    """Threshold temperature on the lowest-field row, threshold field on the lowest-T column."""
    t_th = last_crossing(grid.x, grid.values[0], level)
    b_th = last_crossing(grid.y, grid.values[:, 0], level)
    return {"level": level, "T_threshold_K": t_th, "B_threshold_T": b_th,
            "at_B_T": float(grid.y[0]), "at_T_K": float(grid.x[0])}


# ---------------------------------------------------------------- monogamy and point reports

# named ground states -> (J, J1, h) representatives inside each phase
STATE_POINTS = {
    "0,1/2,1/2": (1.0, 0.5, 0.1),
    "0,3/2,3/2": (1.0, 2.0, 0.5),
    "1,1/2,1/2": (1.0, 0.5, 0.8),
    "1,3/2,3/2": (1.0, 2.0, 2.5),
    "2,mix": (1.0, 0.5, 2.0),
    "2,3/2,3/2": (1.0, 2.0, 5.0),
    "3": (1.0, 2.0, 7.0),
}


def run_monogamy(J: float | None = None, J1: float | None = None, h: float | None = None,
                 beta: float = math.inf, state: str | None = None) -> dict:
    """Six CKW/mCKW records for a named ground state or explicit parameters."""
    if state is not None:
        if state not in STATE_POINTS:
            raise ValueError(f"unknown state {state!r}; choose from {', '.join(STATE_POINTS)}")
        J, J1, h = STATE_POINTS[state]
        beta = math.inf
    if J is None or J1 is None or h is None:
        raise ValueError("give a state name or all of J, J1, h")
    rho = density_matrix(J, J1, h, beta)
    recs = monogamy_table(rho)
    return {
        "params": {"J": J, "J1": J1, "h": h, "beta": _jnum(beta), "state": state},
        "version": __version__,
        "rows": [{"id": r.id, "lhs": r.lhs, "rhs": r.rhs, "slack": r.slack} for r in recs],
    }


def _jnum(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _cross_check(J, J1, h, beta, rho) -> dict:
    if math.isinf(beta):
        out = {}
        for m in ground_state_manifold(J, J1, h):
            key = m.label.key
            try:
                v = listed_eigenvector(key)
            except ValueError:
                continue
            hv = build_hamiltonian(J, J1, h) @ v
            out[str(m.label)] = float(np.linalg.norm(hv - (v @ hv) * v))
        return {"listed_ket_residuals": out}
    if beta == 0:
        return {"max_abs_rho_deviation": float(np.abs(rho - np.eye(36) / 36).max())}
    from .analytic import assemble_density, assemble_pt_blocks
    ana = assemble_density(h, beta, J, J1).full
    blocks = {}
    for k in ("mu1", "S1", "mu1mu2", "mu1S1", "mu1S2"):
        blocks[k] = abs(assemble_pt_blocks(k, h, beta, J, J1).negativity() - negativity(rho, BISECTIONS[k]))
    return {"max_abs_rho_deviation": float(np.abs(ana - rho).max()), "block_negativity_deviation": blocks}


def run_point(J: float, J1: float, h: float, beta: float = math.inf) -> dict:
    """Everything computable at one parameter point, JSON-ready."""
    rho = density_matrix(J, J1, h, beta)
    w = np.linalg.eigvalsh(build_hamiltonian(J, J1, h))
    nv = global_bisections(rho)
    rep = genuine_report(rho, nv)
    doc = {
        "params": {"J": J, "J1": J1, "h": h, "beta": _jnum(beta)},
        "version": __version__,
        "spectrum": {"ground_energy": float(w[0]), "gap": float(w[w > w[0] + 1e-9 * max(1, abs(w[0]))][0] - w[0])
                     if np.any(w > w[0] + 1e-9 * max(1, abs(w[0]))) else 0.0,
                     "lowest": [float(e) for e in w[:6]]},
        "ground_state": manifold_name(ground_state_manifold(J, J1, h)),
        "negativities": nv.as_dict(),
        "pairwise": pairwise_negativities(rho),
        "genuine": {"theta": rep.theta, "nu": rep.nu, "omega": rep.omega, "nu_star": rep.nu_star,
                    "deltas": rep.deltas, "pis": rep.pis, "trisections": rep.trisections,
                    "nu_vanishes_with_nu_star_positive": rep.nu == 0 and rep.nu_star > 0},
        "monogamy": [{"id": r.id, "lhs": r.lhs, "rhs": r.rhs, "slack": r.slack} for r in monogamy_table(rho)],
        "graph": {"edges": entanglement_graph(rho).edges, "threshold": EDGE_THRESHOLD},
        "cross_check": _cross_check(J, J1, h, beta, rho),
    }
    if math.isfinite(beta):
        doc["spectrum"]["log_Z"] = partition_function(w, beta).log_z
    return doc


# ---------------------------------------------------------------- writers

def _fmt(v: float) -> str:
    return repr(float(v))


def write_csv(grid: ScanGrid, out: str | Path) -> tuple[Path, Path]:
    """Matrix CSV (x header row, y first column) and a ``.meta.json`` sidecar."""
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([f"{grid.spec.y.name}\\{grid.spec.x.name}"] + [_fmt(v) for v in grid.x])
        for yv, row in zip(grid.y, grid.values):
            w.writerow([_fmt(yv)] + [_fmt(v) for v in row])
    meta = out.with_name(out.name + ".meta.json")
    meta.write_text(json.dumps(grid.meta(), indent=2, sort_keys=True) + "\n")
    return out, meta


def grid_to_json(grid: ScanGrid) -> dict:
    return {**grid.meta(), "x": grid.x.tolist(), "y": grid.y.tolist(), "values": grid.values.tolist()}


def write_json(doc: dict, out: str | Path) -> Path:
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return out


def read_csv(path: str | Path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    x = np.array([float(v) for v in rows[0][1:]])
    y = np.array([float(r[0]) for r in rows[1:]])
    vals = np.array([[float(v) for v in r[1:]] for r in rows[1:]])
    return x, y, vals
