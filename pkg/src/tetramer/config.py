"""Constants and material presets loaded from TOML."""

from __future__ import annotations

import copy
import os
import sys
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

OUT_DIR_ENV = "TETRAMER_OUT_DIR"


@dataclass(frozen=True)
class MaterialPreset:
    name: str
    J_over_kB: float
    J1_over_kB: float
    g: float = 2.2
    grid: str = ""
    quantity: str = "theta"
    description: str = ""

    def __post_init__(self):
        if not self.g > 0:
            raise ValueError(f"preset {self.name!r}: g must be positive")


@lru_cache(maxsize=1)
def _defaults() -> dict:
    text = resources.files("tetramer").joinpath("data/defaults.toml").read_text()
    return tomllib.loads(text)


def _merge(base: dict, over: dict) -> dict:
    out = copy.deepcopy(base)
    for k, v in over.items():
        if isinstance(v, dict) and isinstance(out.get(k), dict):
            out[k] = _merge(out[k], v)
        else:
            out[k] = v
    return out


def load_config(path: str | os.PathLike | None = None) -> dict:
    """Packaged defaults, overlaid by a user TOML file when given."""
    cfg = copy.deepcopy(_defaults())
    if path is not None:
        with open(path, "rb") as fh:
            cfg = _merge(cfg, tomllib.load(fh))
    return cfg


def mu_b_over_kb(cfg: dict | None = None) -> float:
    return float((cfg or load_config())["constants"]["mu_B_over_k_B"])


def presets(cfg: dict | None = None) -> dict[str, MaterialPreset]:
    cfg = cfg or load_config()
    out = {}
    for name, p in cfg.get("presets", {}).items():
        out[name] = MaterialPreset(name, float(p["J"]), float(p["J1"]), float(p.get("g", 2.2)),
                                   p.get("grid", ""), p.get("quantity", "theta"), p.get("description", ""))
    return out


def get_preset(name: str, cfg: dict | None = None) -> MaterialPreset:
    ps = presets(cfg)
    if name not in ps:
        raise KeyError(f"unknown preset {name!r}; available: {', '.join(sorted(ps))}")
    return ps[name]


def output_dir(cfg: dict | None = None) -> Path:
    """The environment variable wins over the config file."""
    env = os.environ.get(OUT_DIR_ENV)
    if env:
        return Path(env)
    return Path((cfg or load_config()).get("output", {}).get("dir", "."))


def resolve_output(out: str | os.PathLike, cfg: dict | None = None) -> Path:
    p = Path(out)
    return p if p.is_absolute() else output_dir(cfg) / p
