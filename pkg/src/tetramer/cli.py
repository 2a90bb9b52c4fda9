"""Command-line front end: ``tetramer <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys

from . import __version__
from .config import load_config, resolve_output
from .measures import EDGE_THRESHOLD
from .scan import (QUANTITIES, STATE_POINTS, ScanSpec, grid_to_json, material_grid_spec, parse_grid, run_gs_map,
                   run_material_map, run_monogamy, run_point, run_thermal_map, write_csv, write_json)
from .verify import run_verify

DEFAULT_GRIDS = {
    "gs-map": "J1_over_absJ:-3:3:121,h_over_absJ:0:8:161",
    "thermal-map": "kT_over_J:0:3:121,h_over_absJ:0:6:121",
}


def _beta(args) -> float:
    if args.beta is not None and args.temp is not None:
        raise SystemExit("give either --beta or --temp, not both")
    if args.temp is not None:
        if args.temp < 0:
            raise SystemExit("--temp must be nonnegative")
        return math.inf if args.temp == 0 else 1.0 / args.temp
    if args.beta is not None:
        if args.beta < 0:
            raise SystemExit("--beta must be nonnegative")
        return args.beta
    return math.inf


def _common(p: argparse.ArgumentParser, grid: bool = False):
    p.add_argument("--J", type=float, default=None, help="intra-dimer coupling")
    p.add_argument("--J1", type=float, default=None, help="inter-dimer coupling")
    p.add_argument("--h", type=float, default=None, help="magnetic field (energy units)")
    t = p.add_mutually_exclusive_group()
    t.add_argument("--beta", type=float, default=None, help="inverse temperature; inf for the ground state")
    t.add_argument("--temp", type=float, default=None, help="temperature; 0 for the ground state")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--out", default=None, help="output file; relative paths go under the output directory")
    p.add_argument("--config", default=None, help="TOML file overriding packaged constants and presets")
    if grid:
        p.add_argument("--grid", default=None, help="X:min:max:steps,Y:min:max:steps")
        p.add_argument("--quantity", default=None, choices=sorted(QUANTITIES))
        p.add_argument("--threshold", type=float, default=EDGE_THRESHOLD)
        p.add_argument("--jobs", type=int, default=1, help="parallel workers (rows)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tetramer", description="Entanglement scans for a mixed spin-(1/2,1) tetramer.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    _common(sub.add_parser("gs-map", help="ground-state map over J1/|J| and h/|J|"), grid=True)
    p = sub.add_parser("thermal-map", help="thermal map over kT/J and h/J at fixed J1/J")
    _common(p, grid=True)
    p.add_argument("--isovalues", action="store_true", help="extract contour levels 0.1..1.0")
    p = sub.add_parser("material-map", help="map over T [K] and B [T] for a material preset")
    _common(p, grid=True)
    p.add_argument("--preset", default="a")
    p.add_argument("--g", type=float, default=None, help="override the preset g-factor")
    p = sub.add_parser("monogamy", help="CKW and pair-vs-pair monogamy table")
    _common(p)
    p.add_argument("--state", default=None, choices=sorted(STATE_POINTS))
    _common(sub.add_parser("point", help="full report at one parameter point"))
    p = sub.add_parser("verify", help="closed-form vs numerical sweep")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--config", default=None)
    return ap


def _write_rows_csv(doc: dict, path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["id", "lhs", "rhs", "slack"])
        for r in doc["rows"]:
            w.writerow([r["id"], repr(r["lhs"]), repr(r["rhs"]), repr(r["slack"])])
    meta = path.with_name(path.name + ".meta.json")
    meta.write_text(json.dumps({"params": doc["params"], "version": doc["version"]}, indent=2, sort_keys=True) + "\n")
    print(path)
    print(meta)


def _emit(doc: dict, args, cfg) -> None:
    if getattr(args, "format", None) == "csv":
        if "rows" not in doc:
            raise ValueError("csv output is only available for grids and monogamy tables")
        if not args.out:
            raise ValueError("csv output needs --out")
        _write_rows_csv(doc, resolve_output(args.out, cfg))
    elif args.out:
        path = write_json(doc, resolve_output(args.out, cfg))
        print(path)
    else:
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")


def _emit_grid(grid, args, cfg) -> None:
    fmt = args.format or cfg.get("output", {}).get("format", "csv")
    out = args.out or f"{grid.spec.mode}.{fmt}"
    path = resolve_output(out, cfg)
    if fmt == "csv":
        for p in write_csv(grid, path):
            print(p)
    else:
        print(write_json(grid_to_json(grid), path))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    cfg = load_config(args.config)
    try:
        return _dispatch(args, cfg)
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args, cfg) -> int:
    if args.cmd == "verify":
        rep = run_verify(args.points, args.seed)
        _emit(rep.as_dict(), args, cfg)
        return 0 if rep.passed else 1

    if args.cmd in ("gs-map", "thermal-map"):
        x, y = parse_grid(args.grid or DEFAULT_GRIDS[args.cmd])
        J = 1.0 if args.J is None else args.J
        params = {"J": J}
        if args.cmd == "thermal-map":
            params["J1_over_J"] = 1.0 if args.J1 is None else args.J1 / J
        spec = ScanSpec(args.cmd, x, y, params, args.quantity or "theta", args.threshold)
        grid = (run_gs_map(spec, args.jobs) if args.cmd == "gs-map"
                else run_thermal_map(spec, args.jobs, isovalues=args.isovalues or None))
        _emit_grid(grid, args, cfg)
        return 0

    if args.cmd == "material-map":
        spec = material_grid_spec(args.preset, args.quantity, args.grid, args.threshold, cfg)
        over = {k: v for k, v in (("J", args.J), ("J1", args.J1), ("g", args.g)) if v is not None}
        if over:
            spec = ScanSpec(spec.mode, spec.x, spec.y, {**spec.params, **over}, spec.quantity, spec.threshold)
        grid = run_material_map(spec, args.jobs, cfg)
        _emit_grid(grid, args, cfg)
        print(json.dumps(grid.extras["thresholds"], sort_keys=True), file=sys.stderr)
        return 0

    beta = _beta(args)
    if args.cmd == "monogamy":
        doc = run_monogamy(args.J, args.J1, args.h, beta, args.state)
    else:
        missing = [n for n in ("J", "J1", "h") if getattr(args, n) is None]
        if missing:
            raise ValueError(f"point needs --{', --'.join(missing)}")
        doc = run_point(args.J, args.J1, args.h, beta)
    _emit(doc, args, cfg)
    return 0


if __name__ == "__main__":
    sys.exit(main())
