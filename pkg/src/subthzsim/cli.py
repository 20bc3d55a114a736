"""Command-line interface: run scenarios, render map grids, verify runs.

Subcommands:
  run    --config FILE [--seed N] [--out DIR] [--workers N]
  map    --config FILE --grid METERS --mode snr|sinr [--out DIR]
  report --in DIR

The default output directory is results/<label>, overridable with --out or
the SUBTHZSIM_OUT environment variable (base directory).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from subthzsim.config import ConfigError, ScenarioConfig
from subthzsim.io import (
    CONFIG_FILENAME,
    PER_UE_FILENAME,
    SUMMARY_FILENAME,
    load_config,
    read_per_ue_csv,
    read_summary_json,
    summary_from_dict,
    write_config_json,
    write_map_csv,
    write_per_ue_csv,
    write_summary_json,
)
from subthzsim.simulation import coverage_map, run_scenario
from subthzsim.stats import summarize

OUT_ENV_VAR = "SUBTHZSIM_OUT"


@dataclass
class RunArtifacts:
    """Paths written by a command, plus the resolved configuration."""

    out_dir: Path
    config_path: Path
    per_ue_path: Path | None = None
    summary_path: Path | None = None
    map_paths: list[Path] = field(default_factory=list)
    config: ScenarioConfig | None = None


def _resolve_out_dir(arg_out: str | None, label: str) -> Path:
    if arg_out:
        return Path(arg_out)
    base = os.environ.get(OUT_ENV_VAR, "results")
    return Path(base) / label


def _cmd_run(args: argparse.Namespace) -> RunArtifacts:
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
        cfg.validate()
    out_dir = _resolve_out_dir(args.out, cfg.label)
    out_dir.mkdir(parents=True, exist_ok=True)

    result = run_scenario(cfg, workers=args.workers)
    artifacts = RunArtifacts(out_dir=out_dir, config_path=write_config_json(out_dir / CONFIG_FILENAME, cfg))
    artifacts.per_ue_path = write_per_ue_csv(out_dir / PER_UE_FILENAME, result.outcomes)
    artifacts.summary_path = write_summary_json(out_dir / SUMMARY_FILENAME, result)
    artifacts.config = cfg

    for s in (result.summary_dl, result.summary_ul):
        print(
            f"{s.scenario} {s.direction}: mean {s.mean_se_bps_hz:.3f} | median "
            f"{s.median_se_bps_hz:.3f} | edge {s.edge_se_bps_hz:.4f} bps/Hz | "
            f"uncovered {100 * s.outage_fraction:.1f}% | mean rate {s.mean_rate_bps / 1e9:.3f} Gbps"
        )
    print(f"wrote {artifacts.per_ue_path}, {artifacts.summary_path}")
    return artifacts


def _cmd_map(args: argparse.Namespace) -> RunArtifacts:
    cfg = load_config(args.config)
    out_dir = _resolve_out_dir(args.out, cfg.label)
    out_dir.mkdir(parents=True, exist_ok=True)
    grid = coverage_map(cfg, grid_step_m=args.grid, mode=args.mode)
    artifacts = RunArtifacts(out_dir=out_dir, config_path=write_config_json(out_dir / CONFIG_FILENAME, cfg))
    path = write_map_csv(out_dir / f"map_{args.mode}.csv", grid)
    artifacts.map_paths.append(path)
    artifacts.config = cfg
    print(f"wrote {path} ({grid.values.shape[0]}x{grid.values.shape[1]} grid)")
    return artifacts


def _summaries_equal(a, b) -> bool:
    return a == b


def _cmd_report(args: argparse.Namespace) -> RunArtifacts:
    run_dir = Path(args.in_dir)
    per_ue = run_dir / PER_UE_FILENAME
    summary_path = run_dir / SUMMARY_FILENAME
    outcomes = read_per_ue_csv(per_ue)
    stored = read_summary_json(summary_path)

    bandwidths = {
        "DL": stored["config"]["dl_bandwidth_hz"],
        "UL": stored["config"]["ul_bandwidth_hz"],
    }
    failures = []
    for direction, bandwidth in bandwidths.items():
        subset = [o for o in outcomes if o.direction == direction]
        if not subset:
            failures.append(f"{direction}: no rows in {per_ue}")
            continue
        recomputed = summarize(subset, bandwidth)
        stored_summary = summary_from_dict(stored["summaries"][direction])
        if _summaries_equal(recomputed, stored_summary):
            print(f"{direction}: summary verified ({len(subset)} rows)")
        else:
            failures.append(
                f"{direction}: recomputed summary differs\n  stored:     {stored_summary}\n"
                f"  recomputed: {recomputed}"
            )
    if failures:
        raise RuntimeError("report verification failed:\n" + "\n".join(failures))
    return RunArtifacts(out_dir=run_dir, config_path=run_dir / CONFIG_FILENAME,
                        per_ue_path=per_ue, summary_path=summary_path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subthzsim", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="Monte Carlo run, both directions")
    p_run.add_argument("--config", required=True, help="scenario config JSON")
    p_run.add_argument("--seed", type=int, default=None, help="override the config seed")
    p_run.add_argument("--out", default=None, help="output directory")
    p_run.add_argument("--workers", type=int, default=1, help="evaluation worker threads")
    p_run.set_defaults(func=_cmd_run)

    p_map = sub.add_parser("map", help="deterministic coverage map grid")
    p_map.add_argument("--config", required=True)
    p_map.add_argument("--grid", type=float, required=True, help="grid step in meters")
    p_map.add_argument("--mode", choices=("snr", "sinr"), required=True)
    p_map.add_argument("--out", default=None)
    p_map.set_defaults(func=_cmd_map)

    p_report = sub.add_parser("report", help="recompute and verify a run's summary")
    p_report.add_argument("--in", dest="in_dir", required=True, help="run directory")
    p_report.set_defaults(func=_cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ConfigError, OSError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
