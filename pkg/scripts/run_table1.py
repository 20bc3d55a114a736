#!/usr/bin/env python3
"""Run both named scenarios end to end and print the headline statistics.

Writes per-UE CSVs, summary JSONs, and SNR/SINR map grids under results/
(override with --out), then prints a compact comparison table.
"""

import argparse
from pathlib import Path

from subthzsim.config import preset
from subthzsim.io import write_config_json, write_map_csv, write_per_ue_csv, write_summary_json
from subthzsim.simulation import coverage_map, run_scenario


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results", help="output base directory")
    parser.add_argument("--seed", type=int, default=None, help="override preset seeds")
    parser.add_argument("--ue-count", type=int, default=None,
                        help="override UE counts (default: 250 single / 1000 seven)")
    parser.add_argument("--grid", type=float, default=5.0, help="map grid step in meters")
    args = parser.parse_args()

    rows = []
    for name in ("table1-single", "table1-seven"):
        cfg = preset(name)
        if args.seed is not None:
            cfg.seed = args.seed
        if args.ue_count is not None:
            cfg.ue_count = args.ue_count
        out_dir = Path(args.out) / name
        out_dir.mkdir(parents=True, exist_ok=True)

        result = run_scenario(cfg)
        write_config_json(out_dir / "config.json", cfg)
        write_per_ue_csv(out_dir / "per_ue.csv", result.outcomes)
        write_summary_json(out_dir / "summary.json", result)
        mode = "snr" if cfg.layout == "single" else "sinr"
        write_map_csv(out_dir / f"map_{mode}.csv", coverage_map(cfg, args.grid, mode))
        rows += [result.summary_dl, result.summary_ul]
        print(f"wrote {out_dir}/")

    print()
    print(f"{'scenario':<16} {'dir':<3} {'mean':>6} {'median':>7} {'edge':>7} "
          f"{'uncov%':>7} {'mean rate':>10}")
    for s in rows:
        rate = f"{s.mean_rate_bps / 1e9:.3f} Gbps" if s.mean_rate_bps >= 1e9 \
            else f"{s.mean_rate_bps / 1e6:.0f} Mbps"
        print(f"{s.scenario:<16} {s.direction:<3} {s.mean_se_bps_hz:>6.3f} "
              f"{s.median_se_bps_hz:>7.3f} {s.edge_se_bps_hz:>7.4f} "
              f"{100 * s.outage_fraction:>7.2f} {rate:>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
