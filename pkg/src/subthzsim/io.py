"""File formats: per-UE CSV, summary JSON, map-grid CSV, config loading.

Numbers are serialized in shortest round-trip decimal form so that parsing
an emitted file reproduces the original floats exactly and repeated runs
with the same config and seed emit byte-identical files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict
from pathlib import Path

import numpy as np

from subthzsim.config import ConfigError, ScenarioConfig, config_from_dict
from subthzsim.simulation import CoverageGrid, ScenarioResult, UeOutcome
from subthzsim.stats import SeSummary

PER_UE_COLUMNS = (
    "scenario",
    "direction",
    "drop",
    "ue_index",
    "x_m",
    "y_m",
    "serving_bs",
    "los",
    "d2d_m",
    "d3d_m",
    "pl_db",
    "rx_dbm",
    "interference_dbm",
    "noise_dbm",
    "snr_db",
    "sinr_db",
    "se_bps_hz",
    "covered",
    "outage",
)

PER_UE_FILENAME = "per_ue.csv"
SUMMARY_FILENAME = "summary.json"
CONFIG_FILENAME = "config.json"


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _outcome_row(o: UeOutcome) -> list[str]:
    return [
        o.scenario,
        o.direction,
        _fmt(o.drop),
        _fmt(o.ue_index),
        _fmt(o.x_m),
        _fmt(o.y_m),
        _fmt(o.serving_bs),
        _fmt(o.los),
        _fmt(o.d2d_m),
        _fmt(o.d3d_m),
        _fmt(o.pl_db),
        _fmt(o.rx_power_dbm),
        _fmt(o.interference_dbm),
        _fmt(o.noise_dbm),
        _fmt(o.snr_db),
        _fmt(o.sinr_db),
        _fmt(o.se_bps_hz),
        _fmt(o.covered),
        _fmt(o.outage),
    ]


def write_per_ue_csv(path: str | Path, outcomes: list[UeOutcome]) -> Path:
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(PER_UE_COLUMNS)
        for o in outcomes:
            writer.writerow(_outcome_row(o))
    return path


def _parse_bool(s: str, row_number: int, column: str) -> bool:
    if s == "true":
        return True
    if s == "false":
        return False
    raise ValueError(f"row {row_number}: column {column!r} has non-boolean value {s!r}")


def read_per_ue_csv(path: str | Path) -> list[UeOutcome]:
    """Parse a per-UE file back into outcome records (exact floats)."""
    outcomes = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header) != PER_UE_COLUMNS:
            raise ValueError(f"{path}: unexpected per-UE CSV header: {header}")
        for n, row in enumerate(reader, start=2):
            if len(row) != len(PER_UE_COLUMNS):
                raise ValueError(f"{path}: row {n} has {len(row)} fields, expected {len(PER_UE_COLUMNS)}")
            outcomes.append(
                UeOutcome(
                    scenario=row[0],
                    direction=row[1],
                    drop=int(row[2]),
                    ue_index=int(row[3]),
                    x_m=float(row[4]),
                    y_m=float(row[5]),
                    serving_bs=int(row[6]),
                    los=_parse_bool(row[7], n, "los"),
                    d2d_m=float(row[8]),
                    d3d_m=float(row[9]),
                    pl_db=float(row[10]),
                    rx_power_dbm=float(row[11]),
                    interference_dbm=float(row[12]) if row[12] else None,
                    noise_dbm=float(row[13]),
                    snr_db=float(row[14]),
                    sinr_db=float(row[15]),
                    se_bps_hz=float(row[16]),
                    covered=_parse_bool(row[17], n, "covered"),
                    outage=_parse_bool(row[18], n, "outage"),
                )
            )
    return outcomes


def summary_to_dict(result: ScenarioResult) -> dict:
    return {
        "seed": result.config.seed,
        "config": result.config.to_dict(),
        "summaries": {
            "DL": asdict(result.summary_dl),
            "UL": asdict(result.summary_ul),
        },
    }


def write_summary_json(path: str | Path, result: ScenarioResult) -> Path:
    path = Path(path)
    with open(path, "w", newline="") as fh:
        json.dump(summary_to_dict(result), fh, indent=2)
        fh.write("\n")
    return path


def read_summary_json(path: str | Path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def summary_from_dict(d: dict) -> SeSummary:
    return SeSummary(**d)


def write_config_json(path: str | Path, cfg: ScenarioConfig) -> Path:
    path = Path(path)
    with open(path, "w", newline="") as fh:
        json.dump(cfg.to_dict(), fh, indent=2)
        fh.write("\n")
    return path


def load_config(path: str | Path) -> ScenarioConfig:
    """Load and validate a scenario config file (JSON, optional preset key)."""
    path = Path(path)
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data)


def write_map_csv(path: str | Path, grid: CoverageGrid) -> Path:
    """Map grid as CSV: header row carries x coordinates, first column y."""
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([""] + [_fmt(float(x)) for x in grid.x])
        for i, y in enumerate(grid.y):
            writer.writerow([_fmt(float(y))] + [_fmt(float(v)) for v in grid.values[i]])
    return path


def read_map_csv(path: str | Path, mode: str = "snr") -> CoverageGrid:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header or header[0] != "":
            raise ValueError(f"{path}: map CSV must start with an empty corner cell")
        x = np.array([float(v) for v in header[1:]])
        ys, rows = [], []
        for row in reader:
            ys.append(float(row[0]))
            rows.append([float(v) for v in row[1:]])
    return CoverageGrid(x=x, y=np.array(ys), values=np.array(rows), mode=mode)
