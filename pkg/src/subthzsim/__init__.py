"""System-level Monte Carlo simulator for sub-THz urban-microcell deployments.

Single-cell and 7-cell layouts, downlink and uplink, close-in path loss with
lognormal shadowing, distance-based LOS probability, SINR with inter-cell
interference, and Shannon spectral efficiency statistics.
"""

from subthzsim.channel import (
    LinkRealization,
    LosModelParams,
    PathLossParams,
    ci_mean_path_loss,
    fspl_1m,
    los_probability,
    sample_los_state,
    sample_shadow_fading,
)
from subthzsim.config import ScenarioConfig, preset, PRESET_NAMES
from subthzsim.deployment import CellLayout, Position, UeDrop, drop_ues, link_geometry, make_layout
from subthzsim.link_budget import RadioEndpoint, noise_power_dbm, received_power_dbm, sinr_db
from subthzsim.simulation import (
    CoverageGrid,
    LinkMatrix,
    RngPolicy,
    ScenarioResult,
    UeOutcome,
    associate,
    coverage_map,
    realize_links,
    run_scenario,
)
from subthzsim.stats import Cdf, SeSummary, build_cdf, spectral_efficiency, summarize

__version__ = "0.1.0"

__all__ = [
    "Cdf",
    "CellLayout",
    "CoverageGrid",
    "LinkMatrix",
    "LinkRealization",
    "LosModelParams",
    "PathLossParams",
    "Position",
    "PRESET_NAMES",
    "RadioEndpoint",
    "RngPolicy",
    "ScenarioConfig",
    "ScenarioResult",
    "SeSummary",
    "UeDrop",
    "UeOutcome",
    "associate",
    "build_cdf",
    "ci_mean_path_loss",
    "coverage_map",
    "drop_ues",
    "fspl_1m",
    "link_geometry",
    "los_probability",
    "make_layout",
    "noise_power_dbm",
    "preset",
    "realize_links",
    "received_power_dbm",
    "run_scenario",
    "sample_los_state",
    "sample_shadow_fading",
    "sinr_db",
    "spectral_efficiency",
    "summarize",
]
