"""Monte Carlo engine: link realization, association, SINR/SE evaluation,
and deterministic mean-path-loss coverage maps.

Randomness is organized so results are a pure function of the master seed:
each (purpose, drop) pair owns an independent substream, and all draws for
a drop happen in fixed-shape vectorized calls before any per-UE evaluation.
Worker threads only partition the deterministic evaluation, so outputs are
bit-identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from subthzsim.channel import LinkRealization, fspl_1m, los_probability
from subthzsim.config import ScenarioConfig
from subthzsim.deployment import CellLayout, UeDrop, drop_ues, make_layout, pairwise_geometry
from subthzsim.link_budget import db_to_mw, mw_to_db, noise_power_dbm
from subthzsim.stats import (
    COVERAGE_SINR_DB,
    OUTAGE_SINR_DB,
    SeSummary,
    spectral_efficiency,
    summarize,
)

DIRECTION_DL = "DL"
DIRECTION_UL = "UL"

# Coverage maps extend this factor beyond the scenario radius.
MAP_EXTENT_FACTOR = 1.25


@dataclass(frozen=True)
class RngPolicy:
    """Deterministic substream derivation from a master seed.

    The stream for a (purpose, drop) pair depends only on those indices and
    the master seed, never on evaluation order, so any parallel schedule
    reproduces the sequential results exactly.
    """

    master_seed: int

    _PURPOSES = {"positions": 0, "los": 1, "shadow": 2}

    def stream(self, purpose: str, drop: int) -> np.random.Generator:
        code = self._PURPOSES[purpose]
        return np.random.default_rng(np.random.SeedSequence([self.master_seed, code, drop]))


@dataclass(frozen=True)
class LinkMatrix:
    """All BS-UE links of one drop as (n_ue, n_bs) arrays.

    Path loss totals are kept per carrier; LOS states and shadow draws are
    shared between directions because both ride the same physical link.
    """

    d2d_m: np.ndarray
    d3d_m: np.ndarray
    los: np.ndarray
    shadow_db: np.ndarray
    pl_dl_db: np.ndarray
    pl_ul_db: np.ndarray

    @property
    def n_ue(self) -> int:
        return self.d2d_m.shape[0]

    @property
    def n_bs(self) -> int:
        return self.d2d_m.shape[1]

    def link(self, ue: int, bs: int, direction: str = DIRECTION_DL) -> LinkRealization:
        """Materialize one link as a record (mainly for inspection/tests)."""
        total = self.pl_dl_db if direction == DIRECTION_DL else self.pl_ul_db
        shadow = float(self.shadow_db[ue, bs])
        return LinkRealization(
            d2d_m=float(self.d2d_m[ue, bs]),
            d3d_m=float(self.d3d_m[ue, bs]),
            los=bool(self.los[ue, bs]),
            shadow_db=shadow,
            mean_pl_db=float(total[ue, bs]) - shadow,
            total_pl_db=float(total[ue, bs]),
        )


@dataclass(frozen=True)
class UeOutcome:
    """Per-UE result for one direction, on the serving link."""

    scenario: str
    direction: str
    drop: int
    ue_index: int
    x_m: float
    y_m: float
    serving_bs: int
    los: bool
    d2d_m: float
    d3d_m: float
    pl_db: float
    rx_power_dbm: float
    interference_dbm: float | None
    noise_dbm: float
    snr_db: float
    sinr_db: float
    se_bps_hz: float
    covered: bool
    outage: bool


@dataclass(frozen=True)
class ScenarioResult:
    config: ScenarioConfig
    outcomes_dl: list[UeOutcome]
    outcomes_ul: list[UeOutcome]
    summary_dl: SeSummary
    summary_ul: SeSummary

    @property
    def outcomes(self) -> list[UeOutcome]:
        return self.outcomes_dl + self.outcomes_ul


def realize_links(
    layout: CellLayout,
    drop: UeDrop,
    cfg: ScenarioConfig,
    rng: RngPolicy,
    drop_index: int = 0,
) -> LinkMatrix:
    """Realize every BS-UE link of a drop.

    Each link gets an independent Bernoulli LOS state from the 2D distance
    and an independent shadow draw whose sigma follows the LOS state; mean
    path loss uses the LOS-dependent exponent at both carriers.
    """
    d2d, d3d = pairwise_geometry(layout.bs_xyz(), drop.xyz)

    p_los = los_probability(d2d, cfg.los_model)
    los = rng.stream("los", drop_index).random(d2d.shape) < p_los
    sigma = np.where(los, cfg.los_path_loss.shadow_sigma_db, cfg.nlos_path_loss.shadow_sigma_db)
    shadow = rng.stream("shadow", drop_index).standard_normal(d2d.shape) * sigma

    ref = cfg.los_path_loss.reference_distance_m
    if np.any(d3d < ref):
        raise ValueError(f"link distance below the {ref} m path loss anchor")
    ple = np.where(los, cfg.los_path_loss.ple, cfg.nlos_path_loss.ple)
    slope = 10.0 * ple * np.log10(d3d / ref)
    atmo = cfg.atmospheric_db_per_km * d3d / 1000.0
    pl_dl = fspl_1m(cfg.dl_carrier_ghz) + slope + atmo + shadow
    pl_ul = fspl_1m(cfg.ul_carrier_ghz) + slope + atmo + shadow

    return LinkMatrix(d2d_m=d2d, d3d_m=d3d, los=los, shadow_db=shadow, pl_dl_db=pl_dl, pl_ul_db=pl_ul)


def associate(links: LinkMatrix, cfg: ScenarioConfig) -> np.ndarray:
    """Serving BS index per UE.

    "max-power" picks the strongest downlink received power (ties go to the
    lowest BS index); "nearest" picks the smallest 2D distance.
    """
    if cfg.association == "nearest":
        return np.argmin(links.d2d_m, axis=1)
    rx_dl = cfg.bs.eirp_dbm + cfg.ue.antenna_gain_dbi - links.pl_dl_db
    return np.argmax(rx_dl, axis=1)


def _dl_arrays(links: LinkMatrix, serving: np.ndarray, cfg: ScenarioConfig, rows: slice):
    """Downlink signal/interference/noise for a contiguous UE slice, in dBm."""
    pl = links.pl_dl_db[rows]
    srv = serving[rows]
    rx = cfg.bs.eirp_dbm + cfg.ue.antenna_gain_dbi - pl
    idx = np.arange(rx.shape[0])
    signal = rx[idx, srv]
    noise = noise_power_dbm(cfg.dl_bandwidth_hz, cfg.ue.noise_figure_db)
    if links.n_bs == 1:
        return signal, None, noise
    lin = db_to_mw(rx - cfg.interferer_gain_discount_db)
    lin[idx, srv] = 0.0
    interference = mw_to_db(np.sum(lin, axis=1))
    return signal, interference, noise


def _ul_arrays(links: LinkMatrix, serving: np.ndarray, cfg: ScenarioConfig, rows: slice):
    """Uplink signal/interference/noise for a contiguous UE slice, in dBm.

    By default the uplink is noise limited.  With ul_interference_enabled,
    one co-channel UE per other cell (the lowest-indexed UE served by that
    cell, a deterministic but positionally random pick) interferes at the
    serving BS.
    """
    srv = serving[rows]
    idx_local = np.arange(srv.shape[0])
    signal = cfg.ue.eirp_dbm + cfg.bs.antenna_gain_dbi - links.pl_ul_db[rows][idx_local, srv]
    noise = noise_power_dbm(cfg.ul_bandwidth_hz, cfg.bs.noise_figure_db)
    if not cfg.ul_interference_enabled or links.n_bs == 1:
        return signal, None, noise

    # Representative co-channel transmitter per cell, from the global
    # association (computed identically regardless of row partitioning).
    rep = np.full(links.n_bs, -1)
    for bs in range(links.n_bs):
        served = np.nonzero(serving == bs)[0]
        if served.size:
            rep[bs] = served[0]

    interference = np.full(srv.shape[0], np.nan)
    global_index = np.arange(links.n_ue)[rows]
    for i in idx_local:
        s = srv[i]
        total = 0.0
        for bs in range(links.n_bs):
            v = rep[bs]
            if bs == s or v < 0 or v == global_index[i]:
                continue
            p = cfg.ue.eirp_dbm + cfg.bs.antenna_gain_dbi - cfg.interferer_gain_discount_db \
                - links.pl_ul_db[v, s]
            total += float(db_to_mw(p))
        interference[i] = mw_to_db(total) if total > 0 else np.nan
    return signal, interference, noise


def _build_outcomes(
    links: LinkMatrix,
    drop: UeDrop,
    serving: np.ndarray,
    cfg: ScenarioConfig,
    direction: str,
    drop_index: int,
    rows: slice,
) -> list[UeOutcome]:
    if direction == DIRECTION_DL:
        signal, interference, noise = _dl_arrays(links, serving, cfg, rows)
        pl_total = links.pl_dl_db
    else:
        signal, interference, noise = _ul_arrays(links, serving, cfg, rows)
        pl_total = links.pl_ul_db

    srv = serving[rows]
    idx = np.arange(signal.shape[0])
    snr = signal - noise
    if interference is None:
        sinr = snr.copy()
    else:
        # rows whose interference came out empty (NaN) keep sinr == snr
        # exactly rather than round-tripping through the linear domain
        denom = db_to_mw(noise) + np.where(np.isnan(interference), 0.0, db_to_mw(interference))
        sinr = np.where(np.isnan(interference), snr, signal - mw_to_db(denom))

    xy = drop.xyz[rows]
    global_index = np.arange(links.n_ue)[rows]
    outcomes = []
    for i in idx:
        s = int(srv[i])
        inter = None
        if interference is not None and not np.isnan(interference[i]):
            inter = float(interference[i])
        sinr_i = float(sinr[i])
        # scalar mapping per row so stored SE equals the public SINR->SE
        # function applied to the stored SINR, bit for bit
        se_i = spectral_efficiency(sinr_i, cfg.se_cap_bps_hz)
        outcomes.append(
            UeOutcome(
                scenario=cfg.label,
                direction=direction,
                drop=drop_index,
                ue_index=int(global_index[i]),
                x_m=float(xy[i, 0]),
                y_m=float(xy[i, 1]),
                serving_bs=s,
                los=bool(links.los[global_index[i], s]),
                d2d_m=float(links.d2d_m[global_index[i], s]),
                d3d_m=float(links.d3d_m[global_index[i], s]),
                pl_db=float(pl_total[global_index[i], s]),
                rx_power_dbm=float(signal[i]),
                interference_dbm=inter,
                noise_dbm=float(noise),
                snr_db=float(snr[i]),
                sinr_db=sinr_i,
                se_bps_hz=se_i,
                covered=bool(sinr_i >= COVERAGE_SINR_DB),
                outage=bool(sinr_i < OUTAGE_SINR_DB),
            )
        )
    return outcomes


def evaluate_drop(
    links: LinkMatrix,
    drop: UeDrop,
    serving: np.ndarray,
    cfg: ScenarioConfig,
    direction: str,
    drop_index: int = 0,
    workers: int = 1,
) -> list[UeOutcome]:
    """Per-UE outcomes for one direction of one drop.

    With workers > 1 the UE range is split into contiguous slices evaluated
    on a thread pool; results are reassembled in UE order and are identical
    to the sequential output.
    """
    n = links.n_ue
    if workers <= 1 or n < 2 * workers:
        return _build_outcomes(links, drop, serving, cfg, direction, drop_index, slice(0, n))
    bounds = np.linspace(0, n, workers + 1, dtype=int)
    slices = [slice(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(
            pool.map(
                lambda sl: _build_outcomes(links, drop, serving, cfg, direction, drop_index, sl),
                slices,
            )
        )
    return [o for part in parts for o in part]


def run_scenario(cfg: ScenarioConfig, workers: int = 1) -> ScenarioResult:
    """Run the full Monte Carlo scenario: both directions, all drops.

    Deterministic given cfg (including its seed) for any worker count.
    """
    cfg.validate()
    layout = make_layout(
        cfg.layout,
        ring_radius_m=cfg.ring_radius_m,
        coverage_radius_m=cfg.coverage_radius_m,
        bs_height_m=cfg.bs_height_m,
    )
    rng = RngPolicy(cfg.seed)
    outcomes_dl: list[UeOutcome] = []
    outcomes_ul: list[UeOutcome] = []
    for drop_index in range(cfg.num_drops):
        drop = drop_ues(
            cfg.ue_count,
            cfg.coverage_radius_m,
            rng.stream("positions", drop_index),
            layout=layout,
            min_drop_distance_m=cfg.min_drop_distance_m,
            ue_height_m=cfg.ue_height_m,
            seed=cfg.seed,
        )
        links = realize_links(layout, drop, cfg, rng, drop_index)
        serving = associate(links, cfg)
        outcomes_dl += evaluate_drop(links, drop, serving, cfg, DIRECTION_DL, drop_index, workers)
        outcomes_ul += evaluate_drop(links, drop, serving, cfg, DIRECTION_UL, drop_index, workers)
    return ScenarioResult(
        config=cfg,
        outcomes_dl=outcomes_dl,
        outcomes_ul=outcomes_ul,
        summary_dl=summarize(outcomes_dl, cfg.dl_bandwidth_hz),
        summary_ul=summarize(outcomes_ul, cfg.ul_bandwidth_hz),
    )


@dataclass(frozen=True)
class CoverageGrid:
    """Regular map grid of dB values; values[i, j] sits at (x[j], y[i])."""

    x: np.ndarray
    y: np.ndarray
    values: np.ndarray
    mode: str


def map_field_db(cfg: ScenarioConfig, x_m: np.ndarray, y_m: np.ndarray, mode: str) -> np.ndarray:
    """Downlink SNR or SINR in dB at arbitrary points, from mean path loss.

    Every link uses the worst-case non-LOS exponent with no fading and no
    LOS draw; the serving BS is the strongest (equivalently the nearest).
    SINR counts the remaining BS as interferers with the configured gain
    discount.
    """
    if mode not in ("snr", "sinr"):
        raise ValueError(f"mode must be 'snr' or 'sinr', got {mode!r}")
    layout = make_layout(
        cfg.layout,
        ring_radius_m=cfg.ring_radius_m,
        coverage_radius_m=cfg.coverage_radius_m,
        bs_height_m=cfg.bs_height_m,
    )
    pts = np.stack(
        [np.asarray(x_m, dtype=float), np.asarray(y_m, dtype=float),
         np.full(np.shape(x_m), cfg.ue_height_m)],
        axis=-1,
    ).reshape(-1, 3)
    _, d3d = pairwise_geometry(layout.bs_xyz(), pts)
    # Grid nodes may fall on top of a BS; the vertical offset keeps d3d at
    # or above the model anchor for any sane height settings.
    pl = fspl_1m(cfg.dl_carrier_ghz) + 10.0 * cfg.nlos_path_loss.ple * np.log10(d3d) \
        + cfg.atmospheric_db_per_km * d3d / 1000.0
    rx = cfg.bs.eirp_dbm + cfg.ue.antenna_gain_dbi - pl
    noise = noise_power_dbm(cfg.dl_bandwidth_hz, cfg.ue.noise_figure_db)
    signal = np.max(rx, axis=1)
    if mode == "snr" or layout.n_bs == 1:
        out = signal - noise
    else:
        idx = np.arange(rx.shape[0])
        lin = db_to_mw(rx - cfg.interferer_gain_discount_db)
        lin[idx, np.argmax(rx, axis=1)] = 0.0
        out = signal - mw_to_db(db_to_mw(noise) + np.sum(lin, axis=1))
    return out.reshape(np.shape(x_m))


def coverage_map(cfg: ScenarioConfig, grid_step_m: float, mode: str = "snr") -> CoverageGrid:
    """Deterministic coverage map on a square grid.

    The grid spans MAP_EXTENT_FACTOR times the scenario radius on both
    axes, inclusive of the extremes.
    """
    if grid_step_m <= 0:
        raise ValueError(f"grid_step_m must be positive, got {grid_step_m}")
    half = MAP_EXTENT_FACTOR * cfg.coverage_radius_m
    ticks = np.arange(-half, half + grid_step_m / 2.0, grid_step_m)
    gx, gy = np.meshgrid(ticks, ticks)
    values = map_field_db(cfg, gx, gy, mode)
    return CoverageGrid(x=ticks, y=ticks.copy(), values=values, mode=mode)
