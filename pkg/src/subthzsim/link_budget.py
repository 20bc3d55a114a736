"""Received power, thermal noise, and SNR/SINR in dB domain."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

THERMAL_NOISE_DBM_PER_HZ = -174.0


@dataclass(frozen=True)
class RadioEndpoint:
    """Transmit power, antenna gain, and receiver noise figure of one side."""

    tx_power_dbm: float
    antenna_gain_dbi: float
    noise_figure_db: float

    def __post_init__(self) -> None:
        if self.noise_figure_db < 0:
            raise ValueError(f"noise_figure_db must be >= 0, got {self.noise_figure_db}")

    @property
    def eirp_dbm(self) -> float:
        return self.tx_power_dbm + self.antenna_gain_dbi


@dataclass(frozen=True)
class LinkBudgetResult:
    rx_power_dbm: float
    noise_dbm: float
    interference_dbm: float | None
    snr_db: float
    sinr_db: float


def db_to_mw(db):
    return 10.0 ** (np.asarray(db, dtype=float) / 10.0)


def mw_to_db(mw):
    return 10.0 * np.log10(mw)


def received_power_dbm(tx: RadioEndpoint, rx_gain_dbi: float, total_pl_db):
    """Link-budget received power: Pt + Gtx + Grx - PL."""
    return tx.eirp_dbm + rx_gain_dbi - total_pl_db


def noise_power_dbm(bandwidth_hz: float, noise_figure_db: float) -> float:
    """Thermal noise floor over bandwidth_hz, raised by the noise figure."""
    if bandwidth_hz <= 0:
        raise ValueError(f"bandwidth_hz must be positive, got {bandwidth_hz}")
    return THERMAL_NOISE_DBM_PER_HZ + 10.0 * np.log10(bandwidth_hz) + noise_figure_db


def sinr_db(signal_dbm: float, interferers_dbm: Sequence[float], noise_dbm: float) -> float:
    """SINR with interferer powers summed in linear (mW) domain.

    With no interferers this reduces exactly to signal - noise, so SNR and
    SINR are identical floats in the interference-free case.
    """
    interferers = np.asarray(interferers_dbm, dtype=float)
    if interferers.size == 0:
        return float(signal_dbm - noise_dbm)
    denom = float(np.sum(db_to_mw(interferers))) + float(db_to_mw(noise_dbm))
    return float(signal_dbm - mw_to_db(denom))


def evaluate_link(
    tx: RadioEndpoint,
    rx_gain_dbi: float,
    total_pl_db: float,
    noise_dbm: float,
    interferers_dbm: Sequence[float] = (),
) -> LinkBudgetResult:
    """Full budget for one link: received power, SNR, and SINR."""
    rx = float(received_power_dbm(tx, rx_gain_dbi, total_pl_db))
    snr = rx - noise_dbm
    interferers = np.asarray(interferers_dbm, dtype=float)
    if interferers.size == 0:
        return LinkBudgetResult(rx, noise_dbm, None, snr, snr)
    interference = float(mw_to_db(np.sum(db_to_mw(interferers))))
    return LinkBudgetResult(rx, noise_dbm, interference, snr, sinr_db(rx, interferers, noise_dbm))


def snr_limited_path_loss_db(tx: RadioEndpoint, rx_gain_dbi: float, noise_dbm: float) -> float:
    """Largest total path loss that still yields SNR >= 0 dB."""
    return tx.eirp_dbm + rx_gain_dbi - noise_dbm


def ci_distance_for_path_loss_m(total_pl_db: float, fc_ghz: float, ple: float) -> float:
    """Invert the mean close-in model: distance at which mean PL reaches total_pl_db."""
    from subthzsim.channel import fspl_1m

    return float(10.0 ** ((total_pl_db - fspl_1m(fc_ghz)) / (10.0 * ple)))
