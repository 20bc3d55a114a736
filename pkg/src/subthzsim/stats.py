"""SINR-to-SE mapping, summary statistics, and empirical CDFs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

if TYPE_CHECKING:
    from subthzsim.simulation import UeOutcome

LN2 = np.log(2.0)

# Summary thresholds in dB: below 0 a UE is out of coverage, below -10 it
# is in outage.
COVERAGE_SINR_DB = 0.0
OUTAGE_SINR_DB = -10.0
EDGE_PERCENTILE = 5.0


def spectral_efficiency(sinr_db, cap_bps_hz: float | None = None):
    """Shannon spectral efficiency log2(1 + SINR) in bps/Hz.

    Accepts dB scalars or arrays; an optional cap models a practical
    modulation ceiling.  The result is never negative and tends to 0 as
    SINR falls.
    """
    se = np.log1p(10.0 ** (np.asarray(sinr_db, dtype=float) / 10.0)) / LN2
    if cap_bps_hz is not None:
        se = np.minimum(se, cap_bps_hz)
    return float(se) if np.isscalar(sinr_db) else se


@dataclass(frozen=True)
class SeSummary:
    """Spectral-efficiency summary for one scenario and direction."""

    scenario: str
    direction: str
    n_ue: int
    mean_se_bps_hz: float
    median_se_bps_hz: float
    edge_se_bps_hz: float
    outage_fraction: float
    mean_rate_bps: float
    edge_rate_bps: float


def summarize(outcomes: Sequence["UeOutcome"], bandwidth_hz: float) -> SeSummary:
    """Mean/median/5th-percentile SE, uncovered fraction, and data rates.

    outage_fraction counts UEs below 0 dB SINR (out of coverage).  The edge
    percentile uses linear interpolation between closest ranks.  Rates are
    the SE statistics scaled by the bandwidth.
    """
    if not outcomes:
        raise ValueError("summarize requires at least one outcome")
    # Sorting first makes every statistic (including the mean's float
    # reduction) bit-identical under permutation of the input.
    se = np.sort(np.array([o.se_bps_hz for o in outcomes]))
    sinr = np.array([o.sinr_db for o in outcomes])
    mean_se = float(np.mean(se))
    edge_se = float(np.percentile(se, EDGE_PERCENTILE))
    return SeSummary(
        scenario=outcomes[0].scenario,
        direction=outcomes[0].direction,
        n_ue=len(outcomes),
        mean_se_bps_hz=mean_se,
        median_se_bps_hz=float(np.median(se)),
        edge_se_bps_hz=edge_se,
        outage_fraction=float(np.mean(sinr < COVERAGE_SINR_DB)),
        mean_rate_bps=mean_se * bandwidth_hz,
        edge_rate_bps=edge_se * bandwidth_hz,
    )


@dataclass(frozen=True)
class Cdf:
    """Empirical CDF: sorted sample values with cumulative probabilities."""

    values: np.ndarray
    probs: np.ndarray

    def evaluate(self, x: float) -> float:
        """P(X <= x) under the empirical distribution."""
        return float(np.searchsorted(self.values, x, side="right")) / len(self.values)

    def quantile(self, p: float) -> float:
        """Value at cumulative probability p (linear interpolation)."""
        return float(np.percentile(self.values, 100.0 * p))


def build_cdf(values: Iterable[float]) -> Cdf:
    """Empirical CDF of the samples; invariant under input permutation."""
    arr = np.sort(np.asarray(list(values), dtype=float))
    if arr.size == 0:
        raise ValueError("build_cdf requires at least one value")
    probs = np.arange(1, arr.size + 1, dtype=float) / arr.size
    return Cdf(values=arr, probs=probs)
