"""Large-scale channel models.

Close-in (CI) free-space-reference path loss anchored at 1 m, lognormal
shadow fading, and the squared distance-based LOS probability model fitted
to dense-urban street canyons.  All functions accept scalars or numpy
arrays and are pure given their inputs; random draws consume an explicit
generator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# The CI model is anchored at the 1 m free-space loss; distances below the
# anchor are outside the model's domain.
REFERENCE_DISTANCE_M = 1.0

# Directional fits from 142 GHz urban-microcell measurements: (PLE, sigma dB)
# for line-of-sight and for the strongest non-line-of-sight direction.
LOS_PLE = 2.1
LOS_SIGMA_DB = 2.8
NLOS_BEST_PLE = 3.1
NLOS_BEST_SIGMA_DB = 8.3


@dataclass(frozen=True)
class PathLossParams:
    """Close-in path loss coefficients for one link class.

    ple is the path loss exponent (10*ple dB per decade of distance);
    shadow_sigma_db is the standard deviation of the zero-mean Gaussian
    large-scale fading term in dB.  reference_distance_m is fixed at 1 m,
    where the model meets free-space loss.
    """

    ple: float
    shadow_sigma_db: float
    reference_distance_m: float = REFERENCE_DISTANCE_M

    def __post_init__(self) -> None:
        if self.ple <= 0:
            raise ValueError(f"ple must be positive, got {self.ple}")
        if self.shadow_sigma_db < 0:
            raise ValueError(f"shadow_sigma_db must be >= 0, got {self.shadow_sigma_db}")
        if self.reference_distance_m != REFERENCE_DISTANCE_M:
            raise ValueError(
                f"reference_distance_m is fixed at {REFERENCE_DISTANCE_M}, "
                f"got {self.reference_distance_m}"
            )


@dataclass(frozen=True)
class LosModelParams:
    """Parameters of the squared LOS probability model.

    Links shorter than near_distance_m (in 2D) are always line-of-sight;
    beyond it the probability decays with scale decay_distance_m.
    """

    near_distance_m: float = 22.0
    decay_distance_m: float = 100.0

    def __post_init__(self) -> None:
        if self.near_distance_m <= 0:
            raise ValueError(f"near_distance_m must be positive, got {self.near_distance_m}")
        if self.decay_distance_m <= 0:
            raise ValueError(f"decay_distance_m must be positive, got {self.decay_distance_m}")


@dataclass(frozen=True)
class LinkRealization:
    """One realized BS-UE link at a fixed carrier.

    total_pl_db is always mean_pl_db + shadow_db; the shadow draw is kept
    separately so scatter statistics can be recovered from stored links.
    """

    d2d_m: float
    d3d_m: float
    los: bool
    shadow_db: float
    mean_pl_db: float
    total_pl_db: float

    def __post_init__(self) -> None:
        if self.d3d_m < self.d2d_m - 1e-9:
            raise ValueError(f"d3d_m ({self.d3d_m}) < d2d_m ({self.d2d_m})")
        if abs(self.total_pl_db - (self.mean_pl_db + self.shadow_db)) > 1e-9:
            raise ValueError("total_pl_db must equal mean_pl_db + shadow_db")


def fspl_1m(fc_ghz):
    """Free-space path loss in dB at 1 m for a carrier given in GHz."""
    fc = np.asarray(fc_ghz, dtype=float)
    if np.any(fc <= 0):
        raise ValueError(f"carrier frequency must be positive, got {fc_ghz}")
    out = 32.4 + 20.0 * np.log10(fc)
    return float(out) if np.isscalar(fc_ghz) else out


def ci_mean_path_loss(fc_ghz, d3d_m, params: PathLossParams, atmospheric_db_per_km: float = 0.0):
    """Mean close-in path loss in dB (no fading) at 3D distance d3d_m.

    Optionally adds a constant absorption term in dB/km.  Distances below
    the 1 m anchor are a domain error: callers must keep drops outside the
    anchor rather than clamping.
    """
    d = np.asarray(d3d_m, dtype=float)
    if np.any(d < params.reference_distance_m):
        raise ValueError(
            f"d3d_m below the {params.reference_distance_m} m reference distance: {d3d_m}"
        )
    pl = fspl_1m(fc_ghz) + 10.0 * params.ple * np.log10(d / params.reference_distance_m)
    if atmospheric_db_per_km:
        pl = pl + atmospheric_db_per_km * d / 1000.0
    return float(pl) if np.isscalar(d3d_m) else pl


def sample_shadow_fading(params: PathLossParams, rng: np.random.Generator, size=None):
    """Zero-mean Gaussian shadow fading draw(s) in dB, i.i.d. per link."""
    return rng.normal(0.0, params.shadow_sigma_db, size=size)


def los_probability(d2d_m, params: LosModelParams):
    """Probability that a link of 2D length d2d_m is line-of-sight.

    Equals 1 for d2d_m <= near_distance_m (and at 0 by continuity), then
    decays monotonically.  The result is clamped to [0, 1].
    """
    d = np.atleast_1d(np.asarray(d2d_m, dtype=float))
    if np.any(d < 0):
        raise ValueError(f"d2d_m must be non-negative, got {d2d_m}")
    # min(d1/d, 1) without dividing by small distances: it is exactly 1 for
    # every d <= d1 (which also covers d = 0 by continuity).
    near = np.ones_like(d)
    far = d > params.near_distance_m
    near[far] = params.near_distance_m / d[far]
    decay = np.exp(-d / params.decay_distance_m)
    p = np.clip((near * (1.0 - decay) + decay) ** 2, 0.0, 1.0)
    return float(p[0]) if np.isscalar(d2d_m) else p.reshape(np.shape(d2d_m))


def sample_los_state(d2d_m, params: LosModelParams, rng: np.random.Generator):
    """Bernoulli LOS draw(s) with success probability los_probability(d2d_m)."""
    p = los_probability(d2d_m, params)
    u = rng.random(size=None if np.isscalar(d2d_m) else np.shape(d2d_m))
    out = u < p
    return bool(out) if np.isscalar(d2d_m) else out
