"""Base-station layouts, uniform UE drops, and link geometry."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

BS_HEIGHT_M = 4.0
UE_HEIGHT_M = 1.5
MIN_DROP_DISTANCE_M = 1.0  # keeps every link outside the 1 m path loss anchor

SINGLE_CELL_RADIUS_M = 200.0
SEVEN_CELL_RADIUS_M = 400.0
SEVEN_CELL_RING_M = 200.0


@dataclass(frozen=True)
class Position:
    """A point in meters; z_m is height above ground."""

    x_m: float
    y_m: float
    z_m: float

    def __post_init__(self) -> None:
        if self.z_m < 0:
            raise ValueError(f"z_m must be non-negative, got {self.z_m}")


@dataclass(frozen=True)
class CellLayout:
    bs_positions: tuple[Position, ...]
    coverage_radius_m: float

    @property
    def n_bs(self) -> int:
        return len(self.bs_positions)

    def bs_xyz(self) -> np.ndarray:
        """(n_bs, 3) array of BS coordinates."""
        return np.array([[p.x_m, p.y_m, p.z_m] for p in self.bs_positions])


@dataclass(frozen=True)
class UeDrop:
    """One realization of UE positions; xyz has shape (count, 3)."""

    xyz: np.ndarray = field(repr=False)
    seed: int = 0

    @property
    def count(self) -> int:
        return self.xyz.shape[0]

    def positions(self) -> list[Position]:
        return [Position(float(x), float(y), float(z)) for x, y, z in self.xyz]


def make_layout(
    kind: str,
    ring_radius_m: float = SEVEN_CELL_RING_M,
    coverage_radius_m: float | None = None,
    bs_height_m: float = BS_HEIGHT_M,
) -> CellLayout:
    """Build the BS layout for a scenario.

    "single" puts one BS at the origin (default coverage radius 200 m).
    "seven" adds six BS on a ring at equal 60 degree spacing (default
    coverage radius 400 m); the hexagon side then equals the ring radius.
    """
    if kind == "single":
        positions = (Position(0.0, 0.0, bs_height_m),)
        coverage = SINGLE_CELL_RADIUS_M if coverage_radius_m is None else coverage_radius_m
    elif kind == "seven":
        if ring_radius_m <= 0:
            raise ValueError(f"ring_radius_m must be positive, got {ring_radius_m}")
        positions = [Position(0.0, 0.0, bs_height_m)]
        for k in range(6):
            ang = k * np.pi / 3.0
            positions.append(
                Position(ring_radius_m * float(np.cos(ang)), ring_radius_m * float(np.sin(ang)), bs_height_m)
            )
        positions = tuple(positions)
        coverage = SEVEN_CELL_RADIUS_M if coverage_radius_m is None else coverage_radius_m
    else:
        raise ValueError(f"unknown layout kind: {kind!r} (expected 'single' or 'seven')")
    return CellLayout(bs_positions=positions, coverage_radius_m=coverage)


def drop_ues(
    count: int,
    radius_m: float,
    rng: np.random.Generator,
    layout: CellLayout | None = None,
    min_drop_distance_m: float = MIN_DROP_DISTANCE_M,
    ue_height_m: float = UE_HEIGHT_M,
    seed: int = 0,
) -> UeDrop:
    """Drop UEs area-uniformly on the disk of radius_m centered at the origin.

    Any UE landing within min_drop_distance_m (2D) of a BS is redrawn, so
    link distances always stay outside the path loss anchor.
    """
    if count <= 0:
        raise ValueError(f"count must be positive, got {count}")
    if radius_m <= 0:
        raise ValueError(f"radius_m must be positive, got {radius_m}")

    bs_xy = layout.bs_xyz()[:, :2] if layout is not None else np.zeros((1, 2))

    xyz = np.empty((count, 3))
    xyz[:, 2] = ue_height_m
    pending = np.arange(count)
    while pending.size:
        r = radius_m * np.sqrt(rng.random(pending.size))
        theta = 2.0 * np.pi * rng.random(pending.size)
        xyz[pending, 0] = r * np.cos(theta)
        xyz[pending, 1] = r * np.sin(theta)
        d2 = np.hypot(
            xyz[pending, 0][:, None] - bs_xy[None, :, 0],
            xyz[pending, 1][:, None] - bs_xy[None, :, 1],
        )
        pending = pending[np.min(d2, axis=1) < min_drop_distance_m]
    return UeDrop(xyz=xyz, seed=seed)


def link_geometry(bs: Position, ue: Position) -> tuple[float, float]:
    """(d2d, d3d) separation in meters between two endpoints."""
    d2d = float(np.hypot(bs.x_m - ue.x_m, bs.y_m - ue.y_m))
    d3d = float(np.hypot(d2d, bs.z_m - ue.z_m))
    return d2d, d3d


def pairwise_geometry(bs_xyz: np.ndarray, ue_xyz: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized link geometry: (n_ue, n_bs) arrays of d2d and d3d."""
    dx = ue_xyz[:, None, 0] - bs_xyz[None, :, 0]
    dy = ue_xyz[:, None, 1] - bs_xyz[None, :, 1]
    dz = ue_xyz[:, None, 2] - bs_xyz[None, :, 2]
    d2d = np.hypot(dx, dy)
    d3d = np.hypot(d2d, dz)
    return d2d, d3d
