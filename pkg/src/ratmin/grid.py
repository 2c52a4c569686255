"""Discretizations of the approximation interval and interval normalization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Grid", "IntervalMap", "chebyshev_nodes", "uniform_nodes"]


@dataclass(frozen=True, eq=False)
class Grid:
    """Ordered sample points t_1 < ... < t_N inside an interval [c, d]."""

    nodes: np.ndarray
    interval: tuple[float, float]

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        c, d = (float(self.interval[0]), float(self.interval[1]))
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "interval", (c, d))
        if not (np.isfinite(c) and np.isfinite(d)) or c >= d:
            raise ValueError(f"invalid interval [{c}, {d}]")
        if nodes.ndim != 1 or nodes.size == 0:
            raise ValueError("grid needs at least one node")
        if not np.all(np.isfinite(nodes)):
            raise ValueError("grid nodes must be finite")
        if np.any(np.diff(nodes) <= 0):
            raise ValueError("grid nodes must be strictly increasing")
        if nodes[0] < c or nodes[-1] > d:
            raise ValueError("grid nodes fall outside the interval")

    def __len__(self) -> int:
        return self.nodes.size


@dataclass(frozen=True)
class IntervalMap:
    """Affine map between [c, d] and the normalized interval [-1, 1].

    All basis evaluation happens in normalized coordinates; the map is kept
    with every fit so results can be evaluated back in original coordinates.
    For (c, d) == (-1, 1) both directions are exact identities.
    """

    c: float
    d: float

    def to_unit(self, t):
        return (2.0 * np.asarray(t, dtype=float) - (self.c + self.d)) / (self.d - self.c)

    def from_unit(self, s):
        return (np.asarray(s, dtype=float) * (self.d - self.c) + (self.c + self.d)) / 2.0

    def to_dict(self) -> dict:
        return {"interval": [self.c, self.d], "mapped_interval": [-1.0, 1.0]}


def chebyshev_nodes(c: float, d: float, count: int) -> Grid:
    """Chebyshev nodes cos(pi*(2l-1)/(2N)), l = 1..N, mapped to [c, d], ascending.

    Built through the sine identity sin(pi*j/(2N)) with j = -(N-1), -(N-3), ...
    so the node set is exactly symmetric about the interval midpoint in
    floating point.
    """
    if c >= d:
        raise ValueError(f"invalid interval [{c}, {d}]")
    if count < 1:
        raise ValueError("need at least one node")
    j = np.arange(-(count - 1), count, 2, dtype=float)
    unit = np.sin(np.pi * j / (2 * count))
    mid = (c + d) / 2.0
    half = (d - c) / 2.0
    return Grid(mid + half * unit, (c, d))


def uniform_nodes(c: float, d: float, count: int) -> Grid:
    """Equispaced nodes including both endpoints."""
    if c >= d:
        raise ValueError(f"invalid interval [{c}, {d}]")
    if count < 2:
        raise ValueError("need at least two nodes")
    return Grid(np.linspace(c, d, count), (c, d))
