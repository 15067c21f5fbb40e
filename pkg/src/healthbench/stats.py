"""Weighted and raw distribution machinery: kernel-smoothed densities,
modes, and percentile thresholds on the 1-10 health scale.

Percentiles follow the left-continuous inverse weighted CDF (smallest value
whose cumulative normalized weight reaches p), chosen for exact brute-force
testability. The density uses a Gaussian kernel with a weighted Silverman
bandwidth; no boundary correction is applied at the scale edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptySegmentError

GRID_SIZE = 512
SCALE_LO = 1.0
SCALE_HI = 10.0
BANDWIDTH_FLOOR = 0.05

_GRID = np.linspace(SCALE_LO, SCALE_HI, GRID_SIZE)
_NORM = 1.0 / math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class Sample:
    """Health values with positive weights (1 for raw mode, SLoC for weighted)."""

    values: tuple[float, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if len(self.values) != len(self.weights):
            raise ValueError("values and weights must have equal length")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        if any(not (SCALE_LO <= v <= SCALE_HI) for v in self.values):
            raise ValueError(f"values must lie in [{SCALE_LO}, {SCALE_HI}]")

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class DensityCurve:
    grid: tuple[float, ...]
    density: tuple[float, ...]
    bandwidth: float
    n: int
    mode: float | None = None
    p10: float | None = None
    p90: float | None = None

    def mass(self) -> float:
        """Trapezoidal integral of the density over the grid."""
        return float(np.trapezoid(np.asarray(self.density), np.asarray(self.grid)))

    def table(self) -> str:
        """Two-column plot-ready text table: grid point, density."""
        return "\n".join(f"{g:.6f}\t{d:.12g}" for g, d in zip(self.grid, self.density))


def cumulative_percentile(values, weights, p: float) -> float:
    """Smallest value whose cumulative normalized weight reaches p.

    Runs in plain sequential float arithmetic so an independent cumulative
    scan reproduces it bit-for-bit.
    """
    if not 0.0 < p < 1.0:
        raise ValueError("p must be in (0, 1)")
    pairs = sorted(zip(values, weights), key=lambda vw: vw[0])
    if not pairs:
        raise ValueError("empty sample")
    total = 0.0
    for _, w in pairs:
        total += w
    cum = 0.0
    for v, w in pairs:
        cum += w
        if cum / total >= p:
            return v
    return pairs[-1][0]


def weighted_percentile(sample: Sample, p: float) -> float:
    return cumulative_percentile(sample.values, sample.weights, p)


def _weighted_bandwidth(sample: Sample) -> float:
    values = np.asarray(sample.values)
    weights = np.asarray(sample.weights)
    wsum = float(weights.sum())
    wn = weights / wsum
    mean = float(wn @ values)
    sigma = math.sqrt(float(wn @ (values - mean) ** 2))
    iqr = cumulative_percentile(sample.values, sample.weights, 0.75) - cumulative_percentile(
        sample.values, sample.weights, 0.25
    )
    spread = min(sigma, iqr / 1.34)
    n_eff = wsum * wsum / float(weights @ weights)
    return max(0.9 * spread * n_eff ** (-0.2), BANDWIDTH_FLOOR)


def kde(sample: Sample) -> DensityCurve:
    """Gaussian-kernel density of the sample on the fixed 512-point grid."""
    if len(sample) == 0:
        raise EmptySegmentError("empty segment")
    h = _weighted_bandwidth(sample)
    values = np.asarray(sample.values)
    weights = np.asarray(sample.weights)
    wn = weights / weights.sum()
    u = (_GRID[:, None] - values[None, :]) / h
    density = (np.exp(-0.5 * u * u) @ wn) * (_NORM / h)
    return DensityCurve(
        grid=tuple(float(g) for g in _GRID),
        density=tuple(float(d) for d in density),
        bandwidth=h,
        n=len(sample),
    )


def find_mode(curve: DensityCurve) -> float:
    """Grid point of maximum density; ties break toward the smaller point."""
    return curve.grid[int(np.argmax(np.asarray(curve.density)))]


def summarize(sample: Sample) -> DensityCurve:
    """Full curve: density plus mode and the laggard/leader thresholds."""
    if len(sample) == 0:
        raise EmptySegmentError("empty segment")
    curve = kde(sample)
    return DensityCurve(
        grid=curve.grid,
        density=curve.density,
        bandwidth=curve.bandwidth,
        n=curve.n,
        mode=find_mode(curve),
        p10=weighted_percentile(sample, 0.1),
        p90=weighted_percentile(sample, 0.9),
    )
