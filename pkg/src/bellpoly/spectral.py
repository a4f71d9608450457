"""Full Hermitian eigendecomposition, ground/Gibbs states, level-crossing scan."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import ManyBodyOperator, _frozen


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with matching orthonormal eigenvector columns."""

    n_sites: int
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        _frozen(self.eigenvalues)
        _frozen(self.eigenvectors)

    @property
    def spectral_range(self) -> float:
        return float(self.eigenvalues[-1] - self.eigenvalues[0])


@dataclass(frozen=True)
class DensityMatrix:
    n_sites: int
    entries: np.ndarray

    def __post_init__(self):
        dim = 2**self.n_sites
        if self.entries.shape != (dim, dim):
            raise ValueError(f"entries must be {dim}x{dim} for n_sites={self.n_sites}")
        _frozen(self.entries)


def eigendecompose(h: ManyBodyOperator) -> Spectrum:
    """Full spectrum of a Hermitian operator, eigenvalues ascending."""
    a = h.entries
    scale = max(1.0, float(np.abs(a).max()))
    if np.abs(a - a.conj().T).max() > 1e-9 * scale:
        raise ValueError("operator is not Hermitian within tolerance")
    vals, vecs = np.linalg.eigh((a + a.conj().T) / 2.0)
    return Spectrum(h.n_sites, vals, vecs)


def ground_state(spec: Spectrum, degeneracy_tol: float) -> DensityMatrix:
    """Equal-weight mixture over eigenvectors within degeneracy_tol of the minimum."""
    if degeneracy_tol < 0:
        raise ValueError("degeneracy_tol must be >= 0")
    vals = spec.eigenvalues
    mask = vals <= vals[0] + degeneracy_tol
    v = spec.eigenvectors[:, mask]
    rho = (v @ v.conj().T) / int(mask.sum())
    return DensityMatrix(spec.n_sites, rho)


def gibbs_state(spec: Spectrum, t: float) -> DensityMatrix:
    """Thermal state exp(-H/T)/Z from the spectrum; T = 0 falls back to the
    (possibly degenerate) ground-state mixture."""
    if t < 0:
        raise ValueError("temperature must be >= 0")
    if t == 0:
        return ground_state(spec, 1e-10 * spec.spectral_range)
    # Shift by the minimum eigenvalue so the exponentials never overflow.
    w = np.exp(-(spec.eigenvalues - spec.eigenvalues[0]) / t)
    w /= w.sum()
    v = spec.eigenvectors
    rho = (v * w) @ v.conj().T
    return DensityMatrix(spec.n_sites, rho)


@dataclass(frozen=True)
class LevelCrossing:
    """A grid-resolved crossing of the two lowest levels."""

    param: float  # midpoint of the bracketing interval
    bracket: tuple[float, float]
    min_gap: float


def detect_level_crossings(
    points: list[tuple[float, float, float]],
    gap_tol: float = 0.05,
    degeneracy_gap: float = 1e-8,
) -> list[LevelCrossing]:
    """Scan (param, E0, E1) rows for places the ground-state sector changes.

    Works purely on the grid, no sub-grid refinement.  Each maximal run of
    points with sorted gap E1 - E0 below gap_tol is classified by how many of
    its points are degenerate to machine scale (gap < degeneracy_gap):

    - fewer than two: an isolated crossing between grid points; reported once
      at the run's gap minimum, bracketed by the neighboring grid points.
    - two or more: an exactly degenerate segment (for example a symmetry
      multiplet that is the ground space over a whole parameter region); the
      sector changes where the degeneracy lifts, so the run's entry and exit
      intervals are each reported, except at the ends of the sweep window.

    Two crossings closer together than the below-tolerance run width are not
    resolved separately.
    """
    if len(points) < 2:
        raise ValueError("need at least 2 grid points")
    params = np.array([p[0] for p in points], dtype=float)
    if not np.all(np.diff(params) > 0):
        raise ValueError("params must be strictly increasing")
    gaps = np.array([p[2] - p[1] for p in points], dtype=float)

    def interval_event(a: int, b: int) -> LevelCrossing:
        lo, hi = float(params[a]), float(params[b])
        return LevelCrossing((lo + hi) / 2.0, (lo, hi), float(gaps[a:b + 1].min()))

    k = len(gaps)
    below = gaps < gap_tol
    crossings: list[LevelCrossing] = []
    start = None
    for idx in range(k + 1):
        if idx < k and below[idx]:
            if start is None:
                start = idx
            continue
        if start is None:
            continue
        end = idx - 1  # inclusive
        run = gaps[start : end + 1]
        if int((run < degeneracy_gap).sum()) >= 2:
            if start > 0:
                crossings.append(interval_event(start - 1, start))
            if end < k - 1:
                crossings.append(interval_event(end, end + 1))
        else:
            im = start + int(np.argmin(run))
            crossings.append(interval_event(max(im - 1, 0), min(im + 1, k - 1)))
        start = None
    return crossings
