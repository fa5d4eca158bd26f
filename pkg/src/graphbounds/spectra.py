"""Dense symmetric eigenvalues and graph spectra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import Graph

JACOBI_TOL = 1e-12
MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-12


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (residual {residual:.3e})")


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    order: str  # "ascending" or "descending"
    residual: float

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.values)


def symmetric_eigenvalues(a, order: str = "ascending") -> Spectrum:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm drops below 1e-12 (at most
    100 sweeps).  ``residual`` is the largest off-diagonal magnitude left.
    """
    if order not in ("ascending", "descending"):
        raise ValueError(f"unknown order {order!r}")
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] > 64:
        raise ValueError(f"dimension {a.shape[0]} exceeds 64")
    if a.size and np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric within 1e-12")
    diag, off, largest, sweeps = kernels.jacobi_eigenvalues(a, JACOBI_TOL, MAX_SWEEPS)
    if off >= JACOBI_TOL:
        raise ConvergenceError(f"Jacobi did not converge in {sweeps} sweeps", float(largest))
    values = np.sort(diag)
    if order == "descending":
        values = values[::-1]
    return Spectrum(tuple(float(v) for v in values), order, float(largest))


def laplacian_matrix(g: Graph) -> np.ndarray:
    a = g.adjacency_matrix(np.float64)
    return np.diag(a.sum(axis=1)) - a


def adjacency_spectrum(g: Graph) -> Spectrum:
    return symmetric_eigenvalues(g.adjacency_matrix(np.float64), "descending")


def laplacian_spectrum(g: Graph) -> Spectrum:
    return symmetric_eigenvalues(laplacian_matrix(g), "ascending")


def spectral_radius(g: Graph) -> float:
    return adjacency_spectrum(g)[0]
