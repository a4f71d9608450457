"""Two-site reduced density matrices and spin-spin correlators."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalConsistencyError
from .operators import ManyBodyOperator, _frozen, _pair_embed, spin
from .spectral import DensityMatrix

# Two-site basis order, with the pair's first site as the first factor:
# {|uu>, |ud>, |du>, |dd>}.


@dataclass(frozen=True)
class TwoQubitState:
    """4x4 reduced density matrix of the ordered site pair `sites`."""

    sites: tuple[int, int]
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (4, 4):
            raise ValueError("two-qubit state must be 4x4")
        _frozen(self.entries)

    def validate(self) -> "TwoQubitState":
        a = self.entries
        if np.abs(a - a.conj().T).max() > 1e-10:
            raise ValueError("state is not Hermitian")
        if abs(a.trace().real - 1.0) > 1e-10 or abs(a.trace().imag) > 1e-10:
            raise ValueError("state trace differs from 1")
        if np.linalg.eigvalsh((a + a.conj().T) / 2).min() < -1e-10:
            raise ValueError("state has a negative eigenvalue")
        return self


def partial_trace(rho: DensityMatrix, keep: tuple[int, int]) -> TwoQubitState:
    """Trace out every site except the ordered pair `keep`.

    The output's first tensor factor is keep[0] regardless of numeric order.
    """
    i, j = keep
    n = rho.n_sites
    if i == j:
        raise ValueError("pair sites must be distinct")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"pair ({i}, {j}) out of range for n={n}")
    arr = rho.entries.reshape((2,) * (2 * n))
    rest = [s for s in range(n) if s not in (i, j)]
    perm = [i, j, *rest, n + i, n + j, *(n + s for s in rest)]
    blocks = arr.transpose(perm).reshape(4, 2 ** (n - 2), 4, 2 ** (n - 2))
    return TwoQubitState((i, j), np.einsum("arbr->ab", blocks))


def _real_expectation(value: complex, what: str) -> float:
    if abs(value.imag) > 1e-8:
        raise NumericalConsistencyError(
            f"{what} has imaginary residue {value.imag:.3e} above 1e-8"
        )
    return float(value.real)


def correlation(rho: DensityMatrix, i: int, j: int, a: str, b: str) -> float:
    """<S_i^a S_j^b> evaluated against the full n-site density matrix."""
    if i == j:
        raise ValueError("correlator sites must be distinct")
    n = rho.n_sites
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"pair ({i}, {j}) out of range for n={n}")
    sa, sb = spin(a).entries, spin(b).entries
    if i < j:
        op = _pair_embed(n, i, j, sa, sb)
    else:
        op = _pair_embed(n, j, i, sb, sa)
    return _real_expectation(complex(np.trace(rho.entries @ op)), f"<S^{a} S^{b}>")


def pair_correlation(state: TwoQubitState, a: str, b: str) -> float:
    """<S^a S^b> from the two-site state alone (first factor gets axis a)."""
    op = np.kron(spin(a).entries, spin(b).entries)
    return _real_expectation(complex(np.trace(state.entries @ op)), f"<S^{a} S^{b}>")


def trace_distance(a: TwoQubitState, b: TwoQubitState) -> float:
    """(1/2) tr |a - b|."""
    diff = a.entries - b.entries
    return float(np.abs(np.linalg.eigvalsh((diff + diff.conj().T) / 2)).sum() / 2)


def singlet() -> TwoQubitState:
    """(|ud> - |du>)/sqrt(2) as a pure two-site state."""
    v = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
    return TwoQubitState((0, 1), np.outer(v, v.conj()))


def embed_pure_state(vector: np.ndarray, n_sites: int) -> DensityMatrix:
    """Projector onto a normalized pure state of the full lattice."""
    v = np.asarray(vector, dtype=complex).reshape(-1)
    if v.shape != (2**n_sites,):
        raise ValueError("state vector length must be 2^n_sites")
    v = v / np.linalg.norm(v)
    return DensityMatrix(n_sites, np.outer(v, v.conj()))
