"""Pauli/spin-1/2 operators and their embedding into an n-site tensor product.

Basis convention, used everywhere in this package: single-site basis is
{|up>, |down>} with |up> = (1, 0); site 0 occupies the most significant
tensor slot, so computational-basis index b assigns site i the bit
(n - 1 - i), with bit value 0 meaning |up>.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError

# Full-spectrum dense work above this size is not supported; reject instead
# of silently degrading.
MAX_DENSE_SITES = 12

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

AXES = ("x", "y", "z")


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class LocalOperator:
    """A dim x dim operator acting on a single tensor slot."""

    dim: int
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (self.dim, self.dim):
            raise ValueError(f"entries must be {self.dim}x{self.dim}")
        _frozen(self.entries)


@dataclass(frozen=True)
class ManyBodyOperator:
    """A dense operator on the full 2^n_sites Hilbert space."""

    n_sites: int
    entries: np.ndarray

    def __post_init__(self):
        dim = 2**self.n_sites
        if self.entries.shape != (dim, dim):
            raise ValueError(f"entries must be {dim}x{dim} for n_sites={self.n_sites}")
        _frozen(self.entries)


def check_capacity(n: int) -> None:
    if n > MAX_DENSE_SITES:
        raise CapacityError(
            f"{n} sites exceeds the dense-representation limit of {MAX_DENSE_SITES}"
        )


def pauli(axis: str) -> LocalOperator:
    """Standard 2x2 Pauli matrix for axis in {'x', 'y', 'z'}."""
    if axis not in _PAULI:
        raise ValueError(f"invalid Pauli axis {axis!r}; expected one of {AXES}")
    return LocalOperator(2, _PAULI[axis].copy())


def spin(axis: str) -> LocalOperator:
    """Spin-1/2 operator S^axis = sigma^axis / 2."""
    return LocalOperator(2, pauli(axis).entries / 2.0)


def site_embed(n: int, i: int, op: LocalOperator) -> ManyBodyOperator:
    """Embed a single-site operator at slot i: I x ... x op x ... x I."""
    if n < 1:
        raise ValueError("n must be positive")
    check_capacity(n)
    if not 0 <= i < n:
        raise ValueError(f"site index {i} out of range for n={n}")
    if op.dim != 2:
        raise ValueError("only dim-2 local operators can be embedded")
    left = np.eye(2**i, dtype=complex)
    right = np.eye(2 ** (n - i - 1), dtype=complex)
    return ManyBodyOperator(n, np.kron(np.kron(left, op.entries), right))


def _pair_embed(n: int, i: int, j: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Dense matrix of A_i B_j (i < j) built as a single kron chain."""
    out = np.eye(2**i, dtype=complex)
    out = np.kron(out, a)
    out = np.kron(out, np.eye(2 ** (j - i - 1), dtype=complex))
    out = np.kron(out, b)
    return np.kron(out, np.eye(2 ** (n - j - 1), dtype=complex))


def two_site_term(n: int, i: int, j: int, axis: str, coeff: float) -> ManyBodyOperator:
    """coeff * S_i^axis S_j^axis on n sites; symmetric in (i, j)."""
    if i == j:
        raise ValueError("two-site term needs distinct sites")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"site pair ({i}, {j}) out of range for n={n}")
    check_capacity(n)
    s = spin(axis).entries
    lo, hi = (i, j) if i < j else (j, i)
    return ManyBodyOperator(n, coeff * _pair_embed(n, lo, hi, s, s))
