"""Independent brute-force reference implementations used by the tests.

These deliberately avoid the library's construction paths: Hamiltonians are
assembled as full n-factor Kronecker products bond by bond, and the partial
trace loops over basis indices bit by bit.  Site 0 is the most significant
bit and bit value 0 means spin-up, matching the package convention.
"""
import numpy as np

SX = np.array([[0, 1], [1, 0]], dtype=complex) / 2
SY = np.array([[0, -1j], [1j, 0]], dtype=complex) / 2
SZ = np.array([[1, 0], [0, -1]], dtype=complex) / 2
ID = np.eye(2, dtype=complex)


def chain_product(n, ops):
    """Kron together one factor per site, identity where ops has no entry."""
    out = np.array([[1.0 + 0j]])
    for site in range(n):
        out = np.kron(out, ops.get(site, ID))
    return out


def brute_hamiltonian(n, bonds):
    """bonds: list of (i, j, coupling, anisotropy)."""
    h = np.zeros((2**n, 2**n), dtype=complex)
    for i, j, coupling, anisotropy in bonds:
        h += coupling * chain_product(n, {i: SX, j: SX})
        h += coupling * chain_product(n, {i: SY, j: SY})
        h += coupling * anisotropy * chain_product(n, {i: SZ, j: SZ})
    return h


def brute_partial_trace(rho, n, keep):
    """4x4 RDM of the ordered pair `keep`, by explicit index loops."""
    i, j = keep
    out = np.zeros((4, 4), dtype=complex)

    def bit(index, site):
        return (index >> (n - 1 - site)) & 1

    for row in range(2**n):
        for col in range(2**n):
            # Off-diagonal in any traced-out site contributes nothing.
            if any(bit(row, s) != bit(col, s) for s in range(n) if s not in (i, j)):
                continue
            r = 2 * bit(row, i) + bit(row, j)
            c = 2 * bit(col, i) + bit(col, j)
            out[r, c] += rho[row, col]
    return out


def singlet_vector():
    return np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


def random_density_matrix(rng, dim, rank=None):
    """Ginibre-induced random mixed state."""
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_pure_state(rng, dim):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_unitary(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))
