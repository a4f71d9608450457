import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellpoly import (
    ManyBodyOperator,
    ModelParams,
    build_hamiltonian,
    detect_level_crossings,
    eigendecompose,
    gibbs_state,
    ground_state,
    pauli,
    polygon_dimer_graph,
    site_embed,
)


def dimer_spectrum(delta0=1.0):
    return eigendecompose(build_hamiltonian(polygon_dimer_graph(ModelParams(1, delta0=delta0))))


def test_eigendecompose_sigma_z():
    spec = eigendecompose(site_embed(1, 0, pauli("z")))
    assert np.allclose(spec.eigenvalues, [-1.0, 1.0], atol=1e-14)


def test_eigendecompose_dimer_singlet_triplet_split():
    spec = dimer_spectrum()
    assert np.allclose(spec.eigenvalues, [-0.75, 0.25, 0.25, 0.25], atol=1e-12)


def test_eigendecompose_decoupled_square_ground():
    spec = eigendecompose(build_hamiltonian(polygon_dimer_graph(ModelParams(2, j=0.0))))
    assert spec.eigenvalues[0] == pytest.approx(-1.5, abs=1e-12)


def test_eigendecompose_rejects_non_hermitian():
    bad = np.zeros((2, 2), dtype=complex)
    bad[0, 1] = 1.0
    with pytest.raises(ValueError):
        eigendecompose(ManyBodyOperator(1, bad))


@pytest.mark.parametrize("n_dimers,j", [(2, 0.6), (3, -0.8)])
def test_spectrum_residuals_and_orthonormality(n_dimers, j):
    h = build_hamiltonian(polygon_dimer_graph(ModelParams(n_dimers, j=j, delta=0.2)))
    spec = eigendecompose(h)
    assert np.all(np.diff(spec.eigenvalues) >= 0)
    residual = h.entries @ spec.eigenvectors - spec.eigenvectors * spec.eigenvalues
    assert np.abs(residual).max() < 1e-9 * max(spec.spectral_range, 1.0)
    gram = spec.eigenvectors.conj().T @ spec.eigenvectors
    assert np.abs(gram - np.eye(len(spec.eigenvalues))).max() < 1e-10


def test_ground_state_pure_singlet():
    rho = ground_state(dimer_spectrum(), 1e-8).entries
    singlet = np.array([0, 1, -1, 0]) / np.sqrt(2)
    assert np.abs(rho - np.outer(singlet, singlet)).max() < 1e-12


def test_ground_state_fully_degenerate_is_maximally_mixed():
    spec = eigendecompose(ManyBodyOperator(2, np.zeros((4, 4), dtype=complex)))
    assert np.abs(ground_state(spec, 1e-8).entries - np.eye(4) / 4).max() < 1e-14


def test_ground_state_sigma_z_projects_down():
    spec = eigendecompose(site_embed(1, 0, pauli("z")))
    assert np.allclose(ground_state(spec, 1e-8).entries, np.diag([0.0, 1.0]), atol=1e-14)


def test_gibbs_infinite_temperature_is_maximally_mixed():
    rho = gibbs_state(dimer_spectrum(), 1e9).entries
    assert np.abs(rho - np.eye(4) / 4).max() < 1e-6


def test_gibbs_tiny_temperature_is_ground_projector():
    rho = gibbs_state(dimer_spectrum(), 1e-6).entries
    singlet = np.array([0, 1, -1, 0]) / np.sqrt(2)
    assert np.abs(rho - np.outer(singlet, singlet)).max() < 1e-10


def test_gibbs_populations_match_boltzmann_weights():
    spec = dimer_spectrum()
    rho = gibbs_state(spec, 1.0)
    h = build_hamiltonian(polygon_dimer_graph(ModelParams(1)))
    assert abs(np.trace(rho.entries).real - 1.0) < 1e-10
    comm = rho.entries @ h.entries - h.entries @ rho.entries
    assert np.abs(comm).max() < 1e-9
    w = np.exp(-spec.eigenvalues / 1.0)
    w /= w.sum()
    pops = np.real(np.diag(spec.eigenvectors.conj().T @ rho.entries @ spec.eigenvectors))
    assert np.abs(np.sort(pops) - np.sort(w)).max() < 1e-12


def test_gibbs_rejects_negative_temperature():
    with pytest.raises(ValueError):
        gibbs_state(dimer_spectrum(), -0.1)


@settings(max_examples=25, deadline=None)
@given(t=st.floats(min_value=1e-3, max_value=10.0, allow_nan=False))
def test_gibbs_trace_one_and_commutes(t):
    h = build_hamiltonian(polygon_dimer_graph(ModelParams(2, j=0.4, delta=0.1)))
    spec = eigendecompose(h)
    rho = gibbs_state(spec, t).entries
    assert abs(np.trace(rho).real - 1.0) < 1e-10
    assert np.abs(rho @ h.entries - h.entries @ rho).max() < 1e-9


def test_gibbs_matches_ground_state_at_vanishing_temperature():
    spec = dimer_spectrum()
    gap = spec.eigenvalues[1] - spec.eigenvalues[0]
    cold = gibbs_state(spec, 1e-8 * gap).entries
    zero = gibbs_state(spec, 0.0).entries
    diff = cold - zero
    assert np.abs(np.linalg.eigvalsh(diff)).sum() / 2 < 1e-6  # trace distance


def test_crossings_empty_when_gap_open():
    points = [(p, 0.0, 0.2) for p in np.linspace(-1, 1, 21)]
    assert detect_level_crossings(points, gap_tol=0.1) == []


def test_crossings_synthetic_v_shape():
    params = np.linspace(-1, 1, 41)
    points = [(p, -abs(p), abs(p)) for p in params]
    found = detect_level_crossings(points, gap_tol=0.11)
    assert len(found) == 1
    spacing = params[1] - params[0]
    assert abs(found[0].param) <= spacing
    lo, hi = found[0].bracket
    assert lo < found[0].param < hi


def test_crossings_reject_unsorted_params():
    with pytest.raises(ValueError):
        detect_level_crossings([(0.0, 0, 1), (0.0, 0, 1)])


@settings(max_examples=30, deadline=None)
@given(center=st.floats(min_value=-0.9, max_value=0.9), width=st.floats(min_value=0.05, max_value=0.5))
def test_crossings_locate_single_dip_within_grid_step(center, width):
    params = np.linspace(-1.2, 1.2, 97)
    points = [(p, 0.0, abs(p - center) / width) for p in params]
    found = detect_level_crossings(points, gap_tol=0.5)
    assert len(found) == 1
    spacing = params[1] - params[0]
    assert abs(found[0].param - center) <= spacing
