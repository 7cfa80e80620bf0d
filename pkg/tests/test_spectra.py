import math

import numpy as np
import pytest

from reflap import (
    assemble,
    dirichlet_spectrum,
    double,
    new_boundary_graph,
    parity_classify,
    path_closed_form,
    path_graph,
    reflected_spectrum,
    sym_eig,
)
from reflap.errors import (
    EmptyInteriorError,
    IsolatedVertexError,
    NotSymmetricError,
    TooSmallError,
)
from reflap.operators import block_ordering
from reflap.spectra import laplacian_matrix

from conftest import random_connected_graph, seeded


def test_sym_eig_2x2():
    spec = sym_eig([[2.0, -1.0], [-1.0, 2.0]])
    assert np.abs(spec.eigenvalues - [1.0, 3.0]).max() < 1e-12


def test_sym_eig_zero_matrix():
    spec = sym_eig(np.zeros((5, 5)))
    assert np.array_equal(spec.eigenvalues, np.zeros(5))
    assert np.array_equal(spec.eigenvectors, np.eye(5))


def test_sym_eig_cycle_laplacian():
    lap = laplacian_matrix(new_boundary_graph(6, [(i, (i + 1) % 6) for i in range(6)], []))
    spec = sym_eig(lap)
    expected = sorted(2.0 - 2.0 * math.cos(2.0 * math.pi * k / 6) for k in range(6))
    assert np.abs(spec.eigenvalues - expected).max() < 1e-10


def test_sym_eig_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        sym_eig([[0.0, 1.0], [0.5, 0.0]])
    with pytest.raises(NotSymmetricError):
        sym_eig(np.ones((2, 3)))


def test_sym_eig_contract_random():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(2, 12))
        m = rng.normal(size=(n, n))
        m = m + m.T
        spec = sym_eig(m)
        # ascending, orthonormal, residuals, reconstruction
        assert np.all(np.diff(spec.eigenvalues) >= -1e-12)
        gram = spec.eigenvectors.T @ spec.eigenvectors
        assert np.abs(gram - np.eye(n)).max() < 1e-10
        assert np.all(spec.residuals <= 1e-8 * (1.0 + np.abs(spec.eigenvalues)))
        recon = spec.eigenvectors @ np.diag(spec.eigenvalues) @ spec.eigenvectors.T
        assert np.linalg.norm(recon - m) <= 1e-8 * np.linalg.norm(m)
        # against an independent solver
        assert np.abs(spec.eigenvalues - np.linalg.eigvalsh(m)).max() < 1e-8


def test_sym_eig_deterministic():
    rng = np.random.default_rng(9)
    m = rng.normal(size=(7, 7))
    m = m + m.T
    s1, s2 = sym_eig(m), sym_eig(m)
    assert np.array_equal(s1.eigenvalues, s2.eigenvalues)
    assert np.array_equal(s1.eigenvectors, s2.eigenvectors)


def test_reflected_spectrum_path4():
    rs = reflected_spectrum(path_graph(4, boundary="endpoints"))
    assert np.abs(rs.eigenvalues - [0.0, 0.5, 1.5, 2.0]).max() < 1e-10
    assert abs(rs.lambda_r - 0.5) < 1e-10


def test_reflected_spectrum_no_boundary_cycle():
    rs = reflected_spectrum(new_boundary_graph(6, [(i, (i + 1) % 6) for i in range(6)], []))
    expected = sorted((2.0 - 2.0 * math.cos(2.0 * math.pi * k / 6)) / 2.0 for k in range(6))
    assert np.abs(rs.eigenvalues - expected).max() < 1e-10


def test_reflected_spectrum_k3():
    rs = reflected_spectrum(new_boundary_graph(3, [(0, 1), (0, 2), (1, 2)], []))
    assert np.abs(rs.eigenvalues - [0.0, 1.5, 1.5]).max() < 1e-10


def test_reflected_spectrum_isolated_vertex():
    with pytest.raises(IsolatedVertexError):
        reflected_spectrum(new_boundary_graph(1, [], []))


def test_sweep_vector_of_kernel_is_constant():
    rng = seeded(61)
    for _ in range(30):
        g = random_connected_graph(rng, n_max=9)
        rs = reflected_spectrum(g)
        kernel_sweep = rs.sweep_vectors[:, 0]
        assert np.abs(kernel_sweep - kernel_sweep[0]).max() < 1e-8


def test_eigenvector_backtransforms():
    rng = seeded(67)
    for _ in range(20):
        g = random_connected_graph(rng, n_max=9)
        ops = assemble(g)
        rs = reflected_spectrum(g)
        order = block_ordering(g)
        for i in range(g.n):
            x = rs.eigenvectors[order, i]
            lam = rs.eigenvalues[i]
            assert np.abs(ops.l_r_norm @ x - lam * x).max() < 1e-8
            gvec = rs.sweep_vectors[order, i]
            if lam > 1e-10:
                assert abs(gvec @ (ops.d * ops.q)) < 1e-8


def test_dirichlet_spectrum_paths():
    spec = dirichlet_spectrum(path_graph(4, boundary="endpoints"))
    assert np.abs(spec.eigenvalues - [1.0, 3.0]).max() < 1e-10
    spec = dirichlet_spectrum(path_graph(5, boundary="endpoints"))
    expected = [2.0 - math.sqrt(2.0), 2.0, 2.0 + math.sqrt(2.0)]
    assert np.abs(spec.eigenvalues - expected).max() < 1e-10


def test_dirichlet_spectrum_star_center():
    g = new_boundary_graph(4, [(0, 1), (0, 2), (0, 3)], [1, 2, 3])
    assert np.array_equal(dirichlet_spectrum(g).eigenvalues, [3.0])


def test_dirichlet_spectrum_empty_interior():
    with pytest.raises(EmptyInteriorError):
        dirichlet_spectrum(new_boundary_graph(2, [(0, 1)], [0, 1]))


def test_path_closed_form_values():
    mu = [lam for lam, _ in path_closed_form(4, "neumann")]
    assert np.abs(np.array(mu) - [0.0, 1.0, 3.0, 4.0]).max() < 1e-12
    _, psi1 = path_closed_form(4, "neumann")[1]
    assert np.abs(psi1 - [1.0, 0.5, -0.5, -1.0]).max() < 1e-12
    lam = [l for l, _ in path_closed_form(4, "dirichlet")]
    assert np.abs(np.array(lam) - [1.0, 3.0]).max() < 1e-12
    _, phi1 = path_closed_form(4, "dirichlet")[0]
    assert np.abs(phi1 - [math.sin(math.pi / 3), math.sin(2 * math.pi / 3)]).max() < 1e-12
    mu3 = [l for l, _ in path_closed_form(3, "neumann")]
    assert np.abs(np.array(mu3) - [0.0, 2.0, 4.0]).max() < 1e-12


def test_path_closed_form_too_small():
    with pytest.raises(TooSmallError):
        path_closed_form(2, "neumann")


def test_parity_counts_path():
    rep = parity_classify(double(path_graph(4, boundary="endpoints")))
    assert (rep.even_count, rep.odd_count) == (4, 2)
    rep = parity_classify(double(path_graph(5, boundary="endpoints")))
    assert (rep.even_count, rep.odd_count) == (5, 3)


def test_parity_all_boundary():
    g = new_boundary_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)], range(4))
    rep = parity_classify(double(g))
    assert (rep.even_count, rep.odd_count) == (4, 0)


def test_parity_odd_eigenvalues_are_dirichlet():
    g = path_graph(5, boundary="endpoints")
    rep = parity_classify(double(g))
    odd_evs = sorted(
        c.eigenvalue for c in rep.clusters for _ in range(c.odd_dim)
    )
    dirichlet = dirichlet_spectrum(g).eigenvalues
    assert np.abs(np.array(odd_evs) - dirichlet).max() < 1e-8


def test_parity_restrictions_satisfy_eigen_equations():
    rng = seeded(71)
    for _ in range(40):
        g = random_connected_graph(rng, n_max=8)
        dg = double(g)
        ops = assemble(g)
        order = block_ordering(g)
        k = g.n - len(g.boundary)
        for cluster in parity_classify(dg).clusters:
            mu = cluster.eigenvalue
            for j in range(cluster.even_dim):
                u = cluster.even_vectors[:g.n, j][order]
                assert np.abs(ops.l_r @ u - mu * u).max() < 1e-8
            for j in range(cluster.odd_dim):
                vec = cluster.odd_vectors[:, j]
                if g.boundary:
                    assert np.abs(vec[sorted(g.boundary)]).max() < 1e-8
                u = vec[:g.n][order][:k]
                assert np.abs(ops.l_d @ u - mu * u).max() < 1e-8
