"""Dense symmetric eigensolver and the boundary-aware spectra built on it.

The solver is a cyclic Jacobi iteration: simple, deterministic, and accurate
enough at the desk scale this package targets (n up to a few hundred).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ClusteringAmbiguousError,
    EmptyInteriorError,
    NoConvergenceError,
    NotSymmetricError,
    TooSmallError,
)
from .operators import assemble, dirichlet_laplacian

MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues ascending, orthonormal eigenvector columns, residuals."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # column i pairs with eigenvalues[i]
    residuals: np.ndarray     # per pair, ||M x - lambda x||_2


@dataclass(frozen=True)
class ReflectedSpectrum:
    """Spectrum of the normalized reflected Laplacian, in original vertex order.

    eigenvectors are the (non-orthonormal) eigenvectors of the normalized
    reflected Laplacian; sweep_vectors are the further back-transform used by
    sweep cuts, constant on the kernel.
    """

    spectrum: Spectrum           # of the symmetrized form, block order
    eigenvectors: np.ndarray     # columns, original vertex order
    sweep_vectors: np.ndarray    # columns, original vertex order

    @property
    def eigenvalues(self):
        return self.spectrum.eigenvalues

    @property
    def lambda_r(self):
        """First nontrivial eigenvalue (second smallest)."""
        return float(self.spectrum.eigenvalues[1])


@dataclass(frozen=True)
class ParityCluster:
    eigenvalue: float
    multiplicity: int
    even_dim: int
    odd_dim: int
    even_vectors: np.ndarray  # columns, vertex order of the doubled graph
    odd_vectors: np.ndarray


@dataclass(frozen=True)
class ParityReport:
    even_count: int
    odd_count: int
    clusters: tuple  # of ParityCluster


def _fix_signs(vectors, tol=1e-12):
    """Make the first component larger than tol positive, per column."""
    v = vectors.copy()
    for j in range(v.shape[1]):
        col = v[:, j]
        nz = np.nonzero(np.abs(col) > tol)[0]
        if len(nz) and col[nz[0]] < 0:
            v[:, j] = -col
    return v


def sym_eig(m, tol=1e-12):
    """Cyclic Jacobi eigendecomposition of a dense symmetric matrix.

    Converges when the off-diagonal Frobenius norm drops below tol times the
    Frobenius norm of the input; raises NoConvergenceError after MAX_SWEEPS
    full sweeps.  Output is deterministic for a fixed input.
    """
    m = np.array(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetricError("matrix is not square")
    n = m.shape[0]
    scale = np.abs(m).max() if n else 0.0
    if not np.all(np.abs(m - m.T) <= 1e-12 * (1.0 + scale)):
        raise NotSymmetricError("matrix is not symmetric within tolerance")

    a = 0.5 * (m + m.T)
    v = np.eye(n)
    norm = np.linalg.norm(a)
    if norm > 0.0:
        for _ in range(MAX_SWEEPS):
            off = np.linalg.norm(a - np.diag(np.diag(a)))
            if off <= tol * norm:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) <= 1e-18 * norm:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if abs(theta) > 1e150:  # theta**2 would overflow
                        t = 0.5 / theta
                    else:
                        t = math.copysign(1.0, theta) / (
                            abs(theta) + math.sqrt(theta * theta + 1.0)
                        )
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    ap = c * a[:, p] - s * a[:, q]
                    a[:, q] = s * a[:, p] + c * a[:, q]
                    a[:, p] = ap
                    ap = c * a[p, :] - s * a[q, :]
                    a[q, :] = s * a[p, :] + c * a[q, :]
                    a[p, :] = ap
                    a[p, q] = a[q, p] = 0.0
                    vp = c * v[:, p] - s * v[:, q]
                    v[:, q] = s * v[:, p] + c * v[:, q]
                    v[:, p] = vp
        else:
            raise NoConvergenceError("Jacobi did not converge in %d sweeps" % MAX_SWEEPS)

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    vectors = _fix_signs(v[:, order])
    residuals = np.linalg.norm(m @ vectors - vectors * eigenvalues[None, :], axis=0)
    return Spectrum(eigenvalues=eigenvalues, eigenvectors=vectors, residuals=residuals)


def laplacian_matrix(g):
    """Standard graph Laplacian in original vertex order."""
    a = np.array(g.adjacency(), dtype=float)
    return np.diag(a.sum(axis=1)) - a


def reflected_spectrum(g, tol=1e-12):
    """Eigendecompose the normalized reflected Laplacian via its symmetrization.

    Each eigenvector y of the symmetrized form is back-transformed twice:
    once to an eigenvector of the normalized reflected Laplacian, and once to
    the sweep vector (dq)^(-1/2) y used by sweep cuts.
    """
    ops = assemble(g)
    spec = sym_eig(ops.sym, tol=tol)
    q_isqrt = 1.0 / np.sqrt(ops.q)
    dq_isqrt = 1.0 / np.sqrt(ops.d * ops.q)
    lr_vecs = q_isqrt[:, None] * spec.eigenvectors
    sweep_vecs = dq_isqrt[:, None] * spec.eigenvectors
    inv = np.empty_like(ops.ordering)
    inv[ops.ordering] = np.arange(g.n)
    return ReflectedSpectrum(
        spectrum=spec,
        eigenvectors=lr_vecs[inv, :],
        sweep_vectors=sweep_vecs[inv, :],
    )


def dirichlet_spectrum(g, tol=1e-12):
    """Spectrum of the Dirichlet Laplacian on the interior."""
    return sym_eig(dirichlet_laplacian(g), tol=tol)


def path_closed_form(n, kind):
    """Closed-form path-graph eigenpairs with endpoint boundary.

    Both kinds share the eigenvalues 2(1 - cos(pi k / (n-1))); 'dirichlet'
    pairs them with sine profiles over the interior (k = 1..n-2), 'neumann'
    with cosine profiles over all vertices (k = 0..n-1).
    """
    if n < 3:
        raise TooSmallError("closed forms need n >= 3")
    pairs = []
    if kind == "dirichlet":
        ks = range(1, n - 1)
        js = np.arange(1, n - 1)
        profile = np.sin
    elif kind == "neumann":
        ks = range(0, n)
        js = np.arange(0, n)
        profile = np.cos
    else:
        raise ValueError("kind must be 'dirichlet' or 'neumann'")
    for k in ks:
        lam = 2.0 * (1.0 - math.cos(math.pi * k / (n - 1)))
        vec = profile(math.pi * js * k / (n - 1))
        pairs.append((lam, vec))
    return pairs


def parity_classify(dg, tol=1e-8):
    """Classify doubled-graph Laplacian eigenspaces as even or odd.

    Builds the reflection permutation of the doubled graph, checks it commutes
    with the Laplacian, then diagonalizes the reflection restricted to each
    eigenvalue cluster (consecutive gap <= tol).  Parity is a property of the
    eigenspace, not of whatever basis the solver happened to return.
    """
    g2 = dg.graph
    n2 = g2.n
    perm = dg.reflection()
    pmat = np.zeros((n2, n2))
    pmat[np.arange(n2), perm] = 1.0

    lap = laplacian_matrix(g2)
    if not np.array_equal(pmat @ lap, lap @ pmat):
        raise AssertionError("reflection does not commute with the Laplacian")

    spec = sym_eig(lap)
    clusters = []
    even_count = 0
    odd_count = 0
    start = 0
    evs = spec.eigenvalues
    for i in range(1, n2 + 1):
        if i < n2 and evs[i] - evs[i - 1] <= tol:
            continue
        basis = spec.eigenvectors[:, start:i]
        restricted = basis.T @ pmat @ basis
        sub = sym_eig(restricted)
        if np.any(np.abs(np.abs(sub.eigenvalues) - 1.0) > 1e-6):
            raise ClusteringAmbiguousError(
                "restricted reflection has eigenvalues away from +-1 near "
                "eigenvalue %.12g; clusters ill-defined at tol %g" % (evs[start], tol)
            )
        odd_dim = int(np.sum(sub.eigenvalues < 0.0))
        even_dim = (i - start) - odd_dim
        combo = basis @ sub.eigenvectors
        clusters.append(
            ParityCluster(
                eigenvalue=float(np.mean(evs[start:i])),
                multiplicity=i - start,
                even_dim=even_dim,
                odd_dim=odd_dim,
                even_vectors=_fix_signs(combo[:, odd_dim:]),
                odd_vectors=_fix_signs(combo[:, :odd_dim]),
            )
        )
        even_count += even_dim
        odd_count += odd_dim
        start = i
    return ParityReport(even_count=even_count, odd_count=odd_count, clusters=tuple(clusters))
