"""Assembly of the boundary-aware Laplacian operators.

All matrices are dense numpy arrays expressed in the interior-then-boundary
vertex ordering; `ordering` maps block positions back to original graph
indices.  Entries of everything up to the normalization step are integers or
half-integers, so identities like q*l_r == l - l_boundary/2 hold exactly in
floating point.
"""

from dataclasses import dataclass

import numpy as np

from .errors import EmptyInteriorError, IsolatedVertexError


@dataclass(frozen=True)
class AdjacencyBlocks:
    """Adjacency matrix blocks under the interior-then-boundary ordering."""

    a11: np.ndarray  # interior x interior
    a12: np.ndarray  # interior x boundary
    a22: np.ndarray  # boundary x boundary
    ordering: np.ndarray  # block position -> original vertex index


@dataclass(frozen=True)
class OperatorSet:
    """Every operator built from one graph, in block ordering."""

    r: np.ndarray          # reflected adjacency, boundary rows doubled toward interior
    d: np.ndarray          # diagonal of diag(r @ 1)
    q: np.ndarray          # diagonal: 1 on interior, 1/2 on boundary
    l: np.ndarray          # standard graph Laplacian
    l_boundary: np.ndarray  # Laplacian of the boundary-induced subgraph, embedded n x n
    l_r: np.ndarray        # reflected Neumann Laplacian, diag(d) - r
    l_r_norm: np.ndarray   # normalized reflected Laplacian
    sym: np.ndarray        # symmetrized form, similar to l_r_norm
    l_d: np.ndarray        # Dirichlet Laplacian: interior block of l
    ordering: np.ndarray   # block position -> original vertex index

    @property
    def n_interior(self):
        return self.l_d.shape[0]


def block_ordering(g):
    """Interior vertices ascending, then boundary vertices ascending."""
    interior = g.interior()
    return np.array(interior + sorted(g.boundary), dtype=int)


def adjacency_blocks(g):
    ordering = block_ordering(g)
    a = np.array(g.adjacency(), dtype=float)
    perm = a[np.ix_(ordering, ordering)]
    k = g.n - len(g.boundary)
    return AdjacencyBlocks(
        a11=perm[:k, :k], a12=perm[:k, k:], a22=perm[k:, k:], ordering=ordering
    )


def assemble(g):
    """Build the full OperatorSet for a graph.

    Raises IsolatedVertexError when some reflected degree is zero, since the
    normalized forms are then undefined.
    """
    blocks = adjacency_blocks(g)
    k = blocks.a11.shape[0]
    n = g.n

    a = np.zeros((n, n))
    a[:k, :k] = blocks.a11
    a[:k, k:] = blocks.a12
    a[k:, :k] = blocks.a12.T
    a[k:, k:] = blocks.a22

    r = a.copy()
    r[k:, :k] *= 2.0

    deg = a.sum(axis=1)
    l = np.diag(deg) - a

    l_boundary = np.zeros((n, n))
    bdeg = blocks.a22.sum(axis=1)
    l_boundary[k:, k:] = np.diag(bdeg) - blocks.a22

    d = r.sum(axis=1)
    l_r = np.diag(d) - r

    q = np.ones(n)
    q[k:] = 0.5

    l_d = l[:k, :k]

    if np.any(d == 0):
        raise IsolatedVertexError(
            "vertex with zero reflected degree; normalized operators undefined"
        )
    d_isqrt = 1.0 / np.sqrt(d)
    l_r_norm = d_isqrt[:, None] * l_r * d_isqrt[None, :]
    dq_isqrt = 1.0 / np.sqrt(d * q)
    sym = dq_isqrt[:, None] * (l - 0.5 * l_boundary) * dq_isqrt[None, :]

    return OperatorSet(
        r=r,
        d=d,
        q=q,
        l=l,
        l_boundary=l_boundary,
        l_r=l_r,
        l_r_norm=l_r_norm,
        sym=sym,
        l_d=l_d,
        ordering=blocks.ordering,
    )


def dirichlet_laplacian(g):
    """Interior block of the (doubled graph's) Laplacian: diag(deg) - A11."""
    if len(g.boundary) == g.n:
        raise EmptyInteriorError("every vertex is boundary; no Dirichlet block")
    blocks = adjacency_blocks(g)
    k = blocks.a11.shape[0]
    deg_int = blocks.a11.sum(axis=1) + blocks.a12.sum(axis=1)
    return np.diag(deg_int) - blocks.a11


def to_original_order(mat_or_vec, ordering):
    """Re-express a block-ordered matrix or vector in original vertex indices."""
    inv = np.empty_like(ordering)
    inv[ordering] = np.arange(len(ordering))
    arr = np.asarray(mat_or_vec)
    if arr.ndim == 1:
        return arr[inv]
    return arr[np.ix_(inv, inv)]
