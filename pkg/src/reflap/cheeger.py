"""Boundary-weighted cut measure, exact Cheeger constant, and sweep cuts.

Measures and volumes are integer multiples of 1/2; everything combinatorial
is done in exact arithmetic (integer half-counts and Fractions) so the
optimal subset and all tie-breaks are deterministic.  Floats appear only in
the final report.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DisconnectedError,
    InvalidVertexError,
    IsolatedVertexError,
    LengthMismatchError,
    TooLargeError,
    TooSmallError,
)
from .graphs import components, is_connected
from .spectra import reflected_spectrum

DEFAULT_MAX_N = 22
_CHUNK = 1 << 16


@dataclass(frozen=True)
class CutResult:
    subset: tuple            # sorted vertex indices of S
    cut_measure: Fraction    # m(S, V \ S)
    vol_s: Fraction
    vol_complement: Fraction
    ratio: Fraction          # cut_measure / min(vol_s, vol_complement)


@dataclass(frozen=True)
class CheegerReport:
    h_r: Fraction
    optimal: CutResult
    lambda_r: float
    sweep: CutResult
    upper: float             # sqrt(2 lambda_r)
    lower: float             # lambda_r / 2
    holds: bool
    sweep_ok: bool           # sweep ratio <= upper + 1e-9


def _check_subset(g, u):
    for v in u:
        if not (0 <= v < g.n):
            raise InvalidVertexError("vertex %d out of range" % v)


def edge_measure(g, u, w):
    """m(U, W): crossing edges, boundary-boundary crossings counted half."""
    _check_subset(g, u)
    _check_subset(g, w)
    uset, wset = set(u), set(w)
    halves = 0
    for a, b in g.edges:
        if (a in uset and b in wset) or (b in uset and a in wset):
            halves += 1 if (a in g.boundary and b in g.boundary) else 2
    return Fraction(halves, 2)


def volume(g, u):
    """vol(U) = sum over u in U of m({u}, V)."""
    _check_subset(g, u)
    halves = sum(_vertex_weights(g)[v] for v in set(u))
    return Fraction(halves, 2)


def _vertex_weights(g):
    """Per-vertex m({v}, V) in units of halves (exact integers)."""
    w = [0] * g.n
    for a, b in g.edges:
        both = a in g.boundary and b in g.boundary
        w[a] += 1 if both else 2
        w[b] += 1 if both else 2
    return w


def _edge_arrays(g):
    eu, ev, ew = [], [], []
    for a, b in sorted(g.edges):
        eu.append(a)
        ev.append(b)
        ew.append(1 if (a in g.boundary and b in g.boundary) else 2)
    return np.array(eu), np.array(ev), np.array(ew, dtype=np.int64)


def cheeger_exact(g, max_n=DEFAULT_MAX_N):
    """Exact Cheeger constant by enumerating every cut with vertex 0 inside.

    Returns (h_r, CutResult).  Ties are broken by the lexicographically
    smallest subset bitmask.  Raises DisconnectedError (with a witness
    zero-measure cut) rather than returning the degenerate 0.
    """
    n = g.n
    if n > max_n:
        raise TooLargeError("n=%d exceeds brute-force cap %d" % (n, max_n))
    if n < 2:
        raise TooSmallError("need at least 2 vertices for a proper cut")
    weights = _vertex_weights(g)
    if any(w == 0 for w in weights):
        raise IsolatedVertexError("isolated vertex makes some volumes zero")
    if not is_connected(g):
        comp = components(g)[0]
        cut = _make_cut(g, comp)
        raise DisconnectedError("graph is disconnected; h_R degenerates to 0", cut=cut)

    w = np.array(weights, dtype=np.int64)
    vol_total = int(w.sum())
    eu, ev, ew = _edge_arrays(g)
    shifts = np.arange(n, dtype=np.int64)

    best_ratio = None
    best_mask = None
    total = 1 << (n - 1)
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        masks = (np.arange(lo, hi, dtype=np.int64) << 1) | 1
        if hi == total:
            masks = masks[:-1]  # drop S = V
        if len(masks) == 0:
            continue
        in_s = ((masks[:, None] >> shifts[None, :]) & 1).astype(bool)
        vols = in_s @ w
        cuts = (in_s[:, eu] != in_s[:, ev]) @ ew
        minvol = np.minimum(vols, vol_total - vols)
        ratio = cuts / minvol
        floor = ratio.min()
        cand = np.nonzero(ratio <= floor * (1.0 + 1e-12) + 1e-300)[0]
        for i in cand:
            frac = Fraction(int(cuts[i]), int(minvol[i]))
            mask = int(masks[i])
            if (
                best_ratio is None
                or frac < best_ratio
                or (frac == best_ratio and mask < best_mask)
            ):
                best_ratio = frac
                best_mask = mask

    subset = [v for v in range(n) if (best_mask >> v) & 1]
    cut = _make_cut(g, subset)
    return cut.ratio, cut


def _make_cut(g, subset):
    sset = set(subset)
    comp = [v for v in range(g.n) if v not in sset]
    m = edge_measure(g, subset, comp)
    vol_s = volume(g, subset)
    vol_c = volume(g, comp)
    return CutResult(
        subset=tuple(sorted(sset)),
        cut_measure=m,
        vol_s=vol_s,
        vol_complement=vol_c,
        ratio=m / min(vol_s, vol_c),
    )


def standard_cheeger_exact(g, max_n=DEFAULT_MAX_N):
    """Classical Cheeger constant, ignoring the boundary designation.

    Independent of cheeger_exact's weighting: plain crossing-edge counts over
    degree volumes, enumerated directly.  Used as a cross-check oracle when
    the boundary set is empty.
    """
    n = g.n
    if n > max_n:
        raise TooLargeError("n=%d exceeds brute-force cap %d" % (n, max_n))
    deg = [g.degree(v) for v in range(n)]
    vol_total = sum(deg)
    edge_list = sorted(g.edges)
    best = None
    for mask in range(1, (1 << n) - 1, 2):  # vertex 0 always in S
        vol_s = sum(deg[v] for v in range(n) if (mask >> v) & 1)
        vol_c = vol_total - vol_s
        if vol_s == 0 or vol_c == 0:
            continue
        crossing = sum(
            1 for u, v in edge_list if ((mask >> u) & 1) != ((mask >> v) & 1)
        )
        frac = Fraction(crossing, min(vol_s, vol_c))
        if best is None or frac < best:
            best = frac
    return best


def sweep_cut(g, sweep_vector):
    """Best prefix cut after sorting vertices by sweep value (ties by index)."""
    if len(sweep_vector) != g.n:
        raise LengthMismatchError(
            "sweep vector has length %d, graph has %d vertices"
            % (len(sweep_vector), g.n)
        )
    if g.n < 2:
        raise TooSmallError("need at least 2 vertices for a proper cut")
    order = sorted(range(g.n), key=lambda v: (sweep_vector[v], v))

    weights = _vertex_weights(g)
    vol_total = sum(weights)
    adj_w = [dict() for _ in range(g.n)]
    for a, b in g.edges:
        hw = 1 if (a in g.boundary and b in g.boundary) else 2
        adj_w[a][b] = hw
        adj_w[b][a] = hw

    in_s = [False] * g.n
    cut_halves = 0
    vol_halves = 0
    best = None
    best_prefix = None
    for j, v in enumerate(order[:-1]):
        in_s[v] = True
        vol_halves += weights[v]
        for u, hw in adj_w[v].items():
            cut_halves += -hw if in_s[u] else hw
        minvol = min(vol_halves, vol_total - vol_halves)
        if minvol == 0:
            continue
        frac = Fraction(cut_halves, minvol)
        if best is None or frac < best:
            best = frac
            best_prefix = j + 1
    if best is None:
        raise IsolatedVertexError("every prefix has zero volume on one side")
    return _make_cut(g, order[:best_prefix])


def verify_theorem(g, max_n=DEFAULT_MAX_N, tol=1e-12):
    """Certify sqrt(2 lambda_R) >= h_R >= lambda_R / 2 on one graph.

    Also records whether the sweep cut from the first nontrivial eigenvector
    lands inside [h_R, sqrt(2 lambda_R)], the constructive guarantee.
    """
    spec = reflected_spectrum(g, tol=tol)
    lam = spec.lambda_r
    h_r, optimal = cheeger_exact(g, max_n=max_n)
    sweep = sweep_cut(g, spec.sweep_vectors[:, 1])
    upper = math.sqrt(2.0 * lam)
    lower = lam / 2.0
    h = float(h_r)
    holds = (upper >= h - 1e-9) and (h >= lower - 1e-9)
    sweep_ok = float(sweep.ratio) <= upper + 1e-9
    return CheegerReport(
        h_r=h_r,
        optimal=optimal,
        lambda_r=lam,
        sweep=sweep,
        upper=upper,
        lower=lower,
        holds=holds,
        sweep_ok=sweep_ok,
    )
