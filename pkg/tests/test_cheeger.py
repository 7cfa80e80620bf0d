from fractions import Fraction

import numpy as np
import pytest

from reflap import (
    cheeger_exact,
    cycle_graph,
    edge_measure,
    new_boundary_graph,
    path_graph,
    reflected_spectrum,
    standard_cheeger_exact,
    sweep_cut,
    verify_theorem,
    volume,
)
from reflap.errors import (
    DisconnectedError,
    InvalidVertexError,
    LengthMismatchError,
    TooLargeError,
)

from conftest import random_connected_graph, seeded


def test_edge_measure_examples():
    g = path_graph(4, boundary="endpoints")
    assert edge_measure(g, {0, 1}, {2, 3}) == 1
    tri = new_boundary_graph(3, [(0, 1), (0, 2), (1, 2)], [0, 1])
    assert edge_measure(tri, {0}, {1}) == Fraction(1, 2)
    assert edge_measure(g, set(), {0, 1, 2, 3}) == 0


def test_edge_measure_symmetric():
    rng = seeded(83)
    for _ in range(30):
        g = random_connected_graph(rng, n_max=8)
        u = set(rng.sample(range(g.n), rng.randint(0, g.n)))
        w = set(rng.sample(range(g.n), rng.randint(0, g.n)))
        assert edge_measure(g, u, w) == edge_measure(g, w, u)


def test_edge_measure_invalid_vertex():
    g = path_graph(3)
    with pytest.raises(InvalidVertexError):
        edge_measure(g, {5}, {0})


def test_volume_examples():
    g = path_graph(4, boundary="endpoints")
    assert volume(g, {0}) == 1
    assert volume(g, range(4)) == 6
    assert volume(g, set()) == 0
    plain = path_graph(4)
    assert volume(plain, range(4)) == 6  # sum of degrees


def test_volumes_are_half_integers():
    rng = seeded(89)
    for _ in range(30):
        g = random_connected_graph(rng, n_max=9)
        u = set(rng.sample(range(g.n), rng.randint(0, g.n)))
        assert (2 * volume(g, u)).denominator == 1
        assert (2 * edge_measure(g, u, set(range(g.n)) - u)).denominator == 1


def test_cheeger_exact_p4_boundary():
    g = path_graph(4, boundary="endpoints")
    h, cut = cheeger_exact(g)
    assert h == Fraction(1, 3)
    assert cut.subset == (0, 1)
    assert cut.cut_measure == 1
    assert cut.vol_s == 3 and cut.vol_complement == 3


def test_cheeger_exact_p4_plain():
    h, cut = cheeger_exact(path_graph(4))
    assert h == Fraction(1, 3)
    assert cut.subset == (0, 1)


def test_cheeger_exact_c6():
    h, cut = cheeger_exact(cycle_graph(6))
    assert h == Fraction(1, 3)
    assert len(cut.subset) == 3


def test_cheeger_exact_disconnected():
    g = new_boundary_graph(4, [(0, 1), (2, 3)], [])
    with pytest.raises(DisconnectedError) as exc:
        cheeger_exact(g)
    assert exc.value.cut.cut_measure == 0


def test_cheeger_exact_too_large():
    with pytest.raises(TooLargeError):
        cheeger_exact(path_graph(30))
    # but the cap is overridable
    h, _ = cheeger_exact(path_graph(23), max_n=23)
    assert h == Fraction(1, 21)


def test_cheeger_complement_invariance():
    rng = seeded(97)
    for _ in range(40):
        g = random_connected_graph(rng, n_max=9)
        h, cut = cheeger_exact(g)
        comp = tuple(sorted(set(range(g.n)) - set(cut.subset)))
        # ratio of the complement equals the optimum
        m = edge_measure(g, cut.subset, comp)
        assert m / min(volume(g, comp), volume(g, cut.subset)) == h
        assert 0 in cut.subset


def test_cheeger_reduction_to_standard():
    rng = seeded(101)
    for _ in range(40):
        g = random_connected_graph(rng, n_max=9, boundary_size=0)
        h, _ = cheeger_exact(g)
        assert h == standard_cheeger_exact(g)


def test_sweep_cut_recovers_optimum_from_indicator():
    rng = seeded(103)
    for _ in range(30):
        g = random_connected_graph(rng, n_max=9)
        h, cut = cheeger_exact(g)
        vec = [-1.0 if v in cut.subset else 1.0 for v in range(g.n)]
        swept = sweep_cut(g, vec)
        assert swept.ratio == h


def test_sweep_cut_p4():
    g = path_graph(4, boundary="endpoints")
    rs = reflected_spectrum(g)
    cut = sweep_cut(g, rs.sweep_vectors[:, 1])
    assert cut.ratio == Fraction(1, 3)


def test_sweep_cut_constant_vector_uses_index_order():
    g = path_graph(4, boundary="endpoints")
    cut = sweep_cut(g, [0.0] * 4)
    # prefixes of 0,1,2,3: best ratio among {0},{0,1},{0,1,2}
    assert cut.ratio == Fraction(1, 3)
    assert cut.subset == (0, 1)


def test_sweep_cut_length_mismatch():
    with pytest.raises(LengthMismatchError):
        sweep_cut(path_graph(4), [1.0, 2.0])


def test_sweep_ratio_never_beats_exact():
    rng = seeded(107)
    for _ in range(50):
        g = random_connected_graph(rng, n_max=10)
        h, _ = cheeger_exact(g)
        rs = reflected_spectrum(g)
        cut = sweep_cut(g, rs.sweep_vectors[:, 1])
        assert cut.ratio >= h


def test_verify_theorem_p4():
    rep = verify_theorem(path_graph(4, boundary="endpoints"))
    assert abs(rep.lambda_r - 0.5) < 1e-10
    assert rep.h_r == Fraction(1, 3)
    assert abs(rep.upper - 1.0) < 1e-10
    assert abs(rep.lower - 0.25) < 1e-10
    assert rep.holds and rep.sweep_ok


def test_verify_theorem_c6():
    rep = verify_theorem(cycle_graph(6))
    assert abs(rep.lambda_r - 0.5) < 1e-10
    assert rep.h_r == Fraction(1, 3)
    assert rep.holds


def test_verify_theorem_random_suite():
    rng = seeded(109)
    for _ in range(60):
        g = random_connected_graph(rng, n_max=10)
        rep = verify_theorem(g)
        assert rep.holds and rep.sweep_ok
