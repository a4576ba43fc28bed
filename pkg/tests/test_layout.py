"""Tests for qudit layouts: lattice and mesh metrics, balls, density caps."""

import math
import random
import warnings

import pytest

from topocert.bipartition import manifold_generator
from topocert.layout import (LayoutScaleWarning, MeshLayout, TorusLatticeLayout,
                             layout_from_complex, neighborhood,
                             torus_lattice_layout)

# the test meshes are deliberately small; the marginal-scale warning is expected
pytestmark = pytest.mark.filterwarnings("ignore::topocert.layout.LayoutScaleWarning")


def quiet_lattice(d, L, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return torus_lattice_layout(d, L, **kw)


def test_lattice_counts():
    assert quiet_lattice(2, 4).n == 2 * 16
    assert quiet_lattice(3, 3).n == 3 * 27
    assert quiet_lattice(2, 4).a == 1.0
    assert quiet_lattice(2, 4).L == 4.0


def test_lattice_ball_sizes():
    lay = quiet_lattice(2, 8)
    # qudit 0 is an edge at (0.5, 0); nearest others sit at distance 1/sqrt(2)
    assert neighborhood(lay, [0], 0.6) == [0]
    assert len(neighborhood(lay, [0], 0.75)) == 5
    assert len(neighborhood(lay, [0], 1.0)) == 9
    assert lay.max_unit_ball() == 9
    assert quiet_lattice(3, 4).max_unit_ball() == 15


def test_lattice_ball_matches_brute_force():
    lay = quiet_lattice(2, 6)
    rng = random.Random(3)
    for _ in range(12):
        seed = rng.randrange(lay.n)
        r = rng.choice([0.5, 0.8, 1.0, 1.5, 2.0])
        ball = set(neighborhood(lay, [seed], r))
        brute = {q for q in range(lay.n) if lay.distance(seed, q) <= r}
        assert ball == brute


def test_lattice_wraparound_metric():
    lay = quiet_lattice(2, 8)
    # same-axis edges one apart, and across the periodic seam
    p = [lay.position(i) for i in range(lay.n)]
    across = [i for i in range(lay.n) if p[i] == (7.5, 0.0)]
    assert len(across) == 1
    start = [i for i in range(lay.n) if p[i] == (0.5, 0.0)]
    assert lay.distance(start[0], across[0]) == 1.0


def test_lattice_set_distance():
    lay = quiet_lattice(2, 8)
    s1, s2 = [0, 1], [5, 6, 7]
    d = lay.set_distance(s1, s2)
    brute = min(lay.distance(i, j) for i in s1 for j in s2)
    assert d == brute
    assert lay.set_distance(s2, s1) == d
    assert lay.set_distance([3], [3]) == 0.0


def test_lattice_density_invariant():
    lay = quiet_lattice(2, 8)
    assert lay.ball_counts_ok()
    with pytest.raises(ValueError):
        quiet_lattice(3, 4, density_cap=10)


def test_lattice_scale_warning():
    with pytest.warns(LayoutScaleWarning):
        torus_lattice_layout(2, 4)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        torus_lattice_layout(2, 12)


def test_lattice_site_accessors():
    lay = quiet_lattice(2, 4)
    for q in range(lay.n):
        site, axis = lay.qudit_site_axis(q)
        pos = lay.position(q)
        want = tuple(c + (0.5 if ax == axis else 0.0) for ax, c in enumerate(site))
        assert pos == want


def test_lattice_adjacency():
    lay = quiet_lattice(2, 4)
    adj = lay.qudit_adjacency()
    assert len(adj) == lay.n
    for q, nbrs in enumerate(adj):
        assert q not in nbrs
        for v in nbrs:
            assert q in adj[v]


def test_site_centered_lattice():
    lay = quiet_lattice(3, 3, sites_per_cell=1)
    assert lay.n == 27
    assert lay.position(0) == (0.0, 0.0, 0.0)
    adj = lay.qudit_adjacency()
    assert all(len(nbrs) == 6 for nbrs in adj)
    assert lay.distance(0, 1) == 1.0


def test_mesh_layout_counts():
    M = manifold_generator("torus")
    lay = layout_from_complex(M, refine=1)
    # one qudit per edge of the subdivision
    assert lay.n == 21 * 2 + 14 * 6
    dims = sorted(set(dim for dim, _ in lay.qudit_home))
    assert dims == [1, 2]
    counts = {d: sum(1 for dim, _ in lay.qudit_home if dim == d) for d in dims}
    assert counts == {1: 42, 2: 84}
    assert lay.a == 1.0
    assert lay.L >= 1.0


def test_mesh_metric_is_edge_hops():
    M = manifold_generator("sphere")
    lay = layout_from_complex(M, refine=0)
    K = lay.complex
    edges = K.simplices[1]
    for i in range(lay.n):
        for j in range(lay.n):
            d = lay.distance(i, j)
            if i == j:
                assert d == 0.0
            elif set(edges[i]) & set(edges[j]):
                assert d == 1.0
            else:
                assert d >= 2.0


def test_mesh_neighborhood_matches_brute_force():
    M = manifold_generator("torus")
    lay = layout_from_complex(M, refine=1)
    rng = random.Random(17)
    for _ in range(8):
        seed = rng.randrange(lay.n)
        r = rng.choice([1.0, 2.0, 3.0])
        ball = set(lay.neighborhood([seed], r))
        brute = {q for q in range(lay.n) if lay.distance(seed, q) <= r}
        assert ball == brute


def test_mesh_unit_ball_is_edge_star():
    M = manifold_generator("torus")
    lay = layout_from_complex(M, refine=0)
    edges = lay.complex.simplices[1]
    for q in range(lay.n):
        star = {j for j in range(lay.n) if set(edges[q]) & set(edges[j])}
        assert set(lay.neighborhood([q], 1.0)) == star
    assert lay.max_unit_ball() == max(
        len({j for j in range(lay.n) if set(edges[q]) & set(edges[j])})
        for q in range(lay.n)
    )


def test_mesh_set_distance():
    M = manifold_generator("sphere")
    lay = layout_from_complex(M, refine=1)
    rng = random.Random(29)
    for _ in range(6):
        s1 = rng.sample(range(lay.n), 3)
        s2 = rng.sample(range(lay.n), 4)
        brute = min(lay.distance(i, j) for i in s1 for j in s2)
        assert lay.set_distance(s1, s2) == brute


def test_mesh_qudits_near_vertices():
    M = manifold_generator("torus")
    lay = layout_from_complex(M, refine=1)
    edges = lay.complex.simplices[1]
    verts = {0, 5}
    got = set(lay.qudits_near_vertices(verts, 1.0))
    want = {q for q in range(lay.n) if set(edges[q]) & verts}
    assert got == want


def test_refine_zero_is_identity_base():
    M = manifold_generator("torus")
    lay = layout_from_complex(M, refine=0)
    assert lay.base is M
    assert lay.complex is M
    lay1 = layout_from_complex(M, refine=1)
    assert lay1.base is M
    assert lay1.complex is not M
