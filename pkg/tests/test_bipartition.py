"""Tests for the red/blue cellulation pipeline and the A/B/C partition."""

import random
import warnings

import pytest

from topocert.bipartition import (CellulationError, abc_partition, cellulate,
                                  defect_chain, manifold_generator,
                                  partner_matching, skeleton_region,
                                  solve_boundary_parity, torus_checkerboard,
                                  two_color, verify_cellulation)
from topocert.gf2 import BitVector
from topocert.layout import layout_from_complex, torus_lattice_layout
from topocert.simplicial import (Chain, barycentric_subdivide, betti_numbers,
                                 boundary_matrix, chain_boundary,
                                 full_skeleton_chain)

pytestmark = pytest.mark.filterwarnings("ignore::topocert.layout.LayoutScaleWarning")

SURFACES = ("sphere", "torus", "klein_bottle", "projective_plane")


def test_manifold_generator_table():
    facts = {
        "sphere": ((4, 6, 4), (1, 0, 1)),
        "torus": ((7, 21, 14), (1, 2, 1)),
        "klein_bottle": ((9, 27, 18), (1, 2, 1)),
        "projective_plane": ((6, 15, 10), (1, 1, 1)),
    }
    for name, (fvec, betti) in facts.items():
        K = manifold_generator(name)
        assert K.is_closed_manifold()
        assert K.f_vector() == fvec
        assert betti_numbers(K) == betti


def test_genus_surfaces_scale_linearly():
    for g in (1, 2, 3):
        K = manifold_generator("genus_surface", genus=g)
        assert K.is_closed_manifold()
        assert K.f_vector() == (4 * g + 3, 18 * g + 3, 12 * g + 2)
        assert betti_numbers(K) == (1, 2 * g, 1)


def test_torus3_generator():
    K = manifold_generator("torus3")
    assert K.dim == 3
    assert K.is_closed_manifold()
    assert K.n_simplices(3) == 27 * 6
    assert betti_numbers(K) == (1, 3, 3, 1)


def test_manifold_generator_errors():
    with pytest.raises(ValueError):
        manifold_generator("moebius")
    with pytest.raises(ValueError):
        manifold_generator("genus_surface", genus=0)
    with pytest.raises(ValueError):
        manifold_generator("torus3", grid=2)
    with pytest.raises(ValueError):
        manifold_generator("sphere", grid=3)


def test_defect_chain_weight():
    # N = (all child faces) minus the image of the parent faces, which is
    # a disjoint sub-sum: weight = E'' - 2 E'
    for name in ("sphere", "torus"):
        M = manifold_generator(name)
        sub1 = barycentric_subdivide(M)
        sub2 = barycentric_subdivide(sub1.child)
        N = defect_chain(sub2)
        e1 = sub1.child.n_simplices(1)
        e2 = sub2.child.n_simplices(1)
        assert N.weight() == e2 - 2 * e1


def test_solve_boundary_parity_exact():
    for name in SURFACES:
        M = manifold_generator(name)
        sub = barycentric_subdivide(M)
        K = sub.child
        rng = random.Random(hash(name) & 0xFFFF)
        for _ in range(5):
            top = Chain(K, 2, BitVector(K.n_simplices(2),
                                        rng.getrandbits(K.n_simplices(2))))
            target = chain_boundary(top)
            x = solve_boundary_parity(K, target)
            assert chain_boundary(Chain(K, 2, x)) == target
            # canonical: the lowest-index top simplex is left out of P
            assert x.get(0) == 0


def test_solve_matches_dense_solver():
    # union-find route and Gaussian elimination agree up to a cycle
    M = manifold_generator("projective_plane")
    sub = barycentric_subdivide(M)
    K = sub.child
    d2 = boundary_matrix(K, 2)
    rng = random.Random(77)
    for _ in range(5):
        top = BitVector(K.n_simplices(2), rng.getrandbits(K.n_simplices(2)))
        target = d2.mul_vec(top)
        x_uf = solve_boundary_parity(K, Chain(K, 1, target))
        x_ge = d2.solve(target)
        assert x_ge is not None
        assert d2.mul_vec(x_uf) == target
        diff = x_uf ^ x_ge
        assert d2.mul_vec(diff).bits == 0


def test_solve_rejects_nonbounding_target():
    # the full (d-1)-skeleton of a nonorientable surface subdivision is
    # not null-homologous
    M = manifold_generator("klein_bottle")
    sub = barycentric_subdivide(M)
    target = full_skeleton_chain(sub.child, 1)
    with pytest.raises(CellulationError):
        solve_boundary_parity(sub.child, target)


def test_solve_input_validation():
    M = manifold_generator("sphere")
    sub = barycentric_subdivide(M)
    wrong = full_skeleton_chain(sub.child, 0)
    with pytest.raises(ValueError):
        solve_boundary_parity(sub.child, wrong)


def test_partner_matching_properties():
    M = manifold_generator("torus")
    pipe = cellulate(M)
    K = pipe.second
    pairs = pipe.pairs
    assert len(pairs) == K.n_simplices(2) // 2
    seen = sorted(t for p in pairs for t in p)
    assert seen == list(range(K.n_simplices(2)))
    marked = set(pipe.marked.support.indices())
    idx = K.index[1]
    from itertools import combinations
    for a, b in pairs:
        sa, sb = K.simplices[2][a], K.simplices[2][b]
        shared = tuple(sorted(set(sa) & set(sb)))
        assert len(shared) == 2
        assert idx[shared] in marked
        # the shared face is the unique marked face of both
        for s in (sa, sb):
            hits = [f for f in combinations(s, 2) if idx[tuple(sorted(f))] in marked]
            assert hits == [shared]


def test_partner_matching_rejects_unmarked():
    M = manifold_generator("sphere")
    sub = barycentric_subdivide(M)
    K = sub.child
    empty = Chain(K, 1, BitVector(K.n_simplices(1)))
    with pytest.raises(CellulationError):
        partner_matching(K, empty)


def test_two_color_pair_closure():
    M = manifold_generator("sphere")
    sub = barycentric_subdivide(M)
    K = sub.child
    one_top = Chain.from_simplices(K, 2, [K.simplices[2][0]])
    target = chain_boundary(one_top)
    nt = K.n_simplices(2)
    pairs = [(2 * i, 2 * i + 1) for i in range(nt // 2)]
    with pytest.raises(CellulationError):
        two_color(K, target, pairs)
    with pytest.raises(CellulationError):
        two_color(K, target, pairs[:-1])


def test_cellulate_general_frozen_counts():
    frozen = {
        "sphere": 72,
        "torus": 252,
        "klein_bottle": 324,
        "projective_plane": 180,
    }
    for name, cells in frozen.items():
        pipe = cellulate(manifold_generator(name))
        c = pipe.cellulation
        assert c.kind == "pairs"
        assert c.n_cells() == cells
        assert c.color_counts() == {"red": cells // 2, "blue": cells // 2}
        # the coloring solves the boundary equation exactly
        assert chain_boundary(c.partition) == c.defect
        # cells partition the top simplices
        assert sorted(t for cell in c.cells for t in cell) == list(
            range(c.base.n_simplices(c.d)))
        for ci, cell in enumerate(c.cells):
            for t in cell:
                assert c.cell_of_top[t] == ci


def test_cellulate_genus2():
    pipe = cellulate(manifold_generator("genus_surface", genus=2))
    assert pipe.cellulation.n_cells() == 468
    assert chain_boundary(pipe.cellulation.partition) == pipe.cellulation.defect


def test_cellulate_shortcut():
    sphere = cellulate(manifold_generator("sphere"), shortcut=True)
    assert sphere.cellulation.kind == "singles"
    assert sphere.cellulation.n_cells() == 24
    torus = cellulate(manifold_generator("torus"), shortcut=True)
    assert torus.cellulation.n_cells() == 84
    assert chain_boundary(torus.cellulation.partition) == torus.cellulation.defect


def test_cellulate_shortcut_rejects_nonorientable():
    for name in ("klein_bottle", "projective_plane"):
        with pytest.raises(CellulationError):
            cellulate(manifold_generator(name), shortcut=True)


def test_checkerboard_structure():
    c = torus_checkerboard(2, 2)
    assert c.kind == "cubical"
    assert c.cells == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert c.colors == ["red", "blue", "blue", "red"]
    assert torus_checkerboard(3, 4).n_cells() == 64
    with pytest.raises(ValueError):
        torus_checkerboard(2, 3)
    with pytest.raises(ValueError):
        torus_checkerboard(1, 2)


def test_checkerboard_verification_frozen():
    c = torus_checkerboard(2, 2)
    for L, want_c in ((4, 16), (6, 16), (8, 16)):
        lay = torus_lattice_layout(2, L)
        rep = verify_cellulation(c, lay, 1.0, 2.0)
        assert rep.passed, rep.lines()
        assert rep.stats["skeleton_qudits"] == want_c
    lay8 = torus_lattice_layout(2, 8)
    rep = verify_cellulation(c, lay8, 2.0, 2.0)
    assert rep.passed
    assert rep.stats["skeleton_qudits"] == 96
    assert rep.stats["components"] == 4
    c3 = torus_checkerboard(3, 2)
    lay3 = torus_lattice_layout(3, 4)
    rep3 = verify_cellulation(c3, lay3, 1.0, 2.0)
    assert rep3.passed
    assert rep3.stats["skeleton_qudits"] == 144


def test_checkerboard_separation_failure():
    c = torus_checkerboard(2, 2)
    lay = torus_lattice_layout(2, 8)
    rep = verify_cellulation(c, lay, 1.0, 10.0)
    assert not rep.passed
    failed = {name for name, ok, _ in rep.checks if not ok}
    assert "component_separation" in failed


def test_corrupted_coloring_detected():
    c = torus_checkerboard(2, 2)
    c.colors[0] = "blue"  # two blue blocks now share an edge
    lay = torus_lattice_layout(2, 8)
    rep = verify_cellulation(c, lay, 1.0, 2.0)
    assert not rep.passed
    failed = {name for name, ok, _ in rep.checks if not ok}
    assert "color_adjacency" in failed


def test_mesh_verification_and_corruption():
    pipe = cellulate(manifold_generator("torus"))
    c = pipe.cellulation
    lay = layout_from_complex(c.base, refine=1)
    rep = verify_cellulation(c, lay, 1.0, 2.0)
    assert rep.passed, rep.lines()
    assert rep.stats["components"] > 0
    c.colors[0] = "red" if c.colors[0] == "blue" else "blue"
    rep2 = verify_cellulation(c, lay, 1.0, 2.0)
    assert not rep2.passed
    failed = {name for name, ok, _ in rep2.checks if not ok}
    assert "color_adjacency" in failed


def test_skeleton_region_matches_brute_force():
    c = torus_checkerboard(2, 2)
    lay = torus_lattice_layout(2, 8)
    got = set(skeleton_region(c, lay, 2.0))
    # the (d-2)-skeleton of a 2-block checkerboard on L=8 is the four
    # block-corner points
    corners = [(0.0, 0.0), (0.0, 4.0), (4.0, 0.0), (4.0, 4.0)]

    def wrap_dist(p, q):
        return sum(min(abs(a - b), 8 - abs(a - b)) ** 2
                   for a, b in zip(p, q)) ** 0.5

    brute = {q for q in range(lay.n)
             if min(wrap_dist(lay.position(q), pt) for pt in corners) <= 2.0}
    assert got == brute


def test_abc_partition_requires_verification():
    c = torus_checkerboard(2, 2)
    lay = torus_lattice_layout(2, 8)
    with pytest.raises(ValueError):
        abc_partition(c, lay, 2.0)
    verify_cellulation(c, lay, 2.0, 2.0)
    A, B, C = abc_partition(c, lay, 2.0)
    assert (len(A), len(B), len(C)) == (16, 16, 96)
    assert sorted(A + B + C) == list(range(lay.n))
    # A and B hold entire same-color components: equal block populations
    assert len(A) == len(B)
    # radius not verified -> still rejected
    with pytest.raises(ValueError):
        abc_partition(c, lay, 1.0)


def test_abc_vacuous_when_belt_swallows_all():
    c = torus_checkerboard(2, 2)
    lay = torus_lattice_layout(2, 8)
    rep = verify_cellulation(c, lay, 4.0, 2.0)
    assert rep.passed  # no components remain, checks hold vacuously
    A, B, C = abc_partition(c, lay, 4.0)
    assert A == [] and B == []
    assert len(C) == lay.n
