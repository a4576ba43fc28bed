"""Red/blue cellulations of closed manifolds and A/B/C qudit partitions.

The general construction subdivides a closed d-manifold twice.  On the
second subdivision M2, the defect chain N is the sum of all
(d-1)-simplices of M2 minus (mod 2) the image of all (d-1)-simplices of
the first subdivision M1 under the subdivision chain map.  N is always
null-homologous, and a solution P of dP = N is closed under the pairing
that matches each d-simplex of M2 with the unique neighbor across its
one marked face.  Matched pairs inside P become red cells, the rest
blue: cells of equal color never share a (d-1)-face, so same-color cells
meet only along the (d-2)-skeleton.

For orientable manifolds a one-subdivision shortcut works: the sum of
all (d-1)-simplices of M1 is itself null-homologous and the solution is
the parity 2-coloring of single d-simplices.

Cubical checkerboard cellulations of the torus lattice live in the same
Cellulation type with a cell-kind tag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .gf2 import BitVector
from .layout import MeshLayout, QuditLayout, TorusLatticeLayout
from .simplicial import (
    Chain,
    SimplicialComplex,
    SubdivisionMap,
    barycentric_subdivide,
    build_complex,
    full_skeleton_chain,
    push_chain,
)


class CellulationError(ValueError):
    """The cellulation construction hit a structural obstruction."""


# -- manifold generators ---------------------------------------------------

# 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7
_TORUS7 = [tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)] + [
    tuple(sorted(((i) % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7)
]

# 6-vertex projective plane (antipodal icosahedron quotient)
_RP2 = [
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
    (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
]

_TETRA_POSITIONS = {
    0: (1.0, 1.0, 1.0),
    1: (1.0, -1.0, -1.0),
    2: (-1.0, 1.0, -1.0),
    3: (-1.0, -1.0, 1.0),
}


def _sphere() -> SimplicialComplex:
    return build_complex(
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
        positions=dict(_TETRA_POSITIONS),
    )


def _torus() -> SimplicialComplex:
    return build_complex(_TORUS7)


def _projective_plane() -> SimplicialComplex:
    return build_complex(_RP2)


def _klein_bottle(grid: int = 3) -> SimplicialComplex:
    """Square grid on the torus with one gluing reversed."""
    if grid < 3:
        raise ValueError("grid must be at least 3")
    n = grid

    def vid(x: int, y: int) -> int:
        if y == n:  # reversed identification
            return ((n - x) % n)  # row 0, flipped x
        return (y % n) * n + (x % n)

    tops = []
    for x in range(n):
        for y in range(n):
            c00 = vid(x, y)
            c10 = vid(x + 1, y)
            c01 = vid(x, y + 1)
            c11 = vid(x + 1, y + 1)
            tops.append((c00, c10, c11))
            tops.append((c00, c11, c01))
    return build_complex(tops)


def _genus_surface(genus: int) -> SimplicialComplex:
    """Connected sum of `genus` copies of the 7-vertex torus.

    Adjacent copies each lose one triangle and are glued along the
    boundary of the removed faces; counts grow linearly in the genus.
    """
    if genus < 1:
        raise ValueError("genus must be at least 1")
    if genus == 1:
        return _torus()
    rm_out = (1, 2, 4)  # removed for the joint toward the next copy
    rm_in = (0, 1, 3)   # removed for the joint toward the previous copy

    parent = list(range(7 * genus))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for j in range(genus - 1):
        for a, b in zip(rm_out, rm_in):
            ra, rb = find(7 * j + a), find(7 * (j + 1) + b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    tops = []
    for copy in range(genus):
        removed = set()
        if copy < genus - 1:
            removed.add(rm_out)
        if copy > 0:
            removed.add(rm_in)
        for f in _TORUS7:
            if f in removed:
                continue
            tops.append(tuple(find(7 * copy + v) for v in f))
    # compact the vertex labels
    used = sorted({v for f in tops for v in f})
    relabel = {v: i for i, v in enumerate(used)}
    return build_complex([tuple(sorted(relabel[v] for v in f)) for f in tops])


def _torus3(grid: int = 3) -> SimplicialComplex:
    """Cubic grid on the 3-torus, each cube split into 6 tetrahedra."""
    if grid < 3:
        raise ValueError("grid must be at least 3 for a simplicial quotient")
    n = grid

    def vid(x: int, y: int, z: int) -> int:
        return ((z % n) * n + (y % n)) * n + (x % n)

    tops = []
    positions = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                positions[vid(x, y, z)] = (float(x), float(y), float(z))
                base = (x, y, z)
                for perm in permutations(range(3)):
                    path = [base]
                    cur = list(base)
                    for ax in perm:
                        cur[ax] += 1
                        path.append(tuple(cur))
                    tops.append(tuple(sorted(vid(*p) for p in path)))
    return build_complex(tops, positions=positions)


def manifold_generator(name: str, **params) -> SimplicialComplex:
    """Built-in closed-manifold triangulations.

    Names: sphere, torus, torus3 (grid=3), genus_surface (genus),
    klein_bottle (grid=3), projective_plane.
    """
    generators = {
        "sphere": _sphere,
        "torus": _torus,
        "torus3": _torus3,
        "genus_surface": _genus_surface,
        "klein_bottle": _klein_bottle,
        "projective_plane": _projective_plane,
    }
    if name not in generators:
        raise ValueError(
            "unknown manifold %r (choose from %s)"
            % (name, ", ".join(sorted(generators)))
        )
    try:
        return generators[name](**params)
    except TypeError:
        raise ValueError("bad parameters %r for manifold %r" % (params, name))


# -- cellulation type -------------------------------------------------------


@dataclass
class Cellulation:
    """Cells, colors and skeleton of a two-colored cellulation.

    kind is "pairs" (two d-simplices of `base` glued along one face),
    "singles" (one d-simplex per cell, orientable shortcut) or "cubical"
    (checkerboard blocks, `base` unused).  Colors are "red"/"blue".
    """

    kind: str
    d: int
    cells: list[tuple]
    colors: list[str]
    base: SimplicialComplex | None = None
    cell_of_top: list[int] | None = None
    defect: Chain | None = None
    partition: Chain | None = None
    blocks_per_axis: int = 0
    _verified: set = field(default_factory=set, repr=False)

    def n_cells(self) -> int:
        return len(self.cells)

    def color_counts(self) -> dict[str, int]:
        out = {"red": 0, "blue": 0}
        for c in self.colors:
            out[c] += 1
        return out


@dataclass
class BoundCertificate:
    """Outcome of a degeneracy-bound certification run."""

    code_name: str
    n_qubits: int
    log2_degeneracy: int
    region_sizes: dict[str, int]
    a_correctable: bool
    b_correctable: bool
    r_skel: float
    holds: bool
    applicable: bool
    detail: str


# -- defect chain, partner matching, two-coloring ---------------------------


def defect_chain(sub: SubdivisionMap) -> Chain:
    """N on the subdivided complex: all (d-1)-simplices minus the image
    of all parent (d-1)-simplices under the subdivision chain map."""
    d = sub.parent.dim
    if d < 1:
        raise ValueError("need dimension >= 1")
    whole = full_skeleton_chain(sub.child, d - 1)
    image = push_chain(sub, full_skeleton_chain(sub.parent, d - 1))
    return whole ^ image


def partner_matching(K: SimplicialComplex, marked: Chain) -> list[tuple[int, int]]:
    """Perfect matching of d-simplices across their unique marked face.

    marked must be a (d-1)-chain on K such that every d-simplex of K has
    exactly one face in it and marked faces join exactly the resulting
    partners.
    """
    d = K.dim
    if marked.complex is not K or marked.degree != d - 1:
        raise ValueError("marked chain must be a (d-1)-chain on K")
    idx = K.index[d - 1]
    mbits = marked.support.bits
    partner = [-1] * K.n_simplices(d)
    marked_face_of = [-1] * K.n_simplices(d)
    for j, s in enumerate(K.simplices[d]):
        hits = [idx[f] for f in combinations(s, d) if (mbits >> idx[f]) & 1]
        if len(hits) != 1:
            raise CellulationError(
                "d-simplex %r has %d marked faces (need exactly 1)"
                % (s, len(hits))
            )
        marked_face_of[j] = hits[0]
    cofaces: dict[int, list[int]] = {}
    for j, f in enumerate(marked_face_of):
        cofaces.setdefault(f, []).append(j)
    for f, js in sorted(cofaces.items()):
        if len(js) != 2:
            raise CellulationError(
                "marked face %r has %d claimants (need exactly 2)"
                % (K.simplices[d - 1][f], len(js))
            )
        a, b = js
        partner[a] = b
        partner[b] = a
    return sorted((min(a, b), max(a, b)) for a, b in enumerate(partner) if a < b)


class _ParityUnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.parity = [0] * n  # parity of x relative to parent

    def find(self, x: int) -> tuple[int, int]:
        root = x
        p = 0
        while self.parent[root] != root:
            p ^= self.parity[root]
            root = self.parent[root]
        # path compression
        cur, cp = x, p
        while self.parent[cur] != root:
            nxt = self.parent[cur]
            np = cp ^ self.parity[cur]
            self.parent[cur] = root
            self.parity[cur] = cp
            cur, cp = nxt, np
        return root, p

    def union(self, a: int, b: int, rel: int) -> bool:
        """Impose x_a ^ x_b = rel; False on contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == rel
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
            pa, pb = pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ rel
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def solve_boundary_parity(K: SimplicialComplex, target: Chain) -> BitVector:
    """Canonical solution P of (boundary of P) = target for a top chain.

    On a closed manifold every (d-1)-simplex has two d-cofaces, so the
    system says the two cofaces of f disagree exactly when f is in the
    target: a parity 2-coloring of the coface graph.  The solution is
    canonicalized so the lowest-index d-simplex of each component is
    outside P.  Raises CellulationError when no solution exists (the
    target is not null-homologous).
    """
    d = K.dim
    if target.complex is not K or target.degree != d - 1:
        raise ValueError("target must be a (d-1)-chain on K")
    nt = K.n_simplices(d)
    uf = _ParityUnionFind(nt)
    idx = K.index[d - 1]
    cofaces: list[list[int]] = [[] for _ in range(K.n_simplices(d - 1))]
    for j, s in enumerate(K.simplices[d]):
        for f in combinations(s, d):
            cofaces[idx[f]].append(j)
    tbits = target.support.bits
    for f, js in enumerate(cofaces):
        if len(js) != 2:
            raise CellulationError(
                "face %r has %d cofaces; need a closed manifold"
                % (K.simplices[d - 1][f], len(js))
            )
        rel = (tbits >> f) & 1
        if not uf.union(js[0], js[1], rel):
            raise CellulationError(
                "no solution: the target chain is not null-homologous "
                "(contradiction at face %r)" % (K.simplices[d - 1][f],)
            )
    # canonical representative: first simplex of each component gets 0
    flip: dict[int, int] = {}
    bits = 0
    for t in range(nt):
        root, p = uf.find(t)
        if root not in flip:
            flip[root] = p  # this is the lowest t in its component
        if p ^ flip[root]:
            bits |= 1 << t
    return BitVector(nt, bits)


def two_color(K: SimplicialComplex, defect: Chain,
              pairs: list[tuple[int, int]] | None = None) -> Cellulation:
    """Solve dP = defect and color cells: pairs inside P red, others blue.

    With pairs=None each d-simplex is its own cell (orientable shortcut).
    Checks that P is closed under the pairing.
    """
    d = K.dim
    x = solve_boundary_parity(K, defect)
    if pairs is None:
        cells = [(t,) for t in range(K.n_simplices(d))]
    else:
        seen = [t for p in pairs for t in p]
        if sorted(seen) != list(range(K.n_simplices(d))):
            raise CellulationError("pairs do not form a perfect matching")
        for a, b in pairs:
            if x.get(a) != x.get(b):
                raise CellulationError(
                    "solution is not closed under the pairing at (%d, %d)"
                    % (a, b)
                )
        cells = [tuple(p) for p in pairs]
    cells.sort()
    colors = ["red" if x.get(c[0]) else "blue" for c in cells]
    cell_of_top = [-1] * K.n_simplices(d)
    for ci, cell in enumerate(cells):
        for t in cell:
            cell_of_top[t] = ci
    P = Chain(K, d, x)
    return Cellulation(
        kind="pairs" if pairs is not None else "singles",
        d=d, cells=cells, colors=colors, base=K,
        cell_of_top=cell_of_top, defect=defect, partition=P,
    )


@dataclass
class CellulationPipeline:
    """All intermediate artifacts of the two-subdivision construction."""

    manifold: SimplicialComplex
    sub1: SubdivisionMap
    sub2: SubdivisionMap | None
    marked: Chain | None
    pairs: list[tuple[int, int]] | None
    cellulation: Cellulation

    @property
    def first(self) -> SimplicialComplex:
        return self.sub1.child

    @property
    def second(self) -> SimplicialComplex | None:
        return self.sub2.child if self.sub2 is not None else None


def cellulate(M: SimplicialComplex, shortcut: bool = False) -> CellulationPipeline:
    """Run the full cellulation pipeline on a closed manifold.

    General path: subdivide twice, build the defect chain, match
    partners, solve and two-color.  Shortcut path (orientable manifolds
    only -- fails with CellulationError otherwise): subdivide once and
    two-color single d-simplices against the sum of all (d-1)-simplices.
    """
    sub1 = barycentric_subdivide(M)
    if shortcut:
        M1 = sub1.child
        target = full_skeleton_chain(M1, M.dim - 1)
        cell = two_color(M1, target, pairs=None)
        return CellulationPipeline(M, sub1, None, None, None, cell)
    sub2 = barycentric_subdivide(sub1.child)
    N = defect_chain(sub2)
    marked = push_chain(sub2, full_skeleton_chain(sub1.child, M.dim - 1))
    pairs = partner_matching(sub2.child, marked)
    cell = two_color(sub2.child, N, pairs)
    return CellulationPipeline(M, sub1, sub2, marked, pairs, cell)


def torus_checkerboard(d: int, blocks_per_axis: int) -> Cellulation:
    """Checkerboard of cubical blocks on the d-torus.

    blocks_per_axis must be even so the coloring is consistent around
    every cycle of the torus.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    if blocks_per_axis < 2 or blocks_per_axis % 2:
        raise ValueError("blocks_per_axis must be even and at least 2")
    coords = [()]
    for _ in range(d):
        coords = [c + (i,) for c in coords for i in range(blocks_per_axis)]
    cells = sorted(tuple(reversed(c)) for c in coords)
    colors = ["red" if sum(c) % 2 == 0 else "blue" for c in cells]
    return Cellulation(
        kind="cubical", d=d, cells=cells, colors=colors,
        blocks_per_axis=blocks_per_axis,
    )


# -- verification and A/B/C partition ---------------------------------------


@dataclass
class CellulationReport:
    passed: bool
    checks: list[tuple[str, bool, str]]
    stats: dict

    def lines(self) -> list[str]:
        out = []
        for name, ok, detail in self.checks:
            out.append("%-28s %s  %s" % (name, "pass" if ok else "FAIL", detail))
        return out


def _mesh_skeleton_vertices(c: Cellulation, layout: MeshLayout) -> list[int]:
    cut = c.d - 2
    return [v for v, dim in enumerate(layout.vertex_home_dim) if dim <= cut]


def _mesh_cell_assignment(c: Cellulation, layout: MeshLayout) -> list[int]:
    """Cell index for every qudit; -1 marks skeleton-resident qudits."""
    d = c.d
    base = c.base
    face_cell = {}
    cof = base.cofaces(d - 1)
    for f, js in enumerate(cof):
        face_cell[f] = c.cell_of_top[min(js)]
    out = []
    for dim, idx in layout.qudit_home:
        if dim == d:
            out.append(c.cell_of_top[idx])
        elif dim == d - 1:
            out.append(face_cell[idx])
        else:
            out.append(-1)
    return out


def _cubical_geometry(c: Cellulation, layout: TorusLatticeLayout):
    if layout.d != c.d:
        raise ValueError("layout dimension does not match the cellulation")
    if layout.size % c.blocks_per_axis:
        raise ValueError(
            "blocks_per_axis %d does not divide the lattice size %d"
            % (c.blocks_per_axis, layout.size)
        )
    return layout.size // c.blocks_per_axis


def _cubical_cell_assignment(c: Cellulation, layout: TorusLatticeLayout) -> list[int]:
    bs = _cubical_geometry(c, layout)
    cell_index = {cell: i for i, cell in enumerate(c.cells)}
    out = []
    for q in range(layout.n):
        p = layout.positions[q]  # doubled coordinates
        block = tuple((x // (2 * bs)) % c.blocks_per_axis for x in p)
        out.append(cell_index[block])
    return out


def _cubical_skeleton_dist2(c: Cellulation, layout: TorusLatticeLayout,
                            q: int, bs: int) -> int:
    """Doubled squared distance from qudit q to the block (d-2)-skeleton."""
    p = layout.positions[q]
    pitch = 2 * bs
    wraps = []
    for x in p:
        r = x % pitch
        wraps.append(min(r, pitch - r))
    best = None
    for i, j in combinations(range(layout.d), 2):
        d2 = wraps[i] ** 2 + wraps[j] ** 2
        if best is None or d2 < best:
            best = d2
    return best


def skeleton_region(c: Cellulation, layout: QuditLayout, r_skel: float) -> list[int]:
    """Qudits within r_skel of the cellulation's (d-2)-skeleton."""
    if c.kind == "cubical":
        if not isinstance(layout, TorusLatticeLayout):
            raise ValueError("cubical cellulations need a torus lattice layout")
        bs = _cubical_geometry(c, layout)
        thr = (2 * r_skel) ** 2
        return [
            q for q in range(layout.n)
            if _cubical_skeleton_dist2(c, layout, q, bs) <= thr
        ]
    if not isinstance(layout, MeshLayout):
        raise ValueError("mesh cellulations need a mesh layout")
    if layout.base is not c.base:
        raise ValueError("layout does not refine the cellulation base")
    on_skel = [
        q for q, (dim, _) in enumerate(layout.qudit_home) if dim <= c.d - 2
    ]
    near = layout.qudits_near_vertices(_mesh_skeleton_vertices(c, layout), r_skel)
    return sorted(set(on_skel) | set(near))


def _components(qudits: set[int], adjacency: list[list[int]]) -> list[list[int]]:
    seen = set()
    comps = []
    for q in sorted(qudits):
        if q in seen:
            continue
        comp = [q]
        seen.add(q)
        stack = [q]
        while stack:
            cur = stack.pop()
            for nb in adjacency[cur]:
                if nb in qudits and nb not in seen:
                    seen.add(nb)
                    comp.append(nb)
                    stack.append(nb)
        comps.append(sorted(comp))
    return comps


def verify_cellulation(c: Cellulation, layout: QuditLayout,
                       r_skel: float, r_sep: float) -> CellulationReport:
    """Check cell shape, color adjacency, and skeleton separation.

    (i) every cell is a single or matched pair of d-simplices sharing
    exactly one (d-1)-face, or a cube; (ii) equal-color cells never share
    a (d-1)-face; (iii) after removing the r_skel-neighborhood of the
    (d-2)-skeleton, connected same-color components sit inside single
    cells and are pairwise at least r_sep apart.
    """
    checks: list[tuple[str, bool, str]] = []
    stats: dict = {
        "cells": c.n_cells(),
        "colors": c.color_counts(),
        "r_skel": r_skel,
        "r_sep": r_sep,
    }

    # (i) cell shape
    if c.kind == "cubical":
        checks.append(("cell_shape", True, "%d cubical blocks" % c.n_cells()))
    else:
        bad = None
        for cell in c.cells:
            if len(cell) == 2:
                a, b = (c.base.simplices[c.d][t] for t in cell)
                shared = set(a) & set(b)
                if len(shared) != c.d:
                    bad = cell
                    break
            elif len(cell) != 1:
                bad = cell
                break
        checks.append((
            "cell_shape", bad is None,
            "all cells are glued pairs or single simplices" if bad is None
            else "cell %r is not a face-glued pair" % (bad,),
        ))

    # (ii) same-color adjacency
    violations = []
    if c.kind == "cubical":
        n = c.blocks_per_axis
        cell_index = {cell: i for i, cell in enumerate(c.cells)}
        for ci, cell in enumerate(c.cells):
            for ax in range(c.d):
                nb = list(cell)
                nb[ax] = (nb[ax] + 1) % n
                cj = cell_index[tuple(nb)]
                if c.colors[ci] == c.colors[cj]:
                    violations.append((cell, tuple(nb), ax))
    else:
        for f, js in enumerate(c.base.cofaces(c.d - 1)):
            ca, cb = (c.cell_of_top[t] for t in js)
            if ca != cb and c.colors[ca] == c.colors[cb]:
                violations.append(c.base.simplices[c.d - 1][f])
    checks.append((
        "color_adjacency", not violations,
        "no equal-color cells share a (d-1)-face" if not violations
        else "violated at %r" % (violations[0],),
    ))

    # (iii) separation after removing the skeleton neighborhood
    C = set(skeleton_region(c, layout, r_skel))
    stats["skeleton_qudits"] = len(C)
    if c.kind == "cubical":
        assignment = _cubical_cell_assignment(c, layout)
    else:
        assignment = _mesh_cell_assignment(c, layout)
    adjacency = layout.qudit_adjacency()
    comp_ok = True
    comp_detail = "every component stays inside one cell"
    all_comps: list[tuple[str, list[int]]] = []
    for color in ("red", "blue"):
        qudits = {
            q for q in range(layout.n)
            if q not in C and assignment[q] >= 0 and c.colors[assignment[q]] == color
        }
        for comp in _components(qudits, adjacency):
            cells_hit = {assignment[q] for q in comp}
            if len(cells_hit) != 1:
                comp_ok = False
                comp_detail = (
                    "a %s component touches cells %s" % (color, sorted(cells_hit))
                )
            all_comps.append((color, comp))
    stats["components"] = len(all_comps)
    checks.append(("component_in_cell", comp_ok, comp_detail))

    sep_ok = True
    sep_detail = "pairwise separation >= %g" % r_sep
    min_seen = None
    if isinstance(layout, MeshLayout):
        # graph distances are integers: dist < r_sep iff dist <= ceil(r_sep)-1
        r_need = math.ceil(r_sep) - 1
        comp_of = {}
        for ci, (_, comp) in enumerate(all_comps):
            for q in comp:
                comp_of[q] = ci
        for ci, (color, comp) in enumerate(all_comps):
            if r_need < 0:
                break
            for q in layout.neighborhood(comp, r_need):
                cj = comp_of.get(q)
                if cj is None or cj == ci or all_comps[cj][0] != color:
                    continue
                sep_ok = False
                sep_detail = (
                    "same-color components %d and %d are < %g apart"
                    % (min(ci, cj), max(ci, cj), r_sep)
                )
    else:
        for i in range(len(all_comps)):
            for j in range(i + 1, len(all_comps)):
                if all_comps[i][0] != all_comps[j][0]:
                    continue
                dist = layout.set_distance(all_comps[i][1], all_comps[j][1])
                if min_seen is None or dist < min_seen:
                    min_seen = dist
                if dist < r_sep:
                    sep_ok = False
                    sep_detail = (
                        "components %d and %d are %g apart (< %g)"
                        % (i, j, dist, r_sep)
                    )
    stats["min_separation"] = min_seen
    checks.append(("component_separation", sep_ok, sep_detail))

    passed = all(ok for _, ok, _ in checks)
    if passed:
        c._verified.add((id(layout), float(r_skel)))
    return CellulationReport(passed, checks, stats)


def abc_partition(c: Cellulation, layout: QuditLayout,
                  r_skel: float) -> tuple[list[int], list[int], list[int]]:
    """Split qudits into (A, B, C): red cells, blue cells, skeleton belt.

    Requires a successful verify_cellulation run for the same layout and
    r_skel.
    """
    if (id(layout), float(r_skel)) not in c._verified:
        raise ValueError(
            "cellulation is unverified for this layout/radius; run "
            "verify_cellulation first"
        )
    C = set(skeleton_region(c, layout, r_skel))
    if c.kind == "cubical":
        assignment = _cubical_cell_assignment(c, layout)
    else:
        assignment = _mesh_cell_assignment(c, layout)
    A, B = [], []
    for q in range(layout.n):
        if q in C:
            continue
        cell = assignment[q]
        if cell < 0:
            C.add(q)  # resident on the skeleton itself
            continue
        (A if c.colors[cell] == "red" else B).append(q)
    return sorted(A), sorted(B), sorted(C)
