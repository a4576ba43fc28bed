"""Qudit layouts: where code degrees of freedom sit and how far apart.

Two metric kinds are supported.  A torus lattice puts one qudit at each
edge center (or face center) of the unit cubic lattice on the flat
d-torus [0, L)^d with Euclidean quotient distance and lattice spacing
a = 1.  A mesh layout puts one qudit on each edge of a (repeatedly
subdivided) simplicial complex with graph distance on the 1-skeleton:
the distance between two distinct qudits is one plus the vertex distance
between their closest endpoints, and a = one edge length.

Lattice distances are compared in doubled-integer coordinates, so radius
comparisons are exact.  Mesh distances are integers.
"""

from __future__ import annotations

import warnings
from collections import deque
from itertools import combinations

from .simplicial import SimplicialComplex, barycentric_subdivide


class LayoutScaleWarning(UserWarning):
    """The separation of scales L >= 10a does not hold."""


DENSITY_CAP_DEFAULT = 64


class QuditLayout:
    """Immutable qudit set with a metric; see module docstring.

    Attributes shared by both kinds: kind, n, a, L, density_cap.
    Lattice layouts expose d, size, positions (doubled-integer tuples).
    Mesh layouts expose complex, base, refine, qudit_home (smallest base
    simplex carrying each qudit edge) and vertex_home_dim.
    """

    def __init__(self, kind: str, n: int, a: float, L: float, density_cap: int):
        self.kind = kind
        self.n = n
        self.a = a
        self.L = L
        self.density_cap = density_cap
        if L < 10 * a:
            warnings.warn(
                "L = %g is below 10a = %g; scale separation is marginal"
                % (L, 10 * a),
                LayoutScaleWarning,
                stacklevel=3,
            )

    # -- common interface --------------------------------------------------

    def neighborhood(self, seeds, r: float) -> list[int]:
        """Sorted ids of all qudits within metric distance r of the seed set."""
        raise NotImplementedError

    def distance(self, i: int, j: int) -> float:
        raise NotImplementedError

    def set_distance(self, s1, s2) -> float:
        """Minimum distance between two nonempty qudit sets."""
        raise NotImplementedError

    def ball_counts_ok(self) -> bool:
        return self.max_unit_ball() <= self.density_cap

    def max_unit_ball(self) -> int:
        raise NotImplementedError


class TorusLatticeLayout(QuditLayout):
    def __init__(self, d: int, size: int, sites_per_cell: int, density_cap: int):
        if d < 1:
            raise ValueError("dimension must be positive")
        if size < 2:
            raise ValueError("lattice size must be at least 2")
        from math import comb

        if sites_per_cell == d:
            cell_dims = [1]
        elif sites_per_cell == comb(d, 2) and d != 3:
            cell_dims = [2]
        elif sites_per_cell == 1 and d >= 3:
            cell_dims = [0]  # one qudit per lattice site
        else:
            raise ValueError(
                "sites_per_cell must select edge centers (%d), face centers "
                "(%d), or sites (1)" % (d, comb(d, 2))
            )
        self.d = d
        self.size = size
        # qudit = (site, subset of axes); positions doubled so they are ints
        positions: list[tuple[int, ...]] = []
        self.cell_sites: list[tuple[int, ...]] = []  # axis subsets, per site
        axis_sets = [axes for k in cell_dims for axes in combinations(range(d), k)]
        self.axis_sets = axis_sets
        sites = _all_sites(d, size)
        for site in sites:
            for axes in axis_sets:
                pos = tuple(
                    2 * site[ax] + (1 if ax in axes else 0) for ax in range(d)
                )
                positions.append(pos)
        self.positions = positions
        super().__init__("lattice", len(positions), 1.0, float(size), density_cap)
        cap = self.max_unit_ball()
        if cap > density_cap:
            raise ValueError(
                "unit ball holds %d qudits, above the density cap %d"
                % (cap, density_cap)
            )

    def position(self, i: int) -> tuple[float, ...]:
        return tuple(c / 2 for c in self.positions[i])

    def _wrap2(self, delta2: int) -> int:
        two_l = 2 * self.size
        delta2 %= two_l
        return min(delta2, two_l - delta2)

    def dist2_doubled(self, p: tuple[int, ...], q: tuple[int, ...]) -> int:
        """Squared distance in doubled coordinates (4x the true square)."""
        return sum(self._wrap2(a - b) ** 2 for a, b in zip(p, q))

    def distance(self, i: int, j: int) -> float:
        return self.dist2_doubled(self.positions[i], self.positions[j]) ** 0.5 / 2

    def neighborhood(self, seeds, r: float) -> list[int]:
        seeds = list(seeds)
        thr = (2 * r) ** 2
        out = set(seeds)
        spos = [self.positions[s] for s in seeds]
        for q in range(self.n):
            if q in out:
                continue
            pq = self.positions[q]
            for sp in spos:
                if self.dist2_doubled(pq, sp) <= thr:
                    out.add(q)
                    break
        return sorted(out)

    def qudits_within_of_points(self, points_doubled, r: float) -> list[int]:
        """Qudits within r of any of the given doubled-coordinate points."""
        thr = (2 * r) ** 2
        out = []
        for q in range(self.n):
            pq = self.positions[q]
            if any(self.dist2_doubled(pq, pt) <= thr for pt in points_doubled):
                out.append(q)
        return out

    def set_distance(self, s1, s2) -> float:
        best = None
        p2 = [self.positions[j] for j in s2]
        for i in s1:
            pi = self.positions[i]
            for pj in p2:
                d2 = self.dist2_doubled(pi, pj)
                if best is None or d2 < best:
                    best = d2
        if best is None:
            raise ValueError("empty set")
        return best ** 0.5 / 2

    def max_unit_ball(self) -> int:
        # translation invariance: check one representative per axis set
        best = 0
        reps = range(len(self.axis_sets))
        for i in reps:
            pi = self.positions[i]
            count = 0
            for q in range(self.n):
                if self.dist2_doubled(pi, self.positions[q]) <= 4:  # (2a)^2 = 4
                    count += 1
            best = max(best, count)
        return best

    def qudit_adjacency(self) -> list[list[int]]:
        """Qudits sharing a lattice vertex (edge layouts), or nearest
        lattice neighbors (site layouts)."""
        d, size = self.d, self.size
        if self.axis_sets == [()]:
            adj: list[set] = [set() for _ in range(self.n)]
            for q in range(self.n):
                coords = self.site_coords(q)
                for ax in range(d):
                    other = tuple(
                        (c + (1 if a == ax else 0)) % size
                        for a, c in enumerate(coords)
                    )
                    site = 0
                    for c in reversed(other):
                        site = site * size + c
                    adj[q].add(site)
                    adj[site].add(q)
            return [sorted(s) for s in adj]
        if len(self.axis_sets[0]) != 1:
            raise ValueError("adjacency defined for edge or site layouts")
        by_site: dict[tuple[int, ...], list[int]] = {}
        for q in range(self.n):
            site, axis = divmod(q, d)
            coords = self.site_coords(site)
            other = tuple(
                (c + (1 if ax == axis else 0)) % size for ax, c in enumerate(coords)
            )
            by_site.setdefault(coords, []).append(q)
            by_site.setdefault(other, []).append(q)
        adj = [set() for _ in range(self.n)]
        for qs in by_site.values():
            for a, b in combinations(qs, 2):
                adj[a].add(b)
                adj[b].add(a)
        return [sorted(s) for s in adj]

    def site_coords(self, site_index: int) -> tuple[int, ...]:
        coords = []
        for _ in range(self.d):
            site_index, c = divmod(site_index, self.size)
            coords.append(c)
        return tuple(coords)

    def qudit_site_axis(self, q: int) -> tuple[tuple[int, ...], int]:
        if len(self.axis_sets) != self.d or len(self.axis_sets[0]) != 1:
            raise ValueError("qudit_site_axis is for edge layouts")
        site, axis = divmod(q, self.d)
        return self.site_coords(site), axis


def _all_sites(d: int, size: int):
    sites = [()]
    for _ in range(d):
        sites = [s + (c,) for s in sites for c in range(size)]
    # enumerate with the first axis fastest, matching site_coords
    return [tuple(reversed(s)) for s in sites]


class MeshLayout(QuditLayout):
    def __init__(self, base: SimplicialComplex, refine: int,
                 density_cap: int | None):
        cur = base
        # home of each simplex: (dim, index) of smallest base simplex
        homes = [
            [(k, i) for i in range(base.n_simplices(k))]
            for k in range(base.dim + 1)
        ]
        for _ in range(refine):
            sub = barycentric_subdivide(cur)
            new_homes = []
            for k in range(sub.child.dim + 1):
                level = []
                for pdim, pidx in sub.child_homes(k):
                    level.append(homes[pdim][pidx])
                new_homes.append(level)
            cur = sub.child
            homes = new_homes
        self.complex = cur
        self.base = base
        self.refine = refine
        self.qudit_home = homes[1]
        self.vertex_home_dim = [dim for dim, _ in homes[0]]
        self.simplex_homes = homes

        nv = cur.n_simplices(0)
        adj: list[list[int]] = [[] for _ in range(nv)]
        edge_at: dict[tuple[int, int], int] = {}
        for j, (u, v) in enumerate(cur.simplices[1]):
            adj[u].append(v)
            adj[v].append(u)
            edge_at[(u, v)] = j
        self.vertex_adj = adj
        self.edge_index = edge_at

        n = cur.n_simplices(1)
        deg = [len(a) for a in adj]
        self._max_ball = max(
            deg[u] + deg[v] - 1 for u, v in cur.simplices[1]
        ) if n else 0
        if density_cap is None:
            density_cap = max(DENSITY_CAP_DEFAULT, self._max_ball)
            if self._max_ball > DENSITY_CAP_DEFAULT:
                warnings.warn(
                    "mesh unit balls hold up to %d qudits; raising the "
                    "density cap to match" % self._max_ball,
                    LayoutScaleWarning,
                    stacklevel=2,
                )
        elif self._max_ball > density_cap:
            raise ValueError(
                "unit ball holds %d qudits, above the density cap %d"
                % (self._max_ball, density_cap)
            )

        L, exact = self._diameter()
        self.L_exact = exact
        super().__init__("mesh", n, 1.0, float(L), density_cap)

    # vertex BFS levels from a seed vertex set
    def _vertex_levels(self, seed_vertices, limit: float | None = None):
        dist = {v: 0 for v in seed_vertices}
        queue = deque(seed_vertices)
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if limit is not None and dv >= limit:
                continue
            for w in self.vertex_adj[v]:
                if w not in dist:
                    dist[w] = dv + 1
                    queue.append(w)
        return dist

    def _diameter(self) -> tuple[int, bool]:
        nv = self.complex.n_simplices(0)
        if nv == 0:
            return 0, True
        if nv <= 3000:
            diam = 0
            for v in range(nv):
                levels = self._vertex_levels([v])
                diam = max(diam, max(levels.values()))
            return diam + 1, True
        # double sweep estimate (lower bound on the vertex diameter)
        far = 0
        v = 0
        for _ in range(3):
            levels = self._vertex_levels([v])
            v, far = max(levels.items(), key=lambda kv: (kv[1], -kv[0]))
        return far + 1, False

    def position(self, i: int):
        pos = self.complex.positions
        if pos is None:
            return None
        u, v = self.complex.simplices[1][i]
        return tuple((a + b) / 2 for a, b in zip(pos[u], pos[v]))

    def distance(self, i: int, j: int) -> float:
        if i == j:
            return 0.0
        ui, vi = self.complex.simplices[1][i]
        levels = self._vertex_levels([ui, vi])
        uj, vj = self.complex.simplices[1][j]
        d = min(levels.get(uj, None), levels.get(vj, None),
                key=lambda x: float("inf") if x is None else x)
        if d is None:
            return float("inf")
        return float(d + 1)

    def neighborhood(self, seeds, r: float) -> list[int]:
        seeds = list(seeds)
        out = set(seeds)
        if r >= 1:
            seed_vertices = set()
            for s in seeds:
                seed_vertices.update(self.complex.simplices[1][s])
            levels = self._vertex_levels(sorted(seed_vertices), limit=r - 1)
            out.update(self._edges_by_levels(levels, r - 1))
        return sorted(out)

    def qudits_near_vertices(self, vertex_set, r: float) -> list[int]:
        """Qudits within r of the given vertex set (edge within r iff some
        endpoint is within vertex distance r - 1)."""
        if r < 1:
            return []
        levels = self._vertex_levels(sorted(vertex_set), limit=r - 1)
        return sorted(self._edges_by_levels(levels, r - 1))

    def _edges_by_levels(self, levels: dict[int, int], limit: float):
        hits = []
        for v, dv in levels.items():
            if dv <= limit:
                for w in self.vertex_adj[v]:
                    e = (v, w) if v < w else (w, v)
                    hits.append(self.edge_index[e])
        return hits

    def set_distance(self, s1, s2) -> float:
        if not s1 or not s2:
            raise ValueError("empty set")
        s2set = set(s2)
        if s2set & set(s1):
            return 0.0
        seed_vertices = set()
        for s in s1:
            seed_vertices.update(self.complex.simplices[1][s])
        levels = self._vertex_levels(sorted(seed_vertices))
        best = None
        for j in s2set:
            u, v = self.complex.simplices[1][j]
            for w in (u, v):
                lw = levels.get(w)
                if lw is not None and (best is None or lw < best):
                    best = lw
        if best is None:
            return float("inf")
        return float(best + 1)

    def max_unit_ball(self) -> int:
        return self._max_ball

    def qudit_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for v, nbrs in enumerate(self.vertex_adj):
            incident = []
            for w in nbrs:
                e = (v, w) if v < w else (w, v)
                incident.append(self.edge_index[e])
            for a, b in combinations(sorted(incident), 2):
                adj[a].append(b)
                adj[b].append(a)
        return [sorted(set(x)) for x in adj]


def torus_lattice_layout(d: int, L: int, sites_per_cell: int | None = None,
                         density_cap: int = DENSITY_CAP_DEFAULT) -> TorusLatticeLayout:
    """Qudits at edge centers (sites_per_cell = d, the default) or face
    centers of the unit cubic lattice on the flat d-torus of size L."""
    if sites_per_cell is None:
        sites_per_cell = d
    return TorusLatticeLayout(d, L, sites_per_cell, density_cap)


def layout_from_complex(K: SimplicialComplex, refine: int = 0,
                        density_cap: int | None = None) -> MeshLayout:
    """One qudit per edge of the refine-fold barycentric subdivision of K."""
    if refine < 0:
        raise ValueError("refine must be nonnegative")
    return MeshLayout(K, refine, density_cap)


def neighborhood(layout: QuditLayout, seeds, r: float) -> list[int]:
    """All qudits within metric distance r of the seed set (module-level
    convenience wrapper)."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return layout.neighborhood(seeds, r)
