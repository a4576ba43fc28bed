"""Abstract simplicial complexes over Z2.

Simplices are canonically sorted tuples of vertex indices; there are no
orientations (all chain arithmetic is mod 2).  A complex is built from
its top-dimensional simplices by face closure, and closed-manifold
validation checks that every codimension-1 simplex has exactly two
top-dimensional cofaces.

Barycentric subdivision introduces one vertex per parent simplex and one
child d-simplex per flag (maximal chain) of parent simplices; the
induced chain map sends a parent k-simplex to the (k+1)! child
k-simplices subdividing it.
"""

from __future__ import annotations

from itertools import combinations

from .gf2 import BitMatrix, BitVector


class SimplicialComplex:
    """Finite abstract simplicial complex with canonical simplex numbering.

    simplices[k] lists the k-simplices as sorted vertex tuples, in sorted
    order; index[k] maps tuple -> position.  positions, when present,
    maps vertex -> 3d coordinates (visualization only).
    """

    def __init__(self, dim: int, simplices: list[list[tuple[int, ...]]],
                 positions: dict[int, tuple[float, float, float]] | None = None):
        self.dim = dim
        self.simplices = simplices
        self.index = [
            {s: i for i, s in enumerate(level)} for level in simplices
        ]
        self.positions = positions
        self._cofaces: list[dict] | None = None

    # -- basic queries ----------------------------------------------------

    def n_simplices(self, k: int) -> int:
        if not 0 <= k <= self.dim:
            return 0
        return len(self.simplices[k])

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.simplices)

    def euler_characteristic(self) -> int:
        chi = 0
        for k, level in enumerate(self.simplices):
            chi += len(level) if k % 2 == 0 else -len(level)
        return chi

    def vertices(self) -> list[int]:
        return [s[0] for s in self.simplices[0]]

    def cofaces(self, k: int) -> list[list[int]]:
        """For each k-simplex, the indices of (k+1)-simplices containing it."""
        if k >= self.dim:
            return [[] for _ in self.simplices[k]]
        out: list[list[int]] = [[] for _ in self.simplices[k]]
        idx = self.index[k]
        for j, s in enumerate(self.simplices[k + 1]):
            for f in combinations(s, k + 1):
                out[idx[f]].append(j)
        return out

    def is_closed_manifold(self) -> bool:
        try:
            validate_closed_manifold(self)
        except ValueError:
            return False
        return True


def build_complex(top_simplices, require_closed: bool = True,
                  positions=None) -> SimplicialComplex:
    """Face closure of the given top simplices.

    All top simplices must share one dimension; duplicated vertex indices
    inside a simplex or duplicated simplices are rejected.  When
    require_closed is set, every (d-1)-simplex must have exactly two
    d-cofaces.
    """
    tops = []
    for s in top_simplices:
        t = tuple(sorted(s))
        if len(set(t)) != len(t):
            raise ValueError("simplex %r has repeated vertices" % (s,))
        tops.append(t)
    if not tops:
        raise ValueError("no top simplices given")
    dims = {len(t) - 1 for t in tops}
    if len(dims) != 1:
        raise ValueError("top simplices have mixed dimensions %s" % sorted(dims))
    d = dims.pop()
    if len(set(tops)) != len(tops):
        seen = set()
        for t in tops:
            if t in seen:
                raise ValueError("duplicate top simplex %r" % (t,))
            seen.add(t)
    levels: list[set] = [set() for _ in range(d + 1)]
    levels[d] = set(tops)
    for k in range(d, 0, -1):
        for s in levels[k]:
            for f in combinations(s, k):
                levels[k - 1].add(f)
    simplices = [sorted(level) for level in levels]
    K = SimplicialComplex(d, simplices, positions=positions)
    if require_closed:
        validate_closed_manifold(K)
    return K


def validate_closed_manifold(K: SimplicialComplex) -> None:
    """Every (d-1)-simplex must have exactly two d-cofaces."""
    d = K.dim
    if d == 0:
        return
    count = [0] * len(K.simplices[d - 1])
    idx = K.index[d - 1]
    for s in K.simplices[d]:
        for f in combinations(s, d):
            count[idx[f]] += 1
    for i, c in enumerate(count):
        if c != 2:
            raise ValueError(
                "face %r has %d cofaces (closed manifold needs 2)"
                % (K.simplices[d - 1][i], c)
            )


class Chain:
    """Z2 chain: a degree plus a bit-vector over the k-simplices."""

    __slots__ = ("complex", "degree", "support")

    def __init__(self, complex: SimplicialComplex, degree: int, support: BitVector):
        if support.length != complex.n_simplices(degree):
            raise ValueError("support length does not match simplex count")
        self.complex = complex
        self.degree = degree
        self.support = support

    @classmethod
    def from_simplices(cls, K: SimplicialComplex, degree: int, simplices) -> "Chain":
        idx = K.index[degree]
        return cls(
            K, degree,
            BitVector.from_indices(
                K.n_simplices(degree),
                (idx[tuple(sorted(s))] for s in simplices),
            ),
        )

    def simplices(self) -> list[tuple[int, ...]]:
        level = self.complex.simplices[self.degree]
        return [level[i] for i in self.support.indices()]

    def weight(self) -> int:
        return self.support.weight()

    def __xor__(self, other: "Chain") -> "Chain":
        if self.complex is not other.complex or self.degree != other.degree:
            raise ValueError("chains live on different spaces")
        return Chain(self.complex, self.degree, self.support ^ other.support)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chain)
            and self.complex is other.complex
            and self.degree == other.degree
            and self.support == other.support
        )

    def __hash__(self):
        return hash((id(self.complex), self.degree, self.support))

    def is_zero(self) -> bool:
        return self.support.bits == 0


def full_skeleton_chain(K: SimplicialComplex, k: int) -> Chain:
    """The sum of all k-simplices of K."""
    n = K.n_simplices(k)
    return Chain(K, k, BitVector(n, (1 << n) - 1 if n else 0))


def boundary_matrix(K: SimplicialComplex, k: int) -> BitMatrix:
    """Z2 boundary map from k-chains to (k-1)-chains.

    Rows are indexed by (k-1)-simplices, columns by k-simplices.
    """
    if not 1 <= k <= K.dim:
        raise ValueError("no boundary map in degree %d" % k)
    rows = [0] * K.n_simplices(k - 1)
    idx = K.index[k - 1]
    for j, s in enumerate(K.simplices[k]):
        for f in combinations(s, k):
            rows[idx[f]] |= 1 << j
    return BitMatrix(K.n_simplices(k - 1), K.n_simplices(k), rows)


def chain_boundary(c: Chain) -> Chain:
    """Boundary of a chain, computed combinatorially (no matrix built)."""
    K = c.complex
    k = c.degree
    if k == 0:
        return Chain(K, 0, BitVector(K.n_simplices(0)))
    idx = K.index[k - 1]
    bits = 0
    level = K.simplices[k]
    for i in c.support.indices():
        for f in combinations(level[i], k):
            bits ^= 1 << idx[f]
    return Chain(K, k - 1, BitVector(K.n_simplices(k - 1), bits))


def betti_numbers(K: SimplicialComplex) -> tuple[int, ...]:
    """Z2 Betti numbers b_0 .. b_d."""
    d = K.dim
    ranks = [boundary_matrix(K, k).rank() for k in range(1, d + 1)]
    betti = []
    for k in range(d + 1):
        ker = K.n_simplices(k) - (ranks[k - 1] if k >= 1 else 0)
        im = ranks[k] if k < d else 0
        betti.append(ker - im)
    return tuple(betti)


class SubdivisionMap:
    """Links a complex to its barycentric subdivision.

    carrier[k] maps each parent k-simplex index to the tuple of child
    k-simplex indices subdividing it (those are exactly the flags whose
    largest element is that simplex; there are (k+1)! of them, and the
    carrier sets of distinct parent simplices are disjoint).

    child_vertex_of[ (k, i) ] is the child vertex placed at the
    barycenter of parent k-simplex number i; home_of_child[k][j] returns
    the (dim, index) of the smallest parent simplex containing child
    k-simplex j.
    """

    def __init__(self, parent: SimplicialComplex, child: SimplicialComplex,
                 carrier: list[dict[int, tuple[int, ...]]],
                 vertex_parent: list[tuple[int, int]]):
        self.parent = parent
        self.child = child
        self.carrier = carrier
        # child vertex id -> (parent simplex dim, parent simplex index)
        self.vertex_parent = vertex_parent
        self._home: list[list[tuple[int, int]]] | None = None

    def child_homes(self, k: int) -> list[tuple[int, int]]:
        """(dim, index) of the smallest parent simplex containing each child
        k-simplex."""
        if self._home is None:
            self._home = [
                [self._home_of(s) for s in self.child.simplices[kk]]
                for kk in range(self.child.dim + 1)
            ]
        return self._home[k]

    def _home_of(self, child_simplex: tuple[int, ...]) -> tuple[int, int]:
        # vertices of a child simplex form a chain of parent simplices;
        # the largest one is the smallest parent simplex containing it.
        best = max(self.vertex_parent[v] for v in child_simplex)
        return best


def barycentric_subdivide(K: SimplicialComplex) -> SubdivisionMap:
    """First barycentric subdivision with carrier bookkeeping."""
    d = K.dim
    # child vertex per parent simplex, numbered level by level
    offsets = []
    n = 0
    for k in range(d + 1):
        offsets.append(n)
        n += K.n_simplices(k)
    vertex_parent = []
    for k in range(d + 1):
        vertex_parent.extend((k, i) for i in range(K.n_simplices(k)))

    positions = None
    if K.positions is not None:
        positions = {}
        for k in range(d + 1):
            for i, s in enumerate(K.simplices[k]):
                pts = [K.positions[v] for v in s]
                positions[offsets[k] + i] = tuple(
                    sum(p[j] for p in pts) / len(pts) for j in range(3)
                )

    def vid(k: int, simplex: tuple[int, ...]) -> int:
        return offsets[k] + K.index[k][simplex]

    # enumerate flags sigma_0 < ... < sigma_d under each top simplex
    tops = []
    for s in K.simplices[d]:
        stack = [(s, (vid(d, s),))]
        while stack:
            cur, chain = stack.pop()
            k = len(cur) - 1
            if k == 0:
                tops.append(tuple(sorted(chain)))
                continue
            for f in combinations(cur, k):
                stack.append((f, chain + (vid(k - 1, f),)))
    child = build_complex(tops, require_closed=False, positions=positions)

    carrier: list[dict[int, tuple[int, ...]]] = [dict() for _ in range(d + 1)]
    buckets: list[dict[int, list[int]]] = [dict() for _ in range(d + 1)]
    for k in range(d + 1):
        for j, s in enumerate(child.simplices[k]):
            pdim, pidx = max(vertex_parent[v] for v in s)
            if pdim == k:
                buckets[k].setdefault(pidx, []).append(j)
    for k in range(d + 1):
        for i in range(K.n_simplices(k)):
            carrier[k][i] = tuple(buckets[k].get(i, ()))
    return SubdivisionMap(K, child, carrier, vertex_parent)


def push_chain(sub: SubdivisionMap, c: Chain) -> Chain:
    """Image of a parent chain under the subdivision chain map."""
    if c.complex is not sub.parent:
        raise ValueError("chain does not live on the parent complex")
    k = c.degree
    bits = 0
    table = sub.carrier[k]
    for i in c.support.indices():
        for j in table[i]:
            bits |= 1 << j
    return Chain(sub.child, k, BitVector(sub.child.n_simplices(k), bits))


# -- mesh text format and OFF export --------------------------------------


def read_mesh(text: str) -> SimplicialComplex:
    """Parse the plain mesh format: one top simplex per line, whitespace
    separated vertex indices, '#' comments ignored."""
    tops = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            tops.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ValueError("line %d is not a list of vertex indices" % lineno)
    return build_complex(tops)


def write_mesh(K: SimplicialComplex) -> str:
    lines = ["# %d-dimensional complex, f-vector %s" % (K.dim, K.f_vector())]
    for s in K.simplices[K.dim]:
        lines.append(" ".join(str(v) for v in s))
    return "\n".join(lines) + "\n"


def _fallback_positions(K: SimplicialComplex) -> dict[int, tuple[float, float, float]]:
    """Deterministic sphere-spiral embedding for complexes without coords."""
    import math

    verts = K.vertices()
    n = len(verts)
    pos = {}
    for i, v in enumerate(verts):
        t = (i + 0.5) / n
        phi = math.acos(1 - 2 * t)
        theta = math.pi * (1 + 5 ** 0.5) * i
        pos[v] = (
            math.sin(phi) * math.cos(theta),
            math.sin(phi) * math.sin(theta),
            math.cos(phi),
        )
    return pos


def export_off(K: SimplicialComplex, face_colors=None) -> str:
    """OFF / COFF text for a complex of dimension <= 3.

    For d <= 2 the faces written are the 2-simplices (edges for d = 1);
    for d = 3 every 2-simplex is written.  face_colors, if given, maps a
    written-face index to an (r, g, b) float triple.
    """
    if K.dim > 3:
        raise ValueError("OFF export needs dim <= 3")
    pos = K.positions or _fallback_positions(K)
    verts = K.vertices()
    vnum = {v: i for i, v in enumerate(verts)}
    if K.dim >= 2:
        faces = K.simplices[2]
    else:
        faces = K.simplices[K.dim]
    lines = ["COFF" if face_colors else "OFF"]
    lines.append("%d %d 0" % (len(verts), len(faces)))
    for v in verts:
        lines.append("%.6f %.6f %.6f" % tuple(pos[v]))
    for i, f in enumerate(faces):
        entry = "%d %s" % (len(f), " ".join(str(vnum[v]) for v in f))
        if face_colors:
            r, g, b = face_colors.get(i, (0.7, 0.7, 0.7))
            entry += " %.3f %.3f %.3f 1.0" % (r, g, b)
        lines.append(entry)
    return "\n".join(lines) + "\n"
