"""Qubit stabilizer codes in symplectic GF(2) form, with the example models.

Operators are phase-free symplectic classes (x|z) of Pauli strings;
degeneracy, correctability, and stabilizer entropies depend only on this
data.  Built-in families: toric codes in 2 and 3 dimensions, homological
surface codes on arbitrary closed surfaces, the X-cube model, the first
cubic code, the checkerboard model, and stacks of 2D toric layers.
"""

from __future__ import annotations

from itertools import combinations

from .gf2 import BitMatrix, BitVector, SpanTracker, parity
from .layout import MeshLayout, QuditLayout, TorusLatticeLayout, torus_lattice_layout
from .simplicial import SimplicialComplex


class PauliOp:
    """Phase-free n-qubit Pauli operator as an (x, z) bit pair."""

    __slots__ = ("n", "x", "z")

    def __init__(self, n: int, x: BitVector, z: BitVector):
        if x.length != n or z.length != n:
            raise ValueError("x/z parts must have length n")
        self.n = n
        self.x = x
        self.z = z

    @classmethod
    def from_string(cls, s: str) -> "PauliOp":
        xb = zb = 0
        for i, ch in enumerate(s):
            if ch in "XY":
                xb |= 1 << i
            if ch in "ZY":
                zb |= 1 << i
            if ch not in "IXYZ":
                raise ValueError("bad Pauli letter %r" % ch)
        return cls(len(s), BitVector(len(s), xb), BitVector(len(s), zb))

    @classmethod
    def from_supports(cls, n: int, xs=(), zs=()) -> "PauliOp":
        return cls(n, BitVector.from_indices(n, xs), BitVector.from_indices(n, zs))

    def to_string(self) -> str:
        return "".join(
            "IXZY"[self.x.get(i) + 2 * self.z.get(i)] for i in range(self.n)
        )

    def commutes_with(self, other: "PauliOp") -> bool:
        return not (
            parity(self.x.bits & other.z.bits)
            ^ parity(self.z.bits & other.x.bits)
        )

    def support(self) -> list[int]:
        return BitVector(self.n, self.x.bits | self.z.bits).indices()

    def weight(self) -> int:
        return BitVector(self.n, self.x.bits | self.z.bits).weight()

    def is_identity(self) -> bool:
        return self.x.bits == 0 and self.z.bits == 0

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return PauliOp(self.n, self.x ^ other.x, self.z ^ other.z)

    def symplectic_row(self) -> int:
        """The operator as a 2n-bit row (x half low, z half high)."""
        return self.x.bits | (self.z.bits << self.n)

    @classmethod
    def from_symplectic_row(cls, n: int, row: int) -> "PauliOp":
        mask = (1 << n) - 1
        return cls(n, BitVector(n, row & mask), BitVector(n, row >> n))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliOp)
            and self.n == other.n
            and self.x == other.x
            and self.z == other.z
        )

    def __hash__(self) -> int:
        return hash((self.n, self.x.bits, self.z.bits))

    def __repr__(self) -> str:
        if self.n <= 32:
            return "PauliOp(%s)" % self.to_string()
        return "PauliOp(n=%d, weight=%d)" % (self.n, self.weight())


def symplectic_product(a: PauliOp, b: PauliOp) -> int:
    return parity(a.x.bits & b.z.bits) ^ parity(a.z.bits & b.x.bits)


class StabilizerCode:
    """A commuting generator set; the code space is its +1 eigenspace."""

    def __init__(self, n: int, generators: list[PauliOp],
                 layout: QuditLayout | None = None,
                 layout_binding: list[int] | None = None,
                 name: str = ""):
        self.n = n
        self.generators = list(generators)
        self.layout = layout
        self.layout_binding = (
            list(layout_binding) if layout_binding is not None else list(range(n))
        )
        self.name = name
        self._matrix: BitMatrix | None = None
        self._rank: int | None = None

    def generator_matrix(self) -> BitMatrix:
        """Generators as rows of a 2n-column GF(2) matrix (x|z halves)."""
        if self._matrix is None:
            self._matrix = BitMatrix(
                len(self.generators), 2 * self.n,
                [g.symplectic_row() for g in self.generators],
            )
        return self._matrix

    def rank(self) -> int:
        if self._rank is None:
            self._rank = self.generator_matrix().rank()
        return self._rank

    def qubits_on_qudits(self, qudits) -> list[int]:
        """Code qubits bound to the given layout qudit ids."""
        qs = set(qudits)
        return [i for i, q in enumerate(self.layout_binding) if q in qs]

    def __repr__(self) -> str:
        return "StabilizerCode(%sn=%d, generators=%d)" % (
            "%s, " % self.name if self.name else "", self.n, len(self.generators)
        )


def build_code(gens: list[PauliOp], n: int | None = None,
               layout: QuditLayout | None = None,
               layout_binding: list[int] | None = None,
               name: str = "") -> StabilizerCode:
    """Validate pairwise commutation and assemble a StabilizerCode."""
    if n is None:
        if not gens:
            raise ValueError("need n for an empty generator list")
        n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ValueError("generator size %d != n = %d" % (g.n, n))
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not gens[i].commutes_with(gens[j]):
                a, b = gens[i], gens[j]
                names = (
                    " (%s, %s)" % (a.to_string(), b.to_string())
                    if n <= 64 else ""
                )
                raise ValueError(
                    "generators %d and %d anticommute%s" % (i, j, names)
                )
    return StabilizerCode(n, gens, layout, layout_binding, name)


def degeneracy(code: StabilizerCode) -> int:
    """log2 of the code-space dimension: n - rank(generators)."""
    return code.n - code.rank()


# -- lattice model constructions ---------------------------------------------


def _edge_qubit(lay: TorusLatticeLayout, coords, axis: int) -> int:
    d = lay.d
    site = 0
    for c in reversed([c % lay.size for c in coords]):
        site = site * lay.size + c
    return site * d + axis


def _shift(coords, axis, delta):
    return tuple(
        c + (delta if ax == axis else 0) for ax, c in enumerate(coords)
    )


def toric_code(dim: int, L: int) -> tuple[StabilizerCode, TorusLatticeLayout]:
    """Standard toric code on the L^dim periodic lattice, qubits on edges."""
    if dim not in (2, 3):
        raise ValueError("dim must be 2 or 3")
    if L < 2:
        raise ValueError("L must be at least 2")
    lay = torus_lattice_layout(dim, L)
    n = lay.n
    gens = []
    sites = [lay.site_coords(s) for s in range(L ** dim)]
    for s in sites:  # X star at each vertex
        xs = []
        for ax in range(dim):
            xs.append(_edge_qubit(lay, s, ax))
            xs.append(_edge_qubit(lay, _shift(s, ax, -1), ax))
        gens.append(PauliOp.from_supports(n, xs=xs))
    for s in sites:  # Z plaquette per axis pair
        for i, j in combinations(range(dim), 2):
            zs = [
                _edge_qubit(lay, s, i),
                _edge_qubit(lay, _shift(s, i, 1), j),
                _edge_qubit(lay, _shift(s, j, 1), i),
                _edge_qubit(lay, s, j),
            ]
            gens.append(PauliOp.from_supports(n, zs=zs))
    return build_code(gens, n, lay, name="toric%d_L%d" % (dim, L)), lay


def surface_code_on_complex(
    K: SimplicialComplex,
) -> tuple[StabilizerCode, MeshLayout]:
    """Homological code on a closed surface: qubits on edges,
    X star per vertex, Z face per triangle; log2 D = b1(K; Z2)."""
    if K.dim != 2:
        raise ValueError("need a closed surface (dimension 2)")
    lay = MeshLayout(K, refine=0, density_cap=None)
    n = K.n_simplices(1)
    edge_index = K.index[1]
    gens = []
    star: list[list[int]] = [[] for _ in range(K.n_simplices(0))]
    for e, (u, v) in enumerate(K.simplices[1]):
        star[u].append(e)
        star[v].append(e)
    for v in range(K.n_simplices(0)):
        gens.append(PauliOp.from_supports(n, xs=star[v]))
    for tri in K.simplices[2]:
        zs = [edge_index[f] for f in combinations(tri, 2)]
        gens.append(PauliOp.from_supports(n, zs=zs))
    return build_code(gens, n, lay, name="surface_n%d" % n), lay


def _xcube(L: int) -> tuple[StabilizerCode, TorusLatticeLayout]:
    lay = torus_lattice_layout(3, L)
    n = lay.n
    gens = []
    sites = [lay.site_coords(s) for s in range(L ** 3)]
    for s in sites:  # Z on the 12 edges of the cube at s
        zs = []
        for ax in range(3):
            others = [a for a in range(3) if a != ax]
            for da in (0, 1):
                for db in (0, 1):
                    c = _shift(_shift(s, others[0], da), others[1], db)
                    zs.append(_edge_qubit(lay, c, ax))
        gens.append(PauliOp.from_supports(n, zs=zs))
    for s in sites:  # X cross at s in each coordinate plane
        for i, j in combinations(range(3), 2):
            xs = [
                _edge_qubit(lay, s, i),
                _edge_qubit(lay, _shift(s, i, -1), i),
                _edge_qubit(lay, s, j),
                _edge_qubit(lay, _shift(s, j, -1), j),
            ]
            gens.append(PauliOp.from_supports(n, xs=xs))
    return build_code(gens, n, lay, name="xcube_L%d" % L), lay


# First cubic code, two qubits per site.  The two stabilizer types act on
# the corners of the unit cube with the frozen coefficient table below
# (offsets are corner displacements; qubit 0/1 is the site-local pair):
#   Z-type at site s:  Z on qubit 0 at offsets (0,0,0),(1,0,0),(0,1,0),(0,0,1)
#                      Z on qubit 1 at offsets (0,0,0),(1,1,0),(0,1,1),(1,0,1)
#   X-type at site s:  X on qubit 0 at the negated qubit-1 offsets
#                      X on qubit 1 at the negated qubit-0 offsets
# The X table is the antipodal transpose of the Z table, which makes every
# pair of generators overlap on an even number of qubits.
_CUBIC1_F = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
_CUBIC1_G = [(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)]


def _cubic1(L: int) -> tuple[StabilizerCode, TorusLatticeLayout]:
    lay = torus_lattice_layout(3, L, sites_per_cell=1)
    n = 2 * L ** 3
    binding = [s for s in range(L ** 3) for _ in (0, 1)]

    def pair_qubit(coords, which: int) -> int:
        site = 0
        for c in reversed([c % L for c in coords]):
            site = site * L + c
        return 2 * site + which

    gens = []
    sites = [lay.site_coords(s) for s in range(L ** 3)]
    for s in sites:
        zs = [pair_qubit(_shift3(s, o), 0) for o in _CUBIC1_F]
        zs += [pair_qubit(_shift3(s, o), 1) for o in _CUBIC1_G]
        gens.append(PauliOp.from_supports(n, zs=zs))
    for s in sites:
        xs = [pair_qubit(_shift3(s, _neg3(o)), 0) for o in _CUBIC1_G]
        xs += [pair_qubit(_shift3(s, _neg3(o)), 1) for o in _CUBIC1_F]
        gens.append(PauliOp.from_supports(n, xs=xs))
    code = build_code(gens, n, lay, layout_binding=binding, name="cubic1_L%d" % L)
    return code, lay


def _shift3(s, o):
    return (s[0] + o[0], s[1] + o[1], s[2] + o[2])


def _neg3(o):
    return (-o[0], -o[1], -o[2])


def _checkerboard_model(L: int) -> tuple[StabilizerCode, TorusLatticeLayout]:
    if L % 2:
        raise ValueError("checkerboard_model needs even L")
    lay = torus_lattice_layout(3, L, sites_per_cell=1)
    n = L ** 3

    def site(coords) -> int:
        s = 0
        for c in reversed([c % L for c in coords]):
            s = s * L + c
        return s

    corners = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    gens = []
    for s in [lay.site_coords(i) for i in range(L ** 3)]:
        if sum(s) % 2:
            continue  # black cubes only
        sup = [site(_shift3(s, o)) for o in corners]
        gens.append(PauliOp.from_supports(n, xs=sup))
        gens.append(PauliOp.from_supports(n, zs=sup))
    return build_code(gens, n, lay, name="checkerboard_L%d" % L), lay


def fracton_code(name: str, L: int) -> tuple[StabilizerCode, TorusLatticeLayout]:
    """X-cube, first cubic code, or checkerboard model on the L^3 torus."""
    if L < 2:
        raise ValueError("L must be at least 2")
    if name == "xcube":
        return _xcube(L)
    if name == "cubic1":
        return _cubic1(L)
    if name == "checkerboard_model":
        return _checkerboard_model(L)
    raise ValueError(
        "unknown fracton code %r (cubic1, xcube, checkerboard_model)" % name
    )


def stacked_layers(L: int) -> tuple[StabilizerCode, TorusLatticeLayout]:
    """L horizontal 2D toric-code layers embedded in the 3-torus lattice.

    Qubits live on the x- and y-edges only; z-edges of the layout carry
    no qubit.
    """
    if L < 2:
        raise ValueError("L must be at least 2")
    lay = torus_lattice_layout(3, L)
    n = 2 * L ** 3
    binding = []
    qubit_of_edge = {}
    for site in range(L ** 3):
        for ax in (0, 1):
            qubit_of_edge[site * 3 + ax] = len(binding)
            binding.append(site * 3 + ax)

    def q(coords, axis):
        return qubit_of_edge[_edge_qubit(lay, coords, axis)]

    gens = []
    sites = [lay.site_coords(s) for s in range(L ** 3)]
    for s in sites:  # in-layer star
        xs = [
            q(s, 0), q(_shift(s, 0, -1), 0),
            q(s, 1), q(_shift(s, 1, -1), 1),
        ]
        gens.append(PauliOp.from_supports(n, xs=xs))
    for s in sites:  # in-layer plaquette
        zs = [q(s, 0), q(_shift(s, 0, 1), 1), q(_shift(s, 1, 1), 0), q(s, 1)]
        gens.append(PauliOp.from_supports(n, zs=zs))
    code = build_code(gens, n, lay, layout_binding=binding,
                      name="stacked_L%d" % L)
    return code, lay


# -- logical operators -------------------------------------------------------


def _swap_halves(row: int, n: int) -> int:
    mask = (1 << n) - 1
    return ((row & mask) << n) | (row >> n)


def logical_generators(code: StabilizerCode) -> list[PauliOp]:
    """2k logical representatives in symplectic pairs.

    Returns [X1, Z1, X2, Z2, ...] where each pair anticommutes, all other
    combinations commute, and every operator commutes with the stabilizer
    group and is independent of it.
    """
    n = code.n
    G = code.generator_matrix()
    swapped = BitMatrix(
        G.rows, 2 * n, [_swap_halves(G.row_bits(i), n) for i in range(G.rows)]
    )
    commutant = swapped.nullspace()  # ops commuting with all stabilizers
    tracker = SpanTracker(2 * n)
    for i in range(G.rows):
        tracker.add(BitVector(2 * n, G.row_bits(i)))
    reps: list[int] = []
    for v in commutant:
        if tracker.add(v):
            reps.append(v.bits)

    def sym(u: int, v: int) -> int:
        return parity(u & _swap_halves(v, n))

    paired: list[int] = []
    pool = list(reps)
    while pool:
        u = pool.pop(0)
        mate = None
        for i, v in enumerate(pool):
            if sym(u, v):
                mate = pool.pop(i)
                break
        if mate is None:
            raise AssertionError("symplectic pairing failed on the quotient")
        # decouple the remaining candidates from the new pair
        pool = [
            w ^ (u if sym(w, mate) else 0) ^ (mate if sym(w, u) else 0)
            for w in pool
        ]
        paired.extend((u, mate))
    return [PauliOp.from_symplectic_row(n, r) for r in paired]


# -- text serialization ------------------------------------------------------


def code_to_text(code: StabilizerCode) -> str:
    lines = ["qubits %d" % code.n, "generators %d" % len(code.generators)]
    lines.extend(g.to_string() for g in code.generators)
    return "\n".join(lines) + "\n"


def code_from_text(text: str) -> StabilizerCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2 or not lines[0].startswith("qubits "):
        raise ValueError("bad header")
    n = int(lines[0].split()[1])
    g = int(lines[1].split()[1])
    if len(lines) != 2 + g:
        raise ValueError("expected %d generator lines, got %d" % (g, len(lines) - 2))
    gens = []
    for ln in lines[2:]:
        if len(ln) != n:
            raise ValueError("generator line length %d != n = %d" % (len(ln), n))
        gens.append(PauliOp.from_string(ln))
    return build_code(gens, n)
