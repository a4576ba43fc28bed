"""Erasure correctability of qudit regions and the degeneracy-bound certificate.

For stabilizer codes a region A is correctable exactly when every Pauli
operator supported on A that commutes with the stabilizer group is itself
a stabilizer (no logical operator lives on A).  That is a pure GF(2) rank
comparison.  A dense Knill-Laflamme checker over explicit codewords
provides an independent oracle at small sizes.  The certificate ties the
pieces together: partition the qudits by a verified cellulation, check
that both colors are correctable, and conclude log2 D <= |C|.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .bipartition import BoundCertificate, Cellulation, abc_partition, verify_cellulation
from .gf2 import BitMatrix, BitVector, SpanTracker
from .layout import QuditLayout
from .simplicial import SimplicialComplex
from .stabilizer import PauliOp, StabilizerCode, degeneracy


class PlacementError(RuntimeError):
    """Disjoint ball placement failed after bounded retries."""


class Region:
    """A set of ids (layout qudits or code qubits) with a provenance tag."""

    __slots__ = ("ids", "tag")

    def __init__(self, ids, tag: str = ""):
        self.ids = tuple(sorted(set(ids)))
        self.tag = tag

    def __iter__(self):
        return iter(self.ids)

    def __len__(self) -> int:
        return len(self.ids)

    def __contains__(self, q) -> bool:
        return q in set(self.ids)

    def __repr__(self) -> str:
        tag = ", tag=%r" % self.tag if self.tag else ""
        return "Region(%d ids%s)" % (len(self.ids), tag)


@dataclass
class CorrectabilityVerdict:
    correctable: bool
    witness: PauliOp | None
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.correctable


def _stab_span(code: StabilizerCode) -> SpanTracker:
    tracker = getattr(code, "_stab_span_cache", None)
    if tracker is None:
        G = code.generator_matrix()
        tracker = SpanTracker(2 * code.n)
        for i in range(G.rows):
            tracker.add(BitVector(2 * code.n, G.row_bits(i)))
        code._stab_span_cache = tracker
    return tracker


def is_correctable(code: StabilizerCode, region) -> CorrectabilityVerdict:
    """Cleaning-lemma rank test: no logical operator supported on the region.

    region holds code qubit indices (a Region or any iterable).
    """
    A = sorted(set(region))
    n = code.n
    if A and (A[0] < 0 or A[-1] >= n):
        raise ValueError("region contains qubit ids outside 0..%d" % (n - 1))
    if not A:
        return CorrectabilityVerdict(True, None, {"region_size": 0, "kernel_dim": 0})
    G = code.generator_matrix()
    mask = (1 << n) - 1
    cols = A + [a + n for a in A]
    rows = []
    for i in range(G.rows):
        r = G.row_bits(i)
        sw = ((r & mask) << n) | (r >> n)  # symplectic swap: [z|x]
        rb = 0
        for idx, c in enumerate(cols):
            rb |= ((sw >> c) & 1) << idx
        rows.append(rb)
    restricted = BitMatrix(len(rows), 2 * len(A), rows)
    kernel = restricted.nullspace()
    span = _stab_span(code)
    contained = 0
    for v in kernel:
        w = 0
        vb = v.bits
        for idx, c in enumerate(cols):
            if (vb >> idx) & 1:
                w |= 1 << c
        if span.contains(BitVector(2 * n, w)):
            contained += 1
            continue
        witness = PauliOp.from_symplectic_row(n, w)
        return CorrectabilityVerdict(
            False, witness,
            {"region_size": len(A), "kernel_dim": len(kernel),
             "stabilizer_members": contained},
        )
    return CorrectabilityVerdict(
        True, None,
        {"region_size": len(A), "kernel_dim": len(kernel),
         "stabilizer_members": len(kernel)},
    )


# -- dense Knill-Laflamme oracle ---------------------------------------------


def _apply_pauli_dense(n: int, x: int, z: int, psi: np.ndarray) -> np.ndarray:
    """Apply the Hermitian Pauli i^{|x&z|} X^x Z^z to a state table.

    psi has shape (2^n, ...) indexed by computational basis ints.
    """
    dim = 1 << n
    idx = np.arange(dim)
    par = np.zeros(dim, dtype=np.int64)
    zz = z
    while zz:
        j = (zz & -zz).bit_length() - 1
        par ^= (idx >> j) & 1
        zz &= zz - 1
    signs = 1.0 - 2.0 * par
    phase = 1j ** ((x & z).bit_count() % 4)
    out = np.zeros_like(psi, dtype=complex)
    out[idx ^ x] = (phase * signs)[:, None] * psi if psi.ndim == 2 else (phase * signs) * psi
    return out


def codewords_from_stabilizers(code: StabilizerCode) -> np.ndarray:
    """Orthonormal basis of the code space as columns of a 2^n x D array.

    Projects computational seeds through (I + S)/2 for every generator and
    orthonormalizes; asserts every resulting vector is a +1 eigenvector of
    every generator.
    """
    n = code.n
    if n > 12:
        raise ValueError("dense codewords limited to n <= 12 (got %d)" % n)
    dim = 1 << n
    D = 1 << degeneracy(code)
    basis: list[np.ndarray] = []
    for seed in range(dim):
        if len(basis) == D:
            break
        psi = np.zeros(dim, dtype=complex)
        psi[seed] = 1.0
        for g in code.generators:
            psi = 0.5 * (psi + _apply_pauli_dense(n, g.x.bits, g.z.bits, psi))
            if np.linalg.norm(psi) < 1e-12:
                break
        nrm = np.linalg.norm(psi)
        if nrm < 1e-9:
            continue
        psi /= nrm
        for b in basis:
            psi = psi - np.vdot(b, psi) * b
        nrm = np.linalg.norm(psi)
        if nrm < 1e-9:
            continue
        basis.append(psi / nrm)
    if len(basis) != D:
        raise AssertionError("projector produced %d of %d codewords" % (len(basis), D))
    W = np.stack(basis, axis=1)
    for g in code.generators:  # self-check: codewords really are stabilized
        GW = _apply_pauli_dense(n, g.x.bits, g.z.bits, W)
        if np.max(np.abs(GW - W)) > 1e-9:
            raise AssertionError("codeword fails generator eigenvalue check")
    return W


@dataclass
class KLVerdict:
    consistent: bool
    violator: PauliOp | None
    scalars: dict | None
    max_deviation: float


def knill_laflamme_dense(codewords: np.ndarray, region,
                         tol: float = 1e-9) -> KLVerdict:
    """Check Pi O_A Pi = c(O_A) Pi for every Pauli O_A on the region.

    codewords is a 2^n x D orthonormal array; region holds qubit indices.
    """
    dim, D = codewords.shape
    n = dim.bit_length() - 1
    if 1 << n != dim:
        raise ValueError("codeword length must be a power of two")
    if n > 12:
        raise ValueError("dense KL limited to n <= 12")
    gram = codewords.conj().T @ codewords
    if np.max(np.abs(gram - np.eye(D))) > 1e-9:
        raise ValueError("codeword basis is not orthonormal")
    A = sorted(set(region))
    if A and (A[0] < 0 or A[-1] >= n):
        raise ValueError("region outside qubit range")
    scalars: dict[str, complex] = {}
    max_dev = 0.0
    subsets = [0]
    for a in A:
        subsets += [s | (1 << a) for s in subsets]
    for x in subsets:
        for z in subsets:
            OW = _apply_pauli_dense(n, x, z, codewords)
            M = codewords.conj().T @ OW
            c = M[0, 0]
            dev = float(np.max(np.abs(M - c * np.eye(D))))
            max_dev = max(max_dev, dev)
            if dev > tol:
                return KLVerdict(
                    False, PauliOp.from_symplectic_row(n, x | (z << n)),
                    None, max_dev,
                )
            key = PauliOp.from_symplectic_row(n, x | (z << n)).to_string()
            scalars[key] = complex(c)
    return KLVerdict(True, None, scalars, max_dev)


# -- homogeneous-TO sampling sweep -------------------------------------------


@dataclass
class SweepReport:
    samples: int
    fraction_correctable: float
    counterexamples: list[tuple[int, PauliOp]]
    shrunk_regions: int
    ball_radius: float
    n_balls: int
    seed: int
    region_sizes: list[int]

    def passed(self) -> bool:
        return self.fraction_correctable == 1.0


def homogeneous_sweep(code: StabilizerCode, layout: QuditLayout,
                      ball_radius: float, n_balls: int, samples: int,
                      seed: int) -> SweepReport:
    """Sample disjoint metric balls; test correctability of the qudits
    whose a-neighborhood lies inside the ball union."""
    if ball_radius < layout.a:
        raise ValueError("ball_radius must be at least a")
    rng = random.Random(seed)
    good = 0
    counterexamples: list[tuple[int, PauliOp]] = []
    shrunk = 0
    sizes: list[int] = []
    for s in range(samples):
        balls = None
        for _ in range(200):
            centers = rng.sample(range(layout.n), n_balls)
            cand = [set(layout.neighborhood([c], ball_radius)) for c in centers]
            if all(
                not (cand[i] & cand[j])
                for i in range(n_balls) for j in range(i + 1, n_balls)
            ):
                balls = cand
                break
        if balls is None:
            raise PlacementError(
                "could not place %d disjoint balls of radius %g (sample %d)"
                % (n_balls, ball_radius, s)
            )
        union = set().union(*balls)
        inner = [
            q for q in sorted(union)
            if set(layout.neighborhood([q], layout.a)) <= union
        ]
        if len(inner) != len(union):
            shrunk += 1
        qubits = code.qubits_on_qudits(inner)
        sizes.append(len(qubits))
        verdict = is_correctable(code, qubits)
        if verdict.correctable:
            good += 1
        else:
            counterexamples.append((s, verdict.witness))
    return SweepReport(
        samples=samples,
        fraction_correctable=good / samples if samples else 1.0,
        counterexamples=counterexamples,
        shrunk_regions=shrunk,
        ball_radius=ball_radius,
        n_balls=n_balls,
        seed=seed,
        region_sizes=sizes,
    )


def planted_control_code(layout: QuditLayout) -> StabilizerCode:
    """Nonhomogeneous control: one bare logical qubit parked on qudit 0.

    Generators are single-site Z on every qudit except 0, so any ball
    containing qudit 0 supports the logical X and Z there.
    """
    n = layout.n
    gens = [PauliOp.from_supports(n, zs=[i]) for i in range(1, n)]
    code = StabilizerCode(n, gens, layout, name="planted_control")
    return code


# -- certificate assembly ------------------------------------------------------


def hemisphere_partition(K: SimplicialComplex) -> tuple[list[int], list[int], list[int]]:
    """Two-ball edge partition of a triangulated 2-sphere: the closed star
    of vertex 0 versus everything else, with an empty boundary belt."""
    if K.dim != 2:
        raise ValueError("need a surface")
    north = [e for e, s in enumerate(K.simplices[1]) if 0 in s]
    south = [e for e in range(K.n_simplices(1)) if e not in set(north)]
    return north, south, []


def certify_degeneracy_bound(code: StabilizerCode, layout: QuditLayout,
                             cellulation: Cellulation, r_skel: float,
                             r_sep: float | None = None) -> BoundCertificate:
    """Assemble the bound log2 D <= |C| from a verified cellulation.

    Runs verify_cellulation if this (layout, r_skel) pair has not been
    verified yet, splits the qudits, tests correctability of both colors,
    and compares the degeneracy against the belt size in qubits.
    """
    if (id(layout), float(r_skel)) not in cellulation._verified:
        if r_sep is None:
            r_sep = 2 * layout.a
        report = verify_cellulation(cellulation, layout, r_skel, r_sep)
        if not report.passed:
            failed = [name for name, ok, _ in report.checks if not ok]
            raise ValueError(
                "cellulation verification failed: %s" % ", ".join(failed)
            )
    A, B, C = abc_partition(cellulation, layout, r_skel)
    return _assemble_certificate(code, A, B, C, r_skel)


def certify_from_regions(code: StabilizerCode, A, B, C,
                         r_skel: float = 0.0) -> BoundCertificate:
    """Certificate for an explicitly given qudit partition (A, B, C)."""
    return _assemble_certificate(code, sorted(A), sorted(B), sorted(C), r_skel)


def _assemble_certificate(code: StabilizerCode, A, B, C,
                          r_skel: float) -> BoundCertificate:
    qA = code.qubits_on_qudits(A)
    qB = code.qubits_on_qudits(B)
    qC = code.qubits_on_qudits(C)
    if sorted(qA + qB + qC) != list(range(code.n)):
        raise ValueError("A, B, C do not cover the code's qubits")
    vA = is_correctable(code, qA)
    vB = is_correctable(code, qB)
    k = degeneracy(code)
    applicable = vA.correctable and vB.correctable
    holds = applicable and k <= len(qC)
    if applicable:
        detail = "log2 D = %d <= |C| = %d qubits (%d qudits)" % (
            k, len(qC), len(C)
        )
        if k > len(qC):
            detail = "BOUND VIOLATED: " + detail.replace("<=", ">")
    else:
        bad = []
        if not vA.correctable:
            bad.append("A (witness %s)" % _short_pauli(vA.witness))
        if not vB.correctable:
            bad.append("B (witness %s)" % _short_pauli(vB.witness))
        detail = "bound not applicable: %s not correctable" % " and ".join(bad)
    return BoundCertificate(
        code_name=code.name or "code_n%d" % code.n,
        n_qubits=code.n,
        log2_degeneracy=k,
        region_sizes={
            "A": len(qA), "B": len(qB), "C": len(qC),
            "A_qudits": len(A), "B_qudits": len(B), "C_qudits": len(C),
        },
        a_correctable=vA.correctable,
        b_correctable=vB.correctable,
        r_skel=r_skel,
        holds=holds,
        applicable=applicable,
        detail=detail,
    )


def _short_pauli(op: PauliOp | None) -> str:
    if op is None:
        return "-"
    if op.n <= 64:
        return op.to_string()
    return "weight-%d operator on qubits %s" % (op.weight(), op.support()[:8])
