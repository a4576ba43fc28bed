"""Exact stabilizer entropies and the entropic route to the degeneracy bound.

The state is always the maximally mixed state on the code space,
purified by a reference system R of log2 D qubits.  For stabilizer codes
every reduced entropy is an integer computed by a GF(2) rank:
S(X) = |X| - log2 #(stabilizer group elements supported inside X).

The inequality chain certifies log2 D <= S(C) <= |C| from the
correctability of A and B; an approximate variant scales the left side
by (1 - 27 d log2(1/d)) for recovery error d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .gf2 import BitVector
from .stabilizer import PauliOp, StabilizerCode, degeneracy, logical_generators
from .correctability import is_correctable


def _group_rank_inside(code: StabilizerCode, X: list[int]) -> int:
    """log2 of the number of stabilizer group elements supported in X."""
    G = code.generator_matrix()
    n = code.n
    comp = sorted(set(range(n)) - set(X))
    cols = comp + [c + n for c in comp]
    return code.rank() - G.select_columns(cols).rank()


def stabilizer_entropy(code: StabilizerCode, X) -> int:
    """S(rho^X) in bits for the maximally mixed code state."""
    X = sorted(set(X))
    if X and (X[0] < 0 or X[-1] >= code.n):
        raise ValueError("region outside qubit range")
    return len(X) - _group_rank_inside(code, X)


def mutual_info_with_reference(code: StabilizerCode, X) -> int:
    """I(X:R) = S(X) + S(R) - S(XR), with S(R) = log2 D and
    S(XR) = S(X^c) by purity of the global state."""
    X = sorted(set(X))
    comp = sorted(set(range(code.n)) - set(X))
    k = degeneracy(code)
    return stabilizer_entropy(code, X) + k - stabilizer_entropy(code, comp)


def purified_code(code: StabilizerCode) -> StabilizerCode:
    """Stabilizer group of the purified code state, reference appended.

    Logical pair i is entangled with reference qubit n + i (adding
    Xbar_i X_{n+i} and Zbar_i Z_{n+i} to the group), which turns the
    maximally mixed code state into a pure stabilizer state on n + k
    qubits.  Entropies of XR regions can then be computed by the same
    rank formula instead of through purity identities.
    """
    n = code.n
    logs = logical_generators(code)
    k = len(logs) // 2
    m = n + k
    gens = [
        PauliOp(m, BitVector(m, g.x.bits), BitVector(m, g.z.bits))
        for g in code.generators
    ]
    for i in range(k):
        xbar, zbar = logs[2 * i], logs[2 * i + 1]
        gens.append(PauliOp(m, BitVector(m, xbar.x.bits | (1 << (n + i))),
                            BitVector(m, xbar.z.bits)))
        gens.append(PauliOp(m, BitVector(m, zbar.x.bits),
                            BitVector(m, zbar.z.bits | (1 << (n + i)))))
    return StabilizerCode(m, gens, name=(code.name + "+R") if code.name else "")


@dataclass
class EntropyReport:
    entropies: dict
    mutual: dict
    steps: list[tuple[str, str, int, str, int, bool]]
    passed: bool
    notes: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = []
        for name, ltxt, lval, rel, rval, ok in self.steps:
            out.append(
                "%-34s %s = %d %s %d  %s"
                % (name, ltxt, lval, rel, rval, "pass" if ok else "FAIL")
            )
        return out


def verify_fact1_chain(code: StabilizerCode, A, B, C) -> EntropyReport:
    """Evaluate every step of the entropic degeneracy bound in exact ints.

    A, B, C are disjoint qubit-id sets covering all qubits.  A and B are
    expected to be correctable; if one is not, the report notes the failed
    hypothesis, the chain is still evaluated, and the conclusion is
    dropped.
    """
    A, B, C = (sorted(set(r)) for r in (A, B, C))
    allq = sorted(A + B + C)
    if allq != list(range(code.n)):
        raise ValueError("A, B, C must partition the code's qubits")

    k = degeneracy(code)
    ext = purified_code(code)
    R = list(range(code.n, ext.n))
    S = {
        "A": stabilizer_entropy(code, A),
        "B": stabilizer_entropy(code, B),
        "C": stabilizer_entropy(code, C),
        "AB": stabilizer_entropy(code, A + B),
        "AC": stabilizer_entropy(code, A + C),
        "BC": stabilizer_entropy(code, B + C),
        "ABC": stabilizer_entropy(code, allq),
        "R": k,
        # computed on the purified group, not through purity identities,
        # so the purity-swap steps below are real cross-checks
        "AR": stabilizer_entropy(ext, A + R),
        "BR": stabilizer_entropy(ext, B + R),
    }
    I = {
        "A:R": S["A"] + k - S["AR"],
        "B:R": S["B"] + k - S["BR"],
    }
    notes = []
    corr_a = is_correctable(code, A).correctable
    corr_b = is_correctable(code, B).correctable
    if not corr_a:
        notes.append("hypothesis failed: region A is not correctable")
    if not corr_b:
        notes.append("hypothesis failed: region B is not correctable")

    steps = []

    def step(name, ltxt, lval, rel, rval):
        ok = lval == rval if rel == "==" else lval <= rval
        steps.append((name, ltxt, lval, rel, rval, ok))
        return ok

    step("global entropy is log2 D", "S(ABC)", S["ABC"], "==", k)
    step("A carries no reference info", "I(A:R)", I["A:R"], "==", 0)
    step("B carries no reference info", "I(B:R)", I["B:R"], "==", 0)
    # purity of the global state: S(XR) = S(X^c)
    step("purity swap for A", "S(AR)", S["AR"], "==", S["BC"])
    step("purity swap for B", "S(BR)", S["BR"], "==", S["AC"])
    step(
        "subadditivity",
        "S(AC) + S(BC)", S["AC"] + S["BC"],
        "<=", S["A"] + S["B"] + 2 * S["C"],
    )
    conclusion_ok = True
    if corr_a and corr_b:
        conclusion_ok = step("degeneracy bound", "log2 D", k, "<=", S["C"])
        conclusion_ok &= step("belt entropy bound", "S(C)", S["C"], "<=", len(C))
    else:
        notes.append("conclusion skipped: the bound needs both hypotheses")
    passed = all(ok for *_, ok in steps) and conclusion_ok
    return EntropyReport(entropies=S, mutual=I, steps=steps,
                         passed=passed, notes=notes)


@dataclass
class ApproxBound:
    lhs: float
    rhs: float
    holds: bool
    prefactor: float
    delta: float
    in_regime: bool
    vacuous: bool
    log_base: int = 2

    def flags(self) -> list[str]:
        out = []
        if not self.in_regime:
            out.append("delta not sufficiently small (stated regime is delta < 1/10)")
        if self.vacuous:
            out.append("prefactor nonpositive: inequality is vacuous")
        return out


def approx_bound(delta: float, log2_D, log2_HC) -> ApproxBound:
    """(1 - 27 d log2(1/d)) log2 D <= log2 dim H_C, with d = 0 reducing
    exactly to the integer comparison."""
    if delta < 0 or delta >= 1:
        raise ValueError("delta must lie in [0, 1)")
    if delta == 0:
        prefactor = 1
    else:
        prefactor = 1 - 27 * delta * math.log2(1 / delta)
    lhs = prefactor * log2_D
    return ApproxBound(
        lhs=lhs,
        rhs=log2_HC,
        holds=lhs <= log2_HC,
        prefactor=prefactor,
        delta=delta,
        in_regime=delta < 0.1,
        vacuous=prefactor <= 0 and delta > 0,
    )
