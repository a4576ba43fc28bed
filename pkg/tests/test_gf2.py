"""Tests for the bit-packed GF(2) kernel."""

import random

import pytest

from topocert.gf2 import BitMatrix, BitVector, SpanTracker


def brute_rank(m: BitMatrix) -> int:
    """Independent rank oracle: log2 of the row space enumerated directly."""
    assert m.rows <= 16, "oracle is exponential in row count"
    span = set()
    for mask in range(1 << m.rows):
        acc = 0
        for i in range(m.rows):
            if (mask >> i) & 1:
                acc ^= m.row_bits(i)
        span.add(acc)
    size = len(span)
    r = size.bit_length() - 1
    assert 1 << r == size
    return r


def random_matrix(rng, rows, cols):
    return BitMatrix(rows, cols, [rng.getrandbits(cols) for _ in range(rows)])


# hollow triangle: vertices 0,1,2; edges (0,1), (0,2), (1,2)
# boundary of edge j has a 1 at each endpoint.
TRIANGLE_D1 = BitMatrix(3, 3, [0b011, 0b101, 0b110]).transpose()


def test_identity_rank():
    assert BitMatrix.identity(8).rank() == 8


def test_zero_rank():
    assert BitMatrix.zeros(5, 7).rank() == 0


def test_triangle_boundary_rank():
    # 3 vertices x 3 edges, rank 2 (one cycle)
    assert TRIANGLE_D1.rows == 3 and TRIANGLE_D1.cols == 3
    assert TRIANGLE_D1.rank() == 2
    assert TRIANGLE_D1.rank() == brute_rank(TRIANGLE_D1)


def test_rank_matches_brute_force():
    rng = random.Random(101)
    for _ in range(60):
        rows = rng.randrange(1, 9)
        cols = rng.randrange(1, 13)
        m = random_matrix(rng, rows, cols)
        assert m.rank() == brute_rank(m)


def test_rank_plus_nullity():
    rng = random.Random(7)
    for _ in range(40):
        rows = rng.randrange(0, 30)
        cols = rng.randrange(0, 40)
        m = random_matrix(rng, rows, cols)
        assert m.rank() + len(m.nullspace()) == cols


def test_rank_invariant_under_row_ops():
    rng = random.Random(55)
    for _ in range(20):
        m = random_matrix(rng, 12, 18)
        r0 = m.rank()
        rows = list(m._rows)
        for _ in range(30):
            i, j = rng.randrange(12), rng.randrange(12)
            if i != j:
                rows[i] ^= rows[j]
        rng.shuffle(rows)
        assert BitMatrix(12, 18, rows).rank() == r0


def test_solve_triangle():
    # b = v1 + v2; edge {1,2} works, but the canonical answer zeroes the
    # free column (edge index 2), giving the equivalent path {0,1} + {0,2}
    b = BitVector.from_indices(3, [1, 2])
    x = TRIANGLE_D1.solve(b)
    assert x is not None
    assert TRIANGLE_D1.mul_vec(x) == b
    assert x == BitVector.from_indices(3, [0, 1])
    # the sparse solution differs by the nullspace (whole cycle)
    assert x ^ TRIANGLE_D1.nullspace()[0] == BitVector.from_indices(3, [2])


def test_solve_inconsistent():
    # single vertex hit an odd number of times is not a boundary
    b = BitVector.from_indices(3, [0])
    assert TRIANGLE_D1.solve(b) is None


def test_solve_random_consistency():
    rng = random.Random(31)
    for _ in range(50):
        rows = rng.randrange(1, 25)
        cols = rng.randrange(1, 25)
        m = random_matrix(rng, rows, cols)
        x_true = BitVector(cols, rng.getrandbits(cols))
        b = m.mul_vec(x_true)
        x = m.solve(b)
        assert x is not None
        assert m.mul_vec(x) == b


def test_solve_detects_inconsistency():
    rng = random.Random(97)
    hits = 0
    for _ in range(200):
        m = random_matrix(rng, 8, 5)
        b = BitVector(8, rng.getrandbits(8))
        x = m.solve(b)
        if x is None:
            hits += 1
            # verify by brute force over all 32 candidate solutions
            assert all(
                m.mul_vec(BitVector(5, cand)) != b for cand in range(32)
            )
        else:
            assert m.mul_vec(x) == b
    assert hits > 0


def test_nullspace_triangle():
    ns = TRIANGLE_D1.nullspace()
    assert len(ns) == 1
    assert ns[0] == BitVector.from_indices(3, [0, 1, 2])


def test_nullspace_vectors_are_in_kernel():
    rng = random.Random(13)
    for _ in range(30):
        m = random_matrix(rng, rng.randrange(1, 20), rng.randrange(1, 30))
        zero = BitVector(m.rows, 0)
        basis = m.nullspace()
        for v in basis:
            assert m.mul_vec(v) == zero
        # basis is independent
        if basis:
            assert BitMatrix.from_rows(basis).rank() == len(basis)


def test_determinism():
    rng = random.Random(3)
    m = random_matrix(rng, 20, 20)
    b = BitVector(20, rng.getrandbits(20))
    assert m.solve(b) == m.copy().solve(b)
    assert [v.bits for v in m.nullspace()] == [v.bits for v in m.copy().nullspace()]


def test_matmul_and_transpose():
    rng = random.Random(17)
    a = random_matrix(rng, 6, 9)
    b = random_matrix(rng, 9, 4)
    c = a.matmul(b)
    for i in range(6):
        for j in range(4):
            acc = 0
            for k in range(9):
                acc ^= a.get(i, k) & b.get(k, j)
            assert c.get(i, j) == acc
    at = a.transpose()
    for i in range(6):
        for j in range(9):
            assert a.get(i, j) == at.get(j, i)


def test_mul_vec_identity():
    v = BitVector.from_indices(10, [0, 3, 9])
    assert BitMatrix.identity(10).mul_vec(v) == v


def test_bitvector_basics():
    v = BitVector.from_indices(6, [1, 4])
    w = BitVector.from_indices(6, [4, 5])
    assert (v ^ w).indices() == [1, 5]
    assert v.weight() == 2
    assert v.get(1) == 1 and v.get(0) == 0
    assert v.to01() == "010010"
    with pytest.raises(ValueError):
        BitVector.from_indices(3, [5])
    with pytest.raises(ValueError):
        v ^ BitVector(5)


def test_span_tracker():
    rng = random.Random(23)
    m = random_matrix(rng, 14, 14)
    tracker = SpanTracker(14)
    for i in range(14):
        tracker.add(m.row(i))
    assert tracker.rank == m.rank()
    # every row combination is contained in the span
    for _ in range(20):
        acc = 0
        for i in range(14):
            if rng.getrandbits(1):
                acc ^= m.row_bits(i)
        assert tracker.contains(BitVector(14, acc))
