"""Dense GF(2) linear algebra on bit-packed rows.

Vectors and matrix rows are stored as Python ints, i.e. packed machine
words XORed in bulk.  Elimination produces the (unique) reduced row
echelon form, so rank / solve / nullspace results are reproducible:
pivots are chosen at the lowest-index nonzero column, solutions set all
free variables to zero, and nullspace bases carry one vector per free
column in ascending column order.
"""

from __future__ import annotations


def _lsb(x: int) -> int:
    """Index of the lowest set bit (x must be nonzero)."""
    return (x & -x).bit_length() - 1


def parity(x: int) -> int:
    """Parity of the set bits of a nonnegative int."""
    return x.bit_count() & 1


class BitVector:
    """Fixed-length vector over GF(2), backed by one int."""

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("length must be nonnegative")
        if bits < 0 or bits >> length:
            raise ValueError("bits out of range for length %d" % length)
        self.length = length
        self.bits = bits

    @classmethod
    def from_indices(cls, length: int, indices) -> "BitVector":
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise ValueError("index %d out of range" % i)
            bits |= 1 << i
        return cls(length, bits)

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise ValueError("index %d out of range" % i)
        return (self.bits >> i) & 1

    def indices(self) -> list[int]:
        """Sorted support of the vector."""
        out = []
        b = self.bits
        while b:
            i = _lsb(b)
            out.append(i)
            b &= b - 1
        return out

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.length == other.length
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.length, self.bits))

    def __len__(self) -> int:
        return self.length

    def __repr__(self):
        return "BitVector(%d, 0b%s)" % (self.length, self.to01()[::-1] or "0")

    def to01(self) -> str:
        """String of 0/1 characters, index 0 first."""
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))


class BitMatrix:
    """Matrix over GF(2); each row is one bit-packed int."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, row_bits=None):
        self.rows = rows
        self.cols = cols
        if row_bits is None:
            self._rows = [0] * rows
        else:
            row_bits = list(row_bits)
            if len(row_bits) != rows:
                raise ValueError("row count mismatch")
            for r in row_bits:
                if r < 0 or (cols < r.bit_length()):
                    raise ValueError("row bits exceed column count")
            self._rows = row_bits

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, vectors, cols: int | None = None) -> "BitMatrix":
        vectors = list(vectors)
        if cols is None:
            if not vectors:
                raise ValueError("cannot infer column count from no rows")
            cols = vectors[0].length
        bits = []
        for v in vectors:
            if v.length != cols:
                raise ValueError("row length mismatch")
            bits.append(v.bits)
        return cls(len(vectors), cols, bits)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self._rows[i])

    def row_bits(self, i: int) -> int:
        return self._rows[i]

    def get(self, i: int, j: int) -> int:
        return (self._rows[i] >> j) & 1

    def set(self, i: int, j: int, value: int) -> None:
        if value & 1:
            self._rows[i] |= 1 << j
        else:
            self._rows[i] &= ~(1 << j)

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, list(self._rows))

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self._rows):
            while r:
                j = _lsb(r)
                out[j] |= 1 << i
                r &= r - 1
        return BitMatrix(self.cols, self.rows, out)

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return BitMatrix(self.rows + other.rows, self.cols, self._rows + other._rows)

    def select_columns(self, cols) -> "BitMatrix":
        """Submatrix keeping the given columns, in the given order."""
        cols = list(cols)
        for c in cols:
            if c < 0 or c >= self.cols:
                raise ValueError("column %d out of range" % c)
        out = []
        for r in self._rows:
            rb = 0
            for idx, c in enumerate(cols):
                rb |= ((r >> c) & 1) << idx
            out.append(rb)
        return BitMatrix(self.rows, len(cols), out)

    def mul_vec(self, x: BitVector) -> BitVector:
        """Matrix-vector product over GF(2)."""
        if x.length != self.cols:
            raise ValueError("dimension mismatch")
        bits = 0
        xb = x.bits
        for i, r in enumerate(self._rows):
            if (r & xb).bit_count() & 1:
                bits |= 1 << i
        return BitVector(self.rows, bits)

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for r in self._rows:
            acc = 0
            rr = r
            while rr:
                j = _lsb(rr)
                acc ^= other._rows[j]
                rr &= rr - 1
            out.append(acc)
        return BitMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self._rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self._rows)))

    def __repr__(self):
        return "BitMatrix(%d x %d)" % (self.rows, self.cols)

    # -- elimination ------------------------------------------------------

    def _rref_pivots(self):
        """Reduced echelon pivots as {pivot column: packed row}."""
        pivots: dict[int, int] = {}
        for r in self._rows:
            _insert_pivot(r, pivots)
        return pivots

    def rank(self) -> int:
        return len(self._rref_pivots())

    def rref(self):
        """(pivot_columns, rows) of the reduced row echelon form."""
        pivots = self._rref_pivots()
        cols = sorted(pivots)
        return cols, [BitVector(self.cols, pivots[c]) for c in cols]

    def solve(self, b: BitVector) -> BitVector | None:
        """One solution x of self @ x = b, or None if inconsistent.

        Free variables are set to zero, so the answer is canonical.
        """
        if b.length != self.rows:
            raise ValueError("rhs length mismatch")
        aug = self.cols  # augmented column index
        pivots: dict[int, int] = {}
        for i, r in enumerate(self._rows):
            row = r | (((b.bits >> i) & 1) << aug)
            c = _insert_pivot(row, pivots)
            if c == aug:
                return None  # reduced to 0 = 1
        x = 0
        for c, pr in pivots.items():
            if (pr >> aug) & 1:
                x |= 1 << c
        return BitVector(self.cols, x)

    def nullspace(self) -> list[BitVector]:
        """Basis of the right kernel, one vector per free column, ascending."""
        pivots = self._rref_pivots()
        basis = []
        for f in range(self.cols):
            if f in pivots:
                continue
            v = 1 << f
            for c, pr in pivots.items():
                if (pr >> f) & 1:
                    v |= 1 << c
            basis.append(BitVector(self.cols, v))
        return basis


def _reduce_full(r: int, pivots: dict[int, int]) -> int:
    """Fully reduce a packed row against RREF pivot rows.

    Pivot rows never contain each other's pivot columns, so one pass over
    the pivot dict suffices.
    """
    for c, p in pivots.items():
        if (r >> c) & 1:
            r ^= p
    return r


def _insert_pivot(r: int, pivots: dict[int, int]) -> int | None:
    """Reduce r and, if independent, install it as a new RREF pivot row.

    Returns the new pivot column, or None if r lies in the current span.
    """
    r = _reduce_full(r, pivots)
    if r == 0:
        return None
    c = _lsb(r)
    for pc, pr in pivots.items():
        if (pr >> c) & 1:
            pivots[pc] = pr ^ r
    pivots[c] = r
    return c


class SpanTracker:
    """Incremental row space: membership tests and insertions in RREF form.

    Cheaper than re-running rank() when many vectors are checked against
    a fixed (or growing) span.
    """

    __slots__ = ("cols", "pivots")

    def __init__(self, cols: int):
        self.cols = cols
        self.pivots: dict[int, int] = {}

    def residual(self, v: BitVector) -> int:
        if v.length != self.cols:
            raise ValueError("length mismatch")
        return _reduce_full(v.bits, self.pivots)

    def contains(self, v: BitVector) -> bool:
        return self.residual(v) == 0

    def add(self, v: BitVector) -> bool:
        """Insert v; returns True if it enlarged the span."""
        if v.length != self.cols:
            raise ValueError("length mismatch")
        return _insert_pivot(v.bits, self.pivots) is not None

    @property
    def rank(self) -> int:
        return len(self.pivots)
