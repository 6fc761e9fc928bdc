"""Dense exact linear algebra over a prime field F_p.

Everything downstream (hom-spaces, syzygies, diagram chases) reduces to the
routines here.  Matrices are immutable wrappers around int64 numpy arrays with
entries reduced mod p; pivoting is deterministic (first nonzero in column
order) so results are bit-reproducible.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractViolation

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeFieldMatrix:
    """A rows x cols matrix over F_p."""

    __slots__ = ("a", "p")

    def __init__(self, a, p: int):
        if not _is_prime(p):
            raise ContractViolation(f"{p} is not prime")
        arr = np.asarray(a, dtype=np.int64)
        if arr.ndim != 2:
            raise ContractViolation("matrix data must be 2-dimensional")
        self.a = arr % p
        self.a.flags.writeable = False
        self.p = p

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @classmethod
    def zeros(cls, rows, cols, p):
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n, p):
        return cls(np.eye(n, dtype=np.int64), p)

    def __matmul__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        if self.p != other.p:
            raise ContractViolation("field mismatch")
        if self.cols != other.rows:
            raise ContractViolation("dimension mismatch in matrix product")
        return PrimeFieldMatrix(mat_mul(self.a, other.a, self.p), self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrimeFieldMatrix)
            and self.p == other.p
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self):
        return hash((self.p, self.a.shape, self.a.tobytes()))

    def transpose(self) -> "PrimeFieldMatrix":
        return PrimeFieldMatrix(self.a.T, self.p)

    def __repr__(self):
        return f"PrimeFieldMatrix({self.a.tolist()}, p={self.p})"


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # entries < p and p small, so int64 products cannot overflow at testbed sizes
    return (a.astype(np.int64) @ b.astype(np.int64)) % p


def _rref_bits(a: np.ndarray):
    """Packed-row reduction over F_2; returns (packed rows, pivot columns)."""
    nrows, ncols = a.shape
    packed = np.packbits((np.asarray(a) & 1).astype(np.uint8), axis=1)
    pivots = []
    pr = 0
    for c in range(ncols):
        if pr >= nrows:
            break
        byte, shift = c >> 3, 7 - (c & 7)
        colbits = (packed[pr:, byte] >> shift) & 1
        first = int(colbits.argmax())
        if colbits[first] == 0:
            continue
        if first:
            i = pr + first
            packed[[pr, i]] = packed[[i, pr]]
        col_all = (packed[:, byte] >> shift) & 1
        col_all[pr] = 0
        hit = np.nonzero(col_all)[0]
        if hit.size:
            packed[hit] ^= packed[pr]
        pivots.append(c)
        pr += 1
    return packed, pivots


def rref_array(a: np.ndarray, p: int):
    """Reduced row echelon form; returns (rref, pivot column list)."""
    a = np.asarray(a, dtype=np.int64)
    if p == 2 and a.size:
        packed, pivots = _rref_bits(a % 2)
        r = np.unpackbits(packed, axis=1, count=a.shape[1]).astype(np.int64)
        return r, pivots
    r = (a % p).copy()
    nrows, ncols = r.shape
    pivots = []
    pr = 0
    for c in range(ncols):
        if pr >= nrows:
            break
        tail = r[pr:, c]
        first = int((tail != 0).argmax())
        if tail[first] == 0:
            continue
        i = pr + first
        if i != pr:
            r[[pr, i]] = r[[i, pr]]
        inv = pow(int(r[pr, c]), p - 2, p)
        if inv != 1:
            r[pr] = (r[pr] * inv) % p
        col = r[:, c].copy()
        col[pr] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            r[hit] = (r[hit] - np.outer(col[hit], r[pr])) % p
        pivots.append(c)
        pr += 1
    return r, pivots


def pivot_columns(a: np.ndarray, p: int) -> list:
    """Pivot columns of the row echelon form, without materializing it."""
    if a.size == 0:
        return []
    if p == 2:
        return _rref_bits(np.asarray(a))[1]
    return rref_array(a, p)[1]


def rank(a: np.ndarray, p: int) -> int:
    return len(pivot_columns(a, p))


def kernel_array(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the right null space of a."""
    a = np.asarray(a, dtype=np.int64)
    nrows, ncols = a.shape
    if ncols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if nrows == 0 or not a.any():
        return np.eye(ncols, dtype=np.int64)
    r, pivots = rref_array(a, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((ncols, len(free)), dtype=np.int64)
    for j, fc in enumerate(free):
        basis[fc, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-r[i, fc]) % p
    return basis


def solve_array(a: np.ndarray, b: np.ndarray, p: int):
    """One solution of a x = b (b may have several columns), or None."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    single = b.ndim == 1
    if single:
        b = b[:, None]
    if a.shape[0] != b.shape[0]:
        raise ContractViolation("dimension mismatch in solve")
    ncols = a.shape[1]
    aug, pivots = rref_array(np.hstack([a, b]), p)
    if any(c >= ncols for c in pivots):
        return None
    x = np.zeros((ncols, b.shape[1]), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = aug[i, ncols:]
    return x[:, 0] if single else x


def column_space_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Independent columns of a, selected deterministically in column order."""
    if a.size == 0:
        return a.reshape(a.shape[0], 0)
    _, pivots = rref_array(a, p)
    return np.asarray(a, dtype=np.int64)[:, pivots] % p


def in_column_space(a: np.ndarray, v: np.ndarray, p: int) -> bool:
    return solve_array(a, v, p) is not None


def invert_array(a: np.ndarray, p: int):
    """Inverse of a square matrix, or None if singular."""
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        return None
    x = solve_array(a, np.eye(n, dtype=np.int64), p)
    if x is None or rank(a, p) != n:
        return None
    return x


class IncrementalSpan:
    """A growing F_p row space with cheap marginal-rank queries.

    Rows are kept fully reduced (each has a pivot column that is zero in all
    other rows), so reducing candidates against the span is a single matrix
    product instead of a fresh elimination.
    """

    __slots__ = ("p", "length", "rows", "pivots")

    def __init__(self, length: int, p: int):
        self.p = p
        self.length = length
        self.rows = np.zeros((0, length), dtype=np.int64)
        self.pivots: list = []

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def residual(self, vecs: np.ndarray) -> np.ndarray:
        if self.length == 0:
            return np.zeros((0, 0), dtype=np.int64)
        r = np.asarray(vecs, dtype=np.int64).reshape(-1, self.length) % self.p
        if self.pivots and r.size:
            r = (r - r[:, self.pivots] @ self.rows) % self.p
        return r

    def gain(self, vecs: np.ndarray) -> int:
        return rank(self.residual(vecs), self.p)

    def contains(self, vecs: np.ndarray) -> bool:
        return not self.residual(vecs).any()

    def add(self, vecs: np.ndarray) -> int:
        red = self.residual(vecs)
        if not red.any():
            return 0
        rr, piv = rref_array(red, self.p)
        new_rows = rr[:len(piv)]
        if self.pivots:
            self.rows = (self.rows - self.rows[:, piv] @ new_rows) % self.p
        self.rows = np.vstack([self.rows, new_rows])
        self.pivots.extend(piv)
        return len(piv)


# --- spec-level operations on PrimeFieldMatrix -------------------------------

def rref(m: PrimeFieldMatrix):
    """Returns (rref matrix, pivot column list, rank)."""
    r, pivots = rref_array(m.a, m.p)
    return PrimeFieldMatrix(r, m.p), pivots, len(pivots)


def kernel_basis(m: PrimeFieldMatrix):
    """Basis of {v : m v = 0}, as a list of column vectors."""
    k = kernel_array(m.a, m.p)
    return [k[:, j].copy() for j in range(k.shape[1])]


def solve(a: PrimeFieldMatrix, b):
    """Some x with a x = b when consistent, else None."""
    b = np.asarray(b, dtype=np.int64)
    if b.ndim != 1 or b.shape[0] != a.rows:
        raise ContractViolation("right-hand side length must equal row count")
    return solve_array(a.a, b, a.p)
