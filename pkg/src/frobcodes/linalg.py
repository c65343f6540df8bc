"""Dense exact linear algebra over F_p.

:class:`Matrix` is an immutable row-major matrix of residues in [0, p).
Vectors passed to ``@`` are plain sequences and are treated as columns.
"""

from .errors import DimensionMismatch, SingularMatrix
from .field_core import fp_inv


class Matrix:
    __slots__ = ("rows", "p", "shape")

    def __init__(self, rows, p):
        rows = tuple(tuple(int(x) % p for x in r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        self.rows = rows
        self.p = p
        self.shape = (len(rows), ncols)

    @classmethod
    def identity(cls, n, p):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], p)

    @classmethod
    def zeros(cls, m, n, p):
        return cls([[0] * n for _ in range(m)], p)

    @classmethod
    def from_columns(cls, columns, p, nrows=None):
        columns = [tuple(c) for c in columns]
        if not columns:
            return cls.zeros(nrows or 0, 0, p)
        return cls(zip(*columns), p)

    @property
    def T(self):
        m, n = self.shape
        return Matrix([[self.rows[i][j] for i in range(m)] for j in range(n)], self.p)

    def columns(self):
        return [tuple(c) for c in zip(*self.rows)] if self.rows else []

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.p, self.rows))

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]}, p={self.p})"

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)

    def _check_same(self, other):
        if self.p != other.p or self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.p)

    def __sub__(self, other):
        self._check_same(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.p)

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows], self.p)

    def scale(self, c):
        return Matrix([[c * a for a in r] for r in self.rows], self.p)

    def __matmul__(self, other):
        p = self.p
        if isinstance(other, Matrix):
            if self.shape[1] != other.shape[0]:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            if not cols:
                return Matrix.zeros(self.shape[0], 0, p)
            return Matrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows], p)
        v = tuple(other)
        if len(v) != self.shape[1]:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) % p for r in self.rows)

    def __pow__(self, e):
        if self.shape[0] != self.shape[1]:
            raise DimensionMismatch("matrix power needs a square matrix")
        result = Matrix.identity(self.shape[0], self.p)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Return ``(R, pivots, rank)``; zero rows of R are kept at the bottom."""
        p = self.p
        m, n = self.shape
        a = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = next((i for i in range(r, m) if a[i][c]), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = fp_inv(a[r][c], p)
            a[r] = [x * inv % p for x in a[r]]
            for i in range(m):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
        return Matrix(a, p) if m else self, tuple(pivots), r

    def rank(self):
        return self.rref()[2]

    def row_basis(self):
        """RREF with zero rows dropped: the canonical form of the row space."""
        R, _, rank = self.rref()
        return Matrix(R.rows[:rank], self.p) if rank else Matrix.zeros(0, self.shape[1], self.p)

    def kernel_basis(self):
        """Basis of {v : M v = 0}, one vector per free column, in column order.

        The vector for free column f has a 1 at f, zeros at the other free
        columns and ``-R[i][f]`` at pivot column ``pivots[i]``.
        """
        p = self.p
        R, pivots, _ = self.rref()
        n = self.shape[1]
        basis = []
        for f in range(n):
            if f in pivots:
                continue
            v = [0] * n
            v[f] = 1
            for i, pc in enumerate(pivots):
                v[pc] = -R.rows[i][f] % p
            basis.append(tuple(v))
        return basis

    def inverse(self):
        m, n = self.shape
        if m != n:
            raise DimensionMismatch("only square matrices are invertible")
        aug = Matrix([r + tuple(int(i == j) for j in range(n)) for i, r in enumerate(self.rows)], self.p)
        R, pivots, rank = aug.rref()
        if rank < n or pivots[n - 1] != n - 1:
            raise SingularMatrix("matrix is singular")
        return Matrix([r[n:] for r in R.rows], self.p)

    def det(self):
        """Determinant by elimination."""
        m, n = self.shape
        if m != n:
            raise DimensionMismatch("determinant needs a square matrix")
        p = self.p
        a = [list(r) for r in self.rows]
        d = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i][c]), None)
            if piv is None:
                return 0
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                d = -d
            d = d * a[c][c] % p
            inv = fp_inv(a[c][c], p)
            for i in range(c + 1, n):
                if a[i][c]:
                    f = a[i][c] * inv % p
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
        return d % p

    def vstack(self, other):
        if self.p != other.p or self.shape[1] != other.shape[1]:
            raise DimensionMismatch("column counts differ")
        return Matrix(self.rows + other.rows, self.p)

    def hstack(self, other):
        if self.p != other.p or self.shape[0] != other.shape[0]:
            raise DimensionMismatch("row counts differ")
        return Matrix([r + s for r, s in zip(self.rows, other.rows)], self.p)

    def select_columns(self, idx):
        return Matrix([[r[j] for j in idx] for r in self.rows], self.p)


def row_space_equal(a, b):
    if a.shape[1] != b.shape[1] or a.p != b.p:
        raise DimensionMismatch("row spaces live in different ambient spaces")
    return a.row_basis() == b.row_basis()


def in_row_space(m, v):
    """True iff ``v`` lies in the row space of ``m`` (rank test on [m; v])."""
    v = tuple(v)
    if len(v) != m.shape[1]:
        raise DimensionMismatch(f"vector of length {len(v)} for {m.shape[1]} columns")
    return m.vstack(Matrix([v], m.p)).rank() == m.rank()


def solve_in_row_space(m, v):
    """Coefficients c with c @ m = v, or None if v is not in the row space."""
    # solve m^T c = v via elimination on [m^T | v]
    aug = m.T.hstack(Matrix.from_columns([tuple(v)], m.p))
    R, pivots, _ = aug.rref()
    k = m.shape[0]
    if k in pivots:
        return None
    c = [0] * k
    for i, pc in enumerate(pivots):
        c[pc] = R.rows[i][k]
    return tuple(c)
