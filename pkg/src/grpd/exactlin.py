"""Exact linear algebra over Q and over prime fields F_p.

Everything here is exact: rationals are arbitrary-precision fractions,
residues are reduced mod p.  Matrices are dense, subspaces are kept in
reduced row-echelon form so that equal subspaces have equal bases.
"""

from fractions import Fraction

from .errors import DimensionError

_MAX_PRIME = 2**31


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class ModP:
    """Residue class mod a prime p, stored in [0, p)."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def __add__(self, other):
        return ModP(self.val + other.val, self.p)

    def __sub__(self, other):
        return ModP(self.val - other.val, self.p)

    def __mul__(self, other):
        return ModP(self.val * other.val, self.p)

    def __truediv__(self, other):
        if other.val == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return ModP(self.val * pow(other.val, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.val, self.p)

    def __eq__(self, other):
        return isinstance(other, ModP) and self.val == other.val and self.p == other.p

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val}"


class Field:
    """Coefficient field: characteristic 0 means Q, otherwise a prime field F_p."""

    def __init__(self, characteristic=0):
        if characteristic != 0:
            if characteristic >= _MAX_PRIME or not _is_prime(characteristic):
                raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {characteristic}")
        self.char = characteristic
        self.zero = self(0)
        self.one = self(1)

    def __call__(self, x):
        """Coerce an int, string, Fraction or ModP into a field element."""
        if self.char == 0:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, ModP):
            if x.p != self.char:
                raise ValueError(f"residue mod {x.p} used in F_{self.char}")
            return x
        if isinstance(x, str):
            x = int(x)
        if isinstance(x, int):
            return ModP(x, self.char)
        raise TypeError(f"cannot coerce {x!r} into F_{self.char}")

    def fmt(self, x):
        """JSON form of a field element: string over Q, int over F_p."""
        if self.char == 0:
            return str(x)
        return x.val

    def vec(self, entries):
        return [self(e) for e in entries]

    def zero_vec(self, n):
        return [self.zero] * n

    def unit_vec(self, n, i):
        v = [self.zero] * n
        v[i] = self.one
        return v

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "Q" if self.char == 0 else f"F_{self.char}"


def vec_add(x, y):
    return [a + b for a, b in zip(x, y)]


def vec_sub(x, y):
    return [a - b for a, b in zip(x, y)]


def vec_scale(c, x):
    return [c * a for a in x]


def vec_is_zero(x):
    return not any(x)


class Matrix:
    """Dense matrix over an exact field; immutable by convention."""

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        for r in self.rows:
            if len(r) != self.ncols:
                raise DimensionError("ragged matrix rows")

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field, cols, nrows=None):
        if not cols:
            return cls(field, [[] for _ in range(nrows or 0)], ncols=0)
        nrows = len(cols[0])
        return cls(field, [[c[i] for c in cols] for i in range(nrows)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def row(self, i):
        return list(self.rows[i])

    def column(self, j):
        return [r[j] for r in self.rows]

    def transpose(self):
        return Matrix(self.field, [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise DimensionError(f"apply: {self.ncols} columns vs vector of length {len(vec)}")
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def mul(self, other):
        if self.ncols != other.nrows:
            raise DimensionError("matrix product shape mismatch")
        zero = self.field.zero
        ot = other.transpose()
        out = []
        for r in self.rows:
            orow = []
            for c in ot.rows:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                orow.append(acc)
            out.append(orow)
        return Matrix(self.field, out)

    def add(self, other):
        if self.shape != other.shape:
            raise DimensionError("matrix sum shape mismatch")
        return Matrix(self.field, [vec_add(a, b) for a, b in zip(self.rows, other.rows)])

    def scale(self, c):
        return Matrix(self.field, [vec_scale(c, r) for r in self.rows])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field})"

    def rref_pivots(self):
        """Reduced row-echelon form together with the pivot column list."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r >= self.nrows:
                break
            src = None
            for i in range(r, self.nrows):
                if rows[i][c]:
                    src = i
                    break
            if src is None:
                continue
            rows[r], rows[src] = rows[src], rows[r]
            inv = self.field.one / rows[r][c]
            if inv != self.field.one:
                rows[r] = [inv * x for x in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.field, rows), pivots


def rref(m):
    """Reduced row-echelon form and rank of a matrix."""
    red, pivots = m.rref_pivots()
    return red, len(pivots)


def solve(m, rhs):
    """One exact solution of m x = rhs, or None if the system is inconsistent."""
    if len(rhs) != m.nrows:
        raise DimensionError(f"solve: {m.nrows} rows vs rhs of length {len(rhs)}")
    aug = Matrix(m.field, [row + [b] for row, b in zip(m.rows, rhs)])
    red, pivots = aug.rref_pivots()
    if m.ncols in pivots:
        return None
    x = m.field.zero_vec(m.ncols)
    for i, p in enumerate(pivots):
        x[p] = red.rows[i][m.ncols]
    return x


def kernel(m):
    """Null space of a matrix, as a canonical Subspace of dimension cols - rank."""
    red, pivots = m.rref_pivots()
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for c in free:
        v = m.field.zero_vec(m.ncols)
        v[c] = m.field.one
        for i, p in enumerate(pivots):
            v[p] = -red.rows[i][c]
        basis.append(v)
    return Subspace.from_vectors(m.field, m.ncols, basis)


class Subspace:
    """Subspace of a coordinate space, stored as an RREF basis.

    Two subspaces are equal exactly when their RREF bases coincide, which
    makes equality of spans decidable by list comparison.
    """

    def __init__(self, field, ambient_dim, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors):
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError("vector length differs from ambient dimension")
        if not vectors:
            return cls(field, ambient_dim, [], [])
        red, pivots = Matrix(field, vectors).rref_pivots()
        basis = [red.rows[i] for i in range(len(pivots))]
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, [], [])

    @classmethod
    def full(cls, field, ambient_dim):
        basis = [field.unit_vec(ambient_dim, i) for i in range(ambient_dim)]
        return cls(field, ambient_dim, basis, list(range(ambient_dim)))

    @property
    def dim(self):
        return len(self.basis)

    def _check_ambient(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def reduce(self, v):
        """Remainder of v after subtracting its component in this subspace."""
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length differs from ambient dimension")
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, v):
        return vec_is_zero(self.reduce(v))

    def coords(self, v):
        """Coordinates of v in the RREF basis; raises if v is outside the span."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return [v[p] for p in self.pivots]

    def expand(self, coords):
        """Ambient vector with the given RREF-basis coordinates."""
        if len(coords) != self.dim:
            raise DimensionError("coordinate length differs from subspace dimension")
        v = self.field.zero_vec(self.ambient_dim)
        for c, row in zip(coords, self.basis):
            if c:
                v = [a + c * b for a, b in zip(v, row)]
        return v

    def sum(self, other):
        self._check_ambient(other)
        return Subspace.from_vectors(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other):
        """Zassenhaus intersection of two spans."""
        self._check_ambient(other)
        n = self.ambient_dim
        z = self.field.zero_vec(n)
        stacked = [row + row for row in self.basis] + [row + z for row in other.basis]
        if not stacked:
            return Subspace.zero(self.field, n)
        red, pivots = Matrix(self.field, stacked).rref_pivots()
        out = []
        for i in range(len(pivots)):
            row = red.rows[i]
            if vec_is_zero(row[:n]):
                out.append(row[n:])
        return Subspace.from_vectors(self.field, n, out)

    def __add__(self, other):
        return self.sum(other)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and all(a == b for ra, rb in zip(self.basis, other.basis) for a, b in zip(ra, rb))
        )

    def __le__(self, other):
        self._check_ambient(other)
        return all(other.contains(v) for v in self.basis)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim} over {self.field})"


def span_sum(a, b):
    return a.sum(b)


def span_intersect(a, b):
    return a.intersect(b)


def contains(a, v):
    return a.contains(v)
