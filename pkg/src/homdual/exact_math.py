"""Exact rational scalars and dense rational linear algebra (RREF, kernel)."""

import re
from fractions import Fraction

from .errors import InputError

# The scalar field: arbitrary-precision rationals in canonical form
# (positive denominator, gcd(num, den) = 1). fractions.Fraction already
# guarantees both invariants.
Rational = Fraction

_RAT_RE = re.compile(r"^-?\d+(/-?\d+)?$")


def rat(value):
    """Coerce ints, Fractions and "p/q" strings to an exact Rational.

    Floats are rejected: every scalar in this library is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RAT_RE.match(text):
            raise InputError("not a rational literal 'p' or 'p/q': %r" % (value,))
        num, _, den = text.partition("/")
        if den:
            if int(den) == 0:
                raise InputError("zero denominator in rational literal %r" % (value,))
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    raise InputError("cannot coerce %r to a rational" % (value,))


def rat_str(value):
    """Render a Rational as "p/q", or "p" when the denominator is 1."""
    f = rat(value)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


class Matrix:
    """Immutable dense matrix of Rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        rows = [tuple(rat(x) for x in row) for row in entries]
        if rows:
            width = len(rows[0])
            for row in rows:
                if len(row) != width:
                    raise InputError("ragged matrix rows")
        else:
            if cols is None:
                raise InputError("empty matrix needs an explicit column count")
            width = cols
        if cols is not None and cols != width:
            raise InputError("cols=%d does not match row width %d" % (cols, width))
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def column(cls, vec):
        """Column vector from a list of scalars."""
        return cls([[x] for x in vec], cols=1)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(rat_str(x) for x in row) for row in self.entries
        )
        return "Matrix(%dx%d: %s)" % (self.rows, self.cols, body)

    def row(self, i):
        return list(self.entries[i])

    def col(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def transpose(self):
        return Matrix([self.col(j) for j in range(self.cols)], cols=self.rows)

    def mul(self, other):
        if self.cols != other.rows:
            raise InputError(
                "matrix product shape mismatch: %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        return Matrix(
            [
                [
                    sum(
                        (self.entries[i][t] * other.entries[t][j] for t in range(self.cols)),
                        Fraction(0),
                    )
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ],
            cols=other.cols,
        )

    def apply(self, vec):
        """Matrix times coordinate vector (a list), returning a list."""
        if len(vec) != self.cols:
            raise InputError("vector length %d does not match cols %d" % (len(vec), self.cols))
        return [
            sum((self.entries[i][j] * vec[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        ]

    def is_identity(self):
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def is_invertible(self):
        if self.rows != self.cols:
            return False
        _, pivots = mat_rref(self)
        return len(pivots) == self.rows


def mat_rref(m):
    """Reduced row echelon form. Returns (rref matrix, strictly increasing pivot column list).

    Pivot choice is deterministic: the first row (top down) with a nonzero
    entry in the current column.
    """
    work = [list(row) for row in m.entries]
    pivots = []
    pivot_row = 0
    for col in range(m.cols):
        if pivot_row >= m.rows:
            break
        hit = None
        for r in range(pivot_row, m.rows):
            if work[r][col] != 0:
                hit = r
                break
        if hit is None:
            continue
        work[pivot_row], work[hit] = work[hit], work[pivot_row]
        inv = 1 / work[pivot_row][col]
        work[pivot_row] = [x * inv for x in work[pivot_row]]
        for r in range(m.rows):
            if r != pivot_row and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return Matrix(work, cols=m.cols), pivots


def mat_kernel(m):
    """Exact basis of the right null space, one column vector per free column.

    Each free column j yields the vector with 1 at j and -rref[r][j] at the
    pivot column of row r; basis vectors are ordered by increasing j.
    """
    red, pivots = mat_rref(m)
    pivot_set = set(pivots)
    basis = []
    for j in range(m.cols):
        if j in pivot_set:
            continue
        vec = [Fraction(0)] * m.cols
        vec[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red.entries[r][j]
        basis.append(Matrix.column(vec))
    return basis
