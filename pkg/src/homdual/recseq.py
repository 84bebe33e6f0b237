"""Twisted binary linearly recursive sequences.

A table (f_{m,n}) is annihilated by a monic bivariate polynomial h(x, y)
through one of three bracketings of the twisted product; each bracketing
yields a recursion stencil.  The recursions here come in two flavors: the
plain displays (generate_sequence, weights in q only) and the fully twisted
path (derive_recursion / generate_sequence_derived) obtained by expanding
the defining annihilation condition with the twisted product itself.
annihilation_residual is the independent oracle shared by both.
"""

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

from .errors import InputError
from .exact_math import Matrix, mat_kernel, rat, rat_str
from .qplane import QParams, QPoly, eval_functional, hom_product, qbinom


class CaseId(IntEnum):
    """Position of h(x, y) inside the bracketed annihilation product."""

    MIDDLE = 1  # (x^(m-r) . h) . y^(n-s)
    RIGHT = 2   # (x^(m-r) . y^(n-s)) . h
    LEFT = 3    # (h . x^(m-r)) . y^(n-s)


class BiPoly:
    """Monic bivariate polynomial h(x, y) = x^r y^s - sum h_{i,j} x^(r-i) y^(s-j).

    coeffs maps (i, j) with 0 <= i <= r, 0 <= j <= s and (i, j) != (0, 0)
    to h_{i,j}; omitted entries are zero.
    """

    def __init__(self, r, s, coeffs):
        if r < 0 or s < 0:
            raise InputError("bidegree must be nonnegative")
        self.r = r
        self.s = s
        self.coeffs = {}
        for (i, j), val in coeffs.items():
            if (i, j) == (0, 0):
                raise InputError("coefficient (0, 0) would break monicity")
            if not (0 <= i <= r and 0 <= j <= s):
                raise InputError("coefficient (%d, %d) outside the (r, s) grid" % (i, j))
            val = rat(val)
            if val != 0:
                self.coeffs[(i, j)] = val

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and (self.r, self.s) == (other.r, other.s)
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        body = " ".join(
            "h[%d,%d]=%s" % (i, j, rat_str(c)) for (i, j), c in sorted(self.coeffs.items())
        )
        return "BiPoly(r=%d, s=%d%s)" % (self.r, self.s, (" " + body) if body else "")

    def as_qpoly(self, params):
        terms = {(self.r, self.s): Fraction(1)}
        for (i, j), val in self.coeffs.items():
            terms[(self.r - i, self.s - j)] = terms.get((self.r - i, self.s - j), Fraction(0)) - val
        return QPoly(params, terms)


class BiSequence:
    """Fully populated rational table f_{m,n} for 0 <= m <= M, 0 <= n <= N."""

    def __init__(self, M, N, grid):
        if M < 0 or N < 0:
            raise InputError("table bounds must be nonnegative")
        if len(grid) != M + 1:
            raise InputError("table must have M+1 rows")
        rows = []
        for m, row in enumerate(grid):
            if len(row) != N + 1:
                raise InputError("table row %d must have N+1 entries" % m)
            rows.append(tuple(rat(v) for v in row))
        self.M = M
        self.N = N
        self.grid = tuple(rows)

    @classmethod
    def from_function(cls, fn, M, N):
        return cls(M, N, [[fn(m, n) for n in range(N + 1)] for m in range(M + 1)])

    @classmethod
    def constant(cls, value, M, N):
        value = rat(value)
        return cls.from_function(lambda m, n: value, M, N)

    def entry(self, m, n):
        if not (0 <= m <= self.M and 0 <= n <= self.N):
            raise InputError("entry (%d, %d) outside table bounds" % (m, n))
        return self.grid[m][n]

    def __eq__(self, other):
        return (
            isinstance(other, BiSequence)
            and (self.M, self.N) == (other.M, other.N)
            and self.grid == other.grid
        )

    def __repr__(self):
        return "BiSequence(M=%d, N=%d)" % (self.M, self.N)


@dataclass(frozen=True)
class RecursionStencil:
    """Asserted relation f_{m,n} = sum coeffs[(i,j)] f_{m-i,n-j} at a stated cell."""

    m: int
    n: int
    coeffs: tuple  # sorted ((i, j), value) pairs

    def coeff(self, i, j):
        for (a, b), val in self.coeffs:
            if (a, b) == (i, j):
                return val
        return Fraction(0)

    def as_dict(self):
        return {key: val for key, val in self.coeffs}

    def apply(self, table):
        """Predicted value at (m, n) from earlier table entries."""
        total = Fraction(0)
        for (i, j), val in self.coeffs:
            total += val * table.entry(self.m - i, self.n - j)
        return total


def _stencil(m, n, mapping):
    pairs = tuple(sorted((key, val) for key, val in mapping.items() if val != 0))
    return RecursionStencil(m, n, pairs)


def _case_weight(case, q, i, j, m, n, r, s):
    case = CaseId(case)
    if case is CaseId.MIDDLE:
        return Fraction(1)
    if case is CaseId.RIGHT:
        return q ** (-i * (n - s))
    return q ** (-j * (m - r))


def _boundary_value(boundary, m, n):
    if isinstance(boundary, dict):
        if (m, n) not in boundary:
            raise InputError("missing boundary cell (%d, %d)" % (m, n))
        return rat(boundary[(m, n)])
    if isinstance(boundary, BiSequence):
        return boundary.entry(m, n)
    try:
        value = boundary[m][n]
    except (IndexError, TypeError):
        raise InputError("missing boundary cell (%d, %d)" % (m, n))
    if value is None:
        raise InputError("missing boundary cell (%d, %d)" % (m, n))
    return rat(value)


def _check_boundary_keys(boundary, r, s, M, N):
    if isinstance(boundary, dict):
        for (m, n) in boundary:
            if not (0 <= m <= M and 0 <= n <= N):
                raise InputError("boundary cell (%d, %d) outside table bounds" % (m, n))
            if m >= r and n >= s:
                raise InputError("boundary value given for interior cell (%d, %d)" % (m, n))


def generate_sequence(h, case, q, boundary, M, N):
    """Fill a table from boundary values using the plain case recursion.

    The recursion weight on h_{i,j} is 1 for the middle bracketing,
    q^(-i(n-s)) for the right one, q^(-j(m-r)) for the left one.  The
    boundary must supply every cell with m < r or n < s.
    """
    q = rat(q)
    if q == 0:
        raise InputError("q must be nonzero")
    if M < h.r or N < h.s:
        raise InputError("table bounds must reach the leading bidegree")
    _check_boundary_keys(boundary, h.r, h.s, M, N)
    grid = [[None] * (N + 1) for _ in range(M + 1)]
    for m in range(M + 1):
        for n in range(N + 1):
            if m < h.r or n < h.s:
                grid[m][n] = _boundary_value(boundary, m, n)
            else:
                total = Fraction(0)
                for (i, j), val in h.coeffs.items():
                    weight = _case_weight(case, q, i, j, m, n, h.r, h.s)
                    total += weight * val * grid[m - i][n - j]
                grid[m][n] = total
    return BiSequence(M, N, grid)


def _case_expression(h, case, m, n, params):
    """The bracketed twisted product whose vanishing defines the recursion."""
    case = CaseId(case)
    if m < h.r or n < h.s:
        raise InputError("need m >= r and n >= s, got (%d, %d)" % (m, n))
    hp = h.as_qpoly(params)
    xm = QPoly.monomial(params, m - h.r, 0)
    yn = QPoly.monomial(params, 0, n - h.s)
    if case is CaseId.MIDDLE:
        return hom_product(hom_product(xm, hp), yn)
    if case is CaseId.RIGHT:
        return hom_product(hom_product(xm, yn), hp)
    return hom_product(hom_product(hp, xm), yn)


def annihilation_residual(f, h, case, m, n, q, k):
    """Oracle: evaluate f on the case's bracketed product at (m, n).

    The product is expanded with the twisted quantum-plane arithmetic, so
    every q- and k-factor comes from the definitions; a zero residual
    certifies the recursion at that cell.
    """
    expr = _case_expression(h, case, m, n, QParams(q, k))
    return eval_functional(f, expr)


def derive_recursion(h, case, m, n, q, k):
    """Recursion stencil from the annihilation condition at general k.

    Expands the case's bracketed product and divides by the coefficient of
    x^m y^n (a nonzero monomial in q and k).  At k = 1 this reproduces the
    plain case weights.
    """
    expr = _case_expression(h, case, m, n, QParams(q, k))
    lead = expr.terms.get((m, n))
    if lead is None:
        raise InputError("leading coefficient vanished; not a monic annihilation")
    mapping = {}
    for (a, b), coeff in expr.terms.items():
        if (a, b) == (m, n):
            continue
        mapping[(m - a, n - b)] = -coeff / lead
    return _stencil(m, n, mapping)


def generate_sequence_derived(h, case, q, k, boundary, M, N):
    """Fill a table with the fully twisted stencil of derive_recursion."""
    params = QParams(q, k)
    if M < h.r or N < h.s:
        raise InputError("table bounds must reach the leading bidegree")
    _check_boundary_keys(boundary, h.r, h.s, M, N)
    grid = [[None] * (N + 1) for _ in range(M + 1)]
    for m in range(M + 1):
        for n in range(N + 1):
            if m < h.r or n < h.s:
                grid[m][n] = _boundary_value(boundary, m, n)
            else:
                stencil = derive_recursion(h, case, m, n, params.q, params.k)
                total = Fraction(0)
                for (i, j), val in stencil.coeffs:
                    total += val * grid[m - i][n - j]
                grid[m][n] = total
    return BiSequence(M, N, grid)


def quantum_convolution(f, g, q, M, N):
    """Gaussian-binomial convolution of two tables on an (M, N) window.

    h_{m,n} = sum_{0<=t<=n} binom(n,t)_q f_{m+t,n-t} g_{m,t}; f must extend
    to (M+N, N) and g to (M, N).
    """
    q = rat(q)
    if q == 0:
        raise InputError("q must be nonzero")
    if f.M < M + N or f.N < N:
        raise InputError("first table must extend to (M+N, N) = (%d, %d)" % (M + N, N))
    if g.M < M or g.N < N:
        raise InputError("second table must extend to (M, N) = (%d, %d)" % (M, N))
    grid = []
    for m in range(M + 1):
        row = []
        for n in range(N + 1):
            total = Fraction(0)
            for t in range(n + 1):
                total += qbinom(n, t, q) * f.entry(m + t, n - t) * g.entry(m, t)
            row.append(total)
        grid.append(row)
    return BiSequence(M, N, grid)


def _bidegree_candidates(rmax, smax):
    for total in range(rmax + smax + 1):
        for r in range(min(total, rmax) + 1):
            s = total - r
            if s <= smax:
                yield (r, s)


def minimal_bipoly(f, rmax, smax):
    """Smallest monic annihilator of a table, or None.

    Bidegrees are searched by increasing r+s with ties broken by smaller r.
    For each candidate the annihilation equations over every interior cell
    form an exact linear system solved through the kernel; the first kernel
    basis vector with a nonzero inhomogeneous coordinate gives the
    coefficients.  Returns (r, s, BiPoly).
    """
    if f.M < 2 * rmax or f.N < 2 * smax:
        raise InputError(
            "table too small: need M >= %d and N >= %d" % (2 * rmax, 2 * smax)
        )
    for r, s in _bidegree_candidates(rmax, smax):
        positions = [
            (i, j) for i in range(r + 1) for j in range(s + 1) if (i, j) != (0, 0)
        ]
        rows = []
        for m in range(r, f.M + 1):
            for n in range(s, f.N + 1):
                row = [f.entry(m - i, n - j) for (i, j) in positions]
                row.append(-f.entry(m, n))
                rows.append(row)
        kernel = mat_kernel(Matrix(rows, cols=len(positions) + 1))
        for vec in kernel:
            t = vec[(len(positions), 0)]
            if t != 0:
                coeffs = {
                    positions[idx]: vec[(idx, 0)] / t for idx in range(len(positions))
                }
                return (r, s, BiPoly(r, s, coeffs))
    return None


class UniPoly:
    """Monic univariate annihilator x^d - sum c_i x^(d-i) of a sequence."""

    def __init__(self, degree, coeffs):
        self.degree = degree
        self.coeffs = [rat(c) for c in coeffs]
        if len(self.coeffs) != degree:
            raise InputError("need one coefficient per lower degree")

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return "UniPoly(%s)" % format_unipoly(self)


def format_unipoly(p):
    """Render like "x^2 - x - 1"."""

    def power(e):
        if e == 0:
            return "1"
        if e == 1:
            return "x"
        return "x^%d" % e

    pieces = [power(p.degree)]
    for i, c in enumerate(p.coeffs, start=1):
        if c == 0:
            continue
        mag = abs(c)
        mono = power(p.degree - i)
        if mono == "1":
            body = rat_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = "%s*%s" % (rat_str(mag), mono)
        pieces.append((" - " if c > 0 else " + ") + body)
    return "".join(pieces)


def _min_univariate(seq, dmax):
    """Minimal monic annihilator of a finite sequence up to degree dmax."""
    for d in range(dmax + 1):
        if d == 0:
            if all(v == 0 for v in seq):
                return UniPoly(0, [])
            continue
        rows = []
        for p in range(d, len(seq)):
            rows.append([seq[p - i] for i in range(1, d + 1)] + [-seq[p]])
        if not rows:
            continue
        kernel = mat_kernel(Matrix(rows, cols=d + 1))
        for vec in kernel:
            t = vec[(d, 0)]
            if t != 0:
                return UniPoly(d, [vec[(i, 0)] / t for i in range(d)])
    return None


def row_minimal_polys(f, max_degree=None):
    """Per-row minimal annihilators in each direction.

    Returns (x_polys, y_polys): x_polys[n] annihilates m -> f_{m,n}, and
    y_polys[m] annihilates n -> f_{m,n}.  Rows too short for the requested
    degree bound raise; entries are None when no annihilator exists within
    the bound.
    """
    x_bound = (f.M + 1) // 2 if max_degree is None else max_degree
    y_bound = (f.N + 1) // 2 if max_degree is None else max_degree
    if f.M + 1 < 2 * x_bound or f.N + 1 < 2 * y_bound:
        raise InputError("table too small for degree bound %d" % max_degree)
    x_polys = []
    for n in range(f.N + 1):
        seq = [f.entry(m, n) for m in range(f.M + 1)]
        x_polys.append(_min_univariate(seq, x_bound))
    y_polys = []
    for m in range(f.M + 1):
        seq = [f.entry(m, n) for n in range(f.N + 1)]
        y_polys.append(_min_univariate(seq, y_bound))
    return x_polys, y_polys
