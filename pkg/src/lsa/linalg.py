"""Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` (arbitrary-precision, always reduced,
positive denominator).  Matrices are small and dense; everything here is
exact, with no tolerances anywhere.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]

FractionLike = Fraction | int | str


def frac(value: FractionLike) -> Fraction:
    """Coerce ints, strings like ``"3/2"``, and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def vec(values: Iterable[FractionLike]) -> Vec:
    return tuple(frac(v) for v in values)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, v: Vec) -> Vec:
    return tuple(c * a for a in v)


def vec_is_zero(v: Vec) -> bool:
    return all(a == 0 for a in v)


class QMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[FractionLike]]):
        data = tuple(tuple(frac(v) for v in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", data)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "QMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def diag(cls, values: Iterable[FractionLike]) -> "QMatrix":
        vals = [frac(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, cols: Sequence[Vec]) -> "QMatrix":
        if not cols:
            return cls([])
        n = len(cols[0])
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Vec]) -> "QMatrix":
        return cls(rows)

    def col(self, j: int) -> Vec:
        return tuple(row[j] for row in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, QMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "QMatrix(%s)" % (list(list(map(str, r)) for r in self.rows),)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in row] for row in self.rows])

    def scale(self, c: FractionLike) -> "QMatrix":
        cc = frac(c)
        return QMatrix([[cc * a for a in row] for row in self.rows])

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        ocols = other.ncols
        return QMatrix(
            [
                [
                    sum((self.rows[i][k] * other.rows[k][j] for k in range(self.ncols)),
                        Fraction(0))
                    for j in range(ocols)
                ]
                for i in range(self.nrows)
            ]
        )

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        return tuple(
            sum((row[k] * v[k] for k in range(self.ncols)), Fraction(0))
            for row in self.rows
        )

    def transpose(self) -> "QMatrix":
        return QMatrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace of non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.rows for a in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def _same_shape(self, other: "QMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")


def vstack(mats: Sequence[QMatrix]) -> QMatrix:
    rows: list = []
    for m in mats:
        rows.extend(m.rows)
    return QMatrix(rows)


def commutator(a: QMatrix, b: QMatrix) -> QMatrix:
    return a @ b - b @ a


def rref(m: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the strictly increasing pivot columns."""
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [a / pv for a in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return QMatrix(rows), tuple(pivots)


def rank(m: QMatrix) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: QMatrix) -> list[Vec]:
    """Basis of {v : m v = 0}; one vector per free column of the RREF."""
    red, pivots = rref(m)
    ncols = m.ncols
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis: list[Vec] = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red.rows[r][fc]
        basis.append(tuple(v))
    return basis


def solve(m: QMatrix, b: Vec) -> Vec | None:
    """One particular solution of m x = b, or None if inconsistent."""
    if len(b) != m.nrows:
        raise ValueError("shape mismatch in solve")
    aug = QMatrix([list(row) + [b[i]] for i, row in enumerate(m.rows)])
    red, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    x = [Fraction(0)] * m.ncols
    for r, pc in enumerate(pivots):
        x[pc] = red.rows[r][m.ncols]
    return tuple(x)


def inverse(m: QMatrix) -> QMatrix:
    if not m.is_square():
        raise ValueError("inverse of non-square matrix")
    n = m.nrows
    aug = QMatrix([list(m.rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)])
    red, pivots = rref(aug)
    if tuple(pivots[:n]) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return QMatrix([row[n:] for row in red.rows])


def column_space_basis(m: QMatrix) -> list[Vec]:
    """Canonical (row-echelon) basis of the column space."""
    red, _ = rref(m.transpose())
    return [row for row in red.rows if not vec_is_zero(row)]


def in_span(v: Vec, basis: Sequence[Vec]) -> bool:
    if not basis:
        return vec_is_zero(v)
    m = QMatrix.from_rows(list(basis))
    stacked = QMatrix.from_rows(list(basis) + [v])
    return rank(stacked) == rank(m)


def span_dim(vectors: Sequence[Vec]) -> int:
    if not vectors:
        return 0
    return rank(QMatrix.from_rows(list(vectors)))


def quotient_basis(ambient: Sequence[Vec], sub: Sequence[Vec]) -> list[Vec]:
    """Vectors from ``ambient`` extending ``sub`` to a basis of span(ambient).

    Raises ValueError if span(sub) is not contained in span(ambient).
    """
    for v in sub:
        if not in_span(v, ambient):
            raise ValueError("sub is not contained in the ambient span")
    current = [v for v in sub if not vec_is_zero(v)]
    current_rank = span_dim(current)
    reps: list[Vec] = []
    for v in ambient:
        cand = current + [v]
        r = span_dim(cand)
        if r > current_rank:
            reps.append(v)
            current = cand
            current_rank = r
    return reps


def char_poly(m: QMatrix) -> list[Fraction]:
    """Monic characteristic polynomial coefficients, highest degree first.

    Faddeev-LeVerrier: M1 = A, c1 = -tr M1, M(k) = A (M(k-1) + c(k-1) I),
    ck = -tr(Mk)/k.  Division-light and exact over the rationals.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of non-square matrix")
    n = m.nrows
    coeffs = [Fraction(1)]
    eye = QMatrix.identity(n)
    mk = m
    for k in range(1, n + 1):
        if k > 1:
            mk = m @ (mk + eye.scale(coeffs[-1]))
        coeffs.append(-mk.trace() / k)
    return coeffs


def det(m: QMatrix) -> Fraction:
    n = m.nrows
    if n == 0:
        return Fraction(1)
    cp = char_poly(m)
    return cp[-1] * (-1) ** n


def is_nilpotent(m: QMatrix) -> bool:
    """True iff char_poly(m) = lambda^n, i.e. m^n = 0."""
    return all(c == 0 for c in char_poly(m)[1:])


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.add(d)
            out.add(n // d)
    return sorted(out)


def rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Distinct rational roots of the polynomial (coefficients highest first)."""
    cs = [frac(c) for c in coeffs]
    while cs and cs[0] == 0:
        cs = cs[1:]
    if not cs:
        return []
    roots: set[Fraction] = set()
    while cs[-1] == 0:
        roots.add(Fraction(0))
        cs = cs[:-1]
        if len(cs) == 1:
            return sorted(roots)
    denom_lcm = math.lcm(*(c.denominator for c in cs))
    ints = [int(c * denom_lcm) for c in cs]
    lead, const = ints[0], ints[-1]
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                acc = Fraction(0)
                for c in cs:
                    acc = acc * cand + c
                if acc == 0:
                    roots.add(cand)
    return sorted(roots)


def sqrt_fraction(f: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if f < 0:
        return None
    ns = math.isqrt(f.numerator)
    ds = math.isqrt(f.denominator)
    if ns * ns == f.numerator and ds * ds == f.denominator:
        return Fraction(ns, ds)
    return None


def eval_poly(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def random_fraction(rng, max_num: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_matrix(rng, nrows: int, ncols: int, max_num: int = 3, max_den: int = 2) -> QMatrix:
    return QMatrix(
        [[random_fraction(rng, max_num, max_den) for _ in range(ncols)] for _ in range(nrows)]
    )


def random_invertible(rng, n: int, max_num: int = 3, max_den: int = 2) -> QMatrix:
    while True:
        m = random_matrix(rng, n, n, max_num, max_den)
        if det(m) != 0:
            return m


def symmetric_signature(s: QMatrix) -> tuple[int, int, int]:
    """Signature (positive, negative, zero) of a rational symmetric matrix.

    Lagrange diagonalization by congruence; exact.
    """
    if not s.is_square():
        raise ValueError("signature of non-square matrix")
    n = s.nrows
    a = [[s.rows[i][j] for j in range(n)] for i in range(n)]
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(n)):
        raise ValueError("matrix is not symmetric")
    pos = neg = zero = 0
    idx = list(range(n))
    while idx:
        i0 = idx[0]
        pivot = None
        for i in idx:
            if a[i][i] != 0:
                pivot = i
                break
        if pivot is None:
            # all diagonal entries zero; create one via a congruence move
            off = None
            for i in idx:
                for j in idx:
                    if i != j and a[i][j] != 0:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                zero += len(idx)
                break
            i, j = off
            # row/col operation: e_i <- e_i + e_j makes a[i][i] = 2 a[i][j]
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            continue
        i = pivot
        d = a[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for j in idx:
            if j == i:
                continue
            factor = a[j][i] / d
            if factor != 0:
                for k in range(n):
                    a[j][k] -= factor * a[i][k]
                for k in range(n):
                    a[k][j] -= factor * a[k][i]
        idx.remove(i)
    return pos, neg, zero


def grid_points(n: int, top: int) -> Iterable[Vec]:
    """Integer grid {0..top}^n as Fraction vectors."""
    for combo in itertools.product(range(top + 1), repeat=n):
        yield tuple(Fraction(c) for c in combo)
