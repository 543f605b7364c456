"""Finite-dimensional algebras as rational structure constants.

An ``Algebra`` stores a tensor c with e_i * e_j = sum_k c[i][j][k] e_k
(0-based internally; all user-facing indices are 1-based).  The same type
carries left-symmetric products and Lie brackets (antisymmetric constants).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (
    FractionLike,
    QMatrix,
    Vec,
    char_poly,
    frac,
    in_span,
    inverse,
    is_nilpotent,
    nullspace_basis,
    quotient_basis,
    rational_roots,
    rref,
    solve,
    sqrt_fraction,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vstack,
)


class NotInScopeError(Exception):
    """The input falls outside the identified structure families."""


Tensor = tuple[tuple[Vec, ...], ...]


@dataclass(frozen=True)
class Algebra:
    dim: int
    c: Tensor
    name: str = ""
    params: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        n = self.dim
        if len(self.c) != n or any(
            len(plane) != n or any(len(v) != n for v in plane) for plane in self.c
        ):
            raise ValueError("structure tensor must have shape dim x dim x dim")

    @classmethod
    def from_entries(
        cls,
        dim: int,
        entries: Mapping[tuple[int, int, int], FractionLike],
        name: str = "",
        params: Mapping[str, FractionLike] | None = None,
    ) -> "Algebra":
        """Build from sparse 1-based entries {(i, j, k): coefficient}."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), value in entries.items():
            if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                raise ValueError(f"index out of range: {(i, j, k)}")
            c[i - 1][j - 1][k - 1] = frac(value)
        tensor = tuple(tuple(tuple(v) for v in plane) for plane in c)
        p = tuple(sorted((k, frac(v)) for k, v in (params or {}).items()))
        return cls(dim, tensor, name, p)

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, FractionLike]],
        name: str = "",
        params: Mapping[str, FractionLike] | None = None,
    ) -> "Algebra":
        """Lie algebra from 1-based brackets {(i, j): {k: coeff}} with i < j."""
        entries: dict[tuple[int, int, int], Fraction] = {}
        for (i, j), val in brackets.items():
            if i >= j:
                raise ValueError("brackets must be given with i < j")
            for k, coeff in val.items():
                entries[(i, j, k)] = frac(coeff)
                entries[(j, i, k)] = -frac(coeff)
        return cls.from_entries(dim, entries, name, params)

    @property
    def params_dict(self) -> dict[str, Fraction]:
        return dict(self.params)

    def entry(self, i: int, j: int, k: int) -> Fraction:
        """1-based structure constant."""
        return self.c[i - 1][j - 1][k - 1]

    def nonzero_products(self) -> list[tuple[int, int, int, Fraction]]:
        """Sparse 1-based listing, sorted."""
        out = []
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            v = self.c[i][j][k]
            if v != 0:
                out.append((i + 1, j + 1, k + 1, v))
        return out


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple[Vec, ...]

    @classmethod
    def from_spanning(cls, ambient_dim: int, vectors: Sequence[Vec]) -> "Subspace":
        """Canonical subspace: reduced-echelon basis of the span."""
        vecs = [v for v in vectors if not vec_is_zero(v)]
        if not vecs:
            return cls(ambient_dim, ())
        red, _ = rref(QMatrix.from_rows(vecs))
        basis = tuple(row for row in red.rows if not vec_is_zero(row))
        return cls(ambient_dim, basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Vec) -> bool:
        return in_span(v, self.basis)


@dataclass(frozen=True)
class LieTag:
    """One of the five solvable non-unimodular 3D families, or out of scope."""

    kind: str  # "G31" | "G32" | "G33" | "G34" | "G35" | "not_in_scope"
    mu: Fraction | float | None = None
    zeta: Fraction | float | None = None
    exact: bool = True
    reason: str = ""

    def __post_init__(self):
        if self.kind == "G34":
            if self.mu is None or not (0 < abs(self.mu) < 1):
                raise ValueError("G34 requires 0 < |mu| < 1")
        if self.kind == "G35":
            if self.zeta is None or not self.zeta > 0:
                raise ValueError("G35 requires zeta > 0")

    def __str__(self) -> str:
        if self.kind == "G34":
            return f"G34(mu={self.mu})"
        if self.kind == "G35":
            return f"G35(zeta={self.zeta})"
        if self.kind == "not_in_scope":
            return f"not_in_scope({self.reason})"
        return self.kind


@dataclass(frozen=True)
class MilnorForm:
    """Adapted form of a solvable non-unimodular 3D Lie algebra.

    ``d`` is the 2x2 matrix of ad(e1) on the trace-form kernel, with e1
    scaled so that trace(d) = 2; det(d) is a complete isomorphism invariant.
    """

    d: QMatrix
    adapted_basis: tuple[Vec, Vec, Vec]
    det_d: Fraction


@dataclass(frozen=True)
class IdentityCheck:
    ok: bool
    witness: tuple[int, int, int] | None = None  # 1-based basis indices
    lhs: Vec | None = None
    rhs: Vec | None = None


def multiply(a: Algebra, x: Vec, y: Vec) -> Vec:
    """Bilinear product of coordinate vectors."""
    if len(x) != a.dim or len(y) != a.dim:
        raise ValueError("vector length must equal the algebra dimension")
    out = [Fraction(0)] * a.dim
    for i in range(a.dim):
        if x[i] == 0:
            continue
        for j in range(a.dim):
            if y[j] == 0:
                continue
            coeff = x[i] * y[j]
            row = a.c[i][j]
            for k in range(a.dim):
                if row[k] != 0:
                    out[k] += coeff * row[k]
    return tuple(out)


def left_mult(a: Algebra, x: Vec) -> QMatrix:
    """Matrix of y -> x * y."""
    cols = [multiply(a, x, unit_vec(a.dim, j)) for j in range(a.dim)]
    return QMatrix.from_cols(cols)


def right_mult(a: Algebra, x: Vec) -> QMatrix:
    """Matrix of y -> y * x."""
    cols = [multiply(a, unit_vec(a.dim, j), x) for j in range(a.dim)]
    return QMatrix.from_cols(cols)


def _basis(a: Algebra) -> list[Vec]:
    return [unit_vec(a.dim, i) for i in range(a.dim)]


def check_left_symmetric(a: Algebra) -> IdentityCheck:
    """Decide (x*y)*z - (y*x)*z = x*(y*z) - y*(x*z) on all basis triples.

    Bilinearity makes the basis check complete.  The identity is
    antisymmetric in (x, y), so i < j suffices.
    """
    e = _basis(a)
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            for k in range(a.dim):
                lhs = vec_sub(
                    multiply(a, multiply(a, e[i], e[j]), e[k]),
                    multiply(a, multiply(a, e[j], e[i]), e[k]),
                )
                rhs = vec_sub(
                    multiply(a, e[i], multiply(a, e[j], e[k])),
                    multiply(a, e[j], multiply(a, e[i], e[k])),
                )
                if lhs != rhs:
                    return IdentityCheck(False, (i + 1, j + 1, k + 1), lhs, rhs)
    return IdentityCheck(True)


def lie_algebra_of(a: Algebra) -> Algebra:
    """Commutator brackets [x,y] = x*y - y*x; Jacobi is asserted."""
    n = a.dim
    b = [
        [
            tuple(a.c[i][j][k] - a.c[j][i][k] for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]
    lie = Algebra(n, tuple(tuple(plane) for plane in b), name=f"Lie({a.name})" if a.name else "", params=a.params)
    bad = _jacobi_witness(lie)
    if bad is not None:
        raise ValueError(f"Jacobi identity fails at basis triple {bad}; input is corrupted or not left-symmetric")
    return lie


def _jacobi_witness(lie: Algebra) -> tuple[int, int, int] | None:
    e = _basis(lie)
    for i in range(lie.dim):
        for j in range(i + 1, lie.dim):
            for k in range(j + 1, lie.dim):
                total = vec_add(
                    multiply(lie, multiply(lie, e[i], e[j]), e[k]),
                    vec_add(
                        multiply(lie, multiply(lie, e[j], e[k]), e[i]),
                        multiply(lie, multiply(lie, e[k], e[i]), e[j]),
                    ),
                )
                if not vec_is_zero(total):
                    return (i + 1, j + 1, k + 1)
    return None


def is_lie_algebra(a: Algebra) -> bool:
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if a.c[i][j][k] != -a.c[j][i][k]:
                    return False
    return _jacobi_witness(a) is None


def _require_lie(a: Algebra) -> None:
    if not is_lie_algebra(a):
        raise ValueError("input is not a Lie algebra (antisymmetry or Jacobi fails)")


def is_complete(a: Algebra) -> bool:
    """True iff every right multiplication R_x is nilpotent, for all real x.

    Each coefficient of char_poly(R_x) is a polynomial in the coordinates
    of x of degree at most n in each variable, so vanishing on the integer
    grid {0..n}^n implies identical vanishing; the grid check is exact and
    decides the property.
    """
    n = a.dim
    for point in itertools.product(range(n + 1), repeat=n):
        x = tuple(Fraction(p) for p in point)
        if not is_nilpotent(right_mult(a, x)):
            return False
    return True


def is_novikov(a: Algebra) -> bool:
    """(x*y)*z = (x*z)*y on basis triples, cross-checked via [R_x, R_y] = 0."""
    e = _basis(a)
    by_identity = True
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(j + 1, a.dim):
                lhs = multiply(a, multiply(a, e[i], e[j]), e[k])
                rhs = multiply(a, multiply(a, e[i], e[k]), e[j])
                if lhs != rhs:
                    by_identity = False
                    break
            if not by_identity:
                break
        if not by_identity:
            break
    rs = [right_mult(a, e[i]) for i in range(a.dim)]
    by_commutators = all(
        (rs[i] @ rs[j] - rs[j] @ rs[i]).is_zero()
        for i in range(a.dim)
        for j in range(i + 1, a.dim)
    )
    if by_identity != by_commutators:
        raise RuntimeError("Novikov characterizations disagree; internal bug")
    return by_identity


def is_derivation_algebra(a: Algebra) -> bool:
    """(x*y)*z = (z*y)*x on all basis triples."""
    e = _basis(a)
    for i in range(a.dim):
        for k in range(i + 1, a.dim):
            for j in range(a.dim):
                lhs = multiply(a, multiply(a, e[i], e[j]), e[k])
                rhs = multiply(a, multiply(a, e[k], e[j]), e[i])
                if lhs != rhs:
                    return False
    return True


def satisfies_s(a: Algebra) -> bool:
    """[x,y]*z = 0 on all basis triples."""
    e = _basis(a)
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            br = vec_sub(multiply(a, e[i], e[j]), multiply(a, e[j], e[i]))
            for k in range(a.dim):
                if not vec_is_zero(multiply(a, br, e[k])):
                    return False
    return True


def ndsflags(a: Algebra) -> tuple[bool, bool, bool]:
    return (is_novikov(a), is_derivation_algebra(a), satisfies_s(a))


def flag_witnesses(a: Algebra) -> dict[str, tuple[int, int, int] | str]:
    """For each of N/D/S, a failing basis triple (1-based) or 'all triples pass'."""
    e = _basis(a)
    out: dict[str, tuple[int, int, int] | str] = {}
    novikov = None
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        if multiply(a, multiply(a, e[i], e[j]), e[k]) != multiply(a, multiply(a, e[i], e[k]), e[j]):
            novikov = (i + 1, j + 1, k + 1)
            break
    out["N"] = novikov if novikov else "all triples pass"
    deriv = None
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        if multiply(a, multiply(a, e[i], e[j]), e[k]) != multiply(a, multiply(a, e[k], e[j]), e[i]):
            deriv = (i + 1, j + 1, k + 1)
            break
    out["D"] = deriv if deriv else "all triples pass"
    s_wit = None
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        br = vec_sub(multiply(a, e[i], e[j]), multiply(a, e[j], e[i]))
        if not vec_is_zero(multiply(a, br, e[k])):
            s_wit = (i + 1, j + 1, k + 1)
            break
    out["S"] = s_wit if s_wit else "all triples pass"
    return out


def center(a: Algebra) -> Subspace:
    """{x : x*e_j = e_j*x = 0 for all j}, computed as one exact kernel."""
    e = _basis(a)
    mats = [left_mult(a, e[i]) for i in range(a.dim)] + [right_mult(a, e[i]) for i in range(a.dim)]
    stacked = vstack(mats)
    return Subspace.from_spanning(a.dim, nullspace_basis(stacked))


def is_two_sided_ideal(a: Algebra, w: Subspace) -> bool:
    if w.ambient_dim != a.dim:
        raise ValueError("subspace ambient dimension mismatch")
    e = _basis(a)
    for wv in w.basis:
        for i in range(a.dim):
            if not w.contains(multiply(a, e[i], wv)):
                return False
            if not w.contains(multiply(a, wv, e[i])):
                return False
    return True


def _rational_eigenvalues(m: QMatrix) -> list[Fraction]:
    return rational_roots(char_poly(m))


def _common_eigenspaces(mats: Sequence[QMatrix], n: int) -> list[Subspace]:
    """Nonzero joint eigenspaces over all rational eigenvalue choices."""
    eigs = []
    for m in mats:
        ev = _rational_eigenvalues(m)
        if not ev:
            return []
        eigs.append(ev)
    eye = QMatrix.identity(n)
    spaces = []
    seen = set()
    for combo in itertools.product(*eigs):
        stacked = vstack([m - eye.scale(lam) for m, lam in zip(mats, combo)])
        ns = nullspace_basis(stacked)
        if ns:
            sp = Subspace.from_spanning(n, ns)
            if sp.basis not in seen:
                seen.add(sp.basis)
                spaces.append(sp)
    return spaces


def find_ideals_dim_le3(a: Algebra) -> list[Subspace]:
    """Proper nonzero two-sided ideals with rational defining data (dim <= 3).

    Lines are common eigenvectors of all left/right multiplications
    (rational-root enumeration); 2D ideals come from common eigenvectors of
    the transposes (rational annihilator lines).  Multidimensional joint
    eigenspaces are reported through their reduced-echelon representatives.
    Irrational eigendata is out of reach by design, so an empty answer means
    "no rational ideal found", never "simple".
    """
    if a.dim > 3:
        raise ValueError("ideal search is implemented for dim <= 3 only")
    if a.dim <= 1:
        return []
    e = _basis(a)
    mats = [left_mult(a, x) for x in e] + [right_mult(a, x) for x in e]
    found: list[Subspace] = []
    seen: set = set()
    for sp in _common_eigenspaces(mats, a.dim):
        for v in sp.basis:
            line = Subspace.from_spanning(a.dim, [v])
            if line.basis in seen:
                continue
            seen.add(line.basis)
            if is_two_sided_ideal(a, line):
                found.append(line)
    if a.dim == 3:
        tmats = [m.transpose() for m in mats]
        for sp in _common_eigenspaces(tmats, a.dim):
            for w in sp.basis:
                plane = Subspace.from_spanning(a.dim, nullspace_basis(QMatrix([w])))
                if plane.dim != 2 or plane.basis in seen:
                    continue
                seen.add(plane.basis)
                if is_two_sided_ideal(a, plane):
                    found.append(plane)
    found.sort(key=lambda s: (s.dim, s.basis))
    return found


def adjoint(lie: Algebra, x: Vec) -> QMatrix:
    return left_mult(lie, x)


def is_unimodular(lie: Algebra) -> bool:
    _require_lie(lie)
    e = _basis(lie)
    return all(adjoint(lie, x).trace() == 0 for x in e)


def derived_subspace(lie: Algebra, w: Subspace) -> Subspace:
    products = [
        multiply(lie, u, v)
        for u in w.basis
        for v in w.basis
    ]
    return Subspace.from_spanning(lie.dim, products)


def is_solvable(lie: Algebra) -> bool:
    _require_lie(lie)
    current = Subspace.from_spanning(lie.dim, _basis(lie))
    while current.dim > 0:
        nxt = derived_subspace(lie, current)
        if nxt.dim == current.dim:
            return False
        current = nxt
    return True


def milnor_normal_form(lie: Algebra) -> MilnorForm:
    """Adapted basis (e1, u1, u2) with U = ker(x -> tr ad_x) abelian and
    tr(ad_e1 | U) = 2; returns ad_e1 restricted to U and its determinant.

    e1 is the first standard basis vector outside U, then rescaled; the
    echelon basis of U makes the construction deterministic.
    """
    _require_lie(lie)
    if lie.dim != 3:
        raise ValueError("Milnor normal form requires dimension 3")
    if not is_solvable(lie):
        raise NotInScopeError("Lie algebra is not solvable")
    e = _basis(lie)
    trace_row = [adjoint(lie, x).trace() for x in e]
    if all(t == 0 for t in trace_row):
        raise NotInScopeError("Lie algebra is unimodular")
    u_space = Subspace.from_spanning(3, nullspace_basis(QMatrix([trace_row])))
    assert u_space.dim == 2
    u1, u2 = u_space.basis
    if not vec_is_zero(multiply(lie, u1, u2)):
        raise NotInScopeError("kernel of the trace form is not abelian")
    e1 = next(x for x in e if not u_space.contains(x))
    tr = adjoint(lie, e1).trace()
    e1 = vec_scale(Fraction(2) / tr, e1)
    ubasis_matrix = QMatrix.from_cols([u1, u2])
    cols = []
    for u in (u1, u2):
        image = multiply(lie, e1, u)
        coords = solve(ubasis_matrix, image)
        if coords is None:
            raise NotInScopeError("trace-form kernel is not ad_e1 invariant")
        cols.append(coords)
    d = QMatrix.from_cols(cols)
    assert d.trace() == 2
    det_d = d.rows[0][0] * d.rows[1][1] - d.rows[0][1] * d.rows[1][0]
    return MilnorForm(d, (e1, u1, u2), det_d)


def identify_lie_algebra(lie: Algebra) -> LieTag:
    """Decide the isomorphism class from det(D) of the Milnor form.

    d = 0 -> G31; d = 1 -> G32 if D = I else G33; d in (0,1) or d < 0 ->
    G34 with 4 mu / (1+mu)^2 = d and |mu| < 1; d > 1 -> G35 with
    zeta = sqrt(d-1).  Parameters of rational-parameter inputs recover
    exactly; otherwise the tag is flagged non-exact.
    """
    try:
        form = milnor_normal_form(lie)
    except NotInScopeError as err:
        return LieTag("not_in_scope", reason=str(err))
    d = form.det_d
    if d == 0:
        return LieTag("G31")
    if d == 1:
        if form.d == QMatrix.identity(2):
            return LieTag("G32")
        return LieTag("G33")
    if d > 1:
        z = sqrt_fraction(d - 1)
        if z is not None:
            return LieTag("G35", zeta=z)
        return LieTag("G35", zeta=float(d - 1) ** 0.5, exact=False)
    # 0 < d < 1 or d < 0: solve d mu^2 + (2d-4) mu + d = 0, pick |mu| < 1
    disc = 1 - d
    s = sqrt_fraction(disc)
    if s is not None:
        for mu in ((2 - d + 2 * s) / d, (2 - d - 2 * s) / d):
            if 0 < abs(mu) < 1:
                return LieTag("G34", mu=mu)
        raise RuntimeError("mu recovery failed; internal bug")
    sf = float(disc) ** 0.5
    df = float(d)
    for muf in ((2 - df + 2 * sf) / df, (2 - df - 2 * sf) / df):
        if 0 < abs(muf) < 1 - 1e-12:
            return LieTag("G34", mu=muf, exact=False)
    raise RuntimeError("mu recovery failed; internal bug")


def conjugated(a: Algebra, p: QMatrix) -> Algebra:
    """Structure constants in the basis f_i = sum_k p[k][i] e_k."""
    if p.shape != (a.dim, a.dim):
        raise ValueError("basis-change matrix has wrong shape")
    p_inv = inverse(p)
    n = a.dim
    cols = [p.col(i) for i in range(n)]
    tensor = []
    for i in range(n):
        plane = []
        for j in range(n):
            prod = multiply(a, cols[i], cols[j])
            plane.append(p_inv.apply(prod))
        tensor.append(tuple(plane))
    return Algebra(n, tuple(tensor), name=a.name, params=a.params)


def restriction_to_ideal(a: Algebra, w: Subspace) -> Algebra:
    """Induced product on an ideal, in the ideal's echelon basis."""
    basis_matrix = QMatrix.from_cols(list(w.basis))
    m = w.dim
    tensor = []
    for i in range(m):
        plane = []
        for j in range(m):
            prod = multiply(a, w.basis[i], w.basis[j])
            coords = solve(basis_matrix, prod)
            if coords is None:
                raise ValueError("subspace is not closed under the product")
            plane.append(coords)
        tensor.append(tuple(plane))
    return Algebra(m, tuple(tensor), name=f"{a.name}|ideal" if a.name else "")


def quotient_algebra(a: Algebra, w: Subspace) -> Algebra:
    """Induced product on A/W for a two-sided ideal W."""
    std = _basis(a)
    reps = quotient_basis(std, list(w.basis))
    full = QMatrix.from_cols(list(w.basis) + reps)
    q = len(reps)
    tensor = []
    for i in range(q):
        plane = []
        for j in range(q):
            prod = multiply(a, reps[i], reps[j])
            coords = solve(full, prod)
            assert coords is not None
            plane.append(tuple(coords[w.dim:]))
        tensor.append(tuple(plane))
    return Algebra(q, tuple(tensor), name=f"{a.name}/ideal" if a.name else "")


def product_span(a: Algebra) -> Subspace:
    """Span of all products x*y."""
    e = _basis(a)
    return Subspace.from_spanning(
        a.dim, [multiply(a, x, y) for x in e for y in e]
    )
