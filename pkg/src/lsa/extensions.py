"""Extensions of left-symmetric algebras.

An extension 0 -> V -> A~ -> K -> 0 is encoded by bimodule actions
(lambda, rho) of K on V and a bilinear map g: K x K -> V.  Five conditions
decide when the extended product

    (x, a) . (y, b) = (x.y, a.b + lambda_x(b) + rho_y(a) + g(x, y))

is left-symmetric; for trivial V-product they reduce to three.  The
coboundary operators delta1/delta2 give a second cohomology classifying
extensions up to equivalence; everything is flattened to exact rational
linear algebra.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import (
    Algebra,
    Subspace,
    center,
    is_lie_algebra,
    is_two_sided_ideal,
    left_mult,
    multiply,
    quotient_algebra,
    right_mult,
    check_left_symmetric,
    _jacobi_witness,
)
from .linalg import (
    QMatrix,
    Vec,
    column_space_basis,
    det,
    in_span,
    nullspace_basis,
    quotient_basis,
    random_fraction,
    random_invertible,
    solve,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vstack,
    zero_vec,
)


class ExtensionError(ValueError):
    """The extension data violates the left-symmetry conditions."""

    def __init__(self, failed: Sequence[int], report: "KimReport"):
        self.failed = tuple(failed)
        self.report = report
        super().__init__(f"extension conditions failed: {self.failed}")


class CompatibilityError(ValueError):
    """Lie extension data violates a compatibility identity."""


@dataclass(frozen=True)
class BimoduleAction:
    k: Algebra
    v_dim: int
    lam: tuple[QMatrix, ...]
    rho: tuple[QMatrix, ...]

    def __post_init__(self):
        if len(self.lam) != self.k.dim or len(self.rho) != self.k.dim:
            raise ValueError("one lambda/rho matrix per base basis vector")
        for m in (*self.lam, *self.rho):
            if m.shape != (self.v_dim, self.v_dim):
                raise ValueError("action matrices must be v_dim x v_dim")

    def lam_of(self, x: Vec) -> QMatrix:
        out = QMatrix.zero(self.v_dim, self.v_dim)
        for i, xi in enumerate(x):
            if xi != 0:
                out = out + self.lam[i].scale(xi)
        return out

    def rho_of(self, x: Vec) -> QMatrix:
        out = QMatrix.zero(self.v_dim, self.v_dim)
        for i, xi in enumerate(x):
            if xi != 0:
                out = out + self.rho[i].scale(xi)
        return out


def trivial_action(k: Algebra, v_dim: int) -> BimoduleAction:
    z = QMatrix.zero(v_dim, v_dim)
    return BimoduleAction(k, v_dim, (z,) * k.dim, (z,) * k.dim)


@dataclass(frozen=True)
class Cocycle2:
    """Bilinear map K x K -> V as values[i][j] = g(e_i, e_j)."""

    values: tuple[tuple[Vec, ...], ...]

    @classmethod
    def zero(cls, k_dim: int, v_dim: int) -> "Cocycle2":
        row = tuple(zero_vec(v_dim) for _ in range(k_dim))
        return cls(tuple(row for _ in range(k_dim)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Sequence]]) -> "Cocycle2":
        return cls(
            tuple(tuple(tuple(Fraction(x) for x in cell) for cell in row) for row in rows)
        )

    @property
    def k_dim(self) -> int:
        return len(self.values)

    @property
    def v_dim(self) -> int:
        return len(self.values[0][0]) if self.values and self.values[0] else 0

    def of(self, x: Vec, y: Vec) -> Vec:
        out = zero_vec(self.v_dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                out = vec_add(out, vec_scale(xi * yj, self.values[i][j]))
        return out

    def is_zero(self) -> bool:
        return all(vec_is_zero(cell) for row in self.values for cell in row)

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        return Cocycle2(
            tuple(
                tuple(vec_add(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.values, other.values)
            )
        )

    def __sub__(self, other: "Cocycle2") -> "Cocycle2":
        return Cocycle2(
            tuple(
                tuple(vec_sub(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.values, other.values)
            )
        )


@dataclass(frozen=True)
class ExtensionData:
    k: Algebra
    v: Algebra
    action: BimoduleAction
    g: Cocycle2

    def __post_init__(self):
        if self.action.k.dim != self.k.dim or self.action.v_dim != self.v.dim:
            raise ValueError("action shapes do not match K and V")
        if self.g.k_dim != self.k.dim or self.g.v_dim != self.v.dim:
            raise ValueError("cocycle shape does not match K and V")


@dataclass(frozen=True)
class KimReport:
    """Verdicts for the five extension conditions, with failure witnesses.

    Witnesses are (condition, basis indices, lhs, rhs), 1-based.  When the
    kernel product is trivial the simplified conditions (i)-(iii) are
    evaluated too and must agree with conditions 3-5.
    """

    verdicts: tuple[bool, bool, bool, bool, bool]
    witnesses: tuple[tuple, ...]
    simplified: tuple[bool, bool, bool] | None

    @property
    def ok(self) -> bool:
        return all(self.verdicts)

    def failed_conditions(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, v in enumerate(self.verdicts) if not v)


def _k_basis(k: Algebra) -> list[Vec]:
    return [unit_vec(k.dim, i) for i in range(k.dim)]


def delta1(action: BimoduleAction, h: QMatrix) -> Cocycle2:
    """delta1 h (x, y) = rho_y(h(x)) + lambda_x(h(y)) - h(x.y)."""
    k = action.k
    if h.shape != (action.v_dim, k.dim):
        raise ValueError("h must be a v_dim x k_dim matrix (map K -> V)")
    e = _k_basis(k)
    rows = []
    for i in range(k.dim):
        row = []
        for j in range(k.dim):
            hx = h.col(i)
            hy = h.col(j)
            val = vec_add(action.rho[j].apply(hx), action.lam[i].apply(hy))
            val = vec_sub(val, h.apply(multiply(k, e[i], e[j])))
            row.append(val)
        rows.append(tuple(row))
    return Cocycle2(tuple(rows))


def delta2(action: BimoduleAction, g: Cocycle2) -> tuple[tuple[tuple[Vec, ...], ...], ...]:
    """delta2 g (x, y, z) on basis triples, indexed [i][j][k]."""
    k = action.k
    e = _k_basis(k)
    out = []
    for i in range(k.dim):
        plane = []
        for j in range(k.dim):
            row = []
            for l in range(k.dim):
                x, y, z = e[i], e[j], e[l]
                val = g.of(x, multiply(k, y, z))
                val = vec_sub(val, g.of(y, multiply(k, x, z)))
                val = vec_add(val, action.lam[i].apply(g.values[j][l]))
                val = vec_sub(val, action.lam[j].apply(g.values[i][l]))
                bracket = vec_sub(multiply(k, x, y), multiply(k, y, x))
                val = vec_sub(val, g.of(bracket, z))
                omega = vec_sub(g.values[i][j], g.values[j][i])
                val = vec_sub(val, action.rho[l].apply(omega))
                row.append(val)
            plane.append(tuple(row))
        out.append(tuple(plane))
    return tuple(out)


def delta2_is_zero(action: BimoduleAction, g: Cocycle2) -> bool:
    return all(
        vec_is_zero(cell)
        for plane in delta2(action, g)
        for row in plane
        for cell in row
    )


def check_kim_conditions(d: ExtensionData) -> KimReport:
    """Evaluate the five extension conditions on all basis tuples."""
    k, v, action, g = d.k, d.v, d.action, d.g
    ek = _k_basis(k)
    ev = [unit_vec(v.dim, m) for m in range(v.dim)]
    witnesses: list[tuple] = []
    verdicts = [True] * 5

    def fail(cond: int, idx: tuple, lhs, rhs):
        verdicts[cond - 1] = False
        if len(witnesses) < 32:
            witnesses.append((cond, idx, lhs, rhs))

    # 1: lambda_x(a.b) = lambda_x(a).b + a.lambda_x(b) - rho_x(a).b
    for i in range(k.dim):
        for p in range(v.dim):
            for q in range(v.dim):
                a, b = ev[p], ev[q]
                lhs = action.lam[i].apply(multiply(v, a, b))
                rhs = multiply(v, action.lam[i].apply(a), b)
                rhs = vec_add(rhs, multiply(v, a, action.lam[i].apply(b)))
                rhs = vec_sub(rhs, multiply(v, action.rho[i].apply(a), b))
                if lhs != rhs:
                    fail(1, (i + 1, p + 1, q + 1), lhs, rhs)
    # 2: rho_x([a,b]) = a.rho_x(b) - b.rho_x(a)
    for i in range(k.dim):
        for p in range(v.dim):
            for q in range(p + 1, v.dim):
                a, b = ev[p], ev[q]
                br = vec_sub(multiply(v, a, b), multiply(v, b, a))
                lhs = action.rho[i].apply(br)
                rhs = vec_sub(
                    multiply(v, a, action.rho[i].apply(b)),
                    multiply(v, b, action.rho[i].apply(a)),
                )
                if lhs != rhs:
                    fail(2, (i + 1, p + 1, q + 1), lhs, rhs)
    # 3: [lambda_x, lambda_y] - lambda_[x,y] = L_{g(x,y) - g(y,x)}
    for i in range(k.dim):
        for j in range(i + 1, k.dim):
            bracket = vec_sub(multiply(k, ek[i], ek[j]), multiply(k, ek[j], ek[i]))
            lhs = action.lam[i] @ action.lam[j] - action.lam[j] @ action.lam[i]
            lhs = lhs - action.lam_of(bracket)
            omega = vec_sub(g.values[i][j], g.values[j][i])
            rhs = left_mult(v, omega)
            if lhs != rhs:
                fail(3, (i + 1, j + 1), lhs.rows, rhs.rows)
    # 4: [lambda_x, rho_y] + rho_y rho_x - rho_{x.y} = R_{g(x,y)}
    for i in range(k.dim):
        for j in range(k.dim):
            lhs = action.lam[i] @ action.rho[j] - action.rho[j] @ action.lam[i]
            lhs = lhs + action.rho[j] @ action.rho[i]
            lhs = lhs - action.rho_of(multiply(k, ek[i], ek[j]))
            rhs = right_mult(v, g.values[i][j])
            if lhs != rhs:
                fail(4, (i + 1, j + 1), lhs.rows, rhs.rows)
    # 5: delta2 g = 0
    d2 = delta2(d.action, g)
    for i, j, l in itertools.product(range(k.dim), repeat=3):
        if not vec_is_zero(d2[i][j][l]):
            fail(5, (i + 1, j + 1, l + 1), d2[i][j][l], zero_vec(v.dim))

    simplified = None
    if all(vec_is_zero(multiply(v, a, b)) for a in ev for b in ev):
        s1 = all(
            (action.lam[i] @ action.lam[j] - action.lam[j] @ action.lam[i])
            == action.lam_of(vec_sub(multiply(k, ek[i], ek[j]), multiply(k, ek[j], ek[i])))
            for i in range(k.dim)
            for j in range(i + 1, k.dim)
        )
        s2 = all(
            (action.lam[i] @ action.rho[j] - action.rho[j] @ action.lam[i])
            == action.rho_of(multiply(k, ek[i], ek[j])) - action.rho[j] @ action.rho[i]
            for i in range(k.dim)
            for j in range(k.dim)
        )
        s3 = delta2_is_zero(action, g)
        simplified = (s1, s2, s3)
        trivial_ok = verdicts[0] and verdicts[1]
        if not trivial_ok or (s1, s2, s3) != tuple(verdicts[2:]):
            raise RuntimeError("simplified conditions disagree with the general ones; internal bug")
    return KimReport(tuple(verdicts), tuple(witnesses), simplified)


def build_extension(d: ExtensionData) -> Algebra:
    """Extended algebra on K + V coordinates (K block first).

    Refuses (with the failing condition indices) unless all five conditions
    hold; asserts that the result is left-symmetric, that the V block is a
    two-sided ideal, and that the induced quotient product equals K's.
    """
    report = check_kim_conditions(d)
    if not report.ok:
        raise ExtensionError(report.failed_conditions(), report)
    k, v, action, g = d.k, d.v, d.action, d.g
    n = k.dim + v.dim
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(k.dim):
        for j in range(k.dim):
            for m in range(k.dim):
                c[i][j][m] = k.c[i][j][m]
            for m in range(v.dim):
                c[i][j][k.dim + m] = g.values[i][j][m]
    for i in range(k.dim):
        for jm in range(v.dim):
            col = action.lam[i].col(jm)
            for m in range(v.dim):
                c[i][k.dim + jm][k.dim + m] = col[m]
    for im in range(v.dim):
        for j in range(k.dim):
            col = action.rho[j].col(im)
            for m in range(v.dim):
                c[k.dim + im][j][k.dim + m] = col[m]
    for im in range(v.dim):
        for jm in range(v.dim):
            for m in range(v.dim):
                c[k.dim + im][k.dim + jm][k.dim + m] = v.c[im][jm][m]
    ext = Algebra(n, tuple(tuple(tuple(x) for x in plane) for plane in c),
                  name=f"ext({k.name or 'K'},{v.name or 'V'})")
    assert check_left_symmetric(ext).ok, "extension product is not left-symmetric"
    v_block = Subspace.from_spanning(n, [unit_vec(n, k.dim + m) for m in range(v.dim)])
    assert is_two_sided_ideal(ext, v_block), "V block is not a two-sided ideal"
    quot = quotient_algebra(ext, v_block)
    assert quot.c == k.c, "induced quotient product differs from K"
    return ext


def _flat_index(k_dim: int, v_dim: int, i: int, j: int, m: int) -> int:
    return (i * k_dim + j) * v_dim + m


def _flatten_cocycle(g: Cocycle2) -> Vec:
    out = []
    for row in g.values:
        for cell in row:
            out.extend(cell)
    return tuple(out)


def _unflatten_cocycle(flat: Vec, k_dim: int, v_dim: int) -> Cocycle2:
    rows = []
    for i in range(k_dim):
        row = []
        for j in range(k_dim):
            base = (i * k_dim + j) * v_dim
            row.append(tuple(flat[base: base + v_dim]))
        rows.append(tuple(row))
    return Cocycle2(tuple(rows))


@dataclass(frozen=True)
class H2Result:
    dim_h2: int
    dim_z2: int
    dim_b2: int
    representatives: tuple[Cocycle2, ...]
    z2_basis: tuple[Cocycle2, ...]
    b2_basis: tuple[Cocycle2, ...]


def h2(action: BimoduleAction) -> H2Result:
    """Second cohomology for (lambda, rho): Z2 = ker delta2, B2 = im delta1.

    Cocycles flatten to vectors indexed (i*k_dim + j)*v_dim + m, so both
    spaces reduce to one exact kernel and one exact column space.
    """
    k_dim, v_dim = action.k.dim, action.v_dim
    n2 = k_dim * k_dim * v_dim
    d2_cols = []
    for flat_idx in range(n2):
        unit = [Fraction(0)] * n2
        unit[flat_idx] = Fraction(1)
        gc = _unflatten_cocycle(tuple(unit), k_dim, v_dim)
        image = delta2(action, gc)
        col = []
        for plane in image:
            for row in plane:
                for cell in row:
                    col.extend(cell)
        d2_cols.append(tuple(col))
    d2_matrix = QMatrix.from_cols(d2_cols)
    z2 = nullspace_basis(d2_matrix)

    n1 = v_dim * k_dim
    d1_cols = []
    for flat_idx in range(n1):
        h_rows = [[Fraction(0)] * k_dim for _ in range(v_dim)]
        h_rows[flat_idx % v_dim][flat_idx // v_dim] = Fraction(1)
        image = delta1(action, QMatrix(h_rows))
        d1_cols.append(_flatten_cocycle(image))
    b2 = column_space_basis(QMatrix.from_cols(d1_cols))
    for b in b2:
        assert in_span(b, z2), "delta2 . delta1 != 0; internal bug"
    reps = quotient_basis(z2, b2)
    return H2Result(
        dim_h2=len(z2) - len(b2),
        dim_z2=len(z2),
        dim_b2=len(b2),
        representatives=tuple(_unflatten_cocycle(r, k_dim, v_dim) for r in reps),
        z2_basis=tuple(_unflatten_cocycle(z, k_dim, v_dim) for z in z2),
        b2_basis=tuple(_unflatten_cocycle(b, k_dim, v_dim) for b in b2),
    )


def i_g(d: ExtensionData) -> Subspace:
    """I_[g] = {x in K : x.y = y.x = 0 and g(x, y) = g(y, x) = 0 for all y}."""
    k, g = d.k, d.g
    e = _k_basis(k)
    blocks = []
    for j in range(k.dim):
        blocks.append(right_mult(k, e[j]))
        blocks.append(left_mult(k, e[j]))
        blocks.append(QMatrix.from_cols([g.values[i][j] for i in range(k.dim)]))
        blocks.append(QMatrix.from_cols([g.values[j][i] for i in range(k.dim)]))
    return Subspace.from_spanning(k.dim, nullspace_basis(vstack(blocks)))


def is_exact_extension(d: ExtensionData) -> bool:
    """Exactness (the kernel maps onto the center) is I_[g] = 0."""
    return i_g(d).dim == 0


def is_central_extension(d: ExtensionData) -> bool:
    """Embed V in the built extension and test containment in its center."""
    ext = build_extension(d)
    c = center(ext)
    n = ext.dim
    return all(c.contains(unit_vec(n, d.k.dim + m)) for m in range(d.v.dim))


def verify_iso_witness(a: Algebra, b: Algebra, eta: QMatrix) -> bool:
    """True iff eta is invertible and eta(x .a y) = eta(x) .b eta(y)."""
    if a.dim != b.dim:
        raise ValueError("algebras must have equal dimension")
    if eta.shape != (a.dim, a.dim):
        raise ValueError("witness matrix has wrong shape")
    if det(eta) == 0:
        return False
    e = _k_basis(a)
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = eta.apply(multiply(a, e[i], e[j]))
            rhs = multiply(b, eta.col(i), eta.col(j))
            if lhs != rhs:
                return False
    return True


def act_on_cocycle(k: Algebra, v: Algebra, mu: QMatrix, eta: QMatrix, g: Cocycle2) -> Cocycle2:
    """(mu, eta) . g (x, y) = mu(g(eta(x), eta(y))) for automorphism pairs."""
    if not verify_iso_witness(v, v, mu):
        raise ValueError("mu is not an automorphism of V")
    if not verify_iso_witness(k, k, eta):
        raise ValueError("eta is not an automorphism of K")
    rows = []
    for i in range(k.dim):
        row = []
        for j in range(k.dim):
            row.append(mu.apply(g.of(eta.col(i), eta.col(j))))
        rows.append(tuple(row))
    return Cocycle2(tuple(rows))


def cocycles_cohomologous(action: BimoduleAction, g1: Cocycle2, g2: Cocycle2) -> QMatrix | None:
    """Solve g1 - g2 = delta1 h exactly; returns h or None."""
    k_dim, v_dim = action.k.dim, action.v_dim
    n1 = v_dim * k_dim
    cols = []
    for flat_idx in range(n1):
        h_rows = [[Fraction(0)] * k_dim for _ in range(v_dim)]
        h_rows[flat_idx % v_dim][flat_idx // v_dim] = Fraction(1)
        cols.append(_flatten_cocycle(delta1(action, QMatrix(h_rows))))
    target = _flatten_cocycle(g1 - g2)
    sol = solve(QMatrix.from_cols(cols), target)
    if sol is None:
        return None
    h_rows = [[Fraction(0)] * k_dim for _ in range(v_dim)]
    for flat_idx, val in enumerate(sol):
        h_rows[flat_idx % v_dim][flat_idx // v_dim] = val
    return QMatrix(h_rows)


def in_orbit_sampled(
    k: Algebra,
    v: Algebra,
    action: BimoduleAction,
    g1: Cocycle2,
    g2: Cocycle2,
    mu_sampler: Callable,
    eta_sampler: Callable,
    rng,
    samples: int = 50,
) -> tuple[QMatrix, QMatrix, QMatrix] | None:
    """Search sampled automorphism pairs for (mu, eta) with
    (mu, eta).g1 cohomologous to g2; exact linear solve once the pair is
    fixed.  Returns (mu, eta, h) or None; a None is only sampling evidence.
    """
    for _ in range(samples):
        mu = mu_sampler(rng)
        eta = eta_sampler(rng)
        moved = act_on_cocycle(k, v, mu, eta, g1)
        h = cocycles_cohomologous(action, g2, moved)
        if h is not None:
            return (mu, eta, h)
    return None


@dataclass(frozen=True)
class AutGroup:
    """Closed-form automorphism group of one of the known 2D algebras."""

    kind: str  # "gl2" | "n2" | "square" | "unknown"
    description: str
    algebra: Algebra
    supported: bool

    def sample(self, rng) -> QMatrix:
        if not self.supported:
            raise LookupError("unknown, verification-only mode")
        if self.kind == "gl2":
            m = random_invertible(rng, 2)
        elif self.kind == "n2":
            d = Fraction(0)
            while d == 0:
                d = random_fraction(rng)
            m = QMatrix([[1, 0], [0, d]])
        else:  # square: e2.e2 = e1
            s = Fraction(0)
            while s == 0:
                s = random_fraction(rng)
            q = random_fraction(rng)
            m = QMatrix([[s * s, q], [0, s]])
        assert verify_iso_witness(self.algebra, self.algebra, m)
        return m


def aut_group_dim2(a2: Algebra) -> AutGroup:
    """Automorphisms of the zero product, e2.e2 = e1, and e1.e2 = e2 algebras.

    Anything else is reported as unknown (verification-only mode): sampled
    witnesses can still be checked, but no closed form is stored.
    """
    if a2.dim != 2:
        raise ValueError("aut_group_dim2 requires dimension 2")
    zero = Algebra.from_entries(2, {})
    n2 = Algebra.from_entries(2, {(1, 2, 2): 1})
    square = Algebra.from_entries(2, {(2, 2, 1): 1})
    if a2.c == zero.c:
        return AutGroup("gl2", "all of GL(2)", a2, True)
    if a2.c == n2.c:
        return AutGroup("n2", "diag(1, d), d != 0", a2, True)
    if a2.c == square.c:
        return AutGroup("square", "[[s^2, q], [0, s]], s != 0", a2, True)
    return AutGroup("unknown", "unknown, verification-only mode", a2, False)


@dataclass(frozen=True)
class LieExtensionData:
    g_base: Algebra  # Lie algebra being extended
    a_kernel: Algebra  # Lie algebra kernel
    phi: tuple[QMatrix, ...]  # phi(e_i) in Der(kernel), one per base basis vector
    omega: tuple[tuple[Vec, ...], ...]  # alternating, values in the kernel

    def __post_init__(self):
        if len(self.phi) != self.g_base.dim:
            raise ValueError("one phi matrix per base basis vector")
        for m in self.phi:
            if m.shape != (self.a_kernel.dim, self.a_kernel.dim):
                raise ValueError("phi matrices must act on the kernel")
        n = self.g_base.dim
        if len(self.omega) != n or any(len(r) != n for r in self.omega):
            raise ValueError("omega must be n x n")


def _is_derivation(lie: Algebra, m: QMatrix) -> bool:
    e = _k_basis(lie)
    for i in range(lie.dim):
        for j in range(i + 1, lie.dim):
            lhs = m.apply(multiply(lie, e[i], e[j]))
            rhs = vec_add(
                multiply(lie, m.apply(e[i]), e[j]),
                multiply(lie, e[i], m.apply(e[j])),
            )
            if lhs != rhs:
                return False
    return True


def build_lie_extension(d: LieExtensionData) -> Algebra:
    """Extended Lie bracket ([x,y], [a,b] + phi(x)b - phi(y)a + omega(x,y)).

    Preconditions checked exactly on basis tuples: omega alternating,
    each phi(e_i) a derivation of the kernel, and the two compatibility
    identities; Jacobi is asserted on the result.
    """
    g_base, a_ker, phi, omega = d.g_base, d.a_kernel, d.phi, d.omega
    if not is_lie_algebra(g_base):
        raise ValueError("base is not a Lie algebra")
    if not is_lie_algebra(a_ker):
        raise ValueError("kernel is not a Lie algebra")
    n, m = g_base.dim, a_ker.dim
    for i in range(n):
        for j in range(n):
            if omega[i][j] != tuple(-x for x in omega[j][i]):
                raise CompatibilityError(f"omega is not alternating at {(i + 1, j + 1)}")
    for i, mat in enumerate(phi):
        if not _is_derivation(a_ker, mat):
            raise CompatibilityError(f"phi(e{i + 1}) is not a derivation of the kernel")
    e = _k_basis(g_base)

    def phi_of(x: Vec) -> QMatrix:
        out = QMatrix.zero(m, m)
        for idx, xi in enumerate(x):
            if xi != 0:
                out = out + phi[idx].scale(xi)
        return out

    def omega_of(x: Vec, y: Vec) -> Vec:
        out = zero_vec(m)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj != 0:
                    out = vec_add(out, vec_scale(xi * yj, omega[i][j]))
        return out

    for i in range(n):
        for j in range(i + 1, n):
            bracket = multiply(g_base, e[i], e[j])
            lhs = phi[i] @ phi[j] - phi[j] @ phi[i]
            rhs = phi_of(bracket) + left_mult(a_ker, omega[i][j])
            if lhs != rhs:
                raise CompatibilityError(
                    f"[phi(x), phi(y)] != phi([x,y]) + ad_omega(x,y) at {(i + 1, j + 1)}"
                )
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                x, y, z = e[i], e[j], e[l]
                lhs = omega_of(multiply(g_base, x, y), z)
                lhs = vec_sub(lhs, omega_of(x, multiply(g_base, y, z)))
                lhs = vec_add(lhs, omega_of(y, multiply(g_base, x, z)))
                rhs = phi_of(x).apply(omega_of(y, z))
                rhs = vec_add(rhs, phi_of(y).apply(omega_of(z, x)))
                rhs = vec_add(rhs, phi_of(z).apply(omega_of(x, y)))
                if lhs != rhs:
                    raise CompatibilityError(f"omega cocycle identity fails at {(i + 1, j + 1, l + 1)}")

    total = n + m
    c = [[[Fraction(0)] * total for _ in range(total)] for _ in range(total)]
    for i in range(total):
        for j in range(total):
            x_base = e[i] if i < n else zero_vec(n)
            y_base = e[j] if j < n else zero_vec(n)
            a_part = unit_vec(m, i - n) if i >= n else zero_vec(m)
            b_part = unit_vec(m, j - n) if j >= n else zero_vec(m)
            base_bracket = multiply(g_base, x_base, y_base)
            ker = multiply(a_ker, a_part, b_part)
            ker = vec_add(ker, phi_of(x_base).apply(b_part))
            ker = vec_sub(ker, phi_of(y_base).apply(a_part))
            ker = vec_add(ker, omega_of(x_base, y_base))
            for idx in range(n):
                c[i][j][idx] = base_bracket[idx]
            for idx in range(m):
                c[i][j][n + idx] = ker[idx]
    ext = Algebra(total, tuple(tuple(tuple(x) for x in plane) for plane in c),
                  name="lie-ext")
    assert _jacobi_witness(ext) is None, "extended bracket violates Jacobi"
    kernel_block = Subspace.from_spanning(total, [unit_vec(total, n + idx) for idx in range(m)])
    assert is_two_sided_ideal(ext, kernel_block), "kernel block is not a Lie ideal"
    return ext
