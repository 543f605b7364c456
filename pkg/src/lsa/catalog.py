"""Built-in catalog: the eleven complete left-symmetric structures on
3-dimensional solvable non-unimodular Lie algebras, the five Lie algebra
families they live on, small fixture algebras, extension data that rebuilds
every entry, and the end-to-end verification pipeline.

One transcription note, preserved as evidence rather than silently fixed:
the widely-quoted product listing for D32 reads e2*e2 = e1, which is not
left-symmetric ((e1*e2)*e2 - (e2*e1)*e2 != e1*(e2*e2) - e2*(e1*e2)).  The
form stored here, with e3*e3 = e2 instead, is exactly what the extension
construction produces before relabeling, is left-symmetric and complete,
and matches the claimed invariants.  ``d32_rejected_variant`` keeps the
other form around so the discrepancy is rerunnable.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .algebra import (
    Algebra,
    LieTag,
    Subspace,
    center,
    check_left_symmetric,
    find_ideals_dim_le3,
    flag_witnesses,
    identify_lie_algebra,
    is_complete,
    is_unimodular,
    left_mult,
    lie_algebra_of,
    multiply,
    ndsflags,
    product_span,
    quotient_algebra,
    restriction_to_ideal,
    right_mult,
)
from .extensions import (
    BimoduleAction,
    Cocycle2,
    ExtensionData,
    build_extension,
    check_kim_conditions,
    trivial_action,
    verify_iso_witness,
)
from .linalg import (
    QMatrix,
    frac,
    nullspace_basis,
    solve,
    symmetric_signature,
    unit_vec,
    vec_add,
    vec_scale,
    vstack,
)

F = Fraction


class ParameterError(ValueError):
    """A family parameter violates its constraint."""


ENTRY_NAMES = (
    "N30", "N31", "N32", "N33", "B30", "B31",
    "C31", "C3t", "D31mu", "D32", "E31zeta",
)

LIE_FAMILY_NAMES = ("G31", "G32", "G33", "G34", "G35")

_CONSTRAINTS: dict[str, tuple[str, str, Callable[[Fraction], bool]]] = {
    "C3t": ("t", "t != 1", lambda t: t != 1),
    "D31mu": ("mu", "0 < |mu| < 1", lambda m: 0 < abs(m) < 1),
    "E31zeta": ("zeta", "zeta > 0", lambda z: z > 0),
}


def validate_params(name: str, params: Mapping[str, Fraction]) -> None:
    spec = _CONSTRAINTS.get(name)
    if spec is None:
        if params:
            raise ParameterError(f"{name} takes no parameters")
        return
    pname, text, pred = spec
    if set(params) != {pname}:
        raise ParameterError(f"{name} requires exactly parameter '{pname}'")
    if not pred(frac(params[pname])):
        raise ParameterError(f"constraint violated for {name}: {text}")


def make_lsa(name: str, **params) -> Algebra:
    """Catalog left-symmetric algebra by name, at the given rational parameters."""
    p = {k: frac(v) for k, v in params.items()}
    validate_params(name, p)
    if name == "N30":
        return Algebra.from_entries(3, {(1, 2, 2): 1}, name)
    if name == "N31":
        return Algebra.from_entries(3, {(1, 1, 3): 1, (1, 2, 2): 1}, name)
    if name == "N32":
        return Algebra.from_entries(3, {(1, 2, 2): 1, (3, 3, 1): 1}, name)
    if name == "N33":
        return Algebra.from_entries(3, {(1, 2, 2): 1, (3, 3, 1): -1}, name)
    if name == "B30":
        return Algebra.from_entries(3, {(1, 2, 2): 1, (1, 3, 3): 1}, name)
    if name == "B31":
        return Algebra.from_entries(
            3, {(1, 2, 2): 1, (1, 2, 3): 1, (2, 1, 3): 1, (1, 3, 3): 1}, name
        )
    if name == "C31":
        return Algebra.from_entries(3, {(1, 2, 2): 1, (1, 2, 3): 1, (1, 3, 3): 1}, name)
    if name == "C3t":
        t = p["t"]
        return Algebra.from_entries(
            3,
            {(1, 2, 2): 1, (1, 2, 3): t, (1, 3, 3): 1, (2, 1, 3): t - 1},
            name,
            params=p,
        )
    if name == "D31mu":
        mu = p["mu"]
        return Algebra.from_entries(3, {(1, 2, 2): 1, (1, 3, 3): mu}, name, params=p)
    if name == "D32":
        return Algebra.from_entries(
            3, {(1, 2, 2): 1, (1, 3, 3): F(1, 2), (3, 3, 2): 1}, name
        )
    if name == "E31zeta":
        z = p["zeta"]
        return Algebra.from_entries(
            3,
            {(1, 2, 2): 1, (1, 2, 3): z, (1, 3, 2): -z, (1, 3, 3): 1},
            name,
            params=p,
        )
    raise KeyError(f"unknown catalog entry {name!r}")


def d32_rejected_variant() -> Algebra:
    """The e2*e2 = e1 transcription of D32; fails check_left_symmetric."""
    return Algebra.from_entries(
        3, {(1, 2, 2): 1, (1, 3, 3): F(1, 2), (2, 2, 1): 1}, "D32-rejected"
    )


def make_lie(name: str, **params) -> Algebra:
    """Solvable non-unimodular 3D Lie algebra family by name."""
    p = {k: frac(v) for k, v in params.items()}
    if name == "G31":
        return Algebra.from_brackets(3, {(1, 2): {2: 1}}, name)
    if name == "G32":
        return Algebra.from_brackets(3, {(1, 2): {2: 1}, (1, 3): {3: 1}}, name)
    if name == "G33":
        return Algebra.from_brackets(3, {(1, 2): {2: 1, 3: 1}, (1, 3): {3: 1}}, name)
    if name == "G34":
        mu = p["mu"]
        if not 0 < abs(mu) < 1:
            raise ParameterError("constraint violated for G34: 0 < |mu| < 1")
        return Algebra.from_brackets(3, {(1, 2): {2: 1}, (1, 3): {3: mu}}, name, params=p)
    if name == "G35":
        z = p["zeta"]
        if not z > 0:
            raise ParameterError("constraint violated for G35: zeta > 0")
        return Algebra.from_brackets(
            3, {(1, 2): {2: 1, 3: z}, (1, 3): {2: -z, 3: 1}}, name, params=p
        )
    raise KeyError(f"unknown Lie family {name!r}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    claimed_lie: str  # family name; parametrized families reuse the entry parameter
    claimed_flags: tuple[bool, bool, bool]  # (N, D, S)
    default_params: tuple[dict, ...]
    lie_param_map: Callable[[dict], dict] = field(default=lambda p: {})

    def make(self, params: Mapping[str, Fraction] | None = None) -> Algebra:
        return make_lsa(self.name, **(params or {}))

    def claimed_tag(self, params: Mapping[str, Fraction]) -> LieTag:
        lp = self.lie_param_map(dict(params))
        if self.claimed_lie == "G34":
            return LieTag("G34", mu=frac(lp["mu"]))
        if self.claimed_lie == "G35":
            return LieTag("G35", zeta=frac(lp["zeta"]))
        return LieTag(self.claimed_lie)

    def sample_params(self, rng) -> dict:
        if self.name == "C3t":
            t = F(1)
            while t == 1:
                t = F(rng.randint(-6, 6), rng.randint(1, 4))
            return {"t": t}
        if self.name == "D31mu":
            mu = F(0)
            while mu == 0:
                den = rng.randint(2, 9)
                mu = F(rng.randint(-den + 1, den - 1), den)
            return {"mu": mu}
        if self.name == "E31zeta":
            return {"zeta": F(rng.randint(1, 8), rng.randint(1, 4))}
        return {}


def catalog_lsas() -> list[CatalogEntry]:
    t_ = (True, True, True)
    return [
        CatalogEntry("N30", "G31", t_, ({},)),
        CatalogEntry("N31", "G31", t_, ({},)),
        CatalogEntry("N32", "G31", (False, False, True), ({},)),
        CatalogEntry("N33", "G31", (False, False, True), ({},)),
        CatalogEntry("B30", "G32", t_, ({},)),
        CatalogEntry("B31", "G32", (False, True, False), ({},)),
        CatalogEntry("C31", "G33", t_, ({},)),
        CatalogEntry("C3t", "G33", (False, True, False), ({"t": F(2)},)),
        CatalogEntry(
            "D31mu", "G34", t_, ({"mu": F(1, 2)}, {"mu": F(-1, 2)}),
            lie_param_map=lambda p: {"mu": p["mu"]},
        ),
        CatalogEntry(
            "D32", "G34", (True, False, False), ({},),
            lie_param_map=lambda p: {"mu": F(1, 2)},
        ),
        CatalogEntry(
            "E31zeta", "G35", t_, ({"zeta": F(1)},),
            lie_param_map=lambda p: {"zeta": p["zeta"]},
        ),
    ]


def catalog_lie_algebras() -> list[Algebra]:
    """The five families at default parameters (mu = 1/2, zeta = 1)."""
    return [
        make_lie("G31"),
        make_lie("G32"),
        make_lie("G33"),
        make_lie("G34", mu=F(1, 2)),
        make_lie("G35", zeta=F(1)),
    ]


def fixtures() -> dict[str, Algebra]:
    return {
        "A1_inv": Algebra.from_entries(
            3, {(1, 2, 2): 1, (1, 3, 3): -1, (2, 3, 1): 1, (3, 2, 1): 1}, "A1_inv"
        ),
        "r2_zero": Algebra.from_entries(2, {}, "r2_zero"),
        "r2_square": Algebra.from_entries(2, {(2, 2, 1): 1}, "r2_square"),
        "N2": Algebra.from_entries(2, {(1, 2, 2): 1}, "N2"),
        "aff_R": Algebra.from_brackets(2, {(1, 2): {2: 1}}, "aff_R"),
        "R0": Algebra.from_entries(1, {}, "R0"),
    }


# ---------------------------------------------------------------------------
# Extension data that rebuilds each catalog entry, with explicit isomorphism
# witnesses onto the stored forms.  Witness columns are the target
# coordinates of the extension basis (base block first, then the kernel).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReconstructionCase:
    label: str
    target: str
    target_params: dict
    data: ExtensionData
    witness: QMatrix


def _cocycle_1d_base(e_vec: Sequence) -> Cocycle2:
    return Cocycle2((((tuple(frac(x) for x in e_vec)),),))


def _cocycle_2d_scalar(rows: Sequence[Sequence]) -> Cocycle2:
    return Cocycle2(
        tuple(tuple((frac(x),) for x in row) for row in rows)
    )


def _scalar_action(k: Algebra, lams: Sequence, rhos: Sequence) -> BimoduleAction:
    return BimoduleAction(
        k,
        1,
        tuple(QMatrix([[frac(x)]]) for x in lams),
        tuple(QMatrix([[frac(x)]]) for x in rhos),
    )


def case1_r2_trivial(alpha, s) -> ReconstructionCase:
    """1D kernel over the zero product on R^2; lands on N30."""
    alpha, s = frac(alpha), frac(s)
    if alpha == 0:
        raise ParameterError("case requires alpha != 0")
    k = fixtures()["r2_zero"]
    v = fixtures()["R0"]
    data = ExtensionData(
        k, v, _scalar_action(k, [alpha, 0], [0, 0]), _cocycle_2d_scalar([[0, s], [0, 0]])
    )
    t = s / alpha
    witness = QMatrix.from_cols([(alpha, 0, 0), (0, t, 1), (0, 1, 0)])
    return ReconstructionCase("case1/trivial-R2", "N30", {}, data, witness)


def case1_n2_central(t) -> ReconstructionCase:
    """Central 1D extension of the nonabelian 2D algebra; N30 or N31."""
    t = frac(t)
    k = fixtures()["N2"]
    v = fixtures()["R0"]
    data = ExtensionData(k, v, trivial_action(k, 1), _cocycle_2d_scalar([[t, 0], [0, 0]]))
    if t == 0:
        return ReconstructionCase("case1/N2-central", "N30", {}, data, QMatrix.identity(3))
    witness = QMatrix.diag([1, 1, 1 / t])
    return ReconstructionCase("case1/N2-central", "N31", {}, data, witness)


def case1_n2_identity(t) -> ReconstructionCase:
    """Nontrivial action with symmetric cocycle; B30 or B31."""
    t = frac(t)
    k = fixtures()["N2"]
    v = fixtures()["R0"]
    data = ExtensionData(
        k, v, _scalar_action(k, [1, 0], [0, 0]), _cocycle_2d_scalar([[0, t], [t, 0]])
    )
    if t == 0:
        return ReconstructionCase("case1/N2-identity", "B30", {}, data, QMatrix.identity(3))
    return ReconstructionCase("case1/N2-identity", "B31", {}, data, QMatrix.diag([1, 1, 1 / t]))


def case1_n2_jordan(t) -> ReconstructionCase:
    """Cocycle with antisymmetric part 1; C31 or C3t."""
    t = frac(t)
    k = fixtures()["N2"]
    v = fixtures()["R0"]
    data = ExtensionData(
        k, v, _scalar_action(k, [1, 0], [0, 0]), _cocycle_2d_scalar([[0, t], [t - 1, 0]])
    )
    if t == 1:
        return ReconstructionCase("case1/N2-jordan", "C31", {}, data, QMatrix.identity(3))
    return ReconstructionCase("case1/N2-jordan", "C3t", {"t": t}, data, QMatrix.identity(3))


def case1_n2_diag(mu) -> ReconstructionCase:
    """Scaled action, vanishing cohomology; D31(mu)."""
    mu = frac(mu)
    k = fixtures()["N2"]
    v = fixtures()["R0"]
    data = ExtensionData(
        k, v, _scalar_action(k, [mu, 0], [0, 0]), Cocycle2.zero(2, 1)
    )
    return ReconstructionCase("case1/N2-diag", "D31mu", {"mu": mu}, data, QMatrix.identity(3))


def case2_n2_kernel(b, dd, s, sign=1) -> ReconstructionCase:
    """2D nonabelian kernel under a 1D base; N30, N32, or N33.

    t = sign * s^2 keeps the rescaling witness rational.
    """
    b, dd, s = frac(b), frac(dd), frac(s)
    t = sign * s * s
    k = fixtures()["R0"]
    v = fixtures()["N2"]
    action = BimoduleAction(
        k, 2, (QMatrix([[0, 0], [0, dd]]),), (QMatrix([[0, 0], [-b, 0]]),)
    )
    data = ExtensionData(k, v, action, _cocycle_1d_base((t, -b * dd)))
    if s == 0:
        witness = QMatrix.from_cols([(dd, -b, 1), (1, 0, 0), (0, 1, 0)])
        return ReconstructionCase("case2/N2-kernel", "N30", {}, data, witness)
    witness = QMatrix.from_cols([(dd, -b, s), (1, 0, 0), (0, 1, 0)])
    target = "N32" if sign > 0 else "N33"
    return ReconstructionCase("case2/N2-kernel", target, {}, data, witness)


def _case3_data(k: Algebra, v: Algebra, lam_rows, rho_rows, e_vec) -> ExtensionData:
    action = BimoduleAction(k, 2, (QMatrix(lam_rows),), (QMatrix(rho_rows),))
    return ExtensionData(k, v, action, _cocycle_1d_base(e_vec))


def case3_trivial_diag10(s, t) -> ReconstructionCase:
    """Abelian 2D kernel, projector action; N30 or N31."""
    s, t = frac(s), frac(t)
    k, v = fixtures()["R0"], fixtures()["r2_zero"]
    data = _case3_data(k, v, [[1, 0], [0, 0]], [[0, 0], [0, 0]], (s, t))
    if t == 0:
        witness = QMatrix.from_cols([(1, s, 0), (0, 1, 0), (0, 0, 1)])
        return ReconstructionCase("case3/diag10", "N30", {}, data, witness)
    witness = QMatrix.from_cols([(1, s, 0), (0, 1, 0), (0, 0, 1 / t)])
    return ReconstructionCase("case3/diag10", "N31", {}, data, witness)


def case3_trivial_identity(alpha) -> ReconstructionCase:
    """Unipotent-coupled identity action; B30 or B31."""
    a = frac(alpha)
    k, v = fixtures()["R0"], fixtures()["r2_zero"]
    data = _case3_data(k, v, [[1, a], [0, 1]], [[0, a], [0, 0]], (a * a, a))
    if a == 0:
        return ReconstructionCase("case3/identity", "B30", {}, data, QMatrix.identity(3))
    witness = QMatrix.from_cols([(1, a, -a), (0, 0, 1 / a), (0, 1, 0)])
    return ReconstructionCase("case3/identity", "B31", {}, data, witness)


def case3_trivial_jordan(alpha) -> ReconstructionCase:
    """Jordan-block action; C31 or C3t with t = alpha + 1."""
    a = frac(alpha)
    k, v = fixtures()["R0"], fixtures()["r2_zero"]
    data = _case3_data(k, v, [[1, a + 1], [0, 1]], [[0, a], [0, 0]], (a, a))
    witness = QMatrix.from_cols([(1, a, -2 * a * a), (0, 0, 1), (0, 1, 0)])
    if a == 0:
        return ReconstructionCase("case3/jordan", "C31", {}, data, witness)
    return ReconstructionCase("case3/jordan", "C3t", {"t": a + 1}, data, witness)


def case3_trivial_diagmu(mu) -> ReconstructionCase:
    mu = frac(mu)
    k, v = fixtures()["R0"], fixtures()["r2_zero"]
    data = _case3_data(k, v, [[1, 0], [0, mu]], [[0, 0], [0, 0]], (1, mu))
    witness = QMatrix.from_cols([(1, 1, 1), (0, 1, 0), (0, 0, 1)])
    return ReconstructionCase("case3/diagmu", "D31mu", {"mu": mu}, data, witness)


def case3_trivial_rotation(zeta) -> ReconstructionCase:
    z = frac(zeta)
    k, v = fixtures()["R0"], fixtures()["r2_zero"]
    data = _case3_data(k, v, [[1, -z], [z, 1]], [[0, 0], [0, 0]], (2 * z, z * z - 1))
    witness = QMatrix.from_cols([(1, z, -1), (0, 1, 0), (0, 0, 1)])
    return ReconstructionCase("case3/rotation", "E31zeta", {"zeta": z}, data, witness)


def case3_square_kernel(alpha, t) -> ReconstructionCase:
    """Kernel with e2*e2 = e1; the only surviving action scale is 1/2; D32."""
    a, t = frac(alpha), frac(t)
    k, v = fixtures()["R0"], fixtures()["r2_square"]
    data = _case3_data(k, v, [[1, a], [0, F(1, 2)]], [[0, a], [0, 0]], (t, a / 2))
    witness = QMatrix.from_cols([(1, -(a * a - t), a), (0, 1, 0), (0, 0, 1)])
    return ReconstructionCase("case3/square", "D32", {}, data, witness)


def reconstruction_cases(rng: random.Random | None = None) -> list[ReconstructionCase]:
    """Default plus (optionally) randomized parameter choices for every path."""
    rng = rng or random.Random(0)

    def nz(lo=-4, hi=4, den=3):
        x = F(0)
        while x == 0:
            x = F(rng.randint(lo, hi), rng.randint(1, den))
        return x

    return [
        case1_r2_trivial(nz(), F(rng.randint(-4, 4), rng.randint(1, 3))),
        case1_n2_central(F(0)),
        case1_n2_central(nz()),
        case1_n2_identity(F(0)),
        case1_n2_identity(nz()),
        case1_n2_jordan(F(1)),
        case1_n2_jordan(F(2)),
        case1_n2_jordan(nz() + 1),  # nz() != 0 keeps t != 1
        case1_n2_diag(F(1, 2)),
        case1_n2_diag(F(-1, 2)),
        case2_n2_kernel(nz(), nz(), F(0)),
        case2_n2_kernel(nz(), nz(), nz(), sign=1),
        case2_n2_kernel(nz(), nz(), nz(), sign=-1),
        case3_trivial_diag10(nz(), F(0)),
        case3_trivial_diag10(nz(), nz()),
        case3_trivial_identity(F(0)),
        case3_trivial_identity(nz()),
        case3_trivial_jordan(F(0)),
        case3_trivial_jordan(nz()),
        case3_trivial_diagmu(F(1, 2)),
        case3_trivial_diagmu(F(-1, 2)),
        case3_trivial_rotation(F(1)),
        case3_trivial_rotation(nz(1, 4)),
        case3_square_kernel(nz(), F(rng.randint(-4, 4), rng.randint(1, 3))),
    ]


# ---------------------------------------------------------------------------
# Fingerprints: isomorphism invariants certifying non-isomorphism when they
# differ.  Every component is basis-free; the two refined components (a
# quadratic-form signature and an induced-action ratio) separate the pairs
# the coarse data cannot.
# ---------------------------------------------------------------------------


def _annihilator_dims(a: Algebra) -> tuple[int, int]:
    """(dim {x : x*A = 0}, dim {x : A*x = 0})."""
    e = [unit_vec(a.dim, i) for i in range(a.dim)]
    lmaps = vstack(
        [QMatrix.from_cols([multiply(a, unit_vec(a.dim, i), y) for i in range(a.dim)]) for y in e]
    )
    rmaps = vstack(
        [QMatrix.from_cols([multiply(a, y, unit_vec(a.dim, i)) for i in range(a.dim)]) for y in e]
    )
    return len(nullspace_basis(lmaps)), len(nullspace_basis(rmaps))


def _squares_span(a: Algebra) -> Subspace:
    e = [unit_vec(a.dim, i) for i in range(a.dim)]
    vecs = []
    for i in range(a.dim):
        for j in range(a.dim):
            vecs.append(vec_add(multiply(a, e[i], e[j]), multiply(a, e[j], e[i])))
    return Subspace.from_spanning(a.dim, vecs)


def _pa_ap_span(a: Algebra) -> Subspace:
    p = product_span(a)
    e = [unit_vec(a.dim, i) for i in range(a.dim)]
    vecs = []
    for w in p.basis:
        for x in e:
            vecs.append(multiply(a, w, x))
            vecs.append(multiply(a, x, w))
    return Subspace.from_spanning(a.dim, vecs)


def _square_form_signature(a: Algebra) -> tuple[int, int, int] | None:
    """Signature of v -> [v*v] in P/W, normalized by trace of left actions.

    P = span of products, W = P*A + A*P.  Defined when dim P = 2 and
    dim W = 1, the trace functional p -> tr(L_p) kills W and is nonzero on
    P; the form is then a canonical rational quadratic form on the algebra
    and its signature is an isomorphism invariant.
    """
    p = product_span(a)
    w = _pa_ap_span(a)
    if p.dim != 2 or w.dim != 1:
        return None
    if any(left_mult(a, wv).trace() != 0 for wv in w.basis):
        return None
    candidates = [pv for pv in p.basis if left_mult(a, pv).trace() != 0]
    if not candidates:
        return None
    p_hat = candidates[0]
    tr = left_mult(a, p_hat).trace()
    p_hat = tuple(x / tr for x in p_hat)
    basis_matrix = QMatrix.from_cols([p_hat] + list(w.basis))
    n = a.dim
    e = [unit_vec(n, i) for i in range(n)]
    form = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sym = vec_scale(F(1, 2), vec_add(multiply(a, e[i], e[j]), multiply(a, e[j], e[i])))
            coords = solve(basis_matrix, sym)
            if coords is None:
                return None
            form[i][j] = coords[0]
    return symmetric_signature(QMatrix(form))


def _induced_action_ratio(a: Algebra) -> str | None:
    """Scale-free invariant of the quotient action on P = span of products.

    When P is a 2D ideal with 1D quotient and every p in P acts trivially on
    P, any lift x of the quotient generator induces well-defined operators
    Lb, Rb on P.  The ratio Rb = c (Lb - (tr Lb / 2) I) is independent of
    the lift and scaling; returned as a string ('none' cases excluded).
    """
    p = product_span(a)
    if p.dim != 2 or a.dim - p.dim != 1:
        return None
    basis_matrix = QMatrix.from_cols(list(p.basis))

    def restrict(m: QMatrix) -> QMatrix | None:
        cols = []
        for bv in p.basis:
            coords = solve(basis_matrix, m.apply(bv))
            if coords is None:
                return None
            cols.append(coords)
        return QMatrix.from_cols(cols)

    for pv in p.basis:
        lm, rm = restrict(left_mult(a, pv)), restrict(right_mult(a, pv))
        if lm is None or rm is None or not lm.is_zero() or not rm.is_zero():
            return None
    lift = next(
        (unit_vec(a.dim, i) for i in range(a.dim) if not p.contains(unit_vec(a.dim, i))),
        None,
    )
    if lift is None:
        return None
    lb, rb = restrict(left_mult(a, lift)), restrict(right_mult(a, lift))
    if lb is None or rb is None:
        return None
    m1 = lb - QMatrix.identity(2).scale(lb.trace() / 2)
    m2 = rb
    if m1.is_zero():
        return "inf" if not m2.is_zero() else "0/0"
    flat1 = [x for row in m1.rows for x in row]
    flat2 = [x for row in m2.rows for x in row]
    pivot = next(i for i, x in enumerate(flat1) if x != 0)
    c = flat2[pivot] / flat1[pivot]
    if any(f2 != c * f1 for f1, f2 in zip(flat1, flat2)):
        return None
    return str(c)


def fingerprint(a: Algebra) -> tuple:
    """Isomorphism-invariant tuple; differing fingerprints certify
    non-isomorphism, equal fingerprints certify nothing."""
    if a.dim != 3:
        raise ValueError("fingerprint is defined for dimension 3")
    tag = identify_lie_algebra(lie_algebra_of(a))
    e = [unit_vec(3, i) for i in range(3)]
    l_span = Subspace.from_spanning(
        9, [tuple(x for row in left_mult(a, v).rows for x in row) for v in e]
    ).dim
    r_span = Subspace.from_spanning(
        9, [tuple(x for row in right_mult(a, v).rows for x in row) for v in e]
    ).dim
    return (
        str(tag),
        center(a).dim,
        product_span(a).dim,
        _squares_span(a).dim,
        _pa_ap_span(a).dim,
        _annihilator_dims(a),
        ndsflags(a),
        is_complete(a),
        (l_span, r_span),
        _square_form_signature(a),
        _induced_action_ratio(a),
    )


# ---------------------------------------------------------------------------
# Verification pipeline
# ---------------------------------------------------------------------------


def _tag_matches(computed: LieTag, claimed: LieTag) -> bool:
    if computed.kind != claimed.kind:
        return False
    if computed.kind == "G34":
        return computed.exact and computed.mu == claimed.mu
    if computed.kind == "G35":
        return computed.exact and computed.zeta == claimed.zeta
    return True


def _params_str(params: Mapping[str, Fraction]) -> dict[str, str]:
    return {k: str(v) for k, v in sorted(params.items())}


def verify_entry(entry: CatalogEntry, param_samples: Sequence[Mapping[str, Fraction]]) -> dict:
    """All checks for one catalog entry at every parameter sample."""
    samples_report = []
    hard_failures: list[str] = []
    for params in param_samples:
        a = entry.make(params)
        ls = check_left_symmetric(a)
        complete = is_complete(a)
        tag = identify_lie_algebra(lie_algebra_of(a))
        claimed_tag = entry.claimed_tag(params)
        tag_ok = _tag_matches(tag, claimed_tag)
        flags = ndsflags(a)
        flags_ok = flags == entry.claimed_flags
        witnesses = flag_witnesses(a)
        ideals = find_ideals_dim_le3(a)
        propagation_ok = True
        for ideal in ideals:
            if not (is_complete(restriction_to_ideal(a, ideal)) and is_complete(quotient_algebra(a, ideal))):
                propagation_ok = False
        sample = {
            "params": _params_str(params),
            "left_symmetric": ls.ok,
            "complete": complete,
            "lie_tag": str(tag),
            "claimed_lie_tag": str(claimed_tag),
            "lie_match": tag_ok,
            "flags_computed": {"N": flags[0], "D": flags[1], "S": flags[2]},
            "flags_claimed": {
                "N": entry.claimed_flags[0],
                "D": entry.claimed_flags[1],
                "S": entry.claimed_flags[2],
            },
            "flags_match": flags_ok,
            "flag_witnesses": {k: str(v) for k, v in witnesses.items()},
            "ideals_found": len(ideals),
            "completeness_propagation": propagation_ok,
        }
        samples_report.append(sample)
        if not (ls.ok and complete and tag_ok and ideals and propagation_ok):
            hard_failures.append(f"{entry.name} at {_params_str(params)}")
    return {
        "name": entry.name,
        "samples": samples_report,
        "hard_failures": hard_failures,
    }


def _distinctness_evidence(fp1: tuple, fp2: tuple) -> str | None:
    labels = (
        "lie_tag", "dim_center", "dim_products", "dim_squares", "dim_PA+AP",
        "annihilators", "flags_NDS", "complete", "LR_operator_span",
        "square_form_signature", "induced_action_ratio",
    )
    for label, x, y in zip(labels, fp1, fp2):
        if x != y:
            return f"{label}: {x} vs {y}"
    return None


def verify_catalog(seed: int = 0, random_samples: int = 5) -> dict:
    """Reproduce and audit the whole classification table.

    Runs every per-entry check at defaults plus seeded random parameters,
    certifies pairwise distinctness by fingerprint, and rebuilds every entry
    through the extension machinery with verified isomorphism witnesses.
    """
    rng = random.Random(seed)
    entries = catalog_lsas()
    report: dict = {"seed": seed, "entries": {}, "hard_failures": []}
    for entry in entries:
        samples: list[dict] = list(entry.default_params)
        if entry.name in _CONSTRAINTS:
            for _ in range(random_samples):
                samples.append(entry.sample_params(rng))
        entry_report = verify_entry(entry, samples)
        report["entries"][entry.name] = entry_report
        report["hard_failures"].extend(entry_report["hard_failures"])

    fingerprints = {}
    for entry in entries:
        fingerprints[entry.name] = fingerprint(entry.make(entry.default_params[0]))
    distinct = {}
    all_distinct = True
    names = [e.name for e in entries]
    for n1, n2 in itertools.combinations(names, 2):
        ev = _distinctness_evidence(fingerprints[n1], fingerprints[n2])
        key = f"{n1}|{n2}"
        if ev is None:
            all_distinct = False
            distinct[key] = "NOT SEPARATED"
            report["hard_failures"].append(f"fingerprints equal: {key}")
        else:
            distinct[key] = ev
    # the one-parameter C family: sampled parameter pairs stay non-isomorphic
    t1, t2 = F(2), F(3)
    ev = _distinctness_evidence(
        fingerprint(make_lsa("C3t", t=t1)), fingerprint(make_lsa("C3t", t=t2))
    )
    distinct[f"C3t(t=2)|C3t(t=3)"] = ev or "NOT SEPARATED"
    if ev is None:
        report["hard_failures"].append("C3t parameter values not separated")
    report["distinctness"] = {"all_distinct": all_distinct, "evidence": distinct}

    recon_report = []
    for case in reconstruction_cases(rng):
        kim = check_kim_conditions(case.data)
        built = build_extension(case.data) if kim.ok else None
        target = make_lsa(case.target, **case.target_params)
        witness_ok = bool(built) and verify_iso_witness(built, target, case.witness)
        recon_report.append(
            {
                "label": case.label,
                "target": case.target,
                "target_params": _params_str(case.target_params),
                "kim_conditions_ok": kim.ok,
                "witness_ok": witness_ok,
            }
        )
        if not (kim.ok and witness_ok):
            report["hard_failures"].append(f"reconstruction {case.label} -> {case.target}")
    report["reconstructions"] = recon_report

    a1 = fixtures()["A1_inv"]
    report["a1_inverse_fixture"] = {
        "left_symmetric": check_left_symmetric(a1).ok,
        "lie_unimodular": is_unimodular(lie_algebra_of(a1)),
        "rational_ideals_found": len(find_ideals_dim_le3(a1)),
    }

    rejected = d32_rejected_variant()
    rejected_check = check_left_symmetric(rejected)
    discrepancies = [
        {
            "id": "D32-product-column",
            "detail": (
                "the e2*e2=e1 transcription of D32 is not left-symmetric; "
                "catalog stores the equivalent-derivation form with e3*e3=e2"
            ),
            "witness_triple": list(rejected_check.witness or ()),
            "rejected_left_symmetric": rejected_check.ok,
            "stored_left_symmetric": check_left_symmetric(make_lsa("D32")).ok,
        },
        {
            "id": "C3t-remark-format",
            "detail": "the C3t remark column carries a doubled comma; cosmetic only",
        },
    ]
    for entry_report in report["entries"].values():
        for sample in entry_report["samples"]:
            if not sample["flags_match"]:
                discrepancies.append(
                    {
                        "id": f"flags-{entry_report['name']}",
                        "detail": "computed N/D/S differ from the claimed remarks",
                        "computed": sample["flags_computed"],
                        "claimed": sample["flags_claimed"],
                        "witnesses": sample["flag_witnesses"],
                    }
                )
    report["discrepancies"] = discrepancies
    report["ok"] = not report["hard_failures"]
    return report
