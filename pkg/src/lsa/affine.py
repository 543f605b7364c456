"""Double-precision verification of the eleven simply transitive subgroups
of Aff(R^3) attached to the catalog algebras.

Each family is a parametrized set of affine maps g(a, b, c); the harness
checks the properties that characterize the claim operationally instead of
re-deriving any particular exponential-coordinate system: closure under
composition, a nonsingular and injective orbit map with Newton-invertible
samples, and tangent vectors at the identity matching the exact affine
representation X -> (L_X, X) of the paired catalog algebra.

The D32 family needs one documented correction: the commonly quoted entry
(with b f(a) in the first row and a + b^2 g(a) in the translation) is not
closed under composition; it mirrors the same transcription slip as the
rejected D32 product form.  The family stored here is derived from the
corrected algebra and is closed; ``legacy_d32_family`` keeps the other form
so the failure is reproducible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .algebra import Algebra, left_mult, lie_algebra_of, multiply
from .linalg import QMatrix, Vec, commutator, unit_vec

SERIES_THRESHOLD = 0.25
SERIES_EPS = 1e-18


def series_f(x: float) -> float:
    total, term, n = 0.0, 1.0, 0
    while abs(term) >= SERIES_EPS:
        total += term
        n += 1
        term *= x / (n + 1)
    return total


def closed_f(x: float) -> float:
    return (math.exp(x) - 1.0) / x


def series_g(x: float) -> float:
    total, term, n = 0.0, 0.5, 0
    while abs(term) >= SERIES_EPS:
        total += term
        n += 1
        term *= x / (n + 2)
    return total


def closed_g(x: float) -> float:
    return (math.exp(x) - x - 1.0) / (x * x)


def series_h(x: float) -> float:
    total = 0.0
    term = x**3 / 24.0
    m = 2
    while abs(term) >= SERIES_EPS:
        total += term
        m += 1
        term *= -x * x / ((2 * m - 1) * (2 * m))
    return total


def closed_h(x: float) -> float:
    return (math.cos(x) - 1.0) / x + x / 2.0


def series_k(x: float) -> float:
    total = 0.0
    term = -x * x / 6.0
    m = 1
    while abs(term) >= SERIES_EPS:
        total += term
        m += 1
        term *= -x * x / ((2 * m) * (2 * m + 1))
    return total


def closed_k(x: float) -> float:
    return (math.sin(x) - x) / x


def series_phi(x: float) -> float:
    total = 0.0
    term = x / 2.0  # n = 1 term
    n = 1
    while abs(term) >= SERIES_EPS:
        total += term
        n += 1
        term *= x * n / ((n - 1) * (n + 1))
    return total


def closed_phi(x: float) -> float:
    return ((x - 1.0) * math.exp(x) + 1.0) / x


def _dispatch(series: Callable, closed: Callable) -> Callable[[float], float]:
    def fn(x: float) -> float:
        if abs(x) >= SERIES_THRESHOLD:
            return closed(x)
        return series(x)

    return fn


special_f = _dispatch(series_f, closed_f)
special_f.__doc__ = "(e^x - 1)/x with f(0) = 1."
special_g = _dispatch(series_g, closed_g)
special_g.__doc__ = "(e^x - x - 1)/x^2 with g(0) = 1/2."
special_h = _dispatch(series_h, closed_h)
special_h.__doc__ = "(cos x - 1)/x + x/2 with h(0) = 0."
special_k = _dispatch(series_k, closed_k)
special_k.__doc__ = "(sin x - x)/x with k(0) = 0."
special_phi = _dispatch(series_phi, closed_phi)
special_phi.__doc__ = "sum_{n>=1} n x^n/(n+1)!; closed form ((x-1)e^x + 1)/x."

SPECIAL_BRANCHES: dict[str, tuple[Callable, Callable]] = {
    "f": (series_f, closed_f),
    "g": (series_g, closed_g),
    "h": (series_h, closed_h),
    "k": (series_k, closed_k),
    "phi": (series_phi, closed_phi),
}


def closed_reference(name: str, x: float) -> float:
    """Closed form in extended precision (float128 where available).

    Near zero the double-precision closed forms lose digits to cancellation
    (the reason the implementation branches); the extended-precision value
    is the honest comparison target for sweep checks.
    """
    xl = np.longdouble(x)
    one = np.longdouble(1.0)
    if name == "f":
        val = (np.exp(xl) - one) / xl
    elif name == "g":
        val = (np.exp(xl) - xl - one) / (xl * xl)
    elif name == "h":
        val = (np.cos(xl) - one) / xl + xl / 2
    elif name == "k":
        val = (np.sin(xl) - xl) / xl
    elif name == "phi":
        val = ((xl - one) * np.exp(xl) + one) / xl
    else:
        raise KeyError(name)
    return float(val)


def phi_partial_sum(x: float, terms: int = 50) -> float:
    """Direct truncation of the defining series; test oracle."""
    total = 0.0
    for n in range(1, terms + 1):
        total += n * x**n / math.factorial(n + 1)
    return total


SPECIAL_FUNCTIONS: dict[str, Callable[[float], float]] = {
    "f": special_f,
    "g": special_g,
    "h": special_h,
    "k": special_k,
    "phi": special_phi,
}

SPECIAL_ZERO_VALUES = {"f": 1.0, "g": 0.5, "h": 0.0, "k": 0.0, "phi": 0.0}


@dataclass
class AffineMap3:
    linear: np.ndarray  # 3x3
    translation: np.ndarray  # 3

    def __post_init__(self):
        self.linear = np.asarray(self.linear, dtype=float)
        self.translation = np.asarray(self.translation, dtype=float)
        assert self.linear.shape == (3, 3) and self.translation.shape == (3,)
        assert np.all(np.isfinite(self.linear)) and np.all(np.isfinite(self.translation))

    @classmethod
    def identity(cls) -> "AffineMap3":
        return cls(np.eye(3), np.zeros(3))

    def apply(self, point: Sequence[float]) -> np.ndarray:
        return self.linear @ np.asarray(point, dtype=float) + self.translation

    def compose(self, other: "AffineMap3") -> "AffineMap3":
        """self after other: x -> self(other(x))."""
        return AffineMap3(self.linear @ other.linear, self.linear @ other.translation + self.translation)

    def as_homogeneous(self) -> np.ndarray:
        out = np.eye(4)
        out[:3, :3] = self.linear
        out[:3, 3] = self.translation
        return out

    def flat(self) -> np.ndarray:
        return np.concatenate([self.linear.reshape(-1), self.translation])


def map_distance(m1: AffineMap3, m2: AffineMap3) -> float:
    return float(np.max(np.abs(m1.flat() - m2.flat())))


def expm4(m: np.ndarray) -> np.ndarray:
    """Scaling-and-squaring matrix exponential with an order-13 Taylor core.

    The argument is scaled below 1/4 so the first dropped term is < 1e-16.
    """
    m = np.asarray(m, dtype=float)
    assert m.shape == (4, 4)
    norm = float(np.max(np.sum(np.abs(m), axis=1)))
    squarings = 0
    if norm > 0.25:
        squarings = max(0, int(math.ceil(math.log2(norm / 0.25))))
    scaled = m / (2.0**squarings)
    out = np.eye(4)
    term = np.eye(4)
    for k in range(1, 14):
        term = term @ scaled / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


# ---------------------------------------------------------------------------
# Exact affine representation X -> (L_X, X)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffRep:
    generators: tuple[tuple[QMatrix, Vec], ...]

    def homogeneous_float(self) -> list[np.ndarray]:
        out = []
        for lin, vecpart in self.generators:
            m = np.zeros((4, 4))
            m[:3, :3] = [[float(x) for x in row] for row in lin.rows]
            m[:3, 3] = [float(x) for x in vecpart]
            out.append(m)
        return out


def affine_rep(a: Algebra) -> AffRep:
    """Generators (L_{e_i}, e_i); the homomorphism identity is asserted
    exactly over the rationals."""
    if a.dim != 3:
        raise ValueError("affine representation is defined for dimension 3")
    e = [unit_vec(3, i) for i in range(3)]
    gens = tuple((left_mult(a, x), x) for x in e)
    for i in range(3):
        for j in range(3):
            li, xi = gens[i]
            lj, xj = gens[j]
            bracket_lin = commutator(li, lj)
            bracket_vec = tuple(
                p - q for p, q in zip(li.apply(xj), lj.apply(xi))
            )
            br = tuple(
                p - q for p, q in zip(multiply(a, xi, xj), multiply(a, xj, xi))
            )
            expected_lin = QMatrix.zero(3, 3)
            for idx, coeff in enumerate(br):
                if coeff != 0:
                    expected_lin = expected_lin + gens[idx][0].scale(coeff)
            if bracket_lin != expected_lin or bracket_vec != br:
                raise ValueError(
                    "affine representation is not a homomorphism; input is not left-symmetric"
                )
    return AffRep(gens)


# ---------------------------------------------------------------------------
# The eleven group families
# ---------------------------------------------------------------------------


@dataclass
class GroupFamily:
    name: str
    catalog_name: str
    params: dict[str, float]
    element: Callable[[float, float, float], AffineMap3]
    recover: Callable[[AffineMap3], tuple[float, float, float]]
    # which group parameter differentiates to which catalog basis vector
    tangent_order: tuple[int, int, int] = (0, 1, 2)


FAMILY_NAMES = ("A30", "A31", "A32", "A33", "B30", "B31", "C31", "C3t", "D31", "D32", "E3")

FAMILY_TO_CATALOG = {
    "A30": "N30",
    "A31": "N31",
    "A32": "N32",
    "A33": "N33",
    "B30": "B30",
    "B31": "B31",
    "C31": "C31",
    "C3t": "C3t",
    "D31": "D31mu",
    "D32": "D32",
    "E3": "E31zeta",  # alias: the E family carries the zeta parameter
}

FAMILY_DEFAULT_PARAMS: dict[str, dict] = {
    "C3t": {"t": Fraction(2)},
    "D31": {"mu": Fraction(1, 2)},
    "E3": {"zeta": Fraction(1)},
}


def _validate_family_params(name: str, params: dict[str, float]) -> None:
    if name == "C3t":
        if "t" not in params:
            raise ValueError("family C3t requires parameter t")
        if abs(params["t"] - 1.0) < 1e-12:
            raise ValueError("constraint violated for C3t: t != 1")
    elif name == "D31":
        if "mu" not in params:
            raise ValueError("family D31 requires parameter mu")
        if not 0 < abs(params["mu"]) < 1:
            raise ValueError("constraint violated for D31: 0 < |mu| < 1")
    elif name == "E3":
        if "zeta" not in params:
            raise ValueError("family E3 requires parameter zeta")
        if not params["zeta"] > 0:
            raise ValueError("constraint violated for E3: zeta > 0")
    elif params:
        raise ValueError(f"family {name} takes no parameters")


def build_family(name: str, **params: float) -> GroupFamily:
    """Construct a family by name; parameters are validated."""
    params = {k: float(v) for k, v in params.items()}
    _validate_family_params(name, params)
    f, g, h, k, phi = special_f, special_g, special_h, special_k, special_phi

    if name == "A30":
        def element(a, b, c):
            return AffineMap3(np.diag([1.0, math.exp(a), 1.0]), [a, b * f(a), c])

        def recover(m):
            a = m.translation[0]
            return a, m.translation[1] / f(a), m.translation[2]

    elif name == "A31":
        def element(a, b, c):
            lin = np.diag([1.0, math.exp(a), 1.0])
            lin[2, 0] = a
            return AffineMap3(lin, [a, b * f(a), c + 0.5 * a * a])

        def recover(m):
            a = m.translation[0]
            return a, m.translation[1] / f(a), m.translation[2] - 0.5 * a * a

    elif name in ("A32", "A33"):
        sign = 1.0 if name == "A32" else -1.0

        def element(a, b, c):
            lin = np.diag([1.0, math.exp(a), 1.0])
            lin[0, 2] = sign * c
            return AffineMap3(lin, [a + sign * 0.5 * c * c, b * f(a), c])

        def recover(m):
            c = m.translation[2]
            a = m.translation[0] - sign * 0.5 * c * c
            return a, m.translation[1] / f(a), c

    elif name == "B30":
        def element(a, b, c):
            return AffineMap3(np.diag([1.0, math.exp(a), math.exp(a)]), [a, b * f(a), c * f(a)])

        def recover(m):
            a = m.translation[0]
            return a, m.translation[1] / f(a), m.translation[2] / f(a)

    elif name == "B31":
        def element(a, b, c):
            ea = math.exp(a)
            lin = np.diag([1.0, ea, ea])
            lin[2, 0] = b * f(a)
            lin[2, 1] = a * ea
            return AffineMap3(lin, [a, b * f(a), (a * b + c) * f(a)])

        def recover(m):
            a = m.translation[0]
            b = m.translation[1] / f(a)
            return a, b, m.translation[2] / f(a) - a * b

    elif name == "C31":
        def element(a, b, c):
            ea = math.exp(a)
            lin = np.diag([1.0, ea, ea])
            lin[2, 1] = a * ea
            return AffineMap3(lin, [a, b * f(a), c * f(a) + b * phi(a)])

        def recover(m):
            a = m.translation[0]
            b = m.translation[1] / f(a)
            return a, b, (m.translation[2] - b * phi(a)) / f(a)

    elif name == "C3t":
        t = params["t"]

        def element(a, b, c):
            ea = math.exp(a)
            lin = np.diag([1.0, ea, ea])
            lin[2, 0] = (t - 1.0) * b * f(a)
            lin[2, 1] = t * a * ea
            return AffineMap3(lin, [a, b * f(a), (t * a * b + c - b) * f(a) + b])

        def recover(m):
            a = m.translation[0]
            b = m.translation[1] / f(a)
            c = (m.translation[2] - b) / f(a) - t * a * b + b
            return a, b, c

    elif name == "D31":
        mu = params["mu"]

        def element(a, b, c):
            return AffineMap3(
                np.diag([1.0, math.exp(a), math.exp(mu * a)]),
                [a, b * f(a), c * f(mu * a)],
            )

        def recover(m):
            a = m.translation[0]
            return a, m.translation[1] / f(a), m.translation[2] / f(mu * a)

    elif name == "D32":
        # derived closed form: linear (2,3) entry c (2 f(a) - f(a/2)) and
        # translation (a, b f(a) + c^2 f(a/2)^2 / 2, c f(a/2))
        def element(a, b, c):
            lin = np.diag([1.0, math.exp(a), math.exp(0.5 * a)])
            lin[1, 2] = c * (2.0 * f(a) - f(0.5 * a))
            return AffineMap3(
                lin, [a, b * f(a) + 0.5 * c * c * f(0.5 * a) ** 2, c * f(0.5 * a)]
            )

        def recover(m):
            a = m.translation[0]
            c = m.translation[2] / f(0.5 * a)
            b = (m.translation[1] - 0.5 * c * c * f(0.5 * a) ** 2) / f(a)
            return a, b, c

    elif name == "E3":
        zeta = params["zeta"]

        def element(a, b, c):
            ea = math.exp(a)
            cz, sz = math.cos(zeta * a), math.sin(zeta * a)
            lin = np.array(
                [[1.0, 0.0, 0.0], [0.0, ea * cz, -ea * sz], [0.0, ea * sz, ea * cz]]
            )
            big_f = f(a) + k(zeta * a)
            big_h = h(zeta * a) - zeta * phi(a)
            return AffineMap3(
                lin,
                [a, b * big_f + c * big_h, -b * big_h + c * big_f],
            )

        def recover(m):
            a = m.translation[0]
            big_f = f(a) + k(zeta * a)
            big_h = h(zeta * a) - zeta * phi(a)
            denom = big_f * big_f + big_h * big_h
            t1, t2 = m.translation[1], m.translation[2]
            b = (big_f * t1 - big_h * t2) / denom
            c = (big_h * t1 + big_f * t2) / denom
            return a, b, c

    else:
        raise KeyError(f"unknown family {name!r}")

    return GroupFamily(name, FAMILY_TO_CATALOG[name], params, element, recover)


def legacy_d32_family() -> GroupFamily:
    """The commonly quoted D32 entry; kept as reproducible evidence that it
    is not closed under composition (see check_closure)."""
    f, g = special_f, special_g

    def element(a, b, c):
        lin = np.diag([1.0, math.exp(a), math.exp(0.5 * a)])
        lin[0, 1] = b * f(a)
        return AffineMap3(lin, [a + b * b * g(a), b * f(a), c * f(0.5 * a)])

    def recover(m):
        a = math.log(m.linear[1, 1])
        b = m.translation[1] / f(a)
        c = m.translation[2] / f(0.5 * a)
        return a, b, c

    fam = GroupFamily("D32-legacy", "D32", {}, element, recover)
    return fam


def default_families() -> list[GroupFamily]:
    """All eleven families at the catalog default parameters."""
    return [
        build_family("A30"),
        build_family("A31"),
        build_family("A32"),
        build_family("A33"),
        build_family("B30"),
        build_family("B31"),
        build_family("C31"),
        build_family("C3t", t=2.0),
        build_family("D31", mu=0.5),
        build_family("D32"),
        build_family("E3", zeta=1.0),
    ]


# ---------------------------------------------------------------------------
# Verification harness
# ---------------------------------------------------------------------------


@dataclass
class ClosureReport:
    family: str
    samples: int
    max_residual: float
    newton_fallbacks: int
    failures: list[tuple]

    @property
    def ok(self) -> bool:
        return not self.failures


def _gauss_newton_match(fam: GroupFamily, target: AffineMap3, start, tol=1e-12, iters=60):
    """Fit family parameters to a 12-vector of affine map entries."""
    x = np.array(start, dtype=float)
    target_flat = target.flat()
    step = 1e-7
    for _ in range(iters):
        cur = fam.element(*x).flat()
        resid = cur - target_flat
        if np.max(np.abs(resid)) < tol:
            return tuple(x), float(np.max(np.abs(resid)))
        jac = np.zeros((12, 3))
        for i in range(3):
            xp, xm = x.copy(), x.copy()
            xp[i] += step
            xm[i] -= step
            jac[:, i] = (fam.element(*xp).flat() - fam.element(*xm).flat()) / (2 * step)
        delta, *_ = np.linalg.lstsq(jac, -resid, rcond=None)
        x = x + delta
    cur = fam.element(*x).flat()
    return tuple(x), float(np.max(np.abs(cur - target_flat)))


def check_closure(fam: GroupFamily, sample_pairs: Sequence[tuple], tol: float = 1e-9) -> ClosureReport:
    """Compose sampled pairs and match the composite back into the family.

    The distinguished coordinate gives a directly; b and c follow by the
    family's closed-form solve, with a Gauss-Newton fallback for coupled
    cases.  The residual is the max-norm difference between the composite
    and the recovered element.
    """
    max_residual = 0.0
    fallbacks = 0
    failures = []
    for p1, p2 in sample_pairs:
        composite = fam.element(*p1).compose(fam.element(*p2))
        try:
            rec = fam.recover(composite)
            resid = map_distance(fam.element(*rec), composite)
        except (ValueError, ZeroDivisionError, FloatingPointError):
            rec, resid = None, math.inf
        if not (resid < tol):
            guess = rec if rec is not None and all(map(math.isfinite, rec)) else (
                p1[0] + p2[0], p1[1] + p2[1], p1[2] + p2[2]
            )
            rec, resid = _gauss_newton_match(fam, composite, guess)
            fallbacks += 1
        max_residual = max(max_residual, resid)
        if not (resid < tol):
            failures.append((p1, p2, resid))
    return ClosureReport(fam.name, len(sample_pairs), max_residual, fallbacks, failures)


@dataclass
class TransitivityReport:
    family: str
    min_abs_jacobian: float
    min_jacobian_point: tuple | None
    injectivity_ok: bool
    injectivity_witness: tuple | None
    newton_failures: int
    max_newton_residual: float

    @property
    def ok(self) -> bool:
        return (
            self.min_abs_jacobian > 1e-8
            and self.injectivity_ok
            and self.newton_failures == 0
        )


def orbit_map(fam: GroupFamily, p) -> np.ndarray:
    """Image of the origin: the translation part."""
    return fam.element(*p).translation


def _orbit_jacobian(fam: GroupFamily, p, step: float = 1e-6) -> np.ndarray:
    jac = np.zeros((3, 3))
    p = np.asarray(p, dtype=float)
    for i in range(3):
        dp, dm = p.copy(), p.copy()
        dp[i] += step
        dm[i] -= step
        jac[:, i] = (orbit_map(fam, dp) - orbit_map(fam, dm)) / (2 * step)
    return jac


def newton_invert_orbit(fam: GroupFamily, target, start=(0.0, 0.0, 0.0), tol=1e-10, iters=80):
    """Solve orbit(p) = target by damped Newton with numeric Jacobian."""
    x = np.array(start, dtype=float)
    target = np.asarray(target, dtype=float)
    for _ in range(iters):
        resid = orbit_map(fam, x) - target
        err = float(np.max(np.abs(resid)))
        if err < tol:
            return tuple(x), err, True
        jac = _orbit_jacobian(fam, x)
        try:
            delta = np.linalg.solve(jac, -resid)
        except np.linalg.LinAlgError:
            return tuple(x), err, False
        scale = 1.0
        for _damp in range(30):
            trial = x + scale * delta
            trial_err = float(np.max(np.abs(orbit_map(fam, trial) - target)))
            if trial_err < err:
                x = trial
                break
            scale *= 0.5
        else:
            return tuple(x), err, False
    err = float(np.max(np.abs(orbit_map(fam, x) - target)))
    return tuple(x), err, err < tol


def check_simply_transitive(
    fam: GroupFamily,
    grid_lo: float = -2.0,
    grid_hi: float = 2.0,
    grid_step: float = 0.5,
    n_targets: int = 20,
    rng=None,
) -> TransitivityReport:
    """Jacobian nonsingularity on a grid, grid injectivity, and Newton
    inversion of sampled targets in [-3, 3]^3."""
    import random as _random

    rng = rng or _random.Random(0)
    ticks = np.arange(grid_lo, grid_hi + grid_step / 2, grid_step)
    points = [(a, b, c) for a in ticks for b in ticks for c in ticks]
    min_jac = math.inf
    min_jac_point = None
    for p in points:
        jac = _orbit_jacobian(fam, p)
        d = abs(float(np.linalg.det(jac)))
        if d < min_jac:
            min_jac, min_jac_point = d, p
    images = np.array([orbit_map(fam, p) for p in points])
    injectivity_ok, witness = True, None
    d2 = np.sum((images[:, None, :] - images[None, :, :]) ** 2, axis=-1)
    np.fill_diagonal(d2, np.inf)
    min_pair = float(np.min(d2)) ** 0.5
    if min_pair < 1e-9:
        injectivity_ok = False
        idx = np.unravel_index(np.argmin(d2), d2.shape)
        witness = (points[idx[0]], points[idx[1]])
    newton_failures = 0
    max_resid = 0.0
    for _ in range(n_targets):
        target = [rng.uniform(-3, 3) for _ in range(3)]
        _, err, ok = newton_invert_orbit(fam, target)
        max_resid = max(max_resid, err)
        if not ok:
            newton_failures += 1
    return TransitivityReport(
        fam.name, min_jac, min_jac_point, injectivity_ok, witness, newton_failures, max_resid
    )


@dataclass
class TangentReport:
    family: str
    max_generator_error: float
    max_bracket_residual: float
    max_constant_error: float
    worst_pair: tuple[int, int] | None = None  # 1-based commutator indices

    @property
    def ok(self) -> bool:
        return (
            self.max_generator_error < 1e-6
            and self.max_bracket_residual < 1e-6
            and self.max_constant_error < 1e-6
        )


def check_tangent_algebra(fam: GroupFamily, algebra: Algebra, step: float = 1e-6) -> TangentReport:
    """Differentiate the coordinate curves at the identity and compare with
    the exact representation and the algebra's bracket constants."""
    xs = []
    for i in range(3):
        p_plus = [0.0, 0.0, 0.0]
        p_minus = [0.0, 0.0, 0.0]
        p_plus[i] = step
        p_minus[i] = -step
        m_plus = fam.element(*p_plus).as_homogeneous()
        m_minus = fam.element(*p_minus).as_homogeneous()
        xs.append((m_plus - m_minus) / (2 * step))
    rep = affine_rep(algebra).homogeneous_float()
    order = fam.tangent_order
    gen_err = max(
        float(np.max(np.abs(xs[i] - rep[order[i]]))) for i in range(3)
    )
    lie = lie_algebra_of(algebra)
    basis = np.stack([x.reshape(-1) for x in xs], axis=1)  # 16 x 3
    max_resid = 0.0
    max_const_err = 0.0
    worst = None
    for i in range(3):
        for j in range(3):
            comm = xs[i] @ xs[j] - xs[j] @ xs[i]
            coeffs, residuals, *_ = np.linalg.lstsq(basis, comm.reshape(-1), rcond=None)
            resid = float(np.max(np.abs(basis @ coeffs - comm.reshape(-1))))
            expected = multiply(lie, unit_vec(3, order[i]), unit_vec(3, order[j]))
            const_err = max(
                abs(coeffs[idx] - float(expected[order[idx]])) for idx in range(3)
            )
            if max(resid, const_err) > max(max_resid, max_const_err):
                worst = (i + 1, j + 1)
            max_resid = max(max_resid, resid)
            max_const_err = max(max_const_err, const_err)
    return TangentReport(fam.name, gen_err, max_resid, max_const_err, worst)


def sample_parameter_pairs(rng, count: int, lo: float = -2.0, hi: float = 2.0):
    return [
        (
            (rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)),
            (rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)),
        )
        for _ in range(count)
    ]


def verify_family(fam: GroupFamily, algebra: Algebra, rng, closure_samples: int = 50) -> dict:
    pairs = sample_parameter_pairs(rng, closure_samples)
    closure = check_closure(fam, pairs)
    transitivity = check_simply_transitive(fam, rng=rng)
    tangent = check_tangent_algebra(fam, algebra)
    identity_exact = map_distance(fam.element(0.0, 0.0, 0.0), AffineMap3.identity()) == 0.0
    return {
        "family": fam.name,
        "catalog_entry": fam.catalog_name,
        "params": dict(sorted(fam.params.items())),
        "samples": closure_samples,
        "identity_at_zero": identity_exact,
        "max_closure_residual": closure.max_residual,
        "closure_newton_fallbacks": closure.newton_fallbacks,
        "closure_failures": len(closure.failures),
        "jacobian_min_abs_det": transitivity.min_abs_jacobian,
        "jacobian_min_point": list(transitivity.min_jacobian_point or ()),
        "injectivity_ok": transitivity.injectivity_ok,
        "newton_failures": transitivity.newton_failures,
        "max_newton_residual": transitivity.max_newton_residual,
        "tangent_generator_error": tangent.max_generator_error,
        "tangent_bracket_residual": max(tangent.max_bracket_residual, tangent.max_constant_error),
        "ok": closure.ok and transitivity.ok and tangent.ok and identity_exact,
    }
