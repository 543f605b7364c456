import math
import random

import numpy as np
import pytest

from lsa.affine import (
    AffineMap3,
    affine_rep,
    build_family,
    check_closure,
    check_simply_transitive,
    check_tangent_algebra,
    default_families,
    expm4,
    legacy_d32_family,
    map_distance,
    newton_invert_orbit,
    phi_partial_sum,
    sample_parameter_pairs,
    special_f,
    special_g,
    special_h,
    special_k,
    special_phi,
    verify_family,
)
from lsa.catalog import make_lsa
from lsa.linalg import QMatrix


# --- special functions ----------------------------------------------------


def test_values_at_zero_exact():
    assert special_f(0.0) == 1.0
    assert special_g(0.0) == 0.5
    assert special_h(0.0) == 0.0
    assert special_k(0.0) == 0.0
    assert special_phi(0.0) == 0.0


def test_f_at_one():
    assert abs(special_f(1.0) - (math.e - 1.0)) < 1e-15


def test_phi_closed_form_vs_partial_sum():
    for x in (-3.0, -1.0, -0.2, 0.1, 1.0, 2.5):
        assert abs(special_phi(x) - phi_partial_sum(x, 60)) < 1e-12
    assert abs(special_phi(1.0) - 1.0) < 1e-12


def test_series_and_closed_branches_agree():
    from lsa.affine import SPECIAL_FUNCTIONS, closed_reference

    xs = [x / 100.0 for x in range(-500, 501) if x != 0]
    for name, fn in SPECIAL_FUNCTIONS.items():
        for x in xs:
            assert abs(fn(x) - closed_reference(name, x)) < 1e-12, (name, x)


def test_branch_continuity_at_threshold():
    # both branches evaluated at the switch points themselves
    from lsa.affine import SPECIAL_BRANCHES, SERIES_THRESHOLD

    for name, (series, closed) in SPECIAL_BRANCHES.items():
        for s in (SERIES_THRESHOLD, -SERIES_THRESHOLD):
            assert abs(series(s) - closed(s)) < 1e-12, name


# --- expm4 ----------------------------------------------------------------


def test_expm4_zero():
    assert np.allclose(expm4(np.zeros((4, 4))), np.eye(4), atol=0)


def test_expm4_nilpotent():
    n = np.zeros((4, 4))
    n[0, 1] = 1.0
    n[1, 2] = 2.0
    n[2, 3] = 3.0
    expected = np.eye(4) + n + n @ n / 2 + n @ n @ n / 6
    assert np.max(np.abs(expm4(n) - expected)) < 1e-15


def test_expm4_diagonal():
    d = np.diag([1.0, 2.0, 3.0, 0.0])
    expected = np.diag([math.e, math.e**2, math.e**3, 1.0])
    assert np.max(np.abs(expm4(d) - expected)) < 1e-13


def test_expm4_inverse_property():
    rng = random.Random(17)
    for _ in range(20):
        m = np.array([[rng.uniform(-1.2, 1.2) for _ in range(4)] for _ in range(4)])
        prod = expm4(m) @ expm4(-m)
        assert np.max(np.abs(prod - np.eye(4))) < 1e-12


# --- affine representation ------------------------------------------------


def test_affine_rep_n30():
    rep = affine_rep(make_lsa("N30"))
    lin, vecpart = rep.generators[0]
    assert lin == QMatrix([[0, 0, 0], [0, 1, 0], [0, 0, 0]])
    assert vecpart == (1, 0, 0)


def test_affine_rep_e31():
    rep = affine_rep(make_lsa("E31zeta", zeta=1))
    lin, _ = rep.generators[0]
    assert lin == QMatrix([[0, 0, 0], [0, 1, -1], [0, 1, 1]])


def test_affine_rep_zero_algebra():
    from lsa.algebra import Algebra

    rep = affine_rep(Algebra.from_entries(3, {}))
    for lin, vecpart in rep.generators:
        assert lin.is_zero()
    homs = rep.homogeneous_float()
    for i in range(3):
        for j in range(3):
            assert np.allclose(homs[i] @ homs[j], homs[j] @ homs[i])


def test_affine_rep_rejects_non_lsa():
    from lsa.catalog import d32_rejected_variant

    with pytest.raises(ValueError):
        affine_rep(d32_rejected_variant())


# --- group elements -------------------------------------------------------


def test_a30_element():
    fam = build_family("A30")
    m = fam.element(1.0, 2.0, 3.0)
    assert np.allclose(m.linear, np.diag([1.0, math.e, 1.0]))
    assert np.allclose(m.translation, [1.0, 2.0 * special_f(1.0), 3.0])


def test_d32_element():
    fam = build_family("D32")
    m = fam.element(1.0, 2.0, 3.0)
    f1, fh = special_f(1.0), special_f(0.5)
    assert np.allclose(m.linear[1, 2], 3.0 * (2 * f1 - fh))
    assert np.allclose(m.translation, [1.0, 2.0 * f1 + 4.5 * fh * fh, 3.0 * fh])


def test_identity_at_zero_all_families():
    for fam in default_families():
        assert map_distance(fam.element(0.0, 0.0, 0.0), AffineMap3.identity()) == 0.0


def test_family_param_validation():
    with pytest.raises(ValueError):
        build_family("C3t", t=1.0)
    with pytest.raises(ValueError):
        build_family("D31", mu=1.0)
    with pytest.raises(ValueError):
        build_family("E3", zeta=-1.0)
    with pytest.raises(ValueError):
        build_family("A30", t=2.0)


# --- closure --------------------------------------------------------------


def test_closure_specific_pair_a30():
    fam = build_family("A30")
    report = check_closure(fam, [((1.0, 2.0, 3.0), (-1.0, 1.0, 0.0))])
    assert report.ok and report.max_residual < 1e-12


def test_closure_with_identity():
    for fam in default_families():
        report = check_closure(fam, [((0.7, -1.1, 0.4), (0.0, 0.0, 0.0))])
        assert report.ok
        assert report.max_residual < 1e-12


def test_closure_all_families_sampled():
    rng = random.Random(101)
    for fam in default_families():
        pairs = sample_parameter_pairs(rng, 25)
        report = check_closure(fam, pairs)
        assert report.ok, (fam.name, report.failures[:1])
        assert report.max_residual < 1e-9


def test_legacy_d32_not_closed():
    fam = legacy_d32_family()
    composite = fam.element(1.0, 1.0, 0.0).compose(fam.element(0.0, 1.0, 0.0))
    rec = fam.recover(composite)
    assert map_distance(fam.element(*rec), composite) > 1e-3


# --- simple transitivity --------------------------------------------------


def test_orbit_map_a30_jacobian_analytic():
    fam = build_family("A30")
    from lsa.affine import _orbit_jacobian

    for p in [(0.0, 0.0, 0.0), (1.0, 2.0, -1.0), (-1.5, 0.3, 0.7)]:
        jac = _orbit_jacobian(fam, p)
        # orbit = (a, b f(a), c); det = f(a)
        assert abs(np.linalg.det(jac) - special_f(p[0])) < 1e-7


def test_transitivity_at_origin_all():
    from lsa.affine import _orbit_jacobian

    for fam in default_families():
        jac = _orbit_jacobian(fam, (0.0, 0.0, 0.0))
        assert abs(np.linalg.det(jac)) > 1e-8


def test_newton_inversion_e3():
    fam = build_family("E3", zeta=1.0)
    rng = random.Random(5)
    for _ in range(20):
        target = [rng.uniform(-3, 3) for _ in range(3)]
        _, err, ok = newton_invert_orbit(fam, target)
        assert ok and err < 1e-10


def test_check_simply_transitive_a30():
    report = check_simply_transitive(build_family("A30"))
    assert report.ok


# --- tangent algebra ------------------------------------------------------


def test_tangent_a30():
    report = check_tangent_algebra(build_family("A30"), make_lsa("N30"))
    assert report.ok


def test_tangent_translation_sanity_fixture():
    # a pure-translation family over the zero algebra: all commutators vanish
    from lsa.affine import GroupFamily
    from lsa.algebra import Algebra

    def element(a, b, c):
        return AffineMap3(np.eye(3), [a, b, c])

    def recover(m):
        return tuple(m.translation)

    fam = GroupFamily("translations", "zero", {}, element, recover)
    report = check_tangent_algebra(fam, Algebra.from_entries(3, {}))
    assert report.ok


def test_tangent_d31():
    report = check_tangent_algebra(build_family("D31", mu=0.5), make_lsa("D31mu", mu="1/2"))
    assert report.ok


def test_tangent_all_families():
    from lsa.affine import FAMILY_TO_CATALOG

    from fractions import Fraction

    catalog_params = {
        "C3t": {"t": Fraction(2)},
        "D31": {"mu": Fraction(1, 2)},
        "E3": {"zeta": Fraction(1)},
    }
    for fam in default_families():
        cat = make_lsa(FAMILY_TO_CATALOG[fam.name], **catalog_params.get(fam.name, {}))
        report = check_tangent_algebra(fam, cat)
        assert report.ok, (fam.name, report)


def test_verify_family_report():
    rng = random.Random(3)
    fam = build_family("B31")
    report = verify_family(fam, make_lsa("B31"), rng, closure_samples=10)
    assert report["ok"], report
    assert report["max_closure_residual"] < 1e-9
    assert report["tangent_bracket_residual"] < 1e-6


def test_expm4_against_scipy():
    scipy_linalg = pytest.importorskip("scipy.linalg")
    rng = random.Random(29)
    for _ in range(25):
        m = np.array([[rng.uniform(-2, 2) for _ in range(4)] for _ in range(4)])
        ours = expm4(m)
        reference = scipy_linalg.expm(m)
        scale = max(1.0, float(np.max(np.abs(reference))))
        assert np.max(np.abs(ours - reference)) / scale < 1e-12
