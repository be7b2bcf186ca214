import math

import numpy as np
import pytest

from gosset.diagrams import build_diagram
from gosset.golden import TAU
from gosset.masses import (
    jacobi_eigenvalues,
    ratio_report,
    toda_mass_matrix,
    toda_masses,
    zamolodchikov_spectrum,
)
from gosset.project import ORTHOGONAL, SKEW, circle_spectrum, project_many
from gosset.roots import root_system

TAU_F = float(TAU)


def closed_form_unit():
    # independent evaluation of the defining trig relations
    m1 = 1.0
    m2 = TAU_F
    m3 = 2.0 * math.cos(math.pi / 30.0)
    m4 = 2.0 * m2 * math.cos(7.0 * math.pi / 30.0)
    m5 = 2.0 * m2 * math.cos(2.0 * math.pi / 15.0)
    return (m1, m2, m3, m4, m5, TAU_F * m3, TAU_F * m4, TAU_F * m5)


def test_spectrum_at_unit_scale():
    got = zamolodchikov_spectrum(1.0).masses
    # frozen from a 30-digit mpmath evaluation of the trig closed forms
    want = (1.0, 1.61803398875, 1.98904379074, 2.40486717237, 2.95629520147,
            3.21834045852, 3.89115682333, 4.78338611675)
    for g, w in zip(got, want):
        assert g == pytest.approx(w, abs=1e-10)
    assert got == pytest.approx(closed_form_unit(), abs=1e-15)


def test_spectrum_matches_printed_radii():
    got = zamolodchikov_spectrum(0.4745).masses
    printed = (0.4745, 0.7678, 0.9438, 1.141, 1.403, 1.527, 1.846, 2.270)
    for g, w in zip(got, printed):
        assert g == pytest.approx(w, abs=5e-4)


def test_spectrum_coldea_scale():
    got = zamolodchikov_spectrum(0.5).masses
    assert got[0] == pytest.approx(0.5, abs=1e-12)
    assert got[1] == pytest.approx(0.80902, abs=5e-6)


def test_spectrum_golden_relations():
    m = zamolodchikov_spectrum(2.31).masses
    assert m[1] == pytest.approx(TAU_F * m[0], rel=1e-12)
    assert m[5] == pytest.approx(TAU_F * m[2], rel=1e-12)
    assert m[6] == pytest.approx(TAU_F * m[3], rel=1e-12)
    assert m[7] == pytest.approx(TAU_F * m[4], rel=1e-12)


def test_spectrum_is_ascending_and_scales():
    a = zamolodchikov_spectrum(1.0).masses
    b = zamolodchikov_spectrum(3.5).masses
    assert all(y > x for x, y in zip(a, a[1:]))
    for x, y in zip(a, b):
        assert y == pytest.approx(3.5 * x, rel=1e-15)


def test_spectrum_rejects_nonpositive():
    with pytest.raises(ValueError):
        zamolodchikov_spectrum(0.0)
    with pytest.raises(ValueError):
        zamolodchikov_spectrum(-1.0)


def test_jacobi_against_numpy_oracle():
    rng = np.random.default_rng(5)
    for n in (2, 5, 8, 9):
        a = rng.normal(size=(n, n))
        a = 0.5 * (a + a.T)
        got = jacobi_eigenvalues(a)
        want = np.linalg.eigvalsh(a)
        assert np.max(np.abs(got - want)) < 1e-10


def test_jacobi_rejects_asymmetric():
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_toda_matrix_structure(e8):
    tm = toda_mass_matrix(e8)
    assert tm.m.shape == (8, 8)
    assert tm.n.shape == (9, 9)
    assert tm.marks[0] == 1
    assert sum(tm.marks) == 30  # h
    assert np.allclose(tm.m, tm.m.T, atol=1e-12)
    assert np.trace(tm.m) == pytest.approx(60.0, abs=1e-9)


def test_toda_eigenvalues_match_closed_form(e8):
    masses = toda_masses(e8)
    rep = ratio_report(masses, closed_form_unit())
    assert rep.max_rel_dev < 1e-9


def test_n_matrix_singular_with_m_spectrum(e8):
    tm = toda_mass_matrix(e8)
    eig_m = jacobi_eigenvalues(tm.m)
    eig_n = jacobi_eigenvalues(tm.n)
    near_zero = [x for x in eig_n if abs(x) < 1e-9]
    assert len(near_zero) == 1
    rest = np.array([x for x in eig_n if abs(x) >= 1e-9])
    assert np.max(np.abs(rest - eig_m)) < 1e-9


def test_toda_matrix_basis_covariance(e8):
    # a rotated realisation leaves the spectrum unchanged
    rng = np.random.default_rng(9)
    q, _ = np.linalg.qr(rng.normal(size=(8, 8)))
    rotated = root_system(e8.diagram)
    rotated = rotated.__class__(
        diagram=rotated.diagram,
        simples=rotated.simples @ q.T,
        roots=rotated.roots @ q.T,
        reflections=tuple(q @ r @ q.T for r in rotated.reflections),
        coxeter_number=rotated.coxeter_number,
        marks=rotated.marks,
    )
    a = jacobi_eigenvalues(toda_mass_matrix(e8).m)
    b = jacobi_eigenvalues(toda_mass_matrix(rotated).m)
    assert np.max(np.abs(a - b)) < 1e-9


def test_toda_requires_marks():
    rs = root_system(build_diagram("H4"))
    with pytest.raises(ValueError):
        toda_mass_matrix(rs)


def test_ratio_report_identical_lists():
    rep = ratio_report([1.0, 2.0, 3.0], [3.0, 1.0, 2.0])
    assert rep.max_rel_dev == 0.0
    assert rep.pairing == ((0, 1), (1, 2), (2, 0))


def test_ratio_report_rejects_bad_input():
    with pytest.raises(ValueError):
        ratio_report([1.0, 2.0], [1.0])
    with pytest.raises(ValueError):
        ratio_report([1.0, -2.0], [1.0, 2.0])


def test_three_routes_agree(e8, e8_plane):
    closed = np.array(zamolodchikov_spectrum(1.0).masses)
    toda = toda_masses(e8)
    radii = circle_spectrum(project_many(e8_plane, e8.roots, ORTHOGONAL), mode=ORTHOGONAL).radii
    assert ratio_report(closed, toda).max_rel_dev < 1e-9
    assert ratio_report(closed, radii).max_rel_dev < 1e-9
    assert ratio_report(toda, radii).max_rel_dev < 1e-9


def test_eigenvector_proportional_to_masses(e8_plane):
    closed = np.array(zamolodchikov_spectrum(1.0).masses)
    rep = ratio_report(np.sort(e8_plane.z), closed)
    assert rep.max_rel_dev < 1e-9


def test_skew_and_ortho_radii_proportional(e8, e8_plane):
    ro = sorted(p.radius for p in project_many(e8_plane, e8.simples, ORTHOGONAL))
    rk = sorted(p.radius for p in project_many(e8_plane, e8.simples, SKEW))
    assert ratio_report(ro, rk).max_rel_dev < 1e-9
    # the mode factor is index independent:
    # sqrt((4+3c^2)/(2(2+tau))) / sqrt(2/(2+tau)) = sqrt((4+3c^2)/4)
    c = 2.0 * math.cos(math.pi / 30.0)
    factor = math.sqrt((4.0 + 3.0 * c * c) / 4.0)
    for a, b in zip(ro, rk):
        assert b / a == pytest.approx(factor, rel=1e-12)


def test_skew_radii_satisfy_mass_relations(e8, e8_plane):
    r = sorted(p.radius for p in project_many(e8_plane, e8.simples, SKEW))
    assert r[2] == pytest.approx(2.0 * r[0] * math.cos(math.pi / 30.0), rel=1e-9)
    assert r[3] == pytest.approx(2.0 * r[1] * math.cos(7.0 * math.pi / 30.0), rel=1e-9)
    assert r[4] == pytest.approx(2.0 * r[1] * math.cos(2.0 * math.pi / 15.0), rel=1e-9)
