import math

import pytest

import casimir_liv as cl


def test_zeta_values():
    assert cl.riemann_zeta(2.0) == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert cl.riemann_zeta(-3.0) == pytest.approx(1 / 120, rel=1e-13)
    with pytest.raises(cl.DomainError):
        cl.riemann_zeta(1.0)


def test_pressure_and_energy():
    assert cl.casimir_pressure(1.0) == pytest.approx(-math.pi**2 / 240, rel=1e-14)
    assert cl.energy_per_area(1.0) == pytest.approx(-math.pi**2 / 720, rel=1e-14)
    assert cl.zeta_energy_per_area(1.0) == pytest.approx(-math.pi**2 / 720, rel=1e-14)
    assert cl.casimir_pressure(2.0, L=0.25) == 1.25 * cl.casimir_pressure(2.0)
    with pytest.raises(ValueError):
        cl.casimir_pressure(0.0)


def test_si_force_on_disk():
    f = cl.casimir_force(1e-7, disk_diameter=1.25e-2, units="SI")
    assert f == pytest.approx(-1.5955e-3, rel=1e-4)


def test_cutoff_oracle_matches_zeta():
    estimate, error = cl.extrapolated_cutoff_energy(1.0)
    assert estimate == pytest.approx(cl.zeta_energy_per_area(1.0), rel=1e-6)
    assert error < 1e-6
    rows = cl.oracle_agreement(0.1, 10.0, 4)
    assert len(rows) == 4 and all(r[-1] for r in rows)


def test_direct_sum_anchor():
    assert cl.direct_regulated_sum(5.0, 1.0) == pytest.approx(cl.closed_form_branch(5.0, 1.0), rel=1e-10)


def test_kappa_and_isotropic_L():
    t = cl.KFTensor.from_representatives([((0, 1, 0, 1), 1e-17), ((1, 2, 1, 2), 1e-17)])
    assert t(1, 0, 1, 0) == 1e-17
    k = cl.kappa_from_kf(t)
    assert k.kappa_DE[0][0] == -2e-17
    assert k.kappa_HB == cl.kappa_HB_brute_force(t)
    assert cl.validate_kf(t)["ok"]

    iso = cl.KappaSet()
    iso.kappa_DE = [[1e-6 if i == j else 0.0 for j in range(3)] for i in range(3)]
    iso.kappa_HB = [[3e-6 if i == j else 0.0 for j in range(3)] for i in range(3)]
    L = cl.liv_factor(iso, cl.FieldStats(E_sq=2.0, B_sq=2.0))
    assert abs(L - 2e-6) < 1e-15


def test_modes():
    modes = cl.enumerate_modes(math.pi, 2.5)
    assert [(bc, n) for bc, n, _, _ in modes][:3] == [("neumann", 0), ("neumann", 1), ("dirichlet", 1)]
    assert cl.mode_frequency("dirichlet", 2, 0.0, math.pi) == pytest.approx(2.0)


def test_preset_bound_and_note():
    r = cl.preset_bound("paper_inputs")
    assert r["L_max"] == pytest.approx(6.27e-14, rel=1e-2)
    assert "8.4 orders" in r["discrepancy_note"]
    direct = cl.liv_upper_bound(1e-12, 1e-8, disk_diameter=1.25e-2)
    assert direct["L_max"] == r["L_max"]
