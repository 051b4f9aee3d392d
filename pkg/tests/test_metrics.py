from numpy import diag, sqrt
from numpy.random import default_rng
from numpy.testing import assert_allclose
from pytest import raises

from hiddenqutrit.metrics import (PopulationSummary, concurrence, fidelity,
                                  metrics_report, populations, purity,
                                  uhlmann_fidelity)
from hiddenqutrit.polarization import (PureVisibleState, VisibleDensityMatrix,
                                       apply_unitary, basis_state,
                                       maximally_mixed, noon_target)
from hiddenqutrit.utils import (random_jones_unitary,
                                random_visible_density_matrix)


rng = default_rng(1955)

NOON = noon_target().density_matrix()
PSI_PLUS = basis_state('psi_plus').density_matrix()
PSI_MINUS = basis_state('psi_minus').density_matrix()


def test_fidelity_noon():
    assert_allclose(fidelity(NOON, noon_target()), 1, atol=1e-12)
    assert_allclose(fidelity(PSI_PLUS, noon_target()), 0, atol=1e-12)
    assert_allclose(fidelity(maximally_mixed(), noon_target()), .25,
                    atol=1e-12)


def test_fidelity_phase():
    t = PureVisibleState(1j * noon_target().amplitudes)
    assert_allclose(fidelity(NOON, t), 1, atol=1e-12)


def test_concurrence_bell():
    for rho in (NOON, PSI_PLUS, PSI_MINUS):
        assert_allclose(concurrence(rho), 1, atol=1e-6)


def test_concurrence_separable():
    assert_allclose(concurrence(basis_state('HH').density_matrix()), 0,
                    atol=1e-6)
    assert_allclose(concurrence(maximally_mixed()), 0, atol=1e-6)

    rho = VisibleDensityMatrix(diag([.5, 0, .5, 0]))
    assert_allclose(concurrence(rho), 0, atol=1e-6)


def test_concurrence_distinguishable():
    """psi_plus and psi_minus in equal parts have no entanglement"""
    rho = VisibleDensityMatrix(.5 * PSI_PLUS.matrix + .5 * PSI_MINUS.matrix)
    assert_allclose(concurrence(rho), 0, atol=1e-6)

    rho = VisibleDensityMatrix(.8 * PSI_PLUS.matrix + .2 * PSI_MINUS.matrix)
    assert_allclose(concurrence(rho), .6, atol=1e-6)


def test_concurrence_invariant():
    for _ in range(50):
        rho = random_visible_density_matrix(rng)
        out = apply_unitary(rho, random_jones_unitary(rng))
        assert_allclose(concurrence(out), concurrence(rho), atol=1e-6)
        assert 0 <= concurrence(rho) <= 1


def test_purity():
    assert_allclose(purity(NOON), 1, atol=1e-12)
    assert_allclose(purity(maximally_mixed()), .25, atol=1e-12)

    for _ in range(50):
        rho = random_visible_density_matrix(rng)
        out = apply_unitary(rho, random_jones_unitary(rng))
        assert_allclose(purity(out), purity(rho), atol=1e-10)
        assert .25 - 1e-12 <= purity(rho) <= 1 + 1e-12


def test_populations():
    p = populations(NOON)
    assert isinstance(p, PopulationSummary)
    assert_allclose([p.p_HH, p.p_psi_plus, p.p_VV, p.p_psi_minus],
                    [.5, 0, .5, 0], atol=1e-12)


def test_populations_sum():
    with raises(ValueError):
        PopulationSummary(.5, .5, .5, 0)


def test_uhlmann_fidelity_pure():
    for _ in range(50):
        rho = random_visible_density_matrix(rng)
        assert_allclose(uhlmann_fidelity(rho, NOON),
                        fidelity(rho, noon_target()), atol=1e-6)


def test_uhlmann_fidelity_mixed():
    rho = random_visible_density_matrix(rng)
    assert_allclose(uhlmann_fidelity(rho, rho), 1, atol=1e-6)

    a = VisibleDensityMatrix(diag([.5, .5, 0, 0]))
    b = VisibleDensityMatrix(diag([0, .5, .5, 0]))
    assert_allclose(uhlmann_fidelity(a, b), .25, atol=1e-12)
    assert_allclose(uhlmann_fidelity(a, PSI_MINUS), 0, atol=1e-12)

    c = VisibleDensityMatrix(diag([.5, 0, 0, .5]))
    d = VisibleDensityMatrix(diag([.25, 0, 0, .75]))
    assert_allclose(uhlmann_fidelity(c, d),
                    (sqrt(.125) + sqrt(.375)) ** 2, atol=1e-12)


def test_metrics_report():
    report = metrics_report(NOON)
    assert set(report) == {'fidelity_noon', 'concurrence', 'purity',
                           'populations'}
    assert set(report['populations']) == {'p_HH', 'p_psi_plus', 'p_VV',
                                          'p_psi_minus'}
    assert_allclose(report['fidelity_noon'], 1, atol=1e-12)
