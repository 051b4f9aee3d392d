from numpy import abs, array, diag, eye, exp, kron, outer, sqrt, zeros
from numpy.linalg import eigvalsh
from numpy.random import default_rng
from numpy.testing import assert_allclose, assert_array_equal
from pytest import raises

from hiddenqutrit.metrics import concurrence, fidelity
from hiddenqutrit.polarization import (ANTISYMMETRIC, COUPLED_FROM_PRODUCT,
                                       SIGMA_X, SIGMA_Z, SYMMETRIC,
                                       POLARIZATIONS, JonesUnitary,
                                       PureVisibleState, VisibleDensityMatrix,
                                       apply_unitary, basis_state,
                                       collective_dephasing, coupled_to_product,
                                       depolarize, maximally_mixed, noon_target,
                                       product_to_coupled, two_photon_state,
                                       two_photon_unitary, waveplate_unitary)
from hiddenqutrit.utils import (InvalidState, random_jones_unitary,
                                random_visible_density_matrix)


rng = default_rng(2021)

PSI_PLUS = basis_state('psi_plus').density_matrix()
PSI_MINUS = basis_state('psi_minus').density_matrix()
NOON = noon_target().density_matrix()


def _mix(a, b, p=.5):
    return VisibleDensityMatrix(p * a.matrix + (1 - p) * b.matrix)


def test_visible_density_matrix_off_block():
    rho = eye(4, dtype=complex) / 4
    rho[0, 3] = rho[3, 0] = 1e-14
    with raises(InvalidState):
        VisibleDensityMatrix(rho)


def test_visible_density_matrix_invalid():
    with raises(InvalidState):
        VisibleDensityMatrix(eye(4) / 2)

    with raises(InvalidState):
        VisibleDensityMatrix(diag([1.5, 0, -.5, 0]))

    with raises(ValueError):
        VisibleDensityMatrix(eye(3) / 3)


def test_visible_density_matrix_not_positive_allowed():
    rho = VisibleDensityMatrix(diag([1.5, 0, -.5, 0]), check_positive=False)
    assert rho.eigenvalues.min() < 0


def test_visible_density_matrix_readonly():
    rho = maximally_mixed()
    with raises(ValueError):
        rho.matrix[0, 0] = 1


def test_visible_density_matrix_from_product():
    hv = zeros((4, 4))
    hv[1, 1] = 1
    with raises(InvalidState):
        VisibleDensityMatrix.from_product(hv)

    hv[2, 2] = 1
    rho = VisibleDensityMatrix.from_product(hv / 2)
    assert_allclose(rho.populations, [0, .5, 0, .5])
    assert_allclose(rho.to_product(), hv / 2, atol=1e-15)


def test_jones_unitary():
    with raises(InvalidState):
        JonesUnitary([[1, 0], [0, 2]])

    U = random_jones_unitary(rng)
    assert_allclose((U @ U.dagger).matrix, eye(2), atol=1e-12)


def test_pure_visible_state():
    with raises(InvalidState):
        PureVisibleState([1, 0, 1, 0])

    mixed = PureVisibleState(array([0, 1, 0, 1]) / sqrt(2))
    with raises(InvalidState):
        mixed.density_matrix()


def test_waveplate_half_0():
    U = waveplate_unitary('half', 0)
    assert_allclose(U.matrix, diag([1j, -1j]), atol=1e-15)


def test_waveplate_quarter_45():
    U = waveplate_unitary('quarter', 45)
    assert_allclose(U.matrix, (eye(2) - 1j * SIGMA_X) / sqrt(2), atol=1e-15)


def test_waveplate_half_diagonal():
    """H goes to the diagonal basis (A at +22.5°, D at -22.5°)"""
    H = POLARIZATIONS['H']
    out = waveplate_unitary('half', 22.5)(H)
    assert_allclose(abs(POLARIZATIONS['A'].conj() @ out), 1, atol=1e-12)

    out = waveplate_unitary('half', -22.5)(H)
    assert_allclose(abs(POLARIZATIONS['D'].conj() @ out), 1, atol=1e-12)


def test_waveplate_unknown():
    with raises(ValueError):
        waveplate_unitary('full', 0)


def test_waveplate_unitary_random_angles():
    for angle in rng.uniform(-180, 180, 100):
        for kind in ('half', 'quarter'):
            U = waveplate_unitary(kind, angle).matrix
            assert_allclose(U @ U.conj().T, eye(2), atol=1e-12)


def test_product_to_coupled_identity():
    assert_allclose(product_to_coupled(eye(4)), eye(4), atol=1e-15)


def test_product_to_coupled_hv_vh():
    m = diag([0, 1, 1, 0])
    assert_allclose(product_to_coupled(m), diag([0, 1, 0, 1]), atol=1e-15)


def test_product_to_coupled_hv():
    m = diag([0, 1, 0, 0])
    v = array([0, 1, 0, 1])
    assert_allclose(product_to_coupled(m), outer(v, v) / 2, atol=1e-15)


def test_coupled_to_product_inverse():
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert_allclose(coupled_to_product(product_to_coupled(m)), m, atol=1e-14)


def test_two_photon_unitary_identity():
    assert_allclose(two_photon_unitary(JonesUnitary(eye(2))), eye(4),
                    atol=1e-15)


def test_two_photon_unitary_block_diagonal():
    for _ in range(1000):
        U = random_jones_unitary(rng)
        W = two_photon_unitary(U)
        assert abs(W[SYMMETRIC, ANTISYMMETRIC]).max() < 1e-12
        assert abs(W[ANTISYMMETRIC, SYMMETRIC]).max() < 1e-12
        assert_allclose(W[3, 3], U.matrix[0, 0] * U.matrix[1, 1] -
                        U.matrix[0, 1] * U.matrix[1, 0], atol=1e-12)


def test_two_photon_unitary_noon():
    W = two_photon_unitary(waveplate_unitary('quarter', 45))
    out = W @ array([0, 1, 0, 0])
    assert_allclose(out, -1j * array([1, 0, 1, 0]) / sqrt(2), atol=1e-15)


def test_apply_unitary_noon():
    rho = apply_unitary(PSI_PLUS, waveplate_unitary('quarter', 45))
    assert_allclose(fidelity(rho, noon_target()), 1, atol=1e-10)


def test_apply_unitary_distinguishable_noon():
    rho = apply_unitary(_mix(PSI_PLUS, PSI_MINUS),
                        waveplate_unitary('quarter', 45))
    assert_allclose(fidelity(rho, noon_target()), .5, atol=1e-10)
    assert_allclose(rho.psi_minus, .5, atol=1e-12)
    assert_allclose(concurrence(rho), 0, atol=1e-10)


def test_apply_unitary_spectrum():
    for _ in range(100):
        rho = random_visible_density_matrix(rng)
        U = random_jones_unitary(rng)
        out = apply_unitary(rho, U)
        assert_allclose(eigvalsh(out.matrix), eigvalsh(rho.matrix),
                        atol=1e-10)
        assert_allclose(out.psi_minus, rho.psi_minus, atol=1e-12)
        assert_array_equal(out.matrix[SYMMETRIC, ANTISYMMETRIC], 0)


def test_collective_dephasing_identity():
    rho = random_visible_density_matrix(rng)
    out = collective_dephasing(rho, 0)
    assert_allclose(out.matrix, rho.matrix, atol=1e-15)


def test_collective_dephasing_large():
    rho = collective_dephasing(NOON, 50)
    assert_allclose(rho.matrix, diag([.5, 0, .5, 0]), atol=1e-12)
    assert_allclose(concurrence(rho), 0, atol=1e-10)


def test_collective_dephasing_closed_form():
    s = .7
    rho = random_visible_density_matrix(rng)
    out = collective_dephasing(rho, s)
    assert_allclose(out.populations, rho.populations, atol=1e-15)
    assert_allclose(out.matrix[0, 2], rho.matrix[0, 2] * exp(-2 * s ** 2))
    assert_allclose(out.matrix[0, 1], rho.matrix[0, 1] * exp(-s ** 2 / 2))
    assert_allclose(out.matrix[1, 2], rho.matrix[1, 2] * exp(-s ** 2 / 2))
    assert out.psi_minus == rho.psi_minus


def test_collective_dephasing_negative():
    with raises(ValueError):
        collective_dephasing(NOON, -1)


def test_collective_dephasing_valid():
    for _ in range(100):
        rho = random_visible_density_matrix(rng)
        s, angle = rng.uniform(0, 5), rng.uniform(-90, 90)
        out = collective_dephasing(rho, s, angle)
        assert eigvalsh(out.matrix).min() > -1e-9
        assert_allclose(out.psi_minus, rho.psi_minus, atol=1e-12)


def test_collective_dephasing_composition():
    s1, s2 = .4, 1.1
    rho = random_visible_density_matrix(rng)
    twice = collective_dephasing(collective_dephasing(rho, s1), s2)
    once = collective_dephasing(rho, sqrt(s1 ** 2 + s2 ** 2))
    assert_allclose(twice.matrix, once.matrix, atol=1e-10)


def test_depolarize():
    rho = depolarize(NOON, .04)
    assert_allclose(rho.psi_minus, .01)
    assert_allclose(fidelity(rho, noon_target()), .96 + .01)

    with raises(ValueError):
        depolarize(NOON, 2)


def test_noon_target():
    t = noon_target()
    assert_allclose(abs(t.amplitudes) @ abs(t.amplitudes), 1)
    assert t.amplitudes[3] == 0
    assert_allclose(fidelity(t.density_matrix(), t), 1)


def test_two_photon_state_hv():
    psi = two_photon_state('H', 'V')
    assert_allclose(psi.amplitudes, [0, 1, 0, 0], atol=1e-15)


def test_two_photon_state_circular():
    """psi_plus is i (|LL> - |RR>) / sqrt(2)"""
    LL = two_photon_state('L', 'L').amplitudes
    RR = two_photon_state('R', 'R').amplitudes
    assert_allclose(1j * (LL - RR) / sqrt(2), [0, 1, 0, 0], atol=1e-15)


def test_two_photon_state_same_as_product():
    u = POLARIZATIONS['D']
    psi = two_photon_state(u, u)
    assert_allclose(psi.amplitudes, COUPLED_FROM_PRODUCT @ kron(u, u),
                    atol=1e-15)


def test_basis_state_unknown():
    with raises(ValueError):
        basis_state('DD')


def test_pauli_constants():
    assert_allclose(SIGMA_Z @ SIGMA_Z, eye(2))
