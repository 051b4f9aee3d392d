"""Module with the visible density matrix of two photons in one spatial mode
and its algebra: change of basis, waveplates, collective unitaries and
collective channels.

The visible density matrix is always written in the coupled basis
[HH, psi_plus, VV, psi_minus], where psi_plus and psi_minus are
(|H1 V2> +/- |V1 H2>) / sqrt(2). The first three states span the symmetric
subspace, psi_minus spans the antisymmetric subspace. Two-photon matrices in
the product basis [HH, HV, VH, VV] are plain numpy arrays.
"""
from logging import getLogger

from numpy import (abs, allclose, array, asarray, cos, diag, exp, eye,
                   kron, outer, pi, radians, sin, sqrt, trace, vdot, zeros)
from numpy.linalg import eigvalsh, norm

from .utils.exceptions import InvalidState

lg = getLogger(__name__)

BASIS_LABELS = ('HH', 'psi_plus', 'VV', 'psi_minus')
PRODUCT_LABELS = ('HH', 'HV', 'VH', 'VV')
SYMMETRIC = slice(0, 3)
ANTISYMMETRIC = 3

SIGMA_X = array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = array([[1, 0], [0, -1]], dtype=complex)

# single-photon polarizations, [H, V] amplitudes
POLARIZATIONS = {'H': array([1, 0], dtype=complex),
                 'V': array([0, 1], dtype=complex),
                 'D': array([1, 1], dtype=complex) / sqrt(2),
                 'A': array([1, -1], dtype=complex) / sqrt(2),
                 'R': array([1, 1j], dtype=complex) / sqrt(2),
                 'L': array([1, -1j], dtype=complex) / sqrt(2),
                 }

# rows are the coupled basis vectors in the product basis
COUPLED_FROM_PRODUCT = array([[1, 0, 0, 0],
                              [0, 1 / sqrt(2), 1 / sqrt(2), 0],
                              [0, 0, 0, 1],
                              [0, 1 / sqrt(2), -1 / sqrt(2), 0]],
                             dtype=complex)

P_SYMMETRIC = diag([1, 1, 1, 0]).astype(complex)
P_ANTISYMMETRIC = diag([0, 0, 0, 1]).astype(complex)

TOLERANCE = 1e-9
UNITARY_TOLERANCE = 1e-12


def _readonly(x):
    x = array(x, dtype=complex)
    x.flags.writeable = False
    return x


def _off_block(matrix):
    """Return the entries coupling the symmetric and antisymmetric subspaces.
    """
    return abs(asarray(matrix)[SYMMETRIC, ANTISYMMETRIC]).max(), \
        abs(asarray(matrix)[ANTISYMMETRIC, SYMMETRIC]).max()


def _zero_off_block(matrix):
    matrix = array(matrix, dtype=complex)
    matrix[SYMMETRIC, ANTISYMMETRIC] = 0
    matrix[ANTISYMMETRIC, SYMMETRIC] = 0
    return matrix


class VisibleDensityMatrix:
    """Density matrix of the visible (polarization) degrees of freedom of two
    photons, after tracing out the hidden degrees of freedom.

    Parameters
    ----------
    entries : ndarray
        4x4 complex matrix in the coupled basis [HH, psi_plus, VV, psi_minus]
    check_positive : bool
        if False, negative eigenvalues are accepted (only for linear
        tomography estimates, which are not guaranteed to be physical)

    Raises
    ------
    InvalidState
        if the matrix is not Hermitian, does not have trace 1, is not positive
        or has coherences between the symmetric and antisymmetric subspaces.

    Notes
    -----
    The coherences between the symmetric and antisymmetric subspaces must be
    exactly zero. Use VisibleDensityMatrix.from_product to convert a matrix in
    the product basis, where these coherences are checked against a tolerance
    and then zeroed.
    """
    def __init__(self, entries, check_positive=True):
        entries = asarray(entries, dtype=complex)
        if entries.shape != (4, 4):
            raise ValueError('Visible density matrix should be 4x4, not ' +
                             str(entries.shape))

        if any(x != 0 for x in _off_block(entries)):
            raise InvalidState('Coherences between symmetric and '
                               'antisymmetric subspaces should be zero')
        if not allclose(entries, entries.conj().T, rtol=0, atol=TOLERANCE):
            raise InvalidState('Visible density matrix is not Hermitian')
        tr = trace(entries)
        if abs(tr - 1) > TOLERANCE:
            raise InvalidState('Visible density matrix has trace {:.12f}'
                               ''.format(tr.real))
        if check_positive:
            smallest = eigvalsh(entries).min()
            if smallest < -TOLERANCE:
                raise InvalidState('Visible density matrix has negative '
                                   'eigenvalue {:.3e}'.format(smallest))

        self._entries = _readonly(entries)

    def __repr__(self):
        pop = ', '.join('{}={:.4f}'.format(k, v) for k, v in
                        zip(BASIS_LABELS, self.populations))
        return 'VisibleDensityMatrix(' + pop + ')'

    @classmethod
    def from_product(cls, matrix, atol=1e-10, check_positive=True):
        """Create the visible density matrix from a matrix in the product basis.

        Parameters
        ----------
        matrix : ndarray
            4x4 matrix in the product basis [HH, HV, VH, VV]
        atol : float
            largest coherence between symmetric and antisymmetric subspaces
            that is considered numerical noise
        check_positive : bool
            see VisibleDensityMatrix

        Returns
        -------
        instance of VisibleDensityMatrix

        Raises
        ------
        InvalidState
            if the coherences between the symmetric and antisymmetric subspace
            are larger than atol (the matrix does not come from bosons)
        """
        coupled = product_to_coupled(matrix)
        residual = max(_off_block(coupled))
        lg.debug('Largest coherence between subspaces: {:.3e}'.format(residual))
        if residual >= atol:
            raise InvalidState('Coherence between symmetric and antisymmetric '
                               'subspaces is {:.3e}'.format(residual))
        coupled = _zero_off_block(coupled)
        coupled = (coupled + coupled.conj().T) / 2
        return cls(coupled, check_positive=check_positive)

    @property
    def matrix(self):
        """Entries in the coupled basis (read-only)."""
        return self._entries

    @property
    def populations(self):
        """Diagonal in the coupled basis, as real vector."""
        return diag(self._entries).real

    @property
    def psi_minus(self):
        """Population of the antisymmetric state psi_minus."""
        return self._entries[ANTISYMMETRIC, ANTISYMMETRIC].real

    @property
    def symmetric_block(self):
        """3x3 block on the symmetric subspace (not renormalized)."""
        return self._entries[SYMMETRIC, SYMMETRIC]

    @property
    def eigenvalues(self):
        return eigvalsh(self._entries)

    def to_product(self):
        """Return the matrix in the product basis [HH, HV, VH, VV]."""
        return coupled_to_product(self._entries)


class JonesUnitary:
    """Unitary acting on the polarization of a single photon.

    Parameters
    ----------
    entries : ndarray
        2x2 complex matrix, in the basis [H, V]

    Raises
    ------
    InvalidState
        if the matrix is not unitary.
    """
    def __init__(self, entries):
        entries = asarray(entries, dtype=complex)
        if entries.shape != (2, 2):
            raise ValueError('Jones matrix should be 2x2')
        if not allclose(entries @ entries.conj().T, eye(2), rtol=0,
                        atol=UNITARY_TOLERANCE):
            raise InvalidState('Jones matrix is not unitary')
        self._entries = _readonly(entries)

    def __matmul__(self, other):
        return JonesUnitary(self._entries @ other.matrix)

    def __call__(self, polarization):
        return self._entries @ asarray(polarization, dtype=complex)

    @property
    def matrix(self):
        return self._entries

    @property
    def dagger(self):
        return JonesUnitary(self._entries.conj().T)


class PureVisibleState:
    """Pure state of the visible degrees of freedom, as amplitudes in the
    coupled basis [HH, psi_plus, VV, psi_minus].

    Parameters
    ----------
    amplitudes : ndarray
        complex vector of length 4, with norm 1
    """
    def __init__(self, amplitudes):
        amplitudes = asarray(amplitudes, dtype=complex)
        if amplitudes.shape != (4, ):
            raise ValueError('Pure visible state should have 4 amplitudes')
        if abs(norm(amplitudes) - 1) > UNITARY_TOLERANCE:
            raise InvalidState('Pure visible state is not normalized')
        self._amplitudes = _readonly(amplitudes)

    def __repr__(self):
        return 'PureVisibleState(' + ', '.join(
            '{}={:.4f}'.format(k, v) for k, v in zip(BASIS_LABELS,
                                                      self._amplitudes)) + ')'

    @property
    def amplitudes(self):
        return self._amplitudes

    def overlap(self, other):
        """Return <self|other>."""
        return vdot(self._amplitudes, other.amplitudes)

    def density_matrix(self):
        """Return the visible density matrix of the pure state.

        Raises
        ------
        InvalidState
            if the state is a superposition of symmetric and antisymmetric
            components, which has no visible density matrix.
        """
        proj = outer(self._amplitudes, self._amplitudes.conj())
        sym = norm(self._amplitudes[SYMMETRIC])
        anti = abs(self._amplitudes[ANTISYMMETRIC])
        if sym > UNITARY_TOLERANCE and anti > UNITARY_TOLERANCE:
            raise InvalidState('Pure state with both symmetric and '
                               'antisymmetric components')
        return VisibleDensityMatrix(_zero_off_block(proj))


def product_to_coupled(matrix):
    """Convert a two-photon matrix from the product basis [HH, HV, VH, VV] to
    the coupled basis [HH, psi_plus, VV, psi_minus].

    Parameters
    ----------
    matrix : ndarray
        4x4 matrix in the product basis

    Returns
    -------
    ndarray
        4x4 matrix in the coupled basis
    """
    C = COUPLED_FROM_PRODUCT
    return C @ asarray(matrix, dtype=complex) @ C.conj().T


def coupled_to_product(matrix):
    """Convert a two-photon matrix from the coupled basis to the product basis.
    """
    C = COUPLED_FROM_PRODUCT
    return C.conj().T @ asarray(matrix, dtype=complex) @ C


def waveplate_unitary(kind, angle):
    """Jones matrix of a waveplate.

    Parameters
    ----------
    kind : str
        'half' or 'quarter'
    angle : float
        angle of the fast axis, in degrees

    Returns
    -------
    instance of JonesUnitary
        exp[i (retardance / 2) (sigma_z cos 2angle - sigma_x sin 2angle)]

    Notes
    -----
    The retardance is pi for the half-waveplate and pi / 2 for the
    quarter-waveplate. The exponential is evaluated in closed form, using
    exp(i a n) = cos(a) I + i sin(a) n for a unit Pauli vector n.
    """
    if kind == 'half':
        half_retardance = pi / 2
    elif kind == 'quarter':
        half_retardance = pi / 4
    else:
        raise ValueError('Waveplate should be "half" or "quarter", not ' +
                         str(kind))

    two_theta = 2 * radians(angle)
    axis = SIGMA_Z * cos(two_theta) - SIGMA_X * sin(two_theta)
    U = cos(half_retardance) * eye(2) + 1j * sin(half_retardance) * axis
    return JonesUnitary(U)


def rotation_unitary(angle):
    """Rotation of the polarization by angle (in degrees), as JonesUnitary."""
    theta = radians(angle)
    return JonesUnitary([[cos(theta), -sin(theta)],
                         [sin(theta), cos(theta)]])


def two_photon_unitary(U):
    """Collective unitary U x U in the coupled basis.

    Parameters
    ----------
    U : instance of JonesUnitary
        unitary acting on each photon

    Returns
    -------
    ndarray
        4x4 unitary in the coupled basis. It's block-diagonal, with a 3x3 block
        on the symmetric subspace and det(U) on psi_minus.
    """
    return product_to_coupled(kron(U.matrix, U.matrix))


def apply_unitary(rho, U):
    """Apply the same polarization unitary to both photons.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        input state
    U : instance of JonesUnitary
        unitary acting on each photon

    Returns
    -------
    instance of VisibleDensityMatrix
        (U x U) rho (U x U)^dagger
    """
    W = two_photon_unitary(U)
    out = _zero_off_block(W @ rho.matrix @ W.conj().T)
    return VisibleDensityMatrix((out + out.conj().T) / 2)


def collective_dephasing(rho, phase_stdev, axis_angle=0.):
    """Rotate the polarization and apply a random phase, identical for both
    photons, between H and V.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        input state
    phase_stdev : float
        standard deviation of the Gaussian phase, in radians
    axis_angle : float
        polarization rotation applied before dephasing, in degrees

    Returns
    -------
    instance of VisibleDensityMatrix
        state averaged over the phase

    Notes
    -----
    The phase acts as diag(1, exp(i phi)) on each photon, so HH, psi_plus /
    psi_minus and VV pick up the phase 0, phi and 2 phi. The average over a
    Gaussian phase multiplies each coherence by exp(-s ** 2 (n_i - n_j) ** 2 / 2)
    where n = (0, 1, 2, 1) counts the V photons. Populations and psi_minus are
    not affected.
    """
    if phase_stdev < 0:
        raise ValueError('Standard deviation of the phase should be '
                         'non-negative')
    if axis_angle != 0:
        rho = apply_unitary(rho, rotation_unitary(axis_angle))

    n_vertical = array([0, 1, 2, 1])
    delta = n_vertical[:, None] - n_vertical[None, :]
    damping = exp(-phase_stdev ** 2 * delta ** 2 / 2)
    return VisibleDensityMatrix(rho.matrix * damping)


def depolarize(rho, probability):
    """Mix the state with the maximally-mixed state.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        input state
    probability : float
        weight of the maximally-mixed state, between 0 and 1

    Returns
    -------
    instance of VisibleDensityMatrix
    """
    if not 0 <= probability <= 1:
        raise ValueError('Depolarizing probability should be between 0 and 1')
    return VisibleDensityMatrix((1 - probability) * rho.matrix +
                                probability * eye(4) / 4)


def maximally_mixed():
    return VisibleDensityMatrix(eye(4, dtype=complex) / 4)


def noon_target():
    """Return the 2-NOON state (|HH> + |VV>) / sqrt(2)."""
    return PureVisibleState(array([1, 0, 1, 0]) / sqrt(2))


def basis_state(label):
    """Return one of the coupled basis states, by label (see BASIS_LABELS)."""
    if label not in BASIS_LABELS:
        raise ValueError('Unknown basis state ' + str(label))
    amplitudes = zeros(4, dtype=complex)
    amplitudes[BASIS_LABELS.index(label)] = 1
    return PureVisibleState(amplitudes)


def polarization_vector(polarization):
    """Return the [H, V] amplitudes of a label (H, V, D, A, R, L) or of a
    vector, normalized."""
    if isinstance(polarization, str):
        try:
            return POLARIZATIONS[polarization].copy()
        except KeyError:
            raise ValueError('Unknown polarization ' + polarization)

    polarization = asarray(polarization, dtype=complex)
    if polarization.shape != (2, ):
        raise ValueError('Polarization should have 2 amplitudes')
    return polarization / norm(polarization)


def two_photon_state(u, w):
    """Visible state created by one photon in polarization u and one in
    polarization w, in the same spatial and hidden mode.

    Parameters
    ----------
    u, w : str or ndarray
        polarization label or [H, V] amplitudes

    Returns
    -------
    instance of PureVisibleState
        normalized a_u^dagger a_w^dagger |0>

    Notes
    -----
    With R = (H + iV) / sqrt(2) and L = (H - iV) / sqrt(2), the creation
    operators satisfy a_H a_V = i (a_L a_L - a_R a_R) / 2, so that
    two_photon_state('H', 'V') is psi_plus = i (|LL> - |RR>) / sqrt(2).
    """
    u = polarization_vector(u)
    w = polarization_vector(w)
    v = kron(u, w) + kron(w, u)
    v = COUPLED_FROM_PRODUCT @ v
    return PureVisibleState(v / norm(v))
