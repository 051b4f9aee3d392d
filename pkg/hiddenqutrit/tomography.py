"""Module to reconstruct the visible density matrix from coincidence counts.

The state has 10 real parameters: the Hermitian 3x3 block on the symmetric
subspace (9) and the population of psi_minus (1). The unknown pair flux is
estimated together with the state.

There are three reconstructions:
    - linear : least-squares inversion of the Born rule (not always positive)
    - mle : maximum likelihood with Poisson statistics, positive by
      construction
    - naive : least-squares inversion which assumes indistinguishable photons
      (psi_minus is forced to zero)
"""
from logging import getLogger

from numpy import (array, asarray, diag, einsum, exp, eye, log, maximum,
                   sqrt, trace, zeros)
from numpy.linalg import LinAlgError, eigh, lstsq, matrix_rank, norm
from scipy.linalg import cholesky
from scipy.optimize import minimize
from scipy.special import xlogy

from .measurement import detection_operator, probabilities
from .polarization import (ANTISYMMETRIC, BASIS_LABELS, SYMMETRIC,
                           VisibleDensityMatrix, depolarize, maximally_mixed)
from .settings import DEFAULTS
from .utils.exceptions import (IncompleteDesign, InvalidState,
                               ReconstructionError)

lg = getLogger(__name__)

N_PARAMS = 10
# (row, column) of the off-diagonal entries of the symmetric block
OFF_DIAGONAL = ((0, 1), (0, 2), (1, 2))
# (row, column) of the complex entries of the Cholesky factor
LOWER = ((1, 0), (2, 0), (2, 1))
P_FLOOR = 1e-15
RANK_TOLERANCE = 1e-9
GTOL = 1e-9

REVERSAL = eye(3)[::-1]


class DesignMatrix:
    """Linear map from the 10 state parameters to the probability of each
    setting.

    Parameters
    ----------
    settings : list of MeasurementSetting
        settings, one per row
    matrix : ndarray
        (n_settings, 10) real matrix

    Notes
    -----
    The columns are, in order: HH, psi_plus and VV populations, the real parts
    of the HH/psi_plus, HH/VV, psi_plus/VV coherences, their imaginary parts,
    and the psi_minus population.
    """
    def __init__(self, settings, matrix):
        self.settings = list(settings)
        self.matrix = matrix

    def __len__(self):
        return len(self.settings)

    @property
    def rank(self):
        return int(matrix_rank(self.matrix, tol=RANK_TOLERANCE))

    @property
    def symmetric(self):
        """Columns of the symmetric block only (the first 9)."""
        return self.matrix[:, :N_PARAMS - 1]


class TomographyResult:
    """Reconstructed visible density matrix with the diagnostics.

    Parameters
    ----------
    estimate : instance of VisibleDensityMatrix
        reconstructed state
    flux_estimate : float
        estimated number of pairs per unit of exposure
    method : str
        'linear', 'mle' or 'naive'
    nll : float
        Poisson negative log-likelihood of the records (without the constant
        log(n!) term)
    iterations : int
        number of iterations of the optimizer (0 for linear methods)
    residual_norm : float
        norm of the difference between observed and predicted rates
    psd_projected : bool
        if the linear estimate was projected onto positive matrices
    """
    def __init__(self, estimate, flux_estimate, method, nll=None,
                 iterations=0, residual_norm=None, psd_projected=False):
        self.estimate = estimate
        self.flux_estimate = flux_estimate
        self.method = method
        self.nll = nll
        self.iterations = iterations
        self.residual_norm = residual_norm
        self.psd_projected = psd_projected

    def __repr__(self):
        return ('TomographyResult(method={}, flux={:.4g}, {})'
                ''.format(self.method, self.flux_estimate, self.estimate))

    def to_dict(self):
        rho = self.estimate.matrix
        return {'basis': list(BASIS_LABELS),
                're': rho.real.tolist(),
                'im': rho.imag.tolist(),
                'flux': float(self.flux_estimate),
                'method': self.method,
                'nll': None if self.nll is None else float(self.nll),
                'iterations': int(self.iterations),
                'residual_norm': (None if self.residual_norm is None
                                  else float(self.residual_norm)),
                'psd_projected': bool(self.psd_projected),
                }


def build_design_matrix(settings):
    """Compute the design matrix of a list of settings.

    Parameters
    ----------
    settings : list of MeasurementSetting
        settings (at least one)

    Returns
    -------
    instance of DesignMatrix
        row s, column k is Tr[E_k O_s]

    Raises
    ------
    IncompleteDesign
        if there are 10 settings or more, but they don't reach rank 10
    """
    if len(settings) == 0:
        raise ValueError('You need at least one setting')

    matrix = array([_design_row(detection_operator(s)) for s in settings])
    design = DesignMatrix(settings, matrix)

    rank = design.rank
    lg.debug('Design matrix with {} settings has rank {}'.format(len(settings),
                                                                 rank))
    if len(settings) >= N_PARAMS and rank < N_PARAMS:
        raise IncompleteDesign('Design matrix with {} settings has rank {}, '
                               'it should be {}'.format(len(settings), rank,
                                                        N_PARAMS))
    return design


def _design_row(O):
    row = zeros(N_PARAMS)
    row[:3] = diag(O)[:3].real
    for k, (i, j) in enumerate(OFF_DIAGONAL):
        row[3 + k] = 2 * O[i, j].real
        row[6 + k] = 2 * O[i, j].imag
    row[9] = O[3, 3].real
    return row


def _matrix_from_vector(x):
    """Hermitian block matrix from the 10 parameters (see DesignMatrix)."""
    m = zeros((4, 4), dtype=complex)
    m[0, 0], m[1, 1], m[2, 2] = x[:3]
    for k, (i, j) in enumerate(OFF_DIAGONAL):
        m[i, j] = x[3 + k] + 1j * x[6 + k]
        m[j, i] = x[3 + k] - 1j * x[6 + k]
    m[3, 3] = x[9]
    return m


def _check_records(records):
    if len(records) == 0:
        raise ValueError('You need at least one count record')
    if sum(r.counts for r in records) == 0:
        raise ValueError('All the counts are zero')


def _solve(records, n_columns):
    """Least-squares solution of the Born rule on the rates."""
    _check_records(records)
    design = build_design_matrix([r.setting for r in records])
    A = design.matrix[:, :n_columns]
    rank = int(matrix_rank(A, tol=RANK_TOLERANCE))
    if rank < n_columns:
        raise IncompleteDesign('Design matrix has rank {}, it should be {}'
                               ''.format(rank, n_columns))

    rates = array([r.rate for r in records])
    y = lstsq(A, rates, rcond=None)[0]
    return y, norm(rates - A @ y)


def linear_reconstruct(records, psd=False):
    """Reconstruct the state by linear inversion.

    Parameters
    ----------
    records : list of CountRecord
        counts, with a design of rank 10
    psd : bool
        if True, project the estimate onto positive matrices (see
        project_psd)

    Returns
    -------
    instance of TomographyResult
        the estimate has trace 1, but it might have negative eigenvalues if
        psd is False

    Raises
    ------
    ValueError
        if all the counts are zero
    IncompleteDesign
        if the design does not have rank 10
    ReconstructionError
        if the estimated flux is not positive
    """
    y, residual = _solve(records, N_PARAMS)
    flux = y[0] + y[1] + y[2] + y[9]
    if flux <= 0:
        raise ReconstructionError('Linear inversion gives a non-positive flux '
                                  '({:.3e})'.format(flux))

    m = _matrix_from_vector(y / flux)
    estimate = VisibleDensityMatrix((m + m.conj().T) / 2, check_positive=False)
    if psd:
        estimate = project_psd(estimate)

    nll = negative_log_likelihood(records, estimate, flux)
    lg.info('Linear reconstruction: flux {:.4g}, residual {:.3e}'.format(
        flux, residual))
    return TomographyResult(estimate, flux, 'linear', nll=nll, iterations=0,
                            residual_norm=residual, psd_projected=psd)


def naive_symmetric_reconstruct(records):
    """Reconstruct the state assuming that the photons are indistinguishable.

    Parameters
    ----------
    records : list of CountRecord
        counts

    Returns
    -------
    instance of TomographyResult
        the estimate has psi_minus population exactly 0

    Notes
    -----
    The model only has the 9 parameters of the symmetric block. When part of
    the population is in psi_minus, the fit assigns it to the symmetric states
    and predicts the wrong rates in other bases.
    """
    y, residual = _solve(records, N_PARAMS - 1)
    flux = y[0] + y[1] + y[2]
    if flux <= 0:
        raise ReconstructionError('Naive inversion gives a non-positive flux '
                                  '({:.3e})'.format(flux))

    x = zeros(N_PARAMS)
    x[:N_PARAMS - 1] = y / flux
    m = _matrix_from_vector(x)
    estimate = VisibleDensityMatrix((m + m.conj().T) / 2, check_positive=False)

    nll = negative_log_likelihood(records, estimate, flux)
    lg.info('Naive reconstruction: flux {:.4g}, residual {:.3e}'.format(
        flux, residual))
    return TomographyResult(estimate, flux, 'naive', nll=nll, iterations=0,
                            residual_norm=residual)


def project_psd(rho):
    """Closest positive matrix, block by block.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        Hermitian estimate (maybe with negative eigenvalues)

    Returns
    -------
    instance of VisibleDensityMatrix
        eigenvalues of the symmetric block and the psi_minus population are
        clipped at 0, then the trace is set to 1.
    """
    w, v = eigh(rho.symmetric_block)
    w = maximum(w, 0)
    out = zeros((4, 4), dtype=complex)
    out[SYMMETRIC, SYMMETRIC] = (v * w) @ v.conj().T
    out[ANTISYMMETRIC, ANTISYMMETRIC] = max(rho.psi_minus, 0)

    total = trace(out).real
    if total <= 0:
        raise ReconstructionError('Estimate has no positive eigenvalue')
    out /= total
    return VisibleDensityMatrix((out + out.conj().T) / 2)


def negative_log_likelihood(records, estimate, flux):
    """Poisson negative log-likelihood of the records.

    Parameters
    ----------
    records : list of CountRecord
        counts
    estimate : instance of VisibleDensityMatrix
        state
    flux : float
        pairs per unit of exposure

    Returns
    -------
    float
        sum of [lambda - n log(lambda)], with lambda = flux * exposure * p
    """
    p = maximum(probabilities(estimate, [r.setting for r in records]),
                P_FLOOR)
    n = array([r.counts for r in records], dtype=float)
    e = array([r.exposure for r in records])
    lam = flux * e * p
    return float((lam - xlogy(n, lam)).sum())


def likelihood_objective(records, normalize=True):
    """Negative log-likelihood as function of the 11 parameters.

    Parameters
    ----------
    records : list of CountRecord
        counts
    normalize : bool
        if True, the saturated log-likelihood is subtracted and the result is
        divided by the total number of counts, so that it does not depend on
        the scale of the counts

    Returns
    -------
    function
        it takes the parameters (see state_from_params) and returns the value
        and the analytic gradient
    """
    ops = array([detection_operator(r.setting) for r in records])
    n = array([r.counts for r in records], dtype=float)
    e = array([r.exposure for r in records])
    total = n.sum()
    if normalize:
        if total == 0:
            raise ValueError('All the counts are zero')
        offset = (n - xlogy(n, n)).sum()

    def objective(x):
        T = _cholesky_factor(x)
        A = T.conj().T @ T
        tr = trace(A).real
        rho = A / tr

        raw = einsum('ij,sji->s', rho, ops).real
        p = maximum(raw, P_FLOOR)
        flux = exp(x[N_PARAMS])
        lam = flux * e * p
        value = (lam - xlogy(n, lam)).sum()

        w = (1 - n / lam) * flux * e
        # clamped rates do not depend on the state
        w[raw < P_FLOOR] = 0
        G = (einsum('s,sij->ij', w, ops) - (w @ p) * eye(4)) / tr
        TG = T @ G

        grad = zeros(N_PARAMS + 1)
        for k in range(3):
            grad[k] = 2 * TG[k, k].real
        for k, (i, j) in enumerate(LOWER):
            grad[3 + 2 * k] = 2 * TG[i, j].real
            grad[4 + 2 * k] = 2 * TG[i, j].imag
        grad[9] = 2 * TG[3, 3].real
        grad[N_PARAMS] = (lam - n).sum()

        if normalize:
            return (value - offset) / total, grad / total
        return value, grad

    return objective


def _cholesky_factor(x):
    T = zeros((4, 4), dtype=complex)
    T[0, 0], T[1, 1], T[2, 2] = x[:3]
    for k, (i, j) in enumerate(LOWER):
        T[i, j] = x[3 + 2 * k] + 1j * x[4 + 2 * k]
    T[3, 3] = x[9]
    return T


def state_from_params(x):
    """Convert the 11 parameters into state and flux.

    Parameters
    ----------
    x : ndarray
        T00, T11, T22, Re T10, Im T10, Re T20, Im T20, Re T21, Im T21, T33
        and log(flux)

    Returns
    -------
    instance of VisibleDensityMatrix
        T^dagger T / Tr[T^dagger T], where T is lower-triangular on the
        symmetric block
    float
        flux
    """
    x = asarray(x, dtype=float)
    if x.shape != (N_PARAMS + 1, ):
        raise ValueError('There should be {} parameters'.format(N_PARAMS + 1))
    T = _cholesky_factor(x)
    A = T.conj().T @ T
    tr = trace(A).real
    if tr == 0:
        raise InvalidState('Parameters give a zero matrix')
    rho = A / tr
    return VisibleDensityMatrix((rho + rho.conj().T) / 2), float(exp(x[-1]))


def params_from_state(rho, flux):
    """Convert state and flux into the 11 parameters.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        state, with full rank
    flux : float
        pairs per unit of exposure, positive

    Returns
    -------
    ndarray
        parameters (see state_from_params)

    Raises
    ------
    InvalidState
        if the symmetric block is singular or psi_minus is empty

    Notes
    -----
    The lower-triangular T such that T^dagger T = rho is obtained from the
    Cholesky factor L of J rho J, where J reverses the order of the basis:
    T = (J L J)^dagger.
    """
    if flux <= 0:
        raise ValueError('Flux should be positive')
    J = REVERSAL
    try:
        L = cholesky(J @ rho.symmetric_block @ J, lower=True)
    except LinAlgError:
        raise InvalidState('Symmetric block should be positive definite')
    if rho.psi_minus <= 0:
        raise InvalidState('psi_minus population should be positive')
    T = (J @ L @ J).conj().T

    x = zeros(N_PARAMS + 1)
    x[:3] = diag(T).real
    for k, (i, j) in enumerate(LOWER):
        x[3 + 2 * k] = T[i, j].real
        x[4 + 2 * k] = T[i, j].imag
    x[9] = sqrt(rho.psi_minus)
    x[N_PARAMS] = log(flux)
    return x


def mle_reconstruct(records, init=None, max_iter=None, tol=None):
    """Reconstruct the state by maximum likelihood.

    Parameters
    ----------
    records : list of CountRecord
        counts, with a design of rank 10
    init : instance of VisibleDensityMatrix, optional
        starting point. If None, it uses the positive linear estimate.
    max_iter : int
        largest number of iterations
    tol : float
        the optimizer stops when the (normalized) negative log-likelihood
        improves less than tol over one iteration

    Returns
    -------
    instance of TomographyResult
        the estimate is positive and it has exact block structure

    Raises
    ------
    ReconstructionError
        if the optimizer reaches max_iter. The best estimate is stored in the
        attribute 'best' of the exception.
    IncompleteDesign
        if the design matrix does not have rank 10
    """
    if max_iter is None:
        max_iter = DEFAULTS['tomography']['max_iter']
    if tol is None:
        tol = DEFAULTS['tomography']['tol']

    _check_records(records)
    rank = build_design_matrix([r.setting for r in records]).rank
    if rank < N_PARAMS:
        raise IncompleteDesign('Design matrix has rank {}, it should be {}'
                               ''.format(rank, N_PARAMS))

    if init is None:
        try:
            init = linear_reconstruct(records, psd=True).estimate
        except (ReconstructionError, InvalidState) as err:
            lg.warning('Linear estimate failed ({}), starting from the '
                       'maximally-mixed state'.format(err))
            init = maximally_mixed()

    init = depolarize(init, DEFAULTS['tomography']['init_mixing'])
    settings = [r.setting for r in records]
    n_total = sum(r.counts for r in records)
    expected = sum(r.exposure * p for r, p in
                   zip(records, probabilities(init, settings)))
    x0 = params_from_state(init, n_total / expected)

    objective = likelihood_objective(records)
    res = minimize(objective, x0, jac=True, method='L-BFGS-B',
                   options={'maxiter': max_iter,
                            'maxfun': max_iter,
                            'ftol': tol,
                            'gtol': GTOL,
                            })
    lg.debug('Optimizer: {} after {} iterations'.format(res.message, res.nit))

    estimate, flux = state_from_params(res.x)
    result = TomographyResult(estimate, flux, 'mle',
                              nll=negative_log_likelihood(records, estimate,
                                                          flux),
                              iterations=res.nit,
                              residual_norm=_residual(records, estimate, flux))

    if res.status == 1:
        raise ReconstructionError('Maximum likelihood did not converge after '
                                  '{} iterations'.format(res.nit), best=result)
    elif not res.success:
        lg.warning('Maximum likelihood stopped: {}'.format(res.message))

    lg.info('Maximum likelihood: flux {:.4g} after {} iterations'.format(
        flux, res.nit))
    return result


def _residual(records, estimate, flux):
    rates = array([r.rate for r in records])
    p = probabilities(estimate, [r.setting for r in records])
    return float(norm(rates - flux * p))


def predict_rates(result, settings):
    """Predict the rates of a list of settings.

    Parameters
    ----------
    result : instance of TomographyResult
        reconstruction
    settings : list of MeasurementSetting
        settings

    Returns
    -------
    list of float
        flux_estimate times the Born probability of each setting
    """
    p = probabilities(result.estimate, settings)
    return [float(result.flux_estimate * x) for x in p]
