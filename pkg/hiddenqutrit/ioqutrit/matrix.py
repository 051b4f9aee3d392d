"""Read and write visible density matrices (json), reconstruction results
(json) and plot data (csv).
"""
from csv import writer
from json import dump, load
from logging import getLogger

from numpy import array

from ..polarization import ANTISYMMETRIC, BASIS_LABELS, VisibleDensityMatrix
from ..utils.exceptions import UnrecognizedFormat
from .utils import atomic_open

lg = getLogger(__name__)

NA = 'NA'
SWEEP_HEADER = ('delay', 'gamma', 'p_psi_plus', 'p_psi_minus')
# linear estimates might have negative eigenvalues
UNCONSTRAINED_METHODS = ('linear', 'naive')


def matrix_to_dict(rho):
    return {'basis': list(BASIS_LABELS),
            're': rho.matrix.real.tolist(),
            'im': rho.matrix.imag.tolist(),
            }


def write_matrix(rho, filename):
    """Write the visible density matrix to a json file, with keys "basis", "re"
    and "im"."""
    with atomic_open(filename) as f:
        dump(matrix_to_dict(rho), f, indent=2)


def write_result(result, filename):
    """Write a TomographyResult to a json file.

    Parameters
    ----------
    result : instance of TomographyResult
        reconstruction
    filename : path to file
        json file with keys "basis", "re", "im", "flux", "method", "nll",
        "iterations" (and the other diagnostics)
    """
    with atomic_open(filename) as f:
        dump(result.to_dict(), f, indent=2)


def write_report(report, filename):
    """Write a dictionary (metrics, figure data) to a json file."""
    with atomic_open(filename) as f:
        dump(report, f, indent=2)


def read_matrix(filename):
    """Read the visible density matrix from a json file, written by
    write_matrix or write_result.

    Returns
    -------
    instance of VisibleDensityMatrix

    Raises
    ------
    FileNotFoundError
        if the file does not exist
    UnrecognizedFormat
        if the file does not contain a 4x4 matrix in the coupled basis
    """
    with open(filename, 'r', encoding='utf-8') as f:
        orig = load(f)

    if not isinstance(orig, dict) or 're' not in orig or 'im' not in orig:
        raise UnrecognizedFormat('Matrix file should have "re" and "im"')
    if tuple(orig.get('basis', BASIS_LABELS)) != BASIS_LABELS:
        raise UnrecognizedFormat('Matrix should be in the basis ' +
                                 ', '.join(BASIS_LABELS))

    m = array(orig['re'], dtype=float) + 1j * array(orig['im'], dtype=float)
    check_positive = orig.get('method') not in UNCONSTRAINED_METHODS
    return VisibleDensityMatrix(m, check_positive=check_positive)


def write_bars(rho, filename_re, filename_im):
    """Write the real and imaginary parts of the matrix for bar plots.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        state
    filename_re, filename_im : path to file
        csv files with the real and imaginary parts

    Notes
    -----
    The coherences between symmetric and antisymmetric states cannot be
    measured, so they are written as NA (instead of 0).
    """
    for filename, part in ((filename_re, rho.matrix.real),
                           (filename_im, rho.matrix.imag)):
        with atomic_open(filename, newline='') as f:
            csv_file = writer(f)
            csv_file.writerow(('row', ) + BASIS_LABELS)
            for i, label in enumerate(BASIS_LABELS):
                row = []
                for j in range(4):
                    if (i == ANTISYMMETRIC) != (j == ANTISYMMETRIC):
                        row.append(NA)
                    else:
                        row.append(repr(float(part[i, j])))
                csv_file.writerow([label] + row)


def write_sweep(rows, filename):
    """Write the delay sweep to a csv file.

    Parameters
    ----------
    rows : list of tuple
        delay, gamma, population of psi_plus, population of psi_minus
    filename : path to file
        csv file
    """
    with atomic_open(filename, newline='') as f:
        csv_file = writer(f)
        csv_file.writerow(SWEEP_HEADER)
        for row in rows:
            csv_file.writerow([repr(float(x)) for x in row])
