from csv import reader
from json import dump
from os import stat, umask

from numpy.random import default_rng
from numpy.testing import assert_allclose
from pytest import raises

from hiddenqutrit.ioqutrit import (read_counts, read_matrix, write_bars,
                                   write_counts, write_matrix, write_result,
                                   write_sweep)
from hiddenqutrit.measurement import simulate_counts, table1_settings
from hiddenqutrit.polarization import VisibleDensityMatrix, noon_target
from hiddenqutrit.tomography import linear_reconstruct
from hiddenqutrit.utils import (UnrecognizedFormat,
                                random_visible_density_matrix)

from .paths import (bars_im_file, bars_re_file, counts_bad_file, counts_file,
                    matrix_file, result_file, sweep_file)


rng = default_rng(1883)


def test_counts():
    rho = random_visible_density_matrix(rng)
    records = simulate_counts(rho, table1_settings(), 1e3, seed=0,
                              exposure=[1.5] * 10)
    write_counts(records, counts_file)
    assert read_counts(counts_file) == records


def test_counts_missing_field():
    with counts_bad_file.open('w') as f:
        dump([{'h_deg': 0, 'q_deg': 0, 'kind': 'HH'}], f)
    with raises(UnrecognizedFormat):
        read_counts(counts_bad_file)


def test_counts_not_list():
    with counts_bad_file.open('w') as f:
        dump({'h_deg': 0}, f)
    with raises(UnrecognizedFormat):
        read_counts(counts_bad_file)


def test_counts_not_dict():
    with counts_bad_file.open('w') as f:
        dump([1, 2, 3], f)
    with raises(UnrecognizedFormat):
        read_counts(counts_bad_file)


def test_counts_invalid_value():
    record = {'h_deg': 0, 'q_deg': 0, 'kind': 'HH', 'counts': 10,
              'exposure': None}
    with counts_bad_file.open('w') as f:
        dump([record], f)
    with raises(UnrecognizedFormat):
        read_counts(counts_bad_file)

    record['exposure'] = 1.
    record['kind'] = 'VH'
    with counts_bad_file.open('w') as f:
        dump([record], f)
    with raises(UnrecognizedFormat):
        read_counts(counts_bad_file)


def test_counts_permissions():
    write_counts(simulate_counts(noon_target().density_matrix(),
                                 table1_settings(), 1e3, seed=0), counts_file)
    mask = umask(0)
    umask(mask)
    assert stat(counts_file).st_mode & 0o777 == 0o666 & ~mask


def test_counts_missing_file():
    with raises(FileNotFoundError):
        read_counts(counts_file.with_name('xxx.json'))


def test_matrix():
    rho = random_visible_density_matrix(rng)
    write_matrix(rho, matrix_file)
    assert_allclose(read_matrix(matrix_file).matrix, rho.matrix, atol=1e-15)


def test_matrix_wrong_basis():
    with counts_bad_file.open('w') as f:
        dump({'basis': ['HH', 'HV', 'VH', 'VV'],
              're': [[1, 0, 0, 0]] + [[0] * 4] * 3,
              'im': [[0] * 4] * 4}, f)
    with raises(UnrecognizedFormat):
        read_matrix(counts_bad_file)

    with counts_bad_file.open('w') as f:
        dump([], f)
    with raises(UnrecognizedFormat):
        read_matrix(counts_bad_file)


def test_matrix_linear_result():
    """linear estimates can be read even if they are not positive"""
    records = simulate_counts(noon_target().density_matrix(),
                              table1_settings(), 30, seed=4)
    result = linear_reconstruct(records)
    write_result(result, result_file)
    rho = read_matrix(result_file)
    assert_allclose(rho.matrix, result.estimate.matrix, atol=1e-15)


def test_bars():
    rho = VisibleDensityMatrix(noon_target().density_matrix().matrix)
    write_bars(rho, bars_re_file, bars_im_file)

    with bars_re_file.open(newline='') as f:
        rows = list(reader(f))
    assert rows[0] == ['row', 'HH', 'psi_plus', 'VV', 'psi_minus']
    assert [x[0] for x in rows[1:]] == ['HH', 'psi_plus', 'VV', 'psi_minus']
    assert rows[1][4] == 'NA'
    assert rows[4][1] == 'NA'
    assert rows[4][4] != 'NA'
    assert_allclose(float(rows[1][1]), .5, atol=1e-12)

    with bars_im_file.open(newline='') as f:
        rows = list(reader(f))
    assert sum(x == 'NA' for row in rows for x in row) == 6


def test_sweep():
    write_sweep([(0., 1., 1., 0.), (100., .5, .625, .375)], sweep_file)
    with sweep_file.open(newline='') as f:
        rows = list(reader(f))
    assert rows[0] == ['delay', 'gamma', 'p_psi_plus', 'p_psi_minus']
    assert len(rows) == 3
    assert float(rows[2][3]) == .375
