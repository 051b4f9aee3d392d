"""Read and write the coincidence counts as json.

Each record is a dictionary with keys "h_deg", "q_deg", "kind", "counts" and
"exposure".
"""
from json import dump, load
from logging import getLogger

from ..measurement import CountRecord, MeasurementSetting
from ..utils.exceptions import UnrecognizedFormat
from .utils import atomic_open

lg = getLogger(__name__)

FIELDS = ('h_deg', 'q_deg', 'kind', 'counts', 'exposure')


def write_counts(records, filename):
    """Write the count records to a json file.

    Parameters
    ----------
    records : list of CountRecord
        records to write
    filename : path to file
        json file. It will happily overwrite any existing file.
    """
    out = [{'h_deg': r.setting.h,
            'q_deg': r.setting.q,
            'kind': r.setting.kind,
            'counts': r.counts,
            'exposure': r.exposure,
            } for r in records]

    with atomic_open(filename) as f:
        dump(out, f, indent=2)


def read_counts(filename):
    """Read the count records from a json file.

    Parameters
    ----------
    filename : path to file
        json file, written by write_counts

    Returns
    -------
    list of CountRecord

    Raises
    ------
    FileNotFoundError
        if the file does not exist
    UnrecognizedFormat
        if the records don't have the expected fields or values
    """
    with open(filename, 'r', encoding='utf-8') as f:
        orig = load(f)

    if not isinstance(orig, list):
        raise UnrecognizedFormat('Counts should be a list of records')

    records = []
    for one in orig:
        if not isinstance(one, dict):
            raise UnrecognizedFormat('Each record should be a dictionary, not '
                                     + repr(one))
        missing = [x for x in FIELDS if x not in one]
        if missing:
            raise UnrecognizedFormat('Record is missing ' + ', '.join(missing))
        try:
            setting = MeasurementSetting(one['h_deg'], one['q_deg'],
                                         one['kind'])
            records.append(CountRecord(setting, one['counts'],
                                       one['exposure']))
        except (TypeError, ValueError) as err:
            raise UnrecognizedFormat('Invalid record ' + repr(one) + ': ' +
                                     str(err))

    lg.debug('Read {} records from {}'.format(len(records), filename))
    return records
