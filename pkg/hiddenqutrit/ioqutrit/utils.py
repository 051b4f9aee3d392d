from contextlib import contextmanager
from logging import getLogger
from os import chmod, replace, umask
from pathlib import Path
from tempfile import NamedTemporaryFile

lg = getLogger(__name__)


@contextmanager
def atomic_open(filename, newline=None):
    """Open a file for writing, which appears on disk only when complete.

    Parameters
    ----------
    filename : path to file
        final name of the file
    newline : str, optional
        passed to open (use '' for csv files)

    Notes
    -----
    The content is written to a temporary file in the same folder, which is
    moved to filename at the end. If there is an error, the temporary file is
    removed and filename is not touched.
    The file gets the same permissions as one created with open.
    """
    filename = Path(filename)
    tmp = NamedTemporaryFile('w', encoding='utf-8', newline=newline,
                             dir=str(filename.parent), prefix='.' +
                             filename.name + '.', delete=False)
    try:
        with tmp as f:
            yield f
        chmod(tmp.name, 0o666 & ~_current_umask())
        replace(tmp.name, str(filename))
    except BaseException:
        Path(tmp.name).unlink()
        raise
    lg.info('Writing to ' + str(filename))


def _current_umask():
    mask = umask(0)
    umask(mask)
    return mask
