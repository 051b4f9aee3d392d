"""Package to import and export counts, density matrices and plot data.

"""
from .counts import read_counts, write_counts
from .matrix import (read_matrix, write_bars, write_matrix, write_report,
                     write_result, write_sweep)
