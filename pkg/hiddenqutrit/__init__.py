"""
Hiddenqutrit main module
"""
from os import path

here = path.abspath(path.dirname(__file__))
with open(path.join(here, 'VERSION')) as f:
    __version__ = f.read().strip()

from .hilbert import (FullDensityMatrix, FullTwoPhotonState, HiddenModeBasis,
                      SinglePhotonMode, born_full, gaussian_overlap,
                      mode_pair_from_delay, partial_trace_hidden, symmetrize)
from .polarization import (JonesUnitary, PureVisibleState,
                           VisibleDensityMatrix, apply_unitary,
                           collective_dephasing, noon_target,
                           product_to_coupled, two_photon_unitary,
                           waveplate_unitary)
from .measurement import (CountRecord, MeasurementSetting, born_probability,
                          detection_operator, simulate_counts,
                          table1_settings)
from .tomography import (DesignMatrix, TomographyResult, build_design_matrix,
                         linear_reconstruct, mle_reconstruct,
                         naive_symmetric_reconstruct, predict_rates)
from .metrics import (PopulationSummary, concurrence, fidelity, populations,
                      purity)
