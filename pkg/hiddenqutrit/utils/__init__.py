"""Package containing additional functions and classes, such as:
    - exceptions
    - simulate (functions to create random states and unitaries, for testing
      purposes)

"""
from .exceptions import (IncompleteDesign, InvalidState, ReconstructionError,
                         UnrecognizedFormat)
from .simulate import (random_full_density_matrix, random_full_state,
                       random_jones_unitary, random_visible_density_matrix)
