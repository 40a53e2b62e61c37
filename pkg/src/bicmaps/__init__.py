"""Exact distance-dependent two-point functions of vertex-bicolored planar maps.

The package computes, as truncated formal power series in the black and
white vertex weights, the slice generating functions and two-point
functions of vertex-bicolored planar maps with bounded face degrees, by
four independent routes (nonlinear slice recursions, Hankel/continued
fraction extraction, closed-form parametrizations, hard-dimer
reconstruction) that cross-validate each other exactly.
"""

__version__ = "0.1.0"

from .rational import Rat, rat
from .series import MSeries, SeriesRing
from .slices import FaceWeights, ladder_solve, tail_solve, twopoint_from_ladder

__all__ = [
    "Rat",
    "rat",
    "MSeries",
    "SeriesRing",
    "FaceWeights",
    "ladder_solve",
    "tail_solve",
    "twopoint_from_ladder",
    "__version__",
]
