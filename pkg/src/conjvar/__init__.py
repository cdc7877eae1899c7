"""Conjugate-variable encodings, transition-probability distances and signal segmentation."""

from .encoding import bloch_from_density, bloch_from_qubit, decode, encode, qubit_distance_surface
from .metrics import (
    angle_relations,
    bhattacharyya_distance,
    classical_distances,
    euclidean_operator_distance,
    fidelity,
    no_name_distance,
    no_name_distance_pure,
    principal_euclidean_distance,
)
from .segmentation import (
    Label,
    SampledSignal,
    SignalLimits,
    classify_distance,
    classify_expectation,
    conjugate_encode,
    decision_regions,
    segment_signal,
)

__version__ = "0.1.0"
