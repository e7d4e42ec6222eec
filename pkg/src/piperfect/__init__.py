"""Perfect binary codes under weighted Hamming metrics."""

from .core import (
    BitWord,
    ExplicitCode,
    InconsistentInput,
    InfeasibleParameters,
    InstanceTooLarge,
    LengthMismatch,
    LinearCode,
    PiPerfectError,
    TwoValuedProfile,
    WeightVector,
    enumerate_codewords,
    support,
)
from .metric import pi_distance, pi_weight, sphere_enumerate, sphere_size
from .perfect import PerfectnessReport, verify, verify_exhaustive, verify_structural

__version__ = "0.1.0"
