"""Discrete-time quantum walks on the line with two-step memory.

Exact simulation of the Hadamard walk with memory, a brute-force path-sum
oracle, closed-form amplitudes, and the classical and memoryless baselines.
"""
from .analysis import (
    compare_walks,
    localization_series,
    peak_locations,
    symmetry_check,
    triangle_equivalence,
)
from .closed_form import AmplitudeQuery, closed_form_amplitude, closed_form_probability
from .combinatorics import (
    Ending,
    compositions_with_ones,
    ones_bounds,
    path_phase,
    path_stats,
    path_sum_amplitude,
)
from .core import (
    Classical,
    Distribution,
    Order1,
    Order2,
    ScaledAmplitude,
    WalkState,
    amplitude_of,
    measure_positions,
    norm_squared,
)
from .engine import (
    DEFAULT,
    SYMMETRIC,
    InitialCondition,
    WalkKind,
    WalkSpec,
    init_state,
    memory_walk,
    run,
    run_distribution,
)
from .operators import (
    HADAMARD,
    SHIFT_CASES,
    CoinSpec,
    ShiftCase,
    apply_coin,
    apply_shift,
    step,
    unitarity_audit,
)

__version__ = "0.1.0"
