"""First-order GUP corrections to the entanglement of two coupled oscillators."""

from .closed_form import (EntropyKind, EntropyResult, eof, entropy, purity, renyi,
                          trace_power, trace_power_continued)
from .model import (NormalModes, OscillatorConfig, ground_energy, minimal_length,
                    normal_modes, single_mode_energy)
from .reduced_state import KernelCoefficients, kernel_coefficients, kernel_eval
from .series import Series1

__all__ = [
    "EntropyKind", "EntropyResult", "KernelCoefficients", "NormalModes",
    "OscillatorConfig", "Series1", "entropy", "eof", "ground_energy",
    "kernel_coefficients", "kernel_eval", "minimal_length", "normal_modes",
    "purity", "renyi", "single_mode_energy", "trace_power", "trace_power_continued",
]
