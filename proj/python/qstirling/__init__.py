"""Quantum Stirling heat engine with a squeezed hot reservoir."""

from ._qstirling import (  # noqa: F401
    CyclePerformance,
    CycleResult,
    Medium,
    Reservoir,
    StrokeLedger,
    asymptotics,
    ho,
    run_cycle,
    squeezed_occupancy,
    thermal_occupation,
    tls,
    verify,
)

__all__ = [
    "CyclePerformance",
    "CycleResult",
    "Medium",
    "Reservoir",
    "StrokeLedger",
    "asymptotics",
    "ho",
    "run_cycle",
    "squeezed_occupancy",
    "thermal_occupation",
    "tls",
    "verify",
]
