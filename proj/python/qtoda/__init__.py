"""Bethe Ansatz solver for an open q-deformed Toda chain on a finite lattice.

Thin wrapper around the C++ extension module.
"""

from ._qtoda import (
    BetheSolution,
    ModelParams,
    aw_roots,
    bethe_energies,
    build_toda,
    build_toda_q1,
    conjugate,
    enumerate_partitions,
    gradient_flow,
    hl_polynomial,
    lattice_dimension,
    oracle_spectrum,
    poincare_value,
    q1_verification_json,
    q_pochhammer,
    solve_bethe,
    toda_weight,
    verification_json,
    verify,
    wave_function,
    weights,
)

__all__ = [
    "BetheSolution",
    "ModelParams",
    "aw_roots",
    "bethe_energies",
    "build_toda",
    "build_toda_q1",
    "conjugate",
    "enumerate_partitions",
    "gradient_flow",
    "hl_polynomial",
    "lattice_dimension",
    "oracle_spectrum",
    "poincare_value",
    "q1_verification_json",
    "q_pochhammer",
    "solve_bethe",
    "toda_weight",
    "verification_json",
    "verify",
    "wave_function",
    "weights",
]
