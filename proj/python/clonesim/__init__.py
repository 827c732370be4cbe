"""Quantum-cloning simulators: three-level emitter ensembles and parametric
down-conversion, with exact optimal-fidelity bounds."""

from ._core import (  # noqa: F401
    CheckResult,
    CutoffTooSmallError,
    FidelityPoint,
    FixedMComponent,
    PdcState,
    Sector,
    Su2Rotation,
    UndefinedMetricError,
    UniversalityReport,
    __version__,
    anticlone_fidelity,
    build_hamiltonian,
    check_names,
    clone_fidelity,
    enumerate_sector,
    evolve_unitary,
    f_clones,
    f_opt,
    f_rand,
    fock_rotation_matrix,
    mean_photon_numbers,
    optimal_fidelity,
    pdc_evolve_numeric,
    pdc_final_state_analytic,
    pdc_overlap,
    pdc_rotated_clone_fidelity,
    photon_distribution,
    run_checks,
    seeded_rotations,
    simulate_time_series,
    universality_check,
)
