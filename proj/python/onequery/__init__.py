"""Single-query database search simulator (Python bindings)."""

from ._onequery import (
    AncillaState,
    CrossValidationReport,
    DatabaseSpec,
    DeviationStats,
    DomainError,
    ExperimentPlan,
    ExperimentReport,
    MeasurementTally,
    PostStepAmplitudes,
    QueryLedger,
    ResourceError,
    TrialResult,
    UnsupportedError,
    classical_binary_search,
    counts_to_query,
    cross_validate,
    d_matrix,
    decode,
    deviation_stats,
    equal_up_to_global_phase,
    global_d_all,
    global_parity_phase,
    inversion_about_average,
    marginal,
    measurement_distribution,
    parity_answer,
    phase_invert,
    post_step_amplitudes,
    probability_gap,
    quantum_phase_query,
    recommended_eta,
    run_experiment,
    run_trial,
    sample_tally,
    sweep,
    tensor_power,
    to_csv,
    to_json,
    uniform_state,
    xor_oracle_apply,
)

__all__ = [name for name in dir() if not name.startswith("_")]
