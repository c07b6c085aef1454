import math

import pytest

import onequery as oq


def test_uniform_and_post_step():
    assert oq.uniform_state(4) == [0.5] * 4
    out = oq.inversion_about_average(oq.phase_invert(oq.uniform_state(4), [2]))
    assert [abs(a) for a in out] == pytest.approx([0.0, 0.0, 1.0, 0.0], abs=1e-15)
    amps = oq.post_step_amplitudes(16, 1)
    assert amps.marked == 0.6875
    assert amps.unmarked == 0.1875


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        oq.uniform_state(3)
    with pytest.raises(MemoryError):
        oq.tensor_power(oq.uniform_state(4), 3, cap=10)
    with pytest.raises(NotImplementedError):
        oq.classical_binary_search(oq.DatabaseSpec(8, [1, 2]), oq.QueryLedger())


def test_oracle_and_ledger():
    db = oq.DatabaseSpec(4, [2])
    ledger = oq.QueryLedger()
    bits = oq.counts_to_query([2, 5, 8, 5])
    assert bits == [0, 1, 0, 1]
    assert oq.parity_answer(db, bits, ledger) == 0
    oq.quantum_phase_query(oq.uniform_state(4), db, ledger)
    assert ledger.oracle_calls == 2

    ledger = oq.QueryLedger()
    assert oq.classical_binary_search(oq.DatabaseSpec(1024, [777]), ledger) == 777
    assert ledger.classical_calls == 10


def test_ancilla_construction():
    s = oq.uniform_state(8)
    joint = oq.xor_oracle_apply(oq.AncillaState.with_minus_ancilla(s), [3])
    expected = oq.AncillaState.with_minus_ancilla(oq.phase_invert(s, [3]))
    assert joint.amps == pytest.approx(expected.amps, abs=1e-12)


def test_cross_validate_and_marginals():
    report = oq.cross_validate(4, 2, [1, 2])
    assert report.max_probability_discrepancy < 1e-12
    g = oq.tensor_power(oq.uniform_state(4), 3)
    g = oq.global_d_all(4, 3, oq.global_parity_phase(4, 3, g, [1]))
    assert oq.marginal(4, 3, g, 2) == pytest.approx([0, 1, 0, 0], abs=1e-12)


def test_experiment_and_serialization():
    plan = oq.ExperimentPlan(16, [5], oq.recommended_eta(16), seed=7, trials=200)
    report = oq.run_experiment(plan, workers=2)
    assert report.eta == 178
    assert report.success_rate >= 0.99
    assert report.quantum_oracle_calls_per_trial == 1
    assert report.classical_calls == 4

    rows = oq.sweep([8, 16], [1], trials=20, seed=3)
    assert oq.to_csv(rows) == oq.to_csv(oq.sweep([8, 16], [1], trials=20, seed=3, workers=3))
    assert oq.to_json(rows).startswith("[")


def test_sampling_statistics():
    dist = oq.measurement_distribution(
        oq.inversion_about_average(oq.phase_invert(oq.uniform_state(16), [0])))
    tally = oq.sample_tally(dist, 320, 11)
    assert sum(tally.counts) == 320
    assert oq.decode(tally.counts) == (tally.decoded, tally.tie)
    stats = oq.deviation_stats(tally, oq.ExperimentPlan(16, [0], 320, seed=11))
    assert stats.k_ratio == 20.0
    assert math.isfinite(stats.gamma)
    assert oq.probability_gap(16, 8) == pytest.approx(0.0, abs=1e-15)
