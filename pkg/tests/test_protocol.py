import math

import numpy as np
import pytest

from gatediscrim import (
    Gate,
    HypothesisSet,
    ValidationError,
    gate_distance,
    min_copies,
    plan_elimination,
    probe_overlap,
    simulate_elimination,
)
from helpers import haar_unitary

SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)

PAULI_SET = HypothesisSet(gates=(Gate.identity(2), Gate(1j * SX), Gate(1j * SZ)))


def random_set(k: int, rng) -> HypothesisSet:
    return HypothesisSet(
        gates=tuple(Gate(haar_unitary(2, rng, special=True)) for _ in range(k))
    )


def test_hypothesis_set_validation():
    with pytest.raises(ValidationError):
        HypothesisSet(gates=(Gate.identity(2),))  # k < 2
    with pytest.raises(ValidationError):
        HypothesisSet(gates=(Gate.identity(2), np.eye(2)))  # not a Gate
    with pytest.raises(ValidationError):
        HypothesisSet(gates=(Gate.identity(3), Gate.identity(3)))  # wrong dim
    with pytest.raises(ValidationError):
        HypothesisSet(gates=(Gate.identity(2), Gate(np.diag([1.0, -1.0]))))  # not special
    u = Gate(haar_unitary(2, np.random.default_rng(1), special=True))
    with pytest.raises(ValidationError):
        HypothesisSet(gates=(u, u))  # coincident pair
    assert len(PAULI_SET) == 3


def test_plan_shape_and_orthogonal_images():
    rng = np.random.default_rng(2)
    for k in (2, 3, 4, 5):
        h = random_set(k, rng)
        plan = plan_elimination(h)
        assert len(plan.tests) == k - 1
        for t in plan.tests:
            i, j = t.pair
            assert 0 <= i < j < k
            gi, gj = h.gates[i], h.gates[j]
            assert t.copies == min_copies(gi, gj)
            assert t.copies * gate_distance(gi, gj) >= math.pi / 2 - 1e-9
            # the two hypothesis images of the probe are orthogonal
            assert probe_overlap(gi, gj, t.probe, t.copies) <= 1e-16


def test_plan_picks_most_distant_pair_first():
    # distances: d(1, isx) = d(1, isz) = pi/2, d(isx, isz) = pi/2 -- all tie;
    # lexicographic tie-break means the first test is (0, 1)
    plan = plan_elimination(PAULI_SET)
    assert plan.tests[0].pair == (0, 1)
    # an asymmetric set: the far pair must come first
    h = HypothesisSet(
        gates=(
            Gate.identity(2),
            Gate(np.diag([np.exp(0.2j), np.exp(-0.2j)])),
            Gate(1j * SX),
        )
    )
    first = plan_elimination(h).tests[0].pair
    assert first in [(0, 2), (1, 2)]
    d02 = gate_distance(h.gates[0], h.gates[2])
    d12 = gate_distance(h.gates[1], h.gates[2])
    expect = (0, 2) if d02 >= d12 else (1, 2)
    assert first == expect


def test_pauli_set_always_two_runs():
    for seed in range(50):
        for true_index in (0, 1, 2):
            plan = plan_elimination(PAULI_SET)
            sim = simulate_elimination(plan, PAULI_SET, true_index=true_index, seed=seed)
            assert sim.identified_index == true_index
            assert sim.total_runs == 2
            assert sim.true_in_set


def test_simulation_identifies_truth_random_sets():
    rng = np.random.default_rng(3)
    for trial in range(200):
        k = int(rng.integers(2, 6))
        h = random_set(k, rng)
        true_index = int(rng.integers(0, k))
        plan = plan_elimination(h)
        sim = simulate_elimination(plan, h, true_index=true_index, seed=trial)
        assert sim.identified_index == true_index
        assert len(sim.trace) == k - 1
        assert sim.total_runs == sum(r.copies for r in sim.trace)
        # the true gate is never discarded, and every record matches its plan
        discarded = [r.discarded for r in sim.trace]
        assert true_index not in discarded
        assert len(set(discarded)) == k - 1
        for r in sim.trace:
            assert r.copies == min_copies(h.gates[r.pair[0]], h.gates[r.pair[1]])
            assert r.discarded in r.pair


def test_adaptive_replanning_consistency():
    # every tested pair must consist of gates still alive at that round
    rng = np.random.default_rng(4)
    for trial in range(50):
        k = 5
        h = random_set(k, rng)
        true_index = int(rng.integers(0, k))
        sim = simulate_elimination(plan_elimination(h), h, true_index=true_index, seed=trial)
        alive = set(range(k))
        for r in sim.trace:
            assert set(r.pair) <= alive
            alive.discard(r.discarded)
        assert alive == {sim.identified_index}


def test_out_of_set_true_gate():
    rng = np.random.default_rng(5)
    stranger = Gate(haar_unitary(2, rng, special=True))
    plan = plan_elimination(PAULI_SET)
    sim = simulate_elimination(plan, PAULI_SET, true_gate=stranger, seed=9)
    assert not sim.true_in_set
    assert sim.identified_index in range(3)
    assert len(sim.trace) == 2


def test_simulate_argument_validation():
    plan = plan_elimination(PAULI_SET)
    with pytest.raises(ValidationError):
        simulate_elimination(plan, PAULI_SET, seed=0)  # neither
    with pytest.raises(ValidationError):
        simulate_elimination(
            plan, PAULI_SET, true_index=0, true_gate=Gate.identity(2), seed=0
        )  # both
    with pytest.raises(ValidationError):
        simulate_elimination(plan, PAULI_SET, true_index=7, seed=0)
    with pytest.raises(ValidationError):
        simulate_elimination(plan, PAULI_SET, true_gate=Gate.identity(3), seed=0)


def test_simulation_deterministic_given_seed():
    rng = np.random.default_rng(6)
    h = random_set(4, rng)
    plan = plan_elimination(h)
    a = simulate_elimination(plan, h, true_index=2, seed=11)
    b = simulate_elimination(plan, h, true_index=2, seed=11)
    assert a == b


def test_povm_of_planned_test():
    plan = plan_elimination(PAULI_SET)
    elems = plan.tests[0].povm()
    assert len(elems) == 2
    total = elems[0] + elems[1]
    assert np.abs(total - np.eye(total.shape[0])).max() <= 1e-10
    for e in elems:
        assert np.linalg.eigvalsh(e).min() >= -1e-10


def test_close_pair_uses_many_copies():
    # a barely-rotated gate forces a large copy count; the structured probe
    # representation keeps this cheap
    a = 0.011
    h = HypothesisSet(
        gates=(Gate.identity(2), Gate(np.diag([np.exp(1j * a), np.exp(-1j * a)])))
    )
    n = min_copies(*h.gates)
    assert n == math.ceil(math.pi / (2 * a))
    assert n > 100
    sim = simulate_elimination(plan_elimination(h), h, true_index=1, seed=3)
    assert sim.identified_index == 1
    assert sim.total_runs == n
