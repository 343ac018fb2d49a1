"""Sequential elimination among a finite set of candidate qubit gates.

Each round perfectly discriminates the two most-distant surviving
candidates: the probe from `optimal_probe_ncopies` makes the two branch
images orthogonal, so a two-outcome projective measurement removes exactly
one candidate per round and never removes the true gate.  k candidates are
identified in k-1 rounds with certainty.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ValidationError
from .gates import (
    Gate,
    ProbeState,
    _apply_gate_axes,
    _freeze,
    gate_distance,
    min_copies,
    optimal_probe_ncopies,
)


@dataclass(frozen=True, eq=False)
class HypothesisSet:
    """Candidate qubit gates, pairwise distinguishable beyond tolerance."""

    gates: tuple[Gate, ...]

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if len(self.gates) < 2:
            raise ValidationError("need at least two candidate gates")
        for g in self.gates:
            if not isinstance(g, Gate):
                raise ValidationError("hypotheses must be Gate instances")
            if g.dim != 2:
                raise DimensionError("the elimination protocol handles qubit gates only")
            if not g.special:
                raise ValidationError("hypotheses must be special-unitary")
        for i in range(len(self.gates)):
            for j in range(i + 1, len(self.gates)):
                if gate_distance(self.gates[i], self.gates[j]) <= 1e-12:
                    raise ValidationError(
                        f"hypotheses {i} and {j} coincide up to global phase"
                    )

    def __len__(self) -> int:
        return len(self.gates)


@dataclass(frozen=True, eq=False)
class EliminationTest:
    """One pairwise discrimination round.

    `target` is the probe image under candidate `pair[0]`; the measurement
    is the projective pair {P, 1 - P} with P onto `target`.  Landing on P
    rules out `pair[1]` (the images are orthogonal), the complement rules
    out `pair[0]`.
    """

    pair: tuple[int, int]
    copies: int
    probe: ProbeState
    target: ProbeState

    def povm(self, max_dim: int = 4096) -> list[np.ndarray]:
        """Dense two-element projective measurement {P, 1 - P}."""
        v = self.target.to_vector(max_dim)
        proj = np.outer(v, v.conj())
        return [proj, np.eye(v.size) - proj]


@dataclass(frozen=True, eq=False)
class TestPlan:
    """Scheduled rounds, assuming the nominal (second-index) discard each time."""

    tests: tuple[EliminationTest, ...]


@dataclass(frozen=True)
class TestRecord:
    pair: tuple[int, int]
    copies: int
    outcome_target: bool
    discarded: int


@dataclass(frozen=True)
class SimResult:
    """Outcome of a simulated elimination run.

    `true_in_set` is False when the simulation was driven by an out-of-set
    gate; the identification is then unverified by construction.
    """

    identified_index: int
    total_runs: int
    trace: tuple[TestRecord, ...]
    true_in_set: bool


def _apply_copies(gate: Gate, probe: ProbeState) -> ProbeState:
    """Image of a probe under gate^(x)copies (x) 1."""
    if probe.terms is not None:
        new_terms = []
        for coeff, factors in probe.terms:
            mapped = tuple(
                _freeze(gate.matrix @ f) if j < probe.copies else f
                for j, f in enumerate(factors)
            )
            new_terms.append((coeff, mapped))
        return ProbeState(
            copies=probe.copies,
            dim=probe.dim,
            separable=probe.separable,
            ancilla_dim=probe.ancilla_dim,
            terms=tuple(new_terms),
        )
    vec = _apply_gate_axes(probe.vector, gate.matrix, probe.copies, probe.ancilla_dim)
    return ProbeState(
        copies=probe.copies,
        dim=probe.dim,
        separable=probe.separable,
        ancilla_dim=probe.ancilla_dim,
        vector=vec,
    )


def _probe_inner(a: ProbeState, b: ProbeState) -> complex:
    """<a|b> for two probes sharing a factor structure (or both dense)."""
    if a.terms is not None and b.terms is not None:
        total = 0.0 + 0.0j
        for ca, fa in a.terms:
            for cb, fb in b.terms:
                if len(fa) != len(fb):
                    raise DimensionError("probe factor structures differ")
                amp = np.conj(ca) * cb
                for x, y in zip(fa, fb):
                    amp *= np.vdot(x, y)
                    if amp == 0.0:
                        break
                total += amp
        return complex(total)
    if a.vector is not None and b.vector is not None:
        return complex(np.vdot(a.vector, b.vector))
    raise DimensionError("cannot mix dense and product-term probes")


def _most_distant_pair(h: HypothesisSet, surviving: list[int]) -> tuple[int, int]:
    best, best_d = None, -1.0
    for ai in range(len(surviving)):
        for bi in range(ai + 1, len(surviving)):
            i, j = surviving[ai], surviving[bi]
            d = gate_distance(h.gates[i], h.gates[j])
            if d > best_d:
                best, best_d = (i, j), d
    return best


def _build_test(h: HypothesisSet, i: int, j: int) -> EliminationTest:
    gi, gj = h.gates[i], h.gates[j]
    n = min_copies(gi, gj)
    probe = optimal_probe_ncopies(gi, gj)
    return EliminationTest(
        pair=(i, j), copies=n, probe=probe, target=_apply_copies(gi, probe)
    )


def plan_elimination(h: HypothesisSet) -> TestPlan:
    """Greedy schedule: test the most-distant surviving pair, k-1 rounds total.

    The static plan assumes each round discards the second index of its
    pair; the simulator re-plans whenever an actual outcome diverges.
    """
    surviving = list(range(len(h)))
    tests = []
    while len(surviving) > 1:
        i, j = _most_distant_pair(h, surviving)
        tests.append(_build_test(h, i, j))
        surviving.remove(j)
    return TestPlan(tests=tuple(tests))


def simulate_elimination(
    plan: TestPlan,
    h: HypothesisSet,
    true_index: int | None = None,
    seed: int = 0,
    true_gate: Gate | None = None,
) -> SimResult:
    """Run the elimination rounds against a concrete true gate.

    Outcomes are sampled from the exact measurement probabilities.  Exactly
    one of `true_index` / `true_gate` must be given; an out-of-set
    `true_gate` is allowed (robustness studies) and flagged in the result.
    Planned tests are consumed while their pairs survive; otherwise the
    round is re-planned greedily among the survivors.
    """
    if (true_index is None) == (true_gate is None):
        raise ValidationError("give exactly one of true_index or true_gate")
    if true_index is not None:
        if not 0 <= true_index < len(h):
            raise ValidationError(f"true_index {true_index} out of range")
        g_true = h.gates[true_index]
        in_set = True
    else:
        if not isinstance(true_gate, Gate) or true_gate.dim != 2:
            raise ValidationError("true_gate must be a qubit Gate")
        g_true = true_gate
        in_set = False
    rng = np.random.default_rng(seed)
    surviving = list(range(len(h)))
    pending = list(plan.tests)
    records: list[TestRecord] = []
    total_runs = 0
    while len(surviving) > 1:
        test = None
        while pending:
            cand = pending.pop(0)
            if cand.pair[0] in surviving and cand.pair[1] in surviving:
                test = cand
                break
        if test is None:
            test = _build_test(h, *_most_distant_pair(h, surviving))
        i, j = test.pair
        evolved = _apply_copies(g_true, test.probe)
        p_target = min(1.0, abs(_probe_inner(test.target, evolved)) ** 2)
        outcome_target = bool(rng.random() < p_target)
        discarded = j if outcome_target else i
        surviving.remove(discarded)
        total_runs += test.copies
        records.append(
            TestRecord(
                pair=test.pair,
                copies=test.copies,
                outcome_target=outcome_target,
                discarded=discarded,
            )
        )
    return SimResult(
        identified_index=surviving[0],
        total_runs=total_runs,
        trace=tuple(records),
        true_in_set=in_set,
    )
