"""Unitary gates and their statistical distinguishability.

The measures here answer one question: how well can two unknown unitary
operations be told apart by a single use (or N parallel uses) of the black
box, optimizing over input probe states and measurements?  For qubit gates
the answer is closed form; for higher dimensions it reduces to the minimal
arc covering the eigenphases of the relative gate U1^dag U2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import numkit
from .errors import (
    DimensionError,
    IdenticalGatesError,
    SizeLimitError,
    ValidationError,
)

DEFAULT_TOL = 1e-10
# Gates whose distance falls below this are treated as identical (up to a
# global phase) and admit no discriminating measurement.
IDENTICAL_TOL = 1e-12
# Largest dense dimension materialized for tensor powers and probe vectors.
MAX_TENSOR_DIM = 4096

_HALF_PI = math.pi / 2.0


class Gate:
    """A unitary operation on C^dim, optionally certified special-unitary.

    The matrix is validated on construction (unitarity within `tol`) and
    stored read-only.  `special` defaults to auto-detection via
    |det - 1| <= 1e-8; passing special=True makes the check mandatory.
    The spectral decomposition is computed lazily and cached.
    """

    def __init__(self, matrix, special: bool | None = None, tol: float = DEFAULT_TOL):
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"gate matrix must be square, got {m.shape}")
        if not numkit.validate_unitary(m, tol):
            raise ValidationError("gate matrix is not unitary within tolerance")
        det = complex(np.linalg.det(m))
        if special is None:
            special = abs(det - 1.0) <= 1e-8
        elif special and abs(det - 1.0) > 1e-8:
            raise ValidationError(f"determinant {det!r} is not 1; gate is not special-unitary")
        m = m.copy()
        m.setflags(write=False)
        self.matrix = m
        self.dim = int(m.shape[0])
        self.special = bool(special)
        self._spectral: numkit.UnitaryEigen | None = None

    @classmethod
    def identity(cls, dim: int) -> "Gate":
        return cls(np.eye(dim), special=True)

    @property
    def spectral(self) -> numkit.UnitaryEigen:
        if self._spectral is None:
            self._spectral = numkit.eig_unitary(self.matrix)
        return self._spectral

    def dagger(self) -> "Gate":
        return Gate(self.matrix.conj().T, special=self.special)

    def tensor_power(self, n: int, max_dim: int = MAX_TENSOR_DIM) -> "Gate":
        return Gate(numkit.tensor_power(self.matrix, n, max_dim), special=self.special)

    def __array__(self, dtype=None, copy=None):
        if copy:
            return np.array(self.matrix, dtype=dtype if dtype is not None else complex)
        return self.matrix if dtype is None else self.matrix.astype(dtype, copy=False)

    def __repr__(self) -> str:
        return f"Gate(dim={self.dim}, special={self.special})"


@dataclass(frozen=True)
class GateSU2Params:
    """Angles (theta1, theta2, theta3) coordinatizing a qubit special unitary.

    theta1 in [0, pi/2] mixes the diagonal/off-diagonal magnitudes; theta2
    and theta3 in [0, 2pi) carry the phases.
    """

    theta1: float
    theta2: float
    theta3: float

    def __post_init__(self):
        if not 0.0 <= self.theta1 <= _HALF_PI:
            raise ValidationError(f"theta1={self.theta1!r} outside [0, pi/2]")
        for name in ("theta2", "theta3"):
            val = getattr(self, name)
            if not 0.0 <= val < 2.0 * math.pi:
                raise ValidationError(f"{name}={val!r} outside [0, 2*pi)")


def su2_from_params(params: GateSU2Params) -> Gate:
    """Qubit gate [[cos t1 e^{i t2}, sin t1 e^{i t3}], [-sin t1 e^{-i t3}, cos t1 e^{-i t2}]]."""
    c, s = math.cos(params.theta1), math.sin(params.theta1)
    e2, e3 = np.exp(1j * params.theta2), np.exp(1j * params.theta3)
    m = np.array([[c * e2, s * e3], [-s / e3, c / e2]])
    return Gate(m, special=True)


def _check_pair(u1: Gate, u2: Gate, require_special: bool = True, dim: int | None = None):
    if not isinstance(u1, Gate) or not isinstance(u2, Gate):
        raise ValidationError("expected Gate instances")
    if u1.dim != u2.dim:
        raise DimensionError(f"gate dimensions differ: {u1.dim} vs {u2.dim}")
    if dim is not None and u1.dim != dim:
        raise DimensionError(f"operation requires dimension {dim}, got {u1.dim}")
    if require_special and not (u1.special and u2.special):
        raise ValidationError("operation requires special-unitary gates")


def relative_gate(u1: Gate, u2: Gate) -> Gate:
    """The gate U1^dag U2 whose spectrum controls distinguishability."""
    _check_pair(u1, u2, require_special=False)
    return Gate(u1.matrix.conj().T @ u2.matrix, special=u1.special and u2.special)


def gate_fidelity_su2(u1: Gate, u2: Gate) -> float:
    """Single-use fidelity |tr(U1^dag U2)|^2 / 4 for qubit special unitaries.

    This is the smallest overlap any probe (entangled probes included) can
    retain between the two branches, so 0 means one-shot perfect
    distinguishability.
    """
    _check_pair(u1, u2, dim=2)
    tr = np.trace(u1.matrix.conj().T @ u2.matrix)
    return float(min(1.0, abs(tr) ** 2 / 4.0))


# ---------------------------------------------------------------------------
# Eigenphase arcs


@dataclass(frozen=True)
class ArcResult:
    """Minimal arc of the unit circle covering a set of phases.

    delta is the half-width in [0, pi]; center and the two extreme phases
    are principal values in (-pi, pi].  Every input phase lies within delta
    of the center (circularly).
    """

    delta: float
    center: float
    extremes: tuple[float, float]


def _principal_scalar(x: float) -> float:
    out = math.fmod(x + math.pi, 2.0 * math.pi)
    if out < 0.0:
        out += 2.0 * math.pi
    out -= math.pi
    return math.pi if out <= -math.pi else out


def minimal_covering_arc(phases: Sequence[float]) -> ArcResult:
    """Smallest circular arc containing all the given phases.

    Found by sorting the phases and removing the largest circular gap; the
    arc is the complement of that gap.  Ties between equally large gaps are
    broken toward the smallest center phase.
    """
    ph = np.asarray(phases, dtype=float).reshape(-1)
    if ph.size == 0:
        raise ValidationError("need at least one phase")
    if not np.all(np.isfinite(ph)):
        raise ValidationError("phases must be finite")
    s = np.sort(numkit._principal(ph))
    m = s.size
    if m == 1:
        v = float(s[0])
        return ArcResult(delta=0.0, center=v, extremes=(v, v))
    gaps = np.empty(m)
    gaps[: m - 1] = np.diff(s)
    gaps[m - 1] = s[0] + 2.0 * math.pi - s[m - 1]
    gmax = gaps.max()
    delta = (2.0 * math.pi - gmax) / 2.0
    delta = min(max(delta, 0.0), math.pi)
    best: tuple[float, float, tuple[float, float]] | None = None
    for i in np.flatnonzero(gaps == gmax):
        start = float(s[(i + 1) % m])
        end = float(s[i])
        center = _principal_scalar(start + delta)
        if best is None or center < best[1]:
            best = (delta, center, (start, end))
    return ArcResult(delta=best[0], center=best[1], extremes=best[2])


def convex_min_overlap(phases: Sequence[float]) -> float:
    """min over probability weights w of |sum_k w_k exp(i phase_k)|^2.

    The feasible set is the convex hull of points on the unit circle: the
    minimum is 0 as soon as the phases span a closed half-circle
    (arc half-width >= pi/2), and otherwise sits at the midpoint of the
    chord joining the two extremal phases.
    """
    arc = minimal_covering_arc(phases)
    if arc.delta >= _HALF_PI:
        return 0.0
    a, b = arc.extremes
    amp = 0.5 * abs(np.exp(1j * a) + np.exp(1j * b))
    return float(min(1.0, amp * amp))


def gate_distance(u1: Gate, u2: Gate) -> float:
    """Statistical angle between gates: min(arc half-width, pi/2).

    The arc is the minimal one covering the eigenphases of U1^dag U2.  The
    cap at pi/2 marks perfect distinguishability; for qubits this equals
    arccos(|tr(U1^dag U2)|/2).
    """
    _check_pair(u1, u2)
    rel = relative_gate(u1, u2)
    delta = minimal_covering_arc(rel.spectral.phases).delta
    return min(delta, _HALF_PI)


def gate_fidelity_sud(u1: Gate, u2: Gate) -> float:
    """cos^2 of the gate distance; generalizes gate_fidelity_su2 to any dimension."""
    d = gate_distance(u1, u2)
    if d >= _HALF_PI:
        return 0.0  # perfectly distinguishable; avoid cos(pi/2) rounding dust
    return float(math.cos(d) ** 2)


def min_copies(u1: Gate, u2: Gate) -> int:
    """Fewest parallel uses N with N * distance >= pi/2 (perfect discrimination).

    The ceiling is taken with a 1e-12 slack so that exact integer ratios
    (e.g. distance pi/4 -> 2 copies) do not round up spuriously.
    """
    d = gate_distance(u1, u2)
    if d <= IDENTICAL_TOL:
        raise IdenticalGatesError(
            "gates coincide up to global phase; no copy count discriminates them"
        )
    ratio = _HALF_PI / d
    nearest = round(ratio)
    if nearest >= 1 and abs(ratio - nearest) <= 1e-12:
        return int(nearest)
    return int(math.ceil(ratio))


# ---------------------------------------------------------------------------
# Probe states


def _basis_vec(dim: int, k: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[k] = 1.0
    v.setflags(write=False)
    return v


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = np.asarray(arr, dtype=complex).copy()
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class ProbeState:
    """Pure input state fed (in N copies) through an unknown gate.

    Two storage modes, one of which must be present:

    * ``vector`` -- a dense normalized vector on (C^dim)^(x)copies tensored
      with a C^ancilla_dim ancilla;
    * ``terms`` -- a sum of product terms ``(coeff, factors)`` where the
      first `copies` factors are single-copy vectors of length `dim` and any
      remaining factors make up the ancilla.  This form scales to copy
      counts whose dense dimension is unrepresentable.
    """

    copies: int
    dim: int
    separable: bool
    ancilla_dim: int = 1
    terms: tuple[tuple[complex, tuple[np.ndarray, ...]], ...] | None = None
    vector: np.ndarray | None = None

    def __post_init__(self):
        if self.copies < 1:
            raise ValidationError(f"copies must be >= 1, got {self.copies}")
        if self.dim < 2:
            raise ValidationError(f"single-copy dimension must be >= 2, got {self.dim}")
        if (self.terms is None) == (self.vector is None):
            raise ValidationError("exactly one of terms/vector must be provided")
        if self.terms is not None:
            for coeff, factors in self.terms:
                if len(factors) < self.copies:
                    raise DimensionError("term has fewer factors than copies")
                anc = 1
                for j, f in enumerate(factors):
                    if j < self.copies and f.shape != (self.dim,):
                        raise DimensionError("system factor has wrong dimension")
                    if j >= self.copies:
                        anc *= f.shape[0]
                if anc != self.ancilla_dim:
                    raise DimensionError(
                        f"ancilla factors give dimension {anc}, declared {self.ancilla_dim}"
                    )
            norm2 = _pair_amplitude(self.terms, self.terms, self.copies, None).real
        else:
            vec = _freeze(self.vector)
            object.__setattr__(self, "vector", vec)
            if vec.ndim != 1 or vec.size != self.total_dim:
                raise DimensionError(
                    f"vector length {vec.size} != dim^copies * ancilla_dim = {self.total_dim}"
                )
            norm2 = float(np.vdot(vec, vec).real)
        if abs(norm2 - 1.0) > 1e-10:
            raise ValidationError(f"probe state norm^2 = {norm2!r}, not 1")

    @property
    def total_dim(self) -> int:
        return self.dim**self.copies * self.ancilla_dim

    def to_vector(self, max_dim: int = MAX_TENSOR_DIM) -> np.ndarray:
        """Dense vector of the probe; refuses dimensions above max_dim."""
        if self.total_dim > max_dim:
            raise SizeLimitError(
                f"probe dimension {self.total_dim} exceeds the cap {max_dim}"
            )
        if self.vector is not None:
            return self.vector.copy()
        out = np.zeros(self.total_dim, dtype=complex)
        for coeff, factors in self.terms:
            acc = np.array([coeff])
            for f in factors:
                acc = np.kron(acc, f)
            out += acc
        return out

    def system_density(self, max_dim: int = MAX_TENSOR_DIM) -> np.ndarray:
        """Reduced density matrix on the gate-side (system) factor."""
        vec = self.to_vector(max_dim)
        return numkit.partial_trace_b(vec, dim_a=self.dim**self.copies)


def _pair_amplitude(terms_a, terms_b, copies: int, op: np.ndarray | None) -> complex:
    """<a| op^(x)copies (x) 1 |b> for two product-term expansions."""
    total = 0.0 + 0.0j
    for ca, fa in terms_a:
        for cb, fb in terms_b:
            amp = np.conj(ca) * cb
            for j, (x, y) in enumerate(zip(fa, fb)):
                if op is not None and j < copies:
                    amp *= np.vdot(x, op @ y)
                else:
                    amp *= np.vdot(x, y)
                if amp == 0.0:
                    break
            total += amp
    return complex(total)


def _apply_gate_axes(vec: np.ndarray, m: np.ndarray, copies: int, ancilla_dim: int) -> np.ndarray:
    """Apply m to each of the `copies` system axes of a dense vector."""
    d = m.shape[0]
    shape = (d,) * copies + ((ancilla_dim,) if ancilla_dim > 1 else ())
    t = vec.reshape(shape)
    for ax in range(copies):
        t = np.moveaxis(np.tensordot(m, t, axes=([1], [ax])), 0, ax)
    return t.reshape(-1)


def _tensor_sum_phases(phases: np.ndarray, n: int) -> np.ndarray:
    """Eigenphases of a Kronecker power, ordered to match kron of eigenvectors."""
    acc = np.asarray(phases, dtype=float)
    for _ in range(n - 1):
        acc = (acc[:, None] + phases[None, :]).reshape(-1)
    return acc


def probe_overlap(u1: Gate, u2: Gate, probe: ProbeState, n: int) -> float:
    """Branch overlap |<psi| (U1^dag U2)^(x)n (x) 1 |psi>|^2 for a probe psi.

    This is the quantity whose vanishing makes the two gate hypotheses
    perfectly distinguishable with n parallel uses.  For small dimensions the
    result is cross-checked against the equivalent eigenweight form
    |sum_i w_i exp(i phi_i)|^2 with w_i read off the reduced density matrix.
    """
    _check_pair(u1, u2, require_special=False)
    if not isinstance(probe, ProbeState):
        raise ValidationError("expected a ProbeState")
    if n != probe.copies:
        raise DimensionError(f"probe holds {probe.copies} copies, got n={n}")
    if probe.dim != u1.dim:
        raise DimensionError(f"probe dimension {probe.dim} != gate dimension {u1.dim}")
    m = relative_gate(u1, u2).matrix
    if probe.terms is not None:
        amp = _pair_amplitude(probe.terms, probe.terms, probe.copies, m)
    else:
        transformed = _apply_gate_axes(probe.vector, m, probe.copies, probe.ancilla_dim)
        amp = complex(np.vdot(probe.vector, transformed))
    result = min(1.0, abs(amp) ** 2)
    if probe.total_dim <= 256:
        _verify_overlap_weights(m, probe, result)
    return result


def _verify_overlap_weights(m: np.ndarray, probe: ProbeState, direct: float):
    """Consistency check: overlap == |sum_i w_i exp(i phi_i)|^2 with spectral weights."""
    eig = numkit.eig_unitary(m)
    vecs_n = eig.vectors
    for _ in range(probe.copies - 1):
        vecs_n = np.kron(vecs_n, eig.vectors)
    phases_n = _tensor_sum_phases(eig.phases, probe.copies)
    rho = numkit.partial_trace_b(probe.to_vector(max_dim=256), dim_a=probe.dim**probe.copies)
    weights = np.einsum("ik,ij,jk->k", vecs_n.conj(), rho, vecs_n).real
    weights = np.clip(weights, 0.0, None)
    amp = (weights * np.exp(1j * phases_n)).sum()
    if abs(abs(amp) ** 2 - direct) > 1e-9:
        raise RuntimeError(
            "internal inconsistency: direct overlap and spectral-weight overlap disagree"
        )


def _su2_folded_eigenbasis(u1: Gate, u2: Gate) -> tuple[float, np.ndarray, np.ndarray]:
    """Half-arc delta and eigenvectors (w_plus, w_minus) of the relative qubit gate.

    The raw eigenphases are +/-a with a in [0, pi]; when a > pi/2 the gate
    is a global phase away from one with phases +/-(pi - a), so the roles of
    the two eigenvectors swap and delta = min(a, pi - a) <= pi/2 throughout.
    """
    eig = relative_gate(u1, u2).spectral
    a = float(eig.phases[1])
    v_minus, v_plus = eig.vectors[:, 0], eig.vectors[:, 1]
    if a <= _HALF_PI:
        return min(a, math.pi - a), v_plus, v_minus
    return math.pi - a, v_minus, v_plus


def optimal_probe_separable(u1: Gate, u2: Gate) -> ProbeState:
    """Equal superposition of the two extremal eigenvectors, with a blank ancilla.

    The probe (|v_a> + |v_b>)/sqrt(2) (x) |0> built from the eigenvectors at
    the two ends of the minimal covering arc retains overlap cos^2(delta).
    For qubit gates delta <= pi/2 always, so this single-copy separable probe
    already achieves the optimal fidelity.
    """
    _check_pair(u1, u2)
    eig = relative_gate(u1, u2).spectral
    arc = minimal_covering_arc(eig.phases)
    diffs = np.abs(numkit._principal(eig.phases - arc.extremes[0]))
    idx_a = int(np.argmin(diffs))
    diffs_b = np.abs(numkit._principal(eig.phases - arc.extremes[1]))
    diffs_b[idx_a] = np.inf
    idx_b = int(np.argmin(diffs_b))
    psi = (eig.vectors[:, idx_a] + eig.vectors[:, idx_b]) / math.sqrt(2.0)
    return ProbeState(
        copies=1,
        dim=u1.dim,
        separable=True,
        ancilla_dim=u1.dim,
        terms=(((1.0 + 0.0j), (_freeze(psi), _basis_vec(u1.dim, 0))),),
    )


def optimal_probe_single(u1: Gate, u2: Gate, entangled: bool) -> ProbeState:
    """Optimal single-use qubit probe, entangled or separable.

    Both choices leave the reduced state with weight 1/2 on each eigenvector
    of the relative gate, which is what minimizes the branch overlap for one
    use; the entangled probe is the maximally entangled pair state, the
    separable one lives in the system factor alone.
    """
    _check_pair(u1, u2, dim=2)
    if entangled:
        coeff = complex(1.0 / math.sqrt(2.0))
        terms = (
            (coeff, (_basis_vec(2, 0), _basis_vec(2, 0))),
            (coeff, (_basis_vec(2, 1), _basis_vec(2, 1))),
        )
        return ProbeState(copies=1, dim=2, separable=False, ancilla_dim=2, terms=terms)
    return optimal_probe_separable(u1, u2)


def optimal_probe_ncopies(u1: Gate, u2: Gate) -> ProbeState:
    """Separable N-copy probe achieving zero overlap at N = min_copies.

    With relative eigenphases +/-delta, the N-fold product states
    w+^N, w-^N (phases +/-N delta) and the mixed products (phase
    +/-(N mod 2) delta) are superposed with weights q, q, 1/2-q, 1/2-q where

        q = cos((N mod 2) delta) / 2(cos((N mod 2) delta) - cos(N delta)),

    chosen so the weighted eigenphase sum cancels exactly.  For even N the
    two middle branches merge into one eigenvalue-1 product state carrying
    weight 1 - 2q.  The state is a sum of at most four product terms and is
    stored that way; a blank |0...0> ancilla tags along.
    """
    _check_pair(u1, u2, dim=2)
    n = min_copies(u1, u2)
    delta, w_plus, w_minus = _su2_folded_eigenbasis(u1, u2)
    parity = n % 2
    if n == 1:
        q = 0.0
    else:
        c_par = math.cos(parity * delta)
        c_n = math.cos(n * delta)
        q = c_par / (2.0 * (c_par - c_n))
    if not -1e-12 <= q <= 0.5 + 1e-12:
        raise RuntimeError(f"internal: branch weight q={q!r} outside [0, 1/2]")
    q = min(max(q, 0.0), 0.5)
    terms: list[tuple[complex, tuple[np.ndarray, ...]]] = []
    ancilla = tuple(_basis_vec(2, 0) for _ in range(n))
    if q > 0.0:
        terms.append((complex(math.sqrt(q)), (w_plus,) * n + ancilla))
        terms.append((complex(math.sqrt(q)), (w_minus,) * n + ancilla))
    if parity == 1:
        rem = 0.5 - q
        if rem > 0.0:
            hi, lo = (n + 1) // 2, (n - 1) // 2
            coeff = complex(math.sqrt(rem))
            terms.append((coeff, (w_plus,) * hi + (w_minus,) * lo + ancilla))
            terms.append((coeff, (w_minus,) * hi + (w_plus,) * lo + ancilla))
    else:
        rem = 1.0 - 2.0 * q
        if rem > 0.0:
            half = n // 2
            terms.append(
                (complex(math.sqrt(rem)), (w_plus,) * half + (w_minus,) * half + ancilla)
            )
    probe = ProbeState(
        copies=n, dim=2, separable=True, ancilla_dim=2**n, terms=tuple(terms)
    )
    amp = _pair_amplitude(probe.terms, probe.terms, n, relative_gate(u1, u2).matrix)
    if abs(amp) > 1e-8:
        raise RuntimeError(
            f"internal: N-copy probe leaves residual overlap {abs(amp):.3e}"
        )
    return probe


# ---------------------------------------------------------------------------
# Brute-force oracle


def _project_simplex_rows(lam: np.ndarray) -> np.ndarray:
    """Euclidean projection of each row onto the probability simplex."""
    m = lam.shape[1]
    u = -np.sort(-lam, axis=1)
    css = np.cumsum(u, axis=1) - 1.0
    idx = np.arange(1, m + 1)
    positive = u - css / idx > 0.0
    rho = positive.sum(axis=1)
    theta = css[np.arange(lam.shape[0]), rho - 1] / rho
    return np.clip(lam - theta[:, None], 0.0, None)


def oracle_min_overlap(
    u1: Gate, u2: Gate, n: int, budget: int = 32, seed: int = 0
) -> float:
    """Numerical minimum branch overlap over probes, independent of closed forms.

    Two searches run and the smaller result wins:

    (a) projected gradient descent on |sum_k w_k exp(i phi_k)|^2 over the
        probability simplex, where phi_k are the eigenphases of the n-fold
        tensor power of U1^dag U2, restarted `budget` times from Dirichlet
        draws (convex, so restarts mostly agree); steps halve until the
        sufficient-decrease test passes and iteration stops once the
        gradient-mapping norm falls to 1e-10 (or at 10^4 iterations);
    (b) `budget` random normalized bipartite probe vectors, evaluated
        directly, as an upper-bound sanity band.

    Every weight vector on the simplex is realizable by some entangled
    probe, so search (a) spans the true feasible set.
    """
    _check_pair(u1, u2)
    if budget < 1:
        raise ValidationError(f"budget must be >= 1, got {budget}")
    if n < 1:
        raise ValidationError(f"copy count must be >= 1, got {n}")
    big = numkit.tensor_power(relative_gate(u1, u2).matrix, n)
    phases = numkit.eig_unitary(big).phases
    m = phases.size
    z_c, z_s = np.cos(phases), np.sin(phases)
    gram = np.array([[z_c @ z_c, z_c @ z_s], [z_c @ z_s, z_s @ z_s]])
    lipschitz = 2.0 * float(np.linalg.eigvalsh(gram).max())

    children = np.random.SeedSequence(seed).spawn(budget + 1)
    lam = np.stack(
        [np.random.default_rng(c).dirichlet(np.ones(m)) for c in children[:budget]]
    )

    def f_of(w: np.ndarray) -> np.ndarray:
        a, b = w @ z_c, w @ z_s
        return a * a + b * b

    fval = f_of(lam)
    step = np.full(budget, 1.0 / lipschitz)
    active = np.ones(budget, dtype=bool)
    for _ in range(10_000):
        a, b = lam @ z_c, lam @ z_s
        grad = 2.0 * (a[:, None] * z_c[None, :] + b[:, None] * z_s[None, :])
        for _halving in range(60):
            cand = _project_simplex_rows(lam - step[:, None] * grad)
            diff = cand - lam
            f_cand = f_of(cand)
            decrease_ok = f_cand <= (
                fval + (grad * diff).sum(axis=1) + (diff * diff).sum(axis=1) / (2.0 * step) + 1e-15
            )
            bad = active & ~decrease_ok
            if not bad.any():
                break
            step[bad] *= 0.5
        mapping = np.linalg.norm(diff, axis=1) / step
        lam[active] = cand[active]
        fval[active] = f_cand[active]
        active &= mapping > 1e-10
        if not active.any():
            break
    best = float(fval.min())

    rng = np.random.default_rng(children[budget])
    d_n = u1.dim**n
    for _ in range(budget):
        z = rng.standard_normal((d_n, d_n)) + 1j * rng.standard_normal((d_n, d_n))
        coeff = z / np.linalg.norm(z)
        val = abs(np.vdot(coeff, big @ coeff)) ** 2
        best = min(best, float(val))
    return max(0.0, best)


# ---------------------------------------------------------------------------
# A three-level family with a forced-zero matrix element


def su3_example_gate(gamma1: float, gamma2: float, phases: Sequence[float]) -> Gate:
    """Special-unitary 3x3 family whose (1,1) entry is identically zero.

    Since <e1|U|e1> = 0, the probe e1 makes the outcome distribution of this
    gate disjoint from the identity's: the convex hull of its eigenvalues
    contains the origin, the covering arc is at least a half-circle, and the
    fidelity against the identity vanishes for every parameter choice.

    `phases` supplies five angles for signature stability; the first one
    would multiply only the matrix entry this family pins to zero, so it
    never influences the result.
    """
    if not 0.0 <= gamma1 <= _HALF_PI or not 0.0 <= gamma2 <= _HALF_PI:
        raise ValidationError("gamma angles must lie in [0, pi/2]")
    ph = np.asarray(phases, dtype=float).reshape(-1)
    if ph.size != 5:
        raise DimensionError(f"need exactly 5 phase angles, got {ph.size}")
    if np.any(ph < 0.0) or np.any(ph >= 2.0 * math.pi):
        raise ValidationError("phase angles must lie in [0, 2*pi)")
    _, p2, p3, p4, p5 = (float(x) for x in ph)
    s1, c1 = math.sin(gamma1), math.cos(gamma1)
    s2, c2 = math.sin(gamma2), math.cos(gamma2)
    e = lambda x: np.exp(1j * x)  # noqa: E731
    m = np.array(
        [
            [0.0, s1 * e(p3), c1 * e(p4)],
            [s2 * e(-(p4 + p5)), c1 * c2 * e(p2), -s1 * c2 * e(p2 - p3 + p4)],
            [-c2 * e(-(p2 + p4)), c1 * s2 * e(p5), -s1 * s2 * e(-(p3 - p4 - p5))],
        ]
    )
    return Gate(m, special=True)
