"""Riemannian geometry of the qubit gate manifold and Haar averages.

The local squared line element induced by gate distinguishability is, up to
normalization, the round metric of a three-sphere; the angle coordinates of
`GateSU2Params` realize it as dt1^2 + cos^2(t1) dt2^2 + sin^2(t1) dt3^2,
which fixes the invariant (Haar) density sin(2 t1) / (4 pi^2).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ValidationError
from .gates import Gate, GateSU2Params, gate_fidelity_su2, su2_from_params


@dataclass(frozen=True)
class TangentIncrement:
    """Coordinate increments (dtheta1, dtheta2, dtheta3) at a parameter point."""

    dtheta1: float
    dtheta2: float
    dtheta3: float


@dataclass(frozen=True)
class SphereCoords:
    """Embedding of a qubit special unitary as a point on the unit 3-sphere.

    Components are (Re a, Im a, Re b, Im b) for the top matrix row (a, b);
    unitarity plus det 1 force the bottom row, so the four reals carry the
    whole gate and satisfy a1^2 + a2^2 + b1^2 + b2^2 = 1.
    """

    a_re: float
    a_im: float
    b_re: float
    b_im: float

    def __post_init__(self):
        norm2 = self.a_re**2 + self.a_im**2 + self.b_re**2 + self.b_im**2
        if abs(norm2 - 1.0) > 1e-12:
            raise ValidationError(f"sphere coordinates have norm^2 {norm2!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.a_re, self.a_im, self.b_re, self.b_im])


def metric_form_matrix(u: Gate, du, soft_tol: float = 1e-6) -> float:
    """Squared line element (1/4)(2 tr(dU dU^dag) - |tr(U^dag dU)|^2).

    `du` should be (close to) a tangent matrix, i.e. U^dag dU
    anti-Hermitian; a large Hermitian residual only triggers a warning since
    finite-difference increments violate it at second order.
    """
    if not isinstance(u, Gate) or u.dim != 2:
        raise DimensionError("metric_form_matrix expects a 2x2 Gate")
    dm = np.asarray(du, dtype=complex)
    if dm.shape != (2, 2):
        raise DimensionError(f"tangent matrix must be 2x2, got {dm.shape}")
    rel = u.matrix.conj().T @ dm
    herm_residual = np.abs(rel + rel.conj().T).max()
    scale = max(1.0, float(np.abs(dm).max()))
    if herm_residual > soft_tol * scale:
        warnings.warn(
            f"increment is far from tangent: anti-Hermitian residual {herm_residual:.3e}",
            stacklevel=2,
        )
    val = 0.5 * float(np.trace(dm @ dm.conj().T).real) - 0.25 * abs(np.trace(rel)) ** 2
    return max(0.0, val)


def metric_form_coords(params: GateSU2Params, t: TangentIncrement) -> float:
    """Same line element in angle coordinates: dt1^2 + cos^2 t1 dt2^2 + sin^2 t1 dt3^2."""
    c, s = math.cos(params.theta1), math.sin(params.theta1)
    return t.dtheta1**2 + (c * t.dtheta2) ** 2 + (s * t.dtheta3) ** 2


def su2_tangent(params: GateSU2Params, t: TangentIncrement) -> np.ndarray:
    """Exact directional derivative of the parameterized gate along t."""
    c, s = math.cos(params.theta1), math.sin(params.theta1)
    e2, e3 = np.exp(1j * params.theta2), np.exp(1j * params.theta3)
    d1 = np.array([[-s * e2, c * e3], [-c / e3, -s / e2]])
    d2 = np.array([[1j * c * e2, 0.0], [0.0, -1j * c / e2]])
    d3 = np.array([[0.0, 1j * s * e3], [1j * s / e3, 0.0]])
    return t.dtheta1 * d1 + t.dtheta2 * d2 + t.dtheta3 * d3


def sphere_embed(u: Gate) -> SphereCoords:
    """Top-row coordinates of a qubit special unitary on the unit 3-sphere."""
    if not isinstance(u, Gate) or u.dim != 2:
        raise DimensionError("sphere_embed expects a 2x2 Gate")
    if not u.special:
        raise ValidationError("sphere_embed requires a special-unitary gate")
    a, b = complex(u.matrix[0, 0]), complex(u.matrix[0, 1])
    return SphereCoords(a_re=a.real, a_im=a.imag, b_re=b.real, b_im=b.imag)


def haar_sample_su2(seed: int, n: int) -> list[GateSU2Params]:
    """n invariant-measure draws of qubit gate parameters.

    theta1 = arcsin(sqrt(u)) realizes the marginal density sin(2 theta1) on
    [0, pi/2] by inverse transform; the two phases are uniform.
    """
    if n < 1:
        raise ValidationError(f"sample count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    t1 = np.arcsin(np.sqrt(rng.random(n)))
    t2 = rng.uniform(0.0, 2.0 * math.pi, n)
    t3 = rng.uniform(0.0, 2.0 * math.pi, n)
    return [
        GateSU2Params(theta1=float(a), theta2=float(b), theta3=float(c))
        for a, b, c in zip(t1, t2, t3)
    ]


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Sample mean, its standard error, and the sample count behind them."""

    estimate: float
    stderr: float
    samples: int


def overlap_samples(u1: Gate, u2: Gate, samples: int, seed: int) -> np.ndarray:
    """Draw |<psi|U1^dag U2|psi>|^2 over uniform pure states.

    States are drawn as normalized complex Gaussian vectors, which is the
    unitarily invariant ensemble in any dimension.
    """
    if not isinstance(u1, Gate) or not isinstance(u2, Gate):
        raise ValidationError("expected Gate instances")
    if u1.dim != u2.dim:
        raise DimensionError(f"gate dimensions differ: {u1.dim} vs {u2.dim}")
    if samples < 1:
        raise ValidationError(f"sample count must be >= 1, got {samples}")
    rel = u1.matrix.conj().T @ u2.matrix
    rng = np.random.default_rng(seed)
    d = u1.dim
    z = rng.standard_normal((samples, d)) + 1j * rng.standard_normal((samples, d))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    return np.abs(np.einsum("si,si->s", z.conj(), z @ rel.T)) ** 2


def avg_fidelity_mc(u1: Gate, u2: Gate, samples: int, seed: int) -> MonteCarloEstimate:
    """Monte-Carlo average of |<psi|U1^dag U2|psi>|^2 over uniform pure states."""
    vals = overlap_samples(u1, u2, samples, seed)
    est = float(vals.mean())
    err = float(vals.std(ddof=1) / math.sqrt(samples)) if samples > 1 else float("inf")
    return MonteCarloEstimate(estimate=est, stderr=err, samples=samples)


def avg_fidelity_su2_closed(u1: Gate, u2: Gate) -> float:
    """Closed-form uniform-state average for qubit gates: 1/3 + (2/3) F."""
    return 1.0 / 3.0 + 2.0 / 3.0 * gate_fidelity_su2(u1, u2)
