"""Dense complex linear algebra helpers underlying gates and states.

Everything here works on plain ndarrays (anything `np.asarray` accepts,
including `Gate`, which exposes ``__array__``).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DimensionError, SizeLimitError, ValidationError

DEFAULT_TOL = 1e-10

# Internal seed for the random Hermitian mixing weight used by eig_unitary.
# Fixed so that the decomposition is a pure function of its input.
_MIX_SEED = 0x1D5A3


def _as_square(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def validate_unitary(m, tol: float = DEFAULT_TOL) -> bool:
    """True when ||M^dag M - 1||_max <= tol. Raises only on non-square input."""
    m = _as_square(m)
    d = m.shape[0]
    return bool(np.abs(m.conj().T @ m - np.eye(d)).max() <= tol)


@dataclass(frozen=True, eq=False)
class UnitaryEigen:
    """Spectral data of a unitary: ``sum_k exp(i*phases[k]) |v_k><v_k|``.

    ``phases`` are sorted ascending in (-pi, pi]; ``vectors[:, k]`` is the
    orthonormal eigenvector for ``phases[k]``.
    """

    phases: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * np.exp(1j * self.phases)) @ self.vectors.conj().T


def _principal(phi: np.ndarray) -> np.ndarray:
    """Map angles to the principal branch (-pi, pi]."""
    out = np.mod(np.asarray(phi, dtype=float) + np.pi, 2 * np.pi) - np.pi
    return np.where(out <= -np.pi, np.pi, out)


def _fix_gauge(vecs: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-magnitude entry is real positive."""
    idx = np.argmax(np.abs(vecs), axis=0)
    lead = vecs[idx, np.arange(vecs.shape[1])]
    phase = lead / np.where(np.abs(lead) == 0, 1.0, np.abs(lead))
    return vecs / phase


def _split_clusters(values: np.ndarray, gap: float) -> list[slice]:
    """Contiguous index ranges of `values` (sorted) separated by more than `gap`."""
    edges = [0]
    for k in range(1, len(values)):
        if values[k] - values[k - 1] > gap:
            edges.append(k)
    edges.append(len(values))
    return [slice(a, b) for a, b in zip(edges[:-1], edges[1:])]


def eig_unitary(u, tol: float = DEFAULT_TOL, max_attempts: int = 6) -> UnitaryEigen:
    """Eigenphases and orthonormal eigenvectors of a unitary matrix.

    Reduces to a Hermitian problem: with H1 = (U + U^dag)/2 and
    H2 = (U - U^dag)/(2i), the matrix H1 + gamma*H2 is Hermitian and shares
    eigenvectors with U, so `eigh` applies.  A cluster of H1 + gamma*H2
    eigenvalues may still mix distinct eigenphases (cos a + gamma*sin a can
    collide), so inside each cluster the compression of H2 is diagonalized as
    a second stage; the pair (cos, sin) separates any two distinct phases.
    Phases come from Rayleigh quotients and every pair (phase, vector) must
    pass the residual check ||U v - exp(i*phi) v|| <= tol.
    """
    m = _as_square(u)
    if not validate_unitary(m, tol):
        raise ValidationError("matrix is not unitary within tolerance")
    d = m.shape[0]
    h1 = (m + m.conj().T) / 2.0
    h2 = (m - m.conj().T) / 2.0j
    rng = np.random.default_rng(_MIX_SEED)
    last_residual = np.inf
    for _ in range(max_attempts):
        gamma = rng.uniform(0.3, 1.7)
        w, vecs = np.linalg.eigh(h1 + gamma * h2)
        for cl in _split_clusters(w, 1e-8):
            if cl.stop - cl.start < 2:
                continue
            block = vecs[:, cl]
            # Second stage: split the cluster by the sine part, then restore
            # orthonormality of the rotated block.
            _, rot = np.linalg.eigh(block.conj().T @ h2 @ block)
            q, _ = np.linalg.qr(block @ rot)
            vecs[:, cl] = q
        rayleigh = np.einsum("ik,ij,jk->k", vecs.conj(), m, vecs)
        phases = _principal(np.angle(rayleigh))
        residual = np.abs(m @ vecs - vecs * np.exp(1j * phases)).max()
        if residual <= tol:
            order = np.argsort(phases, kind="stable")
            out_vecs = _fix_gauge(vecs[:, order])
            out_vecs.setflags(write=False)
            out_phases = phases[order]
            out_phases.setflags(write=False)
            return UnitaryEigen(phases=out_phases, vectors=out_vecs)
        last_residual = residual
    raise ConvergenceError(
        f"eigendecomposition residual {last_residual:.3e} above {tol:.1e} "
        f"after {max_attempts} attempts (dim {d})"
    )


def sqrt_psd(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix."""
    m = _as_square(m)
    if np.abs(m - m.conj().T).max() > tol:
        raise ValidationError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh((m + m.conj().T) / 2.0)
    if w.min() < -1e-8:
        raise ValidationError(f"matrix has negative eigenvalue {w.min():.3e}")
    w = np.clip(w, 0.0, None)
    root = (v * np.sqrt(w)) @ v.conj().T
    return (root + root.conj().T) / 2.0


def tensor_power(u, n: int, max_dim: int = 4096) -> np.ndarray:
    """Kronecker power U^(x)n; refuses results larger than max_dim."""
    m = _as_square(u)
    if n < 1:
        raise ValidationError(f"tensor power needs n >= 1, got {n}")
    if m.shape[0] ** n > max_dim:
        raise SizeLimitError(
            f"dimension {m.shape[0]}^{n} exceeds the cap {max_dim}"
        )
    out = m
    for _ in range(n - 1):
        out = np.kron(out, m)
    return out


def partial_trace_b(psi, dim_a: int | None = None, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Reduced density matrix on subsystem A of a normalized pure state.

    `psi` lives on C^dim_a (x) C^dim_b with dim_b inferred from the length;
    when dim_a is omitted the split is assumed square (dim_a = dim_b).
    """
    vec = np.asarray(psi, dtype=complex).reshape(-1)
    size = vec.size
    if dim_a is None:
        dim_a = int(round(np.sqrt(size)))
        if dim_a * dim_a != size:
            raise DimensionError(f"state of length {size} is not a square bipartite split")
    if dim_a < 1 or size % dim_a != 0:
        raise DimensionError(f"length {size} does not factor through dim_a={dim_a}")
    if abs(np.linalg.norm(vec) - 1.0) > tol:
        raise ValidationError("state is not normalized within tolerance")
    coeff = vec.reshape(dim_a, size // dim_a)
    rho = coeff @ coeff.conj().T
    return (rho + rho.conj().T) / 2.0
