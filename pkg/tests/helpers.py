"""Shared random-object generators for the test suite.

Everything takes an explicit Generator so tests stay reproducible.
"""
import numpy as np


def haar_unitary(dim: int, rng: np.random.Generator, special: bool = False) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix.

    With special=True the determinant is normalized to 1 (a d-th root is
    divided out, which does not disturb the distribution on the quotient).
    """
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d)).conj()
    if special:
        q = q * np.linalg.det(q) ** (-1.0 / dim)
    return q


def rand_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def rand_density(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Random mixed state: normalized GG^dag with G of shape (dim, rank)."""
    rank = dim if rank is None else rank
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def rand_povm(dim: int, n_outcomes: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Random POVM: positive pieces A_i whitened so they sum to the identity."""
    pieces = []
    for _ in range(n_outcomes):
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        pieces.append(g @ g.conj().T)
    total = sum(pieces)
    w, v = np.linalg.eigh(total)
    inv_sqrt = (v * (1.0 / np.sqrt(w))) @ v.conj().T
    return [inv_sqrt @ a @ inv_sqrt for a in pieces]


def rand_prob(dim: int, rng: np.random.Generator, floor: float = 0.0) -> np.ndarray:
    p = rng.random(dim) + floor
    return p / p.sum()
