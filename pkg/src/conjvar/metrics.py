"""Distances between distributions, pure states and density operators.

The central quantity is ``D(rho, sigma) = sqrt(1 - tr(rho sigma))``, a metric
on pure states that still satisfies the triangle inequality on mixed ones.
Classical distances from the usual distance table sit alongside it so they
can be compared on the same inputs.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatchError, InvalidDistributionError
from .quantum_core import (
    as_density,
    as_operator,
    as_state,
    frobenius_norm,
)

SUM_TOL = 1e-9
NEG_TOL = 1e-12


def as_distribution(p) -> np.ndarray:
    """Validate a probability vector; tiny negative entries are clamped to zero."""
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.shape[0] < 1:
        raise InvalidDistributionError(f"distribution must be a non-empty vector, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise InvalidDistributionError("distribution has non-finite entries")
    if np.any(p < -NEG_TOL):
        raise InvalidDistributionError(f"negative probability {p.min()!r}")
    p = np.clip(p, 0.0, None)
    total = float(p.sum())
    if abs(total - 1.0) > SUM_TOL:
        raise InvalidDistributionError(f"probabilities sum to {total!r}, expected 1")
    return p


def _pair(p, q) -> tuple[np.ndarray, np.ndarray]:
    p = as_distribution(p)
    q = as_distribution(q)
    if p.shape != q.shape:
        raise DimensionMismatchError(f"distributions differ in length: {p.shape[0]} vs {q.shape[0]}")
    return p, q


# -- quantum distances ---------------------------------------------------


def no_name_distance(rho, sigma) -> float:
    """D(rho, sigma) = sqrt(1 - tr(rho sigma)) for density operators.

    Only zero on the diagonal for pure states; for a mixed rho,
    D(rho, rho) = sqrt(1 - tr(rho^2)) > 0.
    """
    rho = as_density(rho)
    sigma = as_density(sigma)
    if rho.shape != sigma.shape:
        raise DimensionMismatchError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    # tr(rho sigma) = sum_ij rho_ij conj(sigma_ij) for Hermitian operands; this
    # form is bitwise symmetric in rho and sigma
    overlap = float(np.sum(rho.real * sigma.real + rho.imag * sigma.imag))
    return float(np.sqrt(min(1.0, max(0.0, 1.0 - overlap))))


def no_name_distance_pure(psi, xi) -> float:
    """D(|psi>, |xi>) = sqrt(1 - |<psi|xi>|^2).

    Evaluated through Lagrange's identity
    ``|a|^2 |b|^2 - |<a|b>|^2 = sum_{i<j} |a_i b_j - a_j b_i|^2`` so that
    identical (or phase-equivalent) states give exactly zero rather than the
    square root of a rounding error.
    """
    psi = as_state(psi)
    xi = as_state(xi)
    if psi.shape != xi.shape:
        raise DimensionMismatchError(f"dimension mismatch: {psi.shape} vs {xi.shape}")
    return float(np.sqrt(_wedge_norm2(psi[None, :], xi[None, :])[0]))


def _wedge_norm2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise sum_{i<j} |a_i b_j - a_j b_i|^2 for stacks of vectors, shape (m, n)."""
    m = a[:, :, None] * b[:, None, :]
    w = m - np.swapaxes(m, 1, 2)
    n = a.shape[1]
    iu = np.triu_indices(n, k=1)
    return np.sum(np.abs(w[:, iu[0], iu[1]]) ** 2, axis=1)


def no_name_distance_pure_many(psi: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """Vectorized D over row-stacked unit vectors (no normalization check)."""
    psi = np.atleast_2d(np.asarray(psi, dtype=complex))
    xi = np.atleast_2d(np.asarray(xi, dtype=complex))
    psi, xi = np.broadcast_arrays(psi, xi)
    return np.sqrt(np.clip(_wedge_norm2(psi, xi), 0.0, 1.0))


def euclidean_operator_distance(a, b) -> float:
    """Hilbert-Schmidt (Frobenius) norm of A - B."""
    a = as_operator(a)
    b = as_operator(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")
    return frobenius_norm(a - b)


def principal_euclidean_distance(psi, xi) -> float:
    """Length of |psi> - |xi> in the state space itself.

    Unlike D this is not invariant under a global phase: |0> and -|0> are at
    distance 2.
    """
    psi = as_state(psi)
    xi = as_state(xi)
    if psi.shape != xi.shape:
        raise DimensionMismatchError(f"dimension mismatch: {psi.shape} vs {xi.shape}")
    return float(np.linalg.norm(psi - xi))


# -- classical distances -------------------------------------------------


def fidelity(p, q) -> float:
    """Sum of Bhattacharyya coefficients, sum_x sqrt(p(x) q(x))."""
    p, q = _pair(p, q)
    return float(min(1.0, np.sum(np.sqrt(p * q))))


def _one_minus_fidelity(p: np.ndarray, q: np.ndarray) -> float:
    # sum (sqrt p - sqrt q)^2 = sum p + sum q - 2 F, rearranged so nearby
    # distributions do not lose digits to 1 - F
    half_sq = 0.5 * np.sum((np.sqrt(p) - np.sqrt(q)) ** 2)
    return float(max(0.0, half_sq + (1.0 - 0.5 * (np.sum(p) + np.sum(q)))))


def bhattacharyya_distance(p, q) -> float:
    """sqrt(1 - fidelity(p, q))."""
    p, q = _pair(p, q)
    return float(np.sqrt(_one_minus_fidelity(p, q)))


def shannon_entropy(p) -> float:
    """Entropy in bits, with 0 log 0 = 0."""
    p = np.asarray(p, dtype=float)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)))


def kl_divergence(p, q) -> float:
    """Relative entropy in bits. +inf when p puts mass where q has none."""
    p, q = _pair(p, q)
    support = p > 0
    if np.any(q[support] == 0):
        return float("inf")
    return float(max(0.0, np.sum(p[support] * np.log2(p[support] / q[support]))))


def jensen_shannon(p, q) -> float:
    p, q = _pair(p, q)
    js = shannon_entropy(0.5 * (p + q)) - 0.5 * (shannon_entropy(p) + shannon_entropy(q))
    return float(min(1.0, max(0.0, js)))


def relative_chi2(p, q) -> float:
    p, q = _pair(p, q)
    s = p + q
    mask = s > 0
    return float(np.sum((p[mask] - q[mask]) ** 2 / (2.0 * s[mask])))


@dataclass(frozen=True)
class DistanceReport:
    euclidean_prob: float
    trace_variational: float
    rel_chi2: float
    kl_divergence: float
    jensen_shannon: float
    bhattacharyya_dist: float  # table form: 1 - fidelity
    fidelity: float

    def to_dict(self) -> dict:
        return asdict(self)


def classical_distances(p, q) -> DistanceReport:
    p, q = _pair(p, q)
    f = fidelity(p, q)
    return DistanceReport(
        euclidean_prob=float(np.sqrt(np.sum((p - q) ** 2))),
        trace_variational=float(np.sum(np.abs(p - q))),
        rel_chi2=relative_chi2(p, q),
        kl_divergence=kl_divergence(p, q),
        jensen_shannon=jensen_shannon(p, q),
        bhattacharyya_dist=_one_minus_fidelity(p, q),
        fidelity=f,
    )


class AngleRelations(NamedTuple):
    omega: float
    sin_omega: float
    two_sin_half: float


def angle_relations(p, q) -> AngleRelations:
    """Angle between the square-root encodings of ``p`` and ``q``.

    ``cos(omega)`` is the fidelity; ``sin(omega)`` equals D of the encodings
    and ``2 sin(omega / 2)`` their Euclidean distance.
    """
    p, q = _pair(p, q)
    a = np.sqrt(p)[None, :]
    b = np.sqrt(q)[None, :]
    sin_w = float(np.sqrt(_wedge_norm2(a, b)[0]))
    cos_w = float(np.sum(a * b))
    omega = float(np.arctan2(sin_w, cos_w))
    return AngleRelations(omega, float(np.sin(omega)), float(2.0 * np.sin(0.5 * omega)))
