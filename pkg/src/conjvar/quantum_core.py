"""Complex vector and operator algebra on finite-dimensional Hilbert spaces.

States are 1-d ``complex128`` arrays, operators are square 2-d arrays.
Everything here is a pure function of its inputs.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    InvalidStateError,
)

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_FLOOR = 1e-10

JACOBI_MAX_SWEEPS = 100
JACOBI_TOL = 1e-13


def ket(index: int, dim: int = 2) -> np.ndarray:
    """Computational basis vector |index>."""
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def as_state(psi, *, check: bool = True) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1 or psi.shape[0] < 2:
        raise InvalidStateError(f"state must be a vector of length >= 2, got shape {psi.shape}")
    if not np.all(np.isfinite(psi)):
        raise InvalidStateError("state has non-finite amplitudes")
    if check:
        norm2 = float(np.sum(np.abs(psi) ** 2))
        if abs(norm2 - 1.0) > NORM_TOL * max(1, psi.shape[0]):
            raise InvalidStateError(f"state is not normalized: sum |a|^2 = {norm2!r}")
    return psi


def as_operator(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"operator must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("operator has non-finite entries")
    return a


def is_hermitian(a, tol: float = HERMITIAN_TOL) -> bool:
    a = as_operator(a)
    return bool(np.max(np.abs(a - a.conj().T), initial=0.0) <= tol)


def as_density(rho, *, check: bool = True) -> np.ndarray:
    """Validate ``rho`` as a density operator and return it as a complex array.

    Positivity is tested with a Cholesky factorisation of ``rho + floor * I``,
    which is much cheaper than a full eigendecomposition.
    """
    rho = as_operator(rho)
    if not check:
        return rho
    if not is_hermitian(rho):
        raise InvalidStateError("density operator is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_TOL * max(1, rho.shape[0]):
        raise InvalidStateError(f"density operator trace is {tr!r}, expected 1")
    shifted = 0.5 * (rho + rho.conj().T) + PSD_FLOOR * np.eye(rho.shape[0])
    try:
        np.linalg.cholesky(shifted)
    except np.linalg.LinAlgError:
        raise InvalidStateError("density operator is not positive semidefinite") from None
    return rho


def _same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"dimension mismatch: {a.shape} vs {b.shape}")


def inner_product(a, b) -> complex:
    """<a|b> = sum conj(a_i) b_i."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _same_dim(a, b)
    return complex(np.vdot(a, b))


def outer(a, b=None) -> np.ndarray:
    """|a><b|; with one argument the projector |a><a|."""
    a = np.asarray(a, dtype=complex)
    b = a if b is None else np.asarray(b, dtype=complex)
    return np.outer(a, b.conj())


def projector(psi) -> np.ndarray:
    return outer(as_state(psi))


def transition_probability(chi, psi) -> float:
    """|<psi|chi>|^2, the probability that measuring ``chi`` yields ``psi``."""
    chi = as_state(chi)
    psi = as_state(psi)
    _same_dim(chi, psi)
    return float(abs(np.vdot(psi, chi)) ** 2)


def expand_transition_probability(p, q, gamma) -> float:
    """Transition probability of two encoded distributions from their phase differences.

    ``gamma[x]`` is the phase of the first encoding minus the phase of the
    second at index ``x``. Evaluates
    ``sum_x p q + sum_{x != y} cos(g_x - g_y) sqrt(p_x p_y q_x q_y)``.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    gamma = np.asarray(gamma, dtype=float)
    if not (p.shape == q.shape == gamma.shape) or p.ndim != 1:
        raise DimensionMismatchError(
            f"p, q, gamma must be equal-length vectors: {p.shape}, {q.shape}, {gamma.shape}"
        )
    r = np.sqrt(np.clip(p, 0.0, None) * np.clip(q, 0.0, None))
    cross = np.cos(gamma[:, None] - gamma[None, :]) * np.outer(r, r)
    np.fill_diagonal(cross, 0.0)
    return float(np.sum(p * q) + np.sum(cross))


def expectation(rho, chi) -> float:
    """<chi|rho|chi>, the probability that ``rho`` is found in the pure state ``chi``."""
    rho = as_density(rho)
    chi = as_state(chi)
    if rho.shape[0] != chi.shape[0]:
        raise DimensionMismatchError(f"dimension mismatch: {rho.shape} vs {chi.shape}")
    return float(np.real(np.vdot(chi, rho @ chi)))


def operator_expectation(a, psi) -> complex:
    """<psi|A|psi> for an arbitrary square operator."""
    a = as_operator(a)
    psi = np.asarray(psi, dtype=complex)
    return complex(np.vdot(psi, a @ psi))


def trace(a) -> complex:
    return complex(np.trace(as_operator(a)))


def trace_product(a, b) -> complex:
    """tr(AB) without forming the product."""
    a = as_operator(a)
    b = as_operator(b)
    _same_dim(a, b)
    return complex(np.sum(a * b.T))


def frobenius_norm(a) -> float:
    a = np.asarray(a, dtype=complex)
    return float(np.sqrt(np.sum(np.abs(a) ** 2)))


def commutator(a, b) -> np.ndarray:
    """[A, B] = AB - BA."""
    a = as_operator(a)
    b = as_operator(b)
    _same_dim(a, b)
    return a @ b - b @ a


def _jacobi_rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    """2x2 unitary U with U^H [[app, apq], [conj(apq), aqq]] U diagonal."""
    mag = abs(apq)
    phase = apq / mag
    theta = (aqq - app) / (2.0 * mag)
    if abs(theta) > 1e150:
        t = 1.0 / (2.0 * theta)
    else:
        t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    ph = np.conj(phase)
    return np.array([[c, s], [-s * ph, c * ph]], dtype=complex)


def eig_hermitian(a, *, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and the
    eigenvectors as the orthonormal columns of a unitary matrix, so that
    ``a == V @ diag(w) @ V^H``.

    Raises:
        InvalidStateError: if ``a`` is not Hermitian within 1e-10.
        ConvergenceError: if the off-diagonal mass does not drop below the
            tolerance within ``max_sweeps`` sweeps.
    """
    a = as_operator(a)
    if not is_hermitian(a, tol=1e-10):
        raise InvalidStateError("eig_hermitian requires a Hermitian matrix")
    n = a.shape[0]
    work = 0.5 * (a + a.conj().T)
    vecs = np.eye(n, dtype=complex)
    scale = max(1.0, frobenius_norm(work))
    threshold = tol * scale

    upper = np.triu_indices(n, k=1)

    def off_norm(m):
        return np.sqrt(2.0) * np.linalg.norm(m[upper])

    for _ in range(max_sweeps):
        if off_norm(work) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if abs(apq) <= 1e-300:
                    continue
                u = _jacobi_rotation(work[p, p].real, work[q, q].real, apq)
                idx = [p, q]
                work[:, idx] = work[:, idx] @ u
                work[idx, :] = u.conj().T @ work[idx, :]
                work[p, q] = work[q, p] = 0.0
                work[p, p] = work[p, p].real
                work[q, q] = work[q, q].real
                vecs[:, idx] = vecs[:, idx] @ u
    else:
        if off_norm(work) > threshold:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")

    w = np.real(np.diag(work)).copy()
    order = np.argsort(w, kind="stable")
    return w[order], vecs[:, order]


def spectral_norm(a) -> float:
    """Largest singular value, from the top eigenvalue of A^H A."""
    a = as_operator(a)
    w, _ = eig_hermitian(a.conj().T @ a)
    return float(np.sqrt(max(w[-1], 0.0)))


def global_phase_multiply(psi, phi: float) -> np.ndarray:
    """Multiply ``psi`` by exp(i phi), phi in [-pi, pi]."""
    if not -np.pi <= phi <= np.pi:
        raise ValueError(f"phase must lie in [-pi, pi], got {phi}")
    return np.exp(1j * phi) * np.asarray(psi, dtype=complex)


def purity(rho) -> float:
    """tr(rho^2); equals 1 exactly for pure states."""
    rho = as_operator(rho)
    return float(np.real(trace_product(rho, rho)))


def random_pure_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Unit vector with i.i.d. standard-normal real and imaginary parts, normalized."""
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_density(dim: int, rng: np.random.Generator, k: int | None = None) -> np.ndarray:
    """Mixture of ``k`` random pure states with normalized uniform weights.

    ``k`` defaults to a uniform draw from 1..4, so the result is pure with
    probability 1/4.
    """
    if k is None:
        k = int(rng.integers(1, 5))
    weights = rng.uniform(size=k)
    weights /= weights.sum()
    rho = np.zeros((dim, dim), dtype=complex)
    for w in weights:
        rho += w * outer(random_pure_state(dim, rng))
    return 0.5 * (rho + rho.conj().T)
