"""Encoding of probability distributions as state vectors, and qubit geometry."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatchError, InvalidStateError
from .metrics import as_distribution, no_name_distance_pure_many
from .quantum_core import as_density, as_state


def encode(p, phases=None) -> np.ndarray:
    """Amplitudes sqrt(p(x)) * exp(i phi_x).

    With ``phases`` omitted (or all zero) this is the nonnegative real
    square-root encoding.
    """
    p = as_distribution(p)
    if phases is None:
        return np.sqrt(p).astype(complex)
    phases = np.asarray(phases, dtype=float)
    if phases.shape != p.shape:
        raise DimensionMismatchError(f"{p.shape[0]} probabilities but {phases.shape} phases")
    return np.sqrt(p) * np.exp(1j * phases)


def decode(psi) -> np.ndarray:
    """Outcome distribution of a computational-basis measurement."""
    psi = as_state(psi)
    return np.abs(psi) ** 2


class BlochVector(NamedTuple):
    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


def bloch_angles(psi) -> tuple[float, float]:
    """(theta, phi) with psi ~ cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>."""
    psi = as_state(psi)
    if psi.shape[0] != 2:
        raise InvalidStateError(f"Bloch angles need a qubit, got dimension {psi.shape[0]}")
    a, b = psi
    theta = 2.0 * np.arctan2(abs(b), abs(a))
    if abs(a) == 0.0 or abs(b) == 0.0:
        phi = 0.0
    else:
        phi = float(np.mod(np.angle(b) - np.angle(a), 2.0 * np.pi))
    return float(theta), phi


def bloch_from_qubit(psi) -> BlochVector:
    theta, phi = bloch_angles(psi)
    st = np.sin(theta)
    return BlochVector(float(np.cos(phi) * st), float(np.sin(phi) * st), float(np.cos(theta)))


def bloch_from_density(rho) -> BlochVector:
    """Read (x, y, z) off rho = 1/2 [[1+z, x-iy], [x+iy, 1-z]]."""
    rho = as_density(rho)
    if rho.shape != (2, 2):
        raise InvalidStateError(f"Bloch vector needs a 2x2 density operator, got {rho.shape}")
    off = rho[1, 0]
    return BlochVector(float(2.0 * off.real), float(2.0 * off.imag), float((rho[0, 0] - rho[1, 1]).real))


def bloch_many(psi: np.ndarray) -> np.ndarray:
    """Bloch vectors of row-stacked qubits, shape (m, 3); global phase drops out."""
    psi = np.asarray(psi, dtype=complex)
    a, b = psi[:, 0], psi[:, 1]
    cross = np.conj(a) * b
    return np.stack([2.0 * cross.real, 2.0 * cross.imag, np.abs(a) ** 2 - np.abs(b) ** 2], axis=1)


# -- qubit distance surfaces ---------------------------------------------

SURFACE_MODES = ("fix_p", "fix_phase", "p_equals_q")


class Surface(NamedTuple):
    mode: str
    row_label: str
    col_label: str
    rows: np.ndarray
    cols: np.ndarray
    values: np.ndarray  # shape (len(rows), len(cols))


def unit_axis(resolution: int) -> np.ndarray:
    """resolution points uniformly covering [0, 1], endpoints included exactly."""
    return np.arange(resolution) / (resolution - 1)


def qubit_distance(px, qx, dgamma) -> np.ndarray:
    """D between the qubit encodings of (px, 1-px) and (qx, 1-qx).

    ``dgamma`` is gamma_x - gamma_y. The phase is carried on the x amplitude
    of the first state; only the difference matters. Broadcasts.
    """
    px, qx, dgamma = np.broadcast_arrays(
        np.asarray(px, float), np.asarray(qx, float), np.asarray(dgamma, float)
    )
    shape = px.shape
    px, qx, dgamma = px.ravel(), qx.ravel(), dgamma.ravel()
    psi = np.stack([np.sqrt(px) * np.exp(1j * dgamma), np.sqrt(1.0 - px) + 0j], axis=1)
    xi = np.stack([np.sqrt(qx) + 0j, np.sqrt(1.0 - qx) + 0j], axis=1)
    return no_name_distance_pure_many(psi, xi).reshape(shape)


def qubit_distance_surface(mode: str, resolution: int, *, p: float | None = None,
                           dgamma: float | None = None) -> Surface:
    """Grid of D for the three qubit visualisations.

    * ``fix_p``: fixed p(x) = ``p``; rows q(x) in [0, 1], cols phase difference in [0, pi].
    * ``fix_phase``: fixed ``dgamma``; rows p(x), cols q(x), both in [0, 1].
    * ``p_equals_q``: rows p(x) = q(x) in [0, 1], cols phase difference in [0, pi].
    """
    if mode not in SURFACE_MODES:
        raise ValueError(f"unknown surface mode {mode!r}; expected one of {SURFACE_MODES}")
    if int(resolution) != resolution or resolution < 2:
        raise ValueError(f"resolution must be an integer >= 2, got {resolution}")
    resolution = int(resolution)
    prob = unit_axis(resolution)
    phase = np.pi * prob

    if mode == "fix_p":
        if p is None or not 0.0 <= p <= 1.0:
            raise ValueError(f"fix_p needs p(x) in [0, 1], got {p}")
        values = qubit_distance(p, prob[:, None], phase[None, :])
        return Surface(mode, "q(x)", "dgamma", prob, phase, values)
    if mode == "fix_phase":
        if dgamma is None or not np.isfinite(dgamma):
            raise ValueError(f"fix_phase needs a finite phase difference, got {dgamma}")
        values = qubit_distance(prob[:, None], prob[None, :], dgamma)
        return Surface(mode, "p(x)", "q(x)", prob, prob, values)
    values = qubit_distance(prob[:, None], prob[:, None], phase[None, :])
    return Surface(mode, "p(x)", "dgamma", prob, phase, values)
