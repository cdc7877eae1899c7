"""Segmentation of signals from the first and second derivative taken as conjugate variables.

A sample with slope ``fp`` and curvature ``fpp`` becomes the qubit

    |psi> = sqrt((c2 + fpp) / 2c2) e^{i pi fp / c1} |z+> + sqrt((c2 - fpp) / 2c2) |z->

so curvature sets the latitude on the Bloch sphere and slope the longitude.
At the poles the slope degenerates into a global phase and stops mattering.
Each sample is then labelled against five operators P0..P4.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.ndimage import gaussian_filter1d

from .encoding import bloch_many
from .errors import InvalidSignalError
from .metrics import no_name_distance_pure_many
from .quantum_core import commutator, eig_hermitian, outer, spectral_norm

SQRT2 = np.sqrt(2.0)
TIE_TOL = 1e-12
RULES = ("expectation", "distance")
P4_FORMS = ("identity", "projector")
DEFAULT_P4_FORM = "identity"


class Label(enum.IntEnum):
    MIN = 0
    MAX = 1
    RISING = 2
    FALLING = 3
    CONSTANT = 4


LABEL_NAMES = tuple(label.name for label in Label)


@dataclass(frozen=True)
class SignalLimits:
    c1: float
    c2: float

    def __post_init__(self):
        for name in ("c1", "c2"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v}")


@dataclass(frozen=True)
class SampledSignal:
    ts: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        ts = np.asarray(self.ts, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if ts.ndim != 1 or ts.shape != values.shape:
            raise InvalidSignalError(f"time and value columns differ: {ts.shape} vs {values.shape}")
        if ts.shape[0] < 5:
            raise InvalidSignalError(f"need at least 5 samples, got {ts.shape[0]}")
        if not (np.all(np.isfinite(ts)) and np.all(np.isfinite(values))):
            raise InvalidSignalError("signal contains non-finite values")
        steps = np.diff(ts)
        if np.any(steps <= 0):
            raise InvalidSignalError("time axis is not strictly increasing")
        dt = (ts[-1] - ts[0]) / (ts.shape[0] - 1)
        if np.max(np.abs(steps - dt)) > 1e-9 * max(abs(dt), np.max(np.abs(ts))):
            raise InvalidSignalError("time axis is not uniformly sampled")
        object.__setattr__(self, "ts", ts)
        object.__setattr__(self, "values", values)

    @property
    def dt(self) -> float:
        return float((self.ts[-1] - self.ts[0]) / (self.ts.shape[0] - 1))


# -- basis states and operators ------------------------------------------

Z_PLUS = np.array([1.0, 0.0], dtype=complex)
Z_MINUS = np.array([0.0, 1.0], dtype=complex)
X_PLUS = np.array([1.0, 1.0], dtype=complex) / SQRT2
X_MINUS = np.array([1.0, -1.0], dtype=complex) / SQRT2
Y_PLUS = np.array([1.0, 1.0j], dtype=complex) / SQRT2
Y_MINUS = np.array([1.0, -1.0j], dtype=complex) / SQRT2


def projector_set(p4_form: str = "projector") -> np.ndarray:
    """The five classification operators, shape (5, 2, 2).

    P2 and P3 are built from their ket forms and are not projectors (trace
    sqrt(2)). P4 is |x+><x+| by default; ``p4_form="identity"`` gives the
    scaled identity I / sqrt(2) instead.
    """
    if p4_form not in P4_FORMS:
        raise ValueError(f"p4_form must be one of {P4_FORMS}, got {p4_form!r}")
    p4 = outer(X_PLUS) if p4_form == "projector" else np.eye(2, dtype=complex) / SQRT2
    return np.stack([
        outer(Z_PLUS),
        outer(Z_MINUS),
        (outer(Y_MINUS) + outer(X_MINUS)) / SQRT2,
        (outer(Y_PLUS) + outer(X_MINUS)) / SQRT2,
        p4,
    ])


@lru_cache(maxsize=None)
def _dominant_eigenvectors() -> np.ndarray:
    ops = projector_set("projector")
    vecs = []
    for op in ops:
        _, v = eig_hermitian(op)
        vecs.append(v[:, -1])
    return np.array(vecs)


def dominant_eigenvectors() -> np.ndarray:
    """Top eigenvector of each operator, shape (5, 2).

    P4 always contributes |x+>; its scaled-identity form has no preferred
    direction.
    """
    return _dominant_eigenvectors().copy()


def commutator_maximality_check() -> dict[str, float]:
    """Spectral norms of [|x+-><x+-|, |z+-><z+-|] for all four sign pairs."""
    out = {}
    for xs, x in (("+", X_PLUS), ("-", X_MINUS)):
        for zs, z in (("+", Z_PLUS), ("-", Z_MINUS)):
            out[f"x{xs},z{zs}"] = spectral_norm(commutator(outer(x), outer(z)))
    return out


# -- encoding and classification -----------------------------------------


def clamp_samples(fp, fpp, lim: SignalLimits):
    """Clip to the admissible box. Returns (fp, fpp, number of clipped samples)."""
    fp = np.asarray(fp, dtype=float)
    fpp = np.asarray(fpp, dtype=float)
    if not (np.all(np.isfinite(fp)) and np.all(np.isfinite(fpp))):
        raise InvalidSignalError("derivatives contain non-finite values")
    outside = (np.abs(fp) > lim.c1) | (np.abs(fpp) > lim.c2)
    return np.clip(fp, -lim.c1, lim.c1), np.clip(fpp, -lim.c2, lim.c2), int(np.count_nonzero(outside))


def conjugate_encode_many(fp, fpp, lim: SignalLimits) -> np.ndarray:
    """Qubits for arrays of (f', f'') samples, shape (..., 2). Out-of-range values are clamped."""
    fp, fpp, _ = clamp_samples(fp, fpp, lim)
    plus = np.sqrt((lim.c2 + fpp) / (2.0 * lim.c2))
    minus = np.sqrt((lim.c2 - fpp) / (2.0 * lim.c2))
    return np.stack([plus * np.exp(1j * np.pi * fp / lim.c1), minus + 0j], axis=-1)


def conjugate_encode(fp: float, fpp: float, lim: SignalLimits) -> np.ndarray:
    return conjugate_encode_many(np.float64(fp), np.float64(fpp), lim)


def _pick(scores: np.ndarray, *, maximize: bool) -> np.ndarray:
    """Index of the best score per row; near-ties (TIE_TOL) go to the lowest index."""
    if maximize:
        best = scores.max(axis=-1, keepdims=True)
        ok = scores >= best - TIE_TOL
    else:
        best = scores.min(axis=-1, keepdims=True)
        ok = scores <= best + TIE_TOL
    return np.argmax(ok, axis=-1)


def expectation_scores(psi: np.ndarray, p4_form: str = DEFAULT_P4_FORM) -> np.ndarray:
    """<psi|P_j|psi> for row-stacked qubits, shape (m, 5)."""
    ops = projector_set(p4_form)
    psi = np.asarray(psi, dtype=complex)
    return np.einsum("...i,kij,...j->...k", psi.conj(), ops, psi).real


def classify_expectation(psi, p4_form: str = DEFAULT_P4_FORM):
    """Label maximizing <psi|P_j|psi>. Returns (Label, scores)."""
    scores = expectation_scores(np.asarray(psi, dtype=complex), p4_form)
    return Label(int(_pick(scores, maximize=True))), scores


def distance_scores(psi: np.ndarray) -> np.ndarray:
    """D between each qubit and the top eigenvector of each operator, shape (m, 5)."""
    psi = np.atleast_2d(np.asarray(psi, dtype=complex))
    vecs = _dominant_eigenvectors()
    return np.stack([no_name_distance_pure_many(psi, v[None, :]) for v in vecs], axis=-1)


def classify_distance(psi):
    """Label minimizing D to the operators' top eigenvectors. Returns (Label, distances)."""
    d = distance_scores(psi)[0]
    return Label(int(_pick(d, maximize=False))), d


def classify_many(psi: np.ndarray, rule: str = "expectation", p4_form: str = DEFAULT_P4_FORM):
    """Vectorized labelling. Returns (labels as int array, scores (m, 5))."""
    if rule == "expectation":
        scores = expectation_scores(psi, p4_form)
        return _pick(scores, maximize=True), scores
    if rule == "distance":
        scores = distance_scores(psi)
        return _pick(scores, maximize=False), scores
    raise ValueError(f"rule must be one of {RULES}, got {rule!r}")


# -- signals -------------------------------------------------------------


@dataclass
class Derivatives:
    fp: np.ndarray
    fpp: np.ndarray
    n_clamped: int = 0


def estimate_derivatives(sig: SampledSignal, presmooth_sigma: float = 0.0,
                         limits: SignalLimits | None = None) -> Derivatives:
    """Central-difference f' and f'' with optional Gaussian pre-smoothing.

    ``presmooth_sigma`` is in samples (kernel truncated at 3 sigma, reflected
    boundaries). Endpoints use second-order one-sided stencils. When
    ``limits`` is given the results are clipped to the admissible box and
    the number of affected samples is reported.
    """
    if presmooth_sigma < 0:
        raise ValueError("presmooth_sigma must be >= 0")
    f = sig.values
    if presmooth_sigma > 0:
        f = gaussian_filter1d(f, presmooth_sigma, mode="reflect", truncate=3.0)
    h = sig.dt
    fp = np.empty_like(f)
    fpp = np.empty_like(f)
    fp[1:-1] = (f[2:] - f[:-2]) / (2.0 * h)
    fpp[1:-1] = (f[2:] - 2.0 * f[1:-1] + f[:-2]) / (h * h)
    fp[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h)
    fp[-1] = (3.0 * f[-1] - 4.0 * f[-2] + f[-3]) / (2.0 * h)
    fpp[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / (h * h)
    fpp[-1] = (2.0 * f[-1] - 5.0 * f[-2] + 4.0 * f[-3] - f[-4]) / (h * h)
    if limits is None:
        return Derivatives(fp, fpp)
    fp, fpp, n = clamp_samples(fp, fpp, limits)
    return Derivatives(fp, fpp, n)


@dataclass
class LabelMap:
    labels: np.ndarray  # int codes of Label
    scores: np.ndarray  # (n, 5)
    fp: np.ndarray
    fpp: np.ndarray
    states: np.ndarray  # (n, 2)
    n_clamped: int = 0

    def names(self) -> list[str]:
        return [LABEL_NAMES[i] for i in self.labels]

    def bloch(self) -> np.ndarray:
        return bloch_many(self.states)


def label_samples(fp, fpp, lim: SignalLimits, rule: str = "expectation",
                  p4_form: str = DEFAULT_P4_FORM) -> LabelMap:
    """Encode and classify arrays of derivative samples."""
    fp, fpp, n = clamp_samples(fp, fpp, lim)
    states = conjugate_encode_many(fp, fpp, lim)
    flat = states.reshape(-1, 2)
    labels, scores = classify_many(flat, rule, p4_form)
    return LabelMap(labels.reshape(fp.shape), scores.reshape(fp.shape + (5,)), fp, fpp, states, n)


def segment_signal(sig: SampledSignal, lim: SignalLimits, rule: str = "expectation",
                   presmooth_sigma: float = 0.0, p4_form: str = DEFAULT_P4_FORM) -> LabelMap:
    d = estimate_derivatives(sig, presmooth_sigma, lim)
    out = label_samples(d.fp, d.fpp, lim, rule, p4_form)
    out.n_clamped = d.n_clamped
    return out


# -- decision regions ----------------------------------------------------


def cell_centers(resolution: int, limit: float) -> np.ndarray:
    """Centers of ``resolution`` equal cells on [-limit, limit], exactly mirror-symmetric."""
    k = 2.0 * np.arange(resolution) + 1.0 - resolution
    return limit * k / resolution


@dataclass
class DecisionGrid:
    """Labels over the (f', f'') box. Rows run along f'' (ascending), columns along f'."""

    fp_axis: np.ndarray
    fpp_axis: np.ndarray
    labels: np.ndarray  # (rows, cols) int codes
    rule: str
    limits: SignalLimits
    p4_form: str = DEFAULT_P4_FORM
    diagnostics: dict = field(default_factory=dict)

    @property
    def rows(self) -> int:
        return self.labels.shape[0]

    @property
    def cols(self) -> int:
        return self.labels.shape[1]


def model_labels(fp, fpp, lim: SignalLimits) -> np.ndarray:
    """Reference partition built from the explicit derivative model.

    CONSTANT inside a disc of radius c/2 (c = min(c1, c2)); elsewhere the
    dominant derivative decides: MIN for f'' >= |f'|, MAX for -f'' >= |f'|,
    otherwise RISING/FALLING by the sign of f'.
    """
    fp = np.asarray(fp, dtype=float)
    fpp = np.asarray(fpp, dtype=float)
    radius = 0.5 * min(lim.c1, lim.c2)
    out = np.where(fp > 0, Label.RISING, Label.FALLING).astype(int)
    out = np.where(-fpp >= np.abs(fp), Label.MAX, out)
    out = np.where(fpp >= np.abs(fp), Label.MIN, out)
    out = np.where(np.hypot(fp, fpp) < radius, Label.CONSTANT, out)
    return out


def _constant_extent(labels_line: np.ndarray, axis: np.ndarray) -> float:
    """Half-width of the CONSTANT run containing the center of a symmetric line of cells."""
    n = labels_line.shape[0]
    hi = n // 2
    if labels_line[hi] != Label.CONSTANT:
        return 0.0
    j = hi
    while j + 1 < n and labels_line[j + 1] == Label.CONSTANT:
        j += 1
    if j + 1 == n:
        return float(axis[-1])
    return float(0.5 * (axis[j] + axis[j + 1]))


def closed_form_radii(rule: str, lim: SignalLimits, p4_form: str = DEFAULT_P4_FORM) -> dict:
    """Analytic CONSTANT-region half-widths along the f'' and f' axes, where known."""
    if rule == "model":
        r = 0.5 * min(lim.c1, lim.c2)
        return {"fpp_axis": r, "fp_axis": r}
    if rule == "expectation" and p4_form == "identity":
        # (1 + s) / 2 = 1/sqrt(2) on the f'' axis; cos(pi u) = sin(pi u) on the f' axis
        return {"fpp_axis": (SQRT2 - 1.0) * lim.c2, "fp_axis": 0.25 * lim.c1}
    if rule == "expectation":
        # (1 + s)/2 = (1 + sqrt(1 - s^2))/2
        return {"fpp_axis": lim.c2 / SQRT2, "fp_axis": None}
    # nearest top eigenvector: z+ vs x+ on the f'' axis, x+ vs the P2 direction on the f' axis
    return {"fpp_axis": lim.c2 / SQRT2, "fp_axis": 0.375 * lim.c1}


def decision_regions(lim: SignalLimits, resolution: int = 256, rule: str = "expectation",
                     p4_form: str = DEFAULT_P4_FORM) -> DecisionGrid:
    """Label every cell center of a resolution x resolution grid over the (f', f'') box."""
    if int(resolution) != resolution or resolution < 16:
        raise ValueError(f"resolution must be an integer >= 16, got {resolution}")
    resolution = int(resolution)
    fp_axis = cell_centers(resolution, lim.c1)
    fpp_axis = cell_centers(resolution, lim.c2)
    fp, fpp = np.meshgrid(fp_axis, fpp_axis)
    if rule == "model":
        labels = model_labels(fp, fpp, lim)
    elif rule in RULES:
        labels = label_samples(fp, fpp, lim, rule, p4_form).labels
    else:
        raise ValueError(f"rule must be one of {RULES + ('model',)}, got {rule!r}")

    mid = resolution // 2
    # two middle lines straddle the axis for even resolution; report the wider run
    fpp_cols = {mid, resolution - 1 - mid}
    fp_rows = {mid, resolution - 1 - mid}
    measured_fpp = max(_constant_extent(labels[:, c], fpp_axis) for c in fpp_cols)
    measured_fp = max(_constant_extent(labels[r, :], fp_axis) for r in fp_rows)
    diagnostics = {
        "rule": rule,
        "p4_form": p4_form,
        "resolution": resolution,
        "c1": lim.c1,
        "c2": lim.c2,
        "cell_size_fp": 2.0 * lim.c1 / resolution,
        "cell_size_fpp": 2.0 * lim.c2 / resolution,
        "measured_constant_radius_fpp_axis": measured_fpp,
        "measured_constant_radius_fp_axis": measured_fp,
        "closed_form_radius": closed_form_radii(rule, lim, p4_form),
        "model_radius": 0.5 * min(lim.c1, lim.c2),
        "label_counts": {name: int(np.count_nonzero(labels == i)) for i, name in enumerate(LABEL_NAMES)},
    }
    return DecisionGrid(fp_axis, fpp_axis, labels, rule, lim, p4_form, diagnostics)
