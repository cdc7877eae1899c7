"""Deterministic demo inputs: the cos/constant test signal and a synthetic noisy image."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .segmentation import Label, SampledSignal, SignalLimits, label_samples

COSCONST_SPAN = (-2.0 * np.pi, 3.0 * np.pi)


def cosconst(t) -> np.ndarray:
    """cos(t) for t < 2 pi, 1 afterwards."""
    t = np.asarray(t, dtype=float)
    return np.where(t < 2.0 * np.pi, np.cos(t), 1.0)


def cosconst_derivatives(t) -> tuple[np.ndarray, np.ndarray]:
    t = np.asarray(t, dtype=float)
    inside = t < 2.0 * np.pi
    return np.where(inside, -np.sin(t), 0.0), np.where(inside, -np.cos(t), 0.0)


def cosconst_signal(n: int = 2000) -> SampledSignal:
    ts = np.linspace(*COSCONST_SPAN, n)
    return SampledSignal(ts, cosconst(ts))


def cosconst_oracle_labels(ts, lim: SignalLimits, rule: str = "expectation", **kw) -> np.ndarray:
    """Labels from the analytic derivatives."""
    fp, fpp = cosconst_derivatives(ts)
    return label_samples(fp, fpp, lim, rule, **kw).labels


@dataclass
class SyntheticImage:
    clean: np.ndarray
    noisy: np.ndarray
    noise_amplitude: float
    seed: int


def synthetic_image(size: int = 512, seed: int = 7, noise_amplitude: float = 0.05) -> SyntheticImage:
    """Flat background with a bright rectangle, a gentle ramp, a sharp and a broad blob.

    Uniform noise in [-amplitude, amplitude] is added from a seeded generator
    and the result clipped to [0, 1].
    """
    s = size / 512.0
    yy, xx = np.mgrid[0:size, 0:size].astype(float)
    clean = np.full((size, size), 0.3)

    r0, r1, c0, c1 = (int(round(v * s)) for v in (64, 192, 64, 224))
    clean[r0:r1, c0:c1] = 0.8

    r0, r1, c0, c1 = (int(round(v * s)) for v in (288, 448, 64, 224))
    clean[r0:r1, c0:c1] = 0.3 + 0.0015 * (xx[r0:r1, c0:c1] - c0) / s

    sharp = 0.6 * np.exp(-((yy - 160 * s) ** 2 + (xx - 384 * s) ** 2) / (2 * 1.5 ** 2))
    broad = 0.4 * np.exp(-((yy - 384 * s) ** 2 + (xx - 384 * s) ** 2) / (2 * (12 * s) ** 2))
    clean = clean + sharp + broad

    rng = np.random.default_rng(seed)
    noisy = np.clip(clean + rng.uniform(-noise_amplitude, noise_amplitude, clean.shape), 0.0, 1.0)
    return SyntheticImage(clean, noisy, noise_amplitude, seed)


def gaussian_blob(size: int = 33, amplitude: float = 0.8, sigma: float = 1.5, base: float = 0.1) -> np.ndarray:
    c = (size - 1) / 2.0
    yy, xx = np.mgrid[0:size, 0:size].astype(float)
    return base + amplitude * np.exp(-((yy - c) ** 2 + (xx - c) ** 2) / (2.0 * sigma ** 2))
