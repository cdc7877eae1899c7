"""Per-pixel conjugate-variable labelling of grey images and label-driven smoothing.

In 2-d the slope variable is the gradient magnitude (so it is never
negative) and the curvature variable is the Laplacian. Borders are handled
by half-sample reflection everywhere.
"""

from __future__ import annotations

import numpy as np
from scipy.ndimage import gaussian_filter, uniform_filter

from .segmentation import (
    DEFAULT_P4_FORM,
    Derivatives,
    Label,
    LabelMap,
    SignalLimits,
    clamp_samples,
    label_samples,
)

DEFAULT_IMAGE_LIMITS = SignalLimits(c1=0.5, c2=1.0)
LABEL_GRAY_LEVELS = np.array([0, 51, 102, 153, 204], dtype=np.uint8)


def as_image(img) -> np.ndarray:
    img = np.asarray(img, dtype=float)
    if img.ndim != 2:
        raise ValueError(f"expected a 2-d grey image, got shape {img.shape}")
    if not np.all(np.isfinite(img)) or img.min(initial=0) < -1e-9 or img.max(initial=0) > 1 + 1e-9:
        raise ValueError("pixel values must lie in [0, 1]")
    return img


def image_derivatives(img, presmooth_sigma: float = 0.0,
                      limits: SignalLimits | None = None) -> Derivatives:
    """Gradient magnitude and Laplacian from central differences (unit pixel spacing)."""
    img = as_image(img)
    h, w = img.shape
    if h < 5 or w < 5:
        raise ValueError(f"image must be at least 5x5, got {w}x{h}")
    if presmooth_sigma < 0:
        raise ValueError("presmooth_sigma must be >= 0")
    if presmooth_sigma > 0:
        img = gaussian_filter(img, presmooth_sigma, mode="reflect", truncate=3.0)
    f = np.pad(img, 1, mode="symmetric")
    centre = f[1:-1, 1:-1]
    left, right = f[1:-1, :-2], f[1:-1, 2:]
    up, down = f[:-2, 1:-1], f[2:, 1:-1]
    gx = 0.5 * (right - left)
    gy = 0.5 * (down - up)
    lap = (right - 2.0 * centre + left) + (down - 2.0 * centre + up)
    fp = np.hypot(gx, gy)
    if limits is None:
        return Derivatives(fp, lap)
    fp, lap, n = clamp_samples(fp, lap, limits)
    return Derivatives(fp, lap, n)


def label_image(img, lim: SignalLimits = DEFAULT_IMAGE_LIMITS, rule: str = "expectation",
                presmooth_sigma: float = 0.0, p4_form: str = DEFAULT_P4_FORM) -> LabelMap:
    """Classify every pixel; ``labels`` has the image's shape."""
    d = image_derivatives(img, presmooth_sigma, lim)
    out = label_samples(d.fp, d.fpp, lim, rule, p4_form)
    out.n_clamped = d.n_clamped
    return out


def _check_kernel(img: np.ndarray, kernel: int) -> None:
    if int(kernel) != kernel or kernel < 3 or kernel % 2 == 0:
        raise ValueError(f"kernel must be an odd integer >= 3, got {kernel}")
    if kernel > min(img.shape):
        raise ValueError(f"kernel {kernel} is larger than the image {img.shape[1]}x{img.shape[0]}")


def uniform_mean_filter(img, kernel: int = 15) -> np.ndarray:
    """Box mean over a kernel x kernel window."""
    img = as_image(img)
    _check_kernel(img, kernel)
    return uniform_filter(img, size=int(kernel), mode="reflect")


def adaptive_mean_filter(img, labels: np.ndarray, kernel: int = 15) -> np.ndarray:
    """Box mean applied only where the label is CONSTANT; every other pixel is copied."""
    img = as_image(img)
    labels = np.asarray(labels)
    if labels.shape != img.shape:
        raise ValueError(f"label map {labels.shape} does not match image {img.shape}")
    smoothed = uniform_mean_filter(img, kernel)
    return np.where(labels == Label.CONSTANT, smoothed, img)


def labels_to_gray(labels: np.ndarray) -> np.ndarray:
    return LABEL_GRAY_LEVELS[np.asarray(labels, dtype=int)]


def edge_energy(img: np.ndarray, mask: np.ndarray) -> float:
    """Sum of |neighbour differences| over 4-connected pixel pairs that both lie in ``mask``."""
    img = np.asarray(img, dtype=float)
    mask = np.asarray(mask, dtype=bool)
    horiz = mask[:, 1:] & mask[:, :-1]
    vert = mask[1:, :] & mask[:-1, :]
    return float(np.sum(np.abs(np.diff(img, axis=1))[horiz]) + np.sum(np.abs(np.diff(img, axis=0))[vert]))


def max_gradient(img: np.ndarray) -> float:
    """Largest central-difference gradient magnitude."""
    d = image_derivatives(np.clip(img, 0.0, 1.0))
    return float(d.fp.max())
