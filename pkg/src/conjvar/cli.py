"""Command-line front-end.

Exit codes: 0 success, 2 malformed input or bad flags, 3 invalid
probability distribution, 4 invalid signal.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import codecs
from .demos import cosconst_signal, synthetic_image
from .encoding import bloch_many, encode, qubit_distance_surface
from .errors import FormatError, InvalidDistributionError, InvalidSignalError
from .image_pipeline import (
    DEFAULT_IMAGE_LIMITS,
    adaptive_mean_filter,
    label_image,
    labels_to_gray,
    uniform_mean_filter,
)
from .metrics import (
    angle_relations,
    classical_distances,
    fidelity,
    no_name_distance_pure,
    principal_euclidean_distance,
)
from .segmentation import (
    DEFAULT_P4_FORM,
    LABEL_NAMES,
    P4_FORMS,
    RULES,
    SampledSignal,
    SignalLimits,
    decision_regions,
    segment_signal,
)

log = logging.getLogger("conjvar")

EXIT_OK = 0
EXIT_FORMAT = 2
EXIT_DISTRIBUTION = 3
EXIT_SIGNAL = 4


def _positive(text: str) -> float:
    v = float(text)
    if not (np.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _nonneg(text: str) -> float:
    v = float(text)
    if not (np.isfinite(v) and v >= 0):
        raise argparse.ArgumentTypeError(f"expected a number >= 0, got {text}")
    return v


def _write_json(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2, allow_nan=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- distances -----------------------------------------------------------


def _read_distribution(path: str) -> np.ndarray:
    p = codecs.read_vector_csv(path)
    total = float(p.sum())
    if np.any(p < -1e-12) or abs(total - 1.0) > 1e-9:
        raise InvalidDistributionError(f"{path}: not a distribution (sum = {total!r}, min = {p.min()!r})")
    return p


def cmd_distances(args) -> int:
    p = _read_distribution(args.p)
    q = _read_distribution(args.q)
    if p.shape != q.shape:
        raise FormatError(f"p has {p.shape[0]} entries, q has {q.shape[0]}")
    if args.phases:
        _, phases = codecs.read_numeric_csv(args.phases)
        if phases.shape != (p.shape[0], 2):
            raise FormatError(f"{args.phases}: expected {p.shape[0]} rows of (phi, chi)")
        phi, chi = phases[:, 0], phases[:, 1]
    else:
        phi = chi = np.zeros_like(p)
    psi, xi = encode(p, phi), encode(q, chi)
    psi_r, xi_r = encode(p), encode(q)
    angles = angle_relations(p, q)
    report = classical_distances(p, q).to_dict()
    report.update(
        no_name_distance_pure=no_name_distance_pure(psi, xi),
        no_name_distance_real=no_name_distance_pure(psi_r, xi_r),
        principal_euclidean=principal_euclidean_distance(psi, xi),
        principal_euclidean_real=principal_euclidean_distance(psi_r, xi_r),
        fidelity=fidelity(p, q),
        omega=angles.omega,
    )
    _write_json(report, args.out)
    return EXIT_OK


# -- surfaces ------------------------------------------------------------

FIGURE_MODES = {1: "fix_p", 2: "fix_phase", 3: "p_equals_q"}


def cmd_surface(args) -> int:
    mode = FIGURE_MODES[args.figure]
    surf = qubit_distance_surface(mode, args.resolution, p=args.p, dgamma=args.dgamma)
    header = [f"{surf.row_label}\\{surf.col_label}"] + [codecs.format_float(c) for c in surf.cols]
    rows = ([float(r)] + [float(v) for v in line] for r, line in zip(surf.rows, surf.values))
    codecs.write_csv(args.out, header, rows)
    return EXIT_OK


# -- 1-d segmentation ----------------------------------------------------


def cmd_segment1d(args) -> int:
    if args.demo == "cosconst":
        sig = cosconst_signal(args.n)
    elif args.input:
        _, data = codecs.read_numeric_csv(args.input)
        if data.shape[1] < 2:
            raise FormatError(f"{args.input}: expected columns t,f")
        sig = SampledSignal(data[:, 0], data[:, 1])
    else:
        raise FormatError("segment1d needs an input CSV or --demo cosconst")
    lim = SignalLimits(args.c1, args.c2)
    res = segment_signal(sig, lim, args.rule, args.sigma, args.p4_form)
    if res.n_clamped:
        log.info("clamped %d samples to the (c1, c2) box", res.n_clamped)
    bloch = bloch_many(res.states)
    header = ["t", "f", "fp", "fpp", "label", "s0", "s1", "s2", "s3", "s4", "bloch_x", "bloch_y", "bloch_z"]
    rows = (
        [float(sig.ts[i]), float(sig.values[i]), float(res.fp[i]), float(res.fpp[i]), LABEL_NAMES[res.labels[i]]]
        + [float(s) for s in res.scores[i]]
        + [float(b) for b in bloch[i]]
        for i in range(sig.ts.shape[0])
    )
    codecs.write_csv(args.out, header, rows)
    return EXIT_OK


# -- images --------------------------------------------------------------


def _load_image(args) -> np.ndarray:
    if args.demo == "synth":
        return codecs.to_bytes(synthetic_image(args.size, args.seed).noisy)
    if not args.input:
        raise FormatError("need an input PGM or --demo synth")
    return codecs.read_pgm(args.input)


def _image_labels(raw: np.ndarray, args):
    lim = SignalLimits(args.c1, args.c2)
    return label_image(codecs.to_unit(raw), lim, args.rule, args.sigma, args.p4_form)


def cmd_segment2d(args) -> int:
    res = _image_labels(_load_image(args), args)
    codecs.write_pgm(args.out, labels_to_gray(res.labels))
    return EXIT_OK


def cmd_filter(args) -> int:
    raw = _load_image(args)
    img = codecs.to_unit(raw)
    if args.mode == "uniform":
        out = uniform_mean_filter(img, args.kernel)
    else:
        res = _image_labels(raw, args)
        out = adaptive_mean_filter(img, res.labels, args.kernel)
        if args.labels_out:
            codecs.write_pgm(args.labels_out, labels_to_gray(res.labels))
    codecs.write_pgm(args.out, codecs.to_bytes(out))
    return EXIT_OK


def cmd_synth(args) -> int:
    codecs.write_pgm(args.out, codecs.to_bytes(synthetic_image(args.size, args.seed).noisy))
    return EXIT_OK


# -- decision regions ----------------------------------------------------


def cmd_regions(args) -> int:
    grid = decision_regions(SignalLimits(args.c1, args.c2), args.resolution, args.rule, args.p4_form)
    header = ["fpp\\fp"] + [codecs.format_float(v) for v in grid.fp_axis]
    rows = ([float(v)] + [LABEL_NAMES[c] for c in line] for v, line in zip(grid.fpp_axis, grid.labels))
    codecs.write_csv(args.out, header, rows)
    sidecar = args.diagnostics or str(Path(args.out).with_suffix(".diagnostics.json"))
    _write_json(grid.diagnostics, sidecar)
    return EXIT_OK


# -- parser --------------------------------------------------------------


def _add_limits(sp, c1: float, c2: float) -> None:
    sp.add_argument("--c1", type=_positive, default=c1, help="limit of |f'| (default %(default)s)")
    sp.add_argument("--c2", type=_positive, default=c2, help="limit of |f''| (default %(default)s)")


def _add_classifier(sp) -> None:
    sp.add_argument("--rule", choices=RULES, default="expectation")
    sp.add_argument("--sigma", type=_nonneg, default=0.0, help="Gaussian pre-smoothing in samples")
    sp.add_argument("--p4-form", choices=P4_FORMS, default=DEFAULT_P4_FORM)


def _add_image_source(sp) -> None:
    sp.add_argument("input", nargs="?", help="binary 8-bit PGM (P5)")
    sp.add_argument("--demo", choices=["synth"])
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--size", type=int, default=512)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="conjvar", description=__doc__.splitlines()[0])
    ap.add_argument("--threads", type=int, default=None,
                    help="accepted for compatibility; kernels are vectorized and single-threaded")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("distances", help="classical and quantum distances of two distributions")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--phases", help="CSV with columns phi,chi (phases for p and q)")
    sp.add_argument("--out", help="JSON output path (default stdout)")
    sp.set_defaults(func=cmd_distances)

    sp = sub.add_parser("surface", help="qubit distance surface as a CSV grid")
    sp.add_argument("--figure", type=int, choices=sorted(FIGURE_MODES), required=True)
    sp.add_argument("--p", type=float, default=0.5, help="fixed p(x) for figure 1")
    sp.add_argument("--dgamma", type=float, default=0.0, help="fixed phase difference for figure 2")
    sp.add_argument("--resolution", type=int, default=101)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_surface)

    sp = sub.add_parser("segment1d", help="label a sampled 1-d signal")
    sp.add_argument("input", nargs="?", help="CSV with columns t,f")
    sp.add_argument("--demo", choices=["cosconst"])
    sp.add_argument("--n", type=int, default=2000)
    _add_limits(sp, 1.0, 1.0)
    _add_classifier(sp)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_segment1d)

    sp = sub.add_parser("segment2d", help="label every pixel of a grey image")
    _add_image_source(sp)
    _add_limits(sp, DEFAULT_IMAGE_LIMITS.c1, DEFAULT_IMAGE_LIMITS.c2)
    _add_classifier(sp)
    sp.add_argument("--out", required=True, help="label PGM, grey levels 0,51,102,153,204 for P0..P4")
    sp.set_defaults(func=cmd_segment2d)

    sp = sub.add_parser("filter", help="uniform or label-adaptive box filtering")
    _add_image_source(sp)
    _add_limits(sp, DEFAULT_IMAGE_LIMITS.c1, DEFAULT_IMAGE_LIMITS.c2)
    _add_classifier(sp)
    sp.add_argument("--mode", choices=["uniform", "adaptive"], default="adaptive")
    sp.add_argument("--kernel", type=int, default=15)
    sp.add_argument("--labels-out", help="also write the label PGM (adaptive mode)")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_filter)

    sp = sub.add_parser("synth", help="write the seeded synthetic test image")
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--size", type=int, default=512)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("regions", help="decision regions over the (f', f'') box")
    _add_limits(sp, 1.0, 1.0)
    sp.add_argument("--resolution", type=int, default=256)
    sp.add_argument("--rule", choices=RULES + ("model",), default="expectation")
    sp.add_argument("--p4-form", choices=P4_FORMS, default=DEFAULT_P4_FORM)
    sp.add_argument("--diagnostics", help="sidecar JSON path (default <out>.diagnostics.json)")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_regions)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InvalidDistributionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISTRIBUTION
    except InvalidSignalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIGNAL
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
