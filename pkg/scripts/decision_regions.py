"""Decision regions for every rule, with the measured CONSTANT radii next to their closed forms."""

import argparse
import json
from pathlib import Path

import numpy as np

from conjvar import codecs
from conjvar.segmentation import LABEL_NAMES, SignalLimits, decision_regions

RUNS = [("expectation", "identity"), ("expectation", "projector"), ("distance", "identity"), ("model", "identity")]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--c1", type=float, default=1.0)
    ap.add_argument("--c2", type=float, default=1.0)
    ap.add_argument("--resolution", type=int, default=256)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    lim = SignalLimits(args.c1, args.c2)
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    summary = []
    for rule, form in RUNS:
        g = decision_regions(lim, args.resolution, rule, form)
        d = g.diagnostics
        name = f"regions_{rule}_{form}" if rule == "expectation" else f"regions_{rule}"
        header = ["fpp\\fp"] + [codecs.format_float(v) for v in g.fp_axis]
        rows = ([float(v)] + [LABEL_NAMES[c] for c in line] for v, line in zip(g.fpp_axis, g.labels))
        codecs.write_csv(out / f"{name}.csv", header, rows)
        summary.append(d)
        cf = d["closed_form_radius"]
        print(f"{name:32s} f'' radius {d['measured_constant_radius_fpp_axis']:.4f} (closed form {cf['fpp_axis']:.4f})"
              f"  f' radius {d['measured_constant_radius_fp_axis']:.4f}"
              f" (closed form {cf['fp_axis'] if cf['fp_axis'] is None else round(cf['fp_axis'], 4)})")
    print(f"model radius c/2 = {0.5 * min(lim.c1, lim.c2)}; (sqrt2 - 1) c2 = {(np.sqrt(2) - 1) * lim.c2:.4f}")
    (out / "regions_summary.json").write_text(json.dumps(summary, indent=2) + "\n")


if __name__ == "__main__":
    main()
