"""Qubit distance surfaces for the three parameter sweeps, written as CSV grids."""

import argparse
from pathlib import Path

import numpy as np

from conjvar import codecs
from conjvar.encoding import qubit_distance_surface

SWEEPS = [
    ("fix_p", [{"p": p} for p in (0.1, 0.3, 0.5)]),
    ("fix_phase", [{"dgamma": g} for g in (0.0, np.pi / 3, np.pi / 2, np.pi)]),
    ("p_equals_q", [{}]),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--resolution", type=int, default=101)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for mode, params in SWEEPS:
        for kw in params:
            s = qubit_distance_surface(mode, args.resolution, **kw)
            tag = "_".join(f"{k}{v:.4f}" for k, v in kw.items())
            path = out / f"surface_{mode}{'_' + tag if tag else ''}.csv"
            header = [f"{s.row_label}\\{s.col_label}"] + [codecs.format_float(c) for c in s.cols]
            codecs.write_csv(path, header, ([float(r)] + v.tolist() for r, v in zip(s.rows, s.values)))
            print(f"{path}: D in [{s.values.min():.3f}, {s.values.max():.3f}]")


if __name__ == "__main__":
    main()
