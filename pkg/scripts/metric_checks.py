"""Randomized checks of the metric properties of D, printed as a small table."""

import argparse

import numpy as np

from conjvar.metrics import no_name_distance, no_name_distance_pure
from conjvar.quantum_core import purity, random_density, random_pure_state


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    print(f"{'dim':>4} {'min triangle slack':>20} {'max D':>8} {'min D(rho,rho) mixed':>22} {'max D(psi,psi)':>15}")
    for d in (2, 3, 4, 6, 8):
        slack, dmax, self_mixed, self_pure = np.inf, 0.0, np.inf, 0.0
        for _ in range(args.trials):
            a, b, c = (random_density(d, rng) for _ in range(3))
            ab, bc, ac = no_name_distance(a, b), no_name_distance(b, c), no_name_distance(a, c)
            slack = min(slack, ab + bc - ac)
            dmax = max(dmax, ab, bc, ac)
            if purity(a) < 1 - 1e-6:
                self_mixed = min(self_mixed, no_name_distance(a, a))
            psi = random_pure_state(d, rng)
            self_pure = max(self_pure, no_name_distance_pure(psi, psi))
        print(f"{d:>4} {slack:>20.3e} {dmax:>8.4f} {self_mixed:>22.4f} {self_pure:>15.1e}")


if __name__ == "__main__":
    main()
