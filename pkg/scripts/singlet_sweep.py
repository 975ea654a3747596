"""Sweep the angle between detector settings and tabulate the simulated correlator."""

import argparse
import math

from s7check.bell_sim import simulate
from s7check.vectors import UnitVector3


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trials", type=int, default=10**6)
    p.add_argument("--steps", type=int, default=13)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args(argv)

    a = UnitVector3(1.0, 0.0, 0.0)
    print(f"{'theta':>8} {'mean':>12} {'-cos':>12} {'|err|':>10} {'residual':>10} {'stderr':>10}")
    for k in range(args.steps):
        theta = math.pi * k / (args.steps - 1)
        b = UnitVector3.normalized([math.cos(theta), math.sin(theta), 0.0])
        est = simulate(a, b, args.trials, args.seed + k)
        print(f"{theta:8.4f} {est.scalar_mean:12.8f} {-a.dot(b):12.8f} "
              f"{abs(est.scalar_error):10.2e} {est.bivector_residual:10.2e} {est.stderr:10.2e}")


if __name__ == "__main__":
    main()
