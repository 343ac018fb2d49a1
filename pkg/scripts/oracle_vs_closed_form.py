"""Pit the closed-form gate fidelity against the variational oracle.

For seeded random qubit gate pairs, minimizes the branch overlap
numerically (projected gradient over eigenweights plus random probes)
and compares with cos^2 of the covering-arc half-width at one, two, and
three parallel uses.  Prints worst-case error and timing per copy count.

Usage:
    python scripts/oracle_vs_closed_form.py --pairs 25 --budget 8 --seed 3
"""

import argparse
import math
import time

import numpy as np

from gatediscrim import Gate, gate_distance, oracle_min_overlap


def random_special_unitary(rng: np.random.Generator) -> Gate:
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    return Gate(q / np.linalg.det(q) ** 0.5)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=25)
    ap.add_argument("--budget", type=int, default=8, help="random-probe restarts per oracle call")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    pairs = [(random_special_unitary(rng), random_special_unitary(rng))
             for _ in range(args.pairs)]

    print(f"{'n':>3} {'worst |closed - oracle|':>24} {'seconds':>9}")
    for n in (1, 2, 3):
        worst = 0.0
        start = time.perf_counter()
        for i, (u1, u2) in enumerate(pairs):
            delta = gate_distance(u1, u2)
            closed = 0.0 if n * delta >= math.pi / 2 else math.cos(n * delta) ** 2
            numeric = oracle_min_overlap(u1, u2, n=n, budget=args.budget, seed=i)
            worst = max(worst, abs(closed - numeric))
        elapsed = time.perf_counter() - start
        print(f"{n:>3} {worst:>24.3e} {elapsed:>9.2f}")


if __name__ == "__main__":
    main()
