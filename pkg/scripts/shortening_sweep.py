#!/usr/bin/env python3
"""Sweep seeded Hamiltonian bounded-independence instances and measure how
far the one-vertex shortening chain carries before its arithmetic gate stops.

Usage: python scripts/shortening_sweep.py [--instances N] [--nmax N]
"""

import argparse
import random
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pancyclic.core import validate_cycle
from pancyclic.generators import GeneratorConfig, gen_random_bounded_alpha
from pancyclic.spectrum import cycle_n_minus_1, upper_range_certificates


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--instances", type=int, default=60)
    parser.add_argument("--nmax", type=int, default=30)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    t0 = time.monotonic()
    outcomes = Counter()
    chain_floor = Counter()
    for _ in range(args.instances):
        k = rng.choice((1, 2, 3))
        n_min = 2 * k * k + 2 * k + 1
        if n_min > args.nmax:
            continue
        n = rng.randint(n_min, args.nmax)
        inst = gen_random_bounded_alpha(
            GeneratorConfig(n=n, k=k, seed=rng.randrange(10**9))
        )
        w = cycle_n_minus_1(inst.graph, k, ham=inst.planted)
        assert w.length == n - 1 and validate_cycle(inst.graph, w)
        outcomes[(k, "n-1 ok")] += 1

        frag = upper_range_certificates(inst.graph, k, 1.0, ham=inst.planted)
        witnessed = sorted(
            ell for ell, e in frag.entries.items() if e.witness is not None
        )
        floor_reached = witnessed[0] if witnessed else None
        chain_floor[(k, floor_reached == 2 * k * k + 2 * k)] += 1

    print(f"{args.instances} instances in {time.monotonic() - t0:.1f}s")
    for (k, label), count in sorted(outcomes.items()):
        print(f"  k={k}: {label}: {count}")
    print("chain reached the arithmetic floor 2k^2+2k exactly:")
    for (k, exact), count in sorted(chain_floor.items()):
        print(f"  k={k}: {'yes' if exact else 'no (n below floor already)'}: {count}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
