#!/usr/bin/env python3
"""Randomized cross-verification sweep.

Generates seeded random decomposition trees, keeps the ones whose realized
size is small enough for the exact solvers, and checks the two linear fast
paths against brute force on the squared linegraph:

  sci(t)      vs  exact chromatic number
  im(t)       vs  exact maximum independent set (witness re-verified)

Prints a summary and exits 1 on any disagreement.
"""

import argparse
import time
from dataclasses import dataclass

from strongedge import (
    OracleReport,
    exact_chromatic_number,
    exact_max_independent_set,
    im,
    is_induced_matching,
    random_tree_cograph,
    realize,
    sci,
    square_of_linegraph,
)
from strongedge.oracle import timed


@dataclass(frozen=True)
class SweepConfig:
    count: int = 200
    seed: int = 0
    max_n: int = 12
    depth: int = 4
    leaf_size: int = 6
    verbose: bool = False


def run(config: SweepConfig) -> int:
    reports: list[OracleReport] = []
    bad_witness = 0
    seed = config.seed
    kept = 0
    t0 = time.perf_counter()
    while kept < config.count:
        tree = random_tree_cograph(seed, config.depth, config.leaf_size)
        seed += 1
        if not 1 <= tree.n <= config.max_n:
            continue
        kept += 1
        g = realize(tree)
        sq = square_of_linegraph(g).graph
        desc = f"seed={seed - 1}(n={g.n},m={g.m})"

        chi, t_chi = timed(exact_chromatic_number, sq)
        reports.append(OracleReport.compare(
            desc, "strong chromatic index", sci(tree).value, chi, t_chi))

        mis, t_mis = timed(exact_max_independent_set, sq)
        result = im(tree)
        reports.append(OracleReport.compare(
            desc, "maximum induced matching", result.value, mis, t_mis))
        if len(result.witness) != result.value or not is_induced_matching(
            g, list(result.witness)
        ):
            bad_witness += 1
            print(f"BAD WITNESS {desc}: {result.witness}")

    disagreements = [r for r in reports if not r.agree]
    for r in disagreements:
        print(f"DISAGREE {r.instance} {r.prop}: "
              f"fast={r.fast_value} oracle={r.oracle_value}")
    if config.verbose:
        for r in reports:
            print(f"{r.instance} {r.prop}: fast={r.fast_value} "
                  f"oracle={r.oracle_value} {r.verdict} ({r.elapsed:.3f}s)")

    elapsed = time.perf_counter() - t0
    print(f"{kept} instances, {len(reports)} comparisons, "
          f"{len(disagreements)} disagreements, {bad_witness} bad witnesses "
          f"({elapsed:.1f}s)")
    return 0 if not disagreements and bad_witness == 0 else 1


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--depth", type=int, default=4)
    parser.add_argument("--leaf-size", type=int, default=6)
    parser.add_argument("--verbose", action="store_true")
    a = parser.parse_args()
    return run(SweepConfig(a.count, a.seed, a.max_n, a.depth, a.leaf_size,
                           a.verbose))


if __name__ == "__main__":
    raise SystemExit(main())
