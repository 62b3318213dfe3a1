""" Time pair sweeps over a range of sizes.

Example usage::

    python benchmark.py results.csv --families gl/so gl/glpq --sizes 2 3 4 5
    python benchmark.py results.csv --modes montecarlo symbolic --rounds 3

Each row of the output CSV is one sweep: the family, its parameters, the
mode, the number of orbits, the overall verdict and wall-clock timings.

"""
from __future__ import print_function
import argparse
import logging

import numpy as np
import pandas as pd

from indexlab import IndexLabException
from indexlab.gnib import MODES, IndexOptions, gnib_check
from indexlab.pairs import make_pair
from indexlab.utils import Timer

logger = logging.getLogger(__name__)

SIZED = ('gl/so', 'gl/sp', 'sp/gln', 'so/gln')
SPLIT = ('gl/glpq', 'so/sopq', 'sp/sppq')


def pair_params(family, size):
    """ Parameters for a sweep of the given size, or None if there is none.

    For the split families the size is p + q with p = size // 2; otherwise it
    is the family's n.

    """
    if family in SIZED:
        return {'n': size}
    p = size // 2
    if p < 1:
        return None
    return {'p': p, 'q': size - p}


def run(families, sizes, modes, rounds, seed):
    rng = np.random.RandomState(seed)
    results = []
    for family in families:
        for size in sizes:
            params = pair_params(family, size)
            if params is None:
                continue
            pair = make_pair(family, **params)
            for mode in modes:
                for r in range(rounds):
                    options = IndexOptions(mode=mode, seed=rng.randint(2 ** 31 - 1))
                    try:
                        with Timer() as timer:
                            report = gnib_check(pair, options=options)
                    except IndexLabException as e:
                        logger.warning("%s %s round %d failed: %s",
                                       pair.label, mode, r, e)
                        continue
                    orbit_ms = [v.ms for v in report.verdicts if v.ms is not None]
                    results.append({
                        'family': family, 'size': size, 'pair': pair.label,
                        'mode': mode, 'round': r,
                        'orbits': len(report.verdicts),
                        'overall': report.overall, 'ms': timer.ms,
                        'max_orbit_ms': max(orbit_ms) if orbit_ms else 0})
                    logger.info("%s %s round %d: %d ms", pair.label, mode, r, timer.ms)
    return pd.DataFrame.from_records(results)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()

    parser.add_argument(
        'filename', help='Name of the CSV file to write results to.')

    parser.add_argument(
        '--families', nargs='+', default=list(SIZED + SPLIT),
        choices=SIZED + SPLIT, help='Families of symmetric pairs to sweep.')

    parser.add_argument(
        '--sizes', nargs='+', type=int, default=[2, 3, 4, 5],
        help='Sizes n (or p + q) to sweep.')

    parser.add_argument(
        '--modes', nargs='+', default=['auto'], choices=MODES,
        help='Rank modes to time.')

    parser.add_argument(
        '--rounds', type=int, default=1,
        help='Number of timed sweeps per pair and mode.')

    parser.add_argument(
        '--seed', type=int, default=0,
        help='Seed for the Monte-Carlo points.')

    parser.add_argument(
        '-v', action='store_true', help='Verbose output.')

    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO if args.v else logging.WARNING)

    df = run(args.families, args.sizes, args.modes, args.rounds, args.seed)
    df.to_csv(args.filename, index=False)
    if len(df):
        print(df.groupby(['pair', 'mode'])['ms'].mean())
