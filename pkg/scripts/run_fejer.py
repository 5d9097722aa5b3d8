#!/usr/bin/env python3
"""Fejer projection growth experiment.

Emits plot-ready two-column text: N and ||Q+ F_N||_{A^2(mu)}.  For measures
with a divergent moment sum the column grows without bound; for convergent
ones it saturates at sqrt(2*pi*sum sigma_j).
"""

import argparse
import math
import sys

from carleson_lab.cli import resolve_measure
from carleson_lab.harness import fejer_experiment


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--measure", default="lebesgue-disk")
    ap.add_argument("--n-list", type=int, nargs="+",
                    default=[2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048])
    ap.add_argument("--out", default=None)
    args = ap.parse_args(argv)

    mu = resolve_measure(args.measure, "radial")
    rows = fejer_experiment(mu, args.n_list)
    lines = [f"{r['n']} {math.sqrt(r['projection_sq_norm']):.12e}" for r in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
