#!/usr/bin/env python3
"""Blow-up experiment for the adapted-pair inequality.

Probes the non-Carleson density (1-r)^{-1/2} through its boundary
truncations 1_{[0, 1-eps)}: each truncation is an honest Carleson measure,
but the corpus maximum of the adapted inequality ratio grows as eps -> 0.
Emits two-column text: eps and max_ratio.
"""

import argparse
import sys

from carleson_lab.harness import corpus_scan
from carleson_lab.measures import RadialMeasure, RadialPiece


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps", type=float, nargs="+", default=[1e-1, 1e-2, 1e-3])
    ap.add_argument("--power", type=float, default=-0.5)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--n-max", type=int, default=64)
    ap.add_argument("--out", default=None)
    args = ap.parse_args(argv)

    lines = []
    for eps in args.eps:
        mu = RadialMeasure(pieces=(RadialPiece(0.0, 1.0 - eps, 1.0, args.power, 0.0),))
        rep = corpus_scan(mu, args.count, seed=args.seed, n_max=args.n_max, which="adapted")
        lines.append(f"{eps:.6e} {rep.max_ratio:.12e}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
