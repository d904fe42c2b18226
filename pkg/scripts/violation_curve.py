#!/usr/bin/env python3
"""Tabulate the free-electron violation curve as CSV on stdout.

Usage:
    python scripts/violation_curve.py --points 200 > curve.csv
"""

import argparse
import math

import numpy as np

from diracctx.freeparticle import free_chsh, observable_angle


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--beta-min", type=float, default=0.0)
    parser.add_argument("--beta-max", type=float, default=0.999)
    parser.add_argument("--points", type=int, default=200)
    args = parser.parse_args()

    print("beta,theta,value,closed_form,violated")
    for beta in np.linspace(args.beta_min, args.beta_max, args.points):
        report = free_chsh(float(beta))
        closed = 2.0 * math.sqrt(2.0 - beta * beta)
        print(f"{beta:.15g},{observable_angle(float(beta)):.15g},"
              f"{report.value:.15g},{closed:.15g},{'true' if report.violated else 'false'}")


if __name__ == "__main__":
    main()
