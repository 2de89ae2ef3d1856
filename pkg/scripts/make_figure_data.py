#!/usr/bin/env python3
"""Generate the parameter-sweep CSVs behind the region and comparison
figures.

Writes five files into --outdir (default: data/):

  fig3_ell0.csv    31 x 61 (nbar, r) grid, d = 2.5, no fiber
  fig3_ell05.csv   the same grid after the asymmetric ell = 0.5 fiber
  fig4_main.csv    r sweep at d = 2.5, nbar = 0.5, ell = 0.5
  fig4_inset_ell0.csv / fig4_inset_ell05.csv
                   nbar sweeps at r = 3, d = 2.5
"""

import argparse
import os

from gausscone.cli import Axis, SweepSpec, run_sweep
from gausscone.records import write_csv

FIG3_AXES = (Axis("nbar", 0.0, 1.5, 31), Axis("r", 0.0, 3.0, 61))

SWEEPS = {
    "fig3_ell0.csv": SweepSpec(fixed={"d": 2.5, "ell": 0.0}, axes=FIG3_AXES),
    "fig3_ell05.csv": SweepSpec(fixed={"d": 2.5, "ell": 0.5}, axes=FIG3_AXES),
    "fig4_main.csv": SweepSpec(fixed={"d": 2.5, "nbar": 0.5, "ell": 0.5},
                               axes=(Axis("r", 0.0, 3.0, 61),)),
    "fig4_inset_ell0.csv": SweepSpec(fixed={"d": 2.5, "r": 3.0, "ell": 0.0},
                                     axes=(Axis("nbar", 0.0, 1.5, 31),)),
    "fig4_inset_ell05.csv": SweepSpec(fixed={"d": 2.5, "r": 3.0, "ell": 0.5},
                                      axes=(Axis("nbar", 0.0, 1.5, 31),)),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="data")
    args = parser.parse_args()
    os.makedirs(args.outdir, exist_ok=True)
    for name, spec in SWEEPS.items():
        path = os.path.join(args.outdir, name)
        write_csv(path, run_sweep(spec))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
