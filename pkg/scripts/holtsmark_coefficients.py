"""alpha = 3/2 log-symbol coefficients: quadrature, the finite-sum closed
form, and the digamma expression, side by side.

    python scripts/holtsmark_coefficients.py --kmax 10
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from fractoeplitz.szego import holtsmark_discrepancy


@dataclass
class Config:
    kmax: int = 10


def main(cfg: Config) -> None:
    print(f"{'k':>3} {'quadrature':>14} {'finite sum':>14} {'digamma':>14} {'digamma dev':>12}")
    for k in range(1, cfg.kmax + 1):
        d = holtsmark_discrepancy(k)
        flag = "  <- disagrees" if d["digamma_flagged"] else ""
        print(f"{k:3d} {d['quadrature']:14.10f} {d['firstline']:14.10f} {d['digamma_line']:14.10f} "
              f"{d['digamma_deviation']:12.3e}{flag}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=Config.kmax)
    main(Config(kmax=ap.parse_args().kmax))
