"""Sample g(theta) = |2 sin(theta/2)|^a cos((theta - pi)(1 - a/2)) over its
period for a few rational alpha, and confirm each period by grid scan.

    python scripts/g_function_periods.py --out results/g_function.csv
"""

from __future__ import annotations

import argparse
import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from fractoeplitz.toeplitz import g_function, symbol_period


@dataclass
class Config:
    rationals: list[tuple[int, int]] = field(default_factory=lambda: [(3, 2), (4, 3), (5, 3), (2, 1)])
    points_per_2pi: int = 400
    out: Path = Path("results/g_function.csv")


def main(cfg: Config) -> None:
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    with cfg.out.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["p", "q", "alpha", "theta", "g"])
        for p, q in cfg.rationals:
            n1, period = symbol_period(p, q)
            theta = np.linspace(0.0, period, cfg.points_per_2pi * n1 + 1)
            for t, g in zip(theta, g_function(p / q, theta)):
                writer.writerow([p, q, format(p / q, ".17g"), format(t, ".17g"), format(g, ".17g")])
            print(f"alpha={p}/{q}: n1={n1} period={period / math.pi:g} pi")
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Config.out)
    ap.add_argument("--points", type=int, default=Config.points_per_2pi, help="samples per 2 pi")
    args = ap.parse_args()
    main(Config(points_per_2pi=args.points, out=args.out))
