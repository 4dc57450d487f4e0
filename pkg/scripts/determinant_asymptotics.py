"""log det M_n against n c0 for alpha in a grid, with the alpha = 2
diagnostic exp(H_n)/(n+1) -> e^C alongside.

    python scripts/determinant_asymptotics.py --sizes 50,100,200,400
"""

from __future__ import annotations

import argparse
import math
from dataclasses import dataclass, field
from pathlib import Path

from fractoeplitz.szego import asymptote_study, euler_factor, logf_coeff0_closed, rows_to_csv


@dataclass
class Config:
    alphas: list[float] = field(default_factory=lambda: [1.2, 1.5, 1.8, 2.0])
    sizes: list[int] = field(default_factory=lambda: [50, 100, 200, 400])
    outdir: Path = Path("results")


def main(cfg: Config) -> None:
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    for alpha in cfg.alphas:
        rows = asymptote_study(alpha, cfg.sizes)
        path = cfg.outdir / f"asymptote_a{alpha:g}.csv"
        with path.open("w", newline="") as fh:
            rows_to_csv(rows, fh)
        c0 = logf_coeff0_closed(alpha)
        print(f"alpha={alpha:g}  c0={c0:.10f}")
        for r in rows:
            print(f"  n={r.n:4d}  log det/n - c0 = {r.log_det / r.n - c0:+.6f}  "
                  f"3 log n/n = {3 * math.log(r.n) / r.n:.6f}  residual = {r.residual:.6f}  diag = {r.diag:.6f}")
    print(f"e^C = {euler_factor():.6f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="50,100,200,400")
    ap.add_argument("--outdir", type=Path, default=Config.outdir)
    args = ap.parse_args()
    main(Config(sizes=[int(s) for s in args.sizes.split(",")], outdir=args.outdir))
