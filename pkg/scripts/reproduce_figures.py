"""Write the three illustrative samplings (surface, x1 = 1, x2 = -2) as CSV.

With --png, also render them with matplotlib if it is installed.
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from hdecc.surface import sample_real_curve, write_csv


@dataclass(frozen=True)
class FigureConfig:
    a1: float = -4.0
    a2: float = -5.0
    b: float = 3.5
    lo: float = -4.0
    hi: float = 4.0
    step: float = 0.01
    surface_step: float = 0.05


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("figures"))
    ap.add_argument("--png", action="store_true")
    args = ap.parse_args()
    cfg = FigureConfig()
    args.out.mkdir(parents=True, exist_ok=True)

    samples = {
        "surface": sample_real_curve(cfg.a1, cfg.a2, cfg.b, cfg.lo, cfg.hi, cfg.surface_step),
        "fixed_x1": sample_real_curve(cfg.a1, cfg.a2, cfg.b, cfg.lo, cfg.hi, cfg.step, fix_x1=1.0),
        "fixed_x2": sample_real_curve(cfg.a1, cfg.a2, cfg.b, cfg.lo, cfg.hi, cfg.step, fix_x2=-2.0),
    }
    for name, rows in samples.items():
        path = args.out / f"{name}.csv"
        with open(path, "w", newline="") as fh:
            write_csv(rows, fh)
        print(f"{path}: {len(rows)} rows")

    if args.png:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig = plt.figure(figsize=(6, 6))
        ax = fig.add_subplot(projection="3d")
        x1, x2, y = zip(*samples["surface"])
        ax.scatter(x1, x2, y, s=0.5)
        ax.set_xlabel("x1"), ax.set_ylabel("x2"), ax.set_zlabel("y")
        fig.savefig(args.out / "surface.png", dpi=120)
        for name, col in (("fixed_x1", 1), ("fixed_x2", 0)):
            fig, ax = plt.subplots(figsize=(5, 5))
            rows = samples[name]
            ax.scatter([r[col] for r in rows], [r[2] for r in rows], s=0.5)
            ax.set_xlabel("x2" if col == 1 else "x1"), ax.set_ylabel("y")
            fig.savefig(args.out / f"{name}.png", dpi=120)


if __name__ == "__main__":
    main()
