"""Excess profiles of the local-maxima construction for several point sets.

Profiles are evaluated factor-wise, so large point sets stay cheap.
"""

import argparse
from dataclasses import dataclass, field

from degexcess.asymptotics import excess_profile, local_maxima
from degexcess.families import build_local_maxima


@dataclass
class Config:
    point_sets: list = field(default_factory=lambda: [[2], [2, 4], [3, 6], [2, 4, 6], [3, 7, 10]])
    extra: int = 3


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", action="append", help="comma-separated points; may repeat")
    ap.add_argument("--extra", type=int, default=Config.extra, help="horizon beyond the last point")
    a = ap.parse_args(argv)
    cfg = Config(extra=a.extra)
    if a.points:
        cfg.point_sets = [[int(x) for x in p.split(",")] for p in a.points]
    for points in cfg.point_sets:
        ideal = build_local_maxima(points)
        horizon = points[-1] + cfg.extra
        prof = excess_profile(ideal, horizon + 1)
        found = local_maxima(prof, horizon)
        mark = "ok" if found == points else "MISMATCH"
        print(f"points={points} factors={len(ideal.factors)} vars={ideal.total_vars} "
              f"generators={ideal.mu()} maxima={found} {mark}")
        print("  eps:", " ".join(str(e) for e in prof.eps[:horizon]))


if __name__ == "__main__":
    main()
