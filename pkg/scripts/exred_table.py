"""Reduction numbers of the cyclic-vertex family against its bounds.

For each (s, delta) prints D, the Cramer numerators, the reduction number
predicted from them, and the bounds (delta-1)^(s-2) < r <= (delta-1)^s.
With --brute, r is also recomputed by power membership where feasible.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from degexcess.asymptotics import reduction_number
from degexcess.families import build_exred, exred_determinants


@dataclass
class Config:
    smax: int = 5
    extra_delta: int = 4
    brute: bool = False
    brute_limit: int = 40


def rows(cfg: Config):
    for s in range(3, cfg.smax + 1):
        for dlt in range(s + 1, s + 1 + cfg.extra_delta):
            D, Di = exred_determinants(s, dlt)
            ideal, spec = build_exred(s, dlt, 1)
            r_brute = ""
            if cfg.brute and spec.predicted_r <= cfg.brute_limit:
                r_brute = reduction_number(ideal, cap=cfg.brute_limit, method="fast")
            yield {
                "s": s,
                "delta": dlt,
                "D": D,
                "D_i": " ".join(map(str, Di)),
                "r_predicted": spec.predicted_r,
                "r_brute": r_brute,
                "lower": (dlt - 1) ** (s - 2),
                "upper": (dlt - 1) ** s,
            }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--smax", type=int, default=Config.smax)
    ap.add_argument("--extra-delta", type=int, default=Config.extra_delta)
    ap.add_argument("--brute", action="store_true")
    ap.add_argument("--brute-limit", type=int, default=Config.brute_limit)
    a = ap.parse_args(argv)
    cfg = Config(a.smax, a.extra_delta, a.brute, a.brute_limit)
    out = list(rows(cfg))
    w = csv.DictWriter(sys.stdout, fieldnames=list(out[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(out)


if __name__ == "__main__":
    main()
