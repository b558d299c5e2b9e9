"""How tight are the general bounds on r and epsilon for random ideals?

Writes one CSV row per sampled ideal: delta, q (generators above delta),
the computed r and max epsilon, and the two bounds.
"""

import argparse
import csv
import random
import sys
from dataclasses import dataclass, replace

from degexcess.asymptotics import excess_profile, lead_bound_epsilon, lead_bound_r, p_of, reduction_number
from degexcess.monomial import degree
from degexcess.sampling import RandomIdealConfig
from degexcess.suites import lead_sample


@dataclass
class Config:
    seed: int = 0
    count: int = 100
    horizon: int = 8
    ideals: RandomIdealConfig = RandomIdealConfig()


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--horizon", type=int, default=Config.horizon)
    ap.add_argument("--max-vars", type=int, default=RandomIdealConfig.max_vars)
    a = ap.parse_args(argv)
    cfg = Config(a.seed, a.count, a.horizon, replace(RandomIdealConfig(), max_vars=a.max_vars))
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["vars", "generators", "delta", "q", "r", "bound_r", "max_eps", "bound_eps"])
    for ideal in lead_sample(random.Random(cfg.seed), cfg.count, cfg.ideals):
        d = p_of(ideal)
        q = sum(degree(g) > d for g in ideal.generators)
        prof = excess_profile(ideal, cfg.horizon)
        w.writerow([ideal.num_vars, len(ideal.generators), d, q, reduction_number(ideal),
                    lead_bound_r(ideal), max(prof.eps), lead_bound_epsilon(ideal)])


if __name__ == "__main__":
    main()
