"""Search for schedules of C_n^(1), lambda = l Lambda_i, with mixing index 1 or 2.

    python scripts/kappa2_experiment.py --n 2 --l 1 --i 1 --d-max 6
"""
import argparse
import json

from affcrystal.cartan import fundamental
from affcrystal.coordinate import CoordinateCrystal
from affcrystal.demazure import DemazureConfig, demazure_paths, kappa2_search, recursive_oracle
from affcrystal.schedules import Schedule


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--l", type=int, default=1)
    ap.add_argument("--i", type=int, default=1)
    ap.add_argument("--d-max", type=int)
    ap.add_argument("--periods", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args()
    crystal = CoordinateCrystal("C1", args.n, args.l)
    lam = fundamental(crystal.family, args.i, args.l)
    res = kappa2_search(crystal, lam, args.d_max or 2 * args.n, tuple(args.periods))
    summary = res.to_dict()
    print(json.dumps({k: summary[k] for k in ("family", "lambda", "d_max", "periods", "explored",
                                              "complete_words", "kappa1_found", "kappa2_found")}))
    for cand in res.kappa2:
        table = cand["table"]
        cfg = DemazureConfig(crystal, lam, Schedule(cand["d"], tuple(map(tuple, table))))
        same = all(recursive_oracle(cfg, k) == demazure_paths(cfg, k, kappa=2)
                   for k in range(2 * cfg.d + 3))
        print(f"kappa=2 schedule {table}: oracle agrees for k <= 2d+2: {same}")


if __name__ == "__main__":
    main()
