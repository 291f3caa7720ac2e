"""Check (II') and (III) for every level-l weight using the l Lambda_0 schedule.

    python scripts/mixing_check.py --l 2 --jmax 2
"""
import argparse

from affcrystal.cartan import MIN_RANK, dominant_weights_of_level
from affcrystal.coordinate import COORD_KINDS, CoordinateCrystal
from affcrystal.demazure import (DemazureConfig, check_conditions, demazure_paths,
                                 recursive_oracle)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--l", type=int, default=2)
    ap.add_argument("--jmax", type=int, default=2)
    ap.add_argument("--kinds", nargs="+", default=list(COORD_KINDS))
    ap.add_argument("--oracle", action="store_true", help="also compare path sets for k <= d+1")
    args = ap.parse_args()
    findings = 0
    for kind in args.kinds:
        crystal = CoordinateCrystal(kind, MIN_RANK[kind], args.l)
        base = DemazureConfig.builtin(crystal)
        for lam in dominant_weights_of_level(crystal.family, args.l):
            cfg = DemazureConfig(crystal, lam, base.schedule)
            rep = check_conditions(cfg, args.jmax, path_check=False)
            ok = rep.IIprime and rep.III
            line = f"{crystal.family} l={args.l} lambda={lam}: II'={rep.IIprime} III={rep.III} II={rep.II}"
            if args.oracle and ok:
                same = all(recursive_oracle(cfg, k) == demazure_paths(cfg, k, kappa=2, check=False)
                           for k in range(cfg.d + 2))
                line += f" oracle={same}"
            print(line)
            findings += not ok
    print(f"{findings} falsifying weights")
    return 1 if findings else 0


if __name__ == "__main__":
    raise SystemExit(main())
