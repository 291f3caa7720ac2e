"""Condition and closed-form sweep over builtin configurations.

    python scripts/sweep.py --ranks 2 --levels 1 2 --jmax 3 [--json out.json]
"""
import argparse
import json
import time

from affcrystal.cartan import MIN_RANK
from affcrystal.closed_forms import closed_form_subset, has_closed_form
from affcrystal.coordinate import COORD_KINDS, CoordinateCrystal
from affcrystal.demazure import builtin_configs, check_conditions, fclosure_subset
from affcrystal.tableau import TableauCrystal


def crystals(ranks, levels):
    for l in levels:
        for kind in COORD_KINDS:
            for dn in range(ranks):
                yield CoordinateCrystal(kind, MIN_RANK[kind] + dn, l)
        for n in range(1, ranks + 3):
            for k in range(1, n + 1):
                yield TableauCrystal(n, k, l)


def closed_form_status(cfg, jmax):
    if not has_closed_form(cfg):
        return None
    js = [cfg.crystal.n + 1] if cfg.crystal.kind == "A1" else range(1, jmax + 1)
    return all(list(fclosure_subset(cfg, j, a)) == closed_form_subset(cfg, j, a)
               for j in js for a in range(cfg.d + 1))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ranks", type=int, default=2)
    ap.add_argument("--levels", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--jmax", type=int, default=3)
    ap.add_argument("--json")
    args = ap.parse_args()
    rows = []
    for crystal in crystals(args.ranks, args.levels):
        for cfg in builtin_configs(crystal):
            t0 = time.perf_counter()
            rep = check_conditions(cfg, args.jmax)
            row = {"config": str(cfg), "size": len(crystal.elements()), "d": cfg.d,
                   "kappa1": rep.kappa1, "IIprime": rep.IIprime, "IVpath": rep.IVpath,
                   "closed_form": closed_form_status(cfg, args.jmax),
                   "seconds": round(time.perf_counter() - t0, 3)}
            rows.append(row)
            print(f"{row['config']:<70} |B|={row['size']:<4} kappa1={rep.kappa1!s:<5} "
                  f"II'={rep.IIprime!s:<5} closed={row['closed_form']!s:<5} {row['seconds']}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)
    bad = [r for r in rows if not r["kappa1"] or r["closed_form"] is False]
    print(f"{len(rows)} configurations, {len(bad)} failures")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
