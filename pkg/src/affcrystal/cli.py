"""Command line front end.

Exit codes: 0 success, 1 a mathematical check failed (a JSON witness is
printed), 2 bad arguments.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .cartan import KINDS, AffineFamily, fundamental, is_dominant, level
from .coordinate import CoordinateCrystal
from .crystal import build_graph, default_budget
from .demazure import (DemazureConfig, character, character_rows, check_conditions,
                       classical_invariance_check, demazure_paths, kappa2_search,
                       recursive_oracle)
from .errors import BudgetError, ConditionFailure, CrystalError
from .perfect import perfectness_report
from .schedules import builtin_schedule, load_schedule, split_step
from .tableau import TableauCrystal


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    family: str
    n: int
    l: int = 1
    rows: int | None = None   # column height k, type A only
    steps: int | None = None  # Demazure step k
    lam: tuple | None = None
    schedule: str = "default"
    fmt: str = "json"
    budget: int | None = None
    output: str | None = None

    def crystal(self):
        if self.family == "A1":
            if self.rows is None:
                raise UsageError("type A needs the column height (--k or --rows)")
            return TableauCrystal(self.n, self.rows, self.l)
        return CoordinateCrystal(self.family, self.n, self.l)

    def weight(self, crystal):
        fam = crystal.family
        if self.lam is None:
            return fundamental(fam, 0, self.l)
        if len(self.lam) != len(fam.index_set):
            raise UsageError(f"--lambda needs {len(fam.index_set)} coefficients")
        if not is_dominant(self.lam):
            raise UsageError("--lambda must be dominant")
        lev = level(fam, self.lam)
        if lev != self.l:
            raise UsageError(f"--lambda has level {lev}, expected {self.l}")
        return tuple(self.lam)

    def demazure(self):
        crystal = self.crystal()
        lam = self.weight(crystal)
        if self.schedule.endswith(".json") or os.path.sep in self.schedule:
            sched = load_schedule(self.schedule)
        else:
            sched = builtin_schedule(crystal, lam, self.schedule)
        return DemazureConfig(crystal, lam, sched, budget=self.budget or default_budget())


def _ints(text):
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", required=True, choices=KINDS)
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--l", type=int, default=1)
    common.add_argument("--k", type=int, action="append", default=[],
                        help="type A: column height, then Demazure step; other families: Demazure step")
    common.add_argument("--rows", type=int, help="type A column height")
    common.add_argument("--steps", type=int, help="Demazure step k")
    common.add_argument("--lambda", dest="lam", type=_ints, help="e.g. 1,0,0,0")
    common.add_argument("--schedule", default="default", help="builtin name or JSON file")
    common.add_argument("--format", dest="fmt", choices=("json", "text", "dot"))
    common.add_argument("--budget", type=int)
    common.add_argument("--output")

    parser = argparse.ArgumentParser(prog="affcrystal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    g = sub.add_parser("graph", parents=[common], help="crystal graph as DOT or JSON")
    g.add_argument("--labels", type=_ints)
    sub.add_parser("demazure", parents=[common], help="Demazure path set and character") \
        .add_argument("--kappa", type=int, choices=(1, 2), default=1)
    sub.add_parser("verify", parents=[common], help="condition report") \
        .add_argument("--jmax", type=int, default=3)
    sub.add_parser("oracle", parents=[common], help="recursive closure vs tensor form")
    sub.add_parser("perfect", parents=[common], help="perfectness surrogate")
    e = sub.add_parser("experiment", parents=[common], help="schedule search experiments")
    e.add_argument("name", choices=("kappa2",))
    e.add_argument("--d-max", type=int)
    sub.add_parser("invariance", parents=[common], help="classical invariance check") \
        .add_argument("--L", type=int, required=True)
    return parser


def _config(args) -> CliConfig:
    ks = list(args.k)
    rows, steps = args.rows, args.steps
    if args.family == "A1" and rows is None and ks:
        rows = ks.pop(0)
    if steps is None and ks:
        steps = ks.pop(0)
    if ks:
        raise UsageError("too many --k values")
    return CliConfig(args.family, args.n, args.l, rows, steps, args.lam, args.schedule,
                     args.fmt or ("dot" if args.command == "graph" else "json"),
                     args.budget, args.output)


def _sorted_paths(paths):
    return sorted(paths, key=lambda p: (p.N, p.window))


def _emit(cfg: CliConfig, text: str):
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(data) -> str:
    return json.dumps(data, indent=1) + "\n"


def cmd_graph(cfg, args):
    crystal = cfg.crystal()
    graph = build_graph(crystal, crystal.elements(), args.labels, cfg.budget)
    if cfg.fmt == "json":
        return 0, graph.to_json() + "\n"
    if cfg.fmt == "text":
        lab = crystal.label
        return 0, "".join(f"{lab(s)} -{i}-> {lab(t)}\n" for s, t, i in graph.edges)
    return 0, graph.to_dot(str(crystal.family).replace("(", "_").replace(")", ""))


def cmd_demazure(cfg, args):
    if cfg.steps is None:
        raise UsageError("demazure needs the step count (--k or --steps)")
    dz = cfg.demazure()
    paths = _sorted_paths(demazure_paths(dz, cfg.steps, kappa=args.kappa))
    j, a = split_step(cfg.steps, dz.d)
    table = character_rows(character(paths))
    if cfg.fmt == "text":
        lines = [f"k={cfg.steps} j={j} a={a} paths={len(paths)}"]
        lines += [str(p) for p in paths]
        lines += [f"{w} {m}" for w, m in table]
        return 0, "\n".join(lines) + "\n"
    return 0, _dump({"k": cfg.steps, "j": j, "a": a, "kappa": args.kappa,
                     "lambda": list(dz.lam), "schedule": dz.schedule.to_dict(),
                     "cardinality": len(paths), "paths": [p.to_dict() for p in paths],
                     "character": table})


def cmd_verify(cfg, args):
    dz = cfg.demazure()
    rep = check_conditions(dz, args.jmax)
    return (0 if rep.kappa1 else 1), rep.to_json() + "\n"


def cmd_oracle(cfg, args):
    if cfg.steps is None:
        raise UsageError("oracle needs the step count (--k or --steps)")
    dz = cfg.demazure()
    rows = []
    ok = True
    for t in range(cfg.steps + 1):
        rec, ten = recursive_oracle(dz, t), demazure_paths(dz, t)
        same = rec == ten
        ok &= same
        row = {"k": t, "recursive": len(rec), "tensor": len(ten), "equal": same}
        if not same:
            diff = _sorted_paths(rec ^ ten)[0]
            row["witness"] = {"path": diff.to_dict(), "in_recursive": diff in rec}
        rows.append(row)
    return (0 if ok else 1), _dump({"equal": ok, "steps": rows})


def cmd_perfect(cfg, args):
    rep = perfectness_report(cfg.crystal())
    return (0 if rep.passed else 1), rep.to_json() + "\n"


def cmd_experiment(cfg, args):
    crystal = cfg.crystal()
    lam = cfg.weight(crystal) if cfg.lam is not None else fundamental(crystal.family, 1, cfg.l)
    res = kappa2_search(crystal, lam, args.d_max or 2 * crystal.family.n)
    return 0, _dump(res.to_dict())


def cmd_invariance(cfg, args):
    dz = cfg.demazure()
    rep = classical_invariance_check(dz, args.L)
    return (0 if rep.passed else 1), _dump(rep.to_dict())


COMMANDS = {"graph": cmd_graph, "demazure": cmd_demazure, "verify": cmd_verify,
            "oracle": cmd_oracle, "perfect": cmd_perfect, "experiment": cmd_experiment,
            "invariance": cmd_invariance}


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        AffineFamily(cfg.family, cfg.n)
        status, text = COMMANDS[args.command](cfg, args)
    except ConditionFailure as exc:
        report = exc.report.to_dict() if exc.report is not None else None
        sys.stdout.write(_dump({"error": str(exc), "report": report}))
        return 1
    except BudgetError as exc:
        sys.stdout.write(_dump({"error": str(exc)}))
        return 1
    except (UsageError, CrystalError, ValueError, OSError, KeyError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    _emit(cfg, text)
    return status


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
