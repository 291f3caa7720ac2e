"""Finite surrogate for perfectness of a level-l crystal.

Checks that every element has level(eps(b)) >= l and that eps and phi,
restricted to the minimal elements (level exactly l), are bijections onto the
level-l dominant weights.  Also records sigma(lam) = eps(b(lam)).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cartan import dominant_weights_of_level, level


@dataclass
class PerfectnessReport:
    family: str
    l: int
    size: int
    level_bound: bool = True
    eps_bijective: bool = True
    phi_bijective: bool = True
    minimal: int = 0
    weights: int = 0
    sigma: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.level_bound and self.eps_bijective and self.phi_bijective

    def to_dict(self) -> dict:
        return {"family": self.family, "l": self.l, "size": self.size,
                "level_bound": self.level_bound, "eps_bijective": self.eps_bijective,
                "phi_bijective": self.phi_bijective, "minimal_elements": self.minimal,
                "dominant_weights": self.weights, "passed": self.passed,
                "sigma": [[list(k), list(v)] for k, v in sorted(self.sigma.items())],
                "witnesses": self.witnesses}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def perfectness_report(crystal) -> PerfectnessReport:
    fam, l = crystal.family, crystal.l
    elems = crystal.elements()
    rep = PerfectnessReport(str(fam), l, len(elems))
    minimal = []
    for b in elems:
        lev = level(fam, crystal.epsilon_weight(b))
        if lev < l:
            rep.level_bound = False
            rep.witnesses.append({"check": "level_bound", "element": crystal.encode(b), "level": lev})
        elif lev == l:
            minimal.append(b)
    targets = set(dominant_weights_of_level(fam, l))
    rep.minimal, rep.weights = len(minimal), len(targets)
    for name, stat in (("eps", crystal.epsilon_weight), ("phi", crystal.phi_weight)):
        images = [stat(b) for b in minimal]
        ok = len(images) == len(set(images)) and set(images) == targets
        setattr(rep, f"{name}_bijective", ok)
        if not ok:
            rep.witnesses.append({"check": f"{name}_bijective",
                                  "missing": [list(w) for w in sorted(targets - set(images))],
                                  "images": len(images), "distinct": len(set(images))})
    if rep.phi_bijective:
        by_phi = {crystal.phi_weight(b): b for b in minimal}
        rep.sigma = {lam: crystal.epsilon_weight(by_phi[lam]) for lam in targets}
    return rep
