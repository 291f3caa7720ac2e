"""Demazure subsets, condition checks, Demazure path sets and their oracles.

For a schedule ``i_a^(j)`` of period ``d``:

* ``B_0^(j) = {bbar_j}`` and ``B_a^(j)`` is the f-closure of ``B_{a-1}^(j)``
  under ``f_{i_a^(j)}``;
* the Demazure crystal of ``w^(k)`` (``k = (j-1) d + a``) is the path set
  ``u_{lambda_j} (x) B_a^(j) (x) B^{(x)(j-1)}`` when (II), (III), (IV') hold,
  or ``u_{lambda_j} (x) B_a^(j,j-1) (x) B^{(x)(j-2)}`` in the mixed form;
* ``recursive_oracle`` computes the same set straight from the recursion on
  ``B(lambda)`` without using the tensor form.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field

from .cartan import fundamental, sigma_power
from .crystal import TensorProduct, closure, default_budget
from .errors import BudgetError, ConditionFailure
from .paths import (GroundState, Path, ground_state_path, make_path, path_apply,
                    path_eps_phi, path_weight)
from .schedules import Schedule, builtin_schedule, split_step


@dataclass
class DemazureConfig:
    """A perfect crystal, a dominant weight and a schedule."""

    crystal: object
    lam: tuple
    schedule: Schedule
    budget: int = field(default_factory=default_budget)

    def __post_init__(self):
        self.lam = tuple(self.lam)
        self.schedule.check_indices(self.crystal.index_set)
        self.ground = GroundState(self.crystal, self.lam)
        self._subsets = {}
        self._mixed = {}

    @classmethod
    def builtin(cls, crystal, lam=None, variant="default", **kw):
        if lam is None:
            lam = fundamental(crystal.family, 0, crystal.l)
        return cls(crystal, lam, builtin_schedule(crystal, lam, variant), **kw)

    @property
    def d(self) -> int:
        return self.schedule.d

    def __str__(self):
        return f"{self.crystal!r} lambda={self.lam} schedule={self.schedule.name}"


@dataclass(frozen=True)
class DemazureSet:
    j: int
    a: int
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, b):
        return b in set(self.elements)


def fclosure_subset(cfg: DemazureConfig, j: int, a: int) -> DemazureSet:
    """B_a^(j) by f-closure from {bbar_j}."""
    key = (j, a)
    if key not in cfg._subsets:
        if a == 0:
            elems = (cfg.ground.bar(j),)
        else:
            prev = fclosure_subset(cfg, j, a - 1).elements
            i = cfg.schedule.index(j, a)
            elems = tuple(closure(cfg.crystal, prev, [("f", i)], cfg.budget))
        cfg._subsets[key] = DemazureSet(j, a, elems)
    return cfg._subsets[key]


def mixed_subset(cfg: DemazureConfig, j: int, a: int) -> DemazureSet:
    """B_a^(j+1,j) in B (x) B, elements (p(j+1), p(j))."""
    key = (j, a)
    if key not in cfg._mixed:
        if a == 0:
            top = fclosure_subset(cfg, j, cfg.d).elements
            elems = tuple(sorted((cfg.ground.bar(j + 1), b) for b in top))
        else:
            prev = mixed_subset(cfg, j, a - 1).elements
            i = cfg.schedule.index(j + 1, a)
            pair = TensorProduct(cfg.crystal, 2)
            elems = tuple(closure(pair, prev, [("f", i)], cfg.budget))
        cfg._mixed[key] = DemazureSet(j, a, elems)
    return cfg._mixed[key]


def extremal_chain(cfg: DemazureConfig, j: int) -> list:
    """[b_0^(j), ..., b_d^(j)] with b_a = f_{i_a}^max b_{a-1}."""
    chain = [cfg.ground.bar(j)]
    for a in range(1, cfg.d + 1):
        chain.append(cfg.crystal.f_max(cfg.schedule.index(j, a), chain[-1]))
    return chain


# -- conditions -------------------------------------------------------------

@dataclass
class ConditionReport:
    j_max: int
    II: bool = True
    III: bool = True
    IVprime: bool = True
    IIprime: bool = True
    IVpath: bool = True
    witnesses: list = field(default_factory=list)
    cells: list = field(default_factory=list)

    @property
    def kappa1(self) -> bool:
        """(II), (III) and (IV') all hold; (IV) follows from (IV')."""
        return self.II and self.III and self.IVprime

    @property
    def kappa2(self) -> bool:
        return self.IIprime and self.III

    def fail(self, condition, j, a, element, crystal, note=""):
        setattr(self, condition, False)
        if not any(w["condition"] == condition for w in self.witnesses):
            self.witnesses.append({
                "condition": condition, "j": j, "a": a,
                "element": _encode(crystal, element, condition == "IIprime"),
                "note": note})

    def to_dict(self) -> dict:
        return {"conditions": {"II": self.II, "III": self.III,
                               "IVprime": self.IVprime, "IIprime": self.IIprime,
                               "IV": "implied by IVprime" if self.IVprime else "not certified",
                               "IVpath": self.IVpath},
                "j_max": self.j_max,
                "witnesses": self.witnesses,
                "cells": self.cells}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def _encode(crystal, element, pair=False):
    if element is None:
        return None
    if pair:
        return [crystal.encode(x) for x in element]
    return crystal.encode(element)


def check_conditions(cfg: DemazureConfig, j_max: int, mixed: bool = True,
                     path_check: bool = True) -> ConditionReport:
    """Check (II), (III), (IV') and (II') for j = 1..j_max.

    ``IVpath`` is a direct check on extremal paths: every step of the chain
    w^(k) must pair positively with the current extremal weight.
    """
    crystal, sched, g = cfg.crystal, cfg.schedule, cfg.ground
    d = cfg.d
    full = set(crystal.elements())
    rep = ConditionReport(j_max)
    for j in range(1, j_max + 1):
        chain = extremal_chain(cfg, j)
        top = fclosure_subset(cfg, j, d)
        if set(top.elements) != full:
            missing = sorted(full - set(top.elements))[0]
            rep.fail("II", j, d, missing, crystal, "not reached by B_d^(j)")
        for a in range(1, d + 1):
            i = sched.index(j, a)
            m = g.lam_at(j)[i]
            prev = fclosure_subset(cfg, j, a - 1)
            bad = next((b for b in prev if crystal.epsilon(i, b) < m), None)
            ok3 = bad is None
            if not ok3:
                rep.fail("III", j, a, bad, crystal, f"<lambda_j,h_{i}> = {m} > eps_{i}")
            # (IV'): i_{a+1}^(j), with i_{d+1}^(j) = i_1^(j+1)
            nxt = sched.index(j, a + 1) if a < d else sched.index(j + 1, 1)
            ba = chain[a]
            ok4 = crystal.epsilon(nxt, ba) == 0 and crystal.phi(nxt, ba) > 0
            if not ok4:
                rep.fail("IVprime", j, a, ba, crystal,
                         f"eps_{nxt} = {crystal.epsilon(nxt, ba)}, phi_{nxt} = {crystal.phi(nxt, ba)}")
            rep.cells.append({"j": j, "a": a, "i": i, "size": len(fclosure_subset(cfg, j, a)),
                              "III": ok3, "IVprime": ok4})
        i1 = sched.index(j + 1, 1)
        m = g.lam_at(j + 1)[i1]
        b = chain[d]
        for _ in range(m):
            b = None if b is None else crystal.f(i1, b)
        if b != g.bar(j + 1):
            rep.fail("IVprime", j, d, chain[d], crystal,
                     f"f_{i1}^{m} b_d^(j) != bbar_{j + 1}")
        if mixed:
            got = set(mixed_subset(cfg, j, d).elements)
            want = {(x, y) for x in fclosure_subset(cfg, j + 1, d) for y in full}
            if got != want:
                diff = sorted(got ^ want)[0]
                rep.fail("IIprime", j, d, diff, crystal, "B_d^(j+1,j) != B_d^(j+1) (x) B")
    if path_check:
        for t, u, ok, note in extremal_paths(cfg, j_max * d):
            if not ok:
                rep.IVpath = False
                rep.witnesses.append({"condition": "IVpath", "k": t, "path": u.to_dict(), "note": note})
                break
    return rep


def extremal_paths(cfg: DemazureConfig, k: int):
    """Yield (t, u_{w^(t-1) lambda}, step ok, note) for t = 1..k.

    u_{r_i w lambda} = f_i^m u_{w lambda}, m = <w lambda, h_i>; the step is a
    certified Bruhat increase when m > 0 (then also eps_i(u) = 0).
    """
    u = ground_state_path(cfg.ground)
    for t in range(1, k + 1):
        i = cfg.schedule.step(t)
        eps, phi = path_eps_phi(i, u)
        m = path_weight(u)[i]
        ok = eps == 0 and phi == m and m > 0
        yield t, u, ok, f"step {t}: i={i}, eps={eps}, phi={phi}, <wt,h_i>={m}"
        for _ in range(max(m, 0)):
            u = path_apply("f", i, u)


def extremal_path(cfg: DemazureConfig, k: int) -> Path:
    u = ground_state_path(cfg.ground)
    for t in range(1, k + 1):
        i = cfg.schedule.step(t)
        for _ in range(max(path_weight(u)[i], 0)):
            u = path_apply("f", i, u)
    return u


# -- Demazure path sets -----------------------------------------------------

def _require(cfg, k, kappa):
    j, _ = split_step(k, cfg.d)
    rep = check_conditions(cfg, max(j, 1), mixed=kappa == 2, path_check=False)
    ok = rep.kappa1 if kappa == 1 else rep.kappa2
    if not ok:
        raise ConditionFailure(f"conditions fail for kappa={kappa} up to j={j}", rep)


def demazure_paths(cfg: DemazureConfig, k: int, kappa: int = 1, check: bool = True) -> set:
    """Paths of u_{lambda_j} (x) B_a^(j) (x) B^{(x)(j-1)} (kappa = 1) or the
    mixed form u_{lambda_j} (x) B_a^(j,j-1) (x) B^{(x)(j-2)} (kappa = 2)."""
    if kappa not in (1, 2):
        raise ValueError("kappa must be 1 or 2")
    if k == 0:
        return {ground_state_path(cfg.ground)}
    if check:
        _require(cfg, k, kappa)
    j, a = split_step(k, cfg.d)
    full = cfg.crystal.elements()
    if kappa == 1 or j == 1:
        heads = [(b,) for b in fclosure_subset(cfg, j, a)]
        rest = j - 1
    else:
        heads = list(mixed_subset(cfg, j - 1, a))
        rest = j - 2
    total = len(heads) * len(full) ** rest
    if total > cfg.budget:
        raise BudgetError(f"{total} Demazure paths exceed the budget {cfg.budget}")
    return {make_path(cfg.ground, head + tail)
            for head in heads for tail in itertools.product(full, repeat=rest)}


def recursive_oracle(cfg: DemazureConfig, k: int) -> set:
    """Start at the ground state path and close under f_{i(t)} for t = 1..k."""
    paths = {ground_state_path(cfg.ground)}
    for t in range(1, k + 1):
        i = cfg.schedule.step(t)
        frontier = list(paths)
        while frontier:
            nxt = []
            for p in frontier:
                q = path_apply("f", i, p)
                if q is not None and q not in paths:
                    paths.add(q)
                    nxt.append(q)
            if len(paths) > cfg.budget:
                raise BudgetError(f"recursive closure exceeded budget {cfg.budget}")
            frontier = nxt
    return paths


def character(paths) -> dict:
    return dict(sorted(Counter(path_weight(p) for p in paths).items()))


def cardinality(paths) -> int:
    return len(paths)


def character_rows(table: dict) -> list:
    return [[list(w), m] for w, m in sorted(table.items())]


# -- classical invariance ---------------------------------------------------

def _restrict(weight, drop):
    return tuple(m for i, m in enumerate(weight) if i != drop)


def tensor_power_weights(crystal, L: int, drop: int) -> Counter:
    """Multiset of restricted weights of B^{(x)L}."""
    single = Counter(_restrict(crystal.weight(b), drop) for b in crystal.elements())
    total = Counter({tuple(0 for _ in range(len(crystal.index_set) - 1)): 1})
    for _ in range(L):
        nxt = Counter()
        for w1, m1 in total.items():
            for w2, m2 in single.items():
                nxt[tuple(x + y for x, y in zip(w1, w2))] += m1 * m2
        total = nxt
    return total


@dataclass
class InvarianceReport:
    L: int
    i_L: int
    cardinality: int
    expected: int
    character_equal: bool

    @property
    def passed(self) -> bool:
        return self.cardinality == self.expected and self.character_equal

    def to_dict(self):
        return {"L": self.L, "i_L": self.i_L, "cardinality": self.cardinality,
                "expected": self.expected, "character_equal": self.character_equal,
                "passed": self.passed}


def classical_invariance_check(cfg: DemazureConfig, L: int, paths=None) -> InvarianceReport:
    """|B_{w^(Ld)}(l Lambda_0)| = |B|^L and equal weight multisets after
    forgetting the coordinate i_L, where sigma^L(Lambda_0) = Lambda_{i_L}.

    The Demazure side comes from ``recursive_oracle`` unless ``paths`` is given.
    """
    crystal = cfg.crystal
    fam = crystal.family
    if cfg.lam != fundamental(fam, 0, crystal.l):
        raise ValueError("classical invariance is stated for lambda = l Lambda_0")
    k = getattr(crystal, "k", None)
    i_L = sigma_power(fam, fundamental(fam, 0), L, k).index(1)
    if paths is None:
        paths = recursive_oracle(cfg, L * cfg.d)
    got = Counter(_restrict(path_weight(p), i_L) for p in paths)
    want = tensor_power_weights(crystal, L, i_L)
    return InvarianceReport(L, i_L, len(paths), len(crystal.elements()) ** L, got == want)


# -- schedule search (mixing index experiment) --------------------------------

@dataclass
class SearchResult:
    family: str
    lam: tuple
    d_max: int
    periods: tuple
    explored: int = 0
    candidates: list = field(default_factory=list)

    @property
    def kappa1(self) -> list:
        return [c for c in self.candidates if c["II"] and c["III"] and c["IVpath"]]

    @property
    def kappa2(self) -> list:
        return [c for c in self.candidates if c["IIprime"] and c["III"] and c["IVpath"]]

    def to_dict(self) -> dict:
        return {"family": self.family, "lambda": list(self.lam), "d_max": self.d_max,
                "periods": list(self.periods), "explored": self.explored,
                "complete_words": len(self.candidates),
                "kappa1_found": len(self.kappa1), "kappa2_found": len(self.kappa2),
                "kappa1_examples": self.kappa1[:3], "kappa2_examples": self.kappa2[:3]}


def _search_words(crystal, ground, d, p, budget):
    """Words of length p*d that keep (III) and a strict Bruhat increase."""
    index_set = crystal.index_set
    out = []
    explored = 0

    def dfs(word, subset, u):
        nonlocal explored
        explored += 1
        t = len(word)
        if t == p * d:
            out.append(tuple(word))
            return
        j, a = split_step(t + 1, d)
        if a == 1:
            subset = [ground.bar(j)]
        for i in index_set:
            if word and word[-1] == i:
                continue
            m = ground.lam_at(j)[i]
            if any(crystal.epsilon(i, b) < m for b in subset):
                continue
            h = path_weight(u)[i]
            if h <= 0:
                continue
            v = u
            for _ in range(h):
                v = path_apply("f", i, v)
            dfs(word + [i], closure(crystal, subset, [("f", i)], budget), v)

    dfs([], [ground.bar(1)], ground_state_path(ground))
    return out, explored


def kappa2_search(crystal, lam, d_max: int, periods=(1, 2), j_max=None) -> SearchResult:
    """Bounded search over periodic schedules with row length d <= d_max.

    Prefixes are pruned when (III) fails or the extremal weight does not pair
    positively with the next index (no certified Bruhat increase).  Each
    complete word is then checked for (II) (kappa = 1) and (II') (kappa = 2).
    """
    lam = tuple(lam)
    ground = GroundState(crystal, lam)
    res = SearchResult(str(crystal.family), lam, d_max, tuple(periods))
    budget = default_budget()
    for d in range(1, d_max + 1):
        for p in periods:
            words, explored = _search_words(crystal, ground, d, p, budget)
            res.explored += explored
            for w in words:
                table = tuple(w[r * d:(r + 1) * d] for r in range(p))
                cfg = DemazureConfig(crystal, lam, Schedule(d, table, "search"))
                rep = check_conditions(cfg, j_max or 2 * p)
                res.candidates.append({"d": d, "table": [list(r) for r in table],
                                       "II": rep.II, "III": rep.III, "IVprime": rep.IVprime,
                                       "IIprime": rep.IIprime, "IVpath": rep.IVpath})
    return res


def builtin_configs(crystal) -> list:
    from .schedules import builtin_variants
    return [DemazureConfig.builtin(crystal, lam, v) for lam, v in builtin_variants(crystal)]
