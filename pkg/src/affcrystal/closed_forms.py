"""Closed-form Demazure subsets B_a^(j) and extremal elements b_a^(j).

These are independent of the f-closure computation in ``demazure`` and are
used as its oracle.  Each coordinate family's set is "these coordinates are
free, every other coordinate is zero", intersected with the crystal.
"""
from __future__ import annotations

from .cartan import fundamental
from .errors import UnsupportedWeightError


def _config_key(cfg):
    """(family kind, parity shift) for configurations with a closed form."""
    crystal, lam, name = cfg.crystal, cfg.lam, cfg.schedule.name
    fam, l = crystal.family, crystal.l
    kind = fam.kind
    if kind == "A1":
        if lam == fundamental(fam, 0, l) and name == "default":
            return kind, 0
    elif lam == fundamental(fam, 0, l):
        if kind in ("B1", "A2odd", "A2even", "D2", "C1") and name == "default":
            return kind, 0
        if kind == "D1" and name in ("default", "alt"):
            return kind, 0
    elif lam == fundamental(fam, 1, l) and kind in ("B1", "D1", "A2odd"):
        # Lambda_1 at j is the Lambda_0 picture at j+1
        if name == "default" or (kind == "D1" and name == "alt"):
            return kind, 1
    raise UnsupportedWeightError(
        f"no closed form for {lam} with schedule {name!r} on {fam}")


def has_closed_form(cfg) -> bool:
    try:
        _config_key(cfg)
    except UnsupportedWeightError:
        return False
    return True


class _Slots:
    def __init__(self, crystal):
        self.c = crystal

    def x(self, i):
        return i - 1

    def xbar(self, i):
        return self.c.size - i

    def x0(self):
        return self.c.n


def _free_slots(crystal, j_eff: int, a: int):
    """Free coordinate indices of B_a^(j); None means the whole crystal."""
    kind, n = crystal.kind, crystal.n
    s = _Slots(crystal)
    if kind in ("B1", "D1", "A2odd"):
        d = 2 * n - 2 if kind == "D1" else 2 * n - 1
        if a == d:
            return None
        base = {s.xbar(1)} if j_eff % 2 else {s.x(1)}
        if a == 0:
            return base
        if a <= n - 1:
            return base | {s.x(i) for i in range(2, a + 2)}
        # second half: all x_2..x_n (and x_0), then bars down to `low`
        low = 2 * n - 1 - a if kind == "D1" else 2 * n - a
        out = base | {s.x(i) for i in range(2, n + 1)} | {s.xbar(i) for i in range(low, n + 1)}
        if kind == "B1":
            out.add(s.x0())
        return out
    # A2even, D2, C1
    if a == 2 * n:
        return None
    if a <= n:
        return {s.x(i) for i in range(1, a + 1)}
    low = 2 * n - a + 1
    out = {s.x(i) for i in range(1, n + 1)} | {s.xbar(i) for i in range(low, n + 1)}
    if kind == "D2":
        out.add(s.x0())
    return out


def _swap_n(crystal, b):
    """Exchange x_n and xbar_n (the D1 diagram automorphism n-1 <-> n)."""
    b = list(b)
    n = crystal.n
    b[n - 1], b[n] = b[n], b[n - 1]
    return tuple(b)


def _type_a_subset(crystal, a):
    k, n = crystal.k, crystal.n
    kp = n + 1 - k
    g, r = divmod(a - 1, kp)
    top = k - g  # 1-based row index

    def member(b):
        for col in b:
            if any(col[i - 1] != i for i in range(1, top)):
                return False
            if col[top - 1] > top + r + 1:
                return False
        return True
    return member


def _type_a_extremal(crystal, a):
    k, n, l = crystal.k, crystal.n, crystal.l
    kp = n + 1 - k
    if a == 0:
        return (tuple(range(1, k + 1)),) * l
    g, r = divmod(a - 1, kp)
    top = k - g
    col = tuple(i if i < top else (top + r + 1 if i == top else i + kp)
                for i in range(1, k + 1))
    return (col,) * l


def _check_type_a_j(crystal, j):
    if j % (crystal.n + 1):
        raise UnsupportedWeightError(
            "the type A closed form is stated for j = n+1 (mod n+1) only")


def closed_form_subset(cfg, j: int, a: int) -> list:
    kind, shift = _config_key(cfg)
    crystal = cfg.crystal
    if kind == "A1":
        _check_type_a_j(crystal, j)
        if a == 0:
            return [_type_a_extremal(crystal, 0)]
        member = _type_a_subset(crystal, a)
        return [b for b in crystal.elements() if member(b)]
    free = _free_slots(crystal, j + shift, a)
    if free is None:
        out = list(crystal.elements())
    else:
        out = [b for b in crystal.elements()
               if all(v == 0 for idx, v in enumerate(b) if idx not in free)]
    if kind == "D1" and cfg.schedule.name == "alt":
        out = [_swap_n(crystal, b) for b in out]
    return sorted(out)


def closed_form_extremal(cfg, j: int, a: int):
    kind, shift = _config_key(cfg)
    crystal = cfg.crystal
    l, n = crystal.l, crystal.n
    if kind == "A1":
        _check_type_a_j(crystal, j)
        return _type_a_extremal(crystal, a)
    s = _Slots(crystal)

    def at(idx, value=l):
        b = [0] * crystal.size
        b[idx] = value
        return tuple(b)

    if kind in ("B1", "D1", "A2odd"):
        j_eff = j + shift
        d = 2 * n - 2 if kind == "D1" else 2 * n - 1
        if a == 0:
            out = at(s.xbar(1)) if j_eff % 2 else at(s.x(1))
        elif a == d:
            out = at(s.x(1)) if j_eff % 2 else at(s.xbar(1))
        elif a <= n - 1:
            out = at(s.x(a + 1))
        else:
            out = at(s.xbar(2 * n - 1 - a if kind == "D1" else 2 * n - a))
        if kind == "D1" and cfg.schedule.name == "alt":
            out = _swap_n(crystal, out)
        return out
    top = 2 * l if kind == "C1" else l
    if a == 0:
        return crystal.zero()
    if a <= n:
        return at(s.x(a), top)
    return at(s.xbar(2 * n - a + 1), top)
