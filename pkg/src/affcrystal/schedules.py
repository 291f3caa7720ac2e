"""Reflection schedules i_a^(j) defining the Weyl group chain w^(k).

``w^(k) = r_{i_a^(j)} w^(k-1)`` with ``k = (j-1) d + a``, ``1 <= a <= d``.
Every schedule here is periodic in j, so it is stored as a table of rows
indexed by ``(j - 1) mod period``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .cartan import fundamental
from .coordinate import parity
from .errors import UnsupportedWeightError


@dataclass(frozen=True)
class Schedule:
    d: int
    table: tuple  # rows of length d
    name: str = "user"

    def __post_init__(self):
        table = tuple(tuple(int(i) for i in row) for row in self.table)
        object.__setattr__(self, "table", table)
        if self.d < 1 or not table or any(len(row) != self.d for row in table):
            raise ValueError("schedule table rows must all have length d >= 1")

    @property
    def period(self) -> int:
        return len(self.table)

    def index(self, j: int, a: int) -> int:
        """i_a^(j) for j >= 1, 1 <= a <= d."""
        return self.table[(j - 1) % self.period][a - 1]

    def row(self, j: int) -> tuple:
        return self.table[(j - 1) % self.period]

    def step(self, t: int) -> int:
        """Reflection index used to pass from w^(t-1) to w^(t)."""
        j, a = split_step(t, self.d)
        return self.index(j, a)

    def word(self, k: int) -> list:
        return [self.step(t) for t in range(1, k + 1)]

    def to_dict(self) -> dict:
        return {"d": self.d, "period_in_j": self.period,
                "table": [list(row) for row in self.table], "name": self.name}

    def check_indices(self, index_set) -> None:
        bad = sorted({i for row in self.table for i in row} - set(index_set))
        if bad:
            raise ValueError(f"schedule uses indices {bad} outside {tuple(index_set)}")


def split_step(k: int, d: int) -> tuple[int, int]:
    """(j, a) with k = (j-1) d + a, 1 <= a <= d; k = 0 gives (1, 0)."""
    if k == 0:
        return 1, 0
    return (k - 1) // d + 1, (k - 1) % d + 1


def load_schedule(path) -> Schedule:
    with open(path) as fh:
        data = json.load(fh)
    return schedule_from_dict(data)


def schedule_from_dict(data: dict) -> Schedule:
    table = data["table"]
    period = data.get("period_in_j", len(table))
    if period != len(table):
        raise ValueError("period_in_j must equal the number of table rows")
    return Schedule(int(data["d"]), tuple(tuple(r) for r in table), data.get("name", "user"))


# -- builtin tables ---------------------------------------------------------

def _type_a(n: int, k: int) -> Schedule:
    kp = n + 1 - k
    d = k * kp
    rows = []
    for j in range(1, n + 2):
        row = []
        for a in range(1, d + 1):
            g, r = divmod(a - 1, kp)
            row.append((k * (1 - j) - g + r) % (n + 1))
        rows.append(tuple(row))
    return Schedule(d, tuple(rows), "default")


INTRO_A3 = Schedule(4, ((0, 3, 1, 0), (2, 1, 3, 2)), "intro")


def _mirror(d, first, middle, last=None):
    """Row with i_1 = i_d = first, then the symmetric middle block."""
    row = [first] + list(middle) + [first if last is None else last]
    assert len(row) == d
    return tuple(row)


def _by_parity(make):
    """Two-row table; row for odd j first."""
    return (make(1), make(2))


def _b1(n, which, variant):
    d = 2 * n - 1
    up = list(range(2, n + 1))            # a = 2..n -> a
    down = list(range(n - 1, 1, -1))      # a = n+1..2n-2 -> 2n-a
    if which == 0:
        rows = _by_parity(lambda j: _mirror(d, parity(j + 1), up + down))
    elif which == 1:
        rows = _by_parity(lambda j: _mirror(d, parity(j), up + down))
    else:
        pair = (1, 0) if variant == "default" else (0, 1)
        row = [n - a + 1 for a in range(1, n)] + list(pair) + [a for a in range(2, n)]
        assert len(row) == d
        rows = (tuple(row),)
    return Schedule(d, rows, variant)


def _d1(n, which, variant):
    d = 2 * n - 2
    if which in (0, 1):
        pair = (n - 1, n) if variant == "default" else (n, n - 1)
        mid = list(range(2, n - 1)) + list(pair) + list(range(n - 2, 1, -1))
        shift = 1 if which == 0 else 0
        rows = _by_parity(lambda j: _mirror(d, parity(j + shift), mid))
    else:
        pair = (1, 0) if variant == "default" else (0, 1)
        mid = [n - a for a in range(2, n - 1)] + list(pair) + [n - a for a in range(n - 2, 1, -1)]
        shift = 0 if which == n - 1 else 1
        rows = _by_parity(lambda j: _mirror(d, n - parity(j + shift), mid))
    return Schedule(d, rows, variant)


def _a2odd(n, which, variant):
    d = 2 * n - 1
    mid = list(range(2, n + 1)) + list(range(n - 1, 1, -1))
    shift = 1 if which == 0 else 0
    return Schedule(d, _by_parity(lambda j: _mirror(d, parity(j + shift), mid)), variant)


def _zigzag(n, which, variant):
    """A2even / D2 / C1: 0,1,..,n,n-1,..,1 (or the reverse pattern for Lambda_n)."""
    d = 2 * n
    if which == 0:
        row = [a - 1 for a in range(1, n + 2)] + [2 * n + 1 - a for a in range(n + 2, d + 1)]
    else:
        row = [n - a + 1 for a in range(1, n + 2)] + [a - n - 1 for a in range(n + 2, d + 1)]
    return Schedule(d, (tuple(row),), variant)


def builtin_variants(crystal) -> list[tuple[tuple, str]]:
    """All (lambda, variant) pairs with a builtin schedule for this crystal."""
    fam, l, n = crystal.family, crystal.l, crystal.family.n
    kind = fam.kind
    lam = lambda i: fundamental(fam, i, l)
    if kind == "A1":
        out = [(lam(0), "default")]
        if n == 3 and crystal.k == 2:
            out.append((lam(0), "intro"))
        return out
    if kind == "B1":
        return [(lam(0), "default"), (lam(1), "default"),
                (lam(n), "default"), (lam(n), "alt")]
    if kind == "D1":
        return [(lam(i), v) for i in (0, 1, n - 1, n) for v in ("default", "alt")]
    if kind == "A2odd":
        return [(lam(0), "default"), (lam(1), "default")]
    if kind == "A2even":
        return [(lam(0), "default")]
    return [(lam(0), "default"), (lam(n), "default")]


def builtin_schedule(crystal, lam, variant: str = "default") -> Schedule:
    fam, l, n = crystal.family, crystal.l, crystal.family.n
    lam = tuple(lam)
    if (lam, variant) not in builtin_variants(crystal):
        raise UnsupportedWeightError(
            f"no builtin schedule {variant!r} for {lam} on {fam}")
    which = next(i for i, m in enumerate(lam) if m)
    kind = fam.kind
    if kind == "A1":
        sched = INTRO_A3 if variant == "intro" else _type_a(n, crystal.k)
    elif kind == "B1":
        sched = _b1(n, which, variant)
    elif kind == "D1":
        sched = _d1(n, which, variant)
    elif kind == "A2odd":
        sched = _a2odd(n, which, variant)
    else:
        sched = _zigzag(n, which, variant)
    sched.check_indices(fam.index_set)
    return sched
