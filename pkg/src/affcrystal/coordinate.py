"""Coordinate perfect crystals for B_n^(1), D_n^(1), A_{2n-1}^(2), A_{2n}^(2),
D_{n+1}^(2) and C_n^(1).

An element is an integer tuple in printed order
``(x_1, ..., x_n, [x_0,] xbar_n, ..., xbar_1)``; the ``x_0`` slot exists only
for B1 and D2.
"""
from __future__ import annotations

import itertools
import re

from .cartan import AffineFamily, fundamental
from .crystal import Crystal
from .errors import BudgetError, MembershipError, UnsupportedWeightError

COORD_KINDS = ("B1", "D1", "A2odd", "A2even", "D2", "C1")


def _pos(x):
    return x if x > 0 else 0


def parity(i: int) -> int:
    """1 for odd i, 0 for even i."""
    return i % 2


class CoordinateCrystal(Crystal):

    def __init__(self, kind: str, n: int, l: int, budget: int | None = None):
        if kind not in COORD_KINDS:
            raise ValueError(f"{kind} has no coordinate crystal")
        if l < 1:
            raise ValueError("level must be positive")
        self.family = AffineFamily(kind, n)
        self.kind = kind
        self.n = n
        self.l = l
        self.has_x0 = kind in ("B1", "D2")
        self.size = 2 * n + (1 if self.has_x0 else 0)
        self.budget = budget
        self._elements = None

    def __repr__(self):
        return f"CoordinateCrystal({self.kind!r}, n={self.n}, l={self.l})"

    # -- coordinate access -------------------------------------------------
    def xi(self, b, i):
        return b[i - 1]

    def xbar(self, b, i):
        return b[self.size - i]

    def x0(self, b):
        return b[self.n] if self.has_x0 else 0

    def bar_index(self, i):
        return self.size - i

    def zero(self):
        return (0,) * self.size

    def unit(self, slot: str, i: int = 0, value: int = 1):
        """Element with ``value`` at x_i (slot 'x'), xbar_i ('xbar') or x_0 ('x0')."""
        b = [0] * self.size
        if slot == "x":
            b[i - 1] = value
        elif slot == "xbar":
            b[self.size - i] = value
        else:
            b[self.n] = value
        return tuple(b)

    def total(self, b):
        """sum over i of (x_i + xbar_i), excluding x_0."""
        return sum(b) - self.x0(b)

    # -- membership --------------------------------------------------------
    def contains(self, b) -> bool:
        if not isinstance(b, tuple) or len(b) != self.size:
            return False
        if any(x < 0 for x in b):
            return False
        l, s, x0 = self.l, self.total(b), self.x0(b)
        if self.has_x0 and x0 not in (0, 1):
            return False
        kind = self.kind
        if kind == "B1":
            return s + x0 == l
        if kind == "D1":
            return s == l and (self.xi(b, self.n) == 0 or self.xbar(b, self.n) == 0)
        if kind == "A2odd":
            return s == l
        if kind == "A2even":
            return s <= l
        if kind == "D2":
            return s + x0 <= l
        return s % 2 == 0 and s <= 2 * self.l

    def _check(self, b):
        if not self.contains(b):
            raise MembershipError(f"{b} is not an element of {self!r}")

    def elements(self) -> list:
        if self._elements is None:
            self._elements = list(self._enumerate())
            if self.budget is not None and len(self._elements) > self.budget:
                raise BudgetError(f"{self!r} has more than {self.budget} elements")
        return self._elements

    def _enumerate(self):
        top = 2 * self.l if self.kind == "C1" else self.l
        # itertools.product is lexicographic, so output is canonical order
        for b in itertools.product(range(top + 1), repeat=self.size):
            if self.contains(b):
                yield b

    # -- crystal structure -------------------------------------------------
    def _shift(self, b, moves):
        out = list(b)
        for idx, delta in moves:
            out[idx] += delta
        out = tuple(out)
        return out if self.contains(out) else None

    def _x(self, i):
        return i - 1

    def f(self, i, b):
        self._check(b)
        return self._shift(b, self._f_moves(i, b))

    def e(self, i, b):
        self._check(b)
        return self._shift(b, self._e_moves(i, b))

    def _f_moves(self, i, b):
        n, kind, X, Xb = self.n, self.kind, self._x, self.bar_index
        x = lambda j: self.xi(b, j)
        xb = lambda j: self.xbar(b, j)
        if i == 0:
            if kind in ("B1", "D1", "A2odd"):
                if x(2) >= xb(2):
                    return [(X(2), 1), (Xb(1), -1)]
                return [(X(1), 1), (Xb(2), -1)]
            if kind in ("A2even", "D2"):
                if x(1) >= xb(1):
                    return [(X(1), 1)]
                return [(Xb(1), -1)]
            # C1
            if x(1) >= xb(1):
                return [(X(1), 2)]
            if x(1) == xb(1) - 1:
                return [(X(1), 1), (Xb(1), -1)]
            return [(Xb(1), -2)]
        if i == n:
            if kind in ("B1", "D2"):
                if self.x0(b) == 0:
                    return [(X(n), -1), (n, 1)]
                return [(n, -1), (Xb(n), 1)]
            if kind == "D1":
                if x(n) >= 1 and xb(n) == 0:
                    return [(X(n), -1), (Xb(n - 1), 1)]
                return [(X(n - 1), -1), (Xb(n), 1)]
            return [(X(n), -1), (Xb(n), 1)]
        if kind == "D1" and i == n - 1:
            if xb(n) == 0:
                return [(X(n - 1), -1), (X(n), 1)]
            return [(Xb(n), -1), (Xb(n - 1), 1)]
        if x(i + 1) >= xb(i + 1):
            return [(X(i), -1), (X(i + 1), 1)]
        return [(Xb(i + 1), -1), (Xb(i), 1)]

    def _e_moves(self, i, b):
        # case-by-case inverses of _f_moves
        n, kind, X, Xb = self.n, self.kind, self._x, self.bar_index
        x = lambda j: self.xi(b, j)
        xb = lambda j: self.xbar(b, j)
        if i == 0:
            if kind in ("B1", "D1", "A2odd"):
                if x(2) > xb(2):
                    return [(X(2), -1), (Xb(1), 1)]
                return [(X(1), -1), (Xb(2), 1)]
            if kind in ("A2even", "D2"):
                if x(1) > xb(1):
                    return [(X(1), -1)]
                return [(Xb(1), 1)]
            if x(1) >= xb(1) + 2:
                return [(X(1), -2)]
            if x(1) == xb(1) + 1:
                return [(X(1), -1), (Xb(1), 1)]
            return [(Xb(1), 2)]
        if i == n:
            if kind in ("B1", "D2"):
                if self.x0(b) == 1:
                    return [(n, -1), (X(n), 1)]
                return [(Xb(n), -1), (n, 1)]
            if kind == "D1":
                if xb(n) >= 1:
                    return [(Xb(n), -1), (X(n - 1), 1)]
                return [(Xb(n - 1), -1), (X(n), 1)]
            return [(X(n), 1), (Xb(n), -1)]
        if kind == "D1" and i == n - 1:
            if x(n) >= 1:
                return [(X(n), -1), (X(n - 1), 1)]
            return [(Xb(n - 1), -1), (Xb(n), 1)]
        if x(i + 1) > xb(i + 1):
            return [(X(i), 1), (X(i + 1), -1)]
        return [(Xb(i + 1), 1), (Xb(i), -1)]

    def eps_phi(self, i, b):
        self._check(b)
        n, kind, l = self.n, self.kind, self.l
        x = lambda j: self.xi(b, j)
        xb = lambda j: self.xbar(b, j)
        if i == 0:
            if kind in ("B1", "D1", "A2odd"):
                return (x(1) + _pos(x(2) - xb(2)), xb(1) + _pos(xb(2) - x(2)))
            if kind == "A2even":
                free = l - self.total(b)
                return (free + 2 * _pos(x(1) - xb(1)), free + 2 * _pos(xb(1) - x(1)))
            if kind == "D2":
                free = l - self.x0(b) - self.total(b)
                return (free + 2 * _pos(x(1) - xb(1)), free + 2 * _pos(xb(1) - x(1)))
            free = l - self.total(b) // 2
            return (free + _pos(x(1) - xb(1)), free + _pos(xb(1) - x(1)))
        if i == n:
            if kind in ("B1", "D2"):
                return (2 * xb(n) + self.x0(b), 2 * x(n) + self.x0(b))
            if kind == "D1":
                return (xb(n - 1) + xb(n), x(n - 1) + x(n))
            return (xb(n), x(n))
        if kind == "D1" and i == n - 1:
            return (xb(n - 1) + x(n), x(n - 1) + xb(n))
        return (xb(i) + _pos(x(i + 1) - xb(i + 1)), x(i) + _pos(xb(i + 1) - x(i + 1)))

    def epsilon(self, i, b):
        return self.eps_phi(i, b)[0]

    def phi(self, i, b):
        return self.eps_phi(i, b)[1]

    # -- minimal elements --------------------------------------------------
    def minimal_element(self, lam):
        """b(lam) with phi(b(lam)) = lam, for the weights with a closed form."""
        lam = tuple(lam)
        l, n, kind = self.l, self.n, self.kind
        for i in self.supported_ground_indices():
            if lam == fundamental(self.family, i, l):
                break
        else:
            raise UnsupportedWeightError(
                f"no closed-form minimal element for {lam} in {kind}")
        if i == 0:
            if kind in ("B1", "D1", "A2odd"):
                return self.unit("xbar", 1, l)
            return self.zero()
        if i == 1:
            return self.unit("x", 1, l)
        if kind == "D1":
            return self.unit("xbar", n, l) if i == n - 1 else self.unit("x", n, l)
        if kind in ("B1", "D2"):
            x0 = parity(l)
            m = (l - x0) // 2
            b = list(self.zero())
            b[n - 1], b[n], b[n + 1] = m, x0, m
            return tuple(b)
        # C1, i = n
        b = list(self.zero())
        b[n - 1] = b[n] = l
        return tuple(b)

    def supported_ground_indices(self):
        n = self.n
        return {"B1": (0, 1, n), "D1": (0, 1, n - 1, n), "A2odd": (0, 1),
                "A2even": (0,), "D2": (0, n), "C1": (0, n)}[self.kind]

    def ground_element(self, lam):
        """b(lam): closed form when available, otherwise the unique phi-preimage."""
        try:
            return self.minimal_element(lam)
        except UnsupportedWeightError:
            b = self.find_phi(lam)
            if b is None:
                raise
            return b

    # -- encoding ----------------------------------------------------------
    def encode(self, b) -> str:
        return f"{self.kind}(" + ",".join(map(str, b)) + ")"

    def label(self, b) -> str:
        return "(" + ",".join(map(str, b)) + ")"

    def decode(self, text: str):
        m = re.fullmatch(r"\s*(?:(\w+))?\(([-\d,\s]*)\)\s*", text)
        if not m or (m.group(1) and m.group(1) != self.kind):
            raise ValueError(f"cannot decode {text!r} as a {self.kind} element")
        b = tuple(int(t) for t in m.group(2).split(",") if t.strip())
        self._check(b)
        return b
