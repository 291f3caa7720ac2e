"""The A_n^(1) perfect crystal B^{k,l} as k x l rectangular tables.

An element is a tuple of ``l`` columns, each a strictly increasing tuple of
``k`` entries from 1..n+1, columns weakly increasing left to right.  Column
``a`` (1-based) is the tensor factor at position ``a``, so the table reads as
``col_l (x) ... (x) col_1``.  The 0-arrows come from promotion:
``f_0 = pr^-1 . f_1 . pr``.
"""
from __future__ import annotations

import itertools
import re

from .cartan import AffineFamily, fundamental
from .crystal import Crystal, acting_position, string_length
from .errors import MembershipError


class ColumnCrystal(Crystal):
    """Classical crystal B(Lambda_k) of A_n on single columns (labels 1..n)."""

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        self.family = AffineFamily("A1", n)
        self.l = 1

    @property
    def index_set(self):
        return tuple(range(1, self.n + 1))

    def f(self, j, col):
        if j in col and j + 1 not in col:
            return tuple(j + 1 if m == j else m for m in col)
        return None

    def e(self, j, col):
        if j + 1 in col and j not in col:
            return tuple(j if m == j + 1 else m for m in col)
        return None

    def epsilon(self, j, col):
        return int(j + 1 in col and j not in col)

    def phi(self, j, col):
        return int(j in col and j + 1 not in col)


def is_tableau(cols, n: int, k: int, l: int) -> bool:
    if len(cols) != l or any(len(c) != k for c in cols):
        return False
    for c in cols:
        if c[0] < 1 or c[-1] > n + 1:
            return False
        if any(c[i] >= c[i + 1] for i in range(k - 1)):
            return False
    return all(cols[a][i] <= cols[a + 1][i] for a in range(l - 1) for i in range(k))


def _to_rows(cols):
    return [list(row) for row in zip(*cols)]


def _to_cols(rows):
    return tuple(tuple(c) for c in zip(*rows))


def promotion(cols, n: int):
    """Remove the n+1 entries, slide the holes to the top-left, add 1, fill with 1."""
    rows = _to_rows(cols)
    k, l = len(rows), len(rows[0])
    holes = [c for c in range(l) if rows[k - 1][c] == n + 1]  # n+1 only fits in the last row
    for c in holes:
        rows[k - 1][c] = None
    for c0 in holes:
        r, c = k - 1, c0
        while True:
            up = rows[r - 1][c] if r > 0 else None
            left = rows[r][c - 1] if c > 0 else None
            if up is None and left is None:
                break
            if left is None or (up is not None and up >= left):
                rows[r][c], rows[r - 1][c] = up, None
                r -= 1
            else:
                rows[r][c], rows[r][c - 1] = left, None
                c -= 1
    rows = [[1 if m is None else m + 1 for m in row] for row in rows]
    return _to_cols(rows)


def promotion_inverse(cols, n: int):
    """Remove the 1 entries, slide the holes to the bottom-right, subtract 1, fill with n+1."""
    rows = _to_rows(cols)
    k, l = len(rows), len(rows[0])
    holes = [c for c in range(l) if rows[0][c] == 1]  # 1 only fits in the first row
    for c in holes:
        rows[0][c] = None
    for c0 in reversed(holes):
        r, c = 0, c0
        while True:
            down = rows[r + 1][c] if r < k - 1 else None
            right = rows[r][c + 1] if c < l - 1 else None
            if down is None and right is None:
                break
            if right is None or (down is not None and down <= right):
                rows[r][c], rows[r + 1][c] = down, None
                r += 1
            else:
                rows[r][c], rows[r][c + 1] = right, None
                c += 1
    rows = [[n + 1 if m is None else m - 1 for m in row] for row in rows]
    return _to_cols(rows)


def ground_state_tableau(j: int, n: int, k: int, l: int):
    """The j-th ground state element for lambda = l Lambda_0 (closed form)."""
    kp = n + 1 - k
    seq = [n + 2 - j * k + t for t in range(k)]
    zeros = [pos for pos, v in enumerate(seq, start=1) if v % (n + 1) == 0]
    if not zeros:
        col = tuple((i + n - j * k) % (n + 1) + 1 for i in range(1, k + 1))
    else:
        alpha = zeros[0]
        col = tuple(i if i <= k - alpha else i + kp for i in range(1, k + 1))
    return (col,) * l


class TableauCrystal(Crystal):

    def __init__(self, n: int, k: int, l: int):
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
        if l < 1:
            raise ValueError("level must be positive")
        self.family = AffineFamily("A1", n)
        self.kind = "A1"
        self.n, self.k, self.l = n, k, l
        self.columns = ColumnCrystal(n, k)
        self._elements = None

    def __repr__(self):
        return f"TableauCrystal(n={self.n}, k={self.k}, l={self.l})"

    def contains(self, b) -> bool:
        return isinstance(b, tuple) and is_tableau(b, self.n, self.k, self.l)

    def _check(self, b):
        if not self.contains(b):
            raise MembershipError(f"{b} is not an element of {self!r}")

    def elements(self):
        if self._elements is None:
            cols = list(itertools.combinations(range(1, self.n + 2), self.k))
            out = [t for t in itertools.combinations_with_replacement(cols, self.l)
                   if self.contains(t)]
            self._elements = sorted(out)
        return self._elements

    def promotion(self, b):
        return promotion(b, self.n)

    def promotion_inverse(self, b):
        return promotion_inverse(b, self.n)

    def _classical(self, op, j, b):
        factors = b[::-1]
        pos = acting_position(self.columns, op, j, factors)
        if pos is None:
            return None
        out = list(b)
        out[pos - 1] = self.columns.apply(op, j, b[pos - 1])
        out = tuple(out)
        assert self.contains(out), (b, op, j, out)
        return out

    def f(self, i, b):
        self._check(b)
        if i == 0:
            c = self._classical("f", 1, promotion(b, self.n))
            return None if c is None else promotion_inverse(c, self.n)
        return self._classical("f", i, b)

    def e(self, i, b):
        self._check(b)
        if i == 0:
            c = self._classical("e", 1, promotion(b, self.n))
            return None if c is None else promotion_inverse(c, self.n)
        return self._classical("e", i, b)

    def epsilon(self, i, b):
        return string_length(self, "e", i, b)

    def phi(self, i, b):
        return string_length(self, "f", i, b)

    def minimal_element(self, lam):
        if tuple(lam) == fundamental(self.family, 0, self.l):
            return ground_state_tableau(1, self.n, self.k, self.l)
        return self.find_phi(lam)

    def ground_element(self, lam):
        b = self.minimal_element(lam)
        if b is None:
            from .errors import UnsupportedWeightError
            raise UnsupportedWeightError(f"no element with phi = {lam}")
        return b

    # -- encoding ----------------------------------------------------------
    def _col_text(self, col, sep):
        return sep.join(map(str, col))

    def encode(self, b):
        body = "|".join(self._col_text(c, ",") for c in b)
        return f"A1[n={self.n},k={self.k},l={self.l}]{{{body}}}"

    def label(self, b):
        sep = "" if self.n + 1 < 10 else ","
        return "|".join(self._col_text(c, sep) for c in b)

    def decode(self, text):
        m = re.fullmatch(r"\s*(?:A1\[[^\]]*\])?\{([\d,|\s]*)\}\s*", text)
        if m:
            b = tuple(tuple(int(t) for t in part.split(",")) for part in m.group(1).split("|"))
        else:
            parts = text.strip().split("|")
            b = tuple(tuple(int(ch) for ch in part) for part in parts)
        self._check(b)
        return b
