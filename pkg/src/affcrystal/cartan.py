"""Affine type metadata: index sets, levels of fundamental weights, sigma.

Classical weights (elements of P_cl) are plain integer tuples
``(m_0, ..., m_n)`` meaning ``sum m_i Lambda_i``; there is no null root.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DimensionError

KINDS = ("A1", "B1", "C1", "D1", "A2odd", "A2even", "D2")

# smallest rank for which the family's Dynkin diagram is the generic one
MIN_RANK = {"A1": 1, "B1": 3, "C1": 2, "D1": 4, "A2odd": 3, "A2even": 2, "D2": 2}


@dataclass(frozen=True, order=True)
class AffineFamily:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown affine family {self.kind!r}")
        if self.n < MIN_RANK[self.kind]:
            raise ValueError(
                f"{self.kind} needs n >= {MIN_RANK[self.kind]}, got {self.n}")

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(range(self.n + 1))

    @property
    def levels(self) -> tuple[int, ...]:
        """Levels of Lambda_0..Lambda_n (the Dynkin diagram labels)."""
        n = self.n
        if self.kind in ("A1", "C1"):
            return (1,) * (n + 1)
        if self.kind == "B1":
            return (1, 1) + (2,) * (n - 2) + (1,)
        if self.kind == "D1":
            return (1, 1) + (2,) * (n - 3) + (1, 1)
        if self.kind == "A2odd":
            return (1, 1) + (2,) * (n - 1)
        if self.kind == "A2even":
            return (1,) + (2,) * n
        # D2
        return (1,) + (2,) * (n - 1) + (1,)

    def __str__(self):
        return f"{self.kind}({self.n})"


def _check_dim(fam: AffineFamily, lam) -> tuple[int, ...]:
    lam = tuple(int(m) for m in lam)
    if len(lam) != fam.n + 1:
        raise DimensionError(
            f"weight {lam} has {len(lam)} coefficients, {fam} needs {fam.n + 1}")
    return lam


def fundamental(fam: AffineFamily, i: int, mult: int = 1) -> tuple[int, ...]:
    """``mult * Lambda_i``."""
    lam = [0] * (fam.n + 1)
    lam[i] = mult
    return tuple(lam)


def level(fam: AffineFamily, lam) -> int:
    lam = _check_dim(fam, lam)
    return sum(m * c for m, c in zip(lam, fam.levels))


def is_dominant(lam) -> bool:
    return all(m >= 0 for m in lam)


def sigma_apply(fam: AffineFamily, lam, k: int | None = None) -> tuple[int, ...]:
    """The automorphism sigma of (P_cl^+)_l attached to the family's perfect crystal.

    For A_n^(1) the crystal B^{k,l} fixes a rotation by ``k``; it is required
    there and ignored elsewhere.
    """
    lam = _check_dim(fam, lam)
    n = fam.n
    if fam.kind == "A1":
        if k is None:
            raise ValueError("A1 sigma needs the column height k")
        k %= n + 1
        return lam[k:] + lam[:k]
    if fam.kind in ("B1", "A2odd"):
        return (lam[1], lam[0]) + lam[2:]
    if fam.kind == "D1":
        out = list(lam)
        out[0], out[1] = lam[1], lam[0]
        out[n - 1], out[n] = lam[n], lam[n - 1]
        return tuple(out)
    return lam


def sigma_power(fam: AffineFamily, lam, power: int, k: int | None = None):
    for _ in range(power):
        lam = sigma_apply(fam, lam, k)
    return tuple(lam)


def dominant_weights_of_level(fam: AffineFamily, l: int) -> list[tuple[int, ...]]:
    """All dominant weights of level ``l``, lexicographic in the coefficients."""
    if l < 0:
        return []
    levels = fam.levels
    ranges = [range(l // c + 1) for c in levels]
    out = [lam for lam in itertools.product(*ranges)
           if sum(m * c for m, c in zip(lam, levels)) == l]
    return sorted(out)


def pairing(lam, i: int) -> int:
    """<lam, h_i>, i.e. the Lambda_i coefficient."""
    return lam[i]


def format_weight(lam) -> str:
    terms = []
    for i, m in enumerate(lam):
        if m == 1:
            terms.append(f"L{i}")
        elif m:
            terms.append(f"{m}L{i}")
    return "+".join(terms) or "0"
