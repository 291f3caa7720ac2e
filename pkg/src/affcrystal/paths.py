"""Semi-infinite paths ``... (x) p(2) (x) p(1)`` that agree with the ground
state path far to the left.

A path keeps only its window ``(p(N), ..., p(1))`` in written order, with N
minimal; everything left of it is the ground state ``bbar_j``.  The highest
weight vector ``u_{lambda_N}`` contributes ``<lambda_N, h_i>`` leading pluses
to every i-signature.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .crystal import Crystal, acting_position, tensor_eps_phi


@dataclass(frozen=True)
class GroundState:
    crystal: Crystal
    lam: tuple
    _bars: list = field(default_factory=list, compare=False, hash=False, repr=False)
    _lams: list = field(default_factory=list, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(self.lam))
        self._lams.append(self.lam)
        self.bar(1)  # raises early for unsupported weights

    def _extend(self, j):
        while len(self._bars) < j:
            b = self.crystal.ground_element(self._lams[-1])
            self._bars.append(b)
            self._lams.append(self.crystal.epsilon_weight(b))

    def bar(self, j: int):
        """bbar_j = b(sigma^{j-1} lam), j >= 1."""
        self._extend(j)
        return self._bars[j - 1]

    def lam_at(self, j: int) -> tuple:
        """lambda_j = sigma^j lam, j >= 0."""
        self._extend(j)
        return self._lams[j]


@dataclass(frozen=True)
class Path:
    ground: GroundState
    window: tuple  # (p(N), ..., p(1))

    @property
    def N(self) -> int:
        return len(self.window)

    def at(self, j: int):
        if j > self.N:
            return self.ground.bar(j)
        return self.window[self.N - j]

    def padded(self, size: int) -> tuple:
        """Window widened to exactly ``size`` positions."""
        extra = tuple(self.ground.bar(j) for j in range(size, self.N, -1))
        return extra + self.window

    def to_dict(self) -> dict:
        enc = self.ground.crystal.encode
        return {"lambda": list(self.ground.lam), "N": self.N,
                "window": [enc(b) for b in self.window]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        lab = self.ground.crystal.label
        return "...(x)" + "(x)".join(lab(b) for b in self.window) if self.window else "(ground)"


def make_path(ground: GroundState, window) -> Path:
    """Normalized path from a window in written order (p(N), ..., p(1))."""
    window = tuple(window)
    N = len(window)
    start = 0
    while start < N and window[start] == ground.bar(N - start):
        start += 1
    return Path(ground, window[start:])


def ground_state_path(ground: GroundState) -> Path:
    return Path(ground, ())


def path_apply(op: str, i: int, p: Path, grow: int = 1):
    """e_i or f_i on a path; None is the crystal zero."""
    ground, window = p.ground, p.window
    while True:
        N = len(window)
        head = ground.lam_at(N)[i]
        pos = acting_position(ground.crystal, op, i, window, head)
        if pos is None:
            return None
        if pos <= N:
            break
        # the u_{lambda_N} block was selected: the window was too short
        window = tuple(ground.bar(j) for j in range(N + grow, N, -1)) + window
    idx = len(window) - pos
    new = ground.crystal.apply(op, i, window[idx])
    return make_path(ground, window[:idx] + (new,) + window[idx + 1:])


def path_eps_phi(i: int, p: Path):
    return tensor_eps_phi(p.ground.crystal, i, p.window, p.ground.lam_at(p.N)[i])


def path_weight(p: Path) -> tuple:
    """lambda_N + sum_{j <= N} wt(p(j))."""
    crystal = p.ground.crystal
    total = list(p.ground.lam_at(p.N))
    for b in p.window:
        for idx, w in enumerate(crystal.weight(b)):
            total[idx] += w
    return tuple(total)
