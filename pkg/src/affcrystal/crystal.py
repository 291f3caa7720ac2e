"""Abstract crystals, the signature rule for tensor products, crystal graphs.

Tensor products are written left to right as ``b_L (x) ... (x) b_1``; the
rightmost factor sits at position 1.  A signature lists ``(sign, position)``
pairs in the same left-to-right order, every factor contributing
``eps_i`` minuses followed by ``phi_i`` pluses.
"""
from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field

from .cartan import AffineFamily
from .errors import BudgetError

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    env = os.environ.get("CRYSTAL_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class Crystal:
    """Interface every concrete crystal implements.

    ``f``/``e`` return ``None`` for the crystal zero.  Elements must be
    hashable and sortable; sorting them gives the canonical order.
    """

    family: AffineFamily
    l: int

    @property
    def index_set(self) -> tuple[int, ...]:
        return self.family.index_set

    def f(self, i: int, b):
        raise NotImplementedError

    def e(self, i: int, b):
        raise NotImplementedError

    def epsilon(self, i: int, b) -> int:
        raise NotImplementedError

    def phi(self, i: int, b) -> int:
        raise NotImplementedError

    def elements(self) -> list:
        raise NotImplementedError

    def contains(self, b) -> bool:
        raise NotImplementedError

    def encode(self, b) -> str:
        return str(b)

    def label(self, b) -> str:
        return self.encode(b)

    def decode(self, text: str):
        raise NotImplementedError

    def epsilon_weight(self, b) -> tuple[int, ...]:
        return tuple(self.epsilon(i, b) for i in self.index_set)

    def phi_weight(self, b) -> tuple[int, ...]:
        return tuple(self.phi(i, b) for i in self.index_set)

    def weight(self, b) -> tuple[int, ...]:
        return tuple(self.phi(i, b) - self.epsilon(i, b) for i in self.index_set)

    def apply(self, op: str, i: int, b):
        return self.f(i, b) if op == "f" else self.e(i, b)

    def f_max(self, i: int, b):
        for _ in range(self.phi(i, b)):
            b = self.f(i, b)
        return b

    def find_phi(self, lam):
        """The unique element with phi(b) = lam, by search (perfectness)."""
        hits = [b for b in self.elements() if self.phi_weight(b) == tuple(lam)]
        return hits[0] if len(hits) == 1 else None


def string_length(crystal: Crystal, op: str, i: int, b) -> int:
    m = 0
    while True:
        b = crystal.apply(op, i, b)
        if b is None:
            return m
        m += 1


# -- signature rule ---------------------------------------------------------

def component_signature(crystal: Crystal, i: int, b, position: int) -> list:
    return ([("-", position)] * crystal.epsilon(i, b)
            + [("+", position)] * crystal.phi(i, b))


def reduce_signature(signature) -> list:
    """Cancel adjacent (+, -) pairs until the shape is (-...-, +...+).

    A single left-to-right stack pass; this is the same as repeatedly
    deleting the leftmost adjacent (+, -) pair.
    """
    out = []
    for entry in signature:
        if entry[0] == "-" and out and out[-1][0] == "+":
            out.pop()
        else:
            out.append(entry)
    return out


def tensor_signature(crystal: Crystal, i: int, factors, head: int = 0) -> list:
    """i-signature of ``factors`` (left to right), optionally led by ``head``
    pluses belonging to a highest weight vector at position len+1."""
    size = len(factors)
    sig = [("+", size + 1)] * head
    for idx, b in enumerate(factors):
        sig.extend(component_signature(crystal, i, b, size - idx))
    return sig


def acting_position(crystal: Crystal, op: str, i: int, factors, head: int = 0):
    """Tensor position on which ``op_i`` acts, or None for the crystal zero."""
    reduced = reduce_signature(tensor_signature(crystal, i, factors, head))
    if op == "f":
        plus = [pos for s, pos in reduced if s == "+"]
        return plus[0] if plus else None
    minus = [pos for s, pos in reduced if s == "-"]
    return minus[-1] if minus else None


def tensor_apply(crystal: Crystal, op: str, i: int, factors):
    """Apply e_i or f_i to ``factors`` = [b_L, ..., b_1]; None means zero."""
    factors = list(factors)
    pos = acting_position(crystal, op, i, factors)
    if pos is None:
        return None
    idx = len(factors) - pos
    new = crystal.apply(op, i, factors[idx])
    if new is None:  # pragma: no cover - the signature guarantees definedness
        return None
    factors[idx] = new
    return factors


def tensor_eps_phi(crystal: Crystal, i: int, factors, head: int = 0):
    reduced = reduce_signature(tensor_signature(crystal, i, factors, head))
    n_minus = sum(1 for s, _ in reduced if s == "-")
    return n_minus, len(reduced) - n_minus


class TensorProduct(Crystal):
    """``B (x) ... (x) B`` (``factors`` copies) with tuple elements."""

    def __init__(self, base: Crystal, factors: int):
        self.base = base
        self.factors = factors
        self.family = base.family
        self.l = base.l
        self._elements = None

    def f(self, i, b):
        out = tensor_apply(self.base, "f", i, b)
        return None if out is None else tuple(out)

    def e(self, i, b):
        out = tensor_apply(self.base, "e", i, b)
        return None if out is None else tuple(out)

    def epsilon(self, i, b):
        return tensor_eps_phi(self.base, i, b)[0]

    def phi(self, i, b):
        return tensor_eps_phi(self.base, i, b)[1]

    def weight(self, b):
        total = [0] * len(self.index_set)
        for x in b:
            for idx, w in enumerate(self.base.weight(x)):
                total[idx] += w
        return tuple(total)

    def elements(self):
        if self._elements is None:
            out = [()]
            for _ in range(self.factors):
                out = [t + (x,) for t in out for x in self.base.elements()]
            self._elements = sorted(out)
        return self._elements

    def contains(self, b):
        return len(b) == self.factors and all(self.base.contains(x) for x in b)

    def encode(self, b):
        return " (x) ".join(self.base.encode(x) for x in b)

    def label(self, b):
        return "(x)".join(self.base.label(x) for x in b)


# -- closures and graphs ----------------------------------------------------

def closure(crystal: Crystal, seeds, ops, budget: int | None = None) -> list:
    """BFS closure of ``seeds`` under the operator list ``ops`` of (op, i)."""
    budget = default_budget() if budget is None else budget
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        b = queue.popleft()
        for op, i in ops:
            c = crystal.apply(op, i, b)
            if c is not None and c not in seen:
                seen.add(c)
                if len(seen) > budget:
                    raise BudgetError(f"closure exceeded budget of {budget} elements")
                queue.append(c)
    return sorted(seen)


@dataclass
class CrystalGraph:
    crystal: Crystal
    vertices: list
    edges: list = field(default_factory=list)  # (source, target, i)

    def edge_set(self):
        return {(s, t, i) for s, t, i in self.edges}

    def to_json(self) -> str:
        enc = self.crystal.encode
        data = {"vertices": [enc(v) for v in self.vertices],
                "edges": [[enc(s), enc(t), i] for s, t, i in self.edges]}
        return json.dumps(data, indent=1)

    def to_dot(self, name: str = "crystal") -> str:
        enc, lab = self.crystal.encode, self.crystal.label
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{enc(v)}" [label="{lab(v)}"];')
        for s, t, i in self.edges:
            lines.append(f'  "{enc(s)}" -> "{enc(t)}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(crystal: Crystal, seeds, labels=None, budget: int | None = None):
    """Crystal graph of the component(s) through ``seeds`` for ``labels``."""
    labels = crystal.index_set if labels is None else tuple(sorted(labels))
    ops = [(op, i) for i in labels for op in ("f", "e")]
    vertices = closure(crystal, list(seeds), ops, budget) if seeds else []
    edges = []
    for b in vertices:
        for i in labels:
            c = crystal.f(i, b)
            if c is not None:
                edges.append((b, c, i))
    edges.sort()
    return CrystalGraph(crystal, vertices, edges)
