import json

import pytest
from hypothesis import given, strategies as st

from affcrystal.coordinate import CoordinateCrystal
from affcrystal.crystal import (TensorProduct, acting_position, build_graph, closure,
                                component_signature, reduce_signature, tensor_apply,
                                tensor_eps_phi, tensor_signature)
from affcrystal.errors import BudgetError
from affcrystal.tableau import TableauCrystal

# level 2 crystal of A_1^(1): 00 -> 01 -> 11 under f_1
SL2 = TableauCrystal(1, 1, 2)
E = {"00": ((1,), (1,)), "01": ((1,), (2,)), "11": ((2,), (2,))}


def word(*names):
    return [E[x] for x in names]


def leftmost_pair_deletion(sig):
    sig = list(sig)
    while True:
        for idx in range(len(sig) - 1):
            if sig[idx][0] == "+" and sig[idx + 1][0] == "-":
                del sig[idx:idx + 2]
                break
        else:
            return sig


signs = st.lists(st.tuples(st.sampled_from("+-"), st.integers(1, 9)), max_size=30)


@given(signs)
def test_reduce_matches_literal_leftmost_deletion(sig):
    assert reduce_signature(sig) == leftmost_pair_deletion(sig)


@given(signs, st.randoms(use_true_random=False))
def test_reduce_independent_of_deletion_order(sig, rnd):
    cur = list(sig)
    while True:
        pairs = [i for i in range(len(cur) - 1) if cur[i][0] == "+" and cur[i + 1][0] == "-"]
        if not pairs:
            break
        i = rnd.choice(pairs)
        del cur[i:i + 2]
    assert cur == reduce_signature(sig)


@given(signs)
def test_reduce_shape_and_idempotence(sig):
    red = reduce_signature(sig)
    text = "".join(s for s, _ in red)
    assert text == "-" * text.count("-") + "+" * text.count("+")
    assert reduce_signature(red) == red


def test_component_signature_examples():
    assert component_signature(SL2, 1, E["01"], 3) == [("-", 3), ("+", 3)]
    assert component_signature(SL2, 1, E["11"], 5) == [("-", 5), ("-", 5)]
    assert reduce_signature([]) == []
    assert reduce_signature([("+", 2), ("-", 1)]) == []


def test_signature_example_level_two():
    factors = word("11", "01", "01", "01", "00")
    sig = tensor_signature(SL2, 1, factors, head=2)
    assert "".join(s for s, _ in sig) == "++--" + "-+" * 3 + "++"
    assert [p for _, p in sig] == [6, 6, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1]
    assert reduce_signature(sig) == [("-", 4), ("+", 2), ("+", 1), ("+", 1)]
    assert acting_position(SL2, "f", 1, factors, head=2) == 2
    assert acting_position(SL2, "e", 1, factors, head=2) == 4


def test_tensor_apply_example():
    assert tensor_apply(SL2, "f", 1, word("11", "01", "01", "01", "00")) == word("11", "01", "01", "11", "00")
    assert tensor_apply(SL2, "e", 1, word("11", "01", "01", "01", "00")) == word("11", "00", "01", "01", "00")
    assert tensor_apply(SL2, "e", 1, word("00")) is None


@pytest.mark.parametrize("crystal", [SL2, TableauCrystal(3, 2, 1), CoordinateCrystal("C1", 2, 1)],
                         ids=repr)
def test_single_factor_agrees(crystal):
    for b in crystal.elements():
        for i in crystal.index_set:
            for op in "ef":
                out = tensor_apply(crystal, op, i, [b])
                want = crystal.apply(op, i, b)
                assert (out is None and want is None) or out == [want]
            assert tensor_eps_phi(crystal, i, [b]) == (crystal.epsilon(i, b), crystal.phi(i, b))


def test_tensor_product_axioms():
    pair = TensorProduct(CoordinateCrystal("A2even", 2, 1), 2)
    assert len(pair.elements()) == 25
    for b in pair.elements():
        for i in pair.index_set:
            c = pair.f(i, b)
            if c is not None:
                assert pair.e(i, c) == b
                assert pair.phi(i, c) == pair.phi(i, b) - 1
            eps, phi = pair.epsilon(i, b), pair.phi(i, b)
            assert phi - eps == pair.weight(b)[i]


def test_a3_level_one_graph(b21):
    g = build_graph(b21, [((1, 2),)])
    labels = {(b21.label(s), b21.label(t), i) for s, t, i in g.edges}
    assert [b21.label(v) for v in g.vertices] == ["12", "13", "14", "23", "24", "34"]
    assert labels == {("12", "13", 2), ("13", "23", 1), ("13", "14", 3), ("23", "24", 3),
                      ("14", "24", 1), ("24", "34", 2), ("24", "12", 0), ("34", "13", 0)}


def test_graph_exports(b21):
    g = build_graph(b21, b21.elements())
    data = json.loads(g.to_json())
    assert len(data["vertices"]) == 6 and len(data["edges"]) == 8
    assert ["A1[n=3,k=2,l=1]{2,4}", "A1[n=3,k=2,l=1]{1,2}", 0] in data["edges"]
    dot = g.to_dot()
    assert dot.count("->") == 8 and '[label="0"]' in dot
    assert g.to_dot() == build_graph(b21, b21.elements()[::-1]).to_dot()


def test_graph_small_cases():
    assert build_graph(SL2, []).vertices == []
    a2e = CoordinateCrystal("A2even", 2, 1)
    assert len(build_graph(a2e, [(0, 0, 0, 0)]).vertices) == 5
    sub = build_graph(a2e, [(0, 0, 0, 0)], labels=[1])
    assert sub.vertices == [(0, 0, 0, 0)] and sub.edges == []


def test_closure_budget():
    c1 = CoordinateCrystal("C1", 2, 2)
    with pytest.raises(BudgetError):
        closure(c1, [c1.zero()], [("f", i) for i in c1.index_set], budget=5)
