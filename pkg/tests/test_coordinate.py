import itertools

import pytest
from hypothesis import given, strategies as st

from affcrystal.cartan import MIN_RANK, fundamental, level, sigma_apply
from affcrystal.coordinate import COORD_KINDS, CoordinateCrystal
from affcrystal.crystal import string_length
from affcrystal.errors import MembershipError, UnsupportedWeightError
from affcrystal.perfect import perfectness_report

from conftest import small_coordinate

GRID = [CoordinateCrystal(kind, MIN_RANK[kind] + dn, l)
        for kind in COORD_KINDS for dn in (0, 1) for l in (1, 2)]


def brute_count(kind, n, l):
    """Independent count straight from the membership predicates."""
    size = 2 * n + (1 if kind in ("B1", "D2") else 0)
    count = 0
    for b in itertools.product(range(2 * l + 1), repeat=size):
        x0 = b[n] if kind in ("B1", "D2") else 0
        rest = [v for idx, v in enumerate(b) if not (kind in ("B1", "D2") and idx == n)]
        s = sum(rest)
        if kind in ("B1", "D2") and x0 > 1:
            continue
        ok = {"B1": x0 + s == l, "D1": s == l and b[n - 1] * b[n] == 0, "A2odd": s == l,
              "A2even": s <= l, "D2": x0 + s <= l, "C1": s % 2 == 0 and s <= 2 * l}[kind]
        count += ok
    return count


@pytest.mark.parametrize("kind,n,l", [(k, MIN_RANK[k], l) for k in COORD_KINDS for l in (1, 2)])
def test_cardinality(kind, n, l):
    assert len(CoordinateCrystal(kind, n, l).elements()) == brute_count(kind, n, l)


def test_cardinality_examples():
    assert CoordinateCrystal("A2even", 2, 1).elements() == sorted(
        [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    assert len(CoordinateCrystal("A2odd", 3, 1).elements()) == 6
    assert len(CoordinateCrystal("C1", 2, 1).elements()) == 11
    assert len(CoordinateCrystal("D2", 2, 1).elements()) == 6
    assert len(CoordinateCrystal("B1", 3, 1).elements()) == 7


def test_action_examples():
    b1 = CoordinateCrystal("B1", 3, 1)
    assert b1.f(0, (0, 0, 0, 0, 0, 0, 1)) == (0, 1, 0, 0, 0, 0, 0)
    a2e = CoordinateCrystal("A2even", 2, 1)
    assert a2e.f(0, (0, 0, 0, 0)) == (1, 0, 0, 0)
    assert a2e.f(0, (1, 0, 0, 0)) is None
    d1 = CoordinateCrystal("D1", 4, 1)
    assert d1.f(4, (0, 0, 0, 1, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1, 0, 0)
    c1 = CoordinateCrystal("C1", 2, 1)
    assert c1.f(0, (0, 0, 0, 2)) == (0, 0, 0, 0)


def test_eps_phi_examples():
    assert CoordinateCrystal("A2even", 2, 1).epsilon(0, (0, 0, 0, 0)) == 1
    assert CoordinateCrystal("B1", 3, 2).phi(0, (0, 0, 0, 0, 0, 0, 2)) == 2
    assert CoordinateCrystal("D2", 2, 1).phi(2, (0, 0, 1, 0, 0)) == 1


def test_minimal_element_examples():
    b1 = CoordinateCrystal("B1", 3, 2)
    assert b1.minimal_element((0, 0, 0, 2)) == (0, 0, 1, 0, 1, 0, 0)
    assert CoordinateCrystal("C1", 2, 1).minimal_element((0, 0, 1)) == (0, 1, 1, 0)
    assert CoordinateCrystal("A2odd", 3, 2).minimal_element((2, 0, 0, 0)) == (0, 0, 0, 0, 0, 2)
    with pytest.raises(UnsupportedWeightError):
        CoordinateCrystal("A2even", 2, 2).minimal_element((0, 1, 0))


@pytest.mark.parametrize("crystal", GRID, ids=repr)
def test_crystal_axioms_exhaustive(crystal):
    for b in crystal.elements():
        assert sum(crystal.weight(b)[i] * c for i, c in enumerate(crystal.family.levels)) == 0
        for i in crystal.index_set:
            eps, phi = crystal.epsilon(i, b), crystal.phi(i, b)
            assert eps >= 0 and phi >= 0
            assert string_length(crystal, "f", i, b) == phi
            assert string_length(crystal, "e", i, b) == eps
            c = crystal.f(i, b)
            if c is not None:
                assert crystal.contains(c)
                assert crystal.e(i, c) == b
                assert (crystal.epsilon(i, c), crystal.phi(i, c)) == (eps + 1, phi - 1)
            c = crystal.e(i, b)
            if c is not None:
                assert crystal.f(i, c) == b


def test_d1_spin_cases_are_disjoint():
    # the two displayed cases of f_{n-1}, f_n at x_n = xbar_n = 0 must agree
    for n in (4, 5):
        d1 = CoordinateCrystal("D1", n, 2)
        for b in d1.elements():
            if b[n - 1] == 0 and b[n] == 0:
                for i in (n - 1, n):
                    c = d1.f(i, b)
                    assert c is None or d1.e(i, c) == b


@pytest.mark.parametrize("crystal", small_coordinate(), ids=repr)
def test_perfectness(crystal):
    rep = perfectness_report(crystal)
    assert rep.passed, rep.witnesses
    fam = crystal.family
    for lam, image in rep.sigma.items():
        assert image == sigma_apply(fam, lam)


@pytest.mark.parametrize("crystal", GRID, ids=repr)
def test_minimal_elements(crystal):
    for i in crystal.supported_ground_indices():
        lam = fundamental(crystal.family, i, crystal.l)
        b = crystal.minimal_element(lam)
        assert crystal.phi_weight(b) == lam
        assert level(crystal.family, crystal.epsilon_weight(b)) == crystal.l


def test_membership_errors():
    b1 = CoordinateCrystal("B1", 3, 1)
    with pytest.raises(MembershipError):
        b1.f(0, (1, 1, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        CoordinateCrystal("A1", 3, 1)


@given(st.sampled_from(small_coordinate()), st.data())
def test_encode_decode_roundtrip(crystal, data):
    b = data.draw(st.sampled_from(crystal.elements()))
    assert crystal.decode(crystal.encode(b)) == b
    assert crystal.decode(crystal.label(b)) == b


def test_encoding_format():
    b1 = CoordinateCrystal("B1", 3, 2)
    assert b1.encode((0, 0, 1, 0, 1, 0, 0)) == "B1(0,0,1,0,1,0,0)"
    with pytest.raises(ValueError):
        b1.decode("D1(0,0,1,0,1,0,0)")
